"""Command line front end.

Every subcommand prints text by default or JSON with ``--output json``.
Exit status is 0 on success, 1 for domain errors and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb, factorial

from . import braids, coideal_rep, convergence, diagrams, group_algebra, jones_wenzl, tl_algebra, weyl_group
from .coefficients import LAURENT, RATFUNC, RINGS, SERIES
from .errors import DomainError, InvalidArgument

FAMILY_CHOICES = ("A", "B", "D")


def parallel_map(fn, items, jobs: int = 1):
    """``map`` that keeps input order; runs in worker processes when ``jobs > 1``."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# output helpers

def element_payload(x: tl_algebra.TLElement) -> dict:
    out = x.to_json()
    out["text"] = [[d.to_text(), str(c)] for d, c in x.terms.items()]
    return out


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise InvalidArgument(f"expected comma separated integers, got {text!r}") from None


def _ring(args) -> tuple[str, int | None]:
    if args.ring == SERIES and args.precision is None:
        raise InvalidArgument("--ring series needs --precision")
    return args.ring, args.precision


def _finish_ring(x, ring, precision):
    if ring == SERIES:
        return x.to_series(precision)
    return x.to_ring(ring)


# subcommands

def cmd_basis(args):
    family = args.type.upper()
    ds = diagrams.enumerate_basis(args.n, family)
    if args.count_only:
        return len(ds), str(len(ds))
    shown = ds if args.limit is None else ds[: args.limit]
    payload = {"type": family, "n": args.n, "count": len(ds), "diagrams": [d.to_json() for d in shown]}
    text = "\n".join([f"count {len(ds)}"] + [d.to_text() for d in shown])
    return payload, text


def cmd_mul(args):
    ring, precision = _ring(args)
    base = RATFUNC if ring == SERIES else ring
    a = tl_algebra.parse_generator_word(args.left, args.n, base)
    b = tl_algebra.parse_generator_word(args.right, args.n, base)
    x = _finish_ring(a * b, ring, precision)
    return element_payload(x), x.to_text()


def cmd_jw(args):
    ring, precision = _ring(args)
    x = jones_wenzl.projector(args.kind, args.n, ring, precision)
    payload = {"kind": args.kind, "n": args.n, "element": element_payload(x)}
    text = x.to_text()
    if args.check:
        report = jones_wenzl.verify_characterization(jones_wenzl.projector(args.kind, args.n), args.kind)
        payload["characterization"] = report.to_json()
        payload["unique"] = args.n <= 3 and jones_wenzl.uniqueness_certificate(args.n, args.kind)
        text += "\n" + "\n".join(f"{k}: {v}" for k, v in report.checks.items())
    return payload, text


def cmd_higher(args):
    ring, precision = _ring(args)
    if args.resolution is not None:
        total = jones_wenzl.resolution_of_identity(args.resolution)
        ok = total == tl_algebra.one(args.resolution, RATFUNC)
        return {"n": args.resolution, "sum_is_identity": ok}, f"sum of e_eps equals 1: {ok}"
    eps = _ints(args.eps)
    x = jones_wenzl.higher_projector(eps, args.kind, ring, precision)
    payload = {"eps": list(eps), "kind": args.kind.upper(), "element": element_payload(x)}
    text = x.to_text()
    if args.kind.upper() == "B":
        scalar = jones_wenzl.normalization_scalar(eps)
        payload["normalization"] = str(scalar)
        text = f"n_eps = {scalar}\n" + text
    return payload, text


def cmd_weyl(args):
    n = args.n
    if args.what == "order":
        enumerated = len(weyl_group.group_elements(n, args.family)) if n <= 6 else None
        formula = weyl_group.group_order(n, args.family)
        payload = {"n": n, "family": args.family, "order": formula, "enumerated": enumerated}
        return payload, str(formula)
    if args.what == "classes":
        bps = weyl_group.bipartitions_of(n)
        payload = {"n": n, "count": len(bps), "bipartitions": [b.to_json() for b in bps]}
        lines = [f"count {len(bps)}"]
        if args.verify:
            if n > 4:
                raise InvalidArgument("orbit enumeration is limited to n <= 4")
            sizes = weyl_group.class_counts(n)
            orbits = len(weyl_group.conjugacy_classes(n))
            payload["orbit_count"] = orbits
            payload["class_sizes"] = [{"bipartition": b.to_json(), "size": sizes.get(b, 0)} for b in bps]
            lines.append(f"orbits {orbits}")
            lines += [f"{b} {sizes.get(b, 0)}" for b in bps]
        else:
            lines += [str(b) for b in bps]
        return payload, "\n".join(lines)
    bps = weyl_group.bipartitions_of(n)
    dims = parallel_map(_dims_of, bps, args.jobs)
    total = sum(h * h for h, _ in dims)
    payload = {
        "n": n,
        "dimensions": [{"bipartition": b.to_json(), "hook": h, "paths": p} for b, (h, p) in zip(bps, dims)],
        "sum_of_squares": total,
        "group_order": 2**n * factorial(n),
    }
    lines = [f"{b} {h} {p}" for b, (h, p) in zip(bps, dims)]
    lines.append(f"sum of squares {total} = {2**n * factorial(n)}")
    return payload, "\n".join(lines)


def _dims_of(bp):
    return weyl_group.specht_dimension_hook(bp), weyl_group.specht_dimension_paths(bp)


def cmd_symmetrizer(args):
    bp = weyl_group.bipartition(_ints(args.lam), _ints(args.mu))
    numbering = json.loads(args.numbering) if args.numbering else None
    q = group_algebra.young_symmetrizer(bp, numbering, allow_large=args.allow_large)
    scalar = group_algebra.quasi_idempotent_scalar(q)
    dim = group_algebra.left_ideal_dimension(q, allow_large=args.allow_large)
    element = q / scalar if args.normalize else q
    payload = {
        "bipartition": bp.to_json(),
        "scalar": str(scalar),
        "left_ideal_dimension": dim,
        "element": element.to_json(),
    }
    text = f"q^2 = {scalar} q\ndim {dim}\n{element.to_text()}"
    if args.orthogonality_samples:
        rng = random.Random(args.seed)
        group = weyl_group.group_elements(bp.size)
        results = []
        for other in weyl_group.bipartitions_of(bp.size):
            if sum(other.lam) == sum(bp.lam):
                continue  # only the separating case |lambda| != |lambda'| is asserted
            q2 = group_algebra.young_symmetrizer(other)
            gs = rng.sample(group, min(args.orthogonality_samples, len(group)))
            results.append({"bipartition": other.to_json(), "zero": all((q * g * q2).is_zero() for g in gs)})
        payload["orthogonality"] = results
        text += "\n" + "\n".join(f"q g q'{weyl_group.Bipartition.from_json(r['bipartition'])} = 0: {r['zero']}" for r in results)
    return payload, text


def cmd_braid(args):
    if args.what == "eval":
        if args.word is None:
            raise InvalidArgument("braid eval needs --word")
        ring, precision = _ring(args)
        w = braids.parse_word(args.word, args.n, args.family)
        x = braids.evaluate_word(w, RATFUNC if ring == SERIES else ring)
        x = _finish_ring(x, ring, precision)
        return {"word": w.to_json(), "element": element_payload(x)}, x.to_text()
    if args.what == "embed":
        if args.word is None:
            raise InvalidArgument("braid embed needs --word")
        w = braids.parse_word(args.word, args.n, "B")
        e = braids.embed_in_type_a(w)
        return {"word": w.to_json(), "embedded": e.to_json()}, e.render()
    moves = braids.MOVES if args.move == "all" else (args.move,)
    tasks = [(m, args.n, p) for m in moves for p in braids.reidemeister_positions(m, args.n)]
    if args.sample is not None:
        rng = random.Random(args.seed)
        tasks = sorted(rng.sample(tasks, min(args.sample, len(tasks))), key=tasks.index)
    results = parallel_map(_reidemeister_task, tasks, args.jobs)
    payload = {"n": args.n, "checks": results, "all_hold": all(r["holds"] for r in results)}
    text = "\n".join(f"{r['move']} at {r['position']} (scalar {r['scalar']}): {'holds' if r['holds'] else 'FAILS'}" for r in results)
    return payload, text


def _reidemeister_task(task):
    move, n, position = task
    c = braids.check_reidemeister(move, n, position)
    return {"move": move, "position": position, "scalar": c.scalar, "holds": c.holds}


def cmd_affine(args):
    if args.relations:
        rel = braids.affine_relations(args.n)
        return {"n": args.n, "relations": rel}, "\n".join(f"{k}: {v}" for k, v in rel.items())
    if args.word is None:
        raise InvalidArgument("affine needs --word or --relations")
    x = braids.affine_image(args.word, args.n)
    return {"word": args.word, "element": element_payload(x)}, x.to_text()


def cmd_twist(args):
    family = args.family.upper()
    if args.precision is None:
        x = braids.full_twist(family, args.n) ** args.power
    else:
        x = convergence.twist_power(family, args.n, args.power, args.precision)
    payload = {"family": family, "n": args.n, "power": args.power, "word": braids.full_twist_word(family, args.n).render()}
    payload["element"] = element_payload(x)
    return payload, x.to_text()


def cmd_converge(args):
    report = convergence.converge(args.n, args.target, args.max_power, args.precision)
    return report.to_json(), report.to_text()


def cmd_rep(args):
    n = args.n
    if args.what == "eigen":
        report = coideal_rep.eigen_decomposition(n)
        return report.to_json(), report.to_text()
    if args.what == "rank":
        rank = coideal_rep.schur_weyl_rank(n)
        payload = {
            "n": n,
            "rank": rank,
            "tl_dimension": comb(2 * n, n),
            "commutant_dimension": coideal_rep.commutant_dimension(n),
            "binomial_square_sum": sum(comb(n, k) ** 2 for k in range(n + 1)),
        }
        return payload, "\n".join(f"{k} {v}" for k, v in payload.items())
    eps = _ints(args.eps) if args.eps else None
    check = coideal_rep.projector_image_check(args.kind, n, eps)
    out = check.to_json()
    text = "\n".join(f"{k} {v}" for k, v in out.items())
    return out, text


# parser

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS, help="output format (default text)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled checks (default 0)")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes (default 1)")
    return p


def _ring_flags(p, default=RATFUNC):
    p.add_argument("--ring", choices=RINGS, default=default)
    p.add_argument("--precision", type=int, default=None, help="series precision P (coefficients below q^P)")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tlbd", description="Exact type B/D Temperley-Lieb computations.", parents=[common])
    parser.set_defaults(output="text", seed=0, jobs=1)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_, fn):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("basis", "enumerate the diagram basis", cmd_basis)
    p.add_argument("--type", choices=FAMILY_CHOICES + tuple(f.lower() for f in FAMILY_CHOICES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None)

    p = add("mul", "multiply two generator words", cmd_mul)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("left", help='generator word such as "U1 s0"')
    p.add_argument("right")
    _ring_flags(p, LAURENT)

    p = add("jw", "Jones-Wenzl projectors", cmd_jw)
    p.add_argument("--kind", choices=jones_wenzl.KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="also run the characterization checks")
    _ring_flags(p)

    p = add("higher", "higher projectors e_eps and f_eps", cmd_higher)
    p.add_argument("--eps", default="", help="comma separated signs, e.g. 1,-1,1")
    p.add_argument("--kind", choices=("B", "D", "b", "d"), default="B")
    p.add_argument("--resolution", type=int, default=None, metavar="N", help="check that all e_eps sum to 1")
    _ring_flags(p)

    p = add("weyl", "hyperoctahedral group combinatorics", cmd_weyl)
    p.add_argument("what", choices=("order", "classes", "dims"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("B", "D"), default="B")
    p.add_argument("--verify", action="store_true", help="count classes by orbit enumeration")

    p = add("symmetrizer", "type B Young symmetrizers", cmd_symmetrizer)
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--mu", default="")
    p.add_argument("--numbering", default=None, help="JSON pair of row lists, e.g. [[[1],[2]],[[3]]]")
    p.add_argument("--normalize", action="store_true", help="print e = q / n instead of q")
    p.add_argument("--orthogonality-samples", type=int, default=0)
    p.add_argument("--allow-large", action="store_true")

    p = add("braid", "braid words", cmd_braid)
    p.add_argument("what", choices=("eval", "reidemeister", "embed"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default=None)
    p.add_argument("--family", choices=braids.FAMILIES, default="B1")
    p.add_argument("--move", choices=braids.MOVES + ("all",), default="all")
    p.add_argument("--sample", type=int, default=None, help="check a seeded random subset of positions")
    _ring_flags(p, LAURENT)

    p = add("affine", "affine Temperley-Lieb quotient map", cmd_affine)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default=None, help='product of U<i>, D and D^-1, e.g. "D U1 D^-1"')
    p.add_argument("--relations", action="store_true")

    p = add("twist", "full twists and their powers", cmd_twist)
    p.add_argument("--family", choices=("A", "B", "D", "a", "b", "d"), default="D")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--precision", type=int, default=None, help="truncate to series below q^P")

    p = add("converge", "q-adic convergence of full-twist powers", cmd_converge)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--max-power", type=int, default=6)
    p.add_argument("--precision", type=int, default=None)

    p = add("rep", "the action on tensor powers", cmd_rep)
    p.add_argument("what", choices=("eigen", "rank", "project"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("b+", "b-", "d", "e"), default="b+")
    p.add_argument("--eps", default=None)
    return parser


def _render(payload, text, mode: str) -> str:
    if mode == "json":
        return json.dumps(payload, indent=2, default=_json_default)
    return text


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("tlbd: error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        payload, text = args.func(args)
    except DomainError as exc:
        print(f"tlbd: {exc}", file=sys.stderr)
        return 1
    print(_render(payload, text, args.output))
    return 0


if __name__ == "__main__":
    sys.exit(main())
