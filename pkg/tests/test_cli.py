import json
import subprocess
import sys

import pytest

from tlbd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--output", "json")
    assert code == 0, err
    return json.loads(out)


def test_basis_count(capsys):
    assert run(capsys, "basis", "--type", "B", "--n", "3", "--count-only")[1].strip() == "20"
    assert run_json(capsys, "basis", "--type", "D", "--n", "4", "--count-only") == 35


def test_mul(capsys):
    code, out, _ = run(capsys, "mul", "--n", "2", "U1", "U1")
    assert code == 0 and "q + q^-1" in out
    assert run(capsys, "mul", "--n", "2", "U1 s0", "U1")[1].strip() == "0"


def test_jw_json_is_exact(capsys):
    data = run_json(capsys, "jw", "--kind", "d", "--n", "2")
    terms = data["element"]["terms"]
    assert len(terms) == 3

    def leaves(x):
        if isinstance(x, dict):
            for v in x.values():
                yield from leaves(v)
        elif isinstance(x, list):
            for v in x:
                yield from leaves(v)
        else:
            yield x

    assert not any(isinstance(v, float) for v in leaves(data))


def test_jw_check(capsys):
    code, out, _ = run(capsys, "jw", "--kind", "b-", "--n", "3", "--check")
    assert code == 0
    assert "idempotent: True" in out and "False" not in out


def test_higher_and_weyl(capsys):
    assert run(capsys, "higher", "--eps", "1,-1")[0] == 0
    assert run(capsys, "higher", "--resolution", "2")[0] == 0
    assert run(capsys, "weyl", "order", "--n", "3")[1].strip() == "48"
    assert run_json(capsys, "weyl", "order", "--n", "3", "--family", "D")["order"] == 24
    classes = run_json(capsys, "weyl", "classes", "--n", "3", "--verify")
    assert classes["count"] == 10


def test_dims_parallel_matches_serial(capsys):
    serial = run_json(capsys, "weyl", "dims", "--n", "3")
    parallel = run_json(capsys, "weyl", "dims", "--n", "3", "--jobs", "2")
    assert serial == parallel


def test_symmetrizer(capsys):
    data = run_json(capsys, "symmetrizer", "--lambda", "", "--mu", "1")
    assert data["scalar"] == "2" and data["left_ideal_dimension"] == 1
    code, out, _ = run(capsys, "symmetrizer", "--mu", "1", "--normalize")
    assert code == 0 and "[1/2]" in out


def test_sampled_checks_are_seeded(capsys):
    args = ("braid", "reidemeister", "--n", "4", "--sample", "5")
    first = run_json(capsys, *args, "--seed", "3")
    again = run_json(capsys, *args, "--seed", "3")
    assert first == again


def test_braid_affine_twist_converge_rep(capsys):
    assert run(capsys, "braid", "eval", "--n", "2", "--word", "s1 s1^-1")[0] == 0
    assert run(capsys, "braid", "embed", "--n", "2", "--word", "s0", "--family", "B")[1].strip().startswith("s1 s1")
    assert run(capsys, "affine", "--n", "3", "--relations")[0] == 0
    assert run(capsys, "twist", "--n", "2", "--power", "2")[0] == 0
    conv = run_json(capsys, "converge", "--n", "2", "--target", "9", "--max-power", "4", "--precision", "32")
    assert conv["achieved_at"] == 2
    assert run_json(capsys, "rep", "rank", "--n", "2")["rank"] == 6
    assert run(capsys, "rep", "eigen", "--n", "2")[0] == 0
    assert run(capsys, "rep", "project", "--n", "3", "--kind", "e", "--eps", "1,-1,1")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["jw", "--kind", "d", "--n", "2", "--ring", "laurent"],
        ["mul", "--n", "2", "U3", "U1"],
        ["braid", "eval", "--n", "2", "--word", "s0'", "--family", "B"],
        ["weyl", "dims", "--n", "-1"],
    ],
)
def test_domain_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


@pytest.mark.parametrize("argv", [["bogus"], ["basis", "--n", "2"], ["basis", "--type", "B", "--n", "2", "--jobs", "0"], []])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tlbd", "basis", "--type", "A", "--n", "4", "--count-only"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "14"
