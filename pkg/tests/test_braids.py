import pytest

from tlbd import braids
from tlbd.coefficients import LaurentPolynomial
from tlbd.errors import InvalidArgument, ParseError
from tlbd.tl_algebra import generator, one

Q = LaurentPolynomial.q()


def test_letter_images():
    s1 = braids.evaluate_text("s1", 2)
    assert s1 == one(2) - generator("U", 2, 1).scale(Q)
    assert braids.evaluate_text("s1 s1^-1", 3) == one(3)
    assert braids.evaluate_text("s0 s0", 2) == one(2)
    assert braids.evaluate_text("s0' s0'^-1", 2, "D") == one(2)


def test_parse_errors_and_families():
    with pytest.raises(ParseError):
        braids.parse_word("s1 %", 2)
    with pytest.raises(ParseError):
        braids.parse_word("s0'", 2, "B")
    with pytest.raises(ParseError):
        braids.parse_word("s0", 2, "A")
    with pytest.raises(ParseError):
        braids.parse_word("s3", 2)
    with pytest.raises(InvalidArgument):
        braids.parse_word("s1", 2, "C")
    w = braids.parse_word("(s1 s2)^2", 3)
    assert len(w) == 4 and w.inverse().inverse() == w
    assert braids.BraidWord.from_json(w.to_json()) == w


@pytest.mark.parametrize("family", ["A", "B1", "D"])
@pytest.mark.parametrize("n", [2, 3])
def test_full_twist_is_central(family, n):
    t = braids.full_twist(family, n)
    gens = [generator("U", n, i) for i in range(1, n)]
    if family != "A":
        gens.append(generator("U0", n))
    for g in gens:
        assert t * g == g * t


def test_full_twist_inverse():
    w = braids.full_twist_word("D", 3)
    assert braids.evaluate_word(w) * braids.evaluate_word(w.inverse()) == one(3)


def test_moves_hold_everywhere():
    for n in (2, 3):
        for move in braids.MOVES:
            for p in braids.reidemeister_positions(move, n):
                check = braids.check_reidemeister(move, n, p)
                assert check.holds, (move, n, p)


def test_type_a_embedding_preserves_bracket_of_s1():
    w = braids.parse_word("s1 s1^-1", 2, "B")
    e = braids.embed_in_type_a(w)
    assert str(e) == "s2 s2^-1"
    assert braids.evaluate_word(e) == one(3)
    with pytest.raises(InvalidArgument):
        braids.embed_in_type_a(braids.parse_word("s0'", 2, "D"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_affine_relations(n):
    assert all(braids.affine_relations(n).values())


def test_affine_parse():
    assert braids.affine_image("D D^-1", 3) == one(3)
    assert braids.affine_image("U1", 3) == generator("U", 3, 1)
    with pytest.raises(ParseError):
        braids.affine_image("U7", 3)
    with pytest.raises(ParseError):
        braids.affine_image("X", 3)


def test_cupcap_kill():
    for n in (3, 4):
        for cap in braids.iter_cupcap_positions(n):
            assert braids.cupcap_kill_check(n, cap).holds
    assert "dotted" in list(braids.iter_cupcap_positions(3))


def test_hom_curl_is_a_scalar():
    curl = braids.hom_curl()
    assert curl.shape == (1, 1)
    assert len(curl) >= 1
