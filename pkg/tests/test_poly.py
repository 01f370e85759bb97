import random
from fractions import Fraction

import pytest

from higgsrel.poly import (
    GradedPoly,
    PolyParseError,
    VarTable,
    abg_table,
    abgu_table,
    degree_slice_monomials,
    eta_theta_u_table,
    moduli_table,
    poly_format,
    poly_parse,
    symprod_table,
)


def test_table_weights():
    t = moduli_table(2)
    assert t.names[:4] == ("a", "b", "g3", "u")
    assert t.weights[:4] == (2, 4, 6, 2)
    assert all(w == 3 for w in t.weights[4:])
    s = symprod_table(2)
    assert s.weights[:3] == (2, 2, 2)
    assert all(w == 1 for w in s.weights[3:])


def test_odd_square_is_zero():
    t = moduli_table(2)
    psi1 = GradedPoly.variable(t, "psi1")
    assert not psi1 * psi1


def test_anticommutation_sign():
    t = moduli_table(2)
    p1 = GradedPoly.variable(t, "psi1")
    p2 = GradedPoly.variable(t, "psi2")
    assert p1 * p2 == -(p2 * p1)
    # even classes commute with everything
    a = GradedPoly.variable(t, "a")
    assert a * p1 == p1 * a


def test_scale_to_zero():
    t = abg_table()
    p = GradedPoly.variable(t, "a") + GradedPoly.variable(t, "b")
    assert not p.scale(0)


def test_graded_commutativity_random():
    rng = random.Random(11)
    t = symprod_table(2)

    def random_homogeneous(degree):
        monos = degree_slice_monomials(t, degree)
        terms = {}
        for m in rng.sample(monos, min(3, len(monos))):
            terms[m] = Fraction(rng.randrange(-4, 5))
        return GradedPoly(t, terms)

    for _ in range(30):
        d1, d2 = rng.randrange(1, 4), rng.randrange(1, 4)
        p, q = random_homogeneous(d1), random_homogeneous(d2)
        sign = -1 if (d1 * d2) % 2 else 1
        assert p * q == (q * p).scale(sign)


def test_substitute_is_ring_homomorphism():
    rng = random.Random(23)
    src = moduli_table(1)
    dst = symprod_table(1)
    images = {
        "a": GradedPoly.variable(dst, "eta") + GradedPoly.variable(dst, "th"),
        "b": GradedPoly.variable(dst, "eta") * GradedPoly.variable(dst, "eta"),
        "g3": (GradedPoly.variable(dst, "eta") ** 2)
        * GradedPoly.variable(dst, "th"),
        "u": GradedPoly.variable(dst, "u"),
        "psi1": GradedPoly.variable(dst, "eta") * GradedPoly.variable(dst, "xi1"),
        "psi2": GradedPoly.variable(dst, "u") * GradedPoly.variable(dst, "xi2"),
    }

    def random_poly():
        terms = {}
        for _ in range(3):
            exps = [0] * len(src)
            for i in range(len(src)):
                hi = 1 if src.odd[i] else 2
                exps[i] = rng.randrange(0, hi + 1)
            terms[tuple(exps)] = Fraction(rng.randrange(-3, 4))
        return GradedPoly(src, terms)

    for _ in range(25):
        p, q = random_poly(), random_poly()
        lhs = (p * q).substitute(images, dst)
        rhs = p.substitute(images, dst) * q.substitute(images, dst)
        assert lhs == rhs


def test_substitute_rejects_wrong_parity():
    src = moduli_table(1)
    dst = symprod_table(1)
    images = {"psi1": GradedPoly.variable(dst, "eta")}  # even image of odd var
    p = GradedPoly.variable(src, "psi1")
    with pytest.raises(ValueError):
        p.substitute(images, dst)


def test_table_mismatch_errors():
    p = GradedPoly.variable(abg_table(), "a")
    q = GradedPoly.variable(abgu_table(), "a")
    with pytest.raises(ValueError):
        p + q
    with pytest.raises(ValueError):
        p * q


def test_degree_slice_monomials_examples():
    t = abg_table()
    assert degree_slice_monomials(t, 6) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert degree_slice_monomials(t, 2) == [(1, 0, 0)]
    assert degree_slice_monomials(t, 1) == []


def test_degree_slice_respects_odd_exponents():
    t = symprod_table(1)
    for mono in degree_slice_monomials(t, 3):
        for e, odd in zip(mono, t.odd):
            if odd:
                assert e <= 1


def test_format_examples():
    t = abg_table()
    p = GradedPoly(t, {(1, 1, 0): Fraction(2), (0, 0, 1): Fraction(2)})
    assert poly_format(p) == "2*a*b + 2*g3"
    assert poly_format(GradedPoly.zero(t)) == "0"
    q = GradedPoly(t, {(2, 0, 0): Fraction(1, 2), (0, 1, 0): Fraction(-1, 2)})
    assert poly_format(q) == "1/2*a^2 - 1/2*b"


def test_parse_examples():
    t = abgu_table()
    p = poly_parse("2*a*b + 2*g3", t)
    assert p.coefficient((1, 1, 0, 0)) == 2
    assert p.coefficient((0, 0, 1, 0)) == 2
    assert poly_parse("-a + 1/2*b^2*u", t).coefficient((1, 0, 0, 0)) == -1


def test_parse_format_roundtrip_random():
    rng = random.Random(5)
    t = abgu_table()
    for _ in range(40):
        terms = {}
        for _ in range(rng.randrange(1, 6)):
            exps = tuple(rng.randrange(0, 4) for _ in range(4))
            num = rng.randrange(-9, 10)
            den = rng.randrange(1, 7)
            if num:
                terms[exps] = Fraction(num, den)
        p = GradedPoly(t, terms)
        assert poly_parse(poly_format(p), t) == p or not p


def test_parse_errors_carry_position():
    t = abg_table()
    with pytest.raises(PolyParseError):
        poly_parse("a + q", t)
    with pytest.raises(PolyParseError):
        poly_parse("a ++ b", t)
    with pytest.raises(PolyParseError):
        poly_parse("", t)
    with pytest.raises(PolyParseError):
        poly_parse("a^b", t)


def test_homogeneous_parts_and_degree():
    t = abgu_table()
    p = poly_parse("a^2 + b + u + 1", t)
    assert p.homogeneous_part(4).coefficient((2, 0, 0, 0)) == 1
    assert p.homogeneous_part(2).coefficient((0, 0, 0, 1)) == 1
    assert not p.is_homogeneous()
    with pytest.raises(ValueError):
        p.ordinary_degree()


def test_split_and_project_and_embed():
    abgu = abgu_table()
    abg = abg_table()
    p = poly_parse("a*u^2 + b*u^2 + g3", abgu)
    parts = p.split_by("u")
    assert set(parts) == {0, 2}
    assert parts[0].project(abg) == poly_parse("g3", abg)
    back = poly_parse("g3", abg).embed(abgu)
    assert back == parts[0]


def test_derivative():
    abgu = abgu_table()
    p = poly_parse("a*u^2 + 3*u", abgu)
    assert p.derivative("u") == poly_parse("2*a*u + 3", abgu)
    with pytest.raises(ValueError):
        GradedPoly.variable(moduli_table(1), "psi1").derivative("psi1")


def test_cap():
    t = abg_table()
    p = poly_parse("g3^3 + g3^2 + a", t)
    assert p.cap("g3", 2) == poly_parse("g3^2 + a", t)


def test_pow():
    t = abg_table()
    a = GradedPoly.variable(t, "a")
    assert a ** 0 == GradedPoly.one(t)
    assert a ** 3 == a * a * a
    with pytest.raises(ValueError):
        a ** -1
