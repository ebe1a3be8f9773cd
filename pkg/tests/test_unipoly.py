import pytest

from multiwitt import (
    CoeffRing,
    EmptyInput,
    ExtensionBoundExceeded,
    UnivariatePolynomial,
    resultant,
    roots_with_multiplicity,
)


def lin(ring, a_raw):
    # X - a
    return UnivariatePolynomial(ring, [ring.rneg(a_raw), 1])


def test_degree_one_resultant_evaluates(rng):
    F5 = CoeffRing.make(5)
    for _ in range(50):
        a = rng.randrange(5)
        f = UnivariatePolynomial(F5, [rng.randrange(5) for _ in range(rng.randrange(2, 6))])
        if f.degree < 1:
            continue
        assert resultant(lin(F5, a), f) == f.evaluate(F5.from_raw(a))


def test_small_resultant_value():
    F5 = CoeffRing.make(5)
    a = UnivariatePolynomial(F5, [F5.rneg(1), 0, 1])  # x^2 - 1
    b = UnivariatePolynomial(F5, [F5.rneg(2), 1])  # x - 2
    assert resultant(a, b).raw == 3


def test_swap_symmetry(rng):
    F5 = CoeffRing.make(5)
    minus_one = F5.from_int(-1)
    for _ in range(60):
        a = UnivariatePolynomial(F5, [rng.randrange(5) for _ in range(rng.randrange(2, 6))])
        b = UnivariatePolynomial(F5, [rng.randrange(5) for _ in range(rng.randrange(2, 6))])
        if a.degree < 1 or b.degree < 1:
            continue
        assert resultant(a, b) == resultant(b, a) * minus_one ** (a.degree * b.degree)


def test_both_constants_rejected():
    F5 = CoeffRing.make(5)
    with pytest.raises(EmptyInput):
        resultant(UnivariatePolynomial(F5, [1]), UnivariatePolynomial(F5, [2]))


def test_constant_against_polynomial():
    F5 = CoeffRing.make(5)
    c = UnivariatePolynomial(F5, [3])
    f = UnivariatePolynomial(F5, [1, 2, 1])
    assert resultant(c, f).raw == F5.rpow(3, 2)
    assert resultant(f, c).raw == F5.rpow(3, 2)


def test_zero_polynomial_gives_zero():
    F5 = CoeffRing.make(5)
    z = UnivariatePolynomial(F5, [])
    f = UnivariatePolynomial(F5, [1, 1])
    assert resultant(z, f).raw == 0


def test_resultant_over_nilpotent_ring():
    R = CoeffRing.make(2, nil=2)
    eps = R.eps_raw
    a = UnivariatePolynomial(R, [R.radd(1, eps), 1])
    b = UnivariatePolynomial(R, [eps, 0, 1])
    # root of a is 1 + eps; b(1 + eps) = (1 + eps)^2 + eps = 1 + eps
    assert resultant(a, b).raw == R.radd(1, eps)


def test_double_root_multiplicity():
    F3 = CoeffRing.make(3)
    f = UnivariatePolynomial(F3, [1, 1, 1])  # (x - 1)^2 over F_3
    roots = roots_with_multiplicity(f, 2)
    assert len(roots) == 1
    root, mult = roots[0]
    assert mult == 2 and root.value == (1,) and root.field.s == 1


def test_roots_in_quadratic_extension():
    F3 = CoeffRing.make(3)
    f = UnivariatePolynomial(F3, [1, 0, 1])  # x^2 + 1
    roots = roots_with_multiplicity(f, 2)
    assert len(roots) == 2
    assert all(m == 1 and r.field.s == 2 for r, m in roots)
    s = roots[0][0] + roots[1][0]
    p = roots[0][0] * roots[1][0]
    assert s.base_element().raw == 0
    assert p.base_element().raw == 1


def test_roots_of_quadratic_over_f2():
    F2 = CoeffRing.make(2)
    f = UnivariatePolynomial(F2, [1, 1, 1])
    roots = roots_with_multiplicity(f, 2)
    assert len(roots) == 2 and all(r.field.s == 2 for r, _ in roots)


def test_extension_bound_exceeded():
    F2 = CoeffRing.make(2)
    f = UnivariatePolynomial(F2, [1, 1, 0, 1])  # irreducible cubic
    with pytest.raises(ExtensionBoundExceeded):
        roots_with_multiplicity(f, 2)
    assert len(roots_with_multiplicity(f, 3)) == 3


def test_resultant_matches_root_product(rng):
    for q in (2, 3, 4, 5):
        ring = CoeffRing.make(q)
        for _ in range(30):
            roots = [rng.randrange(q) for _ in range(rng.randrange(1, 4))]
            lead = 1 + rng.randrange(q - 1) if q > 2 else 1
            a = UnivariatePolynomial(ring, [lead])
            for r in roots:
                a = a.mul(lin(ring, r))
            b = UnivariatePolynomial(ring, [rng.randrange(q) for _ in range(4)])
            if b.degree < 1:
                continue
            prod = ring.rpow(lead, b.degree)
            for r in roots:
                prod = ring.rmul(prod, b.evaluate(ring.from_raw(r)).raw)
            assert resultant(a, b).raw == prod


def test_split_polynomial_roots_cross_check(rng):
    F4 = CoeffRing.make(4)
    for _ in range(20):
        roots = [rng.randrange(4) for _ in range(3)]
        f = UnivariatePolynomial(F4, [1])
        for r in roots:
            f = f.mul(lin(F4, r))
        found = roots_with_multiplicity(f, 1)
        flat = []
        for r, m in found:
            flat.extend([r.value[0]] * m)
        assert sorted(flat) == sorted(roots)
