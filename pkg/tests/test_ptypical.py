from fractions import Fraction

import pytest

from multiwitt import (
    CoeffRing,
    GhostVector,
    NotNilpotent,
    PWittVector,
    artin_hasse_coefficients,
    artin_hasse_exp,
    component_lengths,
    from_ghost,
    ghost,
    integer_pwitt,
    pi_epsilon,
    pi_epsilon_inverse,
    pwitt_add,
    pwitt_mul,
    pwitt_pair,
    witt_add,
    witt_mul_1var,
)
from multiwitt.ptypical import _op_prime_field, _op_ring
from multiwitt.witt import WittElement, enumerate_witt_elements, random_witt_element


def test_ghost_definition():
    v = PWittVector(2, [Fraction(3), Fraction(5)])
    assert ghost(v).entries == (Fraction(3), Fraction(19))
    z = PWittVector(3, [0, 0, 0])
    assert ghost(z).entries == (0, 0, 0)


def test_ghost_roundtrip_random(rng):
    for p in (2, 3, 5):
        for _ in range(40):
            v = PWittVector(
                p,
                [Fraction(rng.randrange(-20, 20), rng.randrange(1, 7)) for _ in range(4)],
            )
            assert from_ghost(ghost(v)) == v


def test_sum_example_over_f2():
    F2 = CoeffRing.make(2)
    a = PWittVector(2, [1, 0], F2)
    assert pwitt_add(a, a).entries == (0, 1)


def test_identities(any_ring):
    p = any_ring.p
    v = PWittVector(p, [any_ring.random_raw(__import__("random").Random(3)) for _ in range(3)], any_ring)
    assert pwitt_add(v, PWittVector.zero(p, 3, any_ring)) == v
    assert pwitt_mul(v, PWittVector.one(p, 3, any_ring)) == v


def test_lift_and_table_routes_agree(rng):
    for p in (2, 3, 5):
        Fp = CoeffRing.make(p)
        for _ in range(40):
            v = PWittVector(p, [rng.randrange(p) for _ in range(3)], Fp)
            w = PWittVector(p, [rng.randrange(p) for _ in range(3)], Fp)
            for kind in ("sum", "prod"):
                assert _op_prime_field(v, w, kind) == _op_ring(v, w, kind)


def test_ring_laws_over_extension(rng):
    R = CoeffRing.make(4, nil=2)
    for _ in range(25):
        v = PWittVector(2, [R.random_raw(rng) for _ in range(3)], R)
        w = PWittVector(2, [R.random_raw(rng) for _ in range(3)], R)
        u = PWittVector(2, [R.random_raw(rng) for _ in range(3)], R)
        assert pwitt_add(v, w) == pwitt_add(w, v)
        assert pwitt_mul(v, w) == pwitt_mul(w, v)
        assert pwitt_add(pwitt_add(v, w), u) == pwitt_add(v, pwitt_add(w, u))
        assert pwitt_mul(pwitt_mul(v, w), u) == pwitt_mul(v, pwitt_mul(w, u))
        lhs = pwitt_mul(v, pwitt_add(w, u))
        assert lhs == pwitt_add(pwitt_mul(v, w), pwitt_mul(v, u))


def test_ghost_map_is_ring_hom(rng):
    for p in (2, 3):
        for _ in range(40):
            v = PWittVector(p, [Fraction(rng.randrange(-9, 9)) for _ in range(3)])
            w = PWittVector(p, [Fraction(rng.randrange(-9, 9)) for _ in range(3)])
            gv, gw = ghost(v).entries, ghost(w).entries
            assert ghost(pwitt_add(v, w)).entries == tuple(a + b for a, b in zip(gv, gw))
            assert ghost(pwitt_mul(v, w)).entries == tuple(a * b for a, b in zip(gv, gw))


def test_artin_hasse_leading_terms():
    for p in (2, 3, 5):
        c = artin_hasse_coefficients(p, 2)
        assert c[0] == 1 and c[1] == 1
    assert artin_hasse_coefficients(2, 3)[2] == 1


def test_artin_hasse_integrality_window():
    for p in (2, 3, 5):
        for c in artin_hasse_coefficients(p, 16):
            assert c.denominator % p != 0


def test_artin_hasse_exp_examples():
    F3 = CoeffRing.make(3)
    assert artin_hasse_exp(F3.from_int(0), 1, 6) == WittElement.one(F3, 1, 6)

    x = F3.from_int(2)
    e = artin_hasse_exp(x, 1, 2)
    assert e.series.terms == {(0,): 1, (1,): 2}

    F2 = CoeffRing.make(2)
    e2 = artin_hasse_exp(F2.from_int(1), 1, 3)
    assert e2.series.terms == {(0,): 1, (1,): 1, (2,): 1}


def test_component_lengths():
    assert component_lengths(2, 8) == {1: 3, 3: 2, 5: 1, 7: 1}
    assert component_lengths(3, 8) == {1: 2, 2: 2, 4: 1, 5: 1, 7: 1}


def test_pi_epsilon_examples():
    F3 = CoeffRing.make(3)
    v = PWittVector(3, [2, 0], F3)
    assert pi_epsilon({1: v}, F3, 6) == artin_hasse_exp(F3.from_int(2), 1, 6)
    assert pi_epsilon({}, F3, 6) == WittElement.one(F3, 1, 6)


def test_pi_epsilon_roundtrip_exhaustive():
    F2 = CoeffRing.make(2)
    for d in range(2, 9):
        for el in enumerate_witt_elements(F2, 1, d):
            fam = pi_epsilon_inverse(el)
            assert pi_epsilon(fam, F2, d) == el
            for j, v in fam.items():
                assert len(v) == component_lengths(2, d)[j]


def test_pi_epsilon_is_group_hom(rng):
    for p in (2, 3):
        ring = CoeffRing.make(p)
        for _ in range(250):
            d = rng.randrange(2, 9)
            a = random_witt_element(ring, 1, d, rng)
            b = random_witt_element(ring, 1, d, rng)
            fa, fb = pi_epsilon_inverse(a), pi_epsilon_inverse(b)
            fs = {j: pwitt_add(fa[j], fb[j]) for j in fa}
            assert pi_epsilon(fs, ring, d) == witt_add(a, b)


def test_transported_multiplication_matches_formula(rng):
    # push through the factor solver, multiply slotwise with the integer
    # twist -j, map back; must equal the direct convolution product
    for p in (2, 3):
        ring = CoeffRing.make(p)
        for _ in range(60):
            d = rng.randrange(2, 9)
            a = random_witt_element(ring, 1, d, rng)
            b = random_witt_element(ring, 1, d, rng)
            fa, fb = pi_epsilon_inverse(a), pi_epsilon_inverse(b)
            prod_fam = {}
            for j in fa:
                m = len(fa[j])
                twist = integer_pwitt(-j, p, m, ring)
                prod_fam[j] = pwitt_mul(twist, pwitt_mul(fa[j], fb[j]))
            assert pi_epsilon(prod_fam, ring, d) == witt_mul_1var(a, b)


def test_law_tables_and_coefficients_stay_integral():
    # the NonIntegral guard is a bug signal; building every table in scope
    # must never trip it
    from multiwitt.ptypical import _law_polynomials

    for p, m in ((2, 4), (3, 3), (5, 2)):
        for kind in ("sum", "prod"):
            laws = _law_polynomials(p, m, kind)
            assert len(laws) == m
    for p in (2, 3, 5):
        artin_hasse_coefficients(p, 16)


def test_pairing_example_and_bilinearity(rng):
    R = CoeffRing.make(2, nil=2)
    eps = R.eps_raw
    v = PWittVector(2, [eps, 0], R)
    w = PWittVector(2, [1, 0], R)
    assert pwitt_pair(v, w).raw == R.radd(1, eps)
    assert pwitt_pair(PWittVector.zero(2, 2, R), w).raw == 1

    for _ in range(40):
        v1 = PWittVector(2, [R.random_nilpotent_raw(rng) for _ in range(2)], R)
        v2 = PWittVector(2, [R.random_nilpotent_raw(rng) for _ in range(2)], R)
        w1 = PWittVector(2, [R.random_raw(rng) for _ in range(2)], R)
        lhs = pwitt_pair(pwitt_add(v1, v2), w1)
        assert lhs == pwitt_pair(v1, w1) * pwitt_pair(v2, w1)


def test_pairing_needs_nilpotent_left():
    R = CoeffRing.make(2, nil=2)
    v = PWittVector(2, [1, 0], R)
    with pytest.raises(NotNilpotent):
        pwitt_pair(v, v)


def test_integer_vector_ghosts():
    for p, c in ((2, -1), (3, -2), (5, 7)):
        v = integer_pwitt(c, p, 4)
        assert all(g == c for g in ghost(v).entries)


def test_symbolic_length_capped():
    from multiwitt import TooLarge

    R = CoeffRing.make(4)  # extension field forces the table route
    v = PWittVector(2, [1, 0, 0, 0, 0], R)
    with pytest.raises(TooLarge):
        pwitt_mul(v, v)


def test_json_shapes():
    F2 = CoeffRing.make(2)
    v = PWittVector(2, [1, 0], F2)
    doc = v.to_json_dict()
    assert doc["p"] == 2 and doc["entries"] == [[[1]], [[0]]]
