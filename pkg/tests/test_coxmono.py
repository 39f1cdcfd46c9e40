"""Tests for monomial degrees and standard-monomial enumeration/counting."""

import itertools

import pytest

from coxline.coxmono import (
    CoxMonomial,
    count_at_level,
    count_standard_monomials_closed_form,
    degree_of,
    enumerate_monomials,
    enumerate_standard_monomials,
    generators,
    hilbert_function_RmodJ,
    in_initial_ideal,
)
from coxline.picard import DivisorClass, chi, is_nef


def brute_standard_monomials(D):
    """Exhaustive scan over all exponent vectors; independent of the
    interval-based enumeration it checks."""
    n, d, a = D.n, D.d, D.a
    out = set()
    if d < 0:
        return out
    for lam in range(d + 1):
        for sigma in itertools.product(range(d + 1), repeat=n):
            if lam + sum(sigma) != d:
                continue
            eps = tuple(lam + s - ai for s, ai in zip(sigma, a))
            if min(eps) < 0:
                continue
            if any(sigma[i] > 0 and eps[i] > 0 for i in range(n - 2)):
                continue
            out.add(CoxMonomial(lam, sigma, eps))
    return out


def sweep_classes(n, d_max, a_range):
    for d in range(0, d_max + 1):
        for a in itertools.product(a_range, repeat=n):
            yield DivisorClass(d, a)


def test_generator_degrees():
    n = 4
    gens = dict(generators(n))
    assert len(gens) == 2 * n + 1
    assert degree_of(gens["l"]) == DivisorClass(1, (1,) * n)
    assert degree_of(gens["s2"]) == DivisorClass(1, (0, 1, 0, 0))
    assert degree_of(gens["e3"]) == DivisorClass(0, (0, 0, -1, 0))


def test_degree_examples():
    n = 3
    L = DivisorClass.line(n)
    s1e1 = CoxMonomial.gen_s(n, 1) * CoxMonomial.gen_e(n, 1)
    assert degree_of(s1e1) == L
    le123 = CoxMonomial.gen_l(n) * CoxMonomial.gen_e(n, 1) * CoxMonomial.gen_e(n, 2) * CoxMonomial.gen_e(n, 3)
    assert degree_of(le123) == L
    assert degree_of(CoxMonomial.unit(n)) == DivisorClass.zero(n)


def test_degree_additive_under_multiplication():
    mons = [
        CoxMonomial(l, s, e)
        for l in range(2)
        for s in itertools.product(range(2), repeat=3)
        for e in itertools.product(range(2), repeat=3)
    ]
    for m1 in mons[::5]:
        for m2 in mons[::7]:
            assert degree_of(m1 * m2) == degree_of(m1) + degree_of(m2)


def test_enumerate_degree_L():
    n = 3
    found = enumerate_standard_monomials(DivisorClass.line(n))
    expected = {
        CoxMonomial.gen_s(n, 2) * CoxMonomial.gen_e(n, 2),
        CoxMonomial.gen_s(n, 3) * CoxMonomial.gen_e(n, 3),
        CoxMonomial(1, (0, 0, 0), (1, 1, 1)),
    }
    assert set(found) == expected
    assert len(found) == 3


def test_enumerate_zero_class():
    found = enumerate_standard_monomials(DivisorClass.zero(3))
    assert tuple(found) == (CoxMonomial.unit(3),)


def test_enumerate_frozen_count():
    # brute force over lam + sum(sigma) <= 3 gives 7 = C(5,2) - 3
    D = DivisorClass(3, (1, 1, 1))
    assert len(brute_standard_monomials(D)) == 7
    assert len(enumerate_standard_monomials(D)) == 7


def test_enumeration_matches_brute_force():
    for n in (2, 3, 4):
        for D in sweep_classes(n, 3, range(-2, 3)):
            got = enumerate_standard_monomials(D)
            assert set(got) == brute_standard_monomials(D)
            assert len(set(got)) == len(got.monomials)  # pairwise distinct


def test_enumeration_canonical_order():
    for D in sweep_classes(3, 4, range(0, 3)):
        mons = enumerate_standard_monomials(D).monomials
        keys = [(m.lam, m.sigma[-2]) for m in mons]
        assert keys == sorted(keys)


def test_enumerated_monomials_have_the_degree_and_avoid_initial_ideal():
    for D in sweep_classes(3, 4, range(-1, 4)):
        for m in enumerate_standard_monomials(D):
            assert degree_of(m) == D
            assert not in_initial_ideal(m)


def test_closed_form_levels_frozen():
    # S-values (1, 3, 2, 1) for 3L - E1 - E2 - E3
    D = DivisorClass(3, (1, 1, 1))
    assert [count_at_level(D, lam) for lam in range(4)] == [1, 3, 2, 1]
    assert count_standard_monomials_closed_form(D) == 7


def test_closed_form_trivial_cases():
    assert count_standard_monomials_closed_form(DivisorClass.zero(3)) == 1
    for d in range(0, 6):
        D = DivisorClass(d, (0, 0, 0))
        assert count_standard_monomials_closed_form(D) == (d + 2) * (d + 1) // 2


def test_closed_form_rejects_non_nef():
    with pytest.raises(ValueError):
        count_standard_monomials_closed_form(DivisorClass(1, (1, 1, 0)))


def test_closed_form_equals_enumeration_and_chi_on_nef():
    for n in (2, 3, 4):
        for D in sweep_classes(n, 4, range(0, 5)):
            if not is_nef(D):
                continue
            closed = count_standard_monomials_closed_form(D)
            assert closed == len(enumerate_standard_monomials(D))
            assert closed == chi(D)


def test_hilbert_function_examples():
    assert hilbert_function_RmodJ(DivisorClass.line(5)) == 3
    E1 = DivisorClass.exceptional(3, 1)
    assert hilbert_function_RmodJ(E1) == 1
    assert hilbert_function_RmodJ(DivisorClass(2, (0, 0, 0))) == 6


def test_degree_L_census():
    # n + 1 monomials of degree L, n - 2 of them in the initial ideal
    for n in range(2, 7):
        L = DivisorClass.line(n)
        all_mons = enumerate_monomials(L)
        assert len(all_mons) == n + 1
        assert sum(in_initial_ideal(m) for m in all_mons) == n - 2
        assert hilbert_function_RmodJ(L) == 3


def test_enumerate_monomials_matches_unconstrained_brute_force():
    for n in (2, 3):
        for D in sweep_classes(n, 3, range(-1, 3)):
            brute = set()
            for lam in range(D.d + 1) if D.d >= 0 else ():
                for sigma in itertools.product(range(D.d + 1), repeat=n):
                    if lam + sum(sigma) != D.d:
                        continue
                    eps = tuple(lam + s - ai for s, ai in zip(sigma, D.a))
                    if min(eps) >= 0:
                        brute.add(CoxMonomial(lam, sigma, eps))
            assert set(enumerate_monomials(D)) == brute


def test_n2_has_no_initial_ideal():
    # with two points the quotient is the whole free ring in every degree
    for D in sweep_classes(2, 4, range(-1, 4)):
        assert hilbert_function_RmodJ(D) == len(enumerate_monomials(D))


def test_monomial_division_helpers():
    n = 3
    m = CoxMonomial(2, (1, 0, 3), (0, 2, 1))
    one = CoxMonomial.unit(n)
    assert one.divides(m)
    assert m // one == m
    assert (m // m) == one
    other = CoxMonomial(1, (1, 0, 1), (0, 1, 0))
    assert other.divides(m)
    assert (m // other) * other == m
    assert not m.divides(other)
    assert m.lcm(other) == m


def test_monomial_validation():
    with pytest.raises(ValueError):
        CoxMonomial(-1, (0, 0), (0, 0))
    with pytest.raises(ValueError):
        CoxMonomial(0, (0, -1), (0, 0))
    with pytest.raises(ValueError):
        CoxMonomial(0, (0, 0, 0), (0, 0))
    with pytest.raises(ValueError):
        CoxMonomial(0, (0,), (0,))


def test_monomial_str():
    n = 3
    assert str(CoxMonomial.unit(n)) == "1"
    m = CoxMonomial(2, (0, 1, 0), (0, 0, 3))
    assert str(m) == "l^2*s2*e3^3"
