from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from awlab.alcove import (
    BasicClass, apply_affine, base_alcove_point, dominance_leq, dual_cocharacter,
    is_dominant, kottwitz, newton, p1, p2,
)
from awlab.weyl import (
    AffWeylElt, Permutation, WeylError, all_permutations, compose, from_cycles, identity,
    inverse, omega_generator, omega_power, simple_reflection, translation,
)

from conftest import dominant, elements, family, sfin, srefl, tau


def a_j(n, r, k, j):
    """s_j .. s_1 (tau phi^{lam_{0,r}}) s_1 .. s_{j-1}"""
    lam = family(n, 0, r, k).lam
    a_prime = compose(AffWeylElt((0,) * n, tau(n)), translation(lam))
    return compose(compose(srefl(n, *range(j, 0, -1)), a_prime), srefl(n, *range(1, j)))


def test_p1_examples():
    assert p1(translation((2, 0, -1))) == Permutation.identity(3)
    assert p1(simple_reflection(4, 0)) == from_cycles(4, (1, 4))


@pytest.mark.parametrize("n,r,k", [(n, r, k) for n in (2, 3, 4, 5) for r, k in ((0, 1), (1, 0), (1, 1))])
def test_projections_of_ladder(n, r, k):
    for j in range(1, n):
        a = a_j(n, r, k, j)
        assert p1(a) == sfin(n, *range(1, j), *range(j + 1, n))
        assert p2(a) == sfin(n, *range(j + 1, n))


def test_p2_examples():
    assert p2(identity(4)) == Permutation.identity(4)
    assert p2(translation((3, 1, 0, -2))) == Permutation.identity(4)


def test_base_alcove_point_is_interior():
    for n in range(1, 7):
        p = base_alcove_point(n)
        assert all(a > b for a, b in zip(p, p[1:]))
        assert p[-1] > p[0] - 1


@given(elements(max_n=6))
def test_p2_defining_property(w):
    q = apply_affine(w, base_alcove_point(w.n))
    v = p2(w)
    moved = v.inverse().act(q)
    assert all(a > b for a, b in zip(moved, moved[1:]))
    # brute force: exactly one v works
    hits = [u for u in all_permutations(w.n) if is_dominant(u.inverse().act(q))]
    assert hits == [v]


def test_newton_examples():
    for n in (2, 3, 5):
        assert newton(simple_reflection(n, 0)) == (0,) * n
    w0 = from_cycles(4, (1, 3), (2, 4))
    for m1 in range(0, 6):
        lam = (m1, m1, 0, 0)
        w = AffWeylElt(lam, w0)  # w0 phi^{w0^-1 lam}
        assert newton(w) == (Fraction(m1, 2),) * 4
    assert newton(translation((0, 2, -1))) == (2, 0, -1)


def test_kottwitz_examples():
    assert kottwitz(AffWeylElt((3, -1, -1), tau(3))) == 1
    assert kottwitz(identity(3)) == 0
    assert kottwitz(omega_generator(5)) == 1


@given(elements(max_n=6))
def test_newton_sum_is_kottwitz(w):
    nu = newton(w)
    assert is_dominant(nu)
    assert sum(nu) == kottwitz(w)


@given(st.data())
def test_newton_kottwitz_conjugation_invariant(data):
    n = data.draw(st.integers(1, 5))
    w, g = data.draw(elements(n=n)), data.draw(elements(n=n))
    c = compose(compose(g, w), inverse(g))
    assert newton(c) == newton(w)
    assert kottwitz(c) == kottwitz(w)


@given(st.data())
def test_kottwitz_is_homomorphism(data):
    n = data.draw(st.integers(1, 5))
    a, b = data.draw(elements(n=n)), data.draw(elements(n=n))
    assert kottwitz(compose(a, b)) == kottwitz(a) + kottwitz(b)


def test_dominance_examples():
    lam = (2, 0, -1)
    assert dominance_leq(lam, lam)
    assert dominance_leq((1, 1, 0), (2, 0, 0))
    assert not dominance_leq((2, 0, 0), (1, 1, 0))
    assert not dominance_leq((1, 0, 0), (1, 1, 0))
    with pytest.raises(WeylError):
        dominance_leq((0, 1), (1, 0))


@given(st.data())
def test_dual_preserves_dominance(data):
    n = data.draw(st.integers(1, 5))
    lam, mu = data.draw(dominant(n=n)), data.draw(dominant(n=n))
    assert dominance_leq(lam, mu) == dominance_leq(dual_cocharacter(lam), dual_cocharacter(mu))


def test_dual_examples():
    for n in (2, 3, 4):
        for r in (0, 1, 2):
            for k in range(n):
                lam = ((n - 1) * r + k,) + (-r,) * (n - 1)
                assert dual_cocharacter(lam) == (r,) * (n - 1) + (-(n - 1) * r - k,)
    assert dual_cocharacter((0, 0, 0)) == (0, 0, 0)
    assert dual_cocharacter((3, -1, -1, -2)) == (2, 1, 1, -3)


@given(dominant(max_n=6))
def test_dual_involution(lam):
    d = dual_cocharacter(lam)
    assert is_dominant(d)
    assert dual_cocharacter(d) == lam
    assert sum(d) == -sum(lam)


@given(dominant(max_n=5))
def test_basic_class_is_dominance_minimum(lam):
    n = len(lam)
    for k in range(sum(lam) - 1, sum(lam) + 2):
        nu = BasicClass(n, k).newton()
        assert dominance_leq(nu, lam) == (k == sum(lam))


@pytest.mark.parametrize("n,kappa,n_prime,n0,k0", [
    (4, 2, 2, 2, 1), (6, 4, 2, 3, 2), (5, 0, 5, 1, 0), (3, 1, 1, 3, 1), (6, -2, 2, 3, 2),
])
def test_basic_class_parameters(n, kappa, n_prime, n0, k0):
    b = BasicClass(n, kappa)
    assert (b.n_prime, b.n0, b.k0) == (n_prime, n0, k0)
    assert b.n_prime * b.n0 == n
    assert b.defect == n - n_prime
    assert sum(b.newton()) == kappa


def test_newton_of_omega_is_central():
    for n in (2, 3, 4):
        for k in range(-3, 4):
            assert newton(omega_power(n, k)) == (Fraction(k, n),) * n


@given(elements(max_n=5))
def test_p2_of_translation_strictly_dominant(w):
    lam = tuple(sorted(w.transl, reverse=True))
    assume(all(a > b for a, b in zip(lam, lam[1:])))
    assert p2(translation(lam)) == Permutation.identity(len(lam))
