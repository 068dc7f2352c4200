import pytest
from hypothesis import given, strategies as st

from awlab.admissible import (
    FamilyParams, adm_set, classify_by_criteria, classify_closed_form, cyclic,
    dimension_formula, is_min_coset_rep, lower_interval, make_family, min_coset_rep,
    s_adm_circ, s_adm_circ_cox, translation_orbit,
)
from awlab.alcove import BasicClass, dual_cocharacter
from awlab.emptiness import GuardError
from awlab.weyl import (
    AffWeylElt, WeylError, _subword_products, all_permutations, bruhat_leq, compose,
    from_cycles, identity, is_coxeter, length, omega_generator, simple_reflection, translation,
)

from conftest import GRID, c_perm, dominant, family, tau, twisted


def lam_1r_shapes(n):
    """(1 2 .. k)(n n-1 .. l) and (1 2 .. l n n-1 .. k)"""
    out = set()
    for k in range(n + 1):
        for l in range(k + 1, n + 2):
            cycles = [c for c in (tuple(range(1, k + 1)), tuple(range(n, l - 1, -1))) if len(c) > 1]
            out.add(from_cycles(n, *cycles))
    for l in range(n + 1):
        for k in range(l + 1, n + 1):
            out.add(from_cycles(n, tuple(range(1, l + 1)) + tuple(range(n, k - 1, -1))))
    return out


def test_translation_orbit():
    assert translation_orbit((0, 0, 0)) == [(0, 0, 0)]
    assert len(translation_orbit((1, 0, 0))) == 3
    assert len(translation_orbit((2, 1, 0))) == 6


def test_adm_set_examples():
    assert adm_set((0, 0, 0)) == {identity(3)}
    assert adm_set((1, 0)) == {translation((1, 0)), translation((0, 1)), omega_generator(2)}


@pytest.mark.parametrize("lam", [(1, 0, 0), (1, 0, -1), (2, 0, 0), (1, 1, 0, 0)])
def test_adm_set_matches_subword_oracle(lam):
    oracle = set()
    for mu in translation_orbit(lam):
        oracle |= _subword_products(translation(mu))
    adm = adm_set(lam)
    assert adm == oracle
    for w in adm:
        assert any(bruhat_leq(w, translation(mu)) for mu in translation_orbit(lam))


def test_lower_interval_closed_downward():
    y = translation((2, 0, -1))
    below = lower_interval(y)
    for x in below:
        for i in range(3):
            s = simple_reflection(3, i)
            for z in (compose(s, x), compose(x, s)):
                if length(z) < length(x):
                    assert z in below


def test_adm_guard():
    with pytest.raises(GuardError):
        adm_set((5, 0, 0, -5))


def test_min_coset_rep_examples():
    assert is_min_coset_rep(identity(4))
    assert not is_min_coset_rep(simple_reflection(3, 1))
    for lam in [(1, 0, 0, -1), (3, 1, 0)]:
        w = translation(lam)
        assert min_coset_rep(w) == w


@given(st.data())
def test_min_coset_rep_is_minimal(data):
    n = data.draw(st.integers(1, 4))
    lam = tuple(data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n)))
    u = data.draw(st.sampled_from(list(all_permutations(n))))
    w = AffWeylElt(lam, u)
    m = min_coset_rep(w)
    assert is_min_coset_rep(m)
    coset = [compose(AffWeylElt((0,) * n, v), w) for v in all_permutations(n)]
    assert m in coset
    assert length(m) == min(length(x) for x in coset)


def test_sorted_twists_are_min_reps():
    # w0(k) > w0(l) with k < l forces m_{w0(k)} < m_{w0(l)}
    lam = (3, 1, 1, 0)
    for w0 in all_permutations(4):
        ok = all(lam[w0(k) - 1] < lam[w0(l) - 1]
                 for k in range(1, 5) for l in range(k + 1, 5) if w0(k) > w0(l))
        if ok:
            assert is_min_coset_rep(twisted(w0, lam))


@pytest.mark.parametrize("n,r,k", GRID)
def test_s_adm_circ_lambda_0r(n, r, k):
    lam = family(n, 0, r, k).lam
    expected = {twisted(cyclic(n, *range(1, j + 1)), lam) for j in range(1, n + 1)}
    assert set(s_adm_circ(lam)) == expected
    cox = s_adm_circ_cox(lam)
    assert cox == [twisted(tau(n), lam)]


@pytest.mark.parametrize("n,r,k", GRID)
def test_s_adm_circ_lambda_1r(n, r, k):
    lam = family(n, 1, r, k).lam
    elts = s_adm_circ(lam)
    shapes = lam_1r_shapes(n)
    assert len(elts) == n * (n - 1)
    for w in elts:
        assert w.transl == lam and w.finite in shapes
    expected = {twisted(c_perm(n, j), lam) for j in range(1, n)}
    assert set(s_adm_circ_cox(lam)) == expected


def test_s_adm_circ_trivial():
    assert s_adm_circ((0, 0, 0)) == [identity(3)]
    assert s_adm_circ_cox((0, 0, 0)) == []


@given(dominant(min_n=2, max_n=4, bound=2))
def test_s_adm_circ_in_adm_set(lam):
    sadm = s_adm_circ(lam)
    assert all(is_min_coset_rep(w) for w in sadm)
    assert len(sadm) == len(translation_orbit(lam))
    try:
        adm = adm_set(lam)
    except GuardError:
        return
    assert set(sadm) <= adm


def test_s_adm_circ_rejects_non_dominant():
    with pytest.raises(WeylError):
        s_adm_circ((0, 1))


@pytest.mark.parametrize("lam,expected", [
    ((3, -1, -1, -1), True),
    ((2, 1, 0, 0), False),
    ((1, 0, 0, -1), False),
    ((3, -1, -1), True),
    ((4, -1, -1, -2), True),
    ((0, 0, 0), False),
    ((5,), True),
])
def test_classifier_examples(lam, expected):
    assert classify_by_criteria(lam).is_finite_coxeter is expected
    assert classify_closed_form(lam).is_finite_coxeter is expected


def test_closed_form_tags():
    v = classify_closed_form((3, -1, -1))
    assert (v.matched_form, v.params) == ("F1", {"r": 1, "kappa": 1})
    v = classify_closed_form((4, -1, -1, -2))
    assert (v.matched_form, v.params) == ("F3", {"r": 1, "kappa": 0})
    assert classify_closed_form((1, 1, -2)).matched_form == "F2"
    assert classify_closed_form((2, 1, 1, -3)).matched_form == "F4"
    assert classify_closed_form((2, 1, 0, 0)).matched_form is None


def test_criteria_witnesses():
    v = classify_by_criteria((1, 0, 0, -1))
    assert any(why == "non-Coxeter, non-empty" for _, why in v.witnesses)
    assert all(not is_coxeter(w.finite) for w, _ in v.witnesses)
    with pytest.raises(ValueError):
        classify_by_criteria((1, 0), mode="loose")


@given(dominant(min_n=1, max_n=6, bound=5))
def test_closed_form_duality(lam):
    a = classify_closed_form(lam)
    b = classify_closed_form(dual_cocharacter(lam))
    assert a.is_finite_coxeter == b.is_finite_coxeter
    swap = {"F1": "F2", "F2": "F1", "F3": "F4", "F4": "F3"}
    if a.is_finite_coxeter and len(lam) > 2:
        assert b.matched_form == swap[a.matched_form]


@given(dominant(min_n=1, max_n=4, bound=3), st.integers(-4, 4))
def test_central_shift_invariance(lam, m):
    shifted = tuple(x + m for x in lam)
    assert classify_closed_form(lam).is_finite_coxeter == classify_closed_form(shifted).is_finite_coxeter
    assert classify_by_criteria(lam).is_finite_coxeter == classify_by_criteria(shifted).is_finite_coxeter


@given(dominant(min_n=2, max_n=4, bound=2))
def test_classifiers_agree(lam):
    assert classify_by_criteria(lam).is_finite_coxeter == classify_closed_form(lam).is_finite_coxeter


def test_make_family_examples():
    f = make_family(FamilyParams(3, 0, 1, 1))
    assert f.lam == (3, -1, -1)
    assert f.w == AffWeylElt((3, -1, -1), from_cycles(3, (1, 2, 3)))
    assert f.nus == (f.lam,)
    f = make_family(FamilyParams(3, 1, 0, 1))
    assert f.lam == (2, 0, -1)
    assert f.lam_prime == (2, -1, 0)
    assert len(f.nus) == 2
    assert f.lam_dual == (1, 0, -2)


@pytest.mark.parametrize("n,r,k", GRID)
def test_family_nus(n, r, k):
    f = family(n, 1, r, k)
    assert len(f.nus) == n - 1
    for j, nu in enumerate(f.nus, start=1):
        assert nu[0] == f.lam[0]
        assert nu[j] == -r - 1
        assert sorted(nu, reverse=True) == list(f.lam)
    assert len(set(f.nus)) == n - 1


@pytest.mark.parametrize("bad", [(3, 2, 0, 1), (3, 0, 0, 0), (3, 0, 1, 3), (3, 1, -1, 1), (1, 0, 1, 0)])
def test_family_params_validation(bad):
    with pytest.raises(WeylError):
        FamilyParams(*bad)


def test_dimension_examples():
    d = dimension_formula((3, -1, -1), BasicClass(3, 1))
    assert (d.total, d.drinfeld_dim, d.affine_dim) == (3, 0, 3)
    for n in (2, 3, 4):
        for c in (-1, 0, 2):
            assert dimension_formula((c,) * n, BasicClass(n, c * n)).total == 0
    with pytest.raises(WeylError):
        dimension_formula((1, 0, 0), BasicClass(3, 0))


@pytest.mark.parametrize("n,r,k", GRID)
@pytest.mark.parametrize("i", [0, 1])
def test_dimension_duality(n, r, k, i):
    lam = family(n, i, r, k).lam
    d = dimension_formula(lam, BasicClass(n, k))
    dd = dimension_formula(dual_cocharacter(lam), BasicClass(n, -k))
    assert d == dd
    assert d.total >= BasicClass(n, k).n_prime - 1
