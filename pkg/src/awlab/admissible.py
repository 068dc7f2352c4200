"""
Admissible sets, minimal coset representatives, and the finite-Coxeter-type
classifier for dominant cocharacters of GL_n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .alcove import BasicClass, dual_cocharacter, is_dominant, rho
from .emptiness import GuardError, max_rank, nonempty_basic
from .weyl import (
    AffWeylElt, Permutation, WeylError, _elt, all_permutations, compose, format_element,
    from_cycles, is_coxeter, length, simple_reflection, translation,
)

__all__ = [
    "FamilyParams", "Family", "ClassificationVerdict", "DimensionSplit",
    "translation_orbit", "adm_set", "lower_interval", "is_min_coset_rep",
    "min_coset_rep", "s_adm_circ", "s_adm_circ_cox", "classify_by_criteria",
    "classify_closed_form", "make_family", "dimension_formula", "cyclic",
]

ADM_LENGTH_GUARD = 12
SADM_RANK_GUARD = 6


def cyclic(n: int, *cycle: int) -> Permutation:
    return from_cycles(n, cycle)


def translation_orbit(lam: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(itertools.permutations(tuple(lam))))


def lower_interval(y: AffWeylElt) -> set[AffWeylElt]:
    """All x <= y in Bruhat order, via L(y) = L(sy) | s L(sy) for a left descent s."""
    n = y.n
    ly = length(y)
    if ly == 0:
        return {y}
    for i in range(n):
        s = simple_reflection(n, i)
        sy = compose(s, y)
        if length(sy) < ly:
            below = lower_interval(sy)
            return below | {compose(s, x) for x in below}
    raise RuntimeError("no left descent")


def adm_set(lam: Sequence[int]) -> set[AffWeylElt]:
    lam = tuple(lam)
    if length(translation(lam)) > ADM_LENGTH_GUARD:
        raise GuardError(f"l(t^lambda) exceeds {ADM_LENGTH_GUARD}")
    out = set()
    for mu in translation_orbit(lam):
        out |= lower_interval(translation(mu))
    return out


def is_min_coset_rep(w: AffWeylElt) -> bool:
    n = w.n
    ell = length(w)
    return all(length(compose(simple_reflection(n, i), w)) > ell for i in range(1, n))


def min_coset_rep(w: AffWeylElt) -> AffWeylElt:
    """The minimal-length element of W_0 w."""
    mu = w.finite.inverse().act(w.transl)  # w = u t^mu, so W_0 w = W_0 t^mu
    cands = (_elt(v.act(mu), v) for v in all_permutations(w.n))
    return min(cands, key=length)


def _check_sadm_rank(n: int) -> None:
    if n > max_rank(SADM_RANK_GUARD):
        raise GuardError(f"rank n={n} exceeds enumeration guard {max_rank(SADM_RANK_GUARD)}")


def s_adm_circ(lam: Sequence[int]) -> list[AffWeylElt]:
    """Minimal representatives of the W_0-cosets inside W_0 t^lam W_0."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise WeylError(f"{lam} is not dominant")
    _check_sadm_rank(len(lam))
    out = [min_coset_rep(translation(mu)) for mu in translation_orbit(lam)]
    return sorted(out, key=lambda w: (w.transl, w.finite.images))


def s_adm_circ_cox(lam: Sequence[int]) -> list[AffWeylElt]:
    return [w for w in s_adm_circ(lam) if is_coxeter(w.finite)]


@dataclass
class ClassificationVerdict:
    is_finite_coxeter: bool
    matched_form: str | None = None
    params: dict | None = None
    witnesses: list[tuple[AffWeylElt, str]] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "value": self.is_finite_coxeter,
            "matched_form": self.matched_form,
            "params": self.params,
            "witnesses": [[format_element(w), why] for w, why in self.witnesses],
        }


def classify_by_criteria(lam: Sequence[int], mode: str = "strict") -> ClassificationVerdict:
    """
    lam is of finite Coxeter type iff X_w(b) is empty for every non-Coxeter
    w in SAdm(lam)°, b the basic class in B(G, lam).
    """
    if mode != "strict":
        raise ValueError(f"unsupported mode {mode!r}")
    lam = tuple(lam)
    b = BasicClass(len(lam), sum(lam))
    witnesses = []
    ok = True
    for w in s_adm_circ(lam):
        if is_coxeter(w.finite):
            continue
        if nonempty_basic(w, b):
            ok = False
            witnesses.append((w, "non-Coxeter, non-empty"))
        else:
            witnesses.append((w, "non-Coxeter, empty"))
    return ClassificationVerdict(ok, witnesses=witnesses)


def _forms(n: int, r: int, kappa: int) -> dict[str, tuple[int, ...]]:
    mid = n - 2
    return {
        "F1": ((n - 1) * r + kappa,) + (-r,) * (n - 1),
        "F2": (r,) * (n - 1) + (-(n - 1) * r - kappa,),
        "F3": ((n - 1) * r + 1 + kappa,) + (-r,) * mid + (-r - 1,),
        "F4": (r + 1,) + (r,) * mid + (-(n - 1) * r - 1 - kappa,),
    }


def _valid(r: int, kappa: int, n: int) -> bool:
    return 0 <= kappa < n and (r >= 1 if kappa == 0 else r >= 0)


def _central_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    diffs = {x - y for x, y in zip(a, b)}
    return len(diffs) == 1


def classify_closed_form(lam: Sequence[int]) -> ClassificationVerdict:
    """Match lam_ad against the four parametric shapes F1-F4."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise WeylError(f"{lam} is not dominant")
    n = len(lam)
    if n == 1:
        return ClassificationVerdict(True, "F1", {"r": 1, "kappa": 0})
    # m_1 - m_n is n r + kappa for F1, F2 and n r + kappa + 2 for F3, F4
    spread = lam[0] - lam[-1]
    for name, offset in (("F1", 0), ("F2", 0), ("F3", 2), ("F4", 2)):
        r, kappa = divmod(spread - offset, n)
        if _valid(r, kappa, n) and _central_equal(lam, _forms(n, r, kappa)[name]):
            return ClassificationVerdict(True, name, {"r": r, "kappa": kappa})
    return ClassificationVerdict(False)


@dataclass(frozen=True)
class FamilyParams:
    n: int
    i: int
    r: int
    kappa: int

    def __post_init__(self):
        if self.i not in (0, 1):
            raise WeylError("family index i must be 0 or 1")
        if self.n < 2 or not _valid(self.r, self.kappa, self.n):
            raise WeylError(f"invalid family parameters {self}")


@dataclass(frozen=True)
class Family:
    params: FamilyParams
    lam: tuple[int, ...]
    lam_prime: tuple[int, ...]
    nus: tuple[tuple[int, ...], ...]  # nus[j-1] is nu_j
    w: AffWeylElt
    lam_dual: tuple[int, ...]
    tau: Permutation

    def element(self, nu: Sequence[int]) -> AffWeylElt:
        return _elt(tuple(nu), self.tau)


def make_family(p: FamilyParams) -> Family:
    n, r, k = p.n, p.r, p.kappa
    tau = cyclic(n, *range(1, n + 1))
    if p.i == 0:
        lam = ((n - 1) * r + k,) + (-r,) * (n - 1)
        nus = (lam,)
    else:
        lam = ((n - 1) * r + 1 + k,) + (-r,) * (n - 2) + (-r - 1,)
        nus = tuple(
            (lam[0],) + tuple(-r - 1 if pos == j + 1 else -r for pos in range(2, n + 1))
            for j in range(1, n)
        )
    lam_prime = nus[0]
    return Family(p, lam, lam_prime, nus, _elt(lam_prime, tau), dual_cocharacter(lam), tau)


@dataclass(frozen=True)
class DimensionSplit:
    total: int
    drinfeld_dim: int
    affine_dim: int


def dimension_formula(lam: Sequence[int], b: BasicClass) -> DimensionSplit:
    """<rho, lam - nu_b> - def(b)/2, split as Drinfeld factor times affine space."""
    lam = tuple(lam)
    if not is_dominant(lam) or sum(lam) != b.kappa:
        raise WeylError(f"X_lambda(b) is empty for lambda={lam}, kappa={b.kappa}")
    rh = rho(len(lam))
    val = sum(x * y for x, y in zip(rh, lam)) - sum(x * y for x, y in zip(rh, b.newton()))
    val -= Fraction(b.defect, 2)
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(f"dimension {val} is not a non-negative integer")
    total = int(val)
    return DimensionSplit(total, b.n_prime - 1, total - (b.n_prime - 1))
