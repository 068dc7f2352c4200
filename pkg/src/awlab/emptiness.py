"""
Non-emptiness of X_x(b) in the affine flag variety for basic b.

``nonempty_basic`` decides the P-alcove criterion: X_x(b) is non-empty iff for
every pair (w0, S') making x a ^{w0}P_{S'}-alcove, basic b can be conjugated
into the Levi M_{S'} with the same Kottwitz image as w0^{-1} x w0.  For basic b
that happens iff every Levi block of w0^{-1} x w0 has slope kappa(b)/n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .alcove import BasicClass, is_dominant, p1, p2
from .weyl import AffWeylElt, Permutation, WeylError, all_permutations, format_element, support

__all__ = [
    "LeviShape", "PAlcovePair", "NonemptyVerdict", "GuardError",
    "is_p_alcove", "p_alcove_pairs", "nonempty_basic", "explain_nonempty",
    "empty_shortcut", "basic_in_bg_lambda", "max_rank",
]

DEFAULT_MAX_N = 8


class GuardError(ValueError):
    """A desk-scale enumeration guard was exceeded."""


def max_rank(default: int = DEFAULT_MAX_N) -> int:
    env = os.environ.get("AWLAB_MAX_N")
    return int(env) if env else default


@dataclass(frozen=True)
class LeviShape:
    """A subset S' of {1..n-1}; its blocks are the maximal runs of consecutive indices."""
    n: int
    subset: frozenset[int]

    @classmethod
    def of(cls, n: int, subset: Iterable[int]) -> LeviShape:
        subset = frozenset(subset)
        if not subset <= set(range(1, n)):
            raise WeylError(f"{sorted(subset)} is not a set of simple reflections for n={n}")
        return cls(n, subset)

    def blocks(self) -> list[range]:
        out = []
        start = 1
        for i in range(1, self.n):
            if i not in self.subset:
                out.append(range(start, i + 1))
                start = i + 1
        out.append(range(start, self.n + 1))
        return out

    def composition(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks())

    def is_full(self) -> bool:
        return len(self.subset) == self.n - 1

    def block_index(self) -> list[int]:
        idx = [0] * (self.n + 1)
        for k, blk in enumerate(self.blocks()):
            for a in blk:
                idx[a] = k
        return idx


@dataclass(frozen=True)
class PAlcovePair:
    w0: Permutation
    levi: LeviShape

    def as_json(self) -> dict:
        return {"w0": list(self.w0.images), "levi": sorted(self.levi.subset)}


def _v_iwahori(a: int, b: int) -> int:
    # valuation of the (a, b) entry of I: upper triangular entries lie in p
    return 1 if a < b else 0


def _root_ok(x: AffWeylElt, uinv: Sequence[int], i: int, j: int) -> bool:
    lam = x.transl
    return lam[i - 1] - lam[j - 1] + _v_iwahori(uinv[i - 1], uinv[j - 1]) >= _v_iwahori(i, j)


def _conj_finite(w0: Permutation, u: Permutation) -> Permutation:
    return w0.inverse() * u * w0


def _levi_contains(levi: LeviShape, c: Permutation) -> bool:
    idx = levi.block_index()
    return all(idx[a] == idx[c(a)] for a in range(1, levi.n + 1))


def is_p_alcove(x: AffWeylElt, w0: Permutation, levi: LeviShape) -> bool:
    if not _levi_contains(levi, _conj_finite(w0, x.finite)):
        return False
    uinv = x.finite.inverse().images
    idx = levi.block_index()
    n = x.n
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if idx[a] != idx[b] and not _root_ok(x, uinv, w0(a), w0(b)):
                return False
    return True


def _all_levis(n: int) -> list[LeviShape]:
    out = []
    for mask in range(1 << (n - 1)):
        out.append(LeviShape(n, frozenset(i + 1 for i in range(n - 1) if mask >> i & 1)))
    return out


def _check_rank(n: int) -> None:
    if n > max_rank():
        raise GuardError(f"rank n={n} exceeds enumeration guard {max_rank()}")


def p_alcove_pairs(x: AffWeylElt) -> list[PAlcovePair]:
    """Every (w0, S') for which x is a ^{w0}P_{S'}-alcove, by exhaustive search."""
    _check_rank(x.n)
    levis = _all_levis(x.n)
    return [PAlcovePair(w0, L) for w0 in all_permutations(x.n) for L in levis
            if is_p_alcove(x, w0, L)]


def _slopes_ok(x: AffWeylElt, w0: Permutation, levi: LeviShape, kappa: int) -> bool:
    n = x.n
    lam = x.transl
    for blk in levi.blocks():
        k = sum(lam[w0(a) - 1] for a in blk)
        if k * n != kappa * len(blk):
            return False
    return True


def _finest_p_alcove_levi(x: AffWeylElt, w0: Permutation, uinv: Sequence[int]) -> LeviShape:
    """
    The smallest S' with x a ^{w0}P_{S'}-alcove.  Both conditions are closed under
    enlarging S', so the valid S' are exactly the supersets of this one.
    """
    n = x.n
    c = _conj_finite(w0, x.finite)
    joined = set()
    for a in range(1, n + 1):
        lo, hi = sorted((a, c(a)))
        joined.update(range(lo, hi))
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if not _root_ok(x, uinv, w0(a), w0(b)):
                joined.update(range(a, b))
    return LeviShape(n, frozenset(joined))


def nonempty_basic(x: AffWeylElt, b: BasicClass) -> bool:
    if x.n != b.n:
        raise WeylError("rank mismatch")
    _check_rank(x.n)
    if sum(x.transl) != b.kappa:
        return False
    uinv = x.finite.inverse().images
    for w0 in all_permutations(x.n):
        levi = _finest_p_alcove_levi(x, w0, uinv)
        if not _slopes_ok(x, w0, levi, b.kappa):
            return False
    return True


@dataclass
class NonemptyVerdict:
    element: AffWeylElt
    kappa_b: int
    nonempty: bool
    witnesses: list[PAlcovePair] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "element": format_element(self.element),
            "kappa_b": self.kappa_b,
            "nonempty": self.nonempty,
            "witnesses": [p.as_json() for p in self.witnesses],
        }


def explain_nonempty(x: AffWeylElt, b: BasicClass) -> NonemptyVerdict:
    """
    Full verdict.  When empty, the witnesses are the P-alcove pairs whose slope
    condition fails; when non-empty, the proper-Levi pairs that were satisfied.
    """
    pairs = p_alcove_pairs(x)
    failing = [p for p in pairs if not _slopes_ok(x, p.w0, p.levi, b.kappa)]
    if failing:
        return NonemptyVerdict(x, b.kappa, False, failing)
    return NonemptyVerdict(x, b.kappa, True, [p for p in pairs if not p.levi.is_full()])


def empty_shortcut(w: AffWeylElt, b: BasicClass) -> bool:
    """True when the parabolic criterion certifies X_w(b) is empty."""
    if tuple(Fraction(x) for x in w.transl) == b.newton():
        return False
    v = p2(w)
    c = v.inverse() * p1(w) * v
    return support(c) != frozenset(range(1, w.n))


def basic_in_bg_lambda(b: BasicClass, lam: Sequence[int]) -> bool:
    if not is_dominant(lam):
        raise WeylError(f"{tuple(lam)} is not dominant")
    return sum(lam) == b.kappa
