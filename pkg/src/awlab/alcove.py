"""Projections to W_0, Newton points, the Kottwitz map and the dominance order."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .weyl import AffWeylElt, Permutation, WeylError, _perm

__all__ = [
    "BasicClass", "p1", "p2", "base_alcove_point", "apply_affine", "newton",
    "kottwitz", "is_dominant", "dominance_leq", "dual_cocharacter", "rho",
    "fraction_strings",
]


@dataclass(frozen=True)
class BasicClass:
    """The basic sigma-conjugacy class of GL_n with Kottwitz invariant ``kappa``."""
    n: int
    kappa: int

    @property
    def n_prime(self) -> int:
        return gcd(self.kappa % self.n, self.n)

    @property
    def n0(self) -> int:
        return self.n // self.n_prime

    @property
    def k0(self) -> int:
        return (self.kappa % self.n) // self.n_prime

    @property
    def defect(self) -> int:
        return self.n - self.n_prime

    def newton(self) -> tuple[Fraction, ...]:
        return (Fraction(self.kappa, self.n),) * self.n


def p1(w: AffWeylElt) -> Permutation:
    return w.finite


def base_alcove_point(n: int) -> tuple[Fraction, ...]:
    # interior of {x_1 > ... > x_n > x_1 - 1}
    return tuple(Fraction(n - i, 2 * n) for i in range(1, n + 1))


def apply_affine(w: AffWeylElt, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    ux = w.finite.act(x)
    return tuple(a + b for a, b in zip(ux, w.transl))


def p2(w: AffWeylElt) -> Permutation:
    """The v in W_0 with ``v^{-1} w(a)`` in the dominant chamber, a the base alcove."""
    q = apply_affine(w, base_alcove_point(w.n))
    order = sorted(range(1, w.n + 1), key=lambda i: q[i - 1], reverse=True)
    vals = [q[i - 1] for i in order]
    assert all(a > b for a, b in zip(vals, vals[1:])), "alcove point on a wall"
    # (v^{-1} q)_i = q_{v(i)} must decrease
    return _perm(tuple(order))


def newton(w: AffWeylElt) -> tuple[Fraction, ...]:
    """Cycle averages of the translation part, sorted decreasingly."""
    lam = w.transl
    out = []
    for cyc in w.finite.cycles():
        avg = Fraction(sum(lam[i - 1] for i in cyc), len(cyc))
        out.extend([avg] * len(cyc))
    return tuple(sorted(out, reverse=True))


def kottwitz(w: AffWeylElt) -> int:
    return sum(w.transl)


def is_dominant(lam: Sequence) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def dominance_leq(lam: Sequence, mu: Sequence) -> bool:
    """``lam <= mu`` in dominance order; inputs must be dominant (rationals allowed)."""
    if len(lam) != len(mu):
        raise WeylError("rank mismatch")
    if not (is_dominant(lam) and is_dominant(mu)):
        raise WeylError(f"dominance order needs dominant inputs: {tuple(lam)}, {tuple(mu)}")
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a > b:
            return False
    return True


def dual_cocharacter(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(lam))


def rho(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def fraction_strings(v: Sequence[Fraction]) -> list[str]:
    return [str(Fraction(x)) for x in v]
