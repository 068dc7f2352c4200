"""
Arithmetic in the extended affine Weyl group of GL_n.

Elements are stored as ``t^lam * u`` with the translation on the left.  The
finite part ``u`` is a permutation in one-line notation with 1-based images,
and acts on cocharacters by ``(u.mu)_i = mu_{u^{-1}(i)}``, so that
``u t^mu u^{-1} = t^{u.mu}``.  On R^n the element ``t^lam u`` acts by
``x -> u.x + lam``.

>>> w = parse_element("t[1,0]*p[2,1]")
>>> length(w)
0
>>> format_element(compose(simple_reflection(2, 1), translation((1, 0))))
't[0,1]*p[2,1]'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NewType, Sequence

__all__ = [
    "Cocharacter", "Permutation", "AffWeylElt", "AffineRoot", "OmegaDecomposition",
    "identity", "translation", "finite", "simple_reflection", "omega_generator",
    "omega_power", "compose", "inverse", "power", "product", "length",
    "length_by_inversions", "act_on_affine_root", "all_permutations", "decompose", "reassemble",
    "bruhat_leq", "bruhat_leq_subwords", "support", "is_coxeter", "perm_length",
    "from_cycles", "parse_element", "format_element", "WeylError",
]

# an integer vector of length n, a point of X_*(T)
Cocharacter = NewType("Cocharacter", tuple)


class WeylError(ValueError):
    """Raised on malformed input or rank mismatch."""


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (``images[i-1] = u(i)``)."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise WeylError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (u v)(i) = u(v(i))
        if other.n != self.n:
            raise WeylError("rank mismatch")
        im = self.images
        return _perm(tuple(im[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return _perm(tuple(inv))

    def act(self, mu: Sequence) -> tuple:
        """Return ``u.mu`` with ``(u.mu)_i = mu_{u^{-1}(i)}``."""
        out = [None] * self.n
        for i, j in enumerate(self.images):
            out[j - 1] = mu[i]
        return tuple(out)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return _perm(tuple(range(1, n + 1)))


def _perm(images: tuple[int, ...]) -> Permutation:
    # skips validation; internal callers guarantee a permutation
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


def from_cycles(n: int, *cycles: Iterable[int]) -> Permutation:
    """Build a permutation from disjoint cycles, ``(1 2 3)`` meaning 1->2->3->1."""
    im = list(range(1, n + 1))
    for cyc in cycles:
        cyc = list(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            im[a - 1] = b
    return Permutation(tuple(im))


def perm_length(u: Permutation) -> int:
    """Number of inversions."""
    im = u.images
    return sum(1 for a, b in itertools.combinations(im, 2) if a > b)


@dataclass(frozen=True, slots=True)
class AffWeylElt:
    """The element ``t^transl * finite`` of the extended affine Weyl group."""
    transl: tuple[int, ...]
    finite: Permutation

    def __post_init__(self):
        if len(self.transl) != self.finite.n:
            raise WeylError("translation and permutation have different rank")

    @property
    def n(self) -> int:
        return len(self.transl)

    def u_left(self) -> tuple[Permutation, tuple[int, ...]]:
        """Return ``(u, mu)`` with ``self = u * t^mu``."""
        u = self.finite
        lam = self.transl
        return u, tuple(lam[j - 1] for j in u.images)

    def __mul__(self, other: AffWeylElt) -> AffWeylElt:
        return compose(self, other)

    def __str__(self) -> str:
        return format_element(self)


def _elt(transl: tuple[int, ...], finite_: Permutation) -> AffWeylElt:
    e = object.__new__(AffWeylElt)
    object.__setattr__(e, "transl", transl)
    object.__setattr__(e, "finite", finite_)
    return e


def identity(n: int) -> AffWeylElt:
    return _elt((0,) * n, Permutation.identity(n))


def translation(lam: Sequence[int]) -> AffWeylElt:
    lam = tuple(int(x) for x in lam)
    return _elt(lam, Permutation.identity(len(lam)))


def finite(u: Permutation) -> AffWeylElt:
    return _elt((0,) * u.n, u)


def simple_reflection(n: int, i: int) -> AffWeylElt:
    """``s_i = (i i+1)`` for 1 <= i < n; ``s_0 = t^{(1,0,..,0,-1)} (1 n)``."""
    if not 0 <= i < n:
        raise WeylError(f"no simple reflection s_{i} for n={n}")
    if i == 0:
        lam = [0] * n
        lam[0], lam[-1] = 1, -1
        return _elt(tuple(lam), from_cycles(n, (1, n)))
    return finite(from_cycles(n, (i, i + 1)))


def omega_generator(n: int) -> AffWeylElt:
    """The length-zero generator ``t^{(1,0,..,0)} (1 2 .. n)``."""
    lam = (1,) + (0,) * (n - 1)
    return _elt(lam, from_cycles(n, range(1, n + 1)))


def compose(a: AffWeylElt, b: AffWeylElt) -> AffWeylElt:
    if a.n != b.n:
        raise WeylError(f"rank mismatch: {a.n} vs {b.n}")
    ub = a.finite.act(b.transl)
    return _elt(tuple(x + y for x, y in zip(a.transl, ub)), a.finite * b.finite)


def inverse(w: AffWeylElt) -> AffWeylElt:
    uinv = w.finite.inverse()
    return _elt(tuple(-x for x in uinv.act(w.transl)), uinv)


def product(elts: Iterable[AffWeylElt], n: int) -> AffWeylElt:
    out = identity(n)
    for e in elts:
        out = compose(out, e)
    return out


def power(w: AffWeylElt, k: int) -> AffWeylElt:
    base = w if k >= 0 else inverse(w)
    return product(itertools.repeat(base, abs(k)), w.n)


def omega_power(n: int, k: int) -> AffWeylElt:
    return power(omega_generator(n), k)


def length(w: AffWeylElt) -> int:
    """
    Length via the closed form for ``u t^mu``: each positive root
    ``chi_ij`` (i < j) contributes ``|mu_i - mu_j + 1|`` when u sends it
    negative and ``|mu_i - mu_j|`` otherwise.
    """
    u, mu = w.u_left()
    im = u.images
    n = len(mu)
    total = 0
    for i in range(n):
        ui, mi = im[i], mu[i]
        for j in range(i + 1, n):
            d = mi - mu[j]
            if ui > im[j]:
                d += 1
            total += d if d >= 0 else -d
    return total


@dataclass(frozen=True, slots=True)
class AffineRoot:
    """The affine function ``x_i - x_j + k`` (``chi_ij + k delta``)."""
    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i == self.j:
            raise WeylError("affine root needs distinct indices")

    def is_positive(self) -> bool:
        return self.k > 0 or (self.k == 0 and self.i < self.j)


def act_on_affine_root(w: AffWeylElt, alpha: AffineRoot) -> AffineRoot:
    # (w.alpha)(x) = alpha(w^{-1} x)
    u, lam = w.finite, w.transl
    i, j = u(alpha.i), u(alpha.j)
    return AffineRoot(i, j, alpha.k - (lam[i - 1] - lam[j - 1]))


def length_by_inversions(w: AffWeylElt) -> int:
    """Count positive affine roots sent to negative ones (brute force)."""
    n = w.n
    bound = 2 * max((abs(x) for x in w.transl), default=0) + 2
    count = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for k in range(0, bound + 1):
                a = AffineRoot(i, j, k)
                if a.is_positive() and not act_on_affine_root(w, a).is_positive():
                    count += 1
    return count


@dataclass(frozen=True)
class OmegaDecomposition:
    """``w = s_{word[0]} ... s_{word[-1]} * eta^omega_power``."""
    word: tuple[int, ...]
    omega_power: int


def decompose(w: AffWeylElt) -> OmegaDecomposition:
    n = w.n
    word = []
    cur = w
    ell = length(cur)
    while ell > 0:
        for i in range(n):
            nxt = compose(simple_reflection(n, i), cur)
            if length(nxt) < ell:
                break
        else:
            raise RuntimeError(f"no left descent for {format_element(cur)} of length {ell}")
        word.append(i)
        cur = nxt
        ell -= 1
    k = sum(w.transl)
    if cur != omega_power(n, k):
        raise RuntimeError(f"length-zero remainder {format_element(cur)} is not eta^{k}")
    return OmegaDecomposition(tuple(word), k)


def reassemble(d: OmegaDecomposition, n: int) -> AffWeylElt:
    return compose(product((simple_reflection(n, i) for i in d.word), n), omega_power(n, d.omega_power))


def bruhat_leq(x: AffWeylElt, y: AffWeylElt) -> bool:
    """Bruhat order: same Omega-component, then the lifting property on W_a."""
    if x.n != y.n:
        raise WeylError("rank mismatch")
    if sum(x.transl) != sum(y.transl):
        return False
    n = x.n
    lx, ly = length(x), length(y)
    while True:
        if lx > ly:
            return False
        if ly == 0 or lx == ly:
            return x == y
        for i in range(n):
            s = simple_reflection(n, i)
            sy = compose(s, y)
            if length(sy) < ly:
                break
        else:
            raise RuntimeError("no left descent")
        y, ly = sy, ly - 1
        sx = compose(s, x)
        lsx = length(sx)
        if lsx < lx:
            x, lx = sx, lsx


def _subword_products(w: AffWeylElt) -> set[AffWeylElt]:
    d = decompose(w)
    n = w.n
    refl = [simple_reflection(n, i) for i in d.word]
    tail = omega_power(n, d.omega_power)
    out = set()
    for mask in itertools.product((False, True), repeat=len(refl)):
        out.add(compose(product((r for r, keep in zip(refl, mask) if keep), n), tail))
    return out


def bruhat_leq_subwords(x: AffWeylElt, y: AffWeylElt) -> bool:
    """Reference check: x is a subword product of a reduced word of y."""
    return x in _subword_products(y)


def support(u: Permutation) -> frozenset[int]:
    """Indices i with s_i in a reduced word of u: those where u does not fix {1..i}."""
    im = u.images
    out = set()
    running_max = 0
    for i in range(1, u.n):
        running_max = max(running_max, im[i - 1])
        if running_max != i:
            out.add(i)
    return frozenset(out)


def is_coxeter(u: Permutation) -> bool:
    """Length n-1 with full support; the identity counts as Coxeter only for n = 1."""
    n = u.n
    return perm_length(u) == n - 1 and support(u) == frozenset(range(1, n))


_ELT_RE = re.compile(r"^\s*t\[([^\]]*)\]\s*\*\s*p\[([^\]]*)\]\s*$")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def parse_element(text: str) -> AffWeylElt:
    """Parse ``t[l1,..,ln]*p[u(1),..,u(n)]``."""
    m = _ELT_RE.match(text)
    if not m:
        raise WeylError(f"cannot parse element: {text!r}")
    try:
        lam, im = _ints(m.group(1)), _ints(m.group(2))
    except ValueError as exc:
        raise WeylError(f"cannot parse element: {text!r}") from exc
    return AffWeylElt(lam, Permutation(im))


def format_element(w: AffWeylElt) -> str:
    return "t[{}]*p[{}]".format(",".join(map(str, w.transl)), ",".join(map(str, w.finite.images)))


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield _perm(p)
