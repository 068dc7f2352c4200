import random

from hypothesis import settings, strategies as st

from awlab.admissible import FamilyParams, cyclic, make_family
from awlab.weyl import AffWeylElt, Permutation, product, simple_reflection

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# (n, r, kappa) with kappa, r in {0, 1} and (r, kappa) != (0, 0)
GRID = [(n, r, k) for n in (2, 3, 4, 5) for r in (0, 1) for k in (0, 1) if (r, k) != (0, 0)]


def srefl(n, *idx):
    """s_{i1} s_{i2} ... as an element of the extended affine Weyl group."""
    return product([simple_reflection(n, i) for i in idx], n)


def sfin(n, *idx):
    return srefl(n, *idx).finite


def family(n, i, r, k):
    return make_family(FamilyParams(n, i, r, k))


def tau(n):
    return cyclic(n, *range(1, n + 1))


def c_perm(n, j):
    """(1 2 .. j n n-1 .. j+1)"""
    return cyclic(n, *(list(range(1, j + 1)) + list(range(n, j, -1))))


def twisted(w0: Permutation, lam):
    """w0 phi^{w0^-1 lam}, which is t^lam w0 in translation-left form."""
    return AffWeylElt(tuple(lam), w0)


def random_element(rng: random.Random, n: int, bound: int) -> AffWeylElt:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return AffWeylElt(tuple(rng.randint(-bound, bound) for _ in range(n)), Permutation(tuple(images)))


@st.composite
def elements(draw, n=None, min_n=1, max_n=5, bound=3):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    lam = draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n))
    images = draw(st.permutations(list(range(1, n + 1))))
    return AffWeylElt(tuple(lam), Permutation(tuple(images)))


@st.composite
def dominant(draw, n=None, min_n=1, max_n=4, bound=3):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    lam = draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n))
    return tuple(sorted(lam, reverse=True))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
