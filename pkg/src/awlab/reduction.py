"""
Deligne-Lusztig reduction on the extended affine Weyl group, as a rewriting
system with dimension bookkeeping.

Moves on w:
  OmegaConj(k)        w -> eta^k w eta^-k            (isomorphism)
  SimpleConjEqual(s)  w -> s w s, l(sws) = l(w)       (isomorphism)
  SplitClosed(s)      w -> s w s, l(sws) = l(w) - 2   (A^1-bundle piece)
  SplitOpen(s)        w -> s w,   l(sws) = l(w) - 2   (G_m-bundle piece)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .alcove import BasicClass
from .emptiness import GuardError, nonempty_basic
from .weyl import (
    AffWeylElt, compose, format_element, inverse, length,
    omega_generator, simple_reflection, support,
)

__all__ = [
    "MoveClass", "ReductionMove", "ReductionGraph", "NodeInfo", "SearchDepthExceeded",
    "InconsistencyError", "classify_move", "conj_by", "approx_equiv", "reaches",
    "reduction_graph", "export_dot", "graph_json", "descend_to_minimal",
    "stable_subset", "minimal_form_witness",
]


class MoveClass(Enum):
    EQUAL = "Equal"
    SPLIT = "Split"
    RAISE = "Raise"


class SearchDepthExceeded(RuntimeError):
    pass


class InconsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class ReductionMove:
    kind: str  # OmegaConj | SimpleConjEqual | SplitClosed | SplitOpen
    arg: int   # omega power or simple reflection index

    def label(self) -> str:
        sym = "eta^" if self.kind == "OmegaConj" else "s"
        return f"{self.kind}({sym}{self.arg})"


def conj_by(w: AffWeylElt, g: AffWeylElt) -> AffWeylElt:
    """g w g^-1 (Frobenius acts trivially on the Weyl group of split GL_n)."""
    return compose(compose(g, w), inverse(g))


def classify_move(w: AffWeylElt, s: int) -> MoveClass:
    r = simple_reflection(w.n, s)
    d = length(conj_by(w, r)) - length(w)
    if d == 0:
        return MoveClass.EQUAL
    if d == -2:
        return MoveClass.SPLIT
    return MoveClass.RAISE


def _neighbours(w: AffWeylElt, allow_affine: bool, allow_omega: bool):
    n = w.n
    start = 0 if allow_affine else 1
    for i in range(start, n):
        yield ReductionMove("SimpleConjEqual", i), conj_by(w, simple_reflection(n, i))
    if allow_omega:
        eta = omega_generator(n)
        yield ReductionMove("OmegaConj", 1), conj_by(w, eta)
        yield ReductionMove("OmegaConj", -1), conj_by(w, inverse(eta))


def approx_equiv(w: AffWeylElt, w2: AffWeylElt, max_depth: Optional[int] = None,
                 allow_omega: bool = False) -> Optional[list[ReductionMove]]:
    """
    A chain of length-preserving conjugations by S carrying w to w2, or None
    when the equal-length component of w is exhausted without meeting w2.
    With equal lengths at both ends, the same chain reversed gives w2 -> w.
    """
    ell = length(w)
    if length(w2) != ell:
        return None
    if max_depth is None:
        max_depth = 2 * ell
    parent: dict[AffWeylElt, tuple[AffWeylElt, ReductionMove] | None] = {w: None}
    frontier = [w]
    depth = 0
    while frontier:
        if w2 in parent:
            break
        if depth == max_depth:
            raise SearchDepthExceeded(f"no path within depth {max_depth}")
        nxt = []
        for x in frontier:
            for mv, y in _neighbours(x, allow_affine=False, allow_omega=allow_omega):
                if y not in parent and length(y) == ell:
                    parent[y] = (x, mv)
                    nxt.append(y)
        frontier = nxt
        depth += 1
    if w2 not in parent:
        return None
    path = []
    cur = w2
    while parent[cur] is not None:
        prev, mv = parent[cur]
        path.append(mv)
        cur = prev
    return path[::-1]


def reaches(w: AffWeylElt, w2: AffWeylElt, max_steps: int = 10_000) -> bool:
    """w -> w2: conjugation by S never increasing the length."""
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        if x == w2:
            return True
        lx = length(x)
        for _, y in _neighbours(x, allow_affine=False, allow_omega=False):
            if y not in seen and length(y) <= lx:
                seen.add(y)
                queue.append(y)
                if len(seen) > max_steps:
                    raise SearchDepthExceeded(f"-> search exceeded {max_steps} elements")
    return False


def descend_to_minimal(w: AffWeylElt, max_steps: int = 10_000) -> AffWeylElt:
    """
    Follow length-non-increasing conjugations by S-tilde and Omega until no
    element of the equal-length component admits a strict decrease.
    """
    cur = w
    while True:
        ell = length(cur)
        seen = {cur}
        queue = deque([cur])
        lower = None
        while queue and lower is None:
            x = queue.popleft()
            for _, y in _neighbours(x, allow_affine=True, allow_omega=True):
                ly = length(y)
                if ly < ell:
                    lower = y
                    break
                if ly == ell and y not in seen:
                    seen.add(y)
                    queue.append(y)
                    if len(seen) > max_steps:
                        raise SearchDepthExceeded("equal-length component too large")
        if lower is None:
            return cur
        cur = lower


def stable_subset(w: AffWeylElt) -> frozenset[int]:
    """Largest S' in S with w S' w^-1 = S' (as a set of group elements)."""
    n = w.n
    refl = {i: simple_reflection(n, i) for i in range(1, n)}
    lookup = {v: k for k, v in refl.items()}
    cur = set(refl)
    changed = True
    while changed:
        changed = False
        for i in sorted(cur):
            img = lookup.get(conj_by(refl[i], w))
            if img is None or img not in cur:
                cur.discard(i)
                changed = True
    return frozenset(cur)


def minimal_form_witness(w: AffWeylElt, max_steps: int = 10_000):
    """
    Search w -> v w' with w' a minimal coset representative and v in the
    parabolic W_{S_{w'}}.  Returns (v, w') or None.
    """
    from .admissible import is_min_coset_rep, min_coset_rep

    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        wp = min_coset_rep(x)
        v = compose(x, inverse(wp))
        assert not any(v.transl)
        if is_min_coset_rep(wp) and support(v.finite) <= stable_subset(wp):
            return v.finite, wp
        lx = length(x)
        for _, y in _neighbours(x, allow_affine=False, allow_omega=False):
            if y not in seen and length(y) <= lx:
                seen.add(y)
                queue.append(y)
                if len(seen) > max_steps:
                    raise SearchDepthExceeded("-> search too large")
    return None


@dataclass
class NodeInfo:
    length: int
    nonempty: bool
    dimension: Optional[int] = None
    status: str = "unresolved"  # resolved | empty | unresolved


@dataclass
class ReductionGraph:
    n: int
    kappa: int
    root: Optional[AffWeylElt] = None
    nodes: dict[AffWeylElt, NodeInfo] = field(default_factory=dict)
    edges: list[tuple[AffWeylElt, AffWeylElt, ReductionMove]] = field(default_factory=list)

    def root_info(self) -> Optional[NodeInfo]:
        return self.nodes.get(self.root) if self.root is not None else None

    def children(self, w: AffWeylElt) -> list[tuple[AffWeylElt, ReductionMove]]:
        return [(d, m) for s, d, m in self.edges if s == w]


def _equal_length_search(w: AffWeylElt, depth: int, known: dict):
    """
    BFS over length-preserving conjugations (S-tilde and Omega) for an element
    admitting a Split, or an already-built node.  Returns (path, target, split_s).
    """
    n = w.n
    ell = length(w)
    parent = {w: None}
    frontier = [w]
    for _ in range(depth + 1):
        nxt = []
        for x in frontier:
            if x is not w and x in known:
                return _unwind(parent, x), x, None
            for s in range(n):
                if classify_move(x, s) is MoveClass.SPLIT:
                    return _unwind(parent, x), x, s
            for mv, y in _neighbours(x, allow_affine=True, allow_omega=True):
                if y not in parent and length(y) == ell:
                    parent[y] = (x, mv)
                    nxt.append(y)
        if not nxt:
            return None
        frontier = nxt
    raise SearchDepthExceeded(f"equal-length search from {format_element(w)} exceeded depth {depth}")


def _unwind(parent, x):
    path = []
    while parent[x] is not None:
        prev, mv = parent[x]
        path.append((prev, x, mv))
        x = prev
    return path[::-1]


def reduction_graph(w: AffWeylElt, b: BasicClass, depth: Optional[int] = None,
                    max_nodes: int = 5000) -> ReductionGraph:
    """
    Reduction tree of X_w(b).  A nonempty length-0 node has dimension 0; a
    Split node has dimension 1 + max over its nonempty children; equal-length
    moves carry dimension across.  Positive-length nodes with no Split reachable
    stay unresolved.
    """
    g = ReductionGraph(w.n, b.kappa)
    if sum(w.transl) != b.kappa:
        return g
    g.root = w
    ell0 = length(w)
    if depth is None:
        depth = 2 * ell0 + 2

    def build(x: AffWeylElt) -> NodeInfo:
        if x in g.nodes:
            return g.nodes[x]
        if len(g.nodes) >= max_nodes:
            raise GuardError(f"reduction graph exceeded {max_nodes} nodes")
        lx = length(x)
        info = NodeInfo(lx, nonempty_basic(x, b))
        g.nodes[x] = info
        if not info.nonempty:
            info.status = "empty"
            return info
        if lx == 0:
            info.dimension, info.status = 0, "resolved"
            return info
        found = _equal_length_search(x, depth, g.nodes)
        if found is None:
            return info
        path, target, s = found
        for src, dst, mv in path:
            g.edges.append((src, dst, mv))
        for _, dst, _ in path:
            if dst not in g.nodes:
                if nonempty_basic(dst, b) != info.nonempty:
                    raise InconsistencyError(f"conjugation changed the verdict at {format_element(dst)}")
                g.nodes[dst] = info  # isomorphic strata share one record
        if s is None:
            # met a node built earlier at this length
            tinfo = g.nodes[target]
            if tinfo.nonempty != info.nonempty:
                raise InconsistencyError(f"conjugation changed the verdict at {format_element(x)}")
            info.dimension, info.status = tinfo.dimension, tinfo.status
            return info
        r = simple_reflection(x.n, s)
        closed, opened = conj_by(target, r), compose(r, target)
        g.edges.append((target, closed, ReductionMove("SplitClosed", s)))
        g.edges.append((target, opened, ReductionMove("SplitOpen", s)))
        kids = [build(closed), build(opened)]
        live = [k for k in kids if k.nonempty]
        if not live:
            raise InconsistencyError(f"{format_element(x)} judged nonempty but both reductions are empty")
        if any(k.status == "unresolved" for k in live):
            return info
        info.dimension = 1 + max(k.dimension for k in live)
        info.status = "resolved"
        return info

    build(w)
    return g


def graph_json(g: ReductionGraph) -> dict:
    def node(w, info):
        return {"element": format_element(w), "length": info.length, "nonempty": info.nonempty,
                "dimension": info.dimension, "status": info.status}
    return {
        "n": g.n,
        "kappa": g.kappa,
        "root": format_element(g.root) if g.root is not None else None,
        "nodes": [node(w, i) for w, i in g.nodes.items()],
        "edges": [{"source": format_element(s), "target": format_element(d), "move": m.label()}
                  for s, d, m in g.edges],
    }


def export_dot(g: ReductionGraph) -> str:
    if not g.nodes:
        return "digraph{}\n"
    ids = {w: f"n{k}" for k, w in enumerate(g.nodes)}
    lines = ["digraph reduction {", "  node [shape=box, fontname=monospace];"]
    for w, info in g.nodes.items():
        verdict = "nonempty" if info.nonempty else "empty"
        dim = "?" if info.dimension is None else str(info.dimension)
        label = f"{format_element(w)}\\nl={info.length} {verdict} dim={dim}"
        lines.append(f'  {ids[w]} [label="{label}"];')
    for s, d, m in g.edges:
        lines.append(f'  {ids[s]} -> {ids[d]} [label="{m.label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
