"""Moment graph of the torus action: cut-and-paste moves, characters, posets.

Vertices are the fixed points (as tail-length vectors).  A cut-and-paste move
shortens one chain tail and lengthens another by the same amount; it is
admissible when the transferred entries sit pairwise at the same vertices.
Each admissible move carries a constant index offset d between the added and
removed basis vectors; the one-parameter orbit it describes degenerates onto
the endpoint that keeps the removed vectors, so the edge leaves that endpoint
exactly when d > 0.  The edge label is the weight difference of the matched
basis vectors: eps(recipient) - eps(donor) + d * delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import InstanceError, ParahoricData, VerificationError, chains
from .fixedpoints import (
    LVector,
    Pattern,
    _check_lvector,
    all_patterns,
    enumerate_fixed_points,
)


@dataclass(frozen=True)
class Move:
    donor: int
    recipient: int
    amount: int


@dataclass(frozen=True)
class Character:
    """An edge label: integer vector over eps_1..eps_n plus a delta coefficient."""

    eps: tuple[int, ...]
    delta: int

    @classmethod
    def from_labels(cls, n: int, plus: int, minus: int, delta: int) -> "Character":
        eps = [0] * n
        eps[plus - 1] += 1
        eps[minus - 1] -= 1
        return cls(tuple(eps), delta)

    def render(self) -> str:
        parts = []
        for idx, c in enumerate(self.eps, start=1):
            if c > 0:
                parts.append(f"+e{idx}" if c == 1 else f"+{c}e{idx}")
        for idx, c in enumerate(self.eps, start=1):
            if c < 0:
                parts.append(f"-e{idx}" if c == -1 else f"{c}e{idx}")
        parts.append(f"{self.delta:+d}d")
        return " ".join(parts)


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    move: Move
    character: Character
    offset: int


@dataclass(eq=False)
class MomentGraph:
    P: ParahoricData
    vertices: tuple[LVector, ...]
    patterns: tuple[Pattern, ...]
    edges: tuple[Edge, ...]

    def vertex_index(self, ell: LVector) -> int:
        return self._index[ell]

    def __post_init__(self):
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            deg[e.source] += 1
        return deg


def admissible_moves(
    P: ParahoricData, ell: LVector
) -> list[tuple[Move, LVector, int]]:
    """All admissible cut-and-paste moves out of a fixed point.

    A move (i, j, q) takes q entries from the tail of chain i and appends q
    entries to the tail of chain j; it is admissible when the m-th removed
    and m-th added entries share a vertex for every m.  Returns the move, the
    resulting tail-length vector, and the constant index offset d (added
    index minus removed index), which is never zero.
    """
    _check_lvector(P, ell)
    chs = chains(P)
    L, r = P.L, P.r
    ends = [c.end_vertex for c in chs]
    out: list[tuple[Move, LVector, int]] = []
    for i in range(1, P.n + 1):
        li = ell[i - 1]
        if li == 0:
            continue
        for j in range(1, P.n + 1):
            if j == i:
                continue
            lj = ell[j - 1]
            qmax = min(li, L - lj)
            if qmax < 1:
                continue
            # vertex alignment fixes the amount modulo r
            q0 = ((ends[j - 1] - lj) - (ends[i - 1] - li)) % r
            if q0 == 0:
                q0 = r
            for q in range(q0, qmax + 1, r):
                d = None
                for mm in range(q):
                    vr, tr = chs[i - 1].entries[L - li + mm]
                    va, ta = chs[j - 1].entries[L - lj - q + mm]
                    if vr != va:
                        raise VerificationError(
                            "vertex alignment violated inside an admissible move"
                        )
                    if d is None:
                        d = ta - tr
                    elif ta - tr != d:
                        raise VerificationError("index offset varies along a move")
                if d == 0:
                    raise VerificationError("admissible move with zero index offset")
                target = list(ell)
                target[i - 1] = li - q
                target[j - 1] = lj + q
                out.append((Move(i, j, q), tuple(target), d))
    return out


@lru_cache(maxsize=None)
def build_graph(P: ParahoricData) -> MomentGraph:
    """The moment graph: one oriented edge per one-parameter orbit.

    Every admissible move is seen twice, once from each endpoint with
    opposite offsets; keeping the positive-offset side records each orbit
    exactly once, oriented away from its attracting limit.
    """
    pairs = enumerate_fixed_points(P)
    verts = tuple(ell for ell, _ in pairs)
    pats = tuple(J for _, J in pairs)
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for si, ell in enumerate(verts):
        for move, target, d in admissible_moves(P, ell):
            if d <= 0:
                continue
            ti = index.get(target)
            if ti is None:
                raise VerificationError("move target escapes the fixed-point set")
            character = Character.from_labels(
                P.n, plus=move.recipient, minus=move.donor, delta=d
            )
            edges.append(Edge(si, ti, move, character, d))
    return MomentGraph(P, verts, pats, tuple(edges))


@dataclass(eq=False)
class PartialOrder:
    """A partial order on an indexed vertex tuple, stored as down-set bitmasks."""

    vertices: tuple
    below: tuple[int, ...]

    def __post_init__(self):
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def index(self, v) -> int:
        return self._index[v]

    def leq(self, a, b) -> bool:
        """Whether a <= b."""
        return bool(self.below[self._index[b]] >> self._index[a] & 1)

    def down_set(self, v) -> tuple:
        mask = self.below[self._index[v]]
        return tuple(w for i, w in enumerate(self.vertices) if mask >> i & 1)

    def same_relation(self, other: "PartialOrder") -> bool:
        return len(self.vertices) == len(other.vertices) and self.below == other.below


def reachability_order(G: MomentGraph) -> PartialOrder:
    """Reflexive-transitive closure of the moment-graph edges (a directed cycle aborts)."""
    nv = len(G.vertices)
    children: list[list[int]] = [[] for _ in range(nv)]
    for e in G.edges:
        children[e.source].append(e.target)
    below = [0] * nv
    state = [0] * nv  # 0 unseen, 1 on stack, 2 done
    for root in range(nv):
        if state[root] == 2:
            continue
        state[root] = 1
        stack = [(root, 0)]
        while stack:
            node, ptr = stack.pop()
            kids = children[node]
            while ptr < len(kids) and state[kids[ptr]] == 2:
                ptr += 1
            if ptr == len(kids):
                mask = 1 << node
                for ch in kids:
                    mask |= below[ch]
                below[node] = mask
                state[node] = 2
            else:
                child = kids[ptr]
                if state[child] == 1:
                    raise VerificationError("moment graph contains a directed cycle")
                stack.append((node, ptr))
                state[child] = 1
                stack.append((child, 0))
    return PartialOrder(G.vertices, tuple(below))


@lru_cache(maxsize=None)
def dominance_order(P: ParahoricData) -> PartialOrder:
    """Componentwise comparison of sorted index sets, per vertex.

    J' <= J when every sorted entry of J' is at least the corresponding entry
    of J.  Computed with per-position threshold masks, so the cost is linear
    in vertices times key length rather than quadratic in vertices.
    """
    pats = all_patterns(P)
    nv = len(pats)
    keys = [tuple(x for comp in J for x in comp) for J in pats]
    full = (1 << nv) - 1
    below = [full] * nv
    npos = len(keys[0]) if nv else 0
    for p in range(npos):
        geq = [0] * (P.m + 2)
        for idx, key in enumerate(keys):
            geq[key[p]] |= 1 << idx
        for v in range(P.m, 0, -1):
            geq[v] |= geq[v + 1]
        for idx, key in enumerate(keys):
            below[idx] &= geq[key[p]]
    return PartialOrder(pats, tuple(below))


def cell_closure(P: ParahoricData, J: Pattern) -> tuple[Pattern, ...]:
    """All patterns below J in the dominance order (the fixed points of the cell closure)."""
    order = dominance_order(P)
    try:
        i = order.index(J)
    except KeyError:
        raise InstanceError("pattern is not a fixed point of the instance") from None
    mask = order.below[i]
    return tuple(w for idx, w in enumerate(order.vertices) if mask >> idx & 1)
