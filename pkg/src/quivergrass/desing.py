"""Extended-quiver desingularization: level functor, fixed points, tangent spaces.

The extended quiver replaces each vertex i by a column of levels (i, j),
j = 1..L, with level-raising arrows a: (i,j) -> (i,j+1) acting by the ambient
shift and inclusion arrows b: (i,j) -> (i+1,j-1) acting by the identity.  The
level functor sends a representation to the images of its composed maps; for
coordinate representations the level-(i,j) space is spanned by the chain
entries of depth at least j sitting at vertex i+j-1, so every computation
here stays basis aligned.

A coordinate subrepresentation upstairs is the same thing as an assignment of
a level count m(e) <= depth(e) to every chain entry such that m grows by at
least one along each chain step once it is positive.  Fixed points are
enumerated chain by chain over these level profiles.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .core import InstanceError, ParahoricData, VerificationError, chains, cyc
from .fixedpoints import Pattern, from_lvector, to_lvector
from .geometry import component_top_pattern, is_component_index
from .oracle import (
    Arrow,
    BasisRep,
    BudgetExceededError,
    ambient_basis_rep,
    end_space_dim,
    hom_space_dim,
    quotient_rep,
    subrep_rep,
)

HatVertex = tuple[int, int]

DEFAULT_HAT_BUDGET = 5_000_000


def hat_vertices(P: ParahoricData) -> tuple[HatVertex, ...]:
    return tuple((i, j) for i in range(1, P.r + 1) for j in range(1, P.L + 1))


@lru_cache(maxsize=None)
def _entry_vertex(P: ParahoricData) -> dict[tuple[int, int], int]:
    """Vertex of each chain entry, keyed by (chain label, depth)."""
    return {
        (c.label, d): v
        for c in chains(P)
        for d, (v, _t) in enumerate(c.entries, start=1)
    }


@lru_cache(maxsize=None)
def build_hat_ambient(P: ParahoricData) -> BasisRep:
    """Image of the ambient under the level functor, with basis (label, depth).

    Level (i, j) hosts the entries of depth at least j at vertex i+j-1; the
    a-arrows advance entries along their chain and the b-arrows include a
    level into the previous one at the next column.
    """
    L, r = P.L, P.r
    vert = _entry_vertex(P)
    basis: dict[HatVertex, tuple] = {}
    for i in range(1, r + 1):
        for j in range(1, L + 1):
            v = cyc(i + j - 1, r)
            basis[(i, j)] = tuple(
                sorted(e for e, ve in vert.items() if ve == v and e[1] >= j)
            )
    arrows = []
    for i in range(1, r + 1):
        for j in range(1, L):
            images = {
                (c, d): (c, d + 1) for (c, d) in basis[(i, j)] if d + 1 <= L
            }
            arrows.append(Arrow((i, j), (i, j + 1), images))
    for i in range(1, r + 1):
        for j in range(2, L + 1):
            arrows.append(
                Arrow((i, j), (cyc(i + 1, r), j - 1), {e: e for e in basis[(i, j)]})
            )
    return BasisRep(hat_vertices(P), basis, tuple(arrows))


@dataclass(frozen=True)
class HatPoint:
    """A coordinate subrepresentation upstairs, as level profiles per chain.

    levels[c-1][d-1] is how many levels the depth-d entry of the chain
    labeled c occupies (0 when absent).
    """

    levels: tuple[tuple[int, ...], ...]


def _check_point(P: ParahoricData, point: HatPoint) -> None:
    if len(point.levels) != P.n:
        raise InstanceError("level profile must have one row per chain")
    for row in point.levels:
        if len(row) != P.L:
            raise InstanceError("level profile rows must have one entry per depth")
        prev = 0
        for d, mval in enumerate(row, start=1):
            if not 0 <= mval <= d:
                raise InstanceError("level count exceeds entry depth")
            if prev >= 1 and mval < prev + 1:
                raise InstanceError("level counts must grow along the chain")
            prev = mval


def point_subsets(P: ParahoricData, point: HatPoint) -> dict[HatVertex, tuple]:
    """Per-level basis subsets of a hat point (keys cover all levels)."""
    vert = _entry_vertex(P)
    sets: dict[HatVertex, list] = {hv: [] for hv in hat_vertices(P)}
    for c, row in enumerate(point.levels, start=1):
        for d, mval in enumerate(row, start=1):
            v = vert[(c, d)]
            for j in range(1, mval + 1):
                sets[(cyc(v - j + 1, P.r), j)].append((c, d))
    return {hv: tuple(sorted(entries)) for hv, entries in sets.items()}


def point_dims(P: ParahoricData, point: HatPoint) -> dict[HatVertex, int]:
    return {hv: len(entries) for hv, entries in point_subsets(P, point).items()}


def canonical_point(P: ParahoricData, ell) -> HatPoint:
    """The image of the tail selection ell under the level functor.

    The depth-d entry of a chain with tail length l carries level count
    d - (L - l) where positive: its depth inside the tail.
    """
    L = P.L
    levels = tuple(
        tuple(max(0, d - (L - l)) for d in range(1, L + 1)) for l in ell
    )
    return HatPoint(levels)


def hat_dim_vector(P: ParahoricData, I) -> dict[HatVertex, int]:
    """Dimension vector upstairs of the top fixed point of component I."""
    I = tuple(sorted(int(i) for i in I))
    if not is_component_index(P, I):
        raise InstanceError("I does not satisfy the component condition")
    top = component_top_pattern(P, I)
    return point_dims(P, canonical_point(P, to_lvector(P, top)))


@lru_cache(maxsize=None)
def _level_profiles(L: int) -> tuple[tuple[int, ...], ...]:
    """All valid level rows of length L, in lexicographic order."""
    rows: list[tuple[int, ...]] = []

    def go(pos: int, prev: int, acc: list[int]) -> None:
        if pos > L:
            rows.append(tuple(acc))
            return
        choices = range(0, pos + 1) if prev == 0 else range(prev + 1, pos + 1)
        for mval in choices:
            acc.append(mval)
            go(pos + 1, mval, acc)
            acc.pop()

    go(1, 0, [])
    return tuple(rows)


def hat_fixed_points(
    P: ParahoricData, I, budget: int = DEFAULT_HAT_BUDGET
) -> tuple[HatPoint, ...]:
    """All fixed points upstairs over component I, in lexicographic profile order.

    Searches level profiles chain by chain against the target dimension
    vector, pruning on partial sums and on the maximal remaining
    contribution.  The number of explored nodes is capped by the budget.
    """
    target_dict = hat_dim_vector(P, I)
    hvs = hat_vertices(P)
    hv_index = {hv: i for i, hv in enumerate(hvs)}
    target = [target_dict[hv] for hv in hvs]
    nhv = len(hvs)
    vert = _entry_vertex(P)
    profiles = _level_profiles(P.L)

    def contribution(c: int, row: tuple[int, ...]) -> list[int]:
        out = [0] * nhv
        for d, mval in enumerate(row, start=1):
            v = vert[(c, d)]
            for j in range(1, mval + 1):
                out[hv_index[(cyc(v - j + 1, P.r), j)]] += 1
        return out

    per_chain = [
        [(row, contribution(c, row)) for row in profiles] for c in range(1, P.n + 1)
    ]
    suffix_max = [[0] * nhv for _ in range(P.n + 1)]
    for c in range(P.n - 1, -1, -1):
        full = per_chain[c][-1][1]  # the profile (1, 2, ..., L) dominates all others
        suffix_max[c] = [a + b for a, b in zip(full, suffix_max[c + 1])]

    current = [0] * nhv
    found: list[HatPoint] = []
    nodes = 0

    def dfs(c: int, acc: list[tuple[int, ...]]) -> None:
        nonlocal nodes
        if c == P.n:
            if current == target:
                found.append(HatPoint(tuple(acc)))
            return
        rest = suffix_max[c + 1]
        for row, contrib in per_chain[c]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"hat fixed-point search exceeded {budget} nodes"
                )
            feasible = True
            for idx in range(nhv):
                nv = current[idx] + contrib[idx]
                if nv > target[idx] or nv + rest[idx] < target[idx]:
                    feasible = False
                    break
            if not feasible:
                continue
            for idx in range(nhv):
                current[idx] += contrib[idx]
            acc.append(row)
            dfs(c + 1, acc)
            acc.pop()
            for idx in range(nhv):
                current[idx] -= contrib[idx]

    dfs(0, [])
    return tuple(found)


def restrict_point(P: ParahoricData, point: HatPoint) -> Pattern:
    """Level-one content of a hat point: a fixed point downstairs.

    Entries with a positive level count form a suffix of each chain, so the
    result is the tail selection with those lengths.
    """
    _check_point(P, point)
    ell = tuple(sum(1 for mval in row if mval >= 1) for row in point.levels)
    return from_lvector(P, ell)


def tangent_dim(ambient: BasisRep, sub: dict) -> int:
    """Dimension of Hom(V, M/V) for a coordinate subrepresentation V of M."""
    return hom_space_dim(subrep_rep(ambient, sub), quotient_rep(ambient, sub))


def pattern_tangent_dim(P: ParahoricData, J: Pattern) -> int:
    """Tangent-space dimension at a fixed point downstairs."""
    sub = {i: J[i - 1] for i in range(1, P.r + 1)}
    return tangent_dim(ambient_basis_rep(P), sub)


def hat_point_tangent_dim(P: ParahoricData, point: HatPoint) -> int:
    """Tangent-space dimension at a fixed point upstairs."""
    return tangent_dim(build_hat_ambient(P), point_subsets(P, point))


def hat_aut_dim_oracle(P: ParahoricData) -> int:
    """Endomorphism dimension of the extended ambient (equals the base value)."""
    return end_space_dim(build_hat_ambient(P))


def project_hat(P: ParahoricData, s_prime, point: HatPoint) -> HatPoint:
    """Pushforward of a hat point to the instance over a subset of S.

    Chains restrict to the kept vertices; the new level count of a kept entry
    counts the kept entries among the m consecutive chain positions ending at
    it, where m is its old level count.
    """
    _check_point(P, point)
    Pp = P.restrict(s_prime)
    keep = Pp.S_set
    new_levels = []
    for c, chain in enumerate(chains(P), start=1):
        kept_positions = [
            pos
            for pos, (v, _t) in enumerate(chain.entries, start=1)
            if P.S[v - 1] in keep
        ]
        if len(kept_positions) != Pp.L:
            raise VerificationError("chain restriction has the wrong length")
        row = point.levels[c - 1]
        new_row = []
        for rank, pos in enumerate(kept_positions, start=1):
            mval = row[pos - 1]
            inside = rank - bisect_right(kept_positions, pos - mval)
            new_row.append(inside)
        new_levels.append(tuple(new_row))
    result = HatPoint(tuple(new_levels))
    _check_point(Pp, result)
    return result
