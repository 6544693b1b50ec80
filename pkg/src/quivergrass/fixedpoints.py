"""Torus fixed points in two combinatorial models, energies and cell data.

A fixed point is a juggling pattern: one index set per vertex, compatible
with the shift maps.  Equivalently it is a vector of tail lengths, one per
chain, whose per-vertex dimension counts add up to k*omega everywhere.
Enumeration goes through tail-length vectors (at most (omega*r + 1)^n
candidates with heavy pruning); searching index subsets directly survives in
the oracle module as the independent cross-check.
"""

from __future__ import annotations

from functools import lru_cache

from .core import (
    InstanceError,
    ParahoricData,
    chains,
    cyc,
    indec_dim_vector,
)

Pattern = tuple[tuple[int, ...], ...]
LVector = tuple[int, ...]


def _check_pattern_shape(P: ParahoricData, J) -> None:
    kw = P.k * P.omega
    if not isinstance(J, tuple) or len(J) != P.r:
        raise InstanceError(f"pattern must have {P.r} components")
    for comp in J:
        if not isinstance(comp, tuple) or len(comp) != kw:
            raise InstanceError(f"each component must list {kw} indices")
        if list(comp) != sorted(set(comp)):
            raise InstanceError("components must be sorted tuples of distinct indices")
        if comp and not (1 <= comp[0] and comp[-1] <= P.m):
            raise InstanceError(f"indices must lie in [1, {P.m}]")


def _check_lvector(P: ParahoricData, ell) -> None:
    if not isinstance(ell, tuple) or len(ell) != P.n:
        raise InstanceError(f"tail-length vector must have {P.n} entries")
    if not all(isinstance(x, int) and 0 <= x <= P.L for x in ell):
        raise InstanceError(f"tail lengths must lie in [0, {P.L}]")


def validate_pattern(P: ParahoricData, J: Pattern) -> bool:
    """Whether the index sets are compatible with every shift map.

    Malformed input (wrong arity or cardinality) raises; only the shift
    condition itself yields False.
    """
    _check_pattern_shape(P, J)
    m = P.m
    for i in range(P.r):
        q = P.gaps[i]
        nxt = set(J[(i + 1) % P.r])
        if any(x + q not in nxt for x in J[i] if x + q <= m):
            return False
    return True


def lvector_dims(P: ParahoricData, ell: LVector) -> tuple[int, ...]:
    """Summed dimension vector of the chain tails selected by ell."""
    chs = chains(P)
    total = [0] * P.r
    for c, l in zip(chs, ell):
        for v, x in enumerate(indec_dim_vector(c.end_vertex, l, P.r)):
            total[v] += x
    return tuple(total)


def from_lvector(P: ParahoricData, ell: LVector) -> Pattern:
    """The juggling pattern collecting, per vertex, the indices of all tails."""
    _check_lvector(P, ell)
    kw = P.k * P.omega
    if lvector_dims(P, ell) != (kw,) * P.r:
        raise InstanceError("tail lengths violate the dimension condition")
    sets: list[list[int]] = [[] for _ in range(P.r)]
    for c, l in zip(chains(P), ell):
        for v, t in c.entries[P.L - l:]:
            sets[v - 1].append(t)
    return tuple(tuple(sorted(s)) for s in sets)


def to_lvector(P: ParahoricData, J: Pattern) -> LVector:
    """Tail lengths of a fixed point, one per chain label."""
    _check_pattern_shape(P, J)
    members = [frozenset(comp) for comp in J]
    out = []
    for c in chains(P):
        flags = [t in members[v - 1] for v, t in c.entries]
        l = sum(flags)
        if not all(flags[P.L - l:]):
            raise InstanceError("pattern does not restrict to chain tails")
        out.append(l)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_fixed_points(P: ParahoricData) -> tuple[tuple[LVector, Pattern], ...]:
    """All fixed points as (tail-length vector, pattern) pairs, sorted by pattern."""
    kw = P.k * P.omega
    chs = chains(P)
    L, r, n = P.L, P.r, P.n
    dim_options = [
        [indec_dim_vector(c.end_vertex, l, r) for l in range(L + 1)] for c in chs
    ]
    current = [0] * r
    solutions: list[LVector] = []

    def dfs(ci: int, acc: list[int]) -> None:
        if ci == n:
            if all(x == kw for x in current):
                solutions.append(tuple(acc))
            return
        rest = (n - ci - 1) * P.omega
        for l in range(L + 1):
            dv = dim_options[ci][l]
            feasible = True
            for v in range(r):
                nv = current[v] + dv[v]
                if nv > kw or nv + rest < kw:
                    feasible = False
                    break
            if not feasible:
                continue
            for v in range(r):
                current[v] += dv[v]
            acc.append(l)
            dfs(ci + 1, acc)
            acc.pop()
            for v in range(r):
                current[v] -= dv[v]

    dfs(0, [])
    pairs = sorted(((ell, from_lvector(P, ell)) for ell in solutions), key=lambda p: p[1])
    return tuple(pairs)


def all_patterns(P: ParahoricData) -> tuple[Pattern, ...]:
    """All juggling patterns of the instance in lexicographic order."""
    return tuple(J for _, J in enumerate_fixed_points(P))


def energy(P: ParahoricData, J: Pattern) -> int:
    """The energy statistic of a pattern (the dimension of its attracting cell).

    Sums, over every vertex and every index not arriving from the previous
    vertex, the number of larger indices missing from the component.
    """
    _check_pattern_shape(P, J)
    m = P.m
    total = 0
    for i in range(1, P.r + 1):
        prev = cyc(i - 1, P.r)
        q = P.gaps[prev - 1]
        arrived = {x + q for x in J[prev - 1]}
        comp = J[i - 1]
        size = len(comp)
        for pos, j in enumerate(comp):
            if j in arrived:
                continue
            total += (m - j) - (size - pos - 1)
    return total


@lru_cache(maxsize=None)
def energy_table(P: ParahoricData) -> dict[Pattern, int]:
    return {J: energy(P, J) for _, J in enumerate_fixed_points(P)}


def stratum_key(P: ParahoricData, J: Pattern) -> tuple[tuple[int, int], ...]:
    """Multiset of nonzero tails as sorted (end vertex, length) pairs.

    Two fixed points lie in the same stratum (are isomorphic as
    subrepresentations) exactly when their keys agree.
    """
    ell = to_lvector(P, J)
    chs = chains(P)
    return tuple(sorted((chs[c].end_vertex, l) for c, l in enumerate(ell) if l >= 1))


def strata_partition(P: ParahoricData) -> dict[tuple, tuple[Pattern, ...]]:
    """Patterns grouped by stratum key, keys in first-appearance order."""
    groups: dict[tuple, list[Pattern]] = {}
    for _, J in enumerate_fixed_points(P):
        groups.setdefault(stratum_key(P, J), []).append(J)
    return {key: tuple(pats) for key, pats in groups.items()}


def cell_parameter_count(P: ParahoricData, J: Pattern) -> int:
    """Number of free cell coordinates after gluing identified coefficients.

    The attracting cell of J carries one coefficient for every (vertex i,
    j in J_i, l > j outside J_i); coefficients at consecutive vertices are
    identified when both indices survive the shift and the shifted l stays
    outside the next component.  Counts the union-find classes.
    """
    _check_pattern_shape(P, J)
    m = P.m
    members = [frozenset(comp) for comp in J]
    parent: dict[tuple[int, int, int], tuple[int, int, int]] = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for i in range(1, P.r + 1):
        for j in J[i - 1]:
            for l in range(j + 1, m + 1):
                if l not in members[i - 1]:
                    parent[(i, j, l)] = (i, j, l)
    for (i, j, l) in list(parent):
        q = P.gaps[i - 1]
        i2 = cyc(i + 1, P.r)
        if j + q <= m and l + q <= m and (l + q) not in members[i2 - 1]:
            a, b = find((i, j, l)), find((i2, j + q, l + q))
            if a != b:
                parent[a] = b
    return len({find(x) for x in parent})


def chain_membership_counts(P: ParahoricData, J: Pattern) -> tuple[int, ...]:
    """Per-chain count of entries lying in the pattern (no tail check)."""
    members = [frozenset(comp) for comp in J]
    return tuple(
        sum(1 for v, t in c.entries if t in members[v - 1]) for c in chains(P)
    )
