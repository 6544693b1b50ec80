"""Brute-force ground truth: coordinate subrepresentations and exact morphism spaces.

Representations are described by explicit bases at every vertex together with
partial maps of basis labels along every arrow.  All maps in this package send
basis vectors to basis vectors or to zero, so subrepresentations and quotients
stay basis aligned.  Morphism-space dimensions are computed by exact rational
elimination; floating point is never used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import InstanceError, ParahoricData, cyc


class BudgetExceededError(RuntimeError):
    """The candidate space is larger than the allotted enumeration budget."""


DEFAULT_SUBREP_BUDGET = 10**8

_ONE = Fraction(1)


@dataclass(eq=False)
class Arrow:
    source: object
    target: object
    images: dict

    def pair(self) -> tuple:
        return (self.source, self.target)


@dataclass(eq=False)
class BasisRep:
    """A representation with a distinguished basis and basis-aligned maps.

    basis maps each vertex to a sorted tuple of labels; each arrow carries a
    partial map of labels (absent labels go to zero).
    """

    vertices: tuple
    basis: dict
    arrows: tuple

    def dims(self) -> dict:
        return {v: len(self.basis[v]) for v in self.vertices}


def ambient_basis_rep(P: ParahoricData) -> BasisRep:
    """The ambient shift representation with basis labels 1..omega*n per vertex."""
    basis = {i: tuple(range(1, P.m + 1)) for i in range(1, P.r + 1)}
    arrows = tuple(
        Arrow(
            i,
            cyc(i + 1, P.r),
            {t: t + P.gaps[i - 1] for t in range(1, P.m - P.gaps[i - 1] + 1)},
        )
        for i in range(1, P.r + 1)
    )
    return BasisRep(tuple(range(1, P.r + 1)), basis, arrows)


def subrep_rep(rep: BasisRep, sub: dict) -> BasisRep:
    """The subrepresentation spanned by the given basis labels per vertex."""
    chosen = {v: tuple(sorted(sub.get(v, ()))) for v in rep.vertices}
    for v, labels in chosen.items():
        if not set(labels) <= set(rep.basis[v]):
            raise InstanceError(f"labels at vertex {v} are not basis labels")
    arrows = []
    for a in rep.arrows:
        tgt = set(chosen[a.target])
        images = {}
        for b in chosen[a.source]:
            im = a.images.get(b)
            if im is not None:
                if im not in tgt:
                    raise InstanceError("subsets are not closed under the arrow maps")
                images[b] = im
        arrows.append(Arrow(a.source, a.target, images))
    return BasisRep(rep.vertices, chosen, tuple(arrows))


def quotient_rep(rep: BasisRep, sub: dict) -> BasisRep:
    """The quotient by a coordinate subrepresentation, on the complementary labels."""
    removed = {v: frozenset(sub.get(v, ())) for v in rep.vertices}
    basis = {v: tuple(b for b in rep.basis[v] if b not in removed[v]) for v in rep.vertices}
    arrows = []
    for a in rep.arrows:
        images = {}
        for b in basis[a.source]:
            im = a.images.get(b)
            if im is not None and im not in removed[a.target]:
                images[b] = im
        arrows.append(Arrow(a.source, a.target, images))
    return BasisRep(rep.vertices, basis, tuple(arrows))


class LinearSystem:
    """Incremental exact Gaussian elimination over the rationals."""

    def __init__(self):
        self._pivots: dict[int, dict[int, Fraction]] = {}
        self.rank = 0

    def add(self, row: dict[int, Fraction]) -> None:
        row = {k: c for k, c in row.items() if c}
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                c = row[lead]
                self._pivots[lead] = {k: x / c for k, x in row.items()}
                self.rank += 1
                return
            c = row.pop(lead)
            for k, x in pivot.items():
                if k == lead:
                    continue
                nv = row.get(k, 0) - c * x
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)


def hom_space_dim(M: BasisRep, N: BasisRep) -> int:
    """Dimension of the space of representation morphisms M -> N.

    The two representations must live on the same quiver (same vertex tuple
    and arrow list); the commutation constraints are solved exactly.
    """
    if M.vertices != N.vertices:
        raise InstanceError("representations live on different vertex sets")
    if tuple(a.pair() for a in M.arrows) != tuple(a.pair() for a in N.arrows):
        raise InstanceError("representations live on different quivers")
    var: dict[tuple, int] = {}
    for v in M.vertices:
        for bM in M.basis[v]:
            for bN in N.basis[v]:
                var[(v, bN, bM)] = len(var)
    system = LinearSystem()
    for aM, aN in zip(M.arrows, N.arrows):
        u, w = aM.source, aM.target
        preimages: dict[object, list] = {}
        for bN, cN in aN.images.items():
            preimages.setdefault(cN, []).append(bN)
        for bM in M.basis[u]:
            img = aM.images.get(bM)
            for cN in N.basis[w]:
                row: dict[int, Fraction] = {}
                if img is not None:
                    row[var[(w, cN, img)]] = _ONE
                for pre in preimages.get(cN, ()):
                    key = var[(u, pre, bM)]
                    row[key] = row.get(key, Fraction(0)) - _ONE
                if row:
                    system.add(row)
    return len(var) - system.rank


def end_space_dim(rep: BasisRep) -> int:
    """Dimension of the endomorphism algebra of a representation."""
    return hom_space_dim(rep, rep)


def enumerate_subreps(rep: BasisRep, dims: dict, budget: int = DEFAULT_SUBREP_BUDGET) -> list[dict]:
    """All coordinate subrepresentations with the given dimension vector.

    Enumerates basis subsets vertex by vertex, pruning partial choices that
    already violate closure under an arrow whose endpoints are both assigned.
    The candidate count (a product of binomial coefficients) is checked
    against the budget up front; there is no silent truncation.
    """
    sizes = {}
    total = 1
    for v in rep.vertices:
        e = dims.get(v, 0)
        if not 0 <= e <= len(rep.basis[v]):
            raise InstanceError(f"target dimension at vertex {v} out of range")
        sizes[v] = e
        total *= comb(len(rep.basis[v]), e)
    if total > budget:
        raise BudgetExceededError(f"{total} candidate subsets exceed the budget {budget}")

    order = rep.vertices
    position = {v: idx for idx, v in enumerate(order)}
    arrows_at = [[] for _ in order]
    for a in rep.arrows:
        arrows_at[max(position[a.source], position[a.target])].append(a)

    chosen: dict[object, frozenset] = {}
    found: list[dict] = []

    def closed(a: Arrow) -> bool:
        tgt = chosen[a.target]
        return all(
            (im := a.images.get(b)) is None or im in tgt for b in chosen[a.source]
        )

    def dfs(idx: int) -> None:
        if idx == len(order):
            found.append({v: tuple(sorted(chosen[v])) for v in order})
            return
        v = order[idx]
        for combo in combinations(rep.basis[v], sizes[v]):
            chosen[v] = frozenset(combo)
            if all(closed(a) for a in arrows_at[idx]):
                dfs(idx + 1)
        del chosen[v]

    dfs(0)
    return found


def subrep_index_sets(P: ParahoricData, sub: dict) -> tuple[tuple[int, ...], ...]:
    """Per-vertex index tuples of a coordinate subrepresentation of the ambient."""
    return tuple(tuple(sorted(sub.get(i, ()))) for i in range(1, P.r + 1))
