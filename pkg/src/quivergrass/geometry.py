"""Poincare polynomials, irreducible components, dimensions, automorphism groups.

Polynomials are plain coefficient tuples (constant term first, trailing
coefficient nonzero).  An irreducible component is indexed by a k-subset I of
the chain labels subject to a cyclic condition; its top fixed point is the
pattern filling exactly the chains labeled by I, built in the full model and
pushed forward.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .core import InstanceError, ParahoricData, VerificationError, cyc
from .fixedpoints import Pattern, energy_table, from_lvector
from .momentgraph import cell_closure
from .oracle import ambient_basis_rep, end_space_dim
from .projections import project_pattern

Poly = tuple[int, ...]


def poly_trim(coeffs) -> Poly:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_shift(a: Poly, exp: int) -> Poly:
    return poly_trim((0,) * exp + tuple(a))


def poly_eval(a: Poly, x: int) -> int:
    value = 0
    for c in reversed(a):
        value = value * x + c
    return value


def poly_to_string(a: Poly) -> str:
    terms = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        elif d == 1:
            terms.append("q" if c == 1 else f"{c}q")
        else:
            terms.append(f"q^{d}" if c == 1 else f"{c}q^{d}")
    return " + ".join(terms) if terms else "0"


def poincare(P: ParahoricData) -> Poly:
    """Coefficient of q^d counts the fixed points of energy d."""
    table = energy_table(P)
    coeffs = [0] * (max(table.values()) + 1 if table else 1)
    for e in table.values():
        coeffs[e] += 1
    return poly_trim(coeffs)


def poincare_closure(P: ParahoricData, J: Pattern) -> Poly:
    """Poincare polynomial of the closure of the cell of J."""
    table = energy_table(P)
    closure = cell_closure(P, J)
    coeffs = [0] * (max(table[Jp] for Jp in closure) + 1)
    for Jp in closure:
        coeffs[table[Jp]] += 1
    return poly_trim(coeffs)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> Poly:
    """The q-binomial coefficient via the q-Pascal recurrence (no energy input)."""
    if k < 0 or k > n:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    return poly_add(gaussian_binomial(n - 1, k - 1), poly_shift(gaussian_binomial(n - 1, k), k))


def is_component_index(P: ParahoricData, I) -> bool:
    """The cyclic condition: i in I and i not in S forces i+1 in I."""
    Iset = set(I)
    if len(Iset) != P.k or not Iset <= set(range(1, P.n + 1)):
        return False
    return all(i in P.S_set or cyc(i + 1, P.n) in Iset for i in Iset)


@dataclass(frozen=True)
class Component:
    I: tuple[int, ...]
    top: Pattern


def component_top_pattern(P: ParahoricData, I) -> Pattern:
    """Top fixed point of the component indexed by I.

    In the full model the pattern fills exactly the chains labeled by I (the
    unique top cell with 1 in the components indexed by I); the result is its
    pushforward to S.
    """
    I = tuple(sorted(int(i) for i in I))
    if not is_component_index(P, I):
        raise InstanceError("I does not satisfy the component condition")
    full = ParahoricData(P.n, P.k, P.omega, tuple(range(1, P.n + 1)))
    ell_full = tuple(full.L if label in I else 0 for label in range(1, P.n + 1))
    top_full = from_lvector(full, ell_full)
    return project_pattern(full, P.S, top_full)


def irr_components(P: ParahoricData) -> tuple[Component, ...]:
    """All component indices (independent of omega) with their top patterns."""
    out = []
    for I in combinations(range(1, P.n + 1), P.k):
        if is_component_index(P, I):
            out.append(Component(I, component_top_pattern(P, I)))
    return tuple(out)


def component_image(P: ParahoricData, s_prime, I) -> tuple[int, ...]:
    """Index of the component of the projected instance receiving component I.

    Within each gap between consecutive elements of the smaller vertex set,
    the labels of I slide up to the top of the gap; the result satisfies the
    component condition over s_prime and indexes the component containing the
    projected top cell.
    """
    Pp = P.restrict(s_prime)
    I = tuple(sorted(int(i) for i in I))
    if not is_component_index(P, I):
        raise InstanceError("I does not satisfy the component condition")
    Iset = set(I)
    out: list[int] = []
    for t in range(Pp.r):
        gap_values = [cyc(Pp.S[t] + d, P.n) for d in range(1, Pp.gaps[t] + 1)]
        hits = sum(1 for v in gap_values if v in Iset)
        out.extend(gap_values[len(gap_values) - hits:])
    result = tuple(sorted(out))
    if not is_component_index(Pp, result):
        raise VerificationError("component image fails the cyclic condition")
    return result


def dimension_check(P: ParahoricData) -> tuple[int, int]:
    """(dimension, number of top cells); raises when either disagrees with theory.

    The dimension must equal omega*k*(n-k) and the number of top-energy
    fixed points must equal the number of irreducible components.
    """
    table = energy_table(P)
    dim = max(table.values())
    expected = P.omega * P.k * (P.n - P.k)
    if dim != expected:
        raise VerificationError(f"max energy {dim} != omega*k*(n-k) = {expected}")
    tops = sum(1 for e in table.values() if e == dim)
    ncomp = len(irr_components(P))
    if tops != ncomp:
        raise VerificationError(f"{tops} top cells but {ncomp} components")
    return dim, tops


def aut_dim_formula(P: ParahoricData) -> int:
    """Closed-form dimension of the automorphism group of the ambient."""
    total = 0
    for i in range(1, P.r + 1):
        for j in range(1, P.L + 1):
            total += P.gaps[i - 1] * P.gaps[cyc(i - j + 1, P.r) - 1]
    return total


def aut_dim_oracle(P: ParahoricData) -> int:
    """Endomorphism-space dimension of the ambient, by exact elimination.

    Invertibility of the diagonal blocks is an open condition, so the
    endomorphism dimension equals the automorphism-group dimension.
    """
    return end_space_dim(ambient_basis_rep(P))


def projection_preserves_top_dim(J_full: Pattern, m: int, vertex: int) -> bool:
    """Whether forgetting one vertex keeps the cell dimension of a top pattern.

    The criterion on the component at the removed vertex: either 1 is absent,
    or both 1 and the largest index are present.
    """
    comp = set(J_full[vertex - 1])
    return 1 not in comp or (1 in comp and m in comp)
