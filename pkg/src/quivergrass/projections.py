"""Projections between instances over nested vertex sets, and the explicit lift.

Forgetting the subspaces at vertices of S outside S' maps fixed points to
fixed points by restriction of the index-set tuple.  The lift runs the greedy
preimage construction: seed each inserted vertex by shifting the pattern
forward from its predecessor, then fill up from a pool combining the
backward shift from the successor with the top index range.
"""

from __future__ import annotations

from .core import InstanceError, ParahoricData, VerificationError
from .fixedpoints import (
    Pattern,
    _check_pattern_shape,
    all_patterns,
    validate_pattern,
)


def project_pattern(P: ParahoricData, s_prime, J: Pattern) -> Pattern:
    """Restriction of a fixed point to the vertices indexed by a subset of S."""
    _check_pattern_shape(P, J)
    Pp = P.restrict(s_prime)
    positions = [P.S.index(s) for s in Pp.S]
    return tuple(J[p] for p in positions)


def lift_pattern(P: ParahoricData, s_target, J: Pattern) -> Pattern:
    """A preimage over the larger vertex set s_target of a fixed point over P.S.

    Inserted vertices are processed in increasing order along the gap
    structure, each one being the first missing element after some vertex
    already present.  Failure to fill a component signals a bug, not bad
    input; the construction always succeeds on valid patterns.
    """
    _check_pattern_shape(P, J)
    target = tuple(sorted(int(s) for s in s_target))
    if not set(P.S) <= set(target):
        raise InstanceError("the target vertex set must contain S")
    Pt = ParahoricData(P.n, P.k, P.omega, target)
    m, kw, n = P.m, P.k * P.omega, P.n

    current = {s: frozenset(comp) for s, comp in zip(P.S, J)}
    missing = [s for s in target if s not in current]
    while missing:
        inserted = None
        for s0 in missing:
            have = sorted(current)
            prev = max((s for s in have if s < s0), default=have[-1])
            between = [s for s in target if (prev < s < s0) or (s0 < prev and (s > prev or s < s0))]
            if between:
                continue
            nxt = min((s for s in have if s > s0), default=have[0])
            fwd = (s0 - prev) % n or n
            bwd = -((nxt - s0) % n or n)
            seed = {x + fwd for x in current[prev] if x + fwd <= m}
            pool = {x + bwd for x in current[nxt] if x + bwd >= 1}
            pool |= set(range(m + bwd + 1, m + 1))
            filled = set(seed)
            while len(filled) < kw:
                candidates = pool - filled
                if not candidates:
                    raise VerificationError("lift pool exhausted before reaching k*omega")
                filled.add(max(candidates))
            current[s0] = frozenset(filled)
            inserted = s0
            break
        if inserted is None:
            raise VerificationError("no insertable vertex found during lift")
        missing.remove(inserted)

    lifted = tuple(tuple(sorted(current[s])) for s in target)
    if not validate_pattern(Pt, lifted):
        raise VerificationError("lift produced an invalid pattern")
    if project_pattern(Pt, P.S, lifted) != J:
        raise VerificationError("lift is not a section of the projection")
    return lifted


def image_check(P: ParahoricData, s_prime) -> bool:
    """Whether projecting every fixed point hits exactly the fixed points over s_prime."""
    Pp = P.restrict(s_prime)
    image = {project_pattern(P, Pp.S, J) for J in all_patterns(P)}
    return image == set(all_patterns(Pp))


def commutation_check(P: ParahoricData, T, max_all_orderings: int = 3) -> bool:
    """Whether projecting out the vertices of T is independent of the order.

    Requires the full instance (S = [n]).  All orderings are tried when
    |T| <= max_all_orderings; beyond that a deterministic sample of orderings
    is used.  Each stepwise composite is compared with the one-shot
    projection on every fixed point.
    """
    from itertools import islice, permutations

    if P.S != tuple(range(1, P.n + 1)):
        raise InstanceError("commutation check is defined on the full instance S = [n]")
    T = tuple(sorted(set(int(t) for t in T)))
    if not T:
        raise InstanceError("T must be nonempty")
    remaining = tuple(s for s in P.S if s not in T)
    if not remaining:
        raise InstanceError("T must leave at least one vertex")

    if len(T) <= max_all_orderings:
        orderings = list(permutations(T))
    else:
        orderings = list(islice(permutations(T), 6))
        orderings.append(tuple(reversed(T)))

    for J in all_patterns(P):
        direct = project_pattern(P, remaining, J)
        for ordering in orderings:
            curP, curJ = P, J
            for t in ordering:
                keep = tuple(s for s in curP.S if s != t)
                curJ = project_pattern(curP, keep, curJ)
                curP = curP.restrict(keep)
            if curJ != direct:
                return False
    return True
