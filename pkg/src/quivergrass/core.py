"""Shift representations of the cyclic quiver and their chain decomposition.

An instance bundles (n, k, omega, S).  The ambient representation places
C^(omega*n) at each of the r = |S| vertices of the cyclic quiver; the arrow
leaving vertex i shifts basis indices up by the gap q_i between consecutive
elements of S.  The ambient splits into n chains, one per torus weight:
sequences of basis vectors connected by the shift maps.  Every fixed-point
computation downstream works with tails of these chains.

Vertices, basis indices and chain labels are all 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache


class InstanceError(ValueError):
    """Invalid instance data or malformed combinatorial input."""


class VerificationError(RuntimeError):
    """An invariant that should hold by construction failed to hold."""


def cyc(x: int, mod: int) -> int:
    """Reduce x to the 1-based residue range [1, mod]."""
    return (x - 1) % mod + 1


@dataclass(frozen=True)
class ParahoricData:
    """Validated instance (n, k, omega, S) with derived gap data.

    Vertex i of the cyclic quiver corresponds to the i-th element s_i of S.
    The gap q_i = s_{i+1} - s_i (with the cyclic convention s_{r+1} = s_1 + n)
    is the index offset of the arrow i -> i+1.
    """

    n: int
    k: int
    omega: int
    S: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InstanceError("n must be a positive integer")
        if not isinstance(self.omega, int) or isinstance(self.omega, bool) or self.omega < 1:
            raise InstanceError("omega must be a positive integer")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or not 0 <= self.k <= self.n:
            raise InstanceError(f"k must lie in [0, {self.n}]")
        S = self.S
        if not isinstance(S, tuple) or not S:
            raise InstanceError("S must be a nonempty tuple of vertices")
        if len(set(S)) != len(S):
            raise InstanceError("S must not contain duplicate entries")
        if list(S) != sorted(S):
            raise InstanceError("S must be strictly increasing")
        if not all(isinstance(s, int) and 1 <= s <= self.n for s in S):
            raise InstanceError(f"S must be a subset of [1, {self.n}]")

    @property
    def r(self) -> int:
        return len(self.S)

    @property
    def m(self) -> int:
        """Per-vertex dimension of the ambient representation (omega * n)."""
        return self.omega * self.n

    @property
    def L(self) -> int:
        """Common length of the chains (omega * r)."""
        return self.omega * self.r

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        """q_i = s_{i+1} - s_i, cyclically; the entries sum to n."""
        s = self.S
        r = self.r
        return tuple(
            (s[(i + 1) % r] - s[i]) + (self.n if i == r - 1 else 0) for i in range(r)
        )

    @cached_property
    def S_set(self) -> frozenset[int]:
        return frozenset(self.S)

    def restrict(self, s_prime) -> "ParahoricData":
        """The instance over a nonempty subset of S with the same (n, k, omega)."""
        sp = tuple(sorted(int(s) for s in s_prime))
        if not sp:
            raise InstanceError("the target vertex set must be nonempty")
        if not set(sp) <= self.S_set:
            raise InstanceError("the target vertex set must be a subset of S")
        return ParahoricData(self.n, self.k, self.omega, sp)


def make_parahoric(n: int, k: int, omega: int, S) -> ParahoricData:
    """Validate raw instance data (n, k, omega, S) and derive the gaps."""
    try:
        items = [int(s) for s in S]
    except TypeError as exc:
        raise InstanceError("S must be an iterable of integers") from exc
    if len(items) != len(set(items)):
        raise InstanceError("S must not contain duplicate entries")
    return ParahoricData(int(n), int(k), int(omega), tuple(sorted(items)))


@dataclass(frozen=True)
class ShiftRepresentation:
    """Per-vertex space C^dim with 0/1 shift maps along the cyclic arrows.

    The arrow out of vertex i sends basis vector (i, t) to (i+1, t + offsets[i-1])
    when the shifted index stays within [1, dim], and to zero otherwise.
    """

    r: int
    dim: int
    offsets: tuple[int, ...]

    def apply(self, vertex: int, index: int) -> tuple[int, int] | None:
        off = self.offsets[vertex - 1]
        if index + off <= self.dim:
            return (cyc(vertex + 1, self.r), index + off)
        return None

    def arrow_matrix(self, vertex: int) -> list[list[int]]:
        """The 0/1 matrix of the arrow out of the given vertex (rows index targets)."""
        off = self.offsets[vertex - 1]
        return [
            [1 if row == col + off else 0 for col in range(1, self.dim + 1)]
            for row in range(1, self.dim + 1)
        ]


def build_ambient(P: ParahoricData) -> ShiftRepresentation:
    """The ambient representation of the instance: offsets q_i on C^(omega*n)."""
    return ShiftRepresentation(P.r, P.m, P.gaps)


@dataclass(frozen=True)
class Chain:
    """One indecomposable summand of the ambient, as explicit basis entries.

    The label is the common torus weight s_i - t + 1 (mod n) of the entries
    (i, t); it is constant along the chain because consecutive entries differ
    by (vertex + 1, index + q_i).
    """

    label: int
    entries: tuple[tuple[int, int], ...]

    @property
    def end_vertex(self) -> int:
        return self.entries[-1][0]


@lru_cache(maxsize=None)
def chains(P: ParahoricData) -> tuple[Chain, ...]:
    """The n chains of the ambient, sorted by label.

    A chain starts at a basis vector not in the image of any arrow (vertex i,
    index t <= q_{i-1}) and follows the shift maps until they vanish.  The
    chains partition the r * omega * n basis vectors and all have length
    omega * r.
    """
    rep = build_ambient(P)
    out = []
    for i in range(1, P.r + 1):
        q_in = P.gaps[cyc(i - 1, P.r) - 1]
        for t in range(1, q_in + 1):
            entries = [(i, t)]
            while (nxt := rep.apply(*entries[-1])) is not None:
                entries.append(nxt)
            if len(entries) != P.L:
                raise VerificationError(
                    f"chain starting at {(i, t)} has length {len(entries)} != {P.L}"
                )
            label = cyc(P.S[i - 1] - t + 1, P.n)
            out.append(Chain(label, tuple(entries)))
    if sorted(c.label for c in out) != list(range(1, P.n + 1)):
        raise VerificationError("chain labels do not form a permutation of [n]")
    return tuple(sorted(out, key=lambda c: c.label))


def indec_dim_vector(end_vertex: int, length: int, r: int) -> tuple[int, ...]:
    """Dimension vector of the indecomposable of the given length ending at a vertex.

    Entry v counts the positions p in [0, length) with end_vertex - p = v mod r.
    """
    if length < 0:
        raise InstanceError("length must be nonnegative")
    counts = [0] * r
    for p in range(length):
        counts[cyc(end_vertex - p, r) - 1] += 1
    return tuple(counts)


def floor_vertex(P: ParahoricData, label: int) -> int:
    """The vertex assigned to a chain label by the closed-form floor rule.

    Returns max{i : s_i <= label < s_{i+1} cyclically}.  For labels outside S
    this agrees with the end vertex of the chain; for labels in S (and r > 1)
    it is off by one vertex, which is why tail bookkeeping uses the chain ends.
    """
    if not 1 <= label <= P.n:
        raise InstanceError("label out of range")
    for i in range(P.r, 0, -1):
        if P.S[i - 1] <= label:
            return i
    return P.r
