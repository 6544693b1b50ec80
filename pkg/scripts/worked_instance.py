#!/usr/bin/env python3
"""Walk through the two smallest instances end to end.

X_{[2]}(1,2,1) is the union of two projective lines crossing in a point; its
projection X_{{1}}(1,2,1) is a single line whose two fixed points become
isomorphic as subrepresentations.  Prints every statistic the library
computes for them.
"""

from quivergrass import desing, geometry, momentgraph, projections
from quivergrass.core import make_parahoric, chains
from quivergrass.fixedpoints import (
    all_patterns,
    energy_table,
    strata_partition,
    to_lvector,
)


def survey(P, title):
    print(f"== {title} ==")
    print("chains:", [(c.label, c.entries) for c in chains(P)])
    table = energy_table(P)
    for J in all_patterns(P):
        print(f"  J={J} l={to_lvector(P, J)} e={table[J]} "
              f"tangent={desing.pattern_tangent_dim(P, J)}")
    print("poincare:", geometry.poly_to_string(geometry.poincare(P)))
    print("strata:", {k: len(v) for k, v in strata_partition(P).items()})
    print("components:", [(c.I, c.top) for c in geometry.irr_components(P)])
    G = momentgraph.build_graph(P)
    for e in G.edges:
        print(f"  edge {G.patterns[e.source]} -> {G.patterns[e.target]} "
              f"[{e.character.render()}]")
    for comp in geometry.irr_components(P):
        pts = desing.hat_fixed_points(P, comp.I)
        print(f"  desing I={comp.I}: {len(pts)} fixed points, tangents",
              sorted({desing.hat_point_tangent_dim(P, p) for p in pts}))
    print()


def main():
    full = make_parahoric(2, 1, 1, [1, 2])
    small = make_parahoric(2, 1, 1, [1])
    survey(full, "X_[2](1,2,1): two crossing lines")
    survey(small, "X_{1}(1,2,1): one line, one stratum")
    print("projection of every fixed point to S'={1}:")
    for J in all_patterns(full):
        print(f"  {J} -> {projections.project_pattern(full, (1,), J)}")
    print("lift of every fixed point back to S=[2]:")
    for J in all_patterns(small):
        print(f"  {J} -> {projections.lift_pattern(small, (1, 2), J)}")


if __name__ == "__main__":
    main()
