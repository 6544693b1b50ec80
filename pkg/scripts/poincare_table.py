#!/usr/bin/env python3
"""Tabulate Poincare polynomials over a small grid.

For every instance the degree is omega*k*(n-k), the leading coefficient is
the number of irreducible components, and the value at 1 is the number of
fixed points; the table makes the S-dependence visible (only the component
count changes in omega, never the index set).
"""

import argparse
from itertools import combinations

from quivergrass.core import ParahoricData
from quivergrass.geometry import irr_components, poincare, poly_to_string


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-omega", type=int, default=2)
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            for omega in range(1, args.max_omega + 1):
                for size in range(1, n + 1):
                    for S in combinations(range(1, n + 1), size):
                        P = ParahoricData(n, k, omega, S)
                        poly = poincare(P)
                        print(
                            f"n={n} k={k} omega={omega} S={','.join(map(str, S))}"
                            f"  components={len(irr_components(P))}"
                            f"  P(q) = {poly_to_string(poly)}"
                        )


if __name__ == "__main__":
    main()
