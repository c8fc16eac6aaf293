#!/usr/bin/env python3
"""Growth of rank-2 exchange graphs: finite for bc <= 3, infinite from bc = 4.

The graph itself is a line, so the signal is in the denominator vectors of
the inventory: bounded for bc <= 3, linear growth at bc = 4, exponential
beyond (which is why the bc > 4 cases use a shallower depth cap).
"""

from clusterlab.explorer import EnumLimits, enumerate_exchange_graph
from clusterlab.laurent import denominator_vector
from clusterlab.presets import rank2_seed

CASES = [(1, 1, 12), (1, 2, 12), (1, 3, 12), (2, 2, 12), (1, 4, 12), (1, 5, 6), (2, 3, 6)]


def main() -> None:
    for b, c, depth in CASES:
        graph = enumerate_exchange_graph(rank2_seed(b, c), EnumLimits(10_000, depth))
        deltas = [
            denominator_vector(v, ("x1", "x2"))
            for v in graph.cluster_variables()
        ]
        dmax = max(max(d) for d in deltas)
        print(
            f"(b,c)=({b},{c})  bc={b * c}  depth<={depth:2d}  "
            f"verdict={graph.verdict:12s} vertices={len(graph.vertices):3d}  "
            f"max denominator exponent={dmax}"
        )


if __name__ == "__main__":
    main()
