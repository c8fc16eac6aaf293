#!/usr/bin/env python3
"""Enumerate the exchange graphs of the small finite types and report vertex
and cluster-variable counts together with the empirical conjecture suite."""

import time

from clusterlab.cartan_roots import cartan_of_type, positive_roots
from clusterlab.explorer import check_conjecture_suite, enumerate_exchange_graph
from clusterlab.presets import seed_of_cartan

CASES = [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]


def main() -> None:
    print(f"{'type':6s} {'vertices':>8s} {'variables':>9s} {'roots+n':>8s} {'time':>7s}  checks")
    for family, n in CASES:
        A = cartan_of_type(family, n)
        t0 = time.monotonic()
        graph = enumerate_exchange_graph(seed_of_cartan(A))
        report = check_conjecture_suite(graph)
        elapsed = time.monotonic() - t0
        expected = len(positive_roots(A)) + n
        status = "all pass" if all(c.passed for c in report) else "FAILURES"
        print(
            f"{family}{n:<5d} {len(graph.vertices):8d} "
            f"{len(graph.cluster_variables()):9d} {expected:8d} {elapsed:6.2f}s  {status}"
        )


if __name__ == "__main__":
    main()
