"""Exchange-graph enumeration by breadth-first mutation with canonical dedup.

Vertices are canonical seed fingerprints; expanding a vertex applies every
exchangeable mutation to its stored representative.  Because vertices are
deduplicated up to relabeling, the direction label of one geometric edge may
differ between its two endpoints; edge records therefore carry the label as
seen from each side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cartan_roots import CheckItem
from .laurent import LaurentPoly, denominator_vector, has_nonnegative_coeffs
from .seed import Seed, is_acyclic, rebase, seed_to_json


@dataclass(frozen=True)
class EnumLimits:
    """Enumeration caps.  Defaults comfortably contain the classical types
    through rank 5 while halting on infinite inputs."""

    max_vertices: int = 100_000
    max_depth: int = 64

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_depth < 1:
            raise ValueError("limits must be >= 1")


@dataclass
class ExchangeGraph:
    base: Seed
    base_key: object
    vertices: dict
    adjacency: dict
    expanded: set
    limits: EnumLimits
    depth_profile: list[int]
    truncated: bool

    @property
    def finite(self) -> bool:
        return not self.truncated

    @property
    def verdict(self) -> str:
        return "finite" if self.finite else "exceeded-cap"

    @property
    def depth_reached(self) -> int:
        return len(self.depth_profile) - 1

    def cluster_variables(self) -> set[LaurentPoly]:
        out: set[LaurentPoly] = set()
        for seed in self.vertices.values():
            out.update(seed.exchangeable_entries())
        return out

    def vertex_ids(self) -> dict:
        """Deterministic short ids, assigned in canonical-fingerprint order."""
        keys = sorted(self.vertices)
        width = max(3, len(str(len(keys) - 1)))
        return {key: f"s{i:0{width}d}" for i, key in enumerate(keys)}

    def edge_records(self) -> list[tuple]:
        """Geometric edges as (a, b, k_from_a, k_from_b) with a <= b.

        k_from_b is None when the far endpoint was never expanded (truncated
        enumerations only).  Parallel edges are matched by sorted labels.
        """
        half: dict[tuple, list[int]] = {}
        for a, nbrs in self.adjacency.items():
            for k, b in nbrs.items():
                half.setdefault((a, b), []).append(k)
        out = []
        seen = set()
        for (a, b) in half:
            if (a, b) in seen:
                continue
            seen.add((a, b))
            seen.add((b, a))
            ks_ab = sorted(half[(a, b)])
            if a == b:
                out.extend((a, a, k, k) for k in ks_ab)
                continue
            ks_ba = sorted(half.get((b, a), []))
            if len(ks_ba) == len(ks_ab):
                for ka, kb in zip(ks_ab, ks_ba):
                    if a <= b:
                        out.append((a, b, ka, kb))
                    else:
                        out.append((b, a, kb, ka))
            else:
                # far endpoint unexpanded: keep the expanded side as `a`
                out.extend((a, b, ka, None) for ka in ks_ab)
        out.sort(key=lambda r: (r[0], r[1], r[2] if r[2] is not None else -1))
        return out


def enumerate_exchange_graph(seed: Seed, limits: EnumLimits | None = None) -> ExchangeGraph:
    """Breadth-first closure of a seed under all exchangeable mutations.

    The result is `finite` iff the frontier exhausts within the caps; a cap
    hit is a verdict, not an error, and leaves a usable partial graph.
    """
    limits = limits or EnumLimits()
    k0 = seed.canonical_key
    vertices = {k0: seed}
    adjacency: dict = {}
    expanded: set = set()
    depth_profile = [1]
    frontier = [k0]
    truncated = False
    depth = 0

    while frontier:
        if depth >= limits.max_depth:
            truncated = True
            break
        nxt = []
        for key in frontier:
            if len(vertices) > limits.max_vertices:
                truncated = True
                break
            s = vertices[key]
            nbrs = {}
            for k in s.matrix.ex:
                t = s.mutate(k)
                tk = t.canonical_key
                nbrs[k] = tk
                if tk not in vertices:
                    vertices[tk] = t
                    nxt.append(tk)
            adjacency[key] = nbrs
            expanded.add(key)
        if truncated:
            break
        if nxt:
            depth_profile.append(len(nxt))
        frontier = nxt
        depth += 1

    return ExchangeGraph(
        base=seed,
        base_key=k0,
        vertices=vertices,
        adjacency=adjacency,
        expanded=expanded,
        limits=limits,
        depth_profile=depth_profile,
        truncated=truncated,
    )


# -- re-expansion -------------------------------------------------------------------


def reexpand_from(graph: ExchangeGraph, base_key) -> dict:
    """Cluster entries of every reachable vertex, expanded in the cluster of
    `base_key`.

    The base vertex's representative is rebased to initial form and the
    mutation paths of the enumerated graph are replayed from it, so position
    correspondence with the stored representatives is preserved.
    """
    start = rebase(graph.vertices[base_key])
    out = {base_key: start.cluster}
    frontier = [(base_key, start)]
    visited = {base_key}
    while frontier:
        nfront = []
        for key, s in frontier:
            for k, nb in graph.adjacency.get(key, {}).items():
                if nb in visited:
                    continue
                visited.add(nb)
                t = s.mutate(k)
                out[nb] = t.cluster
                nfront.append((nb, t))
        frontier = nfront
    return out


# -- structural checks ---------------------------------------------------------------


def regularity_report(graph: ExchangeGraph) -> list[CheckItem]:
    """n-regularity and edge symmetry; meaningful for finite graphs."""
    out = []
    n = graph.base.matrix.n
    all_expanded = set(graph.vertices) == graph.expanded
    out.append(CheckItem("all-vertices-expanded", all_expanded))
    degrees_ok = all(len(nbrs) == n for nbrs in graph.adjacency.values())
    out.append(CheckItem("n-regular", degrees_ok and all_expanded))
    sym_ok = True
    for a, nbrs in graph.adjacency.items():
        for k, b in nbrs.items():
            if a not in graph.adjacency.get(b, {}).values():
                sym_ok = False
    out.append(CheckItem("edge-symmetry", sym_ok))
    count_ok = 2 * len(graph.edge_records()) == n * len(graph.vertices)
    out.append(CheckItem("edge-count-n-regular", count_ok or not all_expanded))
    return out


def check_conjecture_suite(
    graph: ExchangeGraph,
    degree_bound: int = 3,
    include_positivity: bool = True,
) -> list[CheckItem]:
    """Empirical checks on an enumerated (finite) exchange graph:

    * every seed is determined by its cluster;
    * for each cluster variable, the vertices containing it induce a
      connected subgraph;
    * the acyclic vertices induce a connected (or empty) subgraph;
    * cluster monomials up to `degree_bound` have distinct denominator
      vectors with respect to the base cluster;
    * every cluster variable has nonnegative coefficients with respect to
      every vertex's cluster (by replaying mutation paths from each vertex).
    """
    out: list[CheckItem] = []

    clusters: dict = {}
    for key, seed in graph.vertices.items():
        clusters.setdefault(seed.cluster_key, set()).add(key)
    dup = [ks for ks in clusters.values() if len(ks) > 1]
    out.append(
        CheckItem(
            "cluster-determines-seed",
            not dup,
            "" if not dup else f"{len(dup)} cluster collisions",
        )
    )

    def connected(subset: set) -> bool:
        if not subset:
            return True
        start = next(iter(subset))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for nb in graph.adjacency.get(v, {}).values():
                if nb in subset and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
            for a, nbrs in graph.adjacency.items():
                if a in subset and a not in seen and v in nbrs.values():
                    seen.add(a)
                    stack.append(a)
        return seen == subset

    support_ok = True
    for var in graph.cluster_variables():
        subset = {
            key
            for key, seed in graph.vertices.items()
            if var in seed.exchangeable_entries()
        }
        if not connected(subset):
            support_ok = False
            break
    out.append(CheckItem("variable-support-connected", support_ok))

    acyclic_subset = {
        key for key, seed in graph.vertices.items() if is_acyclic(seed.matrix)[0]
    }
    out.append(CheckItem("acyclic-seeds-connected", connected(acyclic_subset)))

    out.append(_distinct_monomial_denominators(graph, degree_bound))

    if include_positivity:
        pos_ok = True
        detail = ""
        for base_key in sorted(graph.vertices):
            for cluster in reexpand_from(graph, base_key).values():
                for p in cluster:
                    if not has_nonnegative_coeffs(p):
                        pos_ok = False
                        detail = f"negative coefficient in {p}"
                        break
                if not pos_ok:
                    break
            if not pos_ok:
                break
        out.append(CheckItem("positivity-in-every-cluster", pos_ok, detail))
    return out


def _distinct_monomial_denominators(graph: ExchangeGraph, degree_bound: int) -> CheckItem:
    from itertools import combinations_with_replacement

    base = graph.base
    names = [base.varset.names[p] for p in base.matrix.ex]
    n = len(names)
    seen: dict[tuple, LaurentPoly] = {}
    for key in sorted(graph.vertices):
        entries = graph.vertices[key].exchangeable_entries()
        for total in range(1, degree_bound + 1):
            for combo in combinations_with_replacement(range(n), total):
                mono = base.varset.one()
                for idx in combo:
                    mono = mono * entries[idx]
                d = denominator_vector(mono, names)
                prev = seen.get(d)
                if prev is None:
                    seen[d] = mono
                elif prev != mono:
                    return CheckItem(
                        "distinct-monomial-denominators",
                        False,
                        f"collision at delta {list(d)}",
                    )
    return CheckItem("distinct-monomial-denominators", True)


# -- comparisons ----------------------------------------------------------------------


def graphs_isomorphic(g1: ExchangeGraph, g2: ExchangeGraph) -> bool:
    """Unlabeled multigraph isomorphism of two finite exchange graphs.

    Exact but exponential in the worst case; intended for small graphs such
    as comparisons across different frozen parts over one principal part.
    """
    import networkx as nx

    def build(g: ExchangeGraph):
        ids = g.vertex_ids()
        G = nx.MultiGraph()
        G.add_nodes_from(ids.values())
        for a, b, _, _ in g.edge_records():
            G.add_edge(ids[a], ids[b])
        return G

    return nx.is_isomorphic(build(g1), build(g2))


# -- export ---------------------------------------------------------------------------


def graph_to_json(graph: ExchangeGraph) -> dict:
    ids = graph.vertex_ids()
    vertices = [
        {"id": ids[key], "seed": seed_to_json(graph.vertices[key])}
        for key in sorted(graph.vertices)
    ]
    edges = []
    for a, b, ka, kb in graph.edge_records():
        rec = {"a": ids[a], "k": ka + 1, "b": ids[b]}
        if kb is not None:
            rec["k_b"] = kb + 1
        edges.append(rec)
    return {
        "v": 1,
        "vertices": vertices,
        "edges": edges,
        "verdict": {
            "kind": graph.verdict,
            "vertices": len(graph.vertices),
            "max_vertices": graph.limits.max_vertices,
            "max_depth": graph.limits.max_depth,
            "depth_reached": graph.depth_reached,
            "depth_profile": list(graph.depth_profile),
        },
        "cluster_variable_count": len(graph.cluster_variables()),
    }


def graph_to_dot(graph: ExchangeGraph) -> str:
    ids = graph.vertex_ids()
    base_names = [graph.base.varset.names[p] for p in graph.base.matrix.ex]
    lines = ["graph exchange_graph {"]
    lines.append(
        f"  // verdict: {graph.verdict}, {len(graph.vertices)} vertices, "
        f"{len(graph.cluster_variables())} cluster variables"
    )
    for key in sorted(graph.vertices):
        seed = graph.vertices[key]
        deltas = [
            ",".join(str(x) for x in denominator_vector(p, base_names))
            for p in seed.exchangeable_entries()
        ]
        label = "|".join(sorted(deltas))
        lines.append(f'  {ids[key]} [label="{label}"];')
    for a, b, ka, kb in graph.edge_records():
        label = str(ka + 1)
        if kb is not None and kb != ka:
            label += f"/{kb + 1}"
        lines.append(f'  {ids[a]} -- {ids[b]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(graph: ExchangeGraph, fmt: str) -> str:
    import json as _json

    if fmt == "dot":
        return graph_to_dot(graph)
    if fmt == "json":
        return _json.dumps(graph_to_json(graph), indent=2) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")
