"""Command-line interface.

Subcommands: mutate, graph, classify, dbc, denoms, verify, serve.
All machine-readable output is JSON with a top-level "v": 1; direction
indices and word positions are 1-based on the wire, matching the seed JSON
schema.  Exit codes: 0 success, 2 input error, 3 cap-undetermined.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from .cartan_roots import (
    CartanError,
    all_finite_types,
    b_of_a,
    cartan_of_type,
    denominator_bijection_check,
)
from .double_bruhat import (
    WordError,
    btilde_of_word,
    gamma_delta,
    minor_family,
    parse_double_word,
    symbolic_matrix,
    verify_adjacent_exchange,
)
from .explorer import EnumLimits, enumerate_exchange_graph, export_graph
from .laurent import LaurentError, denominator_vector, poly_to_json
from .seed import SeedError, seed_from_json, seed_mutation, seed_to_json


class InputError(Exception):
    """User-input problem; mapped to exit code 2."""


class CapUndetermined(Exception):
    """A cap prevented a definite answer; mapped to exit code 3."""


def _load_seed(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        return seed_from_json(obj)
    except (SeedError, LaurentError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _parse_sequence(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad index sequence {text!r}: {exc}") from exc


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _delta_names(seed):
    return [seed.varset.names[p] for p in seed.matrix.ex]


# -- subcommands --------------------------------------------------------------------


def cmd_mutate(args) -> int:
    seed = _load_seed(args.seed_file)
    names = _delta_names(seed)
    steps = []
    current = seed
    for k1 in _parse_sequence(args.sequence):
        k = k1 - 1
        if k not in current.matrix.col_of:
            valid = [p + 1 for p in current.matrix.ex]
            raise InputError(f"direction {k1} is not exchangeable; valid: {valid}")
        current = seed_mutation(current, k)
        var = current.cluster[k]
        steps.append(
            {
                "k": k1,
                "variable": str(var),
                "delta": list(denominator_vector(var, names)),
            }
        )
    _emit({"v": 1, "seed": seed_to_json(current), "steps": steps})
    return 0


def cmd_graph(args) -> int:
    seed = _load_seed(args.seed_file)
    limits = EnumLimits(args.cap_vertices, args.cap_depth)
    graph = enumerate_exchange_graph(seed, limits)
    sys.stdout.write(export_graph(graph, args.format))
    if graph.finite:
        summary = (
            f"Finite: {len(graph.vertices)} seeds, "
            f"{len(graph.cluster_variables())} cluster variables"
        )
    else:
        summary = (
            f"ExceededCap: {len(graph.vertices)} seeds at depth "
            f"{graph.depth_reached}, growth profile {graph.depth_profile}"
        )
    print(summary, file=sys.stderr)
    return 0


def _square_mutation(mat: tuple, k: int) -> tuple:
    n = len(mat)
    return tuple(
        tuple(
            -mat[i][j]
            if i == k or j == k
            else mat[i][j] + (abs(mat[i][k]) * mat[k][j] + mat[i][k] * abs(mat[k][j])) // 2
            for j in range(n)
        )
        for i in range(n)
    )


def _canon_square(mat: tuple) -> tuple:
    """Minimum over simultaneous row/column permutations, with signature pruning."""
    n = len(mat)
    sigs = []
    for i in range(n):
        sigs.append(
            (tuple(sorted(mat[i])), tuple(sorted(mat[r][i] for r in range(n))))
        )
    order = sorted(range(n), key=lambda i: sigs[i])
    groups: list[list[int]] = []
    for i in order:
        if groups and sigs[groups[-1][0]] == sigs[i]:
            groups[-1].append(i)
        else:
            groups.append([i])

    best = None
    for combo in itertools.product(*[list(itertools.permutations(g)) for g in groups]):
        perm = [i for grp in combo for i in grp]
        cand = tuple(tuple(mat[perm[i]][perm[j]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


def classify_matrix(principal: tuple, cap: int = 10_000) -> dict:
    """Search the matrix mutation class for a bipartite finite-type member.

    Matching is up to simultaneous permutation and global sign; transposed
    matches are reported separately (they indicate the convention-mirrored
    family).  Exhausting the class without a match proves the class infinite
    as a cluster algebra; hitting the cap leaves the question undetermined.
    """
    n = len(principal)
    targets: list[tuple[str, tuple, bool]] = []
    for A in all_finite_types(n):
        base = b_of_a(A)
        neg = tuple(tuple(-v for v in row) for row in base)
        tr = tuple(tuple(base[j][i] for j in range(n)) for i in range(n))
        ntr = tuple(tuple(-v for v in row) for row in tr)
        targets.append((A.type_name(), _canon_square(base), False))
        targets.append((A.type_name(), _canon_square(neg), False))
        targets.append((A.type_name(), _canon_square(tr), True))
        targets.append((A.type_name(), _canon_square(ntr), True))

    start = _canon_square(tuple(tuple(row) for row in principal))
    seen = {start}
    frontier = [start]
    direct: set[str] = set()
    transposed: set[str] = set()
    truncated = False
    while frontier:
        nxt = []
        for mat in frontier:
            for name, canon, is_tr in targets:
                if mat == canon:
                    (transposed if is_tr else direct).add(name)
            for k in range(n):
                img = _canon_square(_square_mutation(mat, k))
                if img not in seen:
                    if len(seen) >= cap:
                        truncated = True
                        break
                    seen.add(img)
                    nxt.append(img)
            if truncated:
                break
        if truncated or direct:
            break
        frontier = nxt

    if direct:
        verdict = "finite"
        types = sorted(direct)
    elif transposed:
        verdict = "finite"
        types = sorted(f"{t} (transposed)" for t in transposed)
    elif truncated:
        verdict = "undetermined (cap)"
        types = []
    else:
        verdict = "infinite"
        types = []
    return {
        "v": 1,
        "verdict": verdict,
        "finite": True if types else (None if truncated else False),
        "types": types,
        "class_size": len(seen),
        "cap": cap,
    }


def cmd_classify(args) -> int:
    seed = _load_seed(args.seed_file)
    result = classify_matrix(seed.matrix.principal_part(), args.cap_vertices)
    _emit(result)
    if result["verdict"] == "undetermined (cap)":
        return 3
    return 0


def cmd_dbc(args) -> int:
    word_entries = _parse_sequence(args.word)
    family = args.family.upper()
    try:
        A = cartan_of_type(family, args.r)
    except CartanError as exc:
        raise InputError(str(exc)) from exc
    try:
        word, struct = parse_double_word(args.r, word_entries, A)
        matrix = btilde_of_word(word, struct, A)
    except (WordError, SeedError) as exc:
        raise InputError(str(exc)) from exc

    out = {
        "v": 1,
        "r": args.r,
        "family": family,
        "word": list(word.entries),
        "m": word.m,
        "ex": [k for k in struct.ex],
        "btilde": [list(row) for row in matrix.rows],
        "minors": [],
        "verifications": [],
    }
    labels = [gamma_delta(word, k, A) for k in range(1, word.m + 1)]
    if family == "A":
        M = symbolic_matrix(args.r + 1)
        fam = minor_family(word, M, A)
        for k in range(1, word.m + 1):
            lab = labels[k - 1]
            out["minors"].append(
                {
                    "k": k,
                    "rows": list(lab.rows),
                    "cols": list(lab.cols),
                    "poly": str(fam[k - 1]),
                }
            )
        for k in struct.ex:
            ver = verify_adjacent_exchange(word, struct, k, A, M)
            out["verifications"].append(
                {
                    "k": k,
                    "status": ver.status,
                    "quotient": str(ver.quotient) if ver.quotient is not None else None,
                    "det_powers": list(ver.det_powers),
                    "numeric_points": ver.numeric_points,
                    "numeric_ok": ver.numeric_ok,
                }
            )
    else:
        for k in range(1, word.m + 1):
            lab = labels[k - 1]
            out["minors"].append(
                {"k": k, "gamma": list(lab.gamma), "delta": list(lab.delta)}
            )
    _emit(out)
    return 0


def cmd_denoms(args) -> int:
    seed = _load_seed(args.seed_file)
    limits = EnumLimits(args.cap_vertices, args.cap_depth)
    graph = enumerate_exchange_graph(seed, limits)
    if not graph.finite:
        _emit(
            {
                "v": 1,
                "verdict": "undetermined (cap)",
                "vertices": len(graph.vertices),
                "depth_profile": graph.depth_profile,
            }
        )
        return 3

    names = _delta_names(seed)
    variables = sorted(graph.cluster_variables(), key=lambda p: p.sort_key())
    table = [
        {"poly": str(v), "delta": list(denominator_vector(v, names))}
        for v in variables
    ]
    out = {"v": 1, "verdict": "finite", "variables": table}

    type_name = args.type
    if type_name is None:
        result = classify_matrix(seed.matrix.principal_part(), args.cap_vertices)
        if result["types"] and "(transposed)" not in result["types"][0]:
            type_name = result["types"][0]
    if type_name:
        try:
            A = cartan_of_type(type_name[0], int(type_name[1:]))
        except (CartanError, ValueError) as exc:
            raise InputError(f"bad type {type_name!r}: {exc}") from exc
        report = denominator_bijection_check(graph, A)
        out["type"] = type_name
        out["report"] = [
            {"name": item.name, "passed": item.passed, "detail": item.detail}
            for item in report
        ]
    _emit(out)
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(stream=sys.stdout)
    return 0 if all(r.passed for r in results) else 1


def cmd_serve(args) -> int:
    from .service import run_server

    run_server(args.port, args.state_dir)
    return 0


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterlab",
        description="Exact-arithmetic workbench for cluster algebras of geometric type",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p, vertices=100_000, depth=64):
        p.add_argument("--cap-vertices", type=int, default=vertices)
        p.add_argument("--cap-depth", type=int, default=depth)

    p = sub.add_parser("mutate", help="apply a mutation sequence to a seed")
    p.add_argument("seed_file")
    p.add_argument("sequence", nargs="?", default="", help="comma-separated 1-based directions")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("graph", help="enumerate the exchange graph")
    p.add_argument("seed_file")
    add_caps(p)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("classify", help="finite-type recognition of the principal part")
    p.add_argument("seed_file")
    p.add_argument("--cap-vertices", type=int, default=10_000)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dbc", help="double-word seed data and exchange verification")
    p.add_argument("r", type=int)
    p.add_argument("word", help="comma-separated signed entries, e.g. 1,2,1,2,1,-1,-2,-1")
    p.add_argument("--family", default="A")
    p.set_defaults(func=cmd_dbc)

    p = sub.add_parser("denoms", help="denominator vectors and root-system comparison")
    p.add_argument("seed_file")
    p.add_argument("--type", default=None, help="Cartan-Killing type, e.g. A2")
    add_caps(p)
    p.set_defaults(func=cmd_denoms)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8645)
    p.add_argument("--state-dir", default=None)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapUndetermined as exc:
        print(f"undetermined: {exc}", file=sys.stderr)
        return 3
    except (SeedError, LaurentError, WordError, CartanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
