"""Ready-made seeds: bipartite finite-type seeds, rank-2 (b, c) seeds, and
the SL3 double-word seed."""

from __future__ import annotations

import re

from .cartan_roots import CartanMatrix, b_of_a, cartan_of_type
from .double_bruhat import btilde_of_word, parse_double_word
from .seed import ExtendedExchangeMatrix, Seed, initial_seed

_RANK2_RE = re.compile(r"rank2-(\d+)-(\d+)$")
_TYPE_RE = re.compile(r"([a-gA-G])(\d+)$")


def seed_of_cartan(A: CartanMatrix) -> Seed:
    """Initial-form seed on the bipartite exchange matrix of A (no frozen rows)."""
    rows = b_of_a(A)
    matrix = ExtendedExchangeMatrix(rows, tuple(range(A.n)))
    return initial_seed(matrix)


def rank2_seed(b: int, c: int) -> Seed:
    if b < 0 or c < 0:
        raise ValueError("need b, c >= 0")
    matrix = ExtendedExchangeMatrix(((0, b), (-c, 0)), (0, 1))
    return initial_seed(matrix)


def sl3_double_word_seed() -> Seed:
    """Seed on the 8x4 exchange matrix of the SL3 double word (1,2,1,2,1,-1,-2,-1)."""
    A = cartan_of_type("A", 2)
    word, struct = parse_double_word(2, (1, 2, 1, 2, 1, -1, -2, -1), A)
    return initial_seed(btilde_of_word(word, struct, A))


PRESET_LABELS = {
    "a2": "type A2 bipartite seed",
    "a3": "type A3 bipartite seed",
    "a4": "type A4 bipartite seed",
    "b2": "type B2 bipartite seed",
    "b3": "type B3 bipartite seed",
    "c3": "type C3 bipartite seed",
    "d4": "type D4 bipartite seed",
    "g2": "type G2 bipartite seed",
    "rank2-1-1": "rank 2, b=c=1 (pentagon)",
    "rank2-2-2": "rank 2, b=c=2 (infinite)",
    "rank2-1-3": "rank 2, b=1, c=3",
    "sl3": "SL3 double word (1,2,1,2,1,-1,-2,-1), 8x4",
}


def preset_seed(name: str) -> Seed:
    """Build a preset seed by id; rank2-b-c ids are parametric."""
    key = name.strip().lower()
    if key == "sl3":
        return sl3_double_word_seed()
    m = _RANK2_RE.match(key)
    if m:
        return rank2_seed(int(m.group(1)), int(m.group(2)))
    m = _TYPE_RE.match(key)
    if m:
        return seed_of_cartan(cartan_of_type(m.group(1).upper(), int(m.group(2))))
    raise ValueError(f"unknown preset {name!r}")


def list_presets() -> list[dict]:
    out = []
    for key, label in PRESET_LABELS.items():
        seed = preset_seed(key)
        out.append(
            {"id": key, "label": label, "m": seed.matrix.m, "n": seed.matrix.n}
        )
    return out
