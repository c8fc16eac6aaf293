#!/usr/bin/env python3
"""Walk through the SL3 double word (1,2,1,2,1,-1,-2,-1): print its exchange
matrix, the minor family, and the verified adjacent exchanges."""

from clusterlab.cartan_roots import cartan_of_type
from clusterlab.double_bruhat import (
    btilde_of_word,
    gamma_delta,
    minor_family,
    parse_double_word,
    symbolic_matrix,
    verify_adjacent_exchange,
)


def main() -> None:
    A = cartan_of_type("A", 2)
    word, struct = parse_double_word(2, (1, 2, 1, 2, 1, -1, -2, -1), A)
    matrix = btilde_of_word(word, struct, A)
    M = symbolic_matrix(3)
    fam = minor_family(word, M, A)

    print(f"word: {list(word.entries)}   exchangeable positions: {list(struct.ex)}")
    print("extended exchange matrix:")
    for row in matrix.rows:
        print("   ", " ".join(f"{v:3d}" for v in row))

    print("\nminor family:")
    for k in range(1, word.m + 1):
        lab = gamma_delta(word, k, A)
        rows = "".join(map(str, lab.rows))
        cols = "".join(map(str, lab.cols))
        print(f"  f_{k} = D{{{rows}|{cols}}} = {fam[k - 1]}")

    print("\nadjacent exchanges:")
    for k in struct.ex:
        ver = verify_adjacent_exchange(word, struct, k, A, M)
        note = "" if ver.det_powers == (0, 0) else f"  [det powers {ver.det_powers}]"
        print(f"  k={k}: {ver.status:7s} f'_{k} = {ver.quotient}{note}")
        print(f"        confirmed at {ver.numeric_points} determinant-one points")


if __name__ == "__main__":
    main()
