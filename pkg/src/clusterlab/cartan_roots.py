"""Finite-type Cartan matrices, root systems and Weyl group elements.

Conventions used throughout:

* the Cartan matrix A = (a_ij) is the transition matrix from simple roots to
  fundamental weights, alpha_j = sum_i a_ij omega_i;
* simple reflections act on root coordinates by s_i(alpha_j) = alpha_j - a_ij alpha_i,
  and on weight coordinates by s_i(lam) = lam - lam_i alpha_i;
* roots are integer vectors in the simple-root basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from ._intmat import integer_det
from .laurent import LaurentError


class CartanError(ValueError):
    """Invalid Cartan matrix or type label."""


FINITE_FAMILIES = "ABCDEFG"


def _family_rank_ok(family: str, n: int) -> bool:
    if family == "A":
        return n >= 1
    if family in ("B", "C"):
        return n >= 2
    if family == "D":
        return n >= 3
    if family == "E":
        return n in (6, 7, 8)
    if family == "F":
        return n == 4
    if family == "G":
        return n == 2
    return False


@dataclass(frozen=True)
class CartanMatrix:
    """A symmetrizable generalized Cartan matrix, optionally tagged with a type."""

    rows: tuple[tuple[int, ...], ...]
    family: str | None = None
    rank_tag: int | None = None

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise CartanError("Cartan matrix must be square")
            if row[i] != 2:
                raise CartanError("diagonal entries must equal 2")
            for j, v in enumerate(row):
                if i != j and v > 0:
                    raise CartanError("off-diagonal entries must be <= 0")
                if i != j and (v == 0) != (self.rows[j][i] == 0):
                    raise CartanError("zero pattern must be symmetric")
        if symmetrizer(self.rows) is None:
            raise CartanError("matrix is not symmetrizable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def positive_roots_cached(self) -> tuple[tuple[int, ...], ...]:
        return tuple(positive_roots(self))

    def type_name(self) -> str:
        if self.family is None:
            return f"rank-{self.n}"
        return f"{self.family}{self.rank_tag}"


def symmetrizer(rows) -> tuple[int, ...] | None:
    """Coprime positive integers d with d_i a_ij = d_j a_ji, or None."""
    n = len(rows)
    from fractions import Fraction

    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or rows[i][j] == 0:
                    continue
                if rows[j][i] == 0:
                    return None
                cand = d[i] * Fraction(abs(rows[i][j]), abs(rows[j][i]))
                if d[j] is None:
                    d[j] = cand
                    stack.append(j)
                elif d[j] != cand:
                    return None
    dens = [x.denominator for x in d]
    lcm = 1
    for v in dens:
        lcm = lcm * v // gcd(lcm, v)
    ints = [int(x * lcm) for x in d]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for i in range(n):
        for j in range(n):
            if ints[i] * rows[i][j] != ints[j] * rows[j][i]:
                return None
    return tuple(ints)


def cartan_of_type(family: str, n: int) -> CartanMatrix:
    """Standard Cartan matrix of the given finite type.

    Bourbaki numbering; for B_n the short root is alpha_n (a_{n,n-1} = -2),
    C_n is its transpose, and G_2 is fixed as [[2,-1],[-3,2]].
    """
    family = family.upper()
    if not _family_rank_ok(family, n):
        raise CartanError(f"{family}{n} is not in the finite-type classification")

    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, vij=-1, vji=-1):
        a[i][j] = vij
        a[j][i] = vji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            bond(n - 2, n - 1, -1, -2)
        if family == "C" and n >= 2:
            bond(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        # chain 1-3-4-5-6(-7-8) with node 2 hanging off node 4 (1-based)
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for x, y in zip(chain, chain[1:]):
            bond(x, y)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)
    return CartanMatrix(tuple(tuple(r) for r in a), family, n)


def _canonical_rank_ok(family: str, n: int) -> bool:
    # one representative per isomorphism class: C starts at 3 (C2 = B2
    # transposed), D at 4 (D3 = A3 relabeled)
    if family == "C":
        return n >= 3
    if family == "D":
        return n >= 4
    return _family_rank_ok(family, n)


def all_finite_types(n: int) -> list[CartanMatrix]:
    """The indecomposable finite-type Cartan matrices of rank n, one per
    Cartan-Killing isomorphism class."""
    out = []
    for fam in FINITE_FAMILIES:
        if _canonical_rank_ok(fam, n):
            out.append(cartan_of_type(fam, n))
    return out


# -- bipartite exchange matrix ----------------------------------------------------


def b_of_a(A: CartanMatrix) -> tuple[tuple[int, ...], ...]:
    """The bipartite exchange matrix attached to A.

    b_ii = 0 and b_ij = eps(i) a_ij for i != j, where eps two-colors the
    Dynkin graph with eps = +1 on the lowest-numbered vertex of each
    connected component.
    """
    n = A.n
    eps = [0] * n
    for start in range(n):
        if eps[start]:
            continue
        eps[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and A.rows[i][j] != 0:
                    if eps[j] == 0:
                        eps[j] = -eps[i]
                        stack.append(j)
                    elif eps[j] != -eps[i]:
                        raise CartanError("Dynkin graph is not bipartite")
    return tuple(
        tuple(0 if i == j else eps[i] * A.rows[i][j] for j in range(n)) for i in range(n)
    )


# -- roots ------------------------------------------------------------------------


def reflect_root(A: CartanMatrix, i: int, root: tuple[int, ...]) -> tuple[int, ...]:
    """s_i acting on simple-root coordinates."""
    pairing = sum(A.rows[i][j] * root[j] for j in range(A.n))
    out = list(root)
    out[i] -= pairing
    return tuple(out)


def positive_roots(A: CartanMatrix, cap: int = 10_000) -> list[tuple[int, ...]]:
    """All positive roots, by reflection closure of the simple roots.

    The closure blowing past `cap` vectors signals a non-finite-type input.
    """
    n = A.n
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(n):
                img = reflect_root(A, i, root)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        if len(seen) > cap:
            raise CartanError("reflection closure exceeded cap; not finite type?")
        frontier = nxt
    pos = [r for r in seen if all(x >= 0 for x in r)]
    pos.sort(key=lambda r: (sum(r), r))
    return pos


def almost_positive(A: CartanMatrix) -> list[tuple[int, ...]]:
    """Positive roots together with the negatives of the simple roots."""
    n = A.n
    neg_simple = [tuple(-1 if j == i else 0 for j in range(n)) for i in range(n)]
    return neg_simple + positive_roots(A)


# -- Weyl group -------------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as an integer matrix acting on root coordinates."""

    A: CartanMatrix
    action: tuple[tuple[int, ...], ...]

    @cached_property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        count = 0
        for root in self.A.positive_roots_cached:
            img = self._apply(root)
            if all(x <= 0 for x in img):
                count += 1
        return count

    def _apply(self, v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.action)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        n = self.A.n
        rows = tuple(
            tuple(
                sum(self.action[i][k] * other.action[k][j] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        return WeylElement(self.A, rows)

    def is_identity(self) -> bool:
        n = self.A.n
        return all(
            self.action[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
        )


def identity_element(A: CartanMatrix) -> WeylElement:
    n = A.n
    return WeylElement(A, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def simple_reflection(A: CartanMatrix, i: int) -> WeylElement:
    """Matrix of s_i on root coordinates: column j is s_i(alpha_j)."""
    n = A.n
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for j in range(n):
        rows[i][j] -= A.rows[i][j]
    return WeylElement(A, tuple(tuple(r) for r in rows))


def weyl_element(A: CartanMatrix, word: list[int] | tuple[int, ...]) -> WeylElement:
    """Product s_{word[0]} ... s_{word[-1]} (indices 0-based).

    The word is reduced iff the element's length equals len(word).
    """
    w = identity_element(A)
    for i in word:
        if not 0 <= i < A.n:
            raise CartanError(f"reflection index {i} out of range")
        w = w * simple_reflection(A, i)
    return w


def is_reduced(A: CartanMatrix, word) -> bool:
    return weyl_element(A, word).length == len(word)


def reduced_words(A: CartanMatrix, w: WeylElement) -> list[tuple[int, ...]]:
    """All reduced words for w (exponential; meant for small rank/length)."""
    if w.is_identity():
        return [()]
    out = []
    for i in range(A.n):
        si = simple_reflection(A, i)
        rest = si * w
        if rest.length == w.length - 1:
            for tail in reduced_words(A, rest):
                out.append((i,) + tail)
    return out


def reflect_weight(A: CartanMatrix, i: int, lam: tuple[int, ...]) -> tuple[int, ...]:
    """s_i acting on fundamental-weight coordinates: lam -> lam - lam_i * alpha_i."""
    out = list(lam)
    li = lam[i]
    if li:
        for p in range(A.n):
            out[p] -= li * A.rows[p][i]
    return tuple(out)


# -- denominator vectors vs roots --------------------------------------------------


@dataclass
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


def denominator_bijection_check(graph, A: CartanMatrix, degree_bound: int = 3) -> list[CheckItem]:
    """Check the denominator-vector parametrization of a finite exchange graph.

    `graph` must come from the initial-form seed whose exchange matrix is
    b_of_a(A) with no frozen rows.  Checks performed:

    * initial variables map to the negated standard basis vectors;
    * denominator vectors biject the cluster variables onto the almost
      positive roots;
    * cluster monomials of total degree <= degree_bound have pairwise
      distinct denominator vectors;
    * every cluster's denominator vectors form a Z-basis (determinant ±1).
    """
    from itertools import combinations_with_replacement

    from .laurent import denominator_vector

    base = graph.base
    names = [base.varset.names[p] for p in base.matrix.ex]
    n = len(names)
    out: list[CheckItem] = []

    variables = sorted(graph.cluster_variables(), key=lambda p: p.sort_key())
    deltas = {}
    for v in variables:
        deltas[v] = denominator_vector(v, names)

    neg_simple = {tuple(-1 if j == i else 0 for j in range(n)) for i in range(n)}
    initial_ok = all(
        deltas[base.cluster[p]] in neg_simple for p in base.matrix.ex
    )
    out.append(CheckItem("initial-variables-to-negative-simple", initial_ok))

    image = sorted(deltas.values())
    target = sorted(almost_positive(A))
    bijective = len(set(deltas.values())) == len(variables) and image == target
    out.append(
        CheckItem(
            "bijection-onto-almost-positive-roots",
            bijective,
            f"{len(variables)} variables vs {len(target)} roots",
        )
    )

    seen: dict[tuple[int, ...], object] = {}
    mono_ok = True
    witness = ""
    for key in sorted(graph.vertices):
        seed = graph.vertices[key]
        entries = [seed.cluster[p] for p in seed.matrix.ex]
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
                    mono_ok = False
                    witness = f"delta collision at {d}"
        if not mono_ok:
            break
    out.append(CheckItem("distinct-monomial-denominators", mono_ok, witness))

    basis_ok = True
    for key in sorted(graph.vertices):
        seed = graph.vertices[key]
        mat = [list(deltas[seed.cluster[p]]) for p in seed.matrix.ex]
        if abs(integer_det(mat)) != 1:
            basis_ok = False
            break
    out.append(CheckItem("cluster-denominators-are-lattice-basis", basis_ok))
    return out
