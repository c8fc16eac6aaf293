"""Seeds of geometric type and their mutations.

A seed couples an extended cluster (m Laurent polynomials in the initial
variables) with an m x n extended exchange matrix whose columns are labeled
by the exchangeable positions.  Mutation returns a new seed; nothing here is
ever modified in place, so seeds are safe to share across threads.

Cluster variables are stored fully expanded in the initial variables.  This
makes Laurent-ness, denominator vectors and equality decidable by
construction, at the cost of expression swell, which the sparse exact
arithmetic in `laurent` is built to absorb.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from ._intmat import integer_rank
from .laurent import (
    LaurentError,
    LaurentPoly,
    VarSet,
    parse_laurent,
    substitute_fraction,
    try_exact_div,
)


class SeedError(ValueError):
    """Structurally invalid seed or matrix."""


class NotAcyclicError(SeedError):
    """Operation requires an acyclic exchange matrix."""


class LaurentViolation(RuntimeError):
    """An exchange division failed; indicates an implementation bug."""


# -- extended exchange matrices ----------------------------------------------------


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    """m x n integer matrix with columns labeled by exchangeable row positions.

    `ex` lists the exchangeable positions (0-based, strictly increasing);
    column j of `rows` is labeled by ex[j].  The principal part (rows and
    columns in ex) must be skew-symmetrizable.  The integer rank is computed
    and exposed but not enforced: bipartite type seeds of odd rank are
    rank-deficient and still meaningful for mutation.
    """

    rows: tuple[tuple[int, ...], ...]
    ex: tuple[int, ...]

    def __post_init__(self):
        m = len(self.rows)
        n = len(self.ex)
        if n == 0 or m < n:
            raise SeedError("need 1 <= n <= m")
        if list(self.ex) != sorted(set(self.ex)) or self.ex[0] < 0 or self.ex[-1] >= m:
            raise SeedError("ex must be a strictly increasing subset of row positions")
        for row in self.rows:
            if len(row) != n:
                raise SeedError("all rows must have n entries")
            for v in row:
                if not isinstance(v, int):
                    raise SeedError("matrix entries must be ints")
        if find_skew_symmetrizer(self.principal_part())[0] is None:
            raise SeedError("principal part is not skew-symmetrizable")

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.ex)

    @cached_property
    def col_of(self) -> dict[int, int]:
        return {k: j for j, k in enumerate(self.ex)}

    def principal_part(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.rows[k] for k in self.ex)

    @cached_property
    def rank(self) -> int:
        return integer_rank(self.rows)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.n

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        d, _ = find_skew_symmetrizer(self.principal_part())
        return d


def find_skew_symmetrizer(b) -> tuple[tuple[int, ...] | None, tuple[int, int] | None]:
    """Coprime positive integers d with d_i b_ik = -d_k b_ki, or a witness pair.

    Returns (d, None) on success and (None, (i, k)) when the pair (i, k)
    proves no symmetrizer exists.  Ratios are propagated over the connected
    components of the nonzero pattern and then verified globally.
    """
    n = len(b)
    for i in range(n):
        if b[i][i] != 0:
            return None, (i, i)
        for k in range(i + 1, n):
            if (b[i][k] == 0) != (b[k][i] == 0):
                return None, (i, k)
            if b[i][k] != 0 and (b[i][k] > 0) == (b[k][i] > 0):
                return None, (i, k)

    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for k in range(n):
                if b[i][k] == 0 or i == k:
                    continue
                cand = d[i] * Fraction(abs(b[i][k]), abs(b[k][i]))
                if d[k] is None:
                    d[k] = cand
                    comp.append(k)
                    stack.append(k)
                elif d[k] != cand:
                    return None, (i, k)
        lcm = 1
        for i in comp:
            q = d[i].denominator
            lcm = lcm * q // gcd(lcm, q)
        g = 0
        for i in comp:
            d[i] = d[i] * lcm
            g = gcd(g, int(d[i]))
        for i in comp:
            d[i] = Fraction(int(d[i]) // g)

    ints = tuple(int(x) for x in d)
    for i in range(n):
        for k in range(n):
            if ints[i] * b[i][k] != -ints[k] * b[k][i]:
                return None, (i, k)
    return ints, None


def matrix_mutation(M: ExtendedExchangeMatrix, k: int) -> ExtendedExchangeMatrix:
    """Mutation of the extended exchange matrix in direction k (k in ex).

    Entries in row k or in the column labeled k flip sign; any other entry
    b_ij becomes b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
    """
    if k not in M.col_of:
        raise SeedError(f"direction {k} is not exchangeable (ex = {list(M.ex)})")
    ck = M.col_of[k]
    rows = []
    for i in range(M.m):
        row = []
        for j, label in enumerate(M.ex):
            if i == k or label == k:
                row.append(-M.rows[i][j])
            else:
                bik = M.rows[i][ck]
                bkj = M.rows[k][j]
                row.append(M.rows[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        rows.append(tuple(row))
    return ExtendedExchangeMatrix(tuple(rows), M.ex)


# -- seeds -------------------------------------------------------------------------


@dataclass(frozen=True)
class Seed:
    """Extended cluster plus extended exchange matrix, in initial variables."""

    varset: VarSet
    cluster: tuple[LaurentPoly, ...]
    matrix: ExtendedExchangeMatrix

    def __post_init__(self):
        if len(self.cluster) != self.matrix.m:
            raise SeedError("cluster length must match the matrix row count")
        for p in self.cluster:
            if p.varset != self.varset:
                raise SeedError("cluster entries must live in the seed's variable set")
            if p.is_zero():
                raise SeedError("cluster entries must be nonzero")

    @property
    def frozen_positions(self) -> tuple[int, ...]:
        exset = set(self.matrix.ex)
        return tuple(p for p in range(self.matrix.m) if p not in exset)

    def exchangeable_entries(self) -> tuple[LaurentPoly, ...]:
        return tuple(self.cluster[p] for p in self.matrix.ex)

    def mutate(self, k: int) -> "Seed":
        return seed_mutation(self, k)

    @cached_property
    def canonical_key(self):
        return canonical_key(self)

    @cached_property
    def cluster_key(self):
        """Relabeling-invariant key of the exchangeable cluster alone."""
        return tuple(sorted(p.sort_key() for p in self.exchangeable_entries()))

    def is_initial_form(self) -> bool:
        """True when every cluster entry is the variable at its position."""
        return all(
            self.cluster[p] == self.varset.var(self.varset.names[p])
            for p in range(self.matrix.m)
        )


def initial_seed(matrix: ExtendedExchangeMatrix, names=None) -> Seed:
    """The seed whose extended cluster is the variables themselves."""
    if names is None:
        names = [f"x{i + 1}" for i in range(matrix.m)]
    vs = VarSet(names)
    if len(vs) != matrix.m:
        raise SeedError("need exactly one variable name per matrix row")
    return Seed(vs, vs.gens(), matrix)


def rebase(seed: Seed) -> Seed:
    """Forget the cluster expansions: same matrix, cluster reset to the variables."""
    return Seed(seed.varset, seed.varset.gens(), seed.matrix)


def exchange_binomial(seed: Seed, k: int) -> LaurentPoly:
    """The sum of the two exchange monomials at direction k.

    Products are taken over the current cluster entries with positive
    (respectively negative) entries in column k; an empty product is 1.
    """
    ck = seed.matrix.col_of[k]
    plus = seed.varset.one()
    minus = seed.varset.one()
    for i in range(seed.matrix.m):
        b = seed.matrix.rows[i][ck]
        if b > 0:
            plus = plus * seed.cluster[i] ** b
        elif b < 0:
            minus = minus * seed.cluster[i] ** (-b)
    return plus + minus


def seed_mutation(seed: Seed, k: int) -> Seed:
    """Seed mutation in direction k: exchange the variable at k, mutate the matrix."""
    if k not in seed.matrix.col_of:
        raise SeedError(f"direction {k} is not exchangeable (ex = {list(seed.matrix.ex)})")
    binom = exchange_binomial(seed, k)
    new_var = try_exact_div(binom, seed.cluster[k])
    if new_var is None:
        raise LaurentViolation(
            f"exchange at direction {k} is not an integer Laurent polynomial"
        )
    cluster = list(seed.cluster)
    cluster[k] = new_var
    return Seed(seed.varset, tuple(cluster), matrix_mutation(seed.matrix, k))


# -- canonical form ----------------------------------------------------------------


def canonical_key(seed: Seed):
    """Relabeling-invariant fingerprint of a seed.

    Exchangeable entries are sorted by the fixed term order; matrix rows and
    columns are permuted to match, frozen rows stay in original order.  Ties
    between equal cluster entries (impossible for genuine seeds, possible for
    degenerate input) are broken by minimizing the permuted matrix.
    """
    ex = seed.matrix.ex
    skeys = {p: seed.cluster[p].sort_key() for p in ex}
    order = sorted(ex, key=lambda p: skeys[p])

    groups: list[list[int]] = []
    for p in order:
        if groups and skeys[groups[-1][0]] == skeys[p]:
            groups[-1].append(p)
        else:
            groups.append([p])

    def serialize(perm) -> tuple:
        col = seed.matrix.col_of
        row_order = list(seed.frozen_positions) + list(perm)
        return tuple(
            tuple(seed.matrix.rows[r][col[q]] for q in perm) for r in row_order
        )

    if all(len(g) == 1 for g in groups):
        best = serialize(order)
    else:
        best = min(
            serialize(list(itertools.chain.from_iterable(combo)))
            for combo in itertools.product(
                *[list(map(list, itertools.permutations(g))) for g in groups]
            )
        )
    return (tuple(skeys[p] for p in order), best)


# -- structural predicates -----------------------------------------------------------


def is_acyclic(M: ExtendedExchangeMatrix) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the principal part is acyclic, with a witness ordering.

    Orientation: directed edge i -> j between exchangeable positions when
    b_ij > 0.  Returns (True, topological order of ex) or (False, None).
    """
    ex = M.ex
    col = M.col_of
    indeg = {k: 0 for k in ex}
    succ = {k: [] for k in ex}
    for i in ex:
        for j in ex:
            if i != j and M.rows[i][col[j]] > 0:
                succ[i].append(j)
                indeg[j] += 1
    queue = sorted(k for k in ex if indeg[k] == 0)
    order = []
    while queue:
        i = queue.pop(0)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
        queue.sort()
    if len(order) == len(ex):
        return True, tuple(order)
    return False, None


def acyclic_presentation(seed: Seed) -> list[LaurentPoly]:
    """Generator list for an acyclic seed: frozen variables with inverses,
    then each exchangeable entry together with its exchange partner."""
    ok, _ = is_acyclic(seed.matrix)
    if not ok:
        raise NotAcyclicError("seed's exchange matrix is not acyclic")
    gens: list[LaurentPoly] = []
    for p in seed.frozen_positions:
        gens.append(seed.cluster[p])
        gens.append(seed.cluster[p] ** -1)
    for k in seed.matrix.ex:
        gens.append(seed.cluster[k])
        binom = exchange_binomial(seed, k)
        new_var = try_exact_div(binom, seed.cluster[k])
        if new_var is None:
            raise LaurentViolation(f"exchange at direction {k} failed")
        gens.append(new_var)
    return gens


# -- adjacent-cluster membership -----------------------------------------------------


def upper_membership(y: LaurentPoly, seed: Seed, k: int) -> bool:
    """Does y lie in the Laurent ring of the cluster adjacent to `seed` at k?

    `seed` must be in initial form (its cluster entries are the variables),
    and y must be expressed in those variables.  The variable at position k
    is rewritten as (exchange binomial) / x'_k with x'_k a fresh symbol, and
    the resulting fraction is tested for exact divisibility in the Laurent
    ring of the adjacent variables.
    """
    if y.varset != seed.varset:
        raise LaurentError("y must be expressed in the seed's variables")
    if not seed.is_initial_form():
        raise SeedError("upper_membership requires a seed in initial form")
    if k not in seed.matrix.col_of:
        raise SeedError(f"direction {k} is not exchangeable")

    old_name = seed.varset.names[k]
    new_name = old_name + "_adj"
    wide = VarSet(seed.varset.names + (new_name,))

    def lift(p: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(wide, {e + (0,): c for e, c in p.terms.items()})

    binom = lift(exchange_binomial(seed, k))
    y_w = lift(y)
    num, den = substitute_fraction(y_w, old_name, binom, wide.var(new_name))
    return try_exact_div(num, den) is not None


# -- JSON --------------------------------------------------------------------------


def seed_to_json(seed: Seed) -> dict:
    return {
        "v": 1,
        "vars": list(seed.varset.names),
        "ex": [k + 1 for k in seed.matrix.ex],
        "B": [list(row) for row in seed.matrix.rows],
        "cluster": [str(p) for p in seed.cluster],
    }


def seed_from_json(obj) -> Seed:
    if not isinstance(obj, dict):
        raise SeedError("seed JSON must be an object")
    try:
        names = [str(v) for v in obj["vars"]]
        ex = tuple(int(k) - 1 for k in obj["ex"])
        rows = tuple(tuple(int(v) for v in row) for row in obj["B"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SeedError(f"malformed seed JSON: {exc}") from exc
    matrix = ExtendedExchangeMatrix(rows, ex)
    vs = VarSet(names)
    if len(vs) != matrix.m:
        raise SeedError("vars length must match the matrix row count")
    if "cluster" in obj and obj["cluster"] is not None:
        cluster = tuple(parse_laurent(s, vs) for s in obj["cluster"])
    else:
        cluster = vs.gens()
    return Seed(vs, cluster, matrix)
