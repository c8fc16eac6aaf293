"""Double reduced words, their extended exchange matrices, and generalized
minors realized symbolically for SL_{r+1}.

A double word over rank r is a sequence (i_1, ..., i_m) with entries in
-[1,r] u [1,r] and i_j = j for j <= r.  The negative entries spell a reduced
word for u, the positive entries past position r a reduced word for v, with
the convention that s at a negative index is the identity.  Positions are
1-based throughout this module, matching the combinatorics; the exchange
matrices handed to `seed` translate to 0-based labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations

from .cartan_roots import (
    CartanMatrix,
    WeylElement,
    cartan_of_type,
    identity_element,
    reduced_words,
    reflect_weight,
    simple_reflection,
)
from .laurent import LaurentPoly, VarSet, evaluate
from .laurent import try_exact_div
from .seed import ExtendedExchangeMatrix, SeedError


class WordError(ValueError):
    """Malformed double word."""


class BadPrefixError(WordError):
    """The first r entries must be 1, ..., r."""


class NotReducedError(WordError):
    def __init__(self, part: str, prefix):
        super().__init__(f"{part}-word is not reduced at prefix {list(prefix)}")
        self.part = part
        self.prefix = tuple(prefix)


@dataclass(frozen=True)
class DoubleWord:
    r: int
    entries: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.entries)

    def u_word(self) -> tuple[int, ...]:
        """Indices (1-based) of the reduced word for u, in order."""
        return tuple(-e for e in self.entries if e < 0)

    def v_word(self) -> tuple[int, ...]:
        return tuple(e for e in self.entries[self.r :] if e > 0)


@dataclass(frozen=True)
class WordStructure:
    """k+ / k- successor maps (1-based positions; sentinels m+1 and 0) and
    the set of exchangeable positions."""

    kplus: tuple[int, ...]
    kminus: tuple[int, ...]
    ex: tuple[int, ...]


def parse_double_word(r: int, entries, A: CartanMatrix) -> tuple[DoubleWord, WordStructure]:
    """Validate a double word against a rank-r Cartan matrix.

    Checks the fixed prefix, the entry alphabet, and that both hidden words
    are reduced (via Weyl-element lengths); computes k+, k- and the
    exchangeable set.
    """
    entries = tuple(int(e) for e in entries)
    if A.n != r:
        raise WordError(f"Cartan matrix rank {A.n} does not match r={r}")
    if len(entries) < r:
        raise BadPrefixError(f"word must start with the prefix 1..{r}")
    for j in range(r):
        if entries[j] != j + 1:
            raise BadPrefixError(f"entry {j + 1} must be {j + 1}, got {entries[j]}")
    for e in entries:
        if e == 0 or abs(e) > r:
            raise WordError(f"entry {e} outside -[1,{r}] u [1,{r}]")

    word = DoubleWord(r, entries)
    for part, letters in (("u", word.u_word()), ("v", word.v_word())):
        w = identity_element(A)
        for t, a in enumerate(letters):
            w = w * simple_reflection(A, a - 1)
            if w.length != t + 1:
                raise NotReducedError(part, letters[: t + 1])

    m = len(entries)
    kplus = []
    for k in range(1, m + 1):
        nxt = m + 1
        for ell in range(k + 1, m + 1):
            if abs(entries[ell - 1]) == abs(entries[k - 1]):
                nxt = ell
                break
        kplus.append(nxt)
    kminus = [0] * m
    for k in range(1, m + 1):
        if kplus[k - 1] <= m:
            kminus[kplus[k - 1] - 1] = k
    ex = tuple(k for k in range(r + 1, m + 1) if kplus[k - 1] <= m)
    return word, WordStructure(tuple(kplus), tuple(kminus), ex)


def _eps(i: int) -> int:
    return 1 if i > 0 else -1


def btilde_of_word(
    word: DoubleWord, struct: WordStructure, A: CartanMatrix
) -> ExtendedExchangeMatrix:
    """The m x n extended exchange matrix attached to a double word.

    Entries follow the six-case rule keyed on the k+/k- structure; the cases
    are asserted mutually exclusive for every (p, k), and the result is
    required to be skew-symmetrizable of full rank.
    """
    entries = word.entries
    m = word.m
    a = A.rows
    rows = [[0] * len(struct.ex) for _ in range(m)]

    for col, k in enumerate(struct.ex):
        ik = entries[k - 1]
        ek = _eps(ik)
        kp = struct.kplus[k - 1]
        km = struct.kminus[k - 1]
        for p in range(1, m + 1):
            ip = entries[p - 1]
            ep = _eps(ip)
            pp = struct.kplus[p - 1]

            c1 = p == km
            c2 = (p < k < pp < kp and ek == _eps(entries[pp - 1])) or (
                p < k < kp < pp and ek == -_eps(entries[kp - 1])
            )
            c3 = (k < p < kp < pp and ep == _eps(entries[kp - 1])) or (
                k < p < pp < kp and ep == -_eps(entries[pp - 1])
            )
            c4 = p == kp
            if sum((c1, c2, c3, c4)) > 1:
                raise AssertionError(f"overlapping entry cases at (p={p}, k={k})")

            if c1:
                rows[p - 1][col] = -ek
            elif c2:
                rows[p - 1][col] = -ek * a[abs(ip) - 1][abs(ik) - 1]
            elif c3:
                rows[p - 1][col] = ep * a[abs(ip) - 1][abs(ik) - 1]
            elif c4:
                rows[p - 1][col] = ep

    matrix = ExtendedExchangeMatrix(
        tuple(tuple(r) for r in rows), tuple(k - 1 for k in struct.ex)
    )
    if not matrix.is_full_rank:
        raise SeedError("extended exchange matrix of a double word must have full rank")
    return matrix


# -- minor labels ----------------------------------------------------------------


@dataclass(frozen=True)
class MinorLabel:
    """The pair of extremal weights indexing a generalized minor, with the
    row/column subsets of its type-A realization when available."""

    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    rows: tuple[int, ...] | None
    cols: tuple[int, ...] | None


def _apply_transposition(a: int, subset: frozenset) -> frozenset:
    has_a = a in subset
    has_b = (a + 1) in subset
    if has_a == has_b:
        return subset
    out = set(subset)
    if has_a:
        out.discard(a)
        out.add(a + 1)
    else:
        out.discard(a + 1)
        out.add(a)
    return frozenset(out)


def gamma_delta(word: DoubleWord, k: int, A: CartanMatrix) -> MinorLabel:
    """The weights gamma_k, delta_k of the k-th minor of a double word.

    gamma_k applies the negative-entry reflections among positions 1..k
    (rightmost first), delta_k the positive-entry reflections among
    positions m..k+1.  In type A the weights are realized as subsets of
    [1, r+1] acted on by the symmetric group, giving the minor's row and
    column sets.
    """
    entries = word.entries
    r = word.r
    fund = abs(entries[k - 1])
    lam = tuple(1 if j == fund - 1 else 0 for j in range(r))

    gamma = lam
    for j in range(k, 0, -1):
        if entries[j - 1] < 0:
            gamma = reflect_weight(A, -entries[j - 1] - 1, gamma)
    delta = lam
    for j in range(k + 1, word.m + 1):
        if entries[j - 1] > 0:
            delta = reflect_weight(A, entries[j - 1] - 1, delta)

    rows = cols = None
    if A.family == "A":
        subset = frozenset(range(1, fund + 1))
        gset = subset
        for j in range(k, 0, -1):
            if entries[j - 1] < 0:
                gset = _apply_transposition(-entries[j - 1], gset)
        dset = subset
        for j in range(k + 1, word.m + 1):
            if entries[j - 1] > 0:
                dset = _apply_transposition(entries[j - 1], dset)
        rows = tuple(sorted(gset))
        cols = tuple(sorted(dset))
    return MinorLabel(gamma, delta, rows, cols)


# -- symbolic minors for SL_{r+1} ---------------------------------------------------


@dataclass(frozen=True)
class SymbolicMatrix:
    """A square array of independent indeterminates x_pq in one VarSet."""

    size: int
    varset: VarSet
    names: tuple[tuple[str, ...], ...]


def symbolic_matrix(size: int) -> SymbolicMatrix:
    if size < 1:
        raise ValueError("size must be positive")
    sep = "" if size <= 9 else "_"
    names = tuple(
        tuple(f"x{i + 1}{sep}{j + 1}" for j in range(size)) for i in range(size)
    )
    flat = [name for row in names for name in row]
    return SymbolicMatrix(size, VarSet(flat), names)


def _perm_sign(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def minor_poly(M: SymbolicMatrix, rows, cols) -> LaurentPoly:
    """Leibniz expansion of the minor with the given row and column sets."""
    rows = tuple(sorted(rows))
    cols = tuple(sorted(cols))
    if len(rows) != len(cols):
        raise ValueError("row and column sets must have equal size")
    if not rows:
        return M.varset.one()
    if min(rows + cols) < 1 or max(rows + cols) > M.size:
        raise ValueError("row/column index out of range")
    s = len(rows)
    vs = M.varset
    terms: dict[tuple[int, ...], int] = {}
    width = len(vs)
    for perm in permutations(range(s)):
        e = [0] * width
        for a in range(s):
            e[vs.index[M.names[rows[a] - 1][cols[perm[a]] - 1]]] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + _perm_sign(perm)
    return LaurentPoly(vs, terms)


def det_poly(M: SymbolicMatrix) -> LaurentPoly:
    full = range(1, M.size + 1)
    return minor_poly(M, full, full)


def minor_family(
    word: DoubleWord, M: SymbolicMatrix, A: CartanMatrix
) -> list[LaurentPoly]:
    """The minors f_1, ..., f_m of a type-A double word, as polynomials."""
    if A.family != "A" or M.size != word.r + 1:
        raise WordError("symbolic minors are realized only for type A of rank r")
    out = []
    for k in range(1, word.m + 1):
        label = gamma_delta(word, k, A)
        out.append(minor_poly(M, label.rows, label.cols))
    return out


def frozen_minor_family(
    word: DoubleWord, struct: WordStructure, M: SymbolicMatrix, A: CartanMatrix
) -> frozenset[LaurentPoly]:
    """The minors at non-exchangeable positions; depends only on (u, v)."""
    fam = minor_family(word, M, A)
    exset = set(struct.ex)
    return frozenset(fam[k - 1] for k in range(1, word.m + 1) if k not in exset)


# -- exchange verification -----------------------------------------------------------


@dataclass
class ExchangeVerification:
    k: int
    status: str  # "exact" | "mod_det" | "failed"
    quotient: LaurentPoly | None
    det_powers: tuple[int, int]
    numeric_points: int
    numeric_ok: bool
    detail: str = ""

    @property
    def verified(self) -> bool:
        return self.status in ("exact", "mod_det") and self.numeric_ok


def random_sl_point(M: SymbolicMatrix, rng: random.Random) -> dict[str, int]:
    """Integer matrix of determinant one, as a variable assignment.

    Built as a product of 6-10 elementary shears with parameters in [-3, 3],
    so the determinant is exactly 1 while all entries vary.
    """
    n = M.size
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(6, 10)):
        a = rng.randrange(n)
        b = rng.randrange(n)
        while b == a:
            b = rng.randrange(n)
        t = rng.randint(-3, 3)
        # right-multiply by I + t E_ab: column b += t * column a
        for i in range(n):
            mat[i][b] += t * mat[i][a]
    return {M.names[i][j]: mat[i][j] for i in range(n) for j in range(n)}


def verify_adjacent_exchange(
    word: DoubleWord,
    struct: WordStructure,
    k: int,
    A: CartanMatrix,
    M: SymbolicMatrix | None = None,
    rng: random.Random | None = None,
    points: int = 20,
) -> ExchangeVerification:
    """Check that the exchange at position k produces a regular function.

    The exchange numerator is assembled from the k-column of the word's
    exchange matrix and divided by f_k.  Since the identity may hold only
    modulo det = 1, summands are first rescaled by det powers to equalize
    total degree (each minor is homogeneous); success without rescaling is
    reported as "exact", with rescaling as "mod_det".  Either way the
    quotient is confirmed by exact rational evaluation at `points` random
    determinant-one integer matrices.
    """
    if k not in struct.ex:
        raise WordError(f"position {k} is not exchangeable")
    if M is None:
        M = symbolic_matrix(word.r + 1)
    if rng is None:
        rng = random.Random(20040806)

    matrix = btilde_of_word(word, struct, A)
    fam = minor_family(word, M, A)
    col = matrix.col_of[k - 1]

    plus = M.varset.one()
    minus = M.varset.one()
    for p in range(1, word.m + 1):
        b = matrix.rows[p - 1][col]
        if b > 0:
            plus = plus * fam[p - 1] ** b
        elif b < 0:
            minus = minus * fam[p - 1] ** (-b)

    size = M.size
    det = det_poly(M)
    dplus = plus.total_degrees()[1]
    dminus = minus.total_degrees()[1]
    diff = dplus - dminus
    t_plus = t_minus = 0
    balanced = True
    if diff % size:
        balanced = False
    elif diff > 0:
        t_minus = diff // size
    elif diff < 0:
        t_plus = -diff // size

    quotient = None
    used = (0, 0)
    if balanced:
        for extra in range(3):
            num = plus * det ** (t_plus + extra) + minus * det ** (t_minus + extra)
            q = try_exact_div(num, fam[k - 1])
            if q is not None:
                quotient = q
                used = (t_plus + extra, t_minus + extra)
                break

    if quotient is None:
        ver = ExchangeVerification(
            k, "failed", None, used, 0, False,
            "no exact quotient after degree balancing",
        )
    else:
        status = "exact" if used == (0, 0) else "mod_det"
        ver = ExchangeVerification(k, status, quotient, used, 0, True)

    # independent confirmation at determinant-one integer points
    ok = True
    checked = 0
    for _ in range(points):
        point = random_sl_point(M, rng)
        lhs = evaluate(plus, point) + evaluate(minus, point)
        if quotient is not None:
            rhs = evaluate(quotient, point) * evaluate(fam[k - 1], point)
            if lhs != rhs:
                ok = False
                ver.detail = f"point evaluation mismatch at sample {checked}"
                break
        checked += 1
    ver.numeric_points = checked
    ver.numeric_ok = ok and quotient is not None
    return ver


# -- word enumeration (small ranks) ---------------------------------------------------


def interleavings(u_word, v_word):
    """All shuffles of the (negated) u-word with the v-word."""
    lu, lv = len(u_word), len(v_word)
    for posset in combinations(range(lu + lv), lu):
        chosen = set(posset)
        arr = []
        ui = vi = 0
        for t in range(lu + lv):
            if t in chosen:
                arr.append(-u_word[ui])
                ui += 1
            else:
                arr.append(v_word[vi])
                vi += 1
        yield tuple(arr)


def enumerate_double_words(A: CartanMatrix, u: WeylElement, v: WeylElement):
    """All double words for the pair (u, v); exponential, for small ranks."""
    r = A.n
    prefix = tuple(range(1, r + 1))
    out = []
    for uw in reduced_words(A, u):
        for vw in reduced_words(A, v):
            for mix in interleavings(
                [a + 1 for a in uw], [a + 1 for a in vw]
            ):
                out.append(prefix + mix)
    return out
