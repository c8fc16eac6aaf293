"""Exact sparse Laurent polynomial arithmetic over arbitrary-precision integers.

Polynomials live in Z[x1^{±1}, ..., xm^{±1}] for a fixed ordered variable set.
Terms are stored as a map from dense exponent tuples (entries may be negative)
to nonzero int coefficients; the zero polynomial is the empty map.  Everything
is immutable after construction and all operations are pure functions, so
values can be shared freely across threads.

The fixed term order used for printing, canonical comparison and exact
division is graded lexicographic with respect to the variable order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentError(ValueError):
    """Base class for Laurent arithmetic errors."""


class VarSetMismatch(LaurentError):
    """Operands built over different variable sets."""


class LaurentParseError(LaurentError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class VarSet:
    """An ordered set of distinct variable names.

    The order is fixed for the lifetime of the set: exponent vectors of every
    polynomial over this set index into it.
    """

    __slots__ = ("names", "index", "_hash")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise LaurentError("variable names must be distinct")
        for name in names:
            if not name or any(ch in name for ch in "+-*^ \t\n,"):
                raise LaurentError(f"bad variable name {name!r}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}
        self._hash = hash(names)

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VarSet({list(self.names)!r})"

    def var(self, name: str) -> LaurentPoly:
        """The variable `name` as a polynomial."""
        e = [0] * len(self.names)
        e[self.index[name]] = 1
        return LaurentPoly(self, {tuple(e): 1})

    def gens(self) -> tuple[LaurentPoly, ...]:
        return tuple(self.var(name) for name in self.names)

    def zero(self) -> LaurentPoly:
        return LaurentPoly(self, {})

    def one(self) -> LaurentPoly:
        return LaurentPoly(self, {(0,) * len(self.names): 1})

    def constant(self, c: int) -> LaurentPoly:
        return LaurentPoly(self, {(0,) * len(self.names): c})


def _grlex(e: tuple[int, ...]):
    return (sum(e), e)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with int coefficients."""

    __slots__ = ("varset", "terms", "_hash", "_skey")

    def __init__(self, varset: VarSet, terms: Mapping[tuple[int, ...], int]):
        m = len(varset)
        clean: dict[tuple[int, ...], int] = {}
        for e, c in terms.items():
            if not isinstance(c, int):
                raise LaurentError(f"coefficient {c!r} is not an int")
            if len(e) != m:
                raise LaurentError("exponent vector length does not match variable set")
            if c != 0:
                clean[tuple(e)] = c
        self.varset = varset
        self.terms = clean
        self._hash = None
        self._skey = None

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.varset): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.varset == other.varset
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self.terms.items())))
        return self._hash

    def sort_key(self):
        """Canonical total-order key: term list sorted descending in grlex."""
        if self._skey is None:
            self._skey = tuple(
                sorted(
                    ((sum(e), e, c) for e, c in self.terms.items()),
                    reverse=True,
                )
            )
        return self._skey

    # -- ring operations ----------------------------------------------------

    def _check_same(self, other: LaurentPoly) -> None:
        if self.varset != other.varset:
            raise VarSetMismatch("operands use different variable sets")

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.varset, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check_same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.varset, out)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        self._check_same(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly(self.varset, out)

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            raise LaurentError("exponent must be an int")
        if k < 0:
            if len(self.terms) != 1:
                raise LaurentError("only monomials can be raised to negative powers")
            ((e, c),) = self.terms.items()
            if c not in (1, -1):
                raise LaurentError("monomial coefficient must be ±1 for inversion")
            cpow = -1 if (c == -1 and k % 2) else 1
            return LaurentPoly(self.varset, {tuple(k * x for x in e): cpow})
        result = self.varset.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- exponent geometry --------------------------------------------------

    def min_exponents(self) -> tuple[int, ...]:
        """Per-variable minimum exponent over all terms (zero poly disallowed)."""
        if not self.terms:
            raise LaurentError("zero polynomial has no exponents")
        m = len(self.varset)
        mins = [min(e[i] for e in self.terms) for i in range(m)]
        return tuple(mins)

    def total_degrees(self) -> tuple[int, int]:
        """(min, max) total degree over terms; zero poly disallowed."""
        if not self.terms:
            raise LaurentError("zero polynomial has no degree")
        totals = [sum(e) for e in self.terms]
        return min(totals), max(totals)

    def is_homogeneous(self) -> bool:
        lo, hi = self.total_degrees()
        return lo == hi

    # -- text format ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.varset.names
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True):
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k != 0:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        sign, text = parts[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"<LaurentPoly {self}>"


# -- operations ----------------------------------------------------------------


def try_exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Exact division in the Laurent ring: return r with q*r == p, else None.

    Both operands are shifted by monomials into ordinary polynomials, divided
    by lead-term elimination under the graded lexicographic order, and the
    result is shifted back.  Division must be exact over the integers; a
    rational-only quotient also yields None.
    """
    p._check_same(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p.varset.zero()

    sp = p.min_exponents()
    sq = q.min_exponents()
    P = {tuple(x - y for x, y in zip(e, sp)): c for e, c in p.terms.items()}
    Q = {tuple(x - y for x, y in zip(e, sq)): c for e, c in q.terms.items()}
    qlead = max(Q, key=_grlex)
    qc = Q[qlead]
    qitems = list(Q.items())

    quo: dict[tuple[int, ...], int] = {}
    rem = dict(P)
    while rem:
        e = max(rem, key=_grlex)
        c = rem[e]
        d = tuple(x - y for x, y in zip(e, qlead))
        if any(x < 0 for x in d):
            return None
        if c % qc:
            return None
        t = c // qc
        quo[d] = t
        for qe, qcf in qitems:
            ke = tuple(x + y for x, y in zip(d, qe))
            v = rem.get(ke, 0) - t * qcf
            if v:
                rem[ke] = v
            else:
                rem.pop(ke, None)

    shift = tuple(x - y for x, y in zip(sp, sq))
    return LaurentPoly(
        p.varset, {tuple(x + y for x, y in zip(e, shift)): c for e, c in quo.items()}
    )


def substitute_fraction(
    p: LaurentPoly, var: str, num: LaurentPoly, den: LaurentPoly
) -> tuple[LaurentPoly, LaurentPoly]:
    """Replace `var` by num/den in p; return (N, D) with N/D equal to the result.

    D is a product of powers of den and num (num powers appear only when p has
    negative exponents in `var`).  No cancellation is performed beyond what
    the common-denominator construction gives.
    """
    p._check_same(num)
    p._check_same(den)
    if den.is_zero():
        raise ZeroDivisionError("substituted denominator is zero")
    vs = p.varset
    j = vs.index[var]
    if p.is_zero():
        return vs.zero(), vs.one()
    exps = [e[j] for e in p.terms]
    amax, amin = max(exps), min(exps)
    alpha = max(amax, 0)
    beta = max(-amin, 0)

    num_pow: dict[int, LaurentPoly] = {0: vs.one()}
    den_pow: dict[int, LaurentPoly] = {0: vs.one()}

    def npow(k: int) -> LaurentPoly:
        if k not in num_pow:
            num_pow[k] = npow(k - 1) * num
        return num_pow[k]

    def dpow(k: int) -> LaurentPoly:
        if k not in den_pow:
            den_pow[k] = dpow(k - 1) * den
        return den_pow[k]

    N = vs.zero()
    for e, c in p.terms.items():
        rest = list(e)
        rest[j] = 0
        mono = LaurentPoly(vs, {tuple(rest): c})
        a = e[j]
        N = N + mono * npow(a + beta) * dpow(alpha - a)
    D = npow(beta) * dpow(alpha)
    return N, D


def denominator_vector(p: LaurentPoly, cluster_vars: Iterable[str]) -> tuple[int, ...]:
    """Denominator vector of p: negated minimum exponents of the given variables."""
    if p.is_zero():
        raise LaurentError("denominator vector of the zero polynomial is undefined")
    idx = [p.varset.index[name] for name in cluster_vars]
    return tuple(-min(e[i] for e in p.terms) for i in idx)


def has_nonnegative_coeffs(p: LaurentPoly) -> bool:
    return all(c > 0 for c in p.terms.values())


def evaluate(p: LaurentPoly, point: Mapping[str, int | Fraction]) -> Fraction:
    """Exact rational value of p at the given point.

    Every variable occurring in p must be assigned; a variable carrying a
    negative exponent anywhere must be assigned a nonzero value.
    """
    names = p.varset.names
    values: dict[int, Fraction] = {}
    for e in p.terms:
        for i, k in enumerate(e):
            if k and i not in values:
                name = names[i]
                if name not in point:
                    raise LaurentError(f"no value given for variable {name}")
                values[i] = Fraction(point[name])
    total = Fraction(0)
    for e, c in p.terms.items():
        v = Fraction(c)
        for i, k in enumerate(e):
            if k:
                v *= values[i] ** k
        total += v
    return total


# -- parsing ---------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*^+\-]))"
)


def parse_laurent(text: str, varset: VarSet) -> LaurentPoly:
    """Parse the textual format produced by str(): a signed sum of c*v^e terms."""
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise LaurentParseError(f"unexpected character {text[pos]!r}", pos)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()

    if not tokens:
        raise LaurentParseError("empty polynomial", 0)

    m_vars = len(varset)
    result: dict[tuple[int, ...], int] = {}
    i = 0

    def term_done(coeff: int, exps: dict[int, int]) -> None:
        e = [0] * m_vars
        for j, k in exps.items():
            e[j] = k
        key = tuple(e)
        v = result.get(key, 0) + coeff
        if v:
            result[key] = v
        else:
            result.pop(key, None)

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise LaurentParseError("dangling sign", tokens[-1][2])

        coeff = sign
        exps: dict[int, int] = {}
        saw_factor = False
        while True:
            kind, value, at = tokens[i]
            if kind == "num":
                coeff *= int(value)
                saw_factor = True
                i += 1
            elif kind == "name":
                if value not in varset.index:
                    raise LaurentParseError(f"unknown variable {value!r}", at)
                j = varset.index[value]
                i += 1
                k = 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                    i += 1
                    esign = 1
                    if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "-":
                        esign = -1
                        i += 1
                    if i >= len(tokens) or tokens[i][0] != "num":
                        raise LaurentParseError("expected integer exponent", at)
                    k = esign * int(tokens[i][1])
                    i += 1
                exps[j] = exps.get(j, 0) + k
                saw_factor = True
            else:
                raise LaurentParseError(f"unexpected token {value!r}", at)
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
                i += 1
                continue
            break
        if not saw_factor:
            raise LaurentParseError("empty term", tokens[i][2] if i < len(tokens) else 0)
        term_done(coeff, exps)

    return LaurentPoly(varset, result)


# -- JSON encoding ----------------------------------------------------------------


def poly_to_json(p: LaurentPoly) -> dict:
    """JSON object for p: exponent vectors with decimal big-int coefficient strings."""
    items = sorted(p.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)
    return {"terms": [{"e": list(e), "c": str(c)} for e, c in items]}


def poly_from_json(obj: Mapping, varset: VarSet) -> LaurentPoly:
    terms: dict[tuple[int, ...], int] = {}
    for entry in obj["terms"]:
        e = tuple(int(x) for x in entry["e"])
        c = int(entry["c"])
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(varset, terms)
