"""Sparse multivariate polynomials with integer coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
Python ints, tagged with the ordered tuple of variable names it lives over.
Terms are always reported in graded-lexicographic descending order with
earlier variables more significant, so the leading term of a tree
polynomial over ``(x, y)`` is ``x^n``.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Polynomial",
    "NotDivisible",
    "VarSetMismatch",
    "PolynomialParseError",
    "XY",
    "leaf_vars",
    "poly_add",
    "poly_mul",
    "substitute",
    "try_div_exact",
    "coefficient_of",
    "degree_in",
    "coefficient_sum",
]

XY = ("x", "y")


class VarSetMismatch(ValueError):
    """Two operands live over different variable sets."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`try_div_exact` when the division leaves a remainder."""


class PolynomialParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)


def leaf_vars(t: int) -> tuple[str, ...]:
    """Variable names ``(x_1, ..., x_t, y)`` for leaf-labeled polynomials."""
    if t < 1:
        raise ValueError("alphabet size must be positive")
    return tuple(f"x_{i}" for i in range(1, t + 1)) + ("y",)


def _check_vars(names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names!r}")
    if "y" in names and names[-1] != "y":
        raise ValueError("'y' must be the last variable")
    return names


def _grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class Polynomial:
    """Immutable sparse polynomial over ``Z[vars]``.

    Build one from a mapping of exponent tuples to integer coefficients, or
    with the helpers :meth:`var`, :meth:`const`, :meth:`parse` and
    :meth:`from_json`.

    >>> x, y = Polynomial.var("x"), Polynomial.var("y")
    >>> str(x * x + 2 * y)
    'x^2 + 2*y'
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str] = XY, terms: Mapping | Iterable = ()):
        self._vars = _check_vars(vars)
        nv = len(self._vars)
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} does not match {nv} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if not isinstance(coef, int):
                raise TypeError(f"coefficients must be integers, got {coef!r}")
            acc[exp] = acc.get(exp, 0) + coef
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict) -> "Polynomial":
        # trusted constructor: vars validated, terms already reduced
        p = object.__new__(cls)
        p._vars = vars
        p._terms = terms
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def var(cls, name: str, vars: Sequence[str] = XY) -> "Polynomial":
        vars = _check_vars(vars)
        if name not in vars:
            raise ValueError(f"unknown variable {name!r}")
        exp = tuple(int(v == name) for v in vars)
        return cls._raw(vars, {exp: 1})

    @classmethod
    def const(cls, c: int, vars: Sequence[str] = XY) -> "Polynomial":
        vars = _check_vars(vars)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def zero(cls, vars: Sequence[str] = XY) -> "Polynomial":
        return cls._raw(_check_vars(vars), {})

    @classmethod
    def one(cls, vars: Sequence[str] = XY) -> "Polynomial":
        return cls.const(1, vars)

    # basic accessors

    @property
    def vars(self) -> tuple[str, ...]:
        return self._vars

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """``(exponents, coefficient)`` pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * len(self._vars): 1}

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Polynomial.const(other, self._vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self._vars!r})"

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.const(other, self._vars)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other._vars != self._vars:
            raise VarSetMismatch(f"{self._vars} vs {other._vars}")
        return other

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self._vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial.zero(self._vars)
            return Polynomial._raw(self._vars, {e: c * other for e, c in self._terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        b_items = list(other._terms.items())
        for ea, ca in self._terms.items():
            for eb, cb in b_items:
                e = tuple(i + j for i, j in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial._raw(self._vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # queries

    def coefficient(self, exp: Sequence[int]) -> int:
        exp = tuple(exp)
        if len(exp) != len(self._vars):
            raise VarSetMismatch(f"monomial {exp} does not match {self._vars}")
        return self._terms.get(exp, 0)

    def degree(self, var: str) -> int:
        i = self._index(var)
        return max((e[i] for e in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def evaluate(self, values: Mapping[str, int] | Sequence[int]) -> int:
        if isinstance(values, Mapping):
            values = [values[v] for v in self._vars]
        total = 0
        for exp, c in self._terms.items():
            term = c
            for v, e in zip(values, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def _index(self, var: str) -> int:
        try:
            return self._vars.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r} (have {self._vars})") from None

    def substitute(self, var: str, value: int) -> "Polynomial":
        i = self._index(var)
        new_vars = self._vars[:i] + self._vars[i + 1 :]
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self._terms.items():
            e = exp[:i] + exp[i + 1 :]
            out[e] = out.get(e, 0) + c * value ** exp[i]
        return Polynomial._raw(new_vars, {e: c for e, c in out.items() if c})

    def rename(self, mapping: Mapping[str, str], vars: Sequence[str]) -> "Polynomial":
        """Map each variable to a variable of ``vars``; several may collapse into one."""
        vars = _check_vars(vars)
        idx = [vars.index(mapping.get(v, v)) for v in self._vars]
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self._terms.items():
            e = [0] * len(vars)
            for j, k in zip(idx, exp):
                e[j] += k
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return Polynomial._raw(vars, {e: c for e, c in out.items() if c})

    # serialization

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, (exp, c) in enumerate(self.terms()):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, exp) if e
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self._vars),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: str | dict) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            vars = data["vars"]
            terms = [(t["exp"], int(t["coef"])) for t in data["terms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PolynomialParseError(f"malformed polynomial JSON: {exc}") from None
        return cls(vars, terms)

    @classmethod
    def parse(cls, text: str, vars: Sequence[str] | None = None) -> "Polynomial":
        """Parse the canonical text form, e.g. ``"x^2 + 2*y"``.

        Whitespace is optional and terms may come in any order. When ``vars``
        is omitted it is ``(x, y)`` unless ``x_i`` variables appear, in which
        case it is ``(x_1, ..., x_t, y)`` with ``t`` the largest index seen.
        """
        return _parse(text, vars)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-]))")


def _parse(text: str, vars: Sequence[str] | None) -> Polynomial:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastindex
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    if not toks:
        raise PolynomialParseError("empty polynomial", 0)

    # terms: list of (sign, coef, {var: exp})
    terms = []
    i = 0
    n = len(toks)
    while i < n:
        sign = 1
        if toks[i][0] == 5:
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif terms:
            raise PolynomialParseError("expected '+' or '-'", toks[i][2])
        if i >= n:
            raise PolynomialParseError("expected a term", len(text))
        coef = 1
        powers: dict[str, int] = {}
        expect_factor = True
        while i < n and expect_factor:
            kind, val, p = toks[i]
            if kind == 1:
                coef *= int(val)
                i += 1
            elif kind == 2:
                i += 1
                e = 1
                if i < n and toks[i][0] == 3:
                    if i + 1 >= n or toks[i + 1][0] != 1:
                        raise PolynomialParseError("expected exponent", toks[i][2])
                    e = int(toks[i + 1][1])
                    i += 2
                powers[val] = powers.get(val, 0) + e
            else:
                raise PolynomialParseError(f"unexpected {val!r}", p)
            expect_factor = i < n and toks[i][0] == 4
            if expect_factor:
                i += 1
                if i >= n:
                    raise PolynomialParseError("dangling '*'", toks[i - 1][2])
        terms.append((sign * coef, powers))

    names = {v for _, pw in terms for v in pw}
    if vars is None:
        xs = sorted(
            (int(v[2:]) for v in names if re.fullmatch(r"x_\d+", v)),
        )
        if xs:
            if xs[0] < 1:
                raise PolynomialParseError("leaf variable indices start at 1")
            vars = leaf_vars(xs[-1])
        else:
            vars = XY
    vars = _check_vars(vars)
    unknown = names - set(vars)
    if unknown:
        raise PolynomialParseError(f"unknown variables {sorted(unknown)} for {vars}")
    out = []
    for c, pw in terms:
        out.append((tuple(pw.get(v, 0) for v in vars), c))
    return Polynomial(vars, out)


# functional API ------------------------------------------------------------


def _same_vars(a: Polynomial, b: Polynomial):
    if a.vars != b.vars:
        raise VarSetMismatch(f"{a.vars} vs {b.vars}")


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    _same_vars(a, b)
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    _same_vars(a, b)
    return a * b


def substitute(p: Polynomial, var: str, value: int) -> Polynomial:
    return p.substitute(var, value)


def coefficient_of(p: Polynomial, m: Sequence[int]) -> int:
    return p.coefficient(m)


def degree_in(p: Polynomial, var: str) -> int:
    return p.degree(var)


def coefficient_sum(p: Polynomial) -> int:
    """Sum of all coefficients, i.e. ``p`` evaluated with every variable at 1."""
    return sum(p._terms.values())


def try_div_exact(num: Polynomial, den: Polynomial) -> Polynomial:
    """Return ``q`` with ``q * den == num`` over the integers.

    The division is carried out as univariate long division in the first
    variable, with coefficients in the remaining variables divided
    recursively. Raises :class:`NotDivisible` when any step leaves a
    remainder and :class:`ZeroDivisionError` for a zero divisor.
    """
    _same_vars(num, den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    terms = _div(num._terms, den._terms, len(num.vars))
    return Polynomial._raw(num.vars, terms)


def _split(terms: dict, nv: int) -> dict[int, dict]:
    # first variable's exponent -> coefficient terms over the remaining ones
    out: dict[int, dict] = {}
    for e, c in terms.items():
        out.setdefault(e[0], {})[e[1:]] = c
    return out


def _join(parts: dict[int, dict]) -> dict:
    return {(k,) + e: c for k, sub in parts.items() for e, c in sub.items()}


def _mul_terms(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _sub_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _div(num: dict, den: dict, nv: int) -> dict:
    if not num:
        return {}
    if nv == 0:
        q, r = divmod(num[()], den[()])
        if r:
            raise NotDivisible
        return {(): q}
    N = _split(num, nv)
    D = _split(den, nv)
    dd = max(D)
    lead = D[dd]
    quot: dict[int, dict] = {}
    while N:
        nd = max(N)
        if nd < dd:
            raise NotDivisible
        c = _div(N[nd], lead, nv - 1)
        shift = nd - dd
        quot[shift] = c
        for k, dk in D.items():
            prod = _mul_terms(c, dk)
            rest = _sub_terms(N.get(k + shift, {}), prod)
            if rest:
                N[k + shift] = rest
            else:
                N.pop(k + shift, None)
        if nd in N:
            raise NotDivisible
    return _join(quot)
