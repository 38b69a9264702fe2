"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from operator import add
from typing import Iterable, Mapping, Sequence

from .field import QQ
from .orders import MAX_EXPONENT, MonomialOrder

Monomial = tuple  # exponent vector


class ExponentOverflow(OverflowError):
    pass


def _check_exps(exps: tuple) -> tuple:
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
    return exps


class Polynomial:
    """An immutable element of ``K[x1, ..., xn]``.

    ``terms`` maps exponent tuples to nonzero coefficients.  Coefficients
    live in ``field`` (exact rationals by default).
    """

    __slots__ = ("nvars", "field", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None, field=QQ,
                 *, _trusted: bool = False):
        self.nvars = nvars
        self.field = field
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        clean: dict[tuple, object] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"monomial {exps} has wrong length for {nvars} variables")
            _check_exps(exps)
            c = field(c)
            if c:
                c = field.normalize(clean.get(exps, 0) + c)
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self._terms = clean

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, field=QQ) -> "Polynomial":
        return cls(nvars, {}, field, _trusted=True)

    @classmethod
    def constant(cls, nvars: int, c, field=QQ) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def one(cls, nvars: int, field=QQ) -> "Polynomial":
        return cls.constant(nvars, 1, field)

    @classmethod
    def variable(cls, nvars: int, i: int, field=QQ) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x{i} is not a variable of a ring with {nvars} variables")
        return cls(nvars, {tuple(1 if k == i - 1 else 0 for k in range(nvars)): 1}, field)

    @classmethod
    def gens(cls, nvars: int, field=QQ) -> list["Polynomial"]:
        return [cls.variable(nvars, i, field) for i in range(1, nvars + 1)]

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1, field=QQ) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c}, field)

    # basic protocol -----------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[tuple]:
        return list(self._terms)

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return (self.nvars == other.nvars and self.field == other.field
                    and self._terms == other._terms)
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other, self.field)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars or other.field != self.field:
                raise ValueError("polynomials live in different rings")
            return other
        return Polynomial.constant(self.nvars, other, self.field)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        norm = self.field.normalize
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = norm(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.nvars, out, self.field, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        norm = self.field.normalize
        return Polynomial(self.nvars, {m: norm(-c) for m, c in self._terms.items()},
                          self.field, _trusted=True)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        norm = self.field.normalize
        return Polynomial(self.nvars, {m: norm(v * c) for m, v in self._terms.items()},
                          self.field, _trusted=True)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if len(self) > len(other):
            a, b = self._terms, other._terms
        else:
            a, b = other._terms, self._terms
        norm = self.field.normalize
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(add, ma, mb))
                out[m] = get(m, 0) + ca * cb
        res = {}
        for m, c in out.items():
            c = norm(c)
            if c:
                res[m] = c
        for m in res:
            _check_exps(m)
        return Polynomial(self.nvars, res, self.field, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_difference(self, i: int, j: int) -> "Polynomial":
        """Multiply by the linear form ``x_i - x_j`` (1-based indices)."""
        i -= 1
        j -= 1
        out: dict = {}
        get = out.get
        for m, c in self._terms.items():
            mi = m[:i] + (m[i] + 1,) + m[i + 1:]
            out[mi] = get(mi, 0) + c
            mj = m[:j] + (m[j] + 1,) + m[j + 1:]
            out[mj] = get(mj, 0) - c
        norm = self.field.normalize
        res = {}
        for m, c in out.items():
            c = norm(c)
            if c:
                res[m] = c
        return Polynomial(self.nvars, res, self.field, _trusted=True)

    def mul_monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        exps = tuple(exps)
        c = self.field(c)
        norm = self.field.normalize
        return Polynomial(self.nvars,
                          {_check_exps(tuple(map(add, m, exps))): norm(v * c)
                           for m, v in self._terms.items()},
                          self.field, _trusted=True)

    # order dependent ----------------------------------------------------
    def sorted_terms(self, order: MonomialOrder) -> list[tuple[tuple, object]]:
        """Terms from greatest to smallest monomial."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> tuple:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> "Polynomial":
        m = self.leading_monomial(order)
        return Polynomial(self.nvars, {m: self._terms[m]}, self.field, _trusted=True)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    # misc ---------------------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def support(self) -> set[int]:
        """1-based indices of variables occurring in the polynomial."""
        return {i + 1 for m in self._terms for i, e in enumerate(m) if e}

    def evaluate(self, point: Sequence):
        """Exact value at ``point`` (coordinates coerced into the field)."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        pt = [self.field(a) for a in point]
        total = 0
        for m, c in self._terms.items():
            v = c
            for a, e in zip(pt, m):
                if e:
                    v = v * a ** e
            total += v
        return self.field.normalize(total)

    def collapse(self, classes: Sequence[int], nclasses: int) -> "Polynomial":
        """Substitute ``x_i -> t_{classes[i]}`` (0-based class labels).

        The result lives in ``K[t_0, ..., t_{nclasses-1}]``.
        """
        out: dict = {}
        get = out.get
        for m, c in self._terms.items():
            e = [0] * nclasses
            for i, k in enumerate(m):
                if k:
                    e[classes[i]] += k
            key = tuple(e)
            out[key] = get(key, 0) + c
        norm = self.field.normalize
        res = {m: norm(c) for m, c in out.items() if norm(c)}
        return Polynomial(nclasses, res, self.field, _trusted=True)

    def change_field(self, field) -> "Polynomial":
        return Polynomial(self.nvars, {m: field(c) for m, c in self._terms.items()}, field)

    def permute_variables(self, sigma: Mapping[int, int]) -> "Polynomial":
        """Rename ``x_i -> x_{sigma[i]}`` (1-based; missing keys fixed)."""
        out = {}
        for m, c in self._terms.items():
            e = [0] * self.nvars
            for i, k in enumerate(m):
                e[sigma.get(i + 1, i + 1) - 1] += k
            out[tuple(e)] = c
        return Polynomial(self.nvars, out, self.field, _trusted=True)

    # serialization ------------------------------------------------------
    def to_text(self, order: MonomialOrder | None = None) -> str:
        if not self._terms:
            return "0"
        items = (self.sorted_terms(order) if order is not None
                 else sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True))
        chunks = []
        for m, c in items:
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            neg = c < 0 if self.field.modulus is None else False
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            chunks.append(("-" if neg else "+", body))
        out = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_text()!r})"

    def to_json(self) -> list:
        items = sorted(self._terms.items(), key=lambda t: t[0], reverse=True)
        return [[self.field.to_pair(c), list(m)] for m, c in items]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable, field=QQ) -> "Polynomial":
        terms: dict = {}
        for pair, exps in data:
            exps = tuple(exps)
            terms[exps] = field.normalize(terms.get(exps, 0) + field.from_pair(pair))
        return cls(nvars, terms, field)

    _TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")

    @classmethod
    def parse(cls, text: str, nvars: int, field=QQ) -> "Polynomial":
        """Parse the text format ``"3*x1^2*x3 - 1/2*x2 + 4"``."""
        text = text.strip()
        if text in ("", "0"):
            return cls.zero(nvars, field)
        terms: dict = {}
        pos = 0
        for match in cls._TERM.finditer(text):
            if match.start() != pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff = Fraction(1)
            exps = [0] * nvars
            for factor in match.group(2).strip().split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                if factor[0] == "x":
                    name, _, power = factor.partition("^")
                    idx = int(name[1:])
                    if not 1 <= idx <= nvars:
                        raise ValueError(f"variable {name} out of range")
                    exps[idx - 1] += int(power) if power else 1
                else:
                    coeff *= Fraction(factor)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * coeff
        if pos != len(text):
            raise ValueError(f"trailing garbage in {text!r}")
        return cls(nvars, terms, field)
