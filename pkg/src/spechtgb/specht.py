"""Specht-type polynomials and the generator families built from them.

Every generator here is a signed product of linear forms ``x_i - x_j``.  It
is stored as a :class:`DifferenceProduct` (a multiset of index pairs plus a
sign) and expanded only on demand, so lcm and vanishing tests stay
combinatorial.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .partitions import Filter, Partition, as_partition
from .poly import QQ, MonomialOrder, Polynomial
from .tableaux import (
    HEAD,
    TAIL,
    Tableau,
    enumerate_standard,
    enumerate_tableaux,
)


class SpechtError(ValueError):
    pass


@dataclass(frozen=True)
class DifferenceProduct:
    """``sign * prod (x_i - x_j)`` over ``pairs``, each pair with ``i < j``."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    sign: int = 1
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[tuple[int, int]]) -> "DifferenceProduct":
        """Build from ordered factors ``(a, b)`` meaning ``x_a - x_b``."""
        sign = 1
        pairs = []
        for a, b in factors:
            if a == b:
                raise SpechtError(f"factor x{a} - x{b} is zero")
            if not (1 <= a <= n and 1 <= b <= n):
                raise SpechtError(f"factor x{a} - x{b} outside {n} variables")
            if a > b:
                a, b = b, a
                sign = -sign
            pairs.append((a, b))
        return cls(n, tuple(sorted(pairs)), sign)

    @property
    def degree(self) -> int:
        return len(self.pairs)

    @property
    def key(self) -> tuple:
        """Identifies the polynomial up to sign."""
        return self.pairs

    def is_squarefree(self) -> bool:
        return len(set(self.pairs)) == len(self.pairs)

    def squarefree_part(self) -> "DifferenceProduct":
        return DifferenceProduct(self.n, tuple(sorted(set(self.pairs))), 1)

    def max_multiplicity(self) -> int:
        return max(Counter(self.pairs).values(), default=0)

    def __mul__(self, other: "DifferenceProduct") -> "DifferenceProduct":
        return DifferenceProduct(self.n, tuple(sorted(self.pairs + other.pairs)),
                                 self.sign * other.sign)

    def __pow__(self, k: int) -> "DifferenceProduct":
        return DifferenceProduct(self.n, tuple(sorted(self.pairs * k)), self.sign ** k)

    def lcm(self, other: "DifferenceProduct") -> "DifferenceProduct":
        """Least common multiple, taken on factor multisets (sign of ``self``)."""
        a, b = Counter(self.pairs), Counter(other.pairs)
        merged = a | b
        return DifferenceProduct(self.n, tuple(sorted(merged.elements())), self.sign)

    def divides(self, other: "DifferenceProduct") -> bool:
        return not (Counter(self.pairs) - Counter(other.pairs))

    def leading_monomial(self, order: MonomialOrder) -> tuple:
        """Product of the leading variables of the factors."""
        rank = order.variable_rank()
        pos = {v: r for r, v in enumerate(rank)}
        exps = [0] * self.n
        for i, j in self.pairs:
            big = i if pos[i - 1] < pos[j - 1] else j
            exps[big - 1] += 1
        return tuple(exps)

    def vanishes_under(self, classes: Sequence[int]) -> bool:
        """True iff some factor joins two indices of the same class (0-based list)."""
        return any(classes[i - 1] == classes[j - 1] for i, j in self.pairs)

    def expand(self, field=QQ) -> Polynomial:
        key = field.name if field.modulus is None else field.modulus
        if key not in self._cache:
            p = Polynomial.constant(self.n, self.sign, field)
            for i, j in self.pairs:
                p = p.mul_difference(i, j)
            self._cache[key] = p
        return self._cache[key]

    def to_text(self) -> str:
        body = "*".join(f"(x{i} - x{j})" for i, j in self.pairs) or "1"
        return body if self.sign == 1 else "-" + body

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# basic constructions

def difference_factors(A: Sequence[int], n: int) -> DifferenceProduct:
    A = [int(a) for a in A]
    if len(set(A)) != len(A):
        raise SpechtError(f"repeated label in {A}")
    return DifferenceProduct.from_factors(n, [(A[p], A[q]) for p, q in combinations(range(len(A)), 2)])


def difference_product(A: Sequence[int], n: int, field=QQ) -> Polynomial:
    """``Delta(A)`` in the given element order."""
    return difference_factors(A, n).expand(field)


def delta_m(m: int, n: int) -> DifferenceProduct:
    if not 1 <= m <= n:
        raise SpechtError(f"need 1 <= m <= n, got m={m}, n={n}")
    return difference_factors(range(1, m + 1), n)


def specht_factors(T: Tableau) -> DifferenceProduct:
    if T.has_column_collision():
        raise SpechtError("f_T = 0 degenerate: a column repeats a label")
    n = T.n
    factors = []
    for col in T.columns():
        factors += [(col[p], col[q]) for p, q in combinations(range(len(col)), 2)]
    return DifferenceProduct.from_factors(n, factors)


def specht_polynomial(T: Tableau, field=QQ) -> Polynomial:
    """``f_T``: the product over columns of their difference products."""
    return specht_factors(T).expand(field)


def mixed_factors(T: Tableau, m: int) -> DifferenceProduct:
    """``f_{m,T} = lcm(f_T, Delta_m)`` with the sign of ``Delta_m``."""
    return delta_m(m, T.n).lcm(specht_factors(T))


def mixed_generator(T: Tableau, m: int, field=QQ) -> Polynomial:
    return mixed_factors(T, m).expand(field)


# ---------------------------------------------------------------------------
# ideal specifications

FAMILIES = ("specht_head", "specht_tail", "specht_filter", "lili", "mixed", "mixed_filter")


@dataclass(frozen=True)
class IdealSpec:
    """Parameters naming one of the ideals.

    ``variant`` applies to ``specht_filter`` (head or tail tableaux);
    ``Y`` is the decreasing chain of a Li-Li ideal.
    """

    family: str
    n: int
    l: int = 1
    lam: Partition | None = None
    filter: Filter | None = None
    m: int = 1
    Y: tuple[frozenset, ...] = ()
    variant: str = HEAD

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpechtError(f"unknown family {self.family!r}")
        if self.n < 1 or self.l < 1:
            raise SpechtError("n and l must be positive")
        if self.family in ("specht_head", "specht_tail", "mixed"):
            if self.lam is None:
                raise SpechtError(f"{self.family} needs lambda")
            lam = as_partition(self.lam)
            object.__setattr__(self, "lam", lam)
            if lam.weight != self.n + self.l - 1:
                raise SpechtError(f"lambda = {lam} must have weight n + l - 1 = {self.n + self.l - 1}")
            if lam.first < self.l:
                raise SpechtError(f"lambda_1 = {lam.first} < l = {self.l}")
        if self.family in ("specht_filter", "mixed_filter"):
            F = self.filter
            if F is None or F.kind != "lower":
                raise SpechtError(f"{self.family} needs a lower filter")
            if (F.n, F.l) != (self.n, self.l):
                raise SpechtError("filter parameters disagree with n, l")
        if self.family in ("mixed", "mixed_filter") and not 1 <= self.m <= self.n:
            raise SpechtError(f"need 1 <= m <= n, got m={self.m}")
        if self.family == "lili":
            Y = tuple(frozenset(int(x) for x in y) for y in self.Y)
            object.__setattr__(self, "Y", Y)
            if not Y:
                raise SpechtError("lili needs a nonempty chain Y")
            if any(not y <= frozenset(range(1, self.n + 1)) for y in Y):
                raise SpechtError("Y_i must be subsets of [n]")
            if any(not Y[i + 1] <= Y[i] for i in range(len(Y) - 1)):
                raise SpechtError("Y must be a decreasing chain")
        if self.variant not in (HEAD, TAIL):
            raise SpechtError(f"bad variant {self.variant!r}")

    def to_json(self) -> dict:
        out: dict = {"family": self.family, "n": self.n}
        if self.family != "lili":
            out["l"] = self.l
        if self.lam is not None:
            out["lambda"] = self.lam.to_json()
        if self.filter is not None:
            out["filter"] = self.filter.to_json()
        if self.family in ("mixed", "mixed_filter"):
            out["m"] = self.m
        if self.family == "lili":
            out["Y"] = [sorted(y) for y in self.Y]
        if self.family == "specht_filter" and self.variant != HEAD:
            out["variant"] = self.variant
        return out

    @classmethod
    def from_json(cls, data: dict) -> "IdealSpec":
        try:
            return cls(
                family=data["family"], n=int(data["n"]), l=int(data.get("l", 1)),
                lam=Partition(data["lambda"]) if data.get("lambda") is not None else None,
                filter=Filter.from_json(data["filter"]) if data.get("filter") else None,
                m=int(data.get("m", 1)),
                Y=tuple(frozenset(y) for y in data.get("Y", ())),
                variant=data.get("variant", HEAD),
            )
        except KeyError as exc:
            raise SpechtError(f"missing field {exc}") from exc

    def __str__(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _dedup(products: Iterable[DifferenceProduct]) -> list[DifferenceProduct]:
    seen = {}
    for p in products:
        seen.setdefault(p.key, p)
    return list(seen.values())


def _tableaux(l: int, lam, variant: str, standard_only: bool) -> list[Tableau]:
    if standard_only:
        return enumerate_standard(l, lam, variant)
    return enumerate_tableaux(l, lam, variant)


def lili_factors(n: int, Y: Sequence[Iterable[int]], minimal: bool = False) -> list[DifferenceProduct]:
    """Generators ``prod Delta(X_i)`` over chains ``X_i >= Y_i`` covering ``[n]``.

    Tuples ``(X_1, ..., X_{k-1})`` are walked in lex order of their sorted
    members and deduplicated by factor multiset.  With ``minimal``, only
    generators not divisible by another generator are kept; they generate
    the same ideal.
    """
    Y = [frozenset(y) for y in Y]
    universe = list(range(1, n + 1))
    options = []
    for y in Y:
        rest = [x for x in universe if x not in y]
        opts = []
        for r in range(len(rest) + 1):
            for extra in combinations(rest, r):
                opts.append(tuple(sorted(y | set(extra))))
        opts.sort()
        options.append(opts)
    gens: dict = {}
    full = frozenset(universe)
    for Xs in product(*options):
        if frozenset().union(*map(frozenset, Xs)) != full:
            continue
        f = DifferenceProduct(n, (), 1)
        for X in Xs:
            f = f * difference_factors(X, n)
        gens.setdefault(f.key, f)
    out = list(gens.values())
    if minimal:
        out = [f for f in out if not any(g is not f and g.divides(f) and g.key != f.key for g in out)]
    return out


def generator_factors(spec: IdealSpec, standard_only: bool = False) -> list[DifferenceProduct]:
    """Generators of ``spec`` in factored form, deduplicated up to sign."""
    fam = spec.family
    if fam in ("mixed", "mixed_filter") and standard_only:
        raise SpechtError("standard tableaux do not generate the mixed ideals; use all tableaux")
    if fam == "specht_head":
        return _dedup(specht_factors(T) for T in _tableaux(spec.l, spec.lam, HEAD, standard_only))
    if fam == "specht_tail":
        return _dedup(specht_factors(T) for T in _tableaux(spec.l, spec.lam, TAIL, standard_only))
    if fam == "specht_filter":
        return _dedup(specht_factors(T) for lam in spec.filter.members()
                      for T in _tableaux(spec.l, lam, spec.variant, standard_only))
    if fam == "mixed":
        return _dedup(mixed_factors(T, spec.m) for T in enumerate_tableaux(spec.l, spec.lam, HEAD))
    if fam == "mixed_filter":
        return _dedup(mixed_factors(T, spec.m) for lam in spec.filter.members()
                      for T in enumerate_tableaux(spec.l, lam, HEAD))
    return lili_factors(spec.n, spec.Y)


def generators(spec: IdealSpec, standard_only: bool = False, field=QQ) -> list[Polynomial]:
    return [f.expand(field) for f in generator_factors(spec, standard_only)]


# ---------------------------------------------------------------------------
# straightening and the difference-product identity

def straighten(T: Tableau) -> list[tuple[Fraction | int, Tableau]]:
    """Write ``f_T`` in the basis ``{f_S : S standard}`` of the same shape.

    Leading monomials (lex, ``x1 < ... < xn``) of the standard basis are
    pairwise distinct, so the coefficients come from a triangular solve.
    """
    if not T.is_column_standard():
        raise SpechtError("straighten expects a column-standard tableau")
    if T.is_standard():
        return [(1, T)]
    order = MonomialOrder.lex_ascending(T.n)
    basis = {}
    for S in enumerate_standard(T.l, T.shape, T.variant):
        f = specht_polynomial(S)
        basis[f.leading_monomial(order)] = (S, f)
    r = specht_polynomial(T)
    out = []
    while r:
        lm = r.leading_monomial(order)
        if lm not in basis:
            raise ArithmeticError(f"f_T is not in the span of the standard basis (stuck at {lm})")
        S, f = basis[lm]
        c = QQ.div(r.coefficient(lm), f.coefficient(lm))
        out.append((c, S))
        r = r - f.scale(c)
    out.sort(key=lambda t: t[1].reading_word())
    return out


def straighten_residual(T: Tableau) -> Polynomial:
    """``f_T - sum c_i f_{T_i}``; zero when the straightening is right."""
    r = specht_polynomial(T)
    for c, S in straighten(T):
        r = r - specht_polynomial(S).scale(c)
    return r


def expansion_identity(A: Sequence[int], B: Sequence[int], n: int, field=QQ,
                       insert_last: bool = False) -> Polynomial:
    """Left side minus right side of the exchange identity for ``Delta(A) Delta(B)``.

    With ``k = |A|``, ``k' = |B|`` and ``k >= k' + 2``::

        Delta(A) Delta(B) = sum_{i=k-k'}^{k} (-1)^(i-k+k')
            Delta(A - a_i) Delta(a_i + B) prod_{i' < k-k'} (x_{a_i'} - x_{a_i})

    ``a_i`` goes in front of ``B``.  With ``insert_last`` it is appended
    instead, and the two sides then differ by the sign ``(-1)^k'``.
    """
    A, B = list(A), list(B)
    k, kp = len(A), len(B)
    if k < kp + 2:
        raise SpechtError(f"need |A| >= |B| + 2, got |A|={k}, |B|={kp}")
    if set(A) & set(B):
        raise SpechtError("A and B must be disjoint")
    lhs = difference_product(A, n, field) * difference_product(B, n, field)
    rhs = Polynomial.zero(n, field)
    for i in range(k - kp, k + 1):
        ai = A[i - 1]
        grown = B + [ai] if insert_last else [ai] + B
        term = difference_product(A[:i - 1] + A[i:], n, field) * difference_product(grown, n, field)
        for ip in range(1, k - kp):
            term = term.mul_difference(A[ip - 1], ai)
        rhs = rhs + (term if (i - k + kp) % 2 == 0 else -term)
    return lhs - rhs


__all__ = [
    "DifferenceProduct", "FAMILIES", "IdealSpec", "SpechtError",
    "delta_m", "difference_factors", "difference_product", "expansion_identity",
    "generator_factors", "generators", "lili_factors", "mixed_factors", "mixed_generator",
    "specht_factors", "specht_polynomial", "straighten", "straighten_residual",
]
