"""Monomial orders given by permuted lex, grevlex, or weight vectors.

Every order here is a matrix order, so comparing monomials amounts to
comparing the integer vectors ``M @ a`` lexicographically.  The Groebner
engine goes one step further and folds the rows into a single integer key
that is linear in the exponents (see :meth:`MonomialOrder.packing`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

# bits per exponent field in packed monomials; the top bit is a guard
EXP_WIDTH = 16
MAX_EXPONENT = (1 << (EXP_WIDTH - 1)) - 1
# radix used to fold order-matrix rows into one integer
_ROW_RADIX = 1 << 64


class OrderSyntaxError(ValueError):
    pass


def _check_perm(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise OrderSyntaxError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplicative well-order on exponent vectors of length n.

    ``perm`` lists 1-based variable indices from greatest to smallest, so
    ``lex`` with ``perm=(5,4,3,2,1)`` is lex with ``x1 < x2 < ... < x5``.
    A ``weight`` order compares ``weights . a`` first and breaks ties
    with ``tie`` (a lex or grevlex order).
    """

    kind: str
    perm: tuple[int, ...] = ()
    weights: tuple[int, ...] = ()
    tie: "MonomialOrder | None" = None

    def __post_init__(self):
        if self.kind in ("lex", "grevlex"):
            object.__setattr__(self, "perm", _check_perm(self.perm))
        elif self.kind == "weight":
            if self.tie is None or self.tie.kind == "weight":
                raise OrderSyntaxError("weight order needs a lex or grevlex tie-break")
            w = tuple(int(x) for x in self.weights)
            if len(w) != self.tie.n:
                raise OrderSyntaxError("weight vector and tie-break disagree on n")
            if any(x < 0 or x >= 1 << 31 for x in w):
                raise OrderSyntaxError("weights must be non-negative and < 2^31")
            object.__setattr__(self, "weights", w)
        else:
            raise OrderSyntaxError(f"unknown order kind {self.kind!r}")

    # constructors -------------------------------------------------------
    @classmethod
    def lex(cls, perm: Sequence[int]) -> "MonomialOrder":
        return cls("lex", tuple(perm))

    @classmethod
    def grevlex(cls, perm: Sequence[int]) -> "MonomialOrder":
        return cls("grevlex", tuple(perm))

    @classmethod
    def weight(cls, weights: Sequence[int], tie: "MonomialOrder") -> "MonomialOrder":
        return cls("weight", weights=tuple(weights), tie=tie)

    @classmethod
    def lex_ascending(cls, n: int) -> "MonomialOrder":
        """Lex with ``x1 < x2 < ... < xn``, the default order for Specht ideals."""
        return cls.lex(range(n, 0, -1))

    @classmethod
    def lex_descending(cls, n: int) -> "MonomialOrder":
        """Lex with ``x1 > x2 > ... > xn``."""
        return cls.lex(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        """Parse ``lex:5,4,3,2,1``, ``grevlex:...`` or ``weight:w1,..;tie=lex:...``."""
        text = text.strip()
        try:
            head, _, rest = text.partition(":")
            head = head.strip().lower()
            if head in ("lex", "grevlex"):
                return cls(head, tuple(int(t) for t in rest.split(",")))
            if head == "weight":
                wpart, _, tiepart = rest.partition(";")
                tiepart = tiepart.strip()
                if not tiepart.startswith("tie="):
                    raise OrderSyntaxError("weight order needs ';tie=<order>'")
                tie = cls.parse(tiepart[4:])
                return cls.weight([int(t) for t in wpart.split(",")], tie)
        except OrderSyntaxError:
            raise
        except (ValueError, TypeError) as exc:
            raise OrderSyntaxError(f"malformed order string {text!r}: {exc}") from exc
        raise OrderSyntaxError(f"malformed order string {text!r}")

    # queries ------------------------------------------------------------
    @property
    def n(self) -> int:
        return self.tie.n if self.kind == "weight" else len(self.perm)

    def __str__(self) -> str:
        if self.kind == "weight":
            return "weight:" + ",".join(map(str, self.weights)) + ";tie=" + str(self.tie)
        return f"{self.kind}:" + ",".join(map(str, self.perm))

    def rows(self) -> list[tuple[int, ...]]:
        """The order matrix, one row per comparison stage."""
        n = self.n
        unit = lambda i, s=1: tuple(s if k == i else 0 for k in range(n))  # noqa: E731
        if self.kind == "lex":
            return [unit(p - 1) for p in self.perm]
        if self.kind == "grevlex":
            return [(1,) * n] + [unit(p - 1, -1) for p in reversed(self.perm[1:])]
        return [self.weights] + self.tie.rows()

    def key(self, exps: Sequence[int]) -> tuple[int, ...]:
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        return tuple(sum(r * e for r, e in zip(row, exps)) for row in self.rows())

    def less(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.key(a) < self.key(b)

    def variable_rank(self) -> list[int]:
        """0-based variable indices sorted from greatest to smallest variable."""
        n = self.n
        units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        return sorted(range(n), key=lambda i: self.key(units[i]), reverse=True)

    def packing(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Return ``(layout, extra)`` describing the engine's integer encoding.

        A monomial ``a`` is encoded as ``(E(a) << 16n) | P(a)`` where ``P``
        packs the exponents in 16-bit fields, variable ``layout[0]`` in the
        most significant field, and ``E(a) = sum(extra[i] * a[i])``.  The
        encoding is additive, and integer comparison agrees with the order
        as long as no exponent exceeds ``MAX_EXPONENT``.
        """
        n = self.n
        if self.kind == "lex":
            return tuple(p - 1 for p in self.perm), (0,) * n
        if self.kind == "weight" and self.tie.kind == "lex":
            rows = [self.weights]
            layout = tuple(p - 1 for p in self.tie.perm)
        else:
            rows = self.rows()
            layout = tuple(range(n))
        extra = [0] * n
        for r, row in enumerate(rows):
            scale = _ROW_RADIX ** (len(rows) - 1 - r)
            for i, v in enumerate(row):
                extra[i] += v * scale
        return layout, tuple(extra)
