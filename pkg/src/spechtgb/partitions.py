"""Integer partitions, the dominance order and filters of ``[P_m]_{>=l}``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence


class IncomparableError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Instances are canonical value objects: trailing zeros are dropped on
    construction, so two partitions compare equal iff their parts agree.
    ``<`` is lexicographic on the parts (a total order refining dominance);
    use :func:`dominates` for the dominance order itself.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Partition":
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma list such as ``"3,3,1"``."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(int(t) for t in text.split(","))

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def dominates(lam, mu) -> bool:
    """Return True iff ``lam`` is at or above ``mu`` in dominance order."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.weight != mu.weight:
        raise IncomparableError("incomparable universes: weights "
                                f"{lam.weight} and {mu.weight} differ")
    return all(a >= b for a, b in zip(accumulate(lam.parts), accumulate(mu.parts)))


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1))


def covers(lam, mu) -> bool:
    """True iff ``lam`` covers ``mu``: strictly above with nothing in between.

    ``mu`` must come from ``lam`` by moving one box from row i down to a row
    i' > i, where either i' = i + 1 or ``lam_i = lam_i' + 2``.
    :func:`covers_bruteforce` is the definition; the tests compare the two.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.weight != mu.weight or lam == mu:
        return False
    length = max(len(lam), len(mu))
    diff = [lam.part(k) - mu.part(k) for k in range(1, length + 1)]
    plus = [k for k, d in enumerate(diff, 1) if d == 1]
    minus = [k for k, d in enumerate(diff, 1) if d == -1]
    if len(plus) != 1 or len(minus) != 1 or sum(1 for d in diff if d) != 2:
        return False
    i, i2 = plus[0], minus[0]
    if i >= i2:
        return False
    return i2 == i + 1 or lam.part(i) - lam.part(i2) == 2


def covers_bruteforce(lam, mu) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.weight != mu.weight or lam == mu or not dominates(lam, mu):
        return False
    return not any(
        rho != lam and rho != mu and dominates(lam, rho) and dominates(rho, mu)
        for rho in enumerate_partitions(lam.weight)
    )


def add_box(lam, i: int) -> Partition:
    """``lam + <i>``: add one to the i-th part (1-based) and re-sort."""
    lam = as_partition(lam)
    if i < 1:
        raise ValueError("row index is 1-based")
    parts = list(lam.parts)
    if i > len(parts):
        parts.append(1)
    else:
        parts[i - 1] += 1
    return Partition(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def _partitions(m: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []
    for first in range(min(m, bound), 0, -1):
        for rest in _partitions(m - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(m: int, min_first_part: int = 1) -> list[Partition]:
    """All partitions of ``m`` with first part >= ``min_first_part``.

    The order is lexicographically decreasing, e.g. (3), (2,1), (1,1,1).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    return [Partition(p) for p in _partitions(m, m) if (p[0] if p else 0) >= min_first_part]


def maximal_elements(parts: Iterable[Partition]) -> list[Partition]:
    parts = sorted(set(parts), key=lambda p: p.parts, reverse=True)
    return [p for p in parts if not any(q != p and dominates(q, p) for q in parts)]


def minimal_elements(parts: Iterable[Partition]) -> list[Partition]:
    parts = sorted(set(parts), key=lambda p: p.parts, reverse=True)
    return [p for p in parts if not any(q != p and dominates(p, q) for q in parts)]


@dataclass(frozen=True)
class Filter:
    """A lower or upper filter of ``[P_{n+l-1}]_{>=l}`` under dominance.

    Stored by its frontier: the maximal elements of a lower filter or the
    minimal elements of an upper filter.
    """

    n: int
    l: int
    kind: str
    frontier: tuple[Partition, ...]

    def __init__(self, n: int, l: int, kind: str, frontier: Iterable = ()):
        if kind not in ("lower", "upper"):
            raise ValueError(f"kind must be 'lower' or 'upper', got {kind!r}")
        if n < 1 or l < 1:
            raise ValueError("n and l must be positive")
        elems = [as_partition(p) for p in frontier]
        for p in elems:
            if p.weight != n + l - 1 or p.first < l:
                raise ValueError(f"{p} is not in [P_{n + l - 1}]_>={l}")
        elems = maximal_elements(elems) if kind == "lower" else minimal_elements(elems)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "frontier", tuple(elems))

    @property
    def weight(self) -> int:
        return self.n + self.l - 1

    def universe(self) -> list[Partition]:
        return enumerate_partitions(self.weight, self.l)

    def __contains__(self, lam) -> bool:
        lam = as_partition(lam)
        if lam.weight != self.weight or lam.first < self.l:
            return False
        if self.kind == "lower":
            return any(dominates(f, lam) for f in self.frontier)
        return any(dominates(lam, f) for f in self.frontier)

    def members(self) -> list[Partition]:
        return [p for p in self.universe() if p in self]

    def complement(self) -> "Filter":
        rest = [p for p in self.universe() if p not in self]
        if self.kind == "lower":
            return Filter(self.n, self.l, "upper", minimal_elements(rest))
        return Filter(self.n, self.l, "lower", maximal_elements(rest))

    def is_proper(self) -> bool:
        return len(self.members()) < len(self.universe())

    def is_empty(self) -> bool:
        return not self.frontier

    def to_json(self) -> dict:
        return {"n": self.n, "l": self.l, "kind": self.kind,
                "frontier": [p.to_json() for p in self.frontier]}

    @classmethod
    def from_json(cls, data: dict) -> "Filter":
        return cls(data["n"], data["l"], data["kind"], data["frontier"])

    @classmethod
    def below(cls, lam, l: int = 1) -> "Filter":
        """The principal lower filter ``F_lam`` of ``[P_{|lam|}]_{>=l}``."""
        lam = as_partition(lam)
        return cls(lam.weight - l + 1, l, "lower", [lam])

    @classmethod
    def above(cls, lam, l: int = 1) -> "Filter":
        lam = as_partition(lam)
        return cls(lam.weight - l + 1, l, "upper", [lam])

    @classmethod
    def whole(cls, n: int, l: int, kind: str = "lower") -> "Filter":
        u = enumerate_partitions(n + l - 1, l)
        return cls(n, l, kind, u)

    def __str__(self) -> str:
        body = ", ".join(map(str, self.frontier)) or "empty"
        sign = "<=" if self.kind == "lower" else ">="
        return f"{self.kind}[{sign} {body}] in [P_{self.weight}]_>={self.l}"


def filter_restrict(F: Filter, i: int) -> Filter:
    """``F_i = {mu : mu + <i> in F}`` inside ``[P_{n+l-2}]_{>=l}``."""
    if F.n < 2:
        raise ValueError("cannot restrict a filter with n = 1")
    members = [mu for mu in enumerate_partitions(F.weight - 1, F.l) if add_box(mu, i) in F]
    return Filter(F.n - 1, F.l, F.kind, members)


def lower_filters(n: int, l: int, proper: bool = True) -> list[Filter]:
    """Every lower filter of ``[P_{n+l-1}]_{>=l}``, one per antichain.

    The empty filter is excluded; so is the whole poset when ``proper``.
    """
    universe = enumerate_partitions(n + l - 1, l)
    idx = {p: k for k, p in enumerate(universe)}
    below = [frozenset(idx[q] for q in universe if dominates(p, q)) for p in universe]
    seen: set[frozenset] = set()
    out: list[Filter] = []

    # each lower filter is the down-closure of its maximal antichain; walk
    # antichains in a canonical order so the output is reproducible
    def extend(start: int, chosen: list[int], closure: frozenset):
        for k in range(start, len(universe)):
            if k in closure or any(c in below[k] for c in chosen):
                continue
            new = closure | below[k]
            key = new
            if key not in seen:
                seen.add(key)
                out.append(Filter(n, l, "lower", [universe[c] for c in chosen + [k]]))
            extend(k + 1, chosen + [k], new)

    extend(0, [], frozenset())
    if proper:
        out = [F for F in out if len(F.members()) < len(universe)]
    out.sort(key=lambda F: (len(F.members()), [f.parts for f in F.frontier]))
    return out
