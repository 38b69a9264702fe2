"""Young tableaux with one repeated label, and the n-square statistics.

A *head* tableau of shape ``lam`` (a partition of ``n + l - 1``) is filled
with ``{1 x l, 2, ..., n}``; a *tail* tableau with ``{1, ..., n-1, n x l}``.
In both cases no column may hold two copies of the repeated label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .partitions import Filter, Partition, as_partition, conjugate, dominates, enumerate_partitions

HEAD = "head"
TAIL = "tail"


class TableauError(ValueError):
    pass


def _check_variant(variant: str) -> str:
    if variant not in (HEAD, TAIL):
        raise TableauError(f"variant must be 'head' or 'tail', got {variant!r}")
    return variant


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram.  Rows are stored top to bottom."""

    rows: tuple[tuple[int, ...], ...]
    l: int = 1
    variant: str = HEAD

    def __init__(self, rows: Sequence[Sequence[int]], l: int = 1, variant: str = HEAD,
                 allow_degenerate: bool = False):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "l", int(l))
        object.__setattr__(self, "variant", _check_variant(variant))
        shape = Partition(len(r) for r in rows)  # raises on a non-partition shape
        if self.l < 1:
            raise TableauError("l must be positive")
        n = shape.weight - self.l + 1
        if n < 1:
            raise TableauError(f"shape {shape} too small for l = {self.l}")
        rep = 1 if variant == HEAD else n
        expected = sorted([rep] * (self.l - 1) + list(range(1, n + 1)))
        if sorted(x for r in rows for x in r) != expected:
            raise TableauError(f"entries of {rows} are not the multiset for n={n}, l={self.l}")
        if not allow_degenerate and self.has_column_collision():
            raise TableauError(f"repeated label {rep} occurs twice in a column of {rows}")

    # shape data ---------------------------------------------------------
    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return self.shape.weight - self.l + 1

    @property
    def repeated(self) -> int:
        return 1 if self.variant == HEAD else self.n

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(width)]

    def has_column_collision(self) -> bool:
        return any(len(set(c)) < len(c) for c in self.columns())

    def is_column_standard(self) -> bool:
        return all(all(c[i] < c[i + 1] for i in range(len(c) - 1)) for c in self.columns())

    def is_standard(self) -> bool:
        return self.is_column_standard() and all(
            all(r[i] <= r[i + 1] for i in range(len(r) - 1)) for r in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], l: int = 1, variant: str = HEAD,
                     allow_degenerate: bool = False) -> "Tableau":
        height = max((len(c) for c in columns), default=0)
        rows = [[c[i] for c in columns if len(c) > i] for i in range(height)]
        return cls(rows, l, variant, allow_degenerate)

    def swap_variant(self) -> "Tableau":
        """Exchange labels 1 and n, turning a head tableau into a tail one."""
        n = self.n
        swap = {1: n, n: 1}
        rows = [[swap.get(x, x) for x in r] for r in self.rows]
        return Tableau(rows, self.l, TAIL if self.variant == HEAD else HEAD)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [list(r) for r in self.rows],
                "l": self.l, "variant": self.variant}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        t = cls(data["rows"], data.get("l", 1), data.get("variant", HEAD))
        if "shape" in data and list(t.shape) != list(data["shape"]):
            raise TableauError("shape field disagrees with rows")
        return t

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


# ---------------------------------------------------------------------------
# basic operations

def column_standardize(T: Tableau) -> tuple[Tableau, int]:
    """Sort every column increasingly; return the tableau and the sign.

    The sign is that of the column permutation, so ``f_T = sign * f_T'``.
    """
    cols = T.columns()
    sign = 1
    new_cols = []
    for c in cols:
        if len(set(c)) < len(c):
            raise TableauError(f"degenerate column {c}")
        inversions = sum(1 for i in range(len(c)) for j in range(i + 1, len(c)) if c[i] > c[j])
        if inversions % 2:
            sign = -sign
        new_cols.append(tuple(sorted(c)))
    return Tableau.from_columns(new_cols, T.l, T.variant), sign


def row_indices(T: Tableau) -> dict[int, int | tuple[int, ...]]:
    """1-based row of every label.

    The repeated label maps to the tuple of its rows, one per copy, read
    left to right.
    """
    out: dict[int, int | tuple[int, ...]] = {}
    rep_rows: list[tuple[int, int]] = []
    for r, row in enumerate(T.rows, 1):
        for j, x in enumerate(row):
            if x == T.repeated:
                rep_rows.append((j, r))
            else:
                out[x] = r
    out[T.repeated] = tuple(r for _, r in sorted(rep_rows))
    return dict(sorted(out.items()))


def predicted_initial_exponents(T: Tableau) -> tuple[int, ...]:
    """``prod x_i^(d_i - 1)`` for a column-standard ``T``, as exponents.

    For lex with ``x1 < ... < xn`` this is the leading monomial of ``f_T``.
    """
    if not T.is_column_standard():
        raise TableauError("tableau must be column standard")
    exps = [0] * T.n
    for label, d in row_indices(T).items():
        if isinstance(d, tuple):
            exps[label - 1] += sum(r - 1 for r in d)
        else:
            exps[label - 1] += d - 1
    return tuple(exps)


# ---------------------------------------------------------------------------
# enumeration

def _removable_strips(lam: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    """Shapes ``nu`` with ``lam / nu`` a horizontal strip of ``k`` boxes."""
    p = len(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == p:
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        low = lam[i + 1] if i + 1 < p else 0
        for take in range(0, min(left, lam[i] - low) + 1):
            acc.append(lam[i] - take)
            yield from rec(i + 1, left - take, acc)
            acc.pop()

    yield from rec(0, k, [])


def _addable_strips(mu: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    """Shapes ``lam`` with ``lam / mu`` a horizontal strip of ``k`` boxes."""
    q = len(mu)

    def rec(i: int, left: int, acc: list[int]):
        if i == q + 1 or left == 0:
            if left == 0:
                yield tuple(acc) + tuple(mu[i:])
            return
        cur = mu[i] if i < q else 0
        cap = left if i == 0 else min(left, mu[i - 1] - cur)
        for add in range(cap, -1, -1):
            acc.append(cur + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    for lam in rec(0, k, []):
        yield tuple(x for x in lam if x)


def _fill(shape: tuple[int, ...], chain: list[tuple[tuple[int, ...], int]]) -> list[list[int]]:
    """Fill ``shape`` from a chain of (sub-shape, label) pairs, outermost first."""
    grid = [[0] * r for r in shape]
    outer = shape
    for inner, label in chain:
        for i, r in enumerate(outer):
            start = inner[i] if i < len(inner) else 0
            for j in range(start, r):
                grid[i][j] = label
        outer = inner
    return grid


@lru_cache(maxsize=None)
def _syt_chains(shape: tuple[int, ...], stop: tuple[int, ...]) -> tuple:
    """All chains removing one corner at a time from ``shape`` down to ``stop``."""
    if shape == stop:
        return ((),)
    out = []
    for i in range(len(shape)):
        if shape[i] > (shape[i + 1] if i + 1 < len(shape) else 0):
            smaller = list(shape)
            smaller[i] -= 1
            smaller = tuple(x for x in smaller if x)
            if all((smaller[k] if k < len(smaller) else 0) >= (stop[k] if k < len(stop) else 0)
                   for k in range(len(stop))):
                for rest in _syt_chains(smaller, stop):
                    out.append((smaller,) + rest)
    return tuple(out)


def enumerate_standard(l: int, lam, variant: str = HEAD) -> list[Tableau]:
    """``STab(l, lam)`` (head) or ``STab(lam, l)`` (tail), sorted by reading word."""
    lam = as_partition(lam)
    _check_variant(variant)
    if l < 1:
        raise TableauError("l must be positive")
    if lam.first < l:
        raise TableauError("repeated label cannot avoid column collision: "
                           f"first part {lam.first} < l = {l}")
    n = lam.weight - l + 1
    shape = lam.parts
    out = []
    if variant == HEAD:
        for chain in _syt_chains(shape, (l,)):
            labels = list(range(n, 1, -1))
            grid = _fill(shape, list(zip(chain + ((),), labels + [1])))
            out.append(Tableau(grid, l, HEAD))
    else:
        for nu in _removable_strips(shape, l):
            for chain in _syt_chains(nu, ()):
                labels = list(range(n - 1, 0, -1))
                grid = _fill(shape, [(nu, n)] + list(zip(chain, labels)))
                out.append(Tableau(grid, l, TAIL))
    out.sort(key=Tableau.reading_word)
    return out


def enumerate_tableaux(l: int, lam, variant: str = HEAD) -> list[Tableau]:
    """One column-standard representative per distinct ``f_T`` in ``Tab``.

    Two tableaux give the same Specht polynomial up to sign exactly when
    they have the same multiset of column sets, so this enumerates set
    partitions of the labels into columns of lengths ``conjugate(lam)``
    with the repeated label in ``l`` distinct columns.
    """
    lam = as_partition(lam)
    _check_variant(variant)
    if lam.first < l:
        raise TableauError("repeated label cannot avoid column collision: "
                           f"first part {lam.first} < l = {l}")
    n = lam.weight - l + 1
    lengths = list(conjugate(lam))
    rep = 1 if variant == HEAD else n
    others = [x for x in range(1, n + 1) if x != rep]
    # group equal-length columns; pick how many in each group host the repeated label
    groups: dict[int, list[int]] = {}
    for j, c in enumerate(lengths):
        groups.setdefault(c, []).append(j)
    group_keys = sorted(groups, reverse=True)
    results: list[Tableau] = []

    def host_choices(gi: int, left: int):
        if gi == len(group_keys):
            if left == 0:
                yield []
            return
        cols = groups[group_keys[gi]]
        for k in range(min(left, len(cols)), -1, -1):
            for rest in host_choices(gi + 1, left - k):
                yield cols[:k] + rest

    for hosts in host_choices(0, l):
        hosts = set(hosts)
        cap = [c - (1 if j in hosts else 0) for j, c in enumerate(lengths)]
        klass = [(lengths[j], j in hosts) for j in range(len(lengths))]
        contents: list[list[int]] = [[] for _ in lengths]

        def place(idx: int):
            if idx == len(others):
                cols = []
                for j in range(len(lengths)):
                    col = sorted(contents[j] + ([rep] if j in hosts else []))
                    cols.append(col)
                results.append(Tableau.from_columns(cols, l, variant))
                return
            x = others[idx]
            opened: set = set()
            for j in range(len(lengths)):
                if len(contents[j]) >= cap[j]:
                    continue
                if not contents[j]:
                    if klass[j] in opened:
                        continue
                    opened.add(klass[j])
                contents[j].append(x)
                place(idx + 1)
                contents[j].pop()

        place(0)
    results.sort(key=Tableau.reading_word)
    return results


def enumerate_fillings(l: int, lam, variant: str = HEAD) -> Iterator[Tableau]:
    """Every filling in ``Tab`` (no symmetry reduction).  Brute force; small shapes only."""
    lam = as_partition(lam)
    n = lam.weight - l + 1
    rep = 1 if variant == HEAD else n
    labels = sorted([rep] * (l - 1) + list(range(1, n + 1)))
    for word in sorted(set(permutations(labels))):
        rows, k = [], 0
        for r in lam:
            rows.append(word[k:k + r])
            k += r
        t = Tableau(rows, l, variant, allow_degenerate=True)
        if not t.has_column_collision():
            yield t


# ---------------------------------------------------------------------------
# tail statistics

def _require_tail_standard(T: Tableau) -> None:
    if T.variant != TAIL:
        raise TableauError("statistic defined for tail tableaux")
    if not T.is_standard():
        raise TableauError("statistic defined for standard tableaux")


def w_statistic(T: Tableau) -> int:
    """Number of squares lying above some square filled by ``n``."""
    _require_tail_standard(T)
    return sum(r for r, row in enumerate(T.rows) for x in row if x == T.n)


def shape_below_n(T: Tableau) -> Partition:
    """Shape left after deleting every square filled by ``n``."""
    _require_tail_standard(T)
    return Partition(sum(1 for x in row if x != T.n) for row in T.rows)


@dataclass(frozen=True)
class NSquareProfile:
    """Where the ``n``-squares of ``lam`` over ``mu`` sit, and ``w_mu(lam)``."""

    lam: Partition
    mu: Partition
    columns_with_extra: tuple[int, ...]  # 1-based columns j with lam'_j = mu'_j + 1
    n_squares: tuple[tuple[int, int], ...]  # 1-based (row, column)
    w: int

    def to_json(self) -> dict:
        return {"lambda": self.lam.to_json(), "mu": self.mu.to_json(),
                "columns_with_extra": list(self.columns_with_extra),
                "n_squares": [list(s) for s in self.n_squares], "w": self.w}


def n_square_profile(lam, mu) -> NSquareProfile:
    lam, mu = as_partition(lam), as_partition(mu)
    squares = []
    for i in range(1, len(lam) + 1):
        for j in range(mu.part(i) + 1, lam.part(i) + 1):
            squares.append((i, j))
    if any(mu.part(i) > lam.part(i) for i in range(1, len(mu) + 1)):
        raise TableauError(f"{mu} is not contained in {lam}")
    cols = [j for _, j in squares]
    if len(set(cols)) != len(cols):
        raise TableauError(f"{lam}/{mu} is not a horizontal strip")
    w = sum(i - 1 for i, _ in squares)
    return NSquareProfile(lam, mu, tuple(sorted(cols)), tuple(squares), w)


def shapes_over(mu, n: int, l: int) -> list[NSquareProfile]:
    """``<mu>^l`` with profiles: every ``lam`` with ``lam / mu`` a horizontal ``l``-strip."""
    mu = as_partition(mu)
    if mu.weight != n - 1:
        raise TableauError(f"mu = {mu} must be a partition of n - 1 = {n - 1}")
    lams = sorted({lam for lam in _addable_strips(mu.parts, l)}, reverse=True)
    return [n_square_profile(Partition(lam), mu) for lam in lams]


def min_w_shape(lam, mu, l: int) -> Partition:
    """The element of ``<mu>^l`` below ``lam`` with strictly smallest ``w_mu``.

    Built greedily: maximise the first part, then the second, and so on,
    among the candidates; i.e. take the lexicographically largest one.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    n = mu.weight + 1
    X = [p.lam for p in shapes_over(mu, n, l) if dominates(lam, p.lam)]
    if not X:
        raise TableauError("no compatible shape")
    candidates = X
    k = 0
    while len(candidates) > 1:
        best = max(c.part(k + 1) for c in candidates)
        candidates = [c for c in candidates if c.part(k + 1) == best]
        k += 1
    return candidates[0]


def filter_power(F: Filter, k: int) -> Filter:
    """``F^k``: partitions ``mu`` of ``n-1`` with some ``lam`` in ``<mu>^l`` and ``F``
    having ``w_mu(lam) <= k``.  Returned as a lower filter of ``P_{n-1}``."""
    if F.kind != "lower":
        raise ValueError("filter_power needs a lower filter")
    if k < 0:
        raise ValueError("k must be non-negative")
    n, l = F.n, F.l
    if n < 2:
        raise ValueError("need n >= 2")
    members = []
    for mu in enumerate_partitions(n - 1):
        if any(p.w <= k and p.lam in F for p in shapes_over(mu, n, l)):
            members.append(mu)
    return Filter(n - 1, 1, "lower", members)
