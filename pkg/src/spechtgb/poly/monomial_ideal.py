"""Combinatorics of monomial ideals: Krull dimension and Hilbert function."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .groebner import minimal_monomials, monomial_divides


def _supports(M: Sequence[Sequence[int]]) -> list[frozenset[int]]:
    return [frozenset(i for i, e in enumerate(m) if e) for m in minimal_monomials(M)]


def monomial_ideal_dimension(M: Sequence[Sequence[int]], n: int) -> int:
    """Krull dimension of ``S/(M)`` for ``S = K[x1..xn]``.

    This is the largest ``Y`` such that the coordinate subspace on ``Y``
    lies in ``V(M)``, i.e. no generator has its support inside ``Y``; it
    equals ``n`` minus the minimal vertex cover of the support hypergraph.
    Returns -1 for the unit ideal.
    """
    supports = _supports(M)
    if any(not s for s in supports):
        return -1
    if not supports:
        return n
    # keep inclusion-minimal supports only
    supports = [s for s in supports if not any(t < s for t in supports)]
    for size in range(n, -1, -1):
        for Y in combinations(range(n), size):
            Yset = frozenset(Y)
            if not any(s <= Yset for s in supports):
                return size
    return -1


def _monomials_of_degree(n: int, d: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def hilbert_function(M: Sequence[Sequence[int]], n: int, D: int) -> list[int]:
    """``dim_K (S/(M))_d`` for ``d = 0..D`` by counting standard monomials."""
    if D < 0:
        raise ValueError("D must be non-negative")
    gens = minimal_monomials(M)
    out = []
    for d in range(D + 1):
        out.append(sum(1 for m in _monomials_of_degree(n, d)
                       if not any(monomial_divides(g, m) for g in gens)))
    return out
