"""Division, S-polynomials, Buchberger's algorithm and Groebner-basis checks.

Internally every monomial is a single Python int (see
:meth:`MonomialOrder.packing`): integer comparison is the monomial order,
integer addition is monomial multiplication, and divisibility is one
subtraction plus a mask test on per-exponent guard bits.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from heapq import heapify, heappop, heappush
from typing import Sequence

from .orders import EXP_WIDTH, MAX_EXPONENT, MonomialOrder
from .polynomial import ExponentOverflow, Polynomial


class _Packing:
    """Encoder between exponent tuples and packed monomial ints."""

    def __init__(self, nvars: int, order: MonomialOrder):
        if order.n != nvars:
            raise ValueError(f"order is for {order.n} variables, ring has {nvars}")
        layout, extra = order.packing()
        self.nvars = nvars
        self.shift = EXP_WIDTH * nvars
        self.mask = (1 << self.shift) - 1
        self.guards = sum(1 << (EXP_WIDTH * k + EXP_WIDTH - 1) for k in range(nvars))
        self.field_pos = [0] * nvars  # bit offset of each variable's field
        for rank, var in enumerate(layout):
            self.field_pos[var] = EXP_WIDTH * (nvars - 1 - rank)
        self.units = [(extra[i] << self.shift) | (1 << self.field_pos[i]) for i in range(nvars)]

    def encode(self, exps: Sequence[int]) -> int:
        m = 0
        for u, e in zip(self.units, exps):
            if e:
                if e > MAX_EXPONENT:
                    raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
                m += e * u
        return m

    def decode(self, m: int) -> tuple:
        fmask = (1 << EXP_WIDTH) - 1
        return tuple((m >> pos) & fmask for pos in self.field_pos)

    def divides(self, a: int, b: int) -> bool:
        g = self.guards
        mask = self.mask
        return (((b & mask) | g) - (a & mask)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.encode(tuple(map(max, self.decode(a), self.decode(b))))

    def degree(self, m: int) -> int:
        return sum(self.decode(m))


class _Elem:
    """A monic basis element: ``terms`` is sorted, greatest monomial first."""

    __slots__ = ("lead", "lead_packed", "tail", "lc", "nterms", "maxexp", "source")

    def __init__(self, terms: list, lc, pk: _Packing, source=None):
        self.lead = terms[0][0]
        self.lead_packed = self.lead & pk.mask
        self.tail = terms[1:]
        self.lc = lc
        self.nterms = len(terms)
        # per-variable maximum exponent, packed, for the overflow guard
        exps = [pk.decode(m) for m, _ in terms]
        self.maxexp = sum(max(col) << pk.field_pos[i] for i, col in enumerate(zip(*exps)))
        self.source = source

    def terms(self):
        return [(self.lead, 1)] + self.tail


@dataclass
class GBReport:
    """Outcome of :func:`buchberger` or :func:`is_groebner`."""

    basis: list
    order: MonomialOrder
    verified: bool
    spair_count: int = 0
    reductions_to_zero: int = 0
    max_intermediate_terms: int = 0
    skipped_pairs: int = 0
    field: str = "QQ"
    heuristic: bool = False
    witness: Polynomial | None = None
    witness_source: tuple | None = None
    criteria: str = "product+chain"
    strategy: str = "normal"
    extra: dict = dc_field(default_factory=dict)

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def initial_ideal(self) -> list[tuple]:
        """Minimal generators of the monomial ideal spanned by the leads."""
        return minimal_monomials(self.leading_monomials())

    def degree_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for m in self.initial_ideal():
            counts[sum(m)] = counts.get(sum(m), 0) + 1
        return dict(sorted(counts.items()))

    def summary(self) -> dict:
        out = {
            "order": str(self.order),
            "field": self.field,
            "heuristic": self.heuristic,
            "verified": self.verified,
            "basis_size": len(self.basis),
            "spair_count": self.spair_count,
            "skipped_pairs": self.skipped_pairs,
            "reductions_to_zero": self.reductions_to_zero,
            "max_intermediate_terms": self.max_intermediate_terms,
            "criteria": self.criteria,
            "strategy": self.strategy,
        }
        if self.witness is not None:
            out["witness_leading_monomial"] = list(self.witness.leading_monomial(self.order))
            out["witness_terms"] = len(self.witness)
            out["witness_source"] = list(self.witness_source) if self.witness_source else None
        out.update(self.extra)
        return out


def monomial_divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_monomials(monos) -> list[tuple]:
    """Minimal generators of the monomial ideal generated by ``monos``."""
    uniq = sorted(set(tuple(m) for m in monos), key=lambda m: (sum(m), m))
    out: list[tuple] = []
    for m in uniq:
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


class Reducer:
    """Reduction machinery for a fixed ring, order and list of divisors.

    Divisor choice is deterministic: the lowest list index whose leading
    monomial divides the term being reduced.
    """

    def __init__(self, nvars: int, order: MonomialOrder, coeff_field, basis: Sequence[Polynomial] = ()):
        self.nvars = nvars
        self.order = order
        self.kfield = coeff_field
        self.mod = coeff_field.modulus
        self.pk = _Packing(nvars, order)
        self.elems: list[_Elem] = []
        self._leads: list[int] = []
        self._cache: dict[int, int] = {}
        self.max_terms = 0
        for g in basis:
            self.add(self.internal(g))

    # conversion ---------------------------------------------------------
    def internal(self, f: Polynomial, source=None) -> _Elem | None:
        if f.nvars != self.nvars:
            raise ValueError("polynomial ring mismatch")
        if f.field != self.kfield:
            f = f.change_field(self.kfield)
        terms = sorted(((self.pk.encode(m), c) for m, c in f.items()), reverse=True)
        if not terms:
            return None
        return self._make(terms, source)

    def _make(self, terms: list, source=None) -> _Elem:
        lc = terms[0][1]
        if lc != 1:
            div = self.kfield.div
            terms = [(m, div(c, lc)) for m, c in terms]
        return _Elem(terms, lc, self.pk, source)

    def external(self, terms) -> Polynomial:
        dec = self.pk.decode
        norm = self.kfield.normalize
        return Polynomial(self.nvars, {dec(m): norm(c) for m, c in terms}, self.kfield, _trusted=True)

    def add(self, e: _Elem) -> int:
        self.elems.append(e)
        self._leads.append(e.lead_packed)
        # a new divisor can only help monomials that previously had none
        self._cache = {m: j for m, j in self._cache.items() if j >= 0}
        return len(self.elems) - 1

    def set_elems(self, elems: list[_Elem]) -> None:
        self.elems = list(elems)
        self._leads = [e.lead_packed for e in self.elems]
        self._cache = {}

    # core ---------------------------------------------------------------
    def find_divisor(self, m: int) -> int:
        j = self._cache.get(m)
        if j is not None:
            return j
        g = self.pk.guards
        mp = (m & self.pk.mask) | g
        j = -1
        for k, lp in enumerate(self._leads):
            if (mp - lp) & g == g:
                j = k
                break
        self._cache[m] = j
        return j

    def reduce_terms(self, f: dict, full: bool = True, quotients: list | None = None,
                     deadline: float | None = None):
        """Reduce ``f`` (a dict ``packed -> coeff``, consumed) by the divisors.

        With ``full=False`` stop at the first irreducible leading term and
        return the partially reduced dict; otherwise return the remainder.
        """
        mod = self.mod
        guards = self.pk.guards
        mask = self.pk.mask
        heap = [-m for m in f]
        heapify(heap)
        rem: dict = {}
        elems = self.elems
        find = self.find_divisor
        steps = 0
        biggest = len(f)
        while heap:
            m = -heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            j = find(m)
            if j < 0:
                if not full:
                    f[m] = c
                    break
                rem[m] = c
                continue
            e = elems[j]
            u = m - e.lead
            if ((u & mask) + e.maxexp) & guards:
                raise ExponentOverflow("exponent overflow during reduction")
            if quotients is not None:
                quotients.append((j, u, c))
            if mod is None:
                for gm, gc in e.tail:
                    t = gm + u
                    v = f.get(t)
                    if v is None:
                        f[t] = -c * gc
                        heappush(heap, -t)
                    else:
                        v -= c * gc
                        if v:
                            f[t] = v
                        else:
                            del f[t]
            else:
                for gm, gc in e.tail:
                    t = gm + u
                    v = f.get(t)
                    if v is None:
                        f[t] = (-c * gc) % mod
                        heappush(heap, -t)
                    else:
                        v = (v - c * gc) % mod
                        if v:
                            f[t] = v
                        else:
                            del f[t]
            steps += 1
            if len(f) > biggest:
                biggest = len(f)
            if deadline is not None and not steps & 255 and time.monotonic() > deadline:
                raise TimeoutError("time cap exceeded during reduction")
        if biggest > self.max_terms:
            self.max_terms = biggest
        if full:
            return rem
        return f

    def spoly_terms(self, a: _Elem, b: _Elem) -> dict:
        lcm = self.pk.lcm(a.lead, b.lead)
        ua = lcm - a.lead
        ub = lcm - b.lead
        out: dict = {}
        mod = self.mod
        for m, c in a.tail:
            out[m + ua] = c
        for m, c in b.tail:
            t = m + ub
            v = out.get(t, 0) - c
            if mod is not None:
                v %= mod
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def sorted_terms(self, f: dict) -> list:
        norm = self.kfield.normalize
        return sorted(((m, norm(c)) for m, c in f.items()), reverse=True)


# ---------------------------------------------------------------------------
# pair management (Gebauer-Moeller)

def _update(pk: _Packing, leads: list[int], pairs: dict, new: int) -> None:
    """Insert basis index ``new`` and prune ``pairs`` in place.

    ``pairs`` maps ``(i, j)`` to the lcm of the two leading monomials.
    Applies Buchberger's product criterion and the chain criterion in the
    Gebauer-Moeller formulation.
    """
    lf = leads[new]
    divides = pk.divides
    # chain criterion on old pairs: drop (i, j) if lead(new) | lcm(i, j)
    # strictly below the lcms with new
    for key in list(pairs):
        i, j = key
        L = pairs[key]
        if divides(lf, L) and pk.lcm(leads[i], lf) != L and pk.lcm(leads[j], lf) != L:
            del pairs[key]
    cands: dict[int, list[int]] = {}
    for i in range(new):
        cands.setdefault(pk.lcm(leads[i], lf), []).append(i)
    minimal: list[int] = []
    for L in sorted(cands):
        if not any(divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        idx = cands[L]
        # product criterion: packed monomials are additive, so a coprime
        # pair is one whose lcm equals the product; it kills the whole class
        if any(L == leads[i] + lf for i in idx):
            continue
        pairs[(min(idx), new)] = L


def _pair_key(pairs: dict):
    return min(pairs, key=lambda k: (pairs[k], k))


# ---------------------------------------------------------------------------
# public API

def _ring_of(polys: Sequence[Polynomial]):
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    n, fld = polys[0].nvars, polys[0].field
    for p in polys:
        if p.nvars != n or p.field != fld:
            raise ValueError("polynomials live in different rings")
    return n, fld


def leading_monomial(f: Polynomial, order: MonomialOrder) -> tuple:
    return f.leading_monomial(order)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """``lcm/lt(f) * f - lcm/lt(g) * g`` for the leading terms under ``order``."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of zero")
    r = Reducer(f.nvars, order, f.field)
    a, b = r.internal(f), r.internal(g)
    return r.external(r.spoly_terms(a, b).items())


def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder):
    """Division algorithm: return ``(quotients, remainder)``.

    ``f = sum(q_i * G[i]) + remainder`` exactly, no term of the remainder is
    divisible by any leading monomial of ``G``, and the divisor chosen at
    each step is the lowest-index one.
    """
    if any(g.is_zero() for g in G):
        raise ValueError("divisors must be nonzero")
    if not G:
        return [], f
    r = Reducer(f.nvars, order, f.field, G)
    record: list = []
    f_int = {r.pk.encode(m): c for m, c in f.items()}
    rem = r.reduce_terms(f_int, full=True, quotients=record)
    qs: list[dict] = [{} for _ in G]
    div = f.field.div
    for j, u, c in record:
        coeff = div(c, r.elems[j].lc)
        qs[j][u] = qs[j].get(u, 0) + coeff
    quotients = [r.external(q.items()) for q in qs]
    return quotients, r.external(rem.items())


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    if not G:
        return f
    if any(g.is_zero() for g in G):
        raise ValueError("divisors must be nonzero")
    r = Reducer(f.nvars, order, f.field, G)
    return r.external(r.reduce_terms({r.pk.encode(m): c for m, c in f.items()}).items())


def _minimalize(elems: list[_Elem], pk: _Packing) -> tuple[list[int], list[int]]:
    """Split indices into (kept, redundant) by leading-monomial divisibility."""
    keep, drop = [], []
    for i, e in enumerate(elems):
        redundant = False
        for j, o in enumerate(elems):
            if j == i:
                continue
            if o.lead == e.lead:
                if j < i:
                    redundant = True
                    break
            elif pk.divides(o.lead, e.lead):
                redundant = True
                break
        (drop if redundant else keep).append(i)
    return keep, drop


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise TimeoutError("deadline exceeded")


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder, *, stop_at_first: bool = True,
                deadline: float | None = None) -> GBReport:
    """Check the Buchberger criterion for ``G`` under ``order``.

    Elements whose leading monomial is divisible by another leading monomial
    are set aside: ``G`` is a Groebner basis iff the remaining elements form
    one and every set-aside element reduces to zero modulo them.  S-pairs of
    the remaining elements are pruned with the product and chain criteria.
    """
    G = [g for g in G]
    n, fld = _ring_of(G)
    if any(g.is_zero() for g in G):
        raise ValueError("Groebner check needs nonzero polynomials")
    r = Reducer(n, order, fld)
    elems = [r.internal(g, source=k) for k, g in enumerate(G)]
    keep, drop = _minimalize(elems, r.pk)
    core = [elems[k] for k in keep]
    r.set_elems(core)
    leads = [e.lead for e in core]
    pairs: dict = {}
    for k in range(len(core)):
        _update(r.pk, leads, pairs, k)
    report = GBReport(basis=list(G), order=order, verified=True, field=fld.name,
                      heuristic=fld.heuristic)
    report.skipped_pairs = len(core) * (len(core) - 1) // 2 - len(pairs)
    failures = 0
    for (i, j) in sorted(pairs, key=lambda k: (pairs[k], k)):
        _check_deadline(deadline)
        report.spair_count += 1
        s = r.spoly_terms(core[i], core[j])
        rest = r.reduce_terms(s, full=False, deadline=deadline)
        if rest:
            failures += 1
            if report.witness is None:
                report.verified = False
                report.witness = r.external(rest.items())
                report.witness_source = ("spair", core[i].source, core[j].source)
            if stop_at_first:
                break
        else:
            report.reductions_to_zero += 1
    if report.verified or not stop_at_first:
        for k in drop:
            e = elems[k]
            rest = r.reduce_terms(dict(e.terms()), full=False, deadline=deadline)
            if rest:
                failures += 1
                if report.witness is None:
                    report.verified = False
                    report.witness = r.external(rest.items())
                    report.witness_source = ("member", e.source)
                if stop_at_first:
                    break
            else:
                report.reductions_to_zero += 1
    report.max_intermediate_terms = r.max_terms
    report.extra["redundant_elements"] = len(drop)
    report.extra["failures"] = failures
    return report


def buchberger(F: Sequence[Polynomial], order: MonomialOrder, *, deadline: float | None = None,
               max_degree: int | None = None) -> GBReport:
    """Reduced Groebner basis of the ideal generated by ``F``.

    Normal selection strategy (smallest lcm first, ties by index), with the
    product and chain criteria.  The result is deterministic for a given
    input order.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("buchberger needs a nonzero generator")
    n, fld = _ring_of(F)
    r = Reducer(n, order, fld)
    pk = r.pk
    report = GBReport(basis=[], order=order, verified=True, field=fld.name,
                      heuristic=fld.heuristic)
    pairs: dict = {}
    leads: list[int] = []
    for k, f in enumerate(F):
        e = r.internal(f, source=k)
        r.add(e)
        leads.append(e.lead)
        _update(pk, leads, pairs, len(leads) - 1)
    while pairs:
        key = _pair_key(pairs)
        L = pairs.pop(key)
        _check_deadline(deadline)
        if max_degree is not None and pk.degree(L) > max_degree:
            raise ValueError(f"S-pair degree {pk.degree(L)} exceeds degree cap {max_degree}")
        report.spair_count += 1
        i, j = key
        s = r.spoly_terms(r.elems[i], r.elems[j])
        rem = r.reduce_terms(s, full=True, deadline=deadline)
        if not rem:
            report.reductions_to_zero += 1
            continue
        e = r._make(r.sorted_terms(rem))
        r.add(e)
        leads.append(e.lead)
        _update(pk, leads, pairs, len(leads) - 1)
    # minimalize and interreduce
    keep, _ = _minimalize(r.elems, pk)
    core = sorted((r.elems[k] for k in keep), key=lambda e: e.lead)
    final = []
    for idx, e in enumerate(core):
        others = core[:idx] + core[idx + 1:]
        red = Reducer(n, order, fld)
        red.set_elems(others)
        tail = red.reduce_terms(dict(e.tail), full=True, deadline=deadline)
        final.append(r.external([(e.lead, 1)] + list(tail.items())))
    report.basis = final
    report.max_intermediate_terms = r.max_terms
    return report


reduced_groebner_basis = buchberger


class GroebnerBasis:
    """A verified Groebner basis with a reusable reducer."""

    def __init__(self, basis: Sequence[Polynomial], order: MonomialOrder):
        n, fld = _ring_of(basis)
        self.basis = list(basis)
        self.order = order
        self.nvars = n
        self.field = fld
        self._r = Reducer(n, order, fld, self.basis)

    @classmethod
    def compute(cls, F: Sequence[Polynomial], order: MonomialOrder, **kw) -> "GroebnerBasis":
        return cls(buchberger(F, order, **kw).basis, order)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.field != self.field:
            f = f.change_field(self.field)
        r = self._r
        return r.external(r.reduce_terms({r.pk.encode(m): c for m, c in f.items()}).items())

    def contains(self, f: Polynomial) -> bool:
        r = self._r
        if f.field != self.field:
            f = f.change_field(self.field)
        return not r.reduce_terms({r.pk.encode(m): c for m, c in f.items()}, full=False)

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def initial_ideal(self) -> list[tuple]:
        return minimal_monomials(self.leading_monomials())


def ideal_equal(F: Sequence[Polynomial], G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """True iff ``(F) = (G)``, by reducing each side modulo the other's GB."""
    F = [f for f in F if not f.is_zero()]
    G = [g for g in G if not g.is_zero()]
    if not F or not G:
        return not F and not G
    gb_f = GroebnerBasis.compute(F, order)
    gb_g = GroebnerBasis.compute(G, order)
    return all(gb_g.contains(f) for f in F) and all(gb_f.contains(g) for g in G)


def ideal_contains(G: Sequence[Polynomial], F: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """True iff every element of ``F`` lies in ``(G)``."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return all(f.is_zero() for f in F)
    gb = GroebnerBasis.compute(G, order)
    return all(gb.contains(f) for f in F)
