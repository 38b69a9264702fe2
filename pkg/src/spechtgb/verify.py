"""Mechanical checks of the Groebner-basis, codimension and radicality claims.

Vanishing on a stratum ``H_{l,mu}`` is decided symbolically: each pattern
of coincidences among the coordinates is realised by substituting one
fresh parameter per class, and the result is tested for being the zero
polynomial.  Over an infinite field this is exact.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from .partitions import Filter, Partition, as_partition, filter_restrict
from .poly import (
    QQ,
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    buchberger,
    is_groebner,
    minimal_monomials,
    monomial_divides,
    monomial_ideal_dimension,
)
from .specht import (
    DifferenceProduct,
    IdealSpec,
    delta_m,
    generator_factors,
    generators,
)
from .tableaux import HEAD, TAIL

# ---------------------------------------------------------------------------
# strata


@dataclass(frozen=True)
class StratumPattern:
    """A surjection ``[n] -> {0..p-1}`` saying which coordinates coincide.

    ``classes`` is a restricted growth string, so each pattern has exactly
    one representation.  The repeated coordinate (1 for head, n for tail)
    counts ``l`` times.
    """

    n: int
    l: int
    classes: tuple[int, ...]
    variant: str = HEAD

    @property
    def nclasses(self) -> int:
        return max(self.classes) + 1 if self.classes else 0

    def partition(self) -> Partition:
        sizes = [0] * self.nclasses
        for c in self.classes:
            sizes[c] += 1
        rep = 0 if self.variant == HEAD else self.n - 1
        sizes[self.classes[rep]] += self.l - 1
        return Partition(sorted(sizes, reverse=True))

    def sample_point(self, values: Sequence) -> tuple:
        """A point of the stratum: coordinate ``i`` gets ``values[class(i)]``."""
        return tuple(values[c] for c in self.classes)


@lru_cache(maxsize=None)
def _set_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    out = []

    def rec(prefix: list[int], top: int):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for c in range(top + 2):
            prefix.append(c)
            rec(prefix, max(top, c))
            prefix.pop()

    rec([], -1)
    return tuple(out)


@lru_cache(maxsize=None)
def _patterns(mu: Partition, n: int, l: int, variant: str) -> tuple[StratumPattern, ...]:
    pats = (StratumPattern(n, l, c, variant) for c in _set_partitions(n))
    return tuple(p for p in pats if p.partition() == mu)


def stratum_patterns(mu, n: int, l: int, variant: str = HEAD) -> list[StratumPattern]:
    """Every coincidence pattern of points ``a`` in ``K^n`` with class ``mu``."""
    mu = as_partition(mu)
    if mu.weight != n + l - 1:
        raise ValueError(f"{mu} is not a partition of n + l - 1 = {n + l - 1}")
    return list(_patterns(mu, n, l, variant))


def lambda_map(a: Sequence, l: int = 1, variant: str = HEAD) -> Partition:
    """Multiplicity partition of ``a`` after repeating ``a_1`` (or ``a_n``) ``l`` times."""
    a = list(a)
    if not a:
        raise ValueError("empty point")
    if variant == HEAD:
        a = [a[0]] * (l - 1) + a
    else:
        a = a + [a[-1]] * (l - 1)
    counts: dict = {}
    for x in a:
        counts[x] = counts.get(x, 0) + 1
    return Partition(sorted(counts.values(), reverse=True))


def vanishes_on_pattern(f, pattern: StratumPattern) -> bool:
    if isinstance(f, DifferenceProduct):
        return f.vanishes_under(pattern.classes)
    return f.collapse(pattern.classes, pattern.nclasses).is_zero()


def vanishes_on_class(f, mu, l: int = 1, variant: str = HEAD) -> bool:
    """True iff ``f`` is identically zero on the stratum ``H_{l,mu}``.

    ``f`` may be a :class:`Polynomial` or a factored
    :class:`DifferenceProduct`; the latter vanishes on a pattern exactly
    when one of its factors joins two coinciding coordinates.
    """
    n = f.n if isinstance(f, DifferenceProduct) else f.nvars
    return all(vanishes_on_pattern(f, p) for p in stratum_patterns(mu, n, l, variant))


# ---------------------------------------------------------------------------
# reports


@dataclass
class ClaimReport:
    claim: str
    params: dict
    status: str = "pass"
    evidence: dict = field(default_factory=dict)
    witness: str | None = None
    seconds: float = 0.0
    heuristic: bool = False

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, reason: str, witness: str | None = None) -> "ClaimReport":
        if self.status == "pass":
            self.status = "fail"
            self.evidence.setdefault("reason", reason)
            if witness is not None:
                self.witness = witness
        return self

    def to_json(self, include_time: bool = False) -> dict:
        out = {"claim": self.claim, "params": self.params, "status": self.status,
               "evidence": self.evidence, "witness": self.witness, "heuristic": self.heuristic}
        if include_time:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(fn: Callable[..., ClaimReport]) -> Callable[..., ClaimReport]:
    def wrapper(*args, **kwargs) -> ClaimReport:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.seconds = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def monomial_text(m: Sequence[int]) -> str:
    parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
    return "*".join(parts) or "1"


def _gb_evidence(rep, prefix: str = "") -> dict:
    s = rep.summary()
    keys = ("verified", "basis_size", "spair_count", "skipped_pairs", "reductions_to_zero",
            "max_intermediate_terms", "redundant_elements")
    return {prefix + k: s[k] for k in keys if k in s}


def _expand(factors: Sequence[DifferenceProduct], fld) -> list[Polynomial]:
    return [f.expand(fld) for f in factors]


def _order_or_default(order: MonomialOrder | None, n: int) -> MonomialOrder:
    return order if order is not None else MonomialOrder.lex_ascending(n)


def _filter_params(F: Filter) -> dict:
    return {"n": F.n, "l": F.l, "frontier": [p.to_json() for p in F.frontier]}


def _as_lower_filter(n: int, l: int, F) -> Filter:
    if isinstance(F, Filter):
        if F.kind != "lower" or (F.n, F.l) != (n, l):
            raise ValueError("expected a lower filter with matching n, l")
        return F
    return Filter.below(as_partition(F), l)


# ---------------------------------------------------------------------------
# claim checks


@_timed
def check_main1(n: int, l: int, F: Filter, order: MonomialOrder | None = None,
                field=QQ, deadline: float | None = None) -> ClaimReport:
    """``G_{l,F}`` is a Groebner basis, vanishes on every stratum of ``F^c``,
    and is nonzero somewhere on each stratum of ``F``."""
    F = _as_lower_filter(n, l, F)
    order = _order_or_default(order, n)
    rep = ClaimReport("main1", {**_filter_params(F), "order": str(order), "field": field.name},
                      heuristic=field.heuristic)
    if F.is_empty():
        rep.evidence["generators"] = 0
        return rep
    if not F.is_proper():
        raise ValueError("the filter must be a proper subset of the poset")
    G = generator_factors(IdealSpec("specht_filter", n, l, filter=F), standard_only=True)
    rep.evidence["generators"] = len(G)
    gb = is_groebner(_expand(G, field), order, deadline=deadline)
    rep.evidence.update(_gb_evidence(gb))
    if not gb.verified:
        rep.fail("not a Groebner basis",
                 f"irreducible remainder with leading monomial "
                 f"{monomial_text(gb.witness.leading_monomial(order))}")
    members = set(F.members())
    outside = [mu for mu in F.universe() if mu not in members]
    rep.evidence["complement_classes"] = len(outside)
    for mu in outside:
        for g in G:
            if not vanishes_on_class(g, mu, l, HEAD):
                rep.fail("generator does not vanish on a complement stratum", f"{g} on {mu}")
                break
    for mu in sorted(members, reverse=True):
        if all(vanishes_on_class(g, mu, l, HEAD) for g in G):
            rep.fail("no generator separates a stratum inside the filter", str(mu))
            break
    return rep


def missing_initial_generators(gb_basis: Sequence[Polynomial], G: Sequence[Polynomial],
                               order: MonomialOrder) -> list[tuple[tuple, Polynomial]]:
    """Minimal generators of ``in(I)`` not divisible by any ``in(g)``, ``g`` in ``G``.

    ``gb_basis`` must be a reduced Groebner basis of ``I``; each returned
    pair carries the basis element with that leading monomial.
    """
    leads_g = minimal_monomials(g.leading_monomial(order) for g in G)
    out = []
    for b in gb_basis:
        m = b.leading_monomial(order)
        if not any(monomial_divides(a, m) for a in leads_g):
            out.append((m, b))
    out.sort(key=lambda t: (sum(t[0]), order.key(t[0])))
    return out


@_timed
def check_main1_5(n: int, l: int, lam, field=QQ, deadline: float | None = None) -> ClaimReport:
    """Tail tableaux: ``{f_T : T in STab(rho, l), rho in F}`` is a Groebner basis
    of the ideal generated by all ``Tab(rho, l)`` (lex, ``x1 < ... < xn``).

    ``lam`` is a partition (principal filter) or a lower :class:`Filter`.
    On failure the reduced Groebner basis is computed and every minimal
    generator of ``in(I)`` missed by the standard generators is reported.
    """
    F = _as_lower_filter(n, l, lam)
    order = MonomialOrder.lex_ascending(n)
    rep = ClaimReport("main1_5", {**_filter_params(F), "order": str(order), "field": field.name},
                      heuristic=field.heuristic)
    spec = IdealSpec("specht_filter", n, l, filter=F, variant=TAIL)
    G = _expand(generator_factors(spec, standard_only=True), field)
    full = _expand(generator_factors(spec, standard_only=False), field)
    rep.evidence["generators"] = len(G)
    rep.evidence["all_tableau_generators"] = len(full)
    gb = is_groebner(G, order, deadline=deadline)
    rep.evidence.update(_gb_evidence(gb))
    if gb.verified:
        basis = GroebnerBasis(G, order)
        same = all(basis.contains(f) for f in full)
        rep.evidence["ideal_equal"] = same
        if not same:
            rep.fail("standard generators miss part of the ideal")
        rep.evidence["initial_degrees"] = {
            str(d): c for d, c in _degree_counts(minimal_monomials(basis.leading_monomials())).items()}
        return rep
    reduced = buchberger(full, order, deadline=deadline)
    missing = missing_initial_generators(reduced.basis, G, order)
    rep.evidence["reduced_basis_size"] = len(reduced.basis)
    rep.evidence["missing_initial_generators"] = [monomial_text(m) for m, _ in missing]
    rep.evidence["missing_initial_exponents"] = [list(m) for m, _ in missing]
    witness = monomial_text(missing[0][0]) if missing else None
    return rep.fail("standard generators are not a Groebner basis", witness)


def _degree_counts(monos) -> dict[int, int]:
    counts: dict[int, int] = {}
    for m in monos:
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    return dict(sorted(counts.items()))


def initial_degree_table(spec: IdealSpec, order: MonomialOrder, field=QQ,
                         deadline: float | None = None) -> dict[int, int]:
    """Degrees of the minimal generators of ``in(I)`` via Buchberger."""
    gb = buchberger(generators(spec, field=field), order, deadline=deadline)
    return gb.degree_counts()


@_timed
def check_main2(n: int, l: int, m: int, F: Filter, order: MonomialOrder | None = None,
                field=QQ, deadline: float | None = None) -> ClaimReport:
    """``G_{l,m,F}`` is a Groebner basis of ``(Delta_m)`` intersected with ``J_{l,F^c}``."""
    F = _as_lower_filter(n, l, F)
    order = _order_or_default(order, n)
    rep = ClaimReport("main2", {**_filter_params(F), "m": m, "order": str(order),
                                "field": field.name}, heuristic=field.heuristic)
    if F.is_empty():
        rep.evidence["generators"] = 0
        return rep
    if not F.is_proper():
        raise ValueError("the filter must be a proper subset of the poset")
    G = generator_factors(IdealSpec("mixed_filter", n, l, filter=F, m=m))
    rep.evidence["generators"] = len(G)
    gb = is_groebner(_expand(G, field), order, deadline=deadline)
    rep.evidence.update(_gb_evidence(gb))
    if not gb.verified:
        rep.fail("not a Groebner basis",
                 monomial_text(gb.witness.leading_monomial(order)))
    dm = delta_m(m, n)
    bad = [g for g in G if not dm.divides(g)]
    if bad:
        rep.fail("generator outside (Delta_m)", str(bad[0]))
    members = set(F.members())
    for mu in F.universe():
        if mu in members:
            continue
        for g in G:
            if not vanishes_on_class(g, mu, l, HEAD):
                rep.fail("generator does not vanish on a complement stratum", f"{g} on {mu}")
                break
    # inside F, on patterns where Delta_m is nonzero some generator must be nonzero
    for mu in sorted(members, reverse=True):
        for p in stratum_patterns(mu, n, l, HEAD):
            if dm.vanishes_under(p.classes):
                continue
            if all(g.vanishes_under(p.classes) for g in G):
                rep.fail("no generator separates a stratum inside the filter", f"{mu}:{p.classes}")
                break
    return rep


@_timed
def check_mixed_radical(n: int, l: int, m: int, lam, field=QQ,
                        deadline: float | None = None) -> ClaimReport:
    """``sqrt(I_{l,m,lam}) = sum_{mu <= lam} I_{l,m,mu}``.

    Shown by: (a) the sum's generators form a Groebner basis, so the sum is
    radical because mixed-filter Groebner bases give radical ideals; (b) it contains
    ``I_{l,m,lam}``; (c) every generator of the sum squares into
    ``I_{l,m,lam}``.  Then the sum is a radical ideal squeezed between
    ``I`` and ``sqrt(I)``.
    """
    lam = as_partition(lam)
    order = MonomialOrder.lex_ascending(n)
    F = Filter.below(lam, l)
    rep = ClaimReport("mixed_radical", {"n": n, "l": l, "m": m, "lambda": lam.to_json(),
                                        "field": field.name}, heuristic=field.heuristic)
    sum_gens = generator_factors(IdealSpec("mixed_filter", n, l, filter=F, m=m))
    own = generator_factors(IdealSpec("mixed", n, l, lam=lam, m=m))
    rep.evidence["sum_generators"] = len(sum_gens)
    rep.evidence["ideal_generators"] = len(own)
    if F.is_proper():
        gb = is_groebner(_expand(sum_gens, field), order, deadline=deadline)
        rep.evidence["sum_is_groebner"] = gb.verified
        if not gb.verified:
            return rep.fail("sum generators are not a Groebner basis")
        sum_basis = GroebnerBasis(_expand(sum_gens, field), order)
    else:
        # lam is the one-row partition: the sum is generated by Delta_m (or is the unit ideal)
        sum_basis = GroebnerBasis(buchberger(_expand(sum_gens, field), order).basis, order)
    contains = all(sum_basis.contains(g.expand(field)) for g in own)
    rep.evidence["sum_contains_ideal"] = contains
    if not contains:
        rep.fail("sum does not contain the ideal")
    own_basis = GroebnerBasis(buchberger(_expand(own, field), order, deadline=deadline).basis, order)
    not_in = [g for g in sum_gens if not own_basis.contains(g.expand(field))]
    rep.evidence["sum_generators_outside_ideal"] = len(not_in)
    rep.evidence["ideal_is_radical"] = not not_in
    squares = [g for g in not_in if not own_basis.contains((g * g).expand(field))]
    if squares:
        rep.fail("a generator of the sum is not in the radical", f"({squares[0]})^2")
    return rep


@_timed
def check_codimension(n: int, l: int, lam, field=QQ, deadline: float | None = None) -> ClaimReport:
    """``n - dim S/in(I_{l,lam}) = lam_1 - l + 1``, using the verified basis."""
    lam = as_partition(lam)
    order = MonomialOrder.lex_ascending(n)
    rep = ClaimReport("codimension", {"n": n, "l": l, "lambda": lam.to_json(), "field": field.name},
                      heuristic=field.heuristic)
    G = _expand(generator_factors(IdealSpec("specht_filter", n, l, filter=Filter.below(lam, l)),
                                  standard_only=True), field)
    gb = is_groebner(G, order, deadline=deadline)
    rep.evidence.update(_gb_evidence(gb))
    if not gb.verified:
        return rep.fail("generators are not a Groebner basis")
    dim = monomial_ideal_dimension(gb.initial_ideal(), n)
    codim = n - dim
    expected = lam.first - l + 1
    rep.evidence.update({"dimension": dim, "codimension": codim, "expected": expected,
                         "unit_ideal": dim < 0})
    if dim < 0:
        # one row: every column is a single box, f_T = 1, the variety is empty
        rep.fail("unit ideal: the variety is empty so the formula has no stratum to count",
                 f"{codim} != {expected}")
    elif codim != expected:
        rep.fail("codimension differs from lambda_1 - l + 1", f"{codim} != {expected}")
    return rep


def _spec_basis(spec: IdealSpec, order: MonomialOrder, field, deadline) -> GroebnerBasis:
    return GroebnerBasis(buchberger(generators(spec, field=field), order, deadline=deadline).basis,
                         order)


@_timed
def check_radicality_witness(spec: IdealSpec, f, order: MonomialOrder | None = None,
                             field=QQ, deadline: float | None = None) -> ClaimReport:
    """Pass iff ``f`` is not in ``I`` but ``f^2`` is: a certificate that ``I`` is not radical."""
    order = _order_or_default(order, spec.n)
    rep = ClaimReport("radicality_witness", {"spec": spec.to_json(), "order": str(order),
                                             "field": field.name}, heuristic=field.heuristic)
    poly = f.expand(field) if isinstance(f, DifferenceProduct) else f
    basis = _spec_basis(spec, order, field, deadline)
    nf = basis.normal_form(poly)
    nf2 = basis.normal_form(poly * poly)
    rep.evidence.update({"basis_size": len(basis.basis), "nf_nonzero": not nf.is_zero(),
                         "nf_square_zero": nf2.is_zero(), "normal_form_terms": len(nf)})
    rep.witness = str(f)
    if nf.is_zero():
        rep.fail("f lies in the ideal")
    elif not nf2.is_zero():
        rep.fail("f^2 does not lie in the ideal")
    return rep


def radicality_search(spec: IdealSpec, order: MonomialOrder | None = None, field=QQ,
                      deadline: float | None = None) -> ClaimReport:
    """Look for ``f`` outside ``I`` with a power inside, among squarefree parts of generators.

    Candidates have degree at most twice the largest generator degree.  A
    report without a witness means "none found up to the bound", not that
    the ideal is radical.
    """
    t0 = time.perf_counter()
    order = _order_or_default(order, spec.n)
    gens = generator_factors(spec)
    bound = 2 * max(g.degree for g in gens)
    rep = ClaimReport("radicality_search", {"spec": spec.to_json(), "order": str(order),
                                            "degree_bound": bound, "field": field.name},
                      heuristic=field.heuristic)
    basis = _spec_basis(spec, order, field, deadline)
    seen = set()
    tried = 0
    found = None
    for g in gens:
        r = g.squarefree_part()
        if r.key in seen or r.degree > bound:
            continue
        seen.add(r.key)
        tried += 1
        if basis.contains(r.expand(field)):
            continue
        e = g.max_multiplicity()
        if basis.contains((r ** e).expand(field)):
            found = (r, e)
            break
    rep.evidence["candidates_tried"] = tried
    rep.evidence["found"] = found is not None
    if found:
        rep.witness = str(found[0])
        rep.evidence["power"] = found[1]
    rep.status = "witness" if found else "none_found"
    rep.seconds = time.perf_counter() - t0
    return rep


@_timed
def check_lili_criterion(n: int, Y: Sequence[Sequence[int]], field=QQ,
                         deadline: float | None = None) -> ClaimReport:
    """Bounded search agrees with the radicality criterion ``#Y_2 <= 1``.

    With ``#Y_2 >= 2`` a certified witness must be found; otherwise the
    search must come back empty.
    """
    spec = IdealSpec("lili", n, Y=tuple(frozenset(y) for y in Y))
    search = radicality_search(spec, field=field, deadline=deadline)
    predicted_radical = len(spec.Y) < 2 or len(spec.Y[1]) <= 1
    rep = ClaimReport("lili_criterion", {"n": n, "Y": [sorted(y) for y in spec.Y],
                                         "field": field.name}, heuristic=field.heuristic)
    rep.evidence.update(search.evidence)
    rep.evidence["predicted_radical"] = predicted_radical
    rep.witness = search.witness
    if predicted_radical and search.evidence["found"]:
        rep.fail("found a non-radicality witness for a radical case", search.witness)
    if not predicted_radical and not search.evidence["found"]:
        rep.fail("no witness found up to the degree bound")
    return rep


@_timed
def check_m_le_2(n: int, l: int, lam, m: int = 2, field=QQ,
                 deadline: float | None = None) -> ClaimReport:
    """``I_{l,m,lam}`` equals ``sum_{mu <= lam} I_{l,m,mu}`` (so it is radical), ``m <= 2``."""
    lam = as_partition(lam)
    order = MonomialOrder.lex_ascending(n)
    rep = ClaimReport("m_le_2", {"n": n, "l": l, "m": m, "lambda": lam.to_json(),
                                 "field": field.name}, heuristic=field.heuristic)
    own = _expand(generator_factors(IdealSpec("mixed", n, l, lam=lam, m=m)), field)
    total = _expand(generator_factors(IdealSpec("mixed_filter", n, l, filter=Filter.below(lam, l),
                                                m=m)), field)
    own_basis = GroebnerBasis(buchberger(own, order, deadline=deadline).basis, order)
    outside = [g for g in total if not own_basis.contains(g)]
    rep.evidence.update({"ideal_generators": len(own), "sum_generators": len(total),
                         "basis_size": len(own_basis.basis), "outside": len(outside)})
    # the reverse inclusion holds because own is a subset of total
    if outside:
        rep.fail("sum is strictly larger than the ideal", str(outside[0]))
    return rep


# ---------------------------------------------------------------------------
# universal Groebner basis experiments


def random_weight_orders(n: int, trials: int, seed: int) -> list[MonomialOrder]:
    """Seeded weight orders with integer weights in [1, 100], lex tie-break ``x1 > ... > xn``."""
    rng = random.Random(seed)
    tie = MonomialOrder.lex_descending(n)
    return [MonomialOrder.weight([rng.randint(1, 100) for _ in range(n)], tie)
            for _ in range(trials)]


def _extreme_position(order: MonomialOrder) -> str | None:
    rank = order.variable_rank()
    if rank[-1] == 0:
        return "x1_smallest"
    if rank[0] == 0:
        return "x1_largest"
    return None


@_timed
def universal_search(n: int, l: int, lam, lex_exhaustive: bool = True, random_weight_trials: int = 0,
                     seed: int = 0, exhaustive_cap: int = 6, field=QQ,
                     deadline: float | None = None) -> ClaimReport:
    """Test ``{f_T : T in Tab(l, rho), rho <= lam}`` against many monomial orders.

    Orders placing ``x1`` first or last must pass; all others are
    exploratory.  Stops at the first counterexample.
    """
    lam = as_partition(lam)
    if lex_exhaustive and n > exhaustive_cap:
        raise ValueError(f"exhaustive lex search capped at n = {exhaustive_cap}")
    rep = ClaimReport("universal", {"n": n, "l": l, "lambda": lam.to_json(),
                                    "lex_exhaustive": lex_exhaustive,
                                    "random_weight_trials": random_weight_trials, "seed": seed,
                                    "field": field.name}, heuristic=field.heuristic)
    spec = IdealSpec("specht_filter", n, l, filter=Filter.below(lam, l))
    G = _expand(generator_factors(spec, standard_only=False), field)
    orders: list[MonomialOrder] = []
    if lex_exhaustive:
        orders += [MonomialOrder.lex(p) for p in permutations(range(1, n + 1))]
    orders += random_weight_orders(n, random_weight_trials, seed)
    rep.evidence["generators"] = len(G)
    checked = passed = guaranteed = 0
    for order in orders:
        gb = is_groebner(G, order, deadline=deadline)
        checked += 1
        extreme = _extreme_position(order)
        guaranteed += extreme is not None
        if gb.verified:
            passed += 1
            continue
        rep.evidence["counterexample_order"] = str(order)
        rep.evidence["counterexample_guaranteed_case"] = extreme
        rep.fail("not a Groebner basis for some order",
                 monomial_text(gb.witness.leading_monomial(order)))
        break
    rep.evidence.update({"orders": len(orders), "checked": checked, "passed": passed,
                         "guaranteed_orders_checked": guaranteed})
    if not orders:
        rep.evidence["warning"] = "no orders requested; vacuous pass"
    return rep


# ---------------------------------------------------------------------------
# coefficient lemma spot check


def x_n_coefficients(f: Polynomial) -> list[Polynomial]:
    """``g_0, ..., g_d`` with ``f = sum g_i x_n^i``, each in ``n - 1`` variables."""
    n = f.nvars
    d = max((m[-1] for m in f.monomials()), default=0)
    parts: list[dict] = [dict() for _ in range(d + 1)]
    for m, c in f.items():
        parts[m[-1]][m[:-1]] = c
    return [Polynomial(n - 1, p, f.field) for p in parts]


@_timed
def check_keylemma(n: int, l: int, F: Filter, samples: int = 5, seed: int = 0,
                   field=QQ) -> ClaimReport:
    """Coefficients of ``x_n^i`` in random ``f`` in ``J_{l,F^c}`` lie in ``J_{l,(F^c)_{d+1}}``.

    ``J_{l,F^c} = (G_{l,F})`` and ``J_{l,(F^c)_{d+1}} = (G_{l,F_{d+1}})``, both
    with verified Groebner bases.
    """
    F = _as_lower_filter(n, l, F)
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    rep = ClaimReport("keylemma", {**_filter_params(F), "samples": samples, "seed": seed,
                                   "field": field.name}, heuristic=field.heuristic)
    G = _expand(generator_factors(IdealSpec("specht_filter", n, l, filter=F), True), field)
    if not G:
        rep.evidence["note"] = "empty filter; J is zero"
        return rep
    sub_bases: dict[int, GroebnerBasis | None] = {}
    order = MonomialOrder.lex_ascending(n - 1)
    checked = 0
    for _ in range(samples):
        f = Polynomial.zero(n, field)
        for g in rng.sample(G, min(3, len(G))):
            mono = tuple(rng.randint(0, 1) for _ in range(n))
            f = f + g.mul_monomial(mono, rng.randint(-3, 3) or 1)
        if f.is_zero():
            continue
        coeffs = x_n_coefficients(f)
        d = len(coeffs) - 1
        if d not in sub_bases:
            Fd = filter_restrict(F, d + 1)
            gens = _expand(generator_factors(
                IdealSpec("specht_filter", n - 1, l, filter=Fd), True), field) if Fd.frontier else []
            if gens:
                gb = is_groebner(gens, order)
                if not gb.verified:
                    return rep.fail("restricted generators are not a Groebner basis", str(Fd))
                sub_bases[d] = GroebnerBasis(gens, order)
            else:
                sub_bases[d] = None
        basis = sub_bases[d]
        for g in coeffs:
            checked += 1
            inside = g.is_zero() if basis is None else basis.contains(g)
            if not inside:
                return rep.fail("coefficient outside the predicted ideal", str(g))
    rep.evidence["coefficients_checked"] = checked
    return rep


__all__ = [
    "ClaimReport", "StratumPattern", "check_codimension", "check_keylemma", "check_lili_criterion",
    "check_m_le_2", "check_main1", "check_main1_5", "check_main2", "check_mixed_radical",
    "check_radicality_witness", "initial_degree_table", "lambda_map", "missing_initial_generators",
    "monomial_text", "radicality_search", "random_weight_orders", "stratum_patterns",
    "universal_search", "vanishes_on_class", "vanishes_on_pattern", "x_n_coefficients",
]
