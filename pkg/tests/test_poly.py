import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from spechtgb.partitions import Partition
from spechtgb.poly import (
    DEFAULT_PRIME, QQ, ExponentOverflow, GroebnerBasis, MonomialOrder, OrderSyntaxError,
    Polynomial, PrimeField, buchberger, divide, hilbert_function, ideal_contains, ideal_equal,
    is_groebner, leading_monomial, minimal_monomials, monomial_divides, monomial_ideal_dimension,
    normal_form, parse_field, s_polynomial,
)
from spechtgb.specht import IdealSpec, delta_m, generators
from spechtgb.tableaux import Tableau

GF = PrimeField()
N = 3


def x(i, n=N, field=QQ):
    return Polynomial.variable(n, i, field)


def polys(n=N, field=QQ, max_terms=4, max_exp=3):
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * n), st.integers(-5, 5))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: Polynomial(n, dict(ts), field) if ts else Polynomial.zero(n, field))


exps = st.tuples(*[st.integers(0, 6)] * 4)


def orders(n=4):
    perm = st.permutations(list(range(1, n + 1)))
    lex = perm.map(MonomialOrder.lex)
    grevlex = perm.map(MonomialOrder.grevlex)
    weight = st.tuples(st.lists(st.integers(0, 9), min_size=n, max_size=n), perm).map(
        lambda wp: MonomialOrder.weight(wp[0], MonomialOrder.lex(wp[1])))
    return st.one_of(lex, grevlex, weight)


class TestFields:
    def test_rationals_lowest_terms(self):
        assert QQ(Fraction(4, 6)) == Fraction(2, 3)
        assert QQ.to_pair(QQ(Fraction(-4, 6))) == [-2, 3]

    def test_prime(self):
        assert GF.characteristic == DEFAULT_PRIME
        with pytest.raises(ValueError):
            PrimeField(15)
        assert GF(Fraction(1, 2)) * 2 % DEFAULT_PRIME == 1

    def test_parse(self):
        assert parse_field("rational") is QQ
        assert parse_field("prime:101").characteristic == 101
        with pytest.raises(ValueError):
            parse_field("reals")


class TestRingAxioms:
    @settings(max_examples=60)
    @given(polys(), polys(), polys())
    def test_rational(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert (a - a).is_zero()

    @settings(max_examples=60)
    @given(polys(field=GF), polys(field=GF), polys(field=GF))
    def test_prime(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polys())
    def test_text_and_json_round_trip(self, f):
        assert Polynomial.parse(f.to_text(), N) == f
        assert Polynomial.from_json(N, f.to_json()) == f

    def test_parse_text(self):
        f = Polynomial.parse("3*x1^2*x3 - 1/2*x2 + 4", 3)
        assert f.coefficient((2, 0, 1)) == 3
        assert f.coefficient((0, 1, 0)) == Fraction(-1, 2)
        assert f.coefficient((0, 0, 0)) == 4

    def test_mul_difference(self):
        f = Polynomial.one(3).mul_difference(1, 3)
        assert f == x(1) - x(3)

    def test_exponent_overflow(self):
        with pytest.raises(ExponentOverflow):
            Polynomial(1, {(10 ** 6,): 1})


class TestOrders:
    @settings(max_examples=100)
    @given(orders(), exps, exps, exps)
    def test_total_and_multiplicative(self, order, a, b, c):
        assert order.less(a, b) or order.less(b, a) or a == b
        assert not (order.less(a, b) and order.less(b, a))
        if order.less(a, b):
            ac = tuple(p + q for p, q in zip(a, c))
            bc = tuple(p + q for p, q in zip(b, c))
            assert order.less(ac, bc)

    @settings(max_examples=50)
    @given(orders(), exps)
    def test_one_is_smallest(self, order, a):
        assert a == (0,) * 4 or order.less((0,) * 4, a)

    def test_conventions(self):
        up = MonomialOrder.lex_ascending(3)
        assert str(up) == "lex:3,2,1"
        assert str(MonomialOrder.lex_descending(3)) == "lex:1,2,3"
        assert up.less((1, 0, 0), (0, 1, 0))

    def test_parse(self):
        o = MonomialOrder.parse("weight:1,2,0,0;tie=lex:1,2,3,4")
        assert str(o) == "weight:1,2,0,0;tie=lex:1,2,3,4"
        for bad in ("lex:1,x", "banana:1", "weight:1,2"):
            with pytest.raises(OrderSyntaxError):
                MonomialOrder.parse(bad)


class TestLeadingMonomial:
    def test_examples(self):
        up = MonomialOrder.lex_ascending(2)
        assert leading_monomial(x(1, 2) - x(2, 2), up) == (0, 1)
        assert leading_monomial(Polynomial.constant(3, 5), MonomialOrder.lex_ascending(3)) == (0, 0, 0)
        with pytest.raises(ValueError):
            leading_monomial(Polynomial.zero(2), up)

    def test_specht_example(self):
        from spechtgb.specht import specht_polynomial
        T = Tableau([[1, 1, 1, 1, 2, 3], [4, 5, 8], [6, 7]], l=4)
        f = specht_polynomial(T)
        assert f.leading_monomial(MonomialOrder.lex_ascending(8)) == (0, 0, 0, 1, 1, 2, 2, 1)


class TestDivision:
    def test_member(self):
        G = [x(1) * x(2) - x(3), x(2) ** 2 - 1]
        assert normal_form(G[0], G, MonomialOrder.lex_descending(3)).is_zero()

    def test_s_polynomial(self):
        order = MonomialOrder.lex_descending(3)
        f = x(1) * x(2) - x(3) ** 2
        g = x(2) * x(3) - 1
        s = s_polynomial(f, g, order)
        assert s in (x(1) - x(3) ** 3, x(3) ** 3 - x(1))
        assert s_polynomial(f, f, order).is_zero()

    def test_coprime_product_criterion(self):
        order = MonomialOrder.lex_descending(2)
        f, g = x(1, 2) ** 2, x(2, 2) ** 2
        assert normal_form(s_polynomial(f, g, order), [f, g], order).is_zero()

    @settings(max_examples=60, deadline=None)
    @given(polys(max_exp=4), st.lists(polys(max_terms=3), min_size=1, max_size=3), orders(N))
    def test_quotients_exact(self, f, G, order):
        G = [g for g in G if not g.is_zero()]
        assume(G)
        qs, r = divide(f, G, order)
        total = r
        for q, g in zip(qs, G):
            total = total + q * g
        assert total == f
        leads = [g.leading_monomial(order) for g in G]
        for m in r.monomials():
            assert not any(monomial_divides(a, m) for a in leads)
        assert normal_form(f, G, order) == r


def _reduced(rep):
    order = rep.order
    leads = rep.leading_monomials()
    for i, a in enumerate(leads):
        assert rep.basis[i].leading_coefficient(order) == 1
        for j, g in enumerate(rep.basis):
            if i != j:
                assert not any(monomial_divides(a, m) for m in g.monomials())


class TestBuchberger:
    def test_single(self):
        f = x(1, 2) - x(2, 2)
        rep = buchberger([f], MonomialOrder.lex_descending(2))
        assert rep.basis == [f] and rep.verified

    def test_33_degrees(self):
        F = generators(IdealSpec("specht_head", 5, 2, Partition([3, 3])))
        assert buchberger(F, MonomialOrder.lex_ascending(5)).degree_counts() == {3: 3, 4: 2}
        assert buchberger(F, MonomialOrder.lex_descending(5)).degree_counts() == {3: 3, 4: 3, 6: 1}

    @settings(max_examples=30, deadline=None)
    @given(st.lists(polys(max_terms=3, max_exp=2), min_size=1, max_size=3), orders(N))
    def test_reduced_and_verified(self, F, order):
        F = [f for f in F if not f.is_zero()]
        assume(F)
        rep = buchberger(F, order)
        _reduced(rep)
        assert is_groebner(rep.basis, order).verified
        for f in F:
            assert normal_form(f, rep.basis, order).is_zero()

    @settings(max_examples=20, deadline=None)
    @given(st.lists(polys(max_terms=3, max_exp=2), min_size=1, max_size=3), orders(N), st.randoms())
    def test_initial_ideal_independent_of_input_order(self, F, order, rnd):
        F = [f for f in F if not f.is_zero()]
        assume(F)
        a = buchberger(F, order)
        G = list(F)
        rnd.shuffle(G)
        b = buchberger(G, order)
        assert sorted(a.initial_ideal()) == sorted(b.initial_ideal())
        assert sorted(p.to_text() for p in a.basis) == sorted(p.to_text() for p in b.basis)

    def test_rational_vs_prime(self):
        for lam, l in (((3, 3), 2), ((3, 2, 1), 1), ((2, 2, 1), 2)):
            n = sum(lam) - l + 1
            spec = IdealSpec("specht_head", n, l, Partition(lam))
            order = MonomialOrder.lex_descending(n)
            q = buchberger(generators(spec), order)
            p = buchberger(generators(spec, field=GF), order)
            assert sorted(q.leading_monomials()) == sorted(p.leading_monomials())
            assert p.heuristic and not q.heuristic

    def test_deadline(self):
        import time
        F = generators(IdealSpec("specht_head", 6, 1, Partition([3, 2, 1])))
        with pytest.raises(TimeoutError):
            buchberger(F, MonomialOrder.lex_descending(6), deadline=time.monotonic() - 1)


class TestIsGroebner:
    def test_buchberger_output(self):
        F = [x(1) ** 2 - x(2), x(1) * x(2) - x(3)]
        order = MonomialOrder.grevlex([1, 2, 3])
        assert is_groebner(buchberger(F, order).basis, order).verified

    def test_not_groebner(self):
        F = [x(1) ** 2 - x(2), x(1) * x(2) - x(3)]
        rep = is_groebner(F, MonomialOrder.lex_descending(3))
        assert not rep.verified and rep.witness is not None

    def test_standard_33(self):
        from spechtgb.partitions import Filter
        spec = IdealSpec("specht_filter", 5, 2, filter=Filter.below(Partition([3, 3]), 2))
        G = generators(spec, standard_only=True)
        assert is_groebner(G, MonomialOrder.lex_ascending(5)).verified


class TestIdealOps:
    def test_equal(self):
        F = [x(1) - x(2), x(2) - x(3)]
        order = MonomialOrder.lex_descending(3)
        assert ideal_equal(F, F, order)
        assert ideal_equal(F, [x(1) - x(3), x(1) - x(2)], order)

    def test_stab_vs_tab(self):
        spec = IdealSpec("specht_head", 6, 2, Partition([3, 3, 1]))
        order = MonomialOrder.lex_ascending(6)
        assert ideal_equal(generators(spec, standard_only=True), generators(spec), order)

    def test_delta3_not_in_mixed(self):
        order = MonomialOrder.lex_ascending(4)
        small = generators(IdealSpec("mixed", 4, 1, Partition([2, 1, 1]), m=3))
        big = generators(IdealSpec("mixed", 4, 1, Partition([2, 2]), m=3))
        assert ideal_equal(small, [delta_m(3, 4).expand(QQ)], order)
        assert not ideal_equal(small, big, order)
        assert not ideal_contains(big, small, order)

    def test_groebner_basis_wrapper(self):
        order = MonomialOrder.lex_descending(3)
        gb = GroebnerBasis.compute([x(1) - x(2), x(2) - x(3)], order)
        assert gb.contains(x(1) - x(3))
        assert not gb.contains(x(1))


class TestMonomialIdeals:
    def test_dimension_examples(self):
        assert monomial_ideal_dimension([(1, 0, 0)], 3) == 2
        assert monomial_ideal_dimension([], 4) == 4
        assert monomial_ideal_dimension([(0, 0)], 2) == -1
        F = generators(IdealSpec("specht_head", 5, 2, Partition([3, 3])))
        M = buchberger(F, MonomialOrder.lex_ascending(5)).initial_ideal()
        assert monomial_ideal_dimension(M, 5) == 3

    @settings(max_examples=50)
    @given(st.lists(st.tuples(*[st.integers(0, 2)] * 4), max_size=5))
    def test_dimension_brute_force(self, M):
        M = [m for m in M if any(m)]
        best = 0
        for k in range(5):
            for Y in itertools.combinations(range(4), k):
                if all(any(m[i] and i not in Y for i in range(4)) for m in M):
                    best = max(best, k)
        assert monomial_ideal_dimension(minimal_monomials(M), 4) == best

    def test_hilbert_examples(self):
        assert hilbert_function([], 2, 4) == [1, 2, 3, 4, 5]
        assert hilbert_function([(2,)], 1, 3) == [1, 1, 0, 0]

    @settings(max_examples=40)
    @given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=4), st.integers(0, 6))
    def test_hilbert_brute_force(self, M, D):
        M = [m for m in M if any(m)]
        got = hilbert_function(minimal_monomials(M), 3, D)
        for d in range(D + 1):
            count = sum(1 for e in itertools.product(range(d + 1), repeat=3)
                        if sum(e) == d and not any(monomial_divides(m, e) for m in M))
            assert got[d] == count

    def test_two_orders_same_hilbert(self):
        F = generators(IdealSpec("specht_head", 5, 2, Partition([3, 3])))
        a = buchberger(F, MonomialOrder.lex_ascending(5)).initial_ideal()
        b = buchberger(F, MonomialOrder.lex_descending(5)).initial_ideal()
        assert sorted(a) != sorted(b)
        assert hilbert_function(a, 5, 8) == hilbert_function(b, 5, 8)


class TestSympyOracle:
    @pytest.mark.parametrize("seed", range(6))
    def test_reduced_basis_matches(self, seed):
        sympy = pytest.importorskip("sympy")
        rnd = random.Random(seed)
        n = 3
        F = []
        for _ in range(3):
            terms = {tuple(rnd.randint(0, 2) for _ in range(n)): rnd.randint(-3, 3) for _ in range(3)}
            f = Polynomial(n, terms)
            if not f.is_zero():
                F.append(f)
        perm = list(range(1, n + 1))
        rnd.shuffle(perm)
        kind = rnd.choice(["lex", "grevlex"])
        order = MonomialOrder(kind, tuple(perm))
        syms = sympy.symbols(f"x1:{n + 1}")
        gens = [syms[i - 1] for i in perm]
        G = sympy.groebner([sympy.sympify(f.to_text().replace("^", "**")) for f in F], *gens,
                           order=kind)
        ours = buchberger(F, order).basis
        theirs = []
        for g in G.exprs:
            poly = sympy.Poly(g, *gens)
            lc = Fraction(str(poly.LC(order=kind)))
            terms = {}
            for e, c in poly.terms():
                exps = [0] * n
                for k, v in zip(perm, e):
                    exps[k - 1] = v
                terms[tuple(exps)] = Fraction(str(c)) / lc
            theirs.append(Polynomial(n, terms))
        assert sorted(p.to_text() for p in ours) == sorted(p.to_text() for p in theirs)
