import warnings
from fractions import Fraction as Q

import pytest

from fastgb import PolyRing
from fastgb.complexity import (CostModelInput, ModelDomainWarning, closed_form_pairs, complexity_report,
                               dominance_threshold, eval_f5_reduction_cost, eval_fast_reduction_cost,
                               eval_prop1, eval_prop2, eval_prop3, fast_reduction_crossover, leading_terms,
                               poly_degree, prop1_coefficients, prop2_coefficients, prop3_coefficients,
                               simulate_pair_counts, dominant_coefficients)
from fastgb.parsing import parse_polynomial


# Term lists written out independently of the library's coefficient tables.

def prop1_terms(m, n, N):
    return [
        Q(3, 2) * n * N**5,
        Q(N**4),
        (2 * m * n - Q(1, 2) * n + 7) * N**3,
        (-m**2 * n - Q(3, 2) * n - Q(3, 2)) * N**2,
        (-Q(1, 2) * m**2 * n - m * n - Q(3, 2) * n - Q(1, 2)) * N,
    ]


def prop2_terms(m, n, N):
    return [
        Q(2 * n, 3) * N**5,
        (m * n + Q(14, 3) * n + Q(2, 3)) * N**4,
        (-m**2 * n + m * n + m + Q(11, 6) * n + 2) * N**3,
        (Q(10, 3) * m**3 * n - 3 * m**2 * n - m**2 + Q(14, 3) * m * n + 2 * m - Q(16, 3) * n - Q(2, 3)) * N**2,
        (-Q(2, 3) * m**3 * n - Q(2, 3) * m**3 + m**2 * n + Q(17, 6) * m * n + Q(8, 3) * m - Q(11, 2) * n - 2) * N,
        -Q(11, 2) * m**2 * n - 4 * m**2 + Q(7, 2) * m * n + 2 * m,
    ]


def prop3_terms(m, n, N):
    return [
        Q(m * n + 4 * n) * N**4,
        (-m**2 * n + m * n + m + Q(15, 2) * n + 31) * N**3,
        Q(-3 * m**2 * n - m**2 + 5 * m * n - 5 * n - 1) * N**2,
        Q(-7 * m**2 * n + 10 * m * n - m**2 - m - 2 * n - 2) * N,
        Q(4 * m**2 * n - 2 * m**2 + 2 * m),
    ]


def f5_step_terms(m, n, N, B):
    return [
        (2 * n * N**2 + (2 * n + 2) * N) * B**2,
        (4 * n * N**2 + 7 * n * N) * B,
        (m * n + n) * N**3,
        (m * n + m + 1) * N**2,
    ]


def fast_step_terms(m, n, N, B):
    return [
        (2 * n * N**2 + 7 * n * N) * B,
        (m * n + n) * N**3,
        (m * n + m + 2 * n + 1) * N**2,
        (n + 2) * N,
    ]


GRID = [(m, n, N) for m in range(1, 5) for n in range(1, 5) for N in range(m + 1, 30, 3)]


def quiet(fn, *a):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ModelDomainWarning)
        return fn(*a)


@pytest.mark.parametrize("m,n,N", GRID)
def test_cost_polynomials_match_term_oracles(m, n, N):
    inp = CostModelInput(m, n, N)
    assert eval_prop1(inp) == sum(prop1_terms(m, n, N))
    assert eval_prop2(inp) == sum(prop2_terms(m, n, N))
    assert eval_prop3(inp) == sum(prop3_terms(m, n, N))


def test_spot_values():
    assert eval_prop1(CostModelInput(2, 1, 10)) == 169740
    assert quiet(eval_prop3, CostModelInput(1, 1, 1)) == Q(81, 2)
    assert quiet(eval_prop2, CostModelInput(1, 1, 0)) == -4
    assert quiet(eval_prop1, CostModelInput(1, 1, 0)) == 0


def test_prop2_spot_value_two_summation_orders():
    terms = prop2_terms(2, 1, 10)
    forward = sum(terms, Q(0))
    backward = sum(reversed(terms), Q(0))
    assert forward == backward == Q(436724, 3)
    assert eval_prop2(CostModelInput(2, 1, 10)) == forward


def test_domain_warning():
    with pytest.warns(ModelDomainWarning):
        eval_prop1(CostModelInput(3, 1, 3))
    assert not CostModelInput(3, 1, 3).in_domain
    assert CostModelInput(2, 1, 3).in_domain


def test_bad_inputs():
    with pytest.raises(ValueError):
        CostModelInput(0, 1, 5)
    with pytest.raises(ValueError):
        CostModelInput(1, 0, 5)
    with pytest.raises(ValueError):
        CostModelInput(1, 1, -1)
    with pytest.raises(ValueError):
        CostModelInput(1, 2, 7, D=2)


def test_from_system():
    R = PolyRing("xy")
    inp = CostModelInput.from_system([parse_polynomial(R, "x^2 - y"), parse_polynomial(R, "x*y - 1")])
    assert (inp.m, inp.n, inp.D, inp.N) == (2, 2, 68, 70 * 69 // 2)


def test_degrees_and_leading_terms():
    m, n = 3, 2
    assert poly_degree(prop1_coefficients(m, n)) == 5
    assert poly_degree(prop2_coefficients(m, n)) == 5
    assert poly_degree(prop3_coefficients(m, n)) == 4
    assert prop1_coefficients(m, n)[5] == Q(3, 2) * n
    assert prop2_coefficients(m, n)[5] == Q(2, 3) * n
    assert dominant_coefficients("f5b-fast", m, n)[4] == m * n
    lt = leading_terms(CostModelInput(m, n, 10))
    assert lt == {"buchberger": Q(3, 2) * n * 10**5, "f5b": Q(2, 3) * n * 10**5, "f5b-fast": m * n * 10**4}
    with pytest.raises(ValueError):
        dominant_coefficients("f4", m, n)


def test_abbreviated_coefficients_dominate():
    # each kept coefficient is the part of the full one that dominates when m and n are both large
    m = n = 10**6
    full = {"buchberger": prop1_coefficients, "f5b": prop2_coefficients, "f5b-fast": prop3_coefficients}
    for alg, fn in full.items():
        short, long_ = dominant_coefficients(alg, m, n), fn(m, n)
        assert poly_degree(short) == poly_degree(long_)
        for a, b in zip(short, long_):
            if a:
                assert abs(a / b - 1) < Q(1, 10**4)


@pytest.mark.parametrize("m,n,N", GRID[::5])
def test_step_costs_match_term_oracles(m, n, N):
    inp = CostModelInput(m, n, N)
    for B in range(0, 12):
        assert eval_f5_reduction_cost(inp, B) == sum(f5_step_terms(m, n, N, B))
        assert eval_fast_reduction_cost(inp, B) == sum(fast_step_terms(m, n, N, B))


def test_step_cost_examples():
    inp = CostModelInput(1, 1, 2)
    assert eval_f5_reduction_cost(inp, 3) == 262
    assert eval_fast_reduction_cost(inp, 3) == 108
    m, n, N = 2, 3, 5
    inp = CostModelInput(m, n, N)
    assert eval_f5_reduction_cost(inp, 0) == (m * n + n) * N**3 + (m * n + m + 1) * N**2
    assert eval_fast_reduction_cost(inp, 0) == (m * n + n) * N**3 + (m * n + m + 2 * n + 1) * N**2 + (n + 2) * N


def _second_differences(f, inp, upto=10):
    v = [f(inp, B) for B in range(upto)]
    return [v[i + 2] - 2 * v[i + 1] + v[i] for i in range(upto - 2)]


@pytest.mark.parametrize("m,n,N", GRID[::7])
def test_step_cost_degree_in_basis_size(m, n, N):
    inp = CostModelInput(m, n, N)
    assert set(_second_differences(eval_fast_reduction_cost, inp)) == {0}
    d2 = set(_second_differences(eval_f5_reduction_cost, inp))
    assert len(d2) == 1 and d2.pop() > 0


def test_crossover():
    for m, n, N in GRID[::4]:
        inp = CostModelInput(m, n, N)
        B0 = fast_reduction_crossover(inp)
        assert B0 is not None
        for B in range(B0, B0 + 50):
            assert eval_fast_reduction_cost(inp, B) < eval_f5_reduction_cost(inp, B)
        if B0 > 0:
            assert not eval_fast_reduction_cost(inp, B0 - 1) < eval_f5_reduction_cost(inp, B0 - 1)
    # the fast row is cheaper for every positive basis size
    assert fast_reduction_crossover(CostModelInput(1, 1, 2)) == 1


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_dominance_threshold(m, n):
    N0 = dominance_threshold(m, n)
    for N in range(N0, N0 + 300):
        inp = CostModelInput(m, n, N)
        p1, p2, p3 = quiet(eval_prop1, inp), quiet(eval_prop2, inp), quiet(eval_prop3, inp)
        assert p3 < p2 < p1
    if N0 > 0:
        inp = CostModelInput(m, n, N0 - 1)
        p1, p2, p3 = quiet(eval_prop1, inp), quiet(eval_prop2, inp), quiet(eval_prop3, inp)
        assert not (p3 < p2 < p1)


def test_denominators_divide_six():
    for m in range(1, 6):
        for n in range(1, 6):
            for N in range(0, 25):
                inp = CostModelInput(m, n, N)
                for f in (eval_prop1, eval_prop2, eval_prop3):
                    assert 6 % quiet(f, inp).denominator == 0
                for B in range(4):
                    assert eval_f5_reduction_cost(inp, B).denominator == 1


def test_closed_form_examples():
    assert closed_form_pairs(3, 0) == 3
    assert closed_form_pairs(3, 1) == 5
    assert closed_form_pairs(3, 3) == 12
    with pytest.raises(ValueError):
        closed_form_pairs(0, 1)


def test_simulation_examples():
    tr = simulate_pair_counts(3, 6)
    assert tr.growth_pairs() == [3, 5, 8, 12]
    assert tr.W == 15
    assert tr.buchberger_pairs == tr.growth_pairs()
    assert tr.pairs[-1] == 0 and len(tr.pairs) == 1 + 3 + 12
    assert simulate_pair_counts(4, 5).growth_steps == 1
    with pytest.raises(ValueError):
        simulate_pair_counts(5, 5)


def test_closed_form_matches_recurrence_exhaustively():
    for N in range(2, 41):
        for m in range(1, N):
            tr = simulate_pair_counts(m, N)
            assert tr.growth_pairs() == [closed_form_pairs(m, i) for i in range(N - m + 1)]
            assert 2 * closed_form_pairs(m, N - m) == N * N - 3 * N + 2 * m


def test_report():
    r = complexity_report(CostModelInput(2, 1, 10))
    d = r.as_dict()
    assert d["predicted"]["buchberger"] == "169740"
    assert d["predicted"]["f5b"] == "436724/3"
    assert d["leading_terms"]["f5b-fast"]["formula"] == "m*n*N^4"
    assert d["in_domain"]


def test_crossover_matches_naive_scan():
    for m, n, N in GRID[::9]:
        inp = CostModelInput(m, n, N)
        cheaper = [eval_fast_reduction_cost(inp, B) < eval_f5_reduction_cost(inp, B) for B in range(400)]
        last_bad = max((B for B, ok in enumerate(cheaper) if not ok), default=-1)
        assert fast_reduction_crossover(inp) == last_bad + 1
