import math
from fractions import Fraction
from math import gcd as int_gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starwalk.partitions import Ordering, Partition
from starwalk.spectra import (
    IntPolynomial,
    X,
    _pseudo_rem,
    charpoly,
    compare_spectral_radii_exact,
    count_roots_in,
    eigenvalues,
    estrada_index,
    path_charpoly,
    poly_gcd,
    spectral_radius,
    starlike_charpoly_factored,
    sturm_chain,
)
from starwalk.trees import Graph, attach_two_paths, make_path, make_starlike
from starwalk.walks import closed_walk_counts

from oracles import charpoly_fraction_gauss, newton_power_sums, prufer_to_edges


# ---------------------------------------------------------------------------
# integer polynomial layer


def test_polynomial_normalization_and_degree():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([]).coeffs == (0,)
    assert IntPolynomial([0, 0]).coeffs == (0,)
    assert IntPolynomial([0]).degree == -1
    assert IntPolynomial([5]).degree == 0
    assert X.degree == 1


def test_polynomial_arithmetic_frozen():
    p = IntPolynomial([1, 1])  # 1 + x
    q = IntPolynomial([-1, 1])  # -1 + x
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - q).coeffs == (2,)
    assert (-p).coeffs == (-1, -1)
    assert (p**3).coeffs == (1, 3, 3, 1)
    assert (p**0).coeffs == (1,)
    assert (3 * p).coeffs == (3, 3)
    assert p.derivative().coeffs == (1,)
    assert IntPolynomial([0, 0, 4]).derivative().coeffs == (0, 8)
    assert IntPolynomial([6, -9, 3]).primitive().coeffs == (2, -3, 1)
    assert IntPolynomial([6, -9, 3]).content() == 3


def test_polynomial_evaluate_and_sign():
    p = IntPolynomial([-2, 0, 1])  # x^2 - 2
    assert p.evaluate(2) == 2
    assert p.evaluate(Fraction(3, 2)) == Fraction(1, 4)
    assert p.sign_at(Fraction(3, 2)) == 1
    assert p.sign_at(Fraction(7, 5)) == -1
    assert IntPolynomial([0, 1]).sign_at(Fraction(0)) == 0
    assert p.sign_at_pos_infinity() == 1
    assert p.sign_at_neg_infinity() == 1
    assert IntPolynomial([0, 1]).sign_at_neg_infinity() == -1


@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=8),
    st.fractions(min_value=-10, max_value=10),
)
@settings(max_examples=150, deadline=None)
def test_sign_at_agrees_with_fraction_evaluate(coeffs, x):
    p = IntPolynomial(coeffs)
    v = p.evaluate(Fraction(x))
    assert p.sign_at(Fraction(x)) == (v > 0) - (v < 0)


@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
)
@settings(max_examples=100, deadline=None)
def test_poly_gcd_divides_both(ca, cb):
    a, b = IntPolynomial(ca), IntPolynomial(cb)
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    assert g.leading > 0
    assert _pseudo_rem(a, g).is_zero()
    assert _pseudo_rem(b, g).is_zero()


# ---------------------------------------------------------------------------
# characteristic polynomials


def test_path_charpoly_frozen():
    assert path_charpoly(-1).coeffs == (0,)
    assert path_charpoly(0).coeffs == (1,)
    assert path_charpoly(1).coeffs == (0, 1)
    assert path_charpoly(2).coeffs == (-1, 0, 1)
    assert path_charpoly(3).coeffs == (0, -2, 0, 1)
    assert path_charpoly(4).coeffs == (1, 0, -3, 0, 1)


def test_path_charpoly_recurrence_and_value_at_two():
    for n in range(2, 40):
        pn = path_charpoly(n)
        assert pn == X * path_charpoly(n - 1) - path_charpoly(n - 2)
        assert pn.evaluate(2) == n + 1
        assert pn.evaluate(-2) == (-1) ** n * (n + 1)
        # bipartite symmetry: only every other coefficient is nonzero
        assert all(c == 0 for c in pn.coeffs[(n + 1) % 2 :: 2])


def test_path_polynomial_gcd_structure():
    # common roots of path polynomials follow the index gcd
    for m in range(0, 13):
        for n in range(0, 13):
            expected = path_charpoly(int_gcd(m + 1, n + 1) - 1)
            assert poly_gcd(path_charpoly(m), path_charpoly(n)) == expected


def test_charpoly_frozen():
    assert charpoly(make_path(4)).coeffs == (1, 0, -3, 0, 1)
    assert charpoly(make_starlike([1, 1, 1]).graph).coeffs == (0, 0, -3, 0, 1)
    assert charpoly(make_path(3)).coeffs == (0, -2, 0, 1)
    assert charpoly(Graph.from_edges(1, [])).coeffs == (0, 1)
    assert charpoly(Graph.from_edges(0, [])).coeffs == (1,)


def test_charpoly_paths_match_recurrence():
    for n in range(1, 30):
        assert charpoly(make_path(n)) == path_charpoly(n)


def test_charpoly_forest_is_component_product():
    two_paths = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    assert charpoly(two_paths) == path_charpoly(2) * path_charpoly(3)


def test_charpoly_rejects_cycles():
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(ValueError):
        charpoly(c4)


def test_charpoly_matches_gauss_oracle():
    samples = [
        make_starlike([2, 3, 4]).graph,
        make_starlike([1, 1, 1, 1, 1]).graph,
        Graph.from_edges(8, prufer_to_edges((0, 0, 3, 3, 5, 1))),
        Graph.from_edges(9, prufer_to_edges((4, 4, 2, 7, 1, 1, 0))),
        attach_two_paths(make_path(2), 0, 2, 2),
    ]
    for g in samples:
        assert list(charpoly(g).coeffs) == charpoly_fraction_gauss(list(g.adj))


def test_charpoly_newton_consistency_with_walk_counts():
    g = make_starlike([2, 3, 4]).graph
    moments = closed_walk_counts(g, 25).values
    assert newton_power_sums(list(charpoly(g).coeffs), 25) == list(moments)


def test_starlike_factored_identity_small_grid():
    for c in range(1, 5):
        for d in range(1, 5):
            for q in range(2, 5):
                pd, exponent, core = starlike_charpoly_factored(c, d, q)
                assert pd == path_charpoly(d)
                assert exponent == q - 1
                direct = charpoly(make_starlike([c] + [d] * q).graph)
                assert pd**exponent * core == direct


def test_starlike_factored_validation():
    with pytest.raises(ValueError):
        starlike_charpoly_factored(2, 3, 1)
    with pytest.raises(ValueError):
        starlike_charpoly_factored(0, 3, 2)


# ---------------------------------------------------------------------------
# Sturm machinery


def test_sturm_root_counts_on_paths():
    p6 = path_charpoly(6)
    chain = sturm_chain(p6)
    assert count_roots_in(chain, Fraction(-2), Fraction(2)) == 6
    assert count_roots_in(chain, Fraction(0), Fraction(2)) == 3
    # top root 2cos(pi/7) = 1.8019 sits alone above 9/5
    assert count_roots_in(chain, Fraction(9, 5), Fraction(2)) == 1


def test_sturm_counts_distinct_roots_with_multiplicity():
    doubled = path_charpoly(3) * path_charpoly(3)  # squared roots
    chain = sturm_chain(doubled)
    assert count_roots_in(chain, Fraction(-2), Fraction(2)) == 3


def test_sturm_rejects_root_endpoint():
    p5 = path_charpoly(5)  # has 1 among its roots
    assert p5.evaluate(1) == 0
    with pytest.raises(ValueError):
        count_roots_in(sturm_chain(p5), Fraction(1), Fraction(2))


# ---------------------------------------------------------------------------
# spectral radius, exact


def test_spectral_radius_exactly_two_families():
    for branches in ([2, 2, 2], [1, 3, 3], [1, 2, 5], [1, 1, 1, 1]):
        g = make_starlike(branches).graph
        assert spectral_radius(g) == 2.0


def test_spectral_radius_closed_forms():
    assert spectral_radius(make_path(2), 1e-12) == pytest.approx(1.0, abs=1e-11)
    golden = (1 + math.sqrt(5)) / 2
    assert spectral_radius(make_path(4), 1e-12) == pytest.approx(golden, abs=1e-11)
    star = make_starlike([1, 1, 1]).graph
    assert spectral_radius(star, 1e-12) == pytest.approx(math.sqrt(3), abs=1e-11)


def test_spectral_radius_matches_float_solver():
    double_broom = attach_two_paths(attach_two_paths(make_path(2), 0, 2, 2), 1, 3, 1)
    samples = [
        make_path(7),
        make_starlike([1, 2, 3]).graph,
        make_starlike([1, 1, 4]).graph,
        make_starlike([2, 3, 4]).graph,
        make_starlike([1, 1, 2, 3]).graph,
        double_broom,
        Graph.from_edges(9, prufer_to_edges((4, 4, 2, 7, 1, 1, 0))),
    ]
    for g in samples:
        top = max(eigenvalues(g).eigenvalues)
        assert spectral_radius(g, 1e-11) == pytest.approx(top, abs=1e-9)


def test_spectral_radius_large_starlike():
    g = make_starlike([90, 90, 90]).graph
    assert spectral_radius(g, 1e-10) == pytest.approx(2.12132034355964, abs=1e-10)


def test_spectral_radius_validation():
    with pytest.raises(ValueError):
        spectral_radius(Graph.from_edges(1, []))
    with pytest.raises(ValueError):
        spectral_radius(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        spectral_radius(make_path(3), 0.0)


def test_compare_spectral_radii_frozen():
    cmp = compare_spectral_radii_exact
    # both radii below 2, decided by Sturm counts
    assert cmp(Partition([1, 1, 4]), Partition([1, 2, 3])) is Ordering.LESS
    assert cmp(Partition([1, 1, 1]), Partition([1, 1, 2])) is Ordering.LESS
    assert cmp(Partition([1, 2, 3]), Partition([1, 1, 4])) is Ordering.GREATER
    # radius exactly 2 on both sides
    assert cmp(Partition([2, 2, 2]), Partition([1, 2, 5])) is Ordering.EQUAL
    assert cmp(Partition([1, 3, 3]), Partition([1, 1, 1, 1])) is Ordering.EQUAL
    # across the three classes
    assert cmp(Partition([1, 2, 3]), Partition([2, 2, 2])) is Ordering.LESS
    assert cmp(Partition([2, 2, 2]), Partition([1, 2, 4])) is Ordering.GREATER
    assert cmp(Partition([2, 2, 2]), Partition([2, 2, 3])) is Ordering.LESS
    # above 2 on both sides, plain rational bisection
    assert cmp(Partition([1, 1, 2, 2]), Partition([2, 2, 4])) is Ordering.GREATER
    assert cmp(Partition([2, 2, 4]), Partition([3, 3, 3])) is Ordering.LESS
    assert cmp(Partition([2, 3, 4]), Partition([3, 3, 3])) is Ordering.LESS
    assert cmp(Partition([5, 5, 5]), Partition([5, 5, 5])) is Ordering.EQUAL


def test_compare_agrees_with_floats_when_separated():
    pairs = [
        ([1, 1, 6], [1, 2, 5]),
        ([2, 2, 2, 2], [1, 2, 2, 3]),
        ([3, 4, 5], [2, 4, 6]),
        ([1, 1, 1, 9], [3, 3, 3, 3]),
        ([2, 2, 8], [4, 4, 4]),
        ([1, 5, 6], [4, 4, 4]),
        ([7], [3, 4]),
        ([1, 7], [2, 6]),
    ]
    for pa, pb in pairs:
        a, b = Partition(pa), Partition(pb)
        fa = max(eigenvalues(make_starlike(a).graph).eigenvalues)
        fb = max(eigenvalues(make_starlike(b).graph).eigenvalues)
        if abs(fa - fb) <= 1e-8:
            continue
        expected = Ordering.LESS if fa < fb else Ordering.GREATER
        assert compare_spectral_radii_exact(a, b) is expected


# ---------------------------------------------------------------------------
# float reporting layer


def test_eigenvalues_basic_properties():
    g = make_starlike([2, 3, 4]).graph
    spec = eigenvalues(g)
    assert len(spec.eigenvalues) == g.n
    assert spec.eigenvalues == tuple(sorted(spec.eigenvalues, reverse=True))
    assert sum(spec.eigenvalues) == pytest.approx(0.0, abs=1e-9)
    assert sum(v * v for v in spec.eigenvalues) == pytest.approx(
        2 * g.edge_count, abs=1e-8
    )
    assert eigenvalues(Graph.from_edges(0, [])).eigenvalues == ()
    with pytest.raises(ValueError):
        eigenvalues(g, 1e-15)


@given(st.integers(3, 10), st.data())
@settings(max_examples=30, deadline=None)
def test_eigenvalue_powers_match_walk_counts(n, data):
    seq = tuple(data.draw(st.integers(0, n - 1)) for _ in range(n - 2))
    g = Graph.from_edges(n, prufer_to_edges(seq))
    spec = eigenvalues(g).eigenvalues
    moments = closed_walk_counts(g, 14).values
    for k in range(15):
        float_sum = sum(v**k for v in spec)
        assert abs(float_sum - moments[k]) <= 1e-6 * max(moments[k], 1)


def test_eigenvalue_powers_match_walk_counts_larger():
    for g in (make_starlike([3, 5, 7, 9]).graph, make_path(30)):
        spec = eigenvalues(g).eigenvalues
        moments = closed_walk_counts(g, 20).values
        for k in range(21):
            assert abs(sum(v**k for v in spec) - moments[k]) <= 1e-6 * max(
                moments[k], 1
            )


def test_estrada_index_frozen():
    assert estrada_index(make_path(2)) == pytest.approx(math.e + 1 / math.e, abs=1e-9)
    star = make_starlike([1, 1, 1]).graph
    expected = 2 + 2 * math.cosh(math.sqrt(3))
    assert estrada_index(star) == pytest.approx(expected, abs=1e-9)


def test_estrada_index_dominated_by_top_eigenvalue():
    g = make_starlike([4, 5, 6]).graph
    ee = estrada_index(g)
    lam = spectral_radius(g)
    assert math.exp(lam) < ee < g.n * math.exp(lam)
