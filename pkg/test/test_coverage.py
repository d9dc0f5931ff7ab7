"""
Test the exact coverage depth methods against each other, against the
closed forms and against known values.
"""
from coverdepth import *
from utility import example_c1, example_c2, random_codes
from fractions import Fraction
import numpy as np
import pytest


def suite():
    return [
        simplex(2, 3), simplex(3, 2), hamming(2, 3), hamming(3, 2), reed_muller_1(2, 3),
        reed_muller_1(3, 2), reed_solomon(5, 4, 2), example_c1(), example_c2(),
    ]


# ---------------------------
# standard tests for pytest
# ---------------------------

@pytest.fixture(params=range(9))
def code(request):
    return suite()[request.param]


def test_examples():
    """
    Check the two example codes, which share their weight enumerator
    but not their coverage depth.
    """
    C1, C2 = example_c1(), example_c2()
    assert expectation_exact(C1) == Fraction(1229, 210)
    assert expectation_exact(C2) == Fraction(2633, 462)
    assert weight_distribution(C1) == weight_distribution(C2)


def test_small_values():
    assert expectation_simplex(2, 2) == Fraction(5, 2)
    assert expectation_simplex(2, 3) == Fraction(47, 12)
    assert expectation_hamming(2, 2) == 1
    assert expectation_hamming(2, 3) == Fraction(347, 60)
    assert expectation_reed_muller(2, 2) == 3
    assert expectation_reed_muller(3, 2) == Fraction(5, 2)
    assert mds_lower_bound(3, 2) == Fraction(5, 2)
    assert all(mds_lower_bound(n, 1) == 1 for n in range(1, 10))
    assert mds_lower_bound(4, 4) == 4*harmonic(4)


def test_golay():
    """
    Check the closed forms for the ternary Golay codes against the
    census.
    """
    G, X = ternary_golay(), extended_ternary_golay()
    assert expectation_golay() == Fraction(21209, 2520)
    assert float(expectation_golay()) == pytest.approx(8.41627, abs=1e-5)
    assert float(expectation_golay(extended=True)) == pytest.approx(8.124242, abs=1e-6)
    assert expectation_exact(G) == expectation_golay()
    assert expectation_exact(X) == expectation_golay(extended=True)
    assert G.census.alpha(6) == 396


def test_golay_weight_six_words():
    """
    Check the weight-six counts which the Golay closed forms take from
    the enumerated codes.
    """
    X = extended_ternary_golay()
    W = weight_distribution(X)
    assert W[6] == 264
    assert X.census.alpha(6) == binomial(12, 6) - W[6]//2
    assert macwilliams_dual(weight_distribution(ternary_golay()), 3, 6)[6] == 132


def test_methods_agree(code):
    """
    Check that every exact method gives the same value.
    """
    value = expectation_exact(code)
    assert expectation_refined(code) == value
    assert expectation_via_dual(code) == value
    assert expectation_from_weights(code) == value
    assert expectation_exact(code.census) == value
    assert expectation_refined(code.census) == value


def test_chain_oracle(code):
    """
    Check the census-based value against the draw process solved
    directly.
    """
    assert expectation_chain_oracle(code) == expectation_exact(code)


def test_chain_oracle_guard():
    with pytest.raises(ValueError):
        expectation_chain_oracle(simplex(2, 3), max_states=2)


def test_weights_pipeline():
    """
    Check the weight distribution route on larger codes.
    """
    for C in [reed_solomon(7, 7, 3), ternary_golay(), extended_ternary_golay()]:
        assert expectation_from_weights(C) == expectation_exact(C)


def test_random_codes():
    """
    Check the exact methods on random codes.
    """
    for C in random_codes(25, seed=5):
        value = expectation_exact(C)
        assert expectation_via_dual(C) == value
        assert expectation_from_weights(C) == value
        assert value >= mds_lower_bound(C.n, C.k)


def test_information_sets_from_weights():
    """
    Check that the extension distributions determine the
    information-set counts.
    """
    for C in [ternary_golay(), example_c2(), hamming(3, 2)]:
        E = extended_enumerator(C)
        distributions = [extension_weight_distribution(E, C.q, m) for m in range(C.n + 1)]
        alpha = information_sets_from_weights(C.n, C.k, C.q, distributions)
        assert alpha == {r: C.census.alpha(r) for r in range(C.k, C.n + 1)}
    with pytest.raises(ValueError):
        information_sets_from_weights(3, 1, 2, distributions)


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_simplex_closed_form(q, k):
    assert expectation_simplex(q, k) == expectation_exact(simplex(q, k))


@pytest.mark.parametrize("q,r", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_hamming_closed_form(q, r):
    assert expectation_hamming(q, r) == expectation_exact(hamming(q, r))


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_reed_muller_closed_form(q, s):
    assert expectation_reed_muller(q, s) == expectation_exact(reed_muller_1(q, s))


@pytest.mark.parametrize("q,n,k", [(5, 5, 3), (7, 6, 2), (7, 7, 4), (8, 6, 3)])
def test_mds_bound_attained(q, n, k):
    """
    Check that Reed-Solomon codes attain the MDS bound.
    """
    assert expectation_exact(reed_solomon(q, n, k)) == mds_lower_bound(n, k)


def test_full_space():
    for n in range(1, 7):
        assert expectation_exact(full_space(2, n)) == n*harmonic(n)


def test_generator_invariance():
    """
    Check that the coverage depth only depends on the code and not on
    the generator or the column order.
    """
    rng = np.random.default_rng(6)
    for C in [example_c2(), simplex(3, 2), reed_solomon(5, 4, 2)]:
        value = expectation_exact(C)
        for _ in range(5):
            A = random_invertible_matrix(C.field, C.k, rng)
            permuted = C.generator.data[:, rng.permutation(C.n)]
            D = LinearCode(A @ MatrixGF(C.field, permuted))
            assert expectation_exact(D) == value


def test_errors():
    with pytest.raises(ValueError):
        mds_lower_bound(3, 0)
    with pytest.raises(ValueError):
        mds_lower_bound(3, 4)
    with pytest.raises(ValueError):
        expectation_simplex(2, 1)
    with pytest.raises(ValueError):
        expectation_hamming(3, 1)
    with pytest.raises(ValueError):
        expectation_reed_muller(2, 1)
    with pytest.raises(ValueError):
        expectation_from_weights(full_space(2, 3).dual)


def test_expectation_result():
    result = ExpectationResult('exact', Fraction(5, 2))
    assert result.is_exact and result.approx == 2.5
    assert result.to_json() == {
        'method': 'exact',
        'exact': {'num': '5', 'den': '2', 'approx': 2.5},
        'mc': None,
    }
    estimate = ExpectationResult('mc', mean=2.49, stderr=0.01, trials=100, seed=3)
    assert not estimate.is_exact
    assert estimate.to_json()['mc'] == {'mean': 2.49, 'stderr': 0.01, 'trials': 100, 'seed': 3}
    with pytest.raises(ValueError):
        ExpectationResult('mc')
    with pytest.raises(ValueError):
        ExpectationResult('exact', 1, mean=1.0)
