"""
Test weight distributions, the MacWilliams transform and the extended
weight enumerator.
"""
from coverdepth import *
from utility import example_c1, random_codes
import pytest


# ---------------------------
# standard tests for pytest
# ---------------------------

@pytest.fixture(params=[0, 1, 2, 3])
def m(request):
    return request.param


@pytest.fixture(params=range(10))
def binary_code(request):
    codes = random_codes(10, seed=11, fields=(2,), max_length=8, max_dimension=3)
    return codes[request.param]


def test_weight_distributions():
    assert weight_distribution(simplex(2, 3)).counts == (1, 0, 0, 0, 7, 0, 0, 0)
    assert weight_distribution(hamming(2, 3)).counts == (1, 0, 0, 7, 7, 0, 0, 1)
    assert weight_distribution(example_c1()).counts == (1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1)
    W = weight_distribution(reed_solomon(5, 4, 2))
    assert W.counts == (1, 0, 0, 16, 8)
    assert W.total == 25 and W.minimum_distance() == 3
    assert W.to_json() == {'n': 4, 'counts': ['1', '0', '0', '16', '8']}
    with pytest.raises(ValueError):
        WeightDistribution(3, (1, 2))


def test_macwilliams():
    """
    Check the MacWilliams transform against directly enumerated duals.
    """
    for C in [simplex(2, 3), hamming(3, 2), reed_muller_1(2, 4), example_c1()]:
        W = weight_distribution(C)
        assert macwilliams_dual(W, C.q, C.k) == weight_distribution(C.dual)


def test_macwilliams_random():
    for C in random_codes(10, seed=3):
        W = weight_distribution(C)
        assert macwilliams_dual(W, C.q, C.k) == weight_distribution(C.dual)


def test_macwilliams_golay():
    """
    Check the dual of the ternary Golay code and the self-duality of
    the extended one.
    """
    W = WeightDistribution(11, GOLAY_WEIGHTS)
    assert macwilliams_dual(W, 3, 6).counts == (1, 0, 0, 0, 0, 0, 132, 0, 0, 110, 0, 0)
    X = WeightDistribution(12, EXTENDED_GOLAY_WEIGHTS)
    assert macwilliams_dual(X, 3, 6) == X


def test_macwilliams_errors():
    with pytest.raises(ValueError):
        macwilliams_dual(WeightDistribution(3, (1, 3, 0, 0)), 2, 3)
    with pytest.raises(ValueError):
        macwilliams_dual(WeightDistribution(3, (1, 3, 0, 0)), 2, 2)


def test_extended_enumerator_ends():
    """
    Check the polynomials for the empty and the full coordinate set.
    """
    for C in [simplex(2, 3), hamming(3, 2), example_c1()]:
        E = extended_enumerator(C)
        assert E.b_polys[0] == tuple([-1] + [0]*(C.k - 1) + [1])
        assert E.b_polys[C.n] == (0,)*(C.k + 1)
        assert extended_enumerator(C.census) == E


def test_extended_enumerator_vanishes():
    with pytest.raises(ValueError):
        ExtendedEnumerator(1, 1, [(0, 1), (0, 0)])


def test_extension_small(m):
    """
    Check that the extended enumerator gives the zero code for
    ``m = 0`` and the code itself for ``m = 1``.
    """
    for C in [simplex(3, 2), hamming(2, 3), reed_solomon(5, 4, 2)]:
        E = extended_enumerator(C)
        W = extension_weight_distribution(E, C.q, m)
        assert W.total == C.q**(m*C.k)
        if m == 0:
            assert W.counts == (1,) + (0,)*C.n
        elif m == 1:
            assert W == weight_distribution(C)


def test_direct_extension():
    """
    Check the extension distributions against extension codes built
    explicitly over GF(4) and GF(9).
    """
    codes = random_codes(10, seed=4, max_length=8)
    codes.append(reed_muller_1(2, 3))
    for C in codes:
        E = extended_enumerator(C)
        for m in (2, 3) if C.q == 2 else (2,):
            if C.q**(m*C.k) > 2**16:
                continue
            X = direct_extension_code(C, m)
            assert X.q == C.q**m and X.n == C.n and X.k == C.k
            assert weight_distribution(X) == extension_weight_distribution(E, C.q, m)


def test_direct_extension_binary(binary_code):
    """
    Check the extended enumerator at U = 4 against the weight
    distribution of the extension code built over GF(4).
    """
    C = binary_code
    assert C.q == 2 and C.n <= 8 and 2 <= C.k <= 3
    X = direct_extension_code(C, 2)
    assert X.q == 4 and X.n == C.n and X.k == C.k
    assert weight_distribution(X) == extension_weight_distribution(extended_enumerator(C), 2, 2)


def test_direct_extension_errors():
    with pytest.raises(ValueError):
        direct_extension_code(simplex(2, 3), 0)
    with pytest.raises(NotImplementedError):
        direct_extension_code(simplex(4, 2), 2)
    with pytest.raises(ValueError):
        direct_extension_code(ternary_golay(), 5)


@pytest.mark.parametrize("q,s", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_reed_muller_enumerator(q, s):
    """
    Check the closed-form extended enumerator of first-order
    Reed-Muller codes against the census.
    """
    assert reed_muller_extended_enumerator(q, s) == extended_enumerator(reed_muller_1(q, s))


def test_reed_muller_extension():
    C = reed_muller_1(2, 3)
    assert reed_muller_extension_distribution(2, 3, 1) == weight_distribution(C)
    X = direct_extension_code(C, 2)
    assert reed_muller_extension_distribution(2, 3, 2) == weight_distribution(X)


def test_double_count(m):
    """
    Check that subsets and matrices over the code are counted
    consistently.
    """
    for C in [simplex(2, 3), hamming(3, 2), example_c1(), ternary_golay()]:
        assert verify_double_count(C, m)
