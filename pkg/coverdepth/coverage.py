"""
Exact routes to the coverage depth :math:`\\mathbb E[\\mathcal C]`: the
expected number of uniform draws, with replacement, from the columns of a
generator matrix until the drawn columns span :math:`\\mathbb F_q^k`.

Every function returns a :class:`fractions.Fraction`. The census-based
methods share the :class:`SupportCensus` cached on the code, the closed
forms depend only on the code parameters, and the chain oracle solves the
draw process directly over the lattice of column spans.
"""
from .census import SupportCensus
from .enumeration import (extended_enumerator, extension_weight_distribution, macwilliams_dual,
                          weight_distribution)
from .golay import extended_ternary_golay, ternary_golay
from .linalg import SpanState
from .log import debug
from .numeric import binomial, gamma_coeff, harmonic, q_binomial, rational_to_json
from .utility import MAX_CHAIN_STATES
from fractions import Fraction
from math import factorial, prod


__all__ = ['ExpectationResult', 'mds_lower_bound', 'expectation_exact', 'expectation_refined',
           'expectation_via_dual', 'expectation_simplex', 'expectation_hamming',
           'expectation_golay', 'expectation_from_weights', 'expectation_reed_muller',
           'expectation_chain_oracle', 'information_sets_from_weights', 'EXACT_METHODS']


EXACT_METHODS = ('exact', 'refined', 'dual', 'weights', 'closed-form', 'chain')


class ExpectationResult(object):
    """
    Outcome of one expectation method: either an exact rational value
    or a Monte Carlo estimate with its standard error, never both.
    """
    def __init__(self, method, value=None, **kwargs):
        """
        :arg method: tag naming the method
        :kwarg value: exact :class:`Fraction`, for exact methods
        :kwarg mean: sample mean, for Monte Carlo
        :kwarg stderr: standard error of the sample mean
        :kwarg trials: number of trials
        :kwarg seed: simulation seed
        """
        self.method = method
        self.value = None if value is None else Fraction(value)
        self.mean = kwargs.get('mean')
        self.stderr = kwargs.get('stderr')
        self.trials = kwargs.get('trials')
        self.seed = kwargs.get('seed')
        if self.value is not None and self.mean is not None:
            raise ValueError("An expectation result is either exact or a Monte Carlo estimate")
        if self.value is None and self.mean is None:
            raise ValueError(f"Result of method '{method}' carries no value")

    def __repr__(self):
        if self.is_exact:
            return f"ExpectationResult({self.method}, {self.value})"
        return f"ExpectationResult({self.method}, {self.mean} +/- {self.stderr})"

    @property
    def is_exact(self):
        return self.value is not None

    @property
    def approx(self):
        return float(self.value) if self.is_exact else self.mean

    def to_json(self):
        mc = None
        if not self.is_exact:
            mc = {
                'mean': float(f"{self.mean:.12g}"),
                'stderr': float(f"{self.stderr:.12g}"),
                'trials': self.trials,
                'seed': self.seed,
            }
        return {
            'method': self.method,
            'exact': rational_to_json(self.value) if self.is_exact else None,
            'mc': mc,
        }


def mds_lower_bound(n, k):
    """
    :math:`n(H_n - H_{n-k})`, the least coverage depth of any
    ``k``-dimensional code of length ``n``, attained exactly by MDS codes.
    """
    if not 1 <= k <= n:
        raise ValueError(f"MDS bound needs 1 <= k <= n, got k={k}, n={n}")
    return n*(harmonic(n) - harmonic(n - k))


def _census(C):
    return C if isinstance(C, SupportCensus) else C.census


def expectation_exact(C):
    """
    Coverage depth from the information-set counts,

    .. math::
        \\mathbb E[\\mathcal C] = nH_n - \\sum_{s=k}^{n-1} \\frac{\\alpha(\\mathcal C, s)}{\\binom{n-1}{s}}.

    :arg C: a :class:`LinearCode` or its :class:`SupportCensus`
    """
    census = _census(C)
    n, k = census.n, census.k
    correction = sum(
        (Fraction(census.alpha(s), binomial(n - 1, s)) for s in range(k, n)),
        Fraction(0),
    )
    return n*harmonic(n) - correction


def expectation_refined(C):
    """
    As :func:`expectation_exact`, but starting from
    :math:`n(H_n - H_{d-1})` so that only sizes up to ``n - d``
    contribute to the correction.
    """
    census = _census(C)
    n, k = census.n, census.k
    d = census.minimum_distance()
    correction = sum(
        (Fraction(census.alpha(s), binomial(n - 1, s)) for s in range(k, n - d + 1)),
        Fraction(0),
    )
    return n*(harmonic(n) - harmonic(d - 1)) - correction


def expectation_via_dual(C):
    """
    Coverage depth of ``C`` from the census of its dual alone, through
    :math:`\\alpha(\\mathcal C, s) = \\beta_{s-k}(\\mathcal C^\\perp, n-s)`.

    :arg C: a :class:`LinearCode`
    """
    D = C.dual.census
    n, k = C.n, C.k
    correction = sum(
        (Fraction(D.beta(s - k, n - s), binomial(n - 1, s)) for s in range(k, n)),
        Fraction(0),
    )
    return n*harmonic(n) - correction


def expectation_simplex(q, k):
    """
    Closed form for the ``q``-ary simplex code of dimension ``k``:
    :math:`k + \\sum_{i=1}^k \\frac{q^{i-1} - 1}{q^k - q^{i-1}}`.
    """
    if k < 2:
        raise ValueError(f"Simplex codes need k >= 2, not {k}")
    return k + sum((Fraction(q**(i - 1) - 1, q**k - q**(i - 1)) for i in range(1, k + 1)), Fraction(0))


def expectation_hamming(q, r):
    """
    Closed form for the ``q``-ary Hamming code of redundancy ``r``.
    """
    if r < 2:
        raise ValueError(f"Hamming codes need r >= 2, not {r}")
    n = (q**r - 1)//(q - 1)
    correction = Fraction(0)
    for ell in range(1, r + 1):
        count = Fraction(prod(q**r - q**i for i in range(ell)), (q - 1)**ell*factorial(ell))
        correction += count/binomial(n - 1, n - ell)
    return n*harmonic(n) - correction


def expectation_golay(extended=False):
    """
    Closed form for the ternary Golay code, or its extension, in terms
    of the number of weight-six words of the dual (respectively of the
    extended code itself):

    .. math::
        n(H_n - H_{d-1}) - \\frac{\\binom{n}{k} - W_6/2}{\\binom{n-1}{k}}.

    :math:`W_6` is counted by enumerating the codewords.
    """
    k = 6
    if extended:
        n, d = 12, 6
        W_6 = weight_distribution(extended_ternary_golay())[6]
    else:
        n, d = 11, 5
        W_6 = macwilliams_dual(weight_distribution(ternary_golay()), 3, k)[6]
    alpha_k = binomial(n, k) - Fraction(W_6, 2)
    return n*(harmonic(n) - harmonic(d - 1)) - alpha_k/binomial(n - 1, k)


def information_sets_from_weights(n, k, q, distributions):
    """
    Recover the information-set counts from the weight distributions of
    all extension codes,

    .. math::
        \\alpha(\\mathcal C, r) = \\sum_{\\ell=0}^{n-r} \\binom{n-\\ell}{r}
        \\sum_{m=0}^n (-1)^m W_\\ell(\\mathcal C \\otimes \\mathbb F_{q^m}) \\gamma(q,m,n).

    :arg n: code length
    :arg k: code dimension
    :arg q: field order
    :arg distributions: weight distributions for ``m = 0, ..., n``
    :return: dict mapping each size ``r`` in ``k..n`` to its integer count
    """
    if len(distributions) != n + 1:
        raise ValueError(f"Need extension distributions for m = 0..{n}, got {len(distributions)}")
    gamma = [gamma_coeff(q, m, n) for m in range(n + 1)]
    signed = [
        sum(((-1)**m*W[ell]*gamma[m] for m, W in enumerate(distributions)), Fraction(0))
        for ell in range(n + 1)
    ]
    alpha = {}
    for r in range(k, n + 1):
        value = sum((binomial(n - ell, r)*signed[ell] for ell in range(n - r + 1)), Fraction(0))
        if value.denominator != 1:
            raise RuntimeError(f"Information-set count for size {r} is not an integer: {value}")
        alpha[r] = value.numerator
    return alpha


def expectation_from_weights(C):
    """
    Coverage depth from the weight distributions of the extension codes
    :math:`\\mathcal C \\otimes \\mathbb F_{q^m}`, ``m = 0, ..., n``, read off
    the extended weight enumerator.

    :arg C: a :class:`LinearCode` or its :class:`SupportCensus`
    """
    census = _census(C)
    n, k, q = census.n, census.k, census.q
    E = extended_enumerator(census)
    distributions = [extension_weight_distribution(E, q, m) for m in range(n + 1)]
    d = distributions[1].minimum_distance()
    if d is None:
        raise ValueError("The zero code has no coverage depth")
    alpha = information_sets_from_weights(n, k, q, distributions)
    debug(f"expectation_from_weights: information sets {alpha}")
    correction = sum(
        (Fraction(alpha[r], binomial(n - 1, r)) for r in range(k, n - d + 1)),
        Fraction(0),
    )
    return n*(harmonic(n) - harmonic(d - 1)) - correction


def _largest_t(q, s, r):
    """
    Largest ``t <= s - 1`` with :math:`q^{s-1-t} \\geq r`, or ``-1``.
    """
    t = -1
    while t + 1 <= s - 1 and q**(s - 2 - t) >= r:
        t += 1
    return t


def expectation_reed_muller(q, s):
    """
    Closed form for the first-order ``q``-ary Reed-Muller code of
    dimension ``s``, of length :math:`n = q^{s-1}` and minimum distance
    :math:`d = (q-1)q^{s-2}`.
    """
    if s < 2:
        raise ValueError(f"Reed-Muller codes need s >= 2, not {s}")
    n = q**(s - 1)
    d = (q - 1)*q**(s - 2)
    gamma = [gamma_coeff(q, i, n) for i in range(n + 1)]
    correction = Fraction(0)
    for r in range(s, q**(s - 2) + 1):
        inner = Fraction(0)
        for t in range(_largest_t(q, s, r) + 1):
            scale = q**t*q_binomial(s - 1, t, q)
            signed = sum(
                ((-1)**i*prod(q**i - q**j for j in range(t))*gamma[i] for i in range(n + 1)),
                Fraction(0),
            )
            inner += binomial(q**(s - 1 - t), r)*scale*signed
        correction += inner/binomial(n - 1, r)
    return n*(harmonic(n) - harmonic(d - 1)) - correction


def expectation_chain_oracle(C, **kwargs):
    """
    Coverage depth by solving the draw process as an absorbing Markov
    chain on the subspaces spanned by drawn columns. From a span ``V``
    containing ``c`` of the ``n`` columns,

    .. math::
        \\mathbb E[V] = \\frac{n + \\sum_{g_j \\notin V} \\mathbb E[V + g_j]}{n - c},

    with :math:`\\mathbb E[\\mathbb F_q^k] = 0`.

    :arg C: a :class:`LinearCode`
    :kwarg max_states: guard on the number of distinct spans
    """
    max_states = kwargs.get('max_states', MAX_CHAIN_STATES)
    n, k = C.n, C.k
    columns = [tuple(column) for column in C.generator.columns()]
    memo = {}

    def expected(state):
        if state.is_full:
            return Fraction(0)
        key = state.key()
        if key in memo:
            return memo[key]
        if len(memo) >= max_states:
            raise ValueError(f"Chain oracle exceeds the state guard {max_states}; use a"
                             + " census-based method")
        inside = 0
        total = Fraction(n)
        children = {}
        for column in columns:
            if column in state:
                inside += 1
                continue
            child = state.copy()
            child.insert(column)
            child_key = child.key()
            if child_key not in children:
                children[child_key] = [child, 0]
            children[child_key][1] += 1
        for child, multiplicity in children.values():
            total += multiplicity*expected(child)
        value = total/(n - inside)
        memo[key] = value
        return value

    value = expected(SpanState(C.field, k))
    debug(f"expectation_chain_oracle: {C.name} solved over {len(memo)} spans")
    return value
