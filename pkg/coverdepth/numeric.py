"""
Exact integer and rational arithmetic: harmonic numbers, binomial and
Gaussian binomial coefficients, and the q-binomial inversion transforms.

Every expectation in coverdepth is a :class:`fractions.Fraction`. Floating
point only appears when results are rendered for display.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, prod


__all__ = ['ExactRational', 'harmonic', 'binomial', 'q_binomial', 'gamma_coeff',
           'verify_qjr_identity', 'forward_lower_q', 'invert_lower_q', 'forward_upper_q',
           'invert_upper_q', 'rational_to_json', 'rational_from_json']


ExactRational = Fraction


@lru_cache(maxsize=None)
def harmonic(m):
    r"""
    The ``m``-th harmonic number :math:`H_m = \sum_{i=1}^m 1/i`,
    with :math:`H_0 = 0`.
    """
    if m < 0:
        raise ValueError(f"Harmonic number index must be non-negative, not {m}")
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


def binomial(n, k):
    """
    Binomial coefficient, zero outside ``0 <= k <= n``.
    """
    if n < 0:
        raise ValueError(f"Binomial coefficient needs n >= 0, not {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def q_binomial(m, i, q):
    r"""
    Gaussian binomial coefficient :math:`\binom{m}{i}_q`, the
    number of ``i``-dimensional subspaces of :math:`\mathbb F_q^m`.

    Evaluated as the product
    :math:`\prod_{t=0}^{i-1} \frac{q^{m-t} - 1}{q^{t+1} - 1}`, taken over
    the shorter of ``i`` and ``m - i`` and divided exactly at the end.
    """
    if m < 0:
        raise ValueError(f"Gaussian binomial needs m >= 0, not {m}")
    if q < 2:
        raise ValueError(f"Gaussian binomial needs q >= 2, not {q}")
    if i < 0 or i > m:
        return 0
    i = min(i, m - i)
    numerator = prod(q**(m - t) - 1 for t in range(i))
    denominator = prod(q**(t + 1) - 1 for t in range(i))
    return numerator//denominator


def _general_linear_order(j, q):
    r"""
    :math:`\prod_{\nu=0}^{j-1} (q^j - q^\nu)`, the number of
    invertible ``j`` by ``j`` matrices over :math:`\mathbb F_q`.
    """
    return prod(q**j - q**nu for nu in range(j))


@lru_cache(maxsize=None)
def gamma_coeff(q, m, n):
    r"""
    The coefficient

    .. math::
        \gamma(q,m,n) = \sum_{j=m}^n \frac{q^{\binom{j}{2} + \binom{j-m}{2}}}
        {\prod_{\nu=0}^{j-1} (q^j - q^\nu)} \binom{j}{m}_q

    which weights the extension-code weight distributions in the
    expression of the coverage depth.

    :arg q: field order
    :arg m: extension degree, ``0 <= m <= n``
    :arg n: code length
    """
    if not 0 <= m <= n:
        raise ValueError(f"gamma coefficient needs 0 <= m <= n, got m={m}, n={n}")
    total = Fraction(0)
    for j in range(m, n + 1):
        numerator = q**(comb(j, 2) + comb(j - m, 2))*q_binomial(j, m, q)
        total += Fraction(numerator, _general_linear_order(j, q))
    return total


def verify_qjr_identity(j, r, q):
    r"""
    Check the identity counting ``j`` by ``r`` matrices over
    :math:`\mathbb F_q` by their rank,

    .. math::
        q^{jr} = \sum_{i=0}^r \binom{j}{i}_q \binom{r}{i}_q \prod_{s=0}^{i-1}(q^i - q^s).
    """
    rhs = sum(
        q_binomial(j, i, q)*q_binomial(r, i, q)*_general_linear_order(i, q)
        for i in range(r + 1)
    )
    return q**(j*r) == rhs


def _sign(e):
    return -1 if e % 2 else 1


def forward_lower_q(x, q):
    r"""
    Lower q-binomial transform
    :math:`y_m = \sum_{i=0}^m \binom{m}{i}_q x_i`.
    """
    x = tuple(int(xi) for xi in x)
    return tuple(sum(q_binomial(m, i, q)*x[i] for i in range(m + 1)) for m in range(len(x)))


def invert_lower_q(y, q):
    r"""
    Invert :func:`forward_lower_q`:

    .. math::
        x_i = \sum_{m=0}^i (-1)^{i-m} q^{\binom{i-m}{2}} \binom{i}{m}_q y_m.

    :arg y: sequence of integers, indexed from zero
    :arg q: integer at least two
    """
    if q < 2:
        raise ValueError(f"Inversion needs q >= 2, not {q}")
    y = tuple(int(ym) for ym in y)
    if len(y) == 0:
        raise ValueError("Cannot invert an empty sequence")
    return tuple(
        sum(_sign(i - m)*q**comb(i - m, 2)*q_binomial(i, m, q)*y[m] for m in range(i + 1))
        for i in range(len(y))
    )


def forward_upper_q(x, q):
    r"""
    Upper q-binomial transform
    :math:`y_i = \sum_{j=i}^n \binom{j}{i}_q x_j`.
    """
    x = tuple(int(xj) for xj in x)
    n = len(x) - 1
    return tuple(sum(q_binomial(j, i, q)*x[j] for j in range(i, n + 1)) for i in range(n + 1))


def invert_upper_q(y, q):
    r"""
    Invert :func:`forward_upper_q`:

    .. math::
        x_j = \sum_{i=j}^n (-1)^{i-j} q^{\binom{i-j}{2}} \binom{i}{j}_q y_i.

    :arg y: sequence of integers ``y_0, ..., y_n``
    :arg q: integer at least two
    """
    if q < 2:
        raise ValueError(f"Inversion needs q >= 2, not {q}")
    y = tuple(int(yi) for yi in y)
    if len(y) == 0:
        raise ValueError("Cannot invert an empty sequence")
    n = len(y) - 1
    return tuple(
        sum(_sign(i - j)*q**comb(i - j, 2)*q_binomial(i, j, q)*y[i] for i in range(j, n + 1))
        for j in range(n + 1)
    )


def rational_to_json(value, digits=12):
    """
    JSON form of an exact rational: numerator and denominator as
    decimal strings, plus a float approximation rounded to ``digits``
    significant digits.
    """
    value = Fraction(value)
    return {
        'num': str(value.numerator),
        'den': str(value.denominator),
        'approx': float(f"{float(value):.{digits}g}"),
    }


def rational_from_json(data):
    return Fraction(int(data['num']), int(data['den']))
