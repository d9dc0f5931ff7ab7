"""
Weight distributions, the MacWilliams transform, the extended weight
enumerator and the weight distributions of extension codes.

The extended weight enumerator

.. math::
    W_{\\mathcal C}(X, Y, U) = X^n + \\sum_{t=0}^n B_t(U) (X - Y)^t Y^{n-t},
    \\qquad B_t(U) = \\sum_{|J| = t} \\left(U^{\\dim \\mathcal C(J^c)} - 1\\right),

is read straight off the :class:`SupportCensus`. Evaluated at
:math:`U = q^m` it gives the weight enumerator of the extension code
:math:`\\mathcal C \\otimes \\mathbb F_{q^m}`.

Polynomials in ``U`` are tuples of Python integers in ascending order.
"""
from .census import SupportCensus
from .codes import LinearCode
from .gf import embed, make_field
from .linalg import MatrixGF
from .log import debug
from .numeric import binomial, q_binomial
from .utility import MAX_CODEWORDS
from math import comb
import numpy as np


__all__ = ['WeightDistribution', 'ExtendedEnumerator', 'weight_distribution', 'macwilliams_dual',
           'extended_enumerator', 'extension_weight_distribution', 'direct_extension_code',
           'enumerator_from_distributions', 'reed_muller_extended_enumerator',
           'reed_muller_extension_distribution', 'verify_double_count']


class WeightDistribution(object):
    """
    The counts :math:`W_0, \\dots, W_n` of codewords of each
    Hamming weight.
    """
    def __init__(self, n, counts):
        counts = tuple(int(c) for c in counts)
        if len(counts) != n + 1:
            raise ValueError(f"A length {n} weight distribution needs {n + 1} counts,"
                             + f" got {len(counts)}")
        self.n = n
        self.counts = counts

    def __repr__(self):
        return f"WeightDistribution({list(self.counts)})"

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    @property
    def total(self):
        return sum(self.counts)

    def minimum_distance(self):
        return next((i for i, c in enumerate(self.counts) if i > 0 and c > 0), None)

    def to_json(self):
        return {'n': self.n, 'counts': [str(c) for c in self.counts]}


class ExtendedEnumerator(object):
    """
    The polynomials :math:`B_0(U), \\dots, B_n(U)` of the extended
    weight enumerator of an ``[n, k]`` code.
    """
    def __init__(self, n, k, b_polys):
        self.n = n
        self.k = k
        self.b_polys = tuple(_trim(poly, k + 1) for poly in b_polys)
        if len(self.b_polys) != n + 1:
            raise ValueError(f"Expected {n + 1} polynomials, got {len(self.b_polys)}")
        for t, poly in enumerate(self.b_polys):
            if _evaluate(poly, 1) != 0:
                raise ValueError(f"B_{t}(U) does not vanish at U = 1")

    def __repr__(self):
        return f"ExtendedEnumerator(n={self.n}, k={self.k})"

    def __eq__(self, other):
        if not isinstance(other, ExtendedEnumerator):
            return NotImplemented
        return (self.n, self.k, self.b_polys) == (other.n, other.k, other.b_polys)

    def evaluate(self, t, U):
        """
        Evaluate :math:`B_t(U)`.
        """
        return _evaluate(self.b_polys[t], U)

    def to_json(self):
        return {'b': [[str(c) for c in poly] for poly in self.b_polys]}


def _trim(poly, length):
    poly = [int(c) for c in poly]
    while len(poly) > length and poly[-1] == 0:
        poly.pop()
    if len(poly) > length:
        raise ValueError(f"Polynomial {poly} has degree above {length - 1}")
    return tuple(poly + [0]*(length - len(poly)))


def _evaluate(poly, U):
    value = 0
    for c in reversed(poly):
        value = value*U + c
    return value


def _poly_mul(a, b):
    result = [0]*(len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                result[i + j] += ai*bj
    return result


def _poly_add(a, b, scale=1):
    result = list(a) + [0]*max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        result[i] += scale*bi
    return result


def weight_distribution(C):
    """
    Count the codewords of ``C`` by Hamming weight.
    """
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for batch in C.codeword_batches():
        counts += np.bincount(np.count_nonzero(batch, axis=1), minlength=C.n + 1)
    return WeightDistribution(C.n, counts.tolist())


def _krawtchouk(j, i, n, q):
    return sum(
        (-1)**h*(q - 1)**(j - h)*comb(i, h)*binomial(n - i, j - h)
        for h in range(j + 1)
    )


def macwilliams_dual(W, q, k):
    """
    Weight distribution of the dual code, from the MacWilliams
    identity :math:`W_{\\mathcal C^\\perp}(X,Y) = q^{-k} W_{\\mathcal C}(X + (q-1)Y, X - Y)`.

    :arg W: :class:`WeightDistribution` of an ``[n, k]_q`` code
    :arg q: field order
    :arg k: dimension of the code
    """
    if W.total != q**k:
        raise ValueError(f"Distribution sums to {W.total}, not {q}^{k}")
    n = W.n
    counts = []
    for j in range(n + 1):
        total = sum(W[i]*_krawtchouk(j, i, n, q) for i in range(n + 1))
        count, remainder = divmod(total, q**k)
        if remainder or count < 0:
            raise ValueError(f"Input is not the weight distribution of a linear [{n}, {k}]_{q}"
                             + f" code (dual count {total}/{q**k} at weight {j})")
        counts.append(count)
    return WeightDistribution(n, counts)


def extended_enumerator(C):
    """
    The :class:`ExtendedEnumerator` of a code, computed from its
    census as :math:`B_t(U) = \\sum_j \\widehat\\beta_j(\\mathcal C, n-t) (U^j - 1)`.

    :arg C: a :class:`LinearCode` or its :class:`SupportCensus`
    """
    census = C if isinstance(C, SupportCensus) else C.census
    n, k = census.n, census.k
    b_polys = []
    for t in range(n + 1):
        row = census.table[n - t]
        poly = [0]*(k + 1)
        for j, count in enumerate(row):
            poly[j] += count
            poly[0] -= count
        b_polys.append(poly)
    return ExtendedEnumerator(n, k, b_polys)


def extension_weight_distribution(E, q, m):
    """
    Weight distribution of the extension code
    :math:`\\mathcal C \\otimes \\mathbb F_{q^m}`, read off the extended
    weight enumerator at :math:`U = q^m`. For ``m = 0`` this is the
    zero code.

    :arg E: the :class:`ExtendedEnumerator` of :math:`\\mathcal C`
    :arg q: order of the base field
    :arg m: extension degree
    """
    if m < 0:
        raise ValueError(f"Extension degree must be non-negative, not {m}")
    n = E.n
    U = q**m
    values = [E.evaluate(t, U) for t in range(n + 1)]
    counts = []
    for i in range(n + 1):
        a = n - i
        count = 1 if i == 0 else 0
        for t in range(a, n + 1):
            count += (-1)**(t - a)*comb(t, a)*values[t]
        if count < 0:
            raise RuntimeError(f"Negative count {count} at weight {i} of the degree {m}"
                               + " extension code")
        counts.append(count)
    W = WeightDistribution(n, counts)
    if W.total != U**E.k:
        raise RuntimeError(f"Extension distribution sums to {W.total}, not {U}^{E.k}")
    return W


def direct_extension_code(C, m):
    """
    Build :math:`\\mathcal C \\otimes \\mathbb F_{q^m}` explicitly, by
    embedding the generator of a code over a prime field into
    :math:`\\mathbb F_{q^m}`.
    """
    base = C.field
    if base.e != 1:
        raise NotImplementedError("Direct extension codes need a prime base field")
    if m < 1:
        raise ValueError(f"Extension degree must be positive, not {m}")
    if base.q**(m*C.k) > MAX_CODEWORDS:
        raise ValueError(f"Extension code has {base.q}^{m*C.k} codewords, more than the"
                         + f" enumeration guard {MAX_CODEWORDS}")
    ext = make_field(base.p, m)
    data = [[embed(base, ext, base(c)).code for c in row] for row in C.generator.tolist()]
    return LinearCode(MatrixGF(ext, data, cols=C.n), name=f"{C.name} over GF({ext.q})")


def enumerator_from_distributions(n, k, distributions):
    """
    Assemble an :class:`ExtendedEnumerator` from weight counts given as
    polynomials in ``U``, using
    :math:`B_t(U) = \\sum_i \\binom{n-i}{t} W_i(U) - \\binom{n}{t}`.

    :arg n: code length
    :arg k: code dimension
    :arg distributions: ``n + 1`` polynomials :math:`W_i(U)`
    """
    b_polys = []
    for t in range(n + 1):
        poly = [-comb(n, t)]
        for i, W_i in enumerate(distributions):
            poly = _poly_add(poly, W_i, scale=binomial(n - i, t))
        b_polys.append(poly)
    return ExtendedEnumerator(n, k, b_polys)


def _falling_q_product(t, q):
    """
    :math:`\\prod_{j=0}^{t-1} (U - q^j)` as a polynomial in ``U``.
    """
    poly = [1]
    for j in range(t):
        poly = _poly_mul(poly, [-q**j, 1])
    return poly


def reed_muller_extended_enumerator(q, s):
    """
    Closed-form extended weight enumerator of the first-order
    ``q``-ary Reed-Muller code of dimension ``s``: the codewords of
    the extension of degree ``m`` have weight
    :math:`q^{s-1} - q^{s-1-t}` with multiplicity
    :math:`\\prod_{j<t}(q^m - q^j)\\, q^t \\binom{s-1}{t}_q`, or full
    weight with multiplicity
    :math:`\\sum_{t=1}^s \\prod_{j<t}(q^m - q^j) \\binom{s-1}{t-1}_q`.
    """
    n = q**(s - 1)
    distributions = [[0] for _ in range(n + 1)]
    for t in range(s):
        weight = n - q**(s - 1 - t)
        term = [c*q**t*q_binomial(s - 1, t, q) for c in _falling_q_product(t, q)]
        distributions[weight] = _poly_add(distributions[weight], term)
    for t in range(1, s + 1):
        term = [c*q_binomial(s - 1, t - 1, q) for c in _falling_q_product(t, q)]
        distributions[n] = _poly_add(distributions[n], term)
    return enumerator_from_distributions(n, s, distributions)


def reed_muller_extension_distribution(q, s, m):
    """
    Weight distribution of the degree ``m`` extension of the
    first-order Reed-Muller code, from the closed form.
    """
    return extension_weight_distribution(reed_muller_extended_enumerator(q, s), q, m)


def verify_double_count(C, m):
    """
    Check, for every subset size ``r``, that

    .. math::
        \\sum_j q^{jm} \\widehat\\beta_j(\\mathcal C, r)
        = \\sum_\\ell \\binom{n-\\ell}{r-\\ell} W_\\ell(\\mathcal C \\otimes \\mathbb F_{q^m}),

    both sides counting pairs of an ``m``-row matrix over the code and
    an ``r``-subset containing its support.
    """
    census = C.census
    n, q = C.n, C.q
    W = extension_weight_distribution(extended_enumerator(census), q, m)
    for r in range(n + 1):
        lhs = sum(q**(j*m)*census.count(r, j) for j in range(C.k + 1))
        rhs = sum(binomial(n - ell, r - ell)*W[ell] for ell in range(n + 1))
        if lhs != rhs:
            debug(f"verify_double_count: mismatch at r={r}, m={m}: {lhs} vs. {rhs}")
            return False
    return True
