"""
Census of coordinate subsets by size and supported subcode dimension.

For a code :math:`\\mathcal C` of dimension ``k`` and length ``n``, the census
counts, for every ``r`` and ``j``, the subsets ``S`` of the coordinates with
``|S| = r`` and :math:`\\dim \\mathcal C(S) = j`, where
:math:`\\mathcal C(S)` is the subcode of codewords supported inside ``S``.
By rank-nullity, :math:`\\dim \\mathcal C(S) = k - \\operatorname{rank} G_T`
with ``T`` the complement of ``S``, so the census is one pass over all
column subsets ``T`` tracking the rank of the columns they select.

The pass is a depth-first walk which adds one column per step to a
:class:`SpanState`, sharing the span of every prefix between its two
branches. Once a prefix already spans :math:`\\mathbb F_q^k`, every
extension of it has full rank and is counted in one go.
"""
from .gf import make_field
from .linalg import SpanState
from .log import debug
from .parallel import map_chunks, num_workers
from .utility import MAX_CENSUS_LENGTH, popcount
from math import comb


__all__ = ['SupportCensus', 'support_census', 'alpha', 'beta', 'beta_hat']


class SupportCensus(object):
    """
    Table of subset counts indexed by ``(r, j)``: the number of
    ``r``-subsets ``S`` with :math:`\\dim \\mathcal C(S) = j`.
    """
    def __init__(self, n, k, q, table):
        """
        :arg n: code length
        :arg k: code dimension
        :arg q: field order
        :arg table: ``n + 1`` rows of ``k + 1`` counts
        """
        self.n = n
        self.k = k
        self.q = q
        self.table = tuple(tuple(int(c) for c in row) for row in table)
        assert len(self.table) == n + 1
        assert all(len(row) == k + 1 for row in self.table)
        for r, row in enumerate(self.table):
            assert sum(row) == comb(n, r), f"Census row {r} does not sum to C({n}, {r})"
        assert self.table[n][k] == 1 and self.table[0][0] == 1

    def __repr__(self):
        return f"SupportCensus(n={self.n}, k={self.k}, q={self.q})"

    def __eq__(self, other):
        if not isinstance(other, SupportCensus):
            return NotImplemented
        return (self.n, self.k, self.q, self.table) == (other.n, other.k, other.q, other.table)

    def count(self, r, j):
        if not 0 <= r <= self.n or not 0 <= j <= self.k:
            return 0
        return self.table[r][j]

    def alpha(self, s):
        """
        Number of information sets of size ``s``.
        """
        self._check_size(s)
        return self.table[self.n - s][0]

    def beta(self, ell, s):
        """
        Number of ``s``-subsets whose complement supports a subcode
        of dimension ``ell``.
        """
        self._check_size(s)
        return self.count(self.n - s, ell)

    def beta_hat(self, j, r):
        """
        Number of ``r``-subsets supporting a subcode of dimension ``j``.
        """
        self._check_size(r)
        return self.count(r, j)

    def _check_size(self, s):
        if not 0 <= s <= self.n:
            raise ValueError(f"Subset size {s} out of range 0..{self.n}")

    def minimum_distance(self):
        """
        The least ``r`` for which some ``r``-subset supports a nonzero
        codeword, i.e. the minimum distance of the code.
        """
        if self.k == 0:
            raise ValueError("The zero code has no minimum distance")
        for r in range(1, self.n + 1):
            if any(self.table[r][1:]):
                return r
        raise RuntimeError("Census of a nonzero code has no nonzero support")

    def dual_census(self):
        """
        Census of the dual code, predicted from this one through
        :math:`\\dim \\mathcal C^\\perp(T) = |T| - k + \\dim \\mathcal C(T^c)`.
        """
        n, k = self.n, self.k
        table = [
            [self.count(n - r, j + k - r) for j in range(n - k + 1)]
            for r in range(n + 1)
        ]
        return SupportCensus(n, n - k, self.q, table)

    def to_json(self):
        return {'n': self.n, 'k': self.k, 'table': [[str(c) for c in row] for row in self.table]}


def _census_chunk(payload):
    """
    Count the column subsets ``T`` whose top ``num_fixed`` columns
    are selected by ``fixed``, by size and by rank.
    """
    p, e, k, columns, num_fixed, fixed = payload
    n = len(columns)
    free = n - num_fixed
    counts = [[0]*(k + 1) for _ in range(n + 1)]
    state = SpanState(make_field(p, e), k)
    for j in range(num_fixed):
        if fixed >> j & 1:
            state.insert(columns[free + j])

    def visit(i, state, size):
        if state.is_full:
            remaining = free - i
            for extra in range(remaining + 1):
                counts[size + extra][k] += comb(remaining, extra)
            return
        if i == free:
            counts[size][state.rank] += 1
            return
        visit(i + 1, state, size)
        column = columns[i]
        if any(state.reduce(column)):
            child = state.copy()
            child.insert(column)
            visit(i + 1, child, size + 1)
        else:
            visit(i + 1, state, size + 1)

    visit(0, state, popcount(fixed))
    return counts


def support_census(C, **kwargs):
    """
    Compute the :class:`SupportCensus` of a code.

    :arg C: a :class:`LinearCode` with ``n <= 28``
    :kwarg num_fixed: number of top columns fixed per work chunk,
        so that the subset space splits into ``2**num_fixed``
        contiguous chunks (defaults to enough chunks to keep every
        worker busy)
    """
    n, k = C.n, C.k
    if n > MAX_CENSUS_LENGTH:
        raise ValueError(f"Census of a length {n} code exceeds the subset guard"
                         + f" n <= {MAX_CENSUS_LENGTH}")
    num_fixed = kwargs.get('num_fixed')
    if num_fixed is None:
        workers = num_workers()
        num_fixed = 0 if workers == 1 else min(n, (4*workers - 1).bit_length())
    if not 0 <= num_fixed <= n:
        raise ValueError(f"Cannot fix {num_fixed} of {n} columns")
    columns = [tuple(column) for column in C.generator.columns()]
    field = C.field
    payloads = [(field.p, field.e, k, columns, num_fixed, fixed) for fixed in range(2**num_fixed)]
    debug(f"SupportCensus: {C.name} over 2^{n} subsets in {len(payloads)} chunks")
    partial = map_chunks(_census_chunk, payloads)

    # Merge, reindexing from (|T|, rank T) to (|S|, dim C(S))
    table = [[0]*(k + 1) for _ in range(n + 1)]
    for counts in partial:
        for size, row in enumerate(counts):
            for rank, count in enumerate(row):
                table[n - size][k - rank] += count
    census = SupportCensus(n, k, C.q, table)
    debug(f"SupportCensus: information sets by size {[census.alpha(s) for s in range(n + 1)]}")
    return census


def alpha(census, s):
    r"""
    :math:`\alpha(\mathcal C, s)`, the number of information sets of
    size ``s``.
    """
    return census.alpha(s)


def beta(census, ell, s):
    r"""
    :math:`\beta_\ell(\mathcal C, s)`, the number of ``s``-subsets
    whose complement supports a subcode of dimension ``ell``.
    """
    return census.beta(ell, s)


def beta_hat(census, j, r):
    r"""
    :math:`\widehat\beta_j(\mathcal C, r)`, the number of
    ``r``-subsets supporting a subcode of dimension ``j``.
    """
    return census.beta_hat(j, r)

