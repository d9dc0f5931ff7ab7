"""
Dense linear algebra over a :class:`FiniteField`.

Matrices hold integer element codes in a read-only :mod:`numpy` array and
hand the heavy lifting (row reduction, rank, null spaces, products) to
:mod:`galois`. Column subsets are passed around as bitmasks, with bit ``j``
standing for column ``j``.
"""
from .log import debug
from .utility import full_mask, indices_from_mask, mask_from_indices
import numpy as np


__all__ = ['MatrixGF', 'SpanState', 'rref', 'rank_of_columns', 'span_insert', 'same_row_space',
           'kernel_dimension_on_support', 'as_mask', 'random_invertible_matrix']


class MatrixGF(object):
    """
    A dense ``rows`` by ``cols`` matrix over a finite field.
    """
    def __init__(self, field, data, cols=None):
        """
        :arg field: the :class:`FiniteField`
        :arg data: nested sequence (or array) of integer element
            codes, in row-major order
        :kwarg cols: number of columns, needed when ``data`` has
            no rows
        """
        self.field = field
        array = np.array(data, dtype=np.int64)
        if array.size == 0:
            if cols is None:
                cols = array.shape[1] if array.ndim == 2 else 0
            array = np.zeros((0 if array.ndim < 2 else array.shape[0], cols), dtype=np.int64)
        if array.ndim != 2:
            raise ValueError(f"Matrix data must be two-dimensional, got shape {array.shape}")
        if array.min(initial=0) < 0 or array.max(initial=0) >= field.q:
            raise ValueError(f"Matrix entries must be element codes in [0, {field.q})")
        array.setflags(write=False)
        self.data = array
        self.rows, self.cols = array.shape

    @classmethod
    def from_galois(cls, field, array, cols=None):
        return cls(field, np.asarray(array, dtype=np.int64), cols=cols)

    @classmethod
    def identity(cls, field, k):
        return cls(field, np.eye(k, dtype=np.int64), cols=k)

    def galois(self):
        """
        The matrix as a :mod:`galois` array.
        """
        return self.field.GF(np.array(self.data))

    def __repr__(self):
        return f"MatrixGF({self.field}, {self.rows}x{self.cols})"

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field is other.field and np.array_equal(self.data, other.data)

    def __getitem__(self, index):
        i, j = index
        return self.field(self.data[i, j])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def tolist(self):
        return self.data.tolist()

    def column(self, j):
        return self.data[:, j].tolist()

    def columns(self):
        return [self.data[:, j].tolist() for j in range(self.cols)]

    def select_columns(self, columns):
        """
        Submatrix formed by a set of columns, given as a bitmask
        or an iterable of indices.
        """
        indices = indices_from_mask(as_mask(columns, self.cols))
        return MatrixGF(self.field, self.data[:, indices], cols=len(indices))

    def transpose(self):
        return MatrixGF(self.field, self.data.T, cols=self.rows)

    def __matmul__(self, other):
        if self.field is not other.field:
            raise ValueError(f"Cannot multiply matrices over {self.field} and {other.field}")
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch {self.shape} @ {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return MatrixGF(self.field, np.zeros((self.rows, other.cols), dtype=np.int64),
                            cols=other.cols)
        return MatrixGF.from_galois(self.field, self.galois() @ other.galois(), cols=other.cols)

    def is_zero(self):
        return not self.data.any()

    def rank(self):
        if self.rows == 0 or self.cols == 0:
            return 0
        return int(np.linalg.matrix_rank(self.galois()))

    def null_space(self):
        """
        A basis of the right kernel, as the rows of a matrix ``H``
        with ``self @ H.T == 0``.
        """
        if self.rows == 0:
            return MatrixGF.identity(self.field, self.cols)
        if self.rank() == self.cols:
            return MatrixGF(self.field, np.zeros((0, self.cols), dtype=np.int64), cols=self.cols)
        return MatrixGF.from_galois(self.field, self.galois().null_space(), cols=self.cols)


def as_mask(columns, n):
    """
    Normalise a column set to a bitmask, validating the indices.
    """
    if isinstance(columns, (int, np.integer)):
        mask = int(columns)
        if mask < 0 or mask >> n:
            raise ValueError(f"Column mask {mask:#x} out of range for {n} columns")
        return mask
    return mask_from_indices(columns, n)


def rref(M):
    """
    Canonical reduced row echelon form: every pivot equals one and
    is the only nonzero entry of its column.

    :arg M: a :class:`MatrixGF`
    :return: the reduced matrix, its rank and its pivot columns
    """
    if M.rows == 0 or M.cols == 0:
        return M, 0, []
    reduced = np.asarray(M.galois().row_reduce(), dtype=np.int64)
    pivots = []
    for row in reduced:
        nonzero = np.flatnonzero(row)
        if len(nonzero) == 0:
            break
        pivots.append(int(nonzero[0]))
    return MatrixGF(M.field, reduced, cols=M.cols), len(pivots), pivots


def rank_of_columns(M, S):
    """
    Rank of the submatrix of ``M`` formed by the columns in ``S``.

    :arg M: a :class:`MatrixGF`
    :arg S: bitmask or iterable of column indices
    """
    mask = as_mask(S, M.cols)
    if mask == 0:
        return 0
    return M.select_columns(mask).rank()


def kernel_dimension_on_support(G, S):
    """
    Dimension of the subcode of codewords whose support lies inside
    ``S``, which equals ``k`` minus the rank of the columns outside
    ``S``.

    :arg G: generator matrix with ``k`` rows
    :arg S: bitmask or iterable of column indices
    """
    mask = as_mask(S, G.cols)
    return G.rows - rank_of_columns(G, full_mask(G.cols) & ~mask)


def same_row_space(A, B):
    """
    Do ``A`` and ``B`` generate the same row space?
    """
    if A.field is not B.field:
        raise ValueError(f"Cannot compare matrices over {A.field} and {B.field}")
    if A.cols != B.cols:
        raise ValueError(f"Column counts differ ({A.cols} vs. {B.cols})")
    RA, rank_a, _ = rref(A)
    RB, rank_b, _ = rref(B)
    if rank_a != rank_b:
        return False
    return np.array_equal(RA.data[:rank_a], RB.data[:rank_b])


def random_invertible_matrix(field, k, rng):
    """
    Sample a uniformly random invertible ``k`` by ``k`` matrix.

    :arg field: the :class:`FiniteField`
    :arg k: the size
    :arg rng: a :class:`numpy.random.Generator`
    """
    while True:
        A = MatrixGF(field, rng.integers(0, field.q, size=(k, k)), cols=k)
        if A.rank() == k:
            return A


class SpanState(object):
    """
    Running span of a set of vectors in :math:`\\mathbb F_q^k`.

    The basis is kept in reduced row echelon form: each basis vector
    has a pivot entry equal to one, and every other basis vector is
    zero in that pivot column. The basis, ordered by pivot, is
    therefore a canonical label of the span.
    """
    __slots__ = ('field', 'k', 'basis', 'pivots', '_q', '_sub', '_mul', '_inv')

    def __init__(self, field, k):
        """
        :arg field: the :class:`FiniteField`, with ``q <= 256``
        :arg k: the ambient dimension
        """
        self.field = field
        self.k = k
        self.basis = []
        self.pivots = []
        tables = field.tables
        self._q = tables.q
        self._sub = tables.sub
        self._mul = tables.mul
        self._inv = tables.inv

    def copy(self):
        other = SpanState.__new__(SpanState)
        other.field = self.field
        other.k = self.k
        other.basis = list(self.basis)
        other.pivots = list(self.pivots)
        other._q = self._q
        other._sub = self._sub
        other._mul = self._mul
        other._inv = self._inv
        return other

    def __repr__(self):
        return f"SpanState({self.field}, k={self.k}, rank={self.rank})"

    @property
    def rank(self):
        return len(self.basis)

    @property
    def is_full(self):
        return len(self.basis) == self.k

    def key(self):
        """
        Hashable canonical label of the span.
        """
        return tuple(self.basis)

    def reduce(self, v):
        """
        Remainder of ``v`` after elimination against the basis.
        """
        q, sub, mul = self._q, self._sub, self._mul
        w = list(v)
        for b, piv in zip(self.basis, self.pivots):
            c = w[piv]
            if c:
                w = [sub[wi*q + mul[c*q + bi]] for wi, bi in zip(w, b)]
        return w

    def __contains__(self, v):
        return not any(self.reduce(v))

    def insert(self, v):
        """
        Add ``v`` to the span.

        :return: ``True`` if the rank increased
        """
        if len(v) != self.k:
            raise ValueError(f"Vector of length {len(v)} inserted into a span in dimension {self.k}")
        w = self.reduce(v)
        piv = next((i for i, wi in enumerate(w) if wi), None)
        if piv is None:
            return False
        q, sub, mul = self._q, self._sub, self._mul
        scale = self._inv[w[piv]]
        w = tuple(mul[scale*q + wi] for wi in w)
        for i, b in enumerate(self.basis):
            c = b[piv]
            if c:
                self.basis[i] = tuple(sub[bi*q + mul[c*q + wi]] for bi, wi in zip(b, w))
        position = sum(1 for p in self.pivots if p < piv)
        self.basis.insert(position, w)
        self.pivots.insert(position, piv)
        return True


def span_insert(state, v):
    """
    Insert ``v`` into a :class:`SpanState`.

    :return: the (updated) state and whether the rank increased
    """
    increased = state.insert([int(c) for c in v])
    if increased:
        debug(f"SpanState: rank increased to {state.rank}")
    return state, increased
