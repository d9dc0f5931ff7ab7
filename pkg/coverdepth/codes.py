"""
Linear block codes over finite fields and constructors for the code
families whose coverage depth is known in closed form.

Column orders are fixed so that census bitmasks are reproducible: vectors
of :math:`\\mathbb F_q^k` are ordered by their integer encoding, reading
the first coordinate as the most significant base-``q`` digit.
"""
from .gf import field_of_order
from .linalg import MatrixGF, rref
from .log import debug, info
from .utility import MAX_CODEWORDS, check_length, int_to_vector
from functools import cached_property
import itertools
import numpy as np


__all__ = ['LinearCode', 'from_generator', 'dual', 'simplex', 'hamming', 'reed_muller_1',
           'reed_solomon', 'full_space', 'puncture', 'random_code', 'codewords',
           'minimum_distance', 'read_code_file', 'write_code_file', 'parse_code']


class LinearCode(object):
    """
    A ``k``-dimensional linear code of length ``n`` over
    :math:`\\mathbb F_q`, given by a full-rank generator matrix.

    The zero code is represented by a generator with no rows.
    """
    def __init__(self, generator, name=None):
        """
        :arg generator: ``k`` by ``n`` :class:`MatrixGF` of rank ``k``
        :kwarg name: optional label used in reports
        """
        rank = generator.rank()
        if rank < generator.rows:
            raise ValueError(f"Generator matrix is rank deficient: rank {rank} with"
                             + f" {generator.rows} rows")
        check_length(generator.cols)
        self.generator = generator
        self.field = generator.field
        self.q = generator.field.q
        self.k = generator.rows
        self.n = generator.cols
        self.name = name or f"[{self.n}, {self.k}]_{self.q}"

    def __repr__(self):
        return f"LinearCode({self.name})"

    @cached_property
    def canonical_generator(self):
        """
        Reduced row echelon form of the generator matrix.
        """
        return rref(self.generator)[0]

    def same_code(self, other):
        """
        Do the two codes have the same row space?
        """
        if self.field is not other.field or self.n != other.n:
            return False
        return self.k == other.k and self.canonical_generator == other.canonical_generator

    @cached_property
    def dual(self):
        """
        The dual code, of dimension ``n - k``.
        """
        H = self.generator.null_space()
        debug(f"LinearCode: dual of {self.name} has dimension {H.rows}")
        return LinearCode(H, name=f"dual of {self.name}")

    @cached_property
    def census(self):
        """
        The :class:`SupportCensus` of the code, computed on first use.
        """
        from .census import support_census
        return support_census(self)

    @property
    def num_codewords(self):
        return self.q**self.k

    def check_enumerable(self):
        if self.num_codewords > MAX_CODEWORDS:
            raise ValueError(f"{self.name} has {self.q}^{self.k} codewords, more than the"
                             + f" enumeration guard {MAX_CODEWORDS}; use a census-based method")

    def codeword_batches(self, batch_size=2**14):
        """
        Yield all codewords, as rows of integer arrays, by iterating
        message vectors in integer order.
        """
        self.check_enumerable()
        if self.k == 0:
            yield np.zeros((1, self.n), dtype=np.int64)
            return
        G = self.generator.galois()
        powers = self.q**np.arange(self.k - 1, -1, -1, dtype=np.int64)
        for start in range(0, self.num_codewords, batch_size):
            index = np.arange(start, min(start + batch_size, self.num_codewords), dtype=np.int64)
            messages = (index[:, None]//powers[None, :]) % self.q
            yield np.asarray(self.field.GF(messages) @ G, dtype=np.int64)

    def codewords(self):
        """
        Stream every codeword exactly once, as a tuple of element codes.
        """
        for batch in self.codeword_batches():
            for word in batch.tolist():
                yield tuple(word)

    @cached_property
    def minimum_distance(self):
        """
        Least Hamming weight of a nonzero codeword.
        """
        if self.k == 0:
            raise ValueError("The zero code has no minimum distance")
        d = self.n
        for batch in self.codeword_batches():
            weights = np.count_nonzero(batch, axis=1)
            weights = weights[weights > 0]
            if len(weights):
                d = min(d, int(weights.min()))
        return d


def from_generator(M, name=None):
    """
    Build a code from a full-rank generator matrix.
    """
    return LinearCode(M, name=name)


def dual(C):
    return C.dual


def codewords(C):
    return C.codewords()


def minimum_distance(C):
    return C.minimum_distance


def _projective_points(q, k):
    """
    Representatives of the one-dimensional subspaces of
    :math:`\\mathbb F_q^k` whose first nonzero coordinate is one,
    in integer order.
    """
    points = []
    for value in range(1, q**k):
        v = int_to_vector(value, q, k)
        if next(c for c in v if c) == 1:
            points.append(v)
    return points


def simplex(q, k):
    """
    The ``q``-ary simplex code of dimension ``k``, whose generator
    columns are the projective points of :math:`\\mathbb F_q^k`.
    """
    field = field_of_order(q)
    if k < 2:
        raise ValueError(f"Simplex codes need k >= 2, not {k}")
    n = (q**k - 1)//(q - 1)
    check_length(n)
    columns = _projective_points(q, k)
    assert len(columns) == n
    G = MatrixGF(field, np.array(columns, dtype=np.int64).T)
    return LinearCode(G, name=f"simplex({q}, {k})")


def hamming(q, r):
    """
    The ``q``-ary Hamming code of redundancy ``r``, the dual of the
    simplex code of dimension ``r``.
    """
    S = simplex(q, r)
    C = LinearCode(S.generator.null_space(), name=f"hamming({q}, {r})")
    assert C.k == S.n - r
    return C


def full_space(q, n):
    """
    The whole space :math:`\\mathbb F_q^n`.
    """
    field = field_of_order(q)
    return LinearCode(MatrixGF.identity(field, n), name=f"full({q}, {n})")


def reed_muller_1(q, s):
    """
    The first-order ``q``-ary Reed-Muller code of dimension ``s``:
    evaluations of affine functions at every point of
    :math:`\\mathbb F_q^{s-1}`.
    """
    field = field_of_order(q)
    if s < 2:
        raise ValueError(f"Reed-Muller codes need s >= 2, not {s}")
    n = q**(s - 1)
    check_length(n)
    points = [int_to_vector(i, q, s - 1) for i in range(n)]
    rows = [[1]*n] + [[point[c] for point in points] for c in range(s - 1)]
    C = LinearCode(MatrixGF(field, rows), name=f"rm1({q}, {s})")
    d = (q - 1)*q**(s - 2)
    if C.minimum_distance != d:
        raise RuntimeError(f"Reed-Muller code has distance {C.minimum_distance}, expected {d}")
    return C


def reed_solomon(q, n, k):
    """
    The Reed-Solomon code of length ``n`` and dimension ``k``, with
    Vandermonde generator evaluated at the first ``n`` elements of
    :math:`\\mathbb F_q`.
    """
    field = field_of_order(q)
    if n > q:
        raise ValueError(f"Reed-Solomon codes need n <= q, got n={n}, q={q}")
    if not 1 <= k <= n:
        raise ValueError(f"Reed-Solomon codes need 1 <= k <= n, got k={k}, n={n}")
    x = field.GF(np.arange(n, dtype=np.int64))
    rows = [np.ones(n, dtype=np.int64)] + [np.asarray(x**i, dtype=np.int64) for i in range(1, k)]
    G = MatrixGF(field, np.array(rows))
    C = LinearCode(G, name=f"rs({q}, {n}, {k})")
    if n <= 12:
        for S in itertools.combinations(range(n), k):
            if G.select_columns(S).rank() != k:
                raise RuntimeError(f"Columns {S} of the Reed-Solomon generator are dependent")
        debug(f"LinearCode: MDS property certified for {C.name}")
    return C


def puncture(C, i):
    """
    Delete coordinate ``i`` from every codeword.
    """
    if not 0 <= i < C.n:
        raise ValueError(f"Coordinate {i} out of range for length {C.n}")
    keep = [j for j in range(C.n) if j != i]
    G = C.generator.select_columns(keep)
    R, rank, _ = rref(G)
    if rank < G.rows:
        G = MatrixGF(C.field, R.data[:rank], cols=G.cols)
    return LinearCode(G, name=f"{C.name} punctured at {i}")


def random_code(field, k, n, seed=None):
    """
    Sample a random ``k``-dimensional code of length ``n``.

    :arg field: the :class:`FiniteField`
    :arg k: dimension
    :arg n: length
    :kwarg seed: seed for :func:`numpy.random.default_rng`
    """
    if not 1 <= k <= n:
        raise ValueError(f"Random codes need 1 <= k <= n, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    while True:
        G = MatrixGF(field, rng.integers(0, field.q, size=(k, n)))
        if G.rank() == k:
            return LinearCode(G, name=f"random[{n}, {k}]_{field.q}")


# --- Code files

def parse_code(text, source='<string>'):
    """
    Parse the text of a ``.code`` file.

    The first non-comment line holds ``q k n``; the next ``k`` lines
    hold the generator rows as element codes. Lines starting with
    ``#`` are ignored.
    """
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith('#')
    ]
    if not lines:
        raise ValueError(f"{source}: empty code file")
    number, header = lines[0]
    if len(header) != 3:
        raise ValueError(f"{source}:{number}: expected 'q k n', got {len(header)} fields")
    try:
        q, k, n = (int(token) for token in header)
    except ValueError:
        raise ValueError(f"{source}:{number}: non-integer header {' '.join(header)}")
    field = field_of_order(q)
    if k < 0 or n < 1:
        raise ValueError(f"{source}:{number}: invalid dimensions k={k}, n={n}")
    if len(lines) - 1 != k:
        raise ValueError(f"{source}: expected {k} generator rows, found {len(lines) - 1}")
    rows = []
    for number, tokens in lines[1:]:
        if len(tokens) != n:
            raise ValueError(f"{source}:{number}: expected {n} symbols, found {len(tokens)}")
        row = []
        for token in tokens:
            try:
                symbol = int(token)
            except ValueError:
                raise ValueError(f"{source}:{number}: non-integer symbol '{token}'")
            if not 0 <= symbol < q:
                raise ValueError(f"{source}:{number}: symbol {symbol} out of range [0, {q})")
            row.append(symbol)
        rows.append(row)
    return LinearCode(MatrixGF(field, rows, cols=n), name=source)


def read_code_file(path):
    with open(path) as f:
        text = f.read()
    info(f"Reading code from {path}")
    return parse_code(text, source=str(path))


def write_code_file(C, path, comment=None):
    """
    Write a code to a ``.code`` file.
    """
    with open(path, 'w') as f:
        if comment:
            f.write(f"# {comment}\n")
        f.write(f"{C.q} {C.k} {C.n}\n")
        for row in C.generator.tolist():
            f.write(' '.join(str(c) for c in row) + '\n')
