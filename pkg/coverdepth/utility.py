"""
Utility functions and classes shared across coverdepth.
"""
from .log import debug


__all__ = ['AttrDict', 'MAX_LENGTH', 'MAX_CODEWORDS', 'MAX_CENSUS_LENGTH', 'MAX_CHAIN_STATES',
           'MAX_TABULATED_ORDER', 'mask_from_indices', 'indices_from_mask', 'full_mask',
           'popcount', 'check_length', 'vector_to_int', 'int_to_vector']


# Guards
MAX_LENGTH = 64
MAX_CODEWORDS = 2**24
MAX_CENSUS_LENGTH = 28
MAX_CHAIN_STATES = 10**6
MAX_TABULATED_ORDER = 256


class AttrDict(dict):
    """
    Dictionary that provides both ``self['key']``
    and ``self.key`` access to members.

    **Disclaimer**: Copied from `stackoverflow <http://stackoverflow.com/questions/4984647/accessing-dict-keys-like-an-attribute-in-python>`__.
    """
    def __init__(self, *args, **kwargs):
        super(AttrDict, self).__init__(*args, **kwargs)
        self.__dict__ = self


def check_length(n):
    """
    Reject code lengths which do not fit in a
    column bitmask.
    """
    if n > MAX_LENGTH:
        raise ValueError(f"Length {n} exceeds the bitmask limit {MAX_LENGTH}")


def full_mask(n):
    return (1 << n) - 1


def popcount(mask):
    return bin(mask).count('1')


def mask_from_indices(indices, n):
    """
    Encode a set of column indices as a bitmask.

    :arg indices: iterable of column indices
    :arg n: number of columns
    """
    mask = 0
    for i in indices:
        if not 0 <= i < n:
            raise ValueError(f"Column index {i} out of range for {n} columns")
        mask |= 1 << i
    return mask


def indices_from_mask(mask):
    """
    Decode a bitmask into a sorted list of column indices.
    """
    indices = []
    i = 0
    while mask:
        if mask & 1:
            indices.append(i)
        mask >>= 1
        i += 1
    return indices


def vector_to_int(vector, q):
    """
    Read a vector over :math:`\\mathbb F_q` as a base-``q``
    number, with the first coordinate most significant.

    :arg vector: sequence of element codes
    :arg q: field order
    """
    value = 0
    for c in vector:
        value = value*q + int(c)
    return value


def int_to_vector(value, q, length):
    """
    Inverse of :func:`vector_to_int`.
    """
    vector = [0]*length
    for i in range(length - 1, -1, -1):
        value, vector[i] = divmod(value, q)
    if value:
        debug(f"int_to_vector: value does not fit in {length} digits")
        raise ValueError(f"Value too large for a vector of length {length} over GF({q})")
    return vector
