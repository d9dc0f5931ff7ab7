"""
The ternary Golay codes.

The extended ternary Golay code is generated by :math:`[I_6 \\mid B]` where
``B`` is the bordered Jacobsthal matrix of the quadratic-residue character
modulo 5 (the Paley construction): its first row and column are
``0, 1, 1, 1, 1, 1`` and its lower-right block has entry
:math:`\\chi(j - i)` with :math:`\\chi(1) = \\chi(4) = 1` and
:math:`\\chi(2) = \\chi(3) = 2`. This is the standard-form generator
listed in most coding theory references.

The ternary Golay code is obtained by puncturing the last coordinate.
Both codes are checked against their known weight distributions when they
are constructed, so a transcription error cannot go unnoticed.
"""
from .codes import LinearCode, puncture
from .enumeration import weight_distribution
from .gf import make_field
from .linalg import MatrixGF
from .log import debug
from functools import lru_cache
import numpy as np


__all__ = ['ternary_golay', 'extended_ternary_golay', 'GOLAY_B', 'GOLAY_WEIGHTS',
           'EXTENDED_GOLAY_WEIGHTS']


GOLAY_B = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 2],
    [1, 2, 1, 0, 1, 2],
    [1, 2, 2, 1, 0, 1],
    [1, 1, 2, 2, 1, 0],
]

# W_0, ..., W_n
GOLAY_WEIGHTS = (1, 0, 0, 0, 0, 132, 132, 0, 330, 110, 0, 24)
EXTENDED_GOLAY_WEIGHTS = (1, 0, 0, 0, 0, 0, 264, 0, 0, 440, 0, 0, 24)


def _verified(C, expected):
    counts = weight_distribution(C).counts
    if counts != expected:
        raise RuntimeError(f"{C.name} has weight distribution {counts}, expected {expected}")
    debug(f"LinearCode: weight distribution of {C.name} verified")
    return C


@lru_cache(maxsize=None)
def extended_ternary_golay():
    """
    The :math:`[12, 6, 6]_3` extended ternary Golay code.
    """
    G = np.hstack([np.eye(6, dtype=np.int64), np.array(GOLAY_B, dtype=np.int64)])
    C = LinearCode(MatrixGF(make_field(3), G), name="golay3x")
    return _verified(C, EXTENDED_GOLAY_WEIGHTS)


@lru_cache(maxsize=None)
def ternary_golay():
    """
    The :math:`[11, 6, 5]_3` ternary Golay code.
    """
    C = puncture(extended_ternary_golay(), 11)
    C.name = "golay3"
    return _verified(C, GOLAY_WEIGHTS)
