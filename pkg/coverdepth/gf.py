"""
Finite fields :math:`\\mathbb F_{p^e}` with a deterministic modulus.

Arithmetic is delegated to :mod:`galois`. The field is built with the
lexicographically smallest monic irreducible polynomial of degree ``e``
over :math:`\\mathbb F_p` (coefficients compared from the constant term
upward), so that element codes are reproducible without Conway tables.

An element is encoded by the integer :math:`\\sum_i c_i p^i` of its
polynomial representative :math:`\\sum_i c_i x^i`, which is also the
integer representation used by :mod:`galois`.
"""
from .log import debug
from .utility import MAX_TABULATED_ORDER
from functools import cached_property, lru_cache
import itertools
import galois
import numpy as np


__all__ = ['FiniteField', 'FieldElement', 'make_field', 'field_of_order', 'embed', 'add', 'sub',
           'mul', 'inv']


MAX_DEGREE = 16


def _smallest_irreducible(p, e):
    """
    Search for the lexicographically smallest monic irreducible
    polynomial of degree ``e`` over :math:`\\mathbb F_p`.

    :return: coefficients ``[c_0, ..., c_e]`` in ascending order
    """
    prime_field = galois.GF(p)
    for lower in itertools.product(range(p), repeat=e):
        if lower[0] == 0:
            continue
        coeffs = list(lower) + [1]
        poly = galois.Poly(coeffs[::-1], field=prime_field)
        if poly.is_irreducible():
            return coeffs
    raise RuntimeError(f"No irreducible polynomial of degree {e} over GF({p})")


class FiniteField(object):
    """
    The finite field :math:`\\mathbb F_q` with :math:`q = p^e`.

    Instances should be obtained through :func:`make_field`, which
    caches them, so that two fields compare equal exactly when they
    are the same object.
    """
    def __init__(self, p, e):
        """
        :arg p: the characteristic, a prime
        :arg e: the degree over the prime subfield
        """
        if not galois.is_prime(p):
            raise ValueError(f"Field characteristic {p} is not prime")
        if not 1 <= e <= MAX_DEGREE:
            raise ValueError(f"Field degree {e} outside the supported range 1..{MAX_DEGREE}")
        self.p = p
        self.e = e
        self.q = p**e
        if e == 1:
            self.modulus = [0, 1]
            self.GF = galois.GF(p)
        else:
            self.modulus = _smallest_irreducible(p, e)
            poly = galois.Poly(self.modulus[::-1], field=galois.GF(p))
            self.GF = galois.GF(p**e, irreducible_poly=poly)
        debug(f"FiniteField: GF({self.q}) with modulus {self.modulus}")

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (make_field, (self.p, self.e))

    def to_json(self):
        return {'p': self.p, 'e': self.e, 'modulus': list(self.modulus)}

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def __call__(self, code):
        """
        The element with integer code ``code``.
        """
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def array(self, values):
        """
        Convert integer codes into a :mod:`galois` array over this field.
        """
        return self.GF(np.asarray(values, dtype=np.int64))

    def primitive_element(self):
        """
        A generator of the multiplicative group.
        """
        return FieldElement(self, int(self.GF.primitive_element))

    @cached_property
    def tables(self):
        """
        Lookup tables for the hot loops of the census and the
        Monte Carlo simulation, as flat Python lists indexed by
        ``a*q + b`` (binary operations) or ``a`` (unary ones).
        """
        if self.q > MAX_TABULATED_ORDER:
            raise ValueError(f"Tabulated arithmetic is limited to q <= {MAX_TABULATED_ORDER},"
                             + f" not {self.q}")
        elements = self.GF.elements
        add_table = np.asarray(elements[:, None] + elements[None, :]).ravel()
        sub_table = np.asarray(elements[:, None] - elements[None, :]).ravel()
        mul_table = np.asarray(elements[:, None]*elements[None, :]).ravel()
        inv_table = [0] + [int(x) for x in np.asarray(np.reciprocal(elements[1:]))]
        debug(f"FiniteField: built lookup tables for GF({self.q})")
        return FieldTables(self.q, add_table.tolist(), sub_table.tolist(), mul_table.tolist(),
                           inv_table)

    def _check(self, *elements):
        for a in elements:
            if not isinstance(a, FieldElement):
                raise TypeError(f"Expected a FieldElement, got {type(a).__name__}")
            if a.field is not self:
                raise ValueError(f"Cannot mix elements of {a.field} and {self}")

    def add(self, a, b):
        self._check(a, b)
        return FieldElement(self, int(self.GF(a.code) + self.GF(b.code)))

    def sub(self, a, b):
        self._check(a, b)
        return FieldElement(self, int(self.GF(a.code) - self.GF(b.code)))

    def mul(self, a, b):
        self._check(a, b)
        return FieldElement(self, int(self.GF(a.code)*self.GF(b.code)))

    def neg(self, a):
        self._check(a)
        return FieldElement(self, int(-self.GF(a.code)))

    def inv(self, a):
        self._check(a)
        if a.code == 0:
            raise ZeroDivisionError(f"The zero element of {self} has no inverse")
        return FieldElement(self, int(np.reciprocal(self.GF(a.code))))


class FieldTables(object):
    """
    Flat lookup tables of a small field.
    """
    def __init__(self, q, add, sub, mul, inv):
        self.q = q
        self.add = add
        self.sub = sub
        self.mul = mul
        self.inv = inv


class FieldElement(object):
    """
    An element of a :class:`FiniteField`, stored as its integer code.
    """
    __slots__ = ('field', 'code')

    def __init__(self, field, code):
        code = int(code)
        if not 0 <= code < field.q:
            raise ValueError(f"Element code {code} out of range for {field}")
        self.field = field
        self.code = code

    def __repr__(self):
        return f"{self.field}({self.code})"

    def __int__(self):
        return self.code

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __add__(self, other):
        return self.field.add(self, other)

    def __sub__(self, other):
        return self.field.sub(self, other)

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __neg__(self):
        return self.field.neg(self)

    def inverse(self):
        return self.field.inv(self)


@lru_cache(maxsize=None)
def make_field(p, e=1):
    """
    Construct :math:`\\mathbb F_{p^e}`.

    Repeated calls return the same object.

    :arg p: a prime
    :kwarg e: degree of the extension, between 1 and 16
    """
    return FiniteField(p, e)


def field_of_order(q):
    """
    Construct the field of order ``q`` by factoring ``q``
    as a prime power.
    """
    if q < 2 or not galois.is_prime_power(q):
        raise ValueError(f"Field order {q} is not a prime power")
    primes, exponents = galois.factors(q)
    return make_field(int(primes[0]), int(exponents[0]))


def add(a, b):
    return a.field.add(a, b)


def sub(a, b):
    return a.field.sub(a, b)


def mul(a, b):
    return a.field.mul(a, b)


def inv(a):
    return a.field.inv(a)


def embed(base, ext, a):
    """
    Embed an element of ``base`` into the extension ``ext``.

    Only embeddings of a prime field are supported. The prime
    subfield of every field built by :func:`make_field` consists of
    the constant polynomials, so its elements keep their codes.

    :arg base: the subfield
    :arg ext: the extension field
    :arg a: an element of ``base``
    """
    if base.p != ext.p or ext.e % base.e != 0:
        raise ValueError(f"{base} is not a subfield of {ext}")
    if base.e != 1:
        raise NotImplementedError("Only prime subfields can be embedded")
    base._check(a)
    return FieldElement(ext, a.code)
