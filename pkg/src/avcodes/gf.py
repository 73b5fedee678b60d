"""Table-driven arithmetic in GF(p^m) with a fixed primitive element.

Elements are plain ints in exponent notation: ``k`` stands for alpha^k
(0 <= k <= q-2) and ``-1`` stands for the zero element, matching the
text convention used everywhere in this package ("-1 means 0").
"""

from dataclasses import dataclass
from functools import reduce

ZERO = -1
ONE = 0

MAX_Q = 1 << 16
# dense q x q add tables are built below this size; larger fields fall
# back to Zech logarithms
DENSE_Q = 512


class FieldError(ValueError):
    pass


class NotPrimitiveError(FieldError):
    pass


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of GF(p^m): prime p, degree m, monic primitive polynomial.

    ``primitive_poly`` holds m+1 base-field coefficients in ascending
    order, e.g. x^3 + x + 1 over GF(2) is (1, 1, 0, 1).
    """

    p: int
    m: int
    primitive_poly: tuple

    @property
    def q(self):
        return self.p ** self.m

    def validate(self):
        if not is_prime(self.p):
            raise FieldError("p = %d is not prime" % self.p)
        if self.m < 1:
            raise FieldError("extension degree must be >= 1")
        if self.q > MAX_Q:
            raise FieldError("field size %d exceeds the %d table limit" % (self.q, MAX_Q))
        if len(self.primitive_poly) != self.m + 1:
            raise FieldError("primitive polynomial needs m+1 coefficients")
        if any(c % self.p != self.primitive_poly[i] for i, c in enumerate(self.primitive_poly)):
            raise FieldError("polynomial coefficients must be reduced mod p")
        if self.primitive_poly[self.m] != 1:
            raise FieldError("primitive polynomial must be monic")


class Field:
    """GF(q) with log/antilog tables built from a FieldSpec.

    ``antilog[k]`` is the base-p digit encoding of alpha^k and ``log``
    inverts it.  Construction fails with NotPrimitiveError unless the
    root of the polynomial has multiplicative order exactly q-1.

    The instance is immutable after construction apart from
    ``op_count``, a diagnostic counter bumped once per arithmetic call;
    sections of an algorithm are metered by snapshotting it.
    """

    def __init__(self, p, m, primitive_poly):
        spec = FieldSpec(p, m, tuple(c % p for c in primitive_poly))
        spec.validate()
        self.spec = spec
        self.p = p
        self.m = m
        self.q = spec.q
        self.op_count = 0
        self._build_tables()

    @classmethod
    def from_spec(cls, spec):
        return cls(spec.p, spec.m, spec.primitive_poly)

    def _poly_mul_x_mod(self, coeffs):
        # multiply by x and reduce by the primitive polynomial
        p, m = self.p, self.m
        shifted = [0] + list(coeffs[: m - 1])
        top = coeffs[m - 1]
        if top:
            for i in range(m):
                shifted[i] = (shifted[i] - top * self.spec.primitive_poly[i]) % p
        return tuple(shifted)

    def _encode(self, coeffs):
        return reduce(lambda acc, c: acc * self.p + c, reversed(coeffs), 0)

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        one = tuple([1] + [0] * (m - 1))
        antilog = []
        seen = {}
        cur = one
        for k in range(q - 1):
            enc = self._encode(cur)
            if enc == 0 or enc in seen:
                raise NotPrimitiveError(
                    "root of the polynomial has multiplicative order %d < %d" % (k, q - 1)
                )
            seen[enc] = k
            antilog.append(enc)
            cur = self._poly_mul_x_mod(cur)
        if cur != one:
            raise NotPrimitiveError("alpha^%d != 1, polynomial root is not primitive" % (q - 1))
        self.antilog = tuple(antilog)
        self.log = seen

        # code of -1; for p = 2 negation is the identity
        self._neg_code = 0 if p == 2 else (q - 1) // 2

        neg = [(-1 if a == ZERO else (a + self._neg_code) % (q - 1)) for a in self._codes()]
        self._neg = neg

        if q <= DENSE_Q:
            dec = {enc: k for k, enc in enumerate(antilog)}
            dec[0] = ZERO
            rows = []
            for a in self._codes():
                ea = 0 if a == ZERO else antilog[a]
                row = []
                for b in self._codes():
                    eb = 0 if b == ZERO else antilog[b]
                    row.append(dec[self._digit_add(ea, eb)])
                rows.append(row)
            self._add_table = rows
            self._zech = None
        else:
            self._add_table = None
            zech = []
            for d in range(q - 1):
                s = self._digit_add(antilog[0], antilog[d])
                zech.append(ZERO if s == 0 else self.log[s])
            self._zech = tuple(zech)

    def _codes(self):
        # table layout: exponents 0..q-2 in slots 0..q-2, ZERO in slot q-1
        # so that Python's index -1 lands on the ZERO row/column
        return list(range(self.q - 1)) + [ZERO]

    def _digit_add(self, ea, eb):
        p = self.p
        if p == 2:
            return ea ^ eb
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((ea + eb) % p) * mult
            ea //= p
            eb //= p
            mult *= p
        return out

    # -- arithmetic on exponent codes ------------------------------------

    def add(self, a, b):
        self.op_count += 1
        if self._add_table is not None:
            return self._add_table[a][b]
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        d = (b - a) % (self.q - 1)
        z = self._zech[d]
        if z == ZERO:
            return ZERO
        return (a + z) % (self.q - 1)

    def sub(self, a, b):
        self.op_count += 1
        if self._add_table is not None:
            return self._add_table[a][self._neg[b]]
        self.op_count -= 1
        return self.add(a, self._neg[b])

    def neg(self, a):
        self.op_count += 1
        return self._neg[a]

    def mul(self, a, b):
        self.op_count += 1
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % (self.q - 1)

    def div(self, a, b):
        self.op_count += 1
        if b == ZERO:
            raise ZeroDivisionError("division by the zero element")
        if a == ZERO:
            return ZERO
        return (a - b) % (self.q - 1)

    def inv(self, a):
        self.op_count += 1
        if a == ZERO:
            raise ZeroDivisionError("inversion of the zero element")
        return (-a) % (self.q - 1)

    def pow(self, a, k):
        """a^k with the substituted-value convention: x^0 = 1 for every x."""
        self.op_count += 1
        if k == 0:
            return ONE
        if a == ZERO:
            if k < 0:
                raise ZeroDivisionError("negative power of the zero element")
            return ZERO
        return (a * k) % (self.q - 1)

    # -- enumeration and text form ---------------------------------------

    def elements(self):
        """All q elements in the canonical order 0, 1, alpha, ..., alpha^(q-2)."""
        yield ZERO
        for k in range(self.q - 1):
            yield k

    def nonzero(self):
        return range(self.q - 1)

    def poly_coeffs(self, a):
        """Base-p coefficient tuple of an element (for inspection)."""
        if a == ZERO:
            return tuple([0] * self.m)
        enc = self.antilog[a]
        out = []
        for _ in range(self.m):
            out.append(enc % self.p)
            enc //= self.p
        return tuple(out)

    def format(self, a):
        return str(a)

    def parse(self, text):
        try:
            a = int(text)
        except ValueError:
            raise FieldError("bad element %r, expected an exponent or -1" % (text,))
        if a == ZERO:
            return ZERO
        if 0 <= a <= self.q - 2:
            return a
        raise FieldError("exponent %d out of range for GF(%d)" % (a, self.q))

    def check_element(self, a):
        if a == ZERO or 0 <= a <= self.q - 2:
            return a
        raise FieldError("bad element code %r for GF(%d)" % (a, self.q))

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return "Field(p=%d, m=%d, q=%d)" % (self.p, self.m, self.q)


def build_field(spec):
    """Construct the log/antilog tables for a FieldSpec (spec op name)."""
    return Field.from_spec(spec)
