"""Exact real algebraic scalars.

A NumberField designates one real root of a monic squarefree integer
polynomial by a rational bracketing interval.  KScalar values are residues
in Q[t]/(p) read at that root; CKScalar adjoins sqrt(-1).  All decisions
(sign, comparison, floor) are made by exact interval refinement, never by
floating point.

Limitation: the minimal polynomial is checked for squarefreeness only.  A
reducible p keeps sign() sound (a gcd certificate detects residues that
vanish at the designated root) but division can hit a zero divisor of
Q[t]/(p), which raises ZeroDivisionError.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import rpoly
from .errors import MixedFields


class NumberField:
    def __init__(self, min_poly, lo, hi):
        p = rpoly.poly(min_poly)
        if rpoly.degree(p) < 1:
            raise ValueError("min_poly must have degree >= 1")
        if p[-1] != 1:
            raise ValueError("min_poly must be monic")
        if any(c.denominator != 1 for c in p):
            raise ValueError("min_poly must have integer coefficients")
        if not rpoly.is_squarefree(p):
            raise ValueError("min_poly must be squarefree")
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("root_interval must satisfy lo < hi")
        if rpoly.peval(p, lo) * rpoly.peval(p, hi) >= 0:
            raise ValueError("min_poly must change sign on the root interval")
        self.min_poly = p
        self.degree = rpoly.degree(p)
        self._lo0, self._hi0 = lo, hi
        self._chain = rpoly.sturm_chain(p)
        self._bracket = (lo, hi)
        while rpoly.count_roots(p, *self._bracket, chain=self._chain) != 1:
            self._refine_once()

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls([0, 1], -1, 1)

    @property
    def root_interval(self):
        return self._bracket

    def _refine_once(self):
        lo, hi = self._bracket
        p = self.min_poly
        mid = (lo + hi) / 2
        pm = rpoly.peval(p, mid)
        if pm == 0:
            # mid is a rational simple root; shrink symmetrically around it
            delta = (hi - lo) / 4
            while True:
                a, b = mid - delta, mid + delta
                if (rpoly.peval(p, a) * rpoly.peval(p, b) < 0
                        and rpoly.count_roots(p, a, b, chain=self._chain) == 1):
                    self._bracket = (a, b)
                    return
                delta /= 2
        if rpoly.peval(p, lo) * pm < 0:
            self._bracket = (lo, mid)
        else:
            self._bracket = (mid, hi)

    def refine_bracket(self):
        self._refine_once()
        return self._bracket

    def scalar(self, x) -> "KScalar":
        if isinstance(x, KScalar):
            if x.field != self:
                raise MixedFields("scalar belongs to a different field")
            return x
        if isinstance(x, (int, Fraction)):
            return KScalar(self, rpoly.poly([x]))
        if isinstance(x, (list, tuple)):
            return KScalar(self, rpoly.pmod(rpoly.poly(x), self.min_poly))
        raise TypeError(f"cannot build a field scalar from {type(x).__name__}")

    def gen(self) -> "KScalar":
        return self.scalar([0, 1])

    def ck(self, re=0, im=0) -> "CKScalar":
        return CKScalar(self.scalar(re), self.scalar(im))

    @property
    def zero(self) -> "KScalar":
        return self.scalar(0)

    @property
    def one(self) -> "KScalar":
        return self.scalar(1)

    @property
    def ck_zero(self) -> "CKScalar":
        return self.ck(0, 0)

    @property
    def ck_one(self) -> "CKScalar":
        return self.ck(1, 0)

    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.min_poly == other.min_poly
                and self._lo0 == other._lo0 and self._hi0 == other._hi0)

    def __hash__(self):
        return hash((self.min_poly, self._lo0, self._hi0))

    def __repr__(self):
        return f"NumberField({list(self.min_poly)}, {self._lo0}, {self._hi0})"


def common_field(*fields) -> NumberField:
    fields = [f for f in fields if f is not None]
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise MixedFields("operands reference different number fields")
    return first


@dataclass(frozen=True)
class KScalar:
    field: NumberField
    coeffs: tuple

    def _coerce(self, other):
        if isinstance(other, KScalar):
            common_field(self.field, other.field)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KScalar(self.field, rpoly.padd(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return KScalar(self.field, rpoly.pneg(self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KScalar(self.field, rpoly.pmod(rpoly.pmul(self.coeffs, o.coeffs), self.field.min_poly))

    __rmul__ = __mul__

    def inverse(self) -> "KScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        g, s, _ = rpoly.pxgcd(self.coeffs, self.field.min_poly)
        if rpoly.degree(g) != 0:
            raise ZeroDivisionError(
                "residue is a zero divisor of Q[t]/(p); the modulus is reducible")
        return KScalar(self.field, rpoly.pmod(s, self.field.min_poly))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field.scalar(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_part(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.rational_part()

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_part().denominator == 1

    def sign(self) -> int:
        """Exact sign of the represented real number (-1, 0, +1)."""
        if self.is_zero():
            return 0
        if self.field.degree == 1 or self.is_rational():
            c = self.rational_part()
            return (c > 0) - (c < 0)
        g = rpoly.pgcd(self.coeffs, self.field.min_poly)
        if rpoly.degree(g) >= 1 and rpoly.count_roots(g, *self.field._bracket) >= 1:
            # residue vanishes at the designated root (reducible modulus)
            return 0
        while True:
            lo, hi = self.field._bracket
            mn, mx = rpoly.peval_interval(self.coeffs, lo, hi)
            if mn > 0:
                return 1
            if mx < 0:
                return -1
            self.field.refine_bracket()

    def floor(self) -> int:
        if self.is_rational():
            q = self.rational_part()
            return q.numerator // q.denominator
        while True:
            lo, hi = self.field._bracket
            mn, mx = rpoly.peval_interval(self.coeffs, lo, hi)
            fl, fh = mn.numerator // mn.denominator, mx.numerator // mx.denominator
            if fl == fh:
                return fl
            self.field.refine_bracket()

    def compare(self, other) -> int:
        o = self._coerce(other)
        return (self - o).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def to_float(self) -> float:
        lo, hi = self.field._bracket
        for _ in range(80):
            if hi - lo < Fraction(1, 10**20):
                break
            lo, hi = self.field.refine_bracket()
        root = (lo + hi) / 2
        return float(rpoly.peval(self.coeffs, root))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class CKScalar:
    re: KScalar
    im: KScalar

    @property
    def field(self) -> NumberField:
        return self.re.field

    def _coerce(self, other):
        if isinstance(other, CKScalar):
            common_field(self.field, other.field)
            return other
        if isinstance(other, (int, Fraction, KScalar)):
            return CKScalar(self.field.scalar(other), self.field.zero)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CKScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CKScalar(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CKScalar(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "CKScalar":
        return CKScalar(self.re, -self.im)

    def inverse(self) -> "CKScalar":
        n = self.re * self.re + self.im * self.im
        if n.is_zero():
            raise ZeroDivisionError("division by zero")
        ninv = n.inverse()
        return CKScalar(self.re * ninv, -(self.im * ninv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def to_complex(self) -> complex:
        return complex(self.re.to_float(), self.im.to_float())

    def __repr__(self):
        return f"({self.re!r}, {self.im!r})"
