"""2x2 matrices over Q_p(i): the carrier for Pauli vectors, rotations and
left-translation representatives."""

from .errors import DivisionByZero, PadicError, PrecisionExhausted
from .qpi import QpiElement


class Mat2:
    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11, m12, m21, m22):
        self.m11 = m11
        self.m12 = m12
        self.m21 = m21
        self.m22 = m22

    @property
    def ctx(self):
        return self.m11.ctx

    @staticmethod
    def identity(ctx):
        one = QpiElement.one(ctx)
        zero = QpiElement.zero(ctx)
        return Mat2(one, zero, zero, one)

    @staticmethod
    def zero(ctx):
        z = QpiElement.zero(ctx)
        return Mat2(z, z, z, z)

    @staticmethod
    def diag(a, d):
        zero = QpiElement.zero(a.ctx)
        return Mat2(a, zero, zero, d)

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def __add__(self, other):
        return Mat2(*(a + b for a, b in zip(self.entries(), other.entries())))

    def __sub__(self, other):
        return Mat2(*(a - b for a, b in zip(self.entries(), other.entries())))

    def __neg__(self):
        return Mat2(*(-a for a in self.entries()))

    def __mul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self.entries()
            e, f, g, h = other.entries()
            return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s):
        return Mat2(*(a * s for a in self.entries()))

    def scale_div(self, s):
        return Mat2(*(a / s for a in self.entries()))

    def trace(self):
        return self.m11 + self.m22

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def adjugate(self):
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def conj_entrywise(self):
        return Mat2(*(a.conj() for a in self.entries()))

    def inverse(self):
        d = self.det()
        if d.is_exact_zero:
            raise DivisionByZero("singular matrix")
        if d.is_zero:
            raise PrecisionExhausted("determinant is zero to its known precision")
        return self.adjugate().scale_div(d)

    def min_valuation(self):
        """min over entries of the extended valuation; None when an entry is
        only known to vanish mod p^m, INFINITE for the zero matrix."""
        vs = []
        for a in self.entries():
            v = a.valuation
            if v is None:
                return None
            vs.append(v)
        return min(vs)

    @property
    def valuation_lower_bound(self):
        return min(a.valuation_lower_bound for a in self.entries())

    @property
    def known_precision(self):
        return min(a.known_precision for a in self.entries())

    def truncate(self, m_cap):
        return Mat2(*(a.truncate(m_cap) for a in self.entries()))

    def eq_to(self, other, m_cap=None):
        return all(
            a.eq_to(b, m_cap) for a, b in zip(self.entries(), other.entries())
        )

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __repr__(self):
        return f"Mat2[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"
