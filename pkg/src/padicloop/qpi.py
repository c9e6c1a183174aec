"""The unramified quadratic extension Q_p(i), p = 3 (mod 4).

Elements are coordinate pairs over the basis {1, i}.  The prime-class
restriction makes -1 a non-residue, which has a pleasant computational
consequence: in re^2 + im^2 the leading digits can never cancel, so the norm
is computed without any precision loss and division is exactly as well
conditioned as multiplication.
"""

from .errors import DivisionByZero, PadicError, ParseError, PrecisionExhausted, WrongPrimeClass
from .padic import INFINITE, PadicNumber, format_padic, from_rational, parse_padic


def _require_prime_class(ctx):
    if ctx.p % 4 != 3:
        raise WrongPrimeClass(
            f"p = {ctx.p} = {ctx.p % 4} (mod 4): Q_p(i) is a field only for p = 3 (mod 4)"
        )


class QpiElement:
    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        _require_prime_class(re.ctx)
        if im is None:
            im = PadicNumber.exact_zero(re.ctx, re.m)
        if re.ctx.p != im.ctx.p:
            raise PadicError("mixed primes in Q_p(i) element")
        self.re = re
        self.im = im

    # ---- factories ----

    @staticmethod
    def from_rationals(re_num, re_den, im_num, im_den, ctx):
        return QpiElement(
            from_rational(re_num, re_den, ctx), from_rational(im_num, im_den, ctx)
        )

    @staticmethod
    def from_gaussian(g, ctx):
        """Embed an exact Gaussian rational (oracle type or Fraction pair)."""
        return QpiElement(
            from_rational(g.re.numerator, g.re.denominator, ctx),
            from_rational(g.im.numerator, g.im.denominator, ctx),
        )

    @staticmethod
    def zero(ctx, m=None):
        _require_prime_class(ctx)
        z = PadicNumber.exact_zero(ctx, m if m is not None else ctx.precision)
        return QpiElement(z, z)

    @staticmethod
    def one(ctx):
        return QpiElement(from_rational(1, 1, ctx))

    @staticmethod
    def i_unit(ctx):
        _require_prime_class(ctx)
        return QpiElement(
            PadicNumber.exact_zero(ctx), from_rational(1, 1, ctx)
        )

    # ---- views ----

    @property
    def ctx(self):
        return self.re.ctx

    @property
    def is_zero(self):
        return self.re.is_zero and self.im.is_zero

    @property
    def is_exact_zero(self):
        return self.re.is_exact_zero and self.im.is_exact_zero

    @property
    def valuation(self):
        """Extended valuation min(v(re), v(im)); INFINITE for the exact zero,
        None when an inexact-zero component leaves it undetermined."""
        known = INFINITE
        bound = INFINITE
        has_bound = False
        for c in (self.re, self.im):
            v = c.valuation
            if v is None:
                has_bound = True
                bound = min(bound, c.m)
            else:
                known = min(known, v)
        if not has_bound:
            return known
        # an inexact zero only caps v from below at its m
        return known if known < bound else None

    @property
    def valuation_lower_bound(self):
        return min(self.re.valuation_lower_bound, self.im.valuation_lower_bound)

    @property
    def known_precision(self):
        # an exact-zero component is infinitely precise and must not cap this
        ms = [c.m for c in (self.re, self.im) if not c.is_exact_zero]
        return min(ms) if ms else INFINITE

    def truncate(self, m_cap):
        return QpiElement(self.re.truncate(m_cap), self.im.truncate(m_cap))

    def eq_to(self, other, m_cap=None):
        return self.re.eq_to(other.re, m_cap) and self.im.eq_to(other.im, m_cap)

    # ---- arithmetic ----

    def conj(self):
        return QpiElement(self.re, -self.im)

    def norm(self):
        """z * conj(z) = re^2 + im^2 as a real scalar; never loses digits."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = _coerce(other, self.ctx)
        return QpiElement(self.re + other.re, self.im + other.im)

    def __radd__(self, other):
        return _coerce(other, self.ctx) + self

    def __sub__(self, other):
        other = _coerce(other, self.ctx)
        return QpiElement(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other, self.ctx) - self

    def __neg__(self):
        return QpiElement(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other, self.ctx)
        a, b, c, d = self.re, self.im, other.re, other.im
        return QpiElement(a * c - b * d, a * d + b * c)

    def __rmul__(self, other):
        return _coerce(other, self.ctx) * self

    def __truediv__(self, other):
        other = _coerce(other, self.ctx)
        if other.is_exact_zero:
            raise DivisionByZero("division by exact zero in Q_p(i)")
        n = other.norm()
        if n.is_zero:
            # anisotropy: re^2 + im^2 cannot cancel, so this means both
            # components are zero to their known precision
            raise PrecisionExhausted(
                "divisor is zero to its known precision in Q_p(i)"
            )
        c = self * other.conj()
        return QpiElement(c.re / n, c.im / n)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return QpiElement.one(self.ctx) / self ** (-k)
        result = QpiElement.one(self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, QpiElement):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        return format_qpi(self)

    def __repr__(self):
        return f"QpiElement({format_qpi(self)})"


def _coerce(x, ctx):
    if isinstance(x, QpiElement):
        return x
    if isinstance(x, PadicNumber):
        return QpiElement(x)
    if isinstance(x, int):
        return QpiElement(from_rational(x, 1, ctx))
    raise PadicError(f"cannot coerce {x!r} into Q_p(i)")


def ext_arith(op, a, b):
    """Field operations with the strict precision contract of padic.arith."""
    if op == "add" or op == "sub":
        result = a + b if op == "add" else a - b
        degenerate = (
            result.re.is_zero_mod
            and result.im.is_zero_mod
            and not (a.re.is_zero and a.im.is_zero)
            and not (b.re.is_zero and b.im.is_zero)
        )
        if degenerate:
            raise PrecisionExhausted(
                "operands agree to their full known precision in both components"
            )
        return result
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise PadicError(f"unknown operation {op!r}")


def conj(z):
    return z.conj()


def norm_abs(z):
    """(z*conj(z), v(z)) with |z|_p = p^(-v(z)); exponent INFINITE for zero."""
    n = z.norm()
    if z.is_exact_zero:
        return n, INFINITE
    return n, z.valuation


def format_qpi(z):
    """Canonical literal; a zero component is omitted, a pure-real value is
    the bare scalar literal."""
    re_zero = z.re.is_zero
    im_zero = z.im.is_zero
    if im_zero and not re_zero:
        return format_padic(z.re)
    if re_zero and not im_zero:
        return f"({format_padic(z.im)})*i"
    if re_zero and im_zero:
        return format_padic(z.re)
    return f"({format_padic(z.re)}) + ({format_padic(z.im)})*i"


def parse_qpi(text, ctx):
    """Inverse of format_qpi; also accepts a lone parenthesized real part."""
    import re as _re

    _require_prime_class(ctx)
    s = text.strip()
    # inner literals contain one paren level of their own (the O-term)
    inner = r"(?:[^()]|\([^()]*\))*"
    m = _re.fullmatch(
        rf"\(\s*(?P<re>{inner})\s*\)\s*\+\s*\(\s*(?P<im>{inner})\s*\)\s*\*\s*i", s
    )
    if m:
        return QpiElement(
            parse_padic(m.group("re"), ctx), parse_padic(m.group("im"), ctx)
        )
    m = _re.fullmatch(rf"\(\s*(?P<im>{inner})\s*\)\s*\*\s*i", s)
    if m:
        return QpiElement(
            PadicNumber.exact_zero(ctx), parse_padic(m.group("im"), ctx)
        )
    m = _re.fullmatch(rf"\(\s*(?P<re>{inner})\s*\)", s)
    if m:
        return QpiElement(parse_padic(m.group("re"), ctx))
    try:
        return QpiElement(parse_padic(s, ctx))
    except ParseError:
        raise ParseError(f"not a Q_p(i) literal: {text!r}")
