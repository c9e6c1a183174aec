"""Exact Q_p arithmetic with rigorously tracked finite precision.

A nonzero value is (valuation v, unit digits, absolute precision m): it equals
unit * p^v modulo p^m, with p not dividing unit, so |x|_p = p^-v exactly and
m - v digits are tracked.  The unit is kept as a single Python integer in
[1, p^(m-v)); digit extraction is done only for formatting.

Zero comes in two flavours.  The exact zero is a distinguished value (the loop
identity needs one) and is infinitely precise in arithmetic; it carries m only
so it can be printed as O(p^m).  A value that merely cancelled down to
"zero modulo p^m" is kept as an inexact zero: arithmetic treats it as an
unknown multiple of p^m.  The literal grammar has a single zero form, so both
print as O(p^m); parsing yields the exact zero.
"""

from .context import PrimeContext
from .errors import (
    DivisionByZero,
    NonSquare,
    PadicError,
    ParseError,
    PrecisionExhausted,
    ZeroDenominator,
)

INFINITE = float("inf")

_NONZERO = 0
_EXACT_ZERO = 1
_ZERO_MOD = 2


def vp_int(n, p):
    """Valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicNumber:
    __slots__ = ("ctx", "kind", "v", "unit", "r", "m")

    def __init__(self, ctx, kind, v, unit, r, m):
        # use the factory methods; this constructor assumes normalized input
        self.ctx = ctx
        self.kind = kind
        self.v = v
        self.unit = unit
        self.r = r
        self.m = m

    # ---- factories ----

    @staticmethod
    def exact_zero(ctx, m=None):
        if m is None:
            m = ctx.precision
        return PadicNumber(ctx, _EXACT_ZERO, None, 0, 0, m)

    @staticmethod
    def zero_mod(ctx, m):
        return PadicNumber(ctx, _ZERO_MOD, None, 0, 0, m)

    @staticmethod
    def make(ctx, v, unit, m):
        """Normalize unit * p^v known modulo p^m into canonical form."""
        r = m - v
        if r <= 0:
            return PadicNumber.zero_mod(ctx, m)
        unit %= ctx.pow(r)
        if unit == 0:
            return PadicNumber.zero_mod(ctx, m)
        d = vp_int(unit, ctx.p)
        if d:
            v += d
            r -= d
            unit //= ctx.pow(d)
        return PadicNumber(ctx, _NONZERO, v, unit, r, m)

    @staticmethod
    def from_digits(ctx, v, digits, m=None):
        u = 0
        for d in reversed(digits):
            u = u * ctx.p + d
        if m is None:
            m = v + len(digits)
        return PadicNumber.make(ctx, v, u, m)

    # ---- predicates and views ----

    @property
    def is_zero(self):
        return self.kind != _NONZERO

    @property
    def is_exact_zero(self):
        return self.kind == _EXACT_ZERO

    @property
    def is_zero_mod(self):
        return self.kind == _ZERO_MOD

    @property
    def valuation(self):
        """v with |x|_p = p^-v; INFINITE for the exact zero, None when unknown."""
        if self.kind == _NONZERO:
            return self.v
        if self.kind == _EXACT_ZERO:
            return INFINITE
        return None

    @property
    def known_precision(self):
        return self.m

    @property
    def valuation_lower_bound(self):
        """Provable lower bound on v: exact for nonzero, m for an inexact zero."""
        if self.kind == _NONZERO:
            return self.v
        if self.kind == _EXACT_ZERO:
            return INFINITE
        return self.m

    @property
    def leading_digit(self):
        if self.kind != _NONZERO:
            return 0
        return self.unit % self.ctx.p

    def unit_digits(self):
        """The r tracked digits of the unit part, lowest power first."""
        out = []
        u = self.unit
        for _ in range(self.r):
            u, d = divmod(u, self.ctx.p)
            out.append(d)
        return out

    def digits(self):
        """Digit list starting at the valuation, trailing zeros trimmed."""
        if self.kind != _NONZERO:
            return []
        out = self.unit_digits()
        while out and out[-1] == 0:
            out.pop()
        return out

    def truncate(self, m_cap):
        """Forget everything beyond p^m_cap."""
        if self.kind == _EXACT_ZERO:
            return self if m_cap >= self.m else PadicNumber.exact_zero(self.ctx, m_cap)
        if m_cap >= self.m:
            return self
        if self.kind == _ZERO_MOD:
            return PadicNumber.zero_mod(self.ctx, m_cap)
        if self.v >= m_cap:
            return PadicNumber.zero_mod(self.ctx, m_cap)
        return PadicNumber(
            self.ctx, _NONZERO, self.v, self.unit % self.ctx.pow(m_cap - self.v),
            m_cap - self.v, m_cap,
        )

    def shift(self, k):
        """Multiply by p^k (exact)."""
        if self.kind != _NONZERO:
            return PadicNumber(self.ctx, self.kind, None, 0, 0, self.m + k)
        return PadicNumber(self.ctx, _NONZERO, self.v + k, self.unit, self.r, self.m + k)

    def eq_to(self, other, m_cap=None):
        """Equality of digit strings modulo p^min(m, other.m, m_cap)."""
        a, b = self, other
        m = min(a.m if not a.is_exact_zero else b.m,
                b.m if not b.is_exact_zero else a.m)
        if m_cap is not None:
            m = min(m, m_cap)
        a = a.truncate(m)
        b = b.truncate(m)
        if a.kind != _NONZERO or b.kind != _NONZERO:
            return a.kind != _NONZERO and b.kind != _NONZERO
        return a.v == b.v and a.unit == b.unit

    # ---- arithmetic (tolerant: inexact zeros flow through) ----

    def _check(self, other):
        if self.ctx.p != other.ctx.p:
            raise PadicError("mixed primes")

    def __neg__(self):
        if self.kind != _NONZERO:
            return self
        return PadicNumber(
            self.ctx, _NONZERO, self.v, self.ctx.pow(self.r) - self.unit, self.r, self.m
        )

    def __add__(self, other):
        self._check(other)
        a, b = self, other
        if a.kind == _EXACT_ZERO:
            return b
        if b.kind == _EXACT_ZERO:
            return a
        if a.kind == _ZERO_MOD and b.kind == _ZERO_MOD:
            return PadicNumber.zero_mod(a.ctx, min(a.m, b.m))
        if a.kind == _ZERO_MOD:
            return b.truncate(min(a.m, b.m))
        if b.kind == _ZERO_MOD:
            return a.truncate(min(a.m, b.m))
        m = min(a.m, b.m)
        v0 = min(a.v, b.v)
        k = m - v0  # >= 1: each operand has a digit below its m
        pk = a.ctx.pow(k)
        s = (a.unit * a.ctx.pow(a.v - v0) + b.unit * b.ctx.pow(b.v - v0)) % pk
        return PadicNumber.make(a.ctx, v0, s, m)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        a, b = self, other
        if a.kind != _NONZERO or b.kind != _NONZERO:
            if a.kind == _NONZERO:
                a, b = b, a
            # a is a zero; scale its modulus by the partner's size
            shift = b.v if b.kind == _NONZERO else b.m
            kind = a.kind
            if b.kind == _EXACT_ZERO:
                kind = _EXACT_ZERO
            return PadicNumber(a.ctx, kind, None, 0, 0, a.m + shift)
        r = min(a.r, b.r)
        pr = a.ctx.pow(r)
        return PadicNumber(
            a.ctx, _NONZERO, a.v + b.v, (a.unit * b.unit) % pr, r, a.v + b.v + r
        )

    def __truediv__(self, other):
        self._check(other)
        a, b = self, other
        if b.kind == _EXACT_ZERO:
            raise DivisionByZero("division by exact zero")
        if b.kind == _ZERO_MOD:
            raise PrecisionExhausted(
                f"divisor is zero to its known precision O({b.ctx.p}^{b.m})"
            )
        if a.kind != _NONZERO:
            return PadicNumber(a.ctx, a.kind, None, 0, 0, a.m - b.v)
        r = min(a.r, b.r)
        pr = a.ctx.pow(r)
        u = (a.unit * a.ctx.inv_mod(b.unit % pr, r)) % pr
        v = a.v - b.v
        return PadicNumber(a.ctx, _NONZERO, v, u, r, v + r)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return from_rational(1, 1, self.ctx) / self ** (-k)
        result = from_rational(1, 1, self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ---- structural identity (round-trip contract) ----

    def __eq__(self, other):
        if not isinstance(other, PadicNumber):
            return NotImplemented
        if self.ctx.p != other.ctx.p or self.kind != other.kind:
            return False
        if self.kind == _EXACT_ZERO:
            # m on an exact zero is display metadata, not information
            return True
        return (
            self.v == other.v
            and self.unit == other.unit
            and self.r == other.r
            and self.m == other.m
        )

    def __hash__(self):
        if self.kind == _EXACT_ZERO:
            return hash((self.ctx.p, self.kind))
        return hash((self.ctx.p, self.kind, self.v, self.unit, self.m))

    def __str__(self):
        return format_padic(self)

    def __repr__(self):
        return f"PadicNumber({format_padic(self)})"


def from_rational(num, den, ctx):
    """The p-adic expansion of num/den to ctx.precision significant digits."""
    if den == 0:
        raise ZeroDenominator("denominator is zero")
    if num == 0:
        return PadicNumber.exact_zero(ctx)
    vn = vp_int(num, ctx.p)
    vd = vp_int(den, ctx.p)
    v = vn - vd
    n = ctx.precision
    pn = ctx.pow(n)
    u = (num // ctx.pow(vn)) * ctx.inv_mod((den // ctx.pow(vd)) % pn, n) % pn
    return PadicNumber(ctx, _NONZERO, v, u % pn, n, v + n)


def from_int(n, ctx):
    return from_rational(n, 1, ctx)


def arith(op, a, b):
    """The four field operations with the strict precision contract.

    Unlike the operators, an add/sub that cancels every tracked digit of two
    bona fide nonzero operands raises PrecisionExhausted: no digit of the
    result is determinable, not even its being zero.
    """
    if op == "add" or op == "sub":
        result = a + b if op == "add" else a - b
        if result.kind == _ZERO_MOD and a.kind == _NONZERO and b.kind == _NONZERO:
            raise PrecisionExhausted(
                "operands agree to their full known precision; no result digit "
                "is determinable"
            )
        return result
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise PadicError(f"unknown operation {op!r}")


def _sqrt_mod_p(a, p):
    """Tonelli-Shanks: a square root of the residue a modulo p, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, sq = 0, t
        while sq != 1:
            sq = sq * sq % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def sqrt(a, ctx=None):
    """Canonical square root: the branch whose leading digit is <= (p-1)/2.

    Newton lifting on the unit part doubles the correct digits each pass, so
    the cost is a handful of modular multiplications at full width.
    """
    if ctx is None:
        ctx = a.ctx
    if a.kind == _EXACT_ZERO:
        return a
    if a.kind == _ZERO_MOD:
        raise PrecisionExhausted(
            "argument is zero to its known precision; square root undetermined"
        )
    if a.v % 2 != 0:
        raise NonSquare(f"odd valuation {a.v}")
    p = ctx.p
    x0 = _sqrt_mod_p(a.unit, p)
    if x0 is None or x0 == 0:
        raise NonSquare(f"leading digit {a.unit % p} is not a quadratic residue mod {p}")
    r = a.r
    x, k = x0, 1
    while k < r:
        k = min(2 * k, r)
        pk = ctx.pow(k)
        x = (x + (a.unit % pk) * ctx.inv_mod(x, k)) * ctx.inv_mod(2, k) % pk
    if x % p > (p - 1) // 2:
        x = ctx.pow(r) - x
    v = a.v // 2
    return PadicNumber(ctx, _NONZERO, v, x, r, v + r)


def format_padic(a):
    """Canonical literal: `d + d*p + d*p^k + ... + O(p^m)`, zero digits omitted."""
    p = a.ctx.p
    if a.kind != _NONZERO:
        return f"O({p}^{a.m})"
    terms = []
    u = a.unit
    k = a.v
    while u:
        u, d = divmod(u, p)
        if d:
            if k == 0:
                terms.append(f"{d}")
            elif k == 1:
                terms.append(f"{d}*{p}")
            else:
                terms.append(f"{d}*{p}^{k}")
        k += 1
    terms.append(f"O({p}^{a.m})")
    return " + ".join(terms)


def parse_padic(text, ctx):
    """Inverse of format_padic on canonical literals (whitespace-flexible)."""
    import re

    p = ctx.p
    parts = re.split(r"\s*\+\s*", text.strip())
    if not parts or parts == [""]:
        raise ParseError("empty literal")
    o_match = re.fullmatch(r"O\(\s*(\d+)\s*\^\s*(-?\d+)\s*\)", parts[-1])
    if o_match is None:
        raise ParseError(f"literal must end with an O({p}^m) term", len(text))
    if int(o_match.group(1)) != p:
        raise ParseError(
            f"O-term base {o_match.group(1)} does not match context prime {p}"
        )
    m = int(o_match.group(2))
    if len(parts) == 1:
        return PadicNumber.exact_zero(ctx, m)
    pairs = []
    for part in parts[:-1]:
        t = re.fullmatch(
            r"(\d+)(?:\s*\*\s*(\d+)(?:\s*\^\s*(-?\d+))?)?", part.strip()
        )
        if t is None:
            raise ParseError(f"bad term {part!r}", text.find(part))
        d = int(t.group(1))
        if t.group(2) is None:
            k = 0
        else:
            if int(t.group(2)) != p:
                raise ParseError(f"term base {t.group(2)} does not match prime {p}")
            k = 1 if t.group(3) is None else int(t.group(3))
        if not 1 <= d < p:
            raise ParseError(f"digit {d} out of range 1..{p - 1} in {part!r}")
        pairs.append((k, d))
    powers = [k for k, _ in pairs]
    if sorted(powers) != powers or len(set(powers)) != len(powers):
        raise ParseError("term powers must be strictly ascending")
    v = powers[0]
    if m <= powers[-1]:
        raise ParseError(f"precision O(^{m}) does not cover the term at p^{powers[-1]}")
    u = 0
    for k, d in pairs:
        u += d * ctx.pow(k - v)
    return PadicNumber(ctx, _NONZERO, v, u, m - v, m)
