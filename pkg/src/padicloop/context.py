"""Prime context: the odd prime p and the requested working precision."""

from .errors import PadicError


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeContext:
    """Carries p and the significant-digit count N every constructor targets.

    Immutable; safe to share between threads.  Powers of p are cached because
    every normalization reduces modulo some p^k.
    """

    __slots__ = ("p", "precision", "_powers")

    def __init__(self, p, precision=32):
        if not isinstance(p, int) or not is_prime(p):
            raise PadicError(f"p must be prime, got {p}")
        if p == 2:
            raise PadicError("p = 2 is not supported; the series bounds need p odd")
        if not isinstance(precision, int) or precision < 1:
            raise PadicError(f"precision must be a positive integer, got {precision}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "_powers", [1, p])

    def __setattr__(self, name, value):
        raise AttributeError("PrimeContext is immutable")

    @property
    def residue_class(self):
        return self.p % 4

    def pow(self, k):
        """p**k for k >= 0, cached."""
        powers = self._powers
        while len(powers) <= k:
            powers.append(powers[-1] * self.p)
        return powers[k]

    def inv_mod(self, u, k):
        """Inverse of the unit u modulo p**k."""
        return pow(u, -1, self.pow(k))

    def __eq__(self, other):
        return (
            isinstance(other, PrimeContext)
            and self.p == other.p
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash((self.p, self.precision))

    def __repr__(self):
        return f"PrimeContext(p={self.p}, precision={self.precision})"
