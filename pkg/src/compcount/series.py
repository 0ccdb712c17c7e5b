"""Exact truncated formal power series and rational generating functions.

Coefficients are signed Python ints. Binary operations truncate to the
shorter operand's order, and truncation order is always explicit at the call
site; there is no implicit global precision.
"""

from dataclasses import dataclass

from . import exactnum

Polynomial = tuple[int, ...]


def _poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    size = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    )


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series known exactly through z^order."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the z^0 coefficient")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> int:
        """The coefficient of z^n; beyond the truncation order it is unknown,
        not zero, so asking for it is an error."""
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.coefficients[n]

    def __getitem__(self, n: int) -> int:
        return self.coefficient(n)

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coefficients[i] + other.coefficients[i] for i in range(order + 1))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(c * other for c in self.coefficients))
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, x in enumerate(self.coefficients[: order + 1]):
            if x:
                for j in range(order + 1 - i):
                    out[i + j] += x * other.coefficients[j]
        return TruncatedSeries(tuple(out))

    def __rmul__(self, other: int) -> "TruncatedSeries":
        return self.__mul__(other)

    def shifted(self, exponent: int) -> "TruncatedSeries":
        """Multiply by z^exponent, keeping the truncation order."""
        if exponent < 0:
            raise ValueError("shift exponent must be nonnegative")
        coeffs = (0,) * exponent + self.coefficients
        return TruncatedSeries(coeffs[: self.order + 1])


@dataclass(frozen=True)
class RationalGF:
    """A ratio of integer polynomials, stored as ascending coefficient tuples.

    The denominator's constant term must be nonzero (invertible over the
    rationals); expansion additionally requires it to be +1 or -1 so the
    series coefficients stay integers.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(
            _poly_mul(self.numerator, other.numerator),
            _poly_mul(self.denominator, other.denominator),
        )

    def expand(self, order: int) -> TruncatedSeries:
        return series_from_rational(self, order)


def series_from_rational(gf: RationalGF, order: int) -> TruncatedSeries:
    """Expand numerator/denominator to the given order by long division.

    With denominator d_0 + d_1 z + ... the coefficients satisfy
    c_m = (num_m - sum_{j>=1} d_j c_{m-j}) / d_0, and d_0 = +-1 keeps every
    step in the integers.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num, den = gf.numerator, gf.denominator
    lead = den[0]
    if lead not in (1, -1):
        raise ValueError("denominator constant term must be +1 or -1 for integer expansion")
    coeffs = [0] * (order + 1)
    for m in range(order + 1):
        acc = num[m] if m < len(num) else 0
        for j in range(1, min(m, len(den) - 1) + 1):
            acc -= den[j] * coeffs[m - j]
        coeffs[m] = acc * lead
    return TruncatedSeries(tuple(coeffs))


def gf_all_compositions() -> RationalGF:
    """z / (1 - 2z): the coefficient of z^n is 2^(n-1), the number of all
    compositions of n into positive parts."""
    return RationalGF((0, 1), (1, -2))


def gf_leading_strict(k: int) -> RationalGF:
    """(1-z) z^k / (1 - 2z + z^k): counts compositions whose first part is
    exactly k with all later parts strictly below k."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [0] * k + [1, -1]
    den = [0] * (k + 1)
    den[0] += 1
    den[1] += -2
    den[k] += 1
    return RationalGF(tuple(num), tuple(den))


def gf_leading_weak(k: int) -> RationalGF:
    """(1-z) z^k / (1 - 2z + z^(k+1)): first part exactly k, later parts <= k."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [0] * k + [1, -1]
    den = [0] * (k + 2)
    den[0] += 1
    den[1] += -2
    den[k + 1] += 1
    return RationalGF(tuple(num), tuple(den))


def gf_avoiding(k: int) -> RationalGF:
    """(z - z^k + z^(k+1)) / (1 - 2z + z^k - z^(k+1)): compositions with no
    part equal to k."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [0] * (k + 2)
    num[1] += 1
    num[k] += -1
    num[k + 1] += 1
    den = [0] * (k + 2)
    den[0] += 1
    den[1] += -2
    den[k] += 1
    den[k + 1] += -1
    return RationalGF(tuple(num), tuple(den))


def gf_containing(k: int) -> RationalGF:
    """Compositions with at least one part equal to k: the difference of
    gf_all_compositions and gf_avoiding(k), put over a common denominator."""
    avoid = gf_avoiding(k)
    every = gf_all_compositions()
    num = _poly_sub(
        _poly_mul(every.numerator, avoid.denominator),
        _poly_mul(avoid.numerator, every.denominator),
    )
    return RationalGF(num, _poly_mul(every.denominator, avoid.denominator))


def gf_distinct_total(order: int) -> TruncatedSeries:
    """Series for the number of compositions into distinct parts.

    Sums k! z^(k(k+1)/2) / ((1-z)(1-z^2)...(1-z^k)) over every k whose
    minimal exponent k(k+1)/2 fits inside the order; larger k cannot touch
    any retained coefficient.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    total = TruncatedSeries.zero(order)
    k = 1
    while k * (k + 1) // 2 <= order:
        num = (0,) * (k * (k + 1) // 2) + (exactnum.factorial(k),)
        den: Polynomial = (1,)
        for i in range(1, k + 1):
            den = _poly_mul(den, (1,) + (0,) * (i - 1) + (-1,))
        total = total + series_from_rational(RationalGF(num, den), order)
        k += 1
    return total
