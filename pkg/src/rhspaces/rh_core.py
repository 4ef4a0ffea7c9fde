"""Radon-Hurwitz numbers and their window maxima.

Every number here is a Python int, so nothing overflows for large sizes.
Arguments may be half-integers (``p/2`` with ``p`` odd); the Radon-Hurwitz
functions vanish there, which is what makes the window maximum uniform for
odd ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "DyadicFactorization",
    "HalfInteger",
    "factor_dyadic",
    "rho",
    "rho_c",
    "rho_field",
    "sigma",
]

REAL = "real"
COMPLEX = "complex"
FIELDS = (REAL, COMPLEX)


@dataclass(frozen=True)
class DyadicFactorization:
    """``r = 2**(c + 4*d) * odd_part`` with ``0 <= c <= 3``."""

    r: int
    c: int
    d: int
    odd_part: int

    def __post_init__(self) -> None:
        if not 0 <= self.c <= 3 or self.d < 0 or self.odd_part % 2 != 1:
            raise ValueError(f"not a canonical dyadic factorization: {self}")
        if (self.odd_part << (self.c + 4 * self.d)) != self.r:
            raise ValueError(f"factorization does not reassemble to {self.r}")

    @property
    def two_adic_valuation(self) -> int:
        return self.c + 4 * self.d


@dataclass(frozen=True)
class HalfInteger:
    """An exact value ``numerator / denominator`` with denominator 1 or 2."""

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.denominator not in (1, 2):
            raise ValueError("denominator must be 1 or 2")
        if self.denominator == 2 and self.numerator % 2 == 0:
            raise ValueError("use denominator 1 for integral values")

    @classmethod
    def of(cls, value: "HalfIntegerLike") -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not numbers here")
        if isinstance(value, int):
            return cls(value, 1)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not a multiple of 1/2")
            return cls(value.numerator, value.denominator)
        if isinstance(value, str):
            return cls.of(Fraction(value.strip()))
        raise TypeError(f"cannot read {value!r} as a half-integer")

    @classmethod
    def halve(cls, m: int) -> "HalfInteger":
        """``m/2`` in canonical form."""
        return cls(m // 2, 1) if m % 2 == 0 else cls(m, 2)

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    def __str__(self) -> str:
        return str(self.numerator) if self.is_integer else f"{self.numerator}/2"


HalfIntegerLike = Union[HalfInteger, int, Fraction, str]


def factor_dyadic(r: int) -> DyadicFactorization:
    """Split ``r`` as ``2**(c+4d) * odd`` with ``0 <= c <= 3``.

    >>> factor_dyadic(12)
    DyadicFactorization(r=12, c=2, d=0, odd_part=3)
    """
    if isinstance(r, bool) or not isinstance(r, int):
        raise TypeError("r must be an int")
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    v = (r & -r).bit_length() - 1
    d, c = divmod(v, 4)
    return DyadicFactorization(r=r, c=c, d=d, odd_part=r >> v)


def _positive(r: HalfIntegerLike) -> HalfInteger:
    h = HalfInteger.of(r)
    if h.numerator <= 0:
        raise ValueError(f"argument must be positive, got {h}")
    return h


def _rho_int(m: int, field: str) -> int:
    # positive integer m, no validation; shared by the public functions and sigma
    v = (m & -m).bit_length() - 1
    if field == REAL:
        return (1 << (v & 3)) + 8 * (v >> 2)
    return 2 * v + 2


def rho(r: HalfIntegerLike) -> int:
    """Real Radon-Hurwitz number ``2**c + 8*d``; zero at half-integers."""
    h = _positive(r)
    return _rho_int(h.numerator, REAL) if h.is_integer else 0


def rho_c(r: HalfIntegerLike) -> int:
    """Complex Radon-Hurwitz number ``2*(c + 4d) + 2``; zero at half-integers."""
    h = _positive(r)
    return _rho_int(h.numerator, COMPLEX) if h.is_integer else 0


def rho_field(r: HalfIntegerLike, field: str) -> int:
    if field == REAL:
        return rho(r)
    if field == COMPLEX:
        return rho_c(r)
    raise ValueError(f"unknown field {field!r}")


def sigma(n: int, h: int, field: str = REAL) -> int:
    """Maximum of the Radon-Hurwitz number over ``h/2 + j`` for ``0 <= j <= n - h``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    if h % 2:
        # h/2 + j is never an integer
        return 0
    # the window at h = 0 starts at argument 0, where rho is taken to be 0
    start = max(h // 2, 1)
    return max((_rho_int(m, field) for m in range(start, h // 2 + n - h + 1)), default=0)
