"""Bounds on the largest dimension of a constant-rank space.

For ``n x n`` real symmetric matrices of rank ``k = n - s`` (``s <= 2``) and
hermitian ones (``s <= 1``) the maximal dimension lies in
``[sigma, sigma + 1]`` where ``sigma`` is the Radon-Hurwitz window maximum.
:func:`classify` narrows that interval with the known exactness results and
reports which rule decided it.

``lower`` is the dimension of the best explicit construction (see
:mod:`rhspaces.spaces`), so ``lower == upper`` exactly when the answer is
known.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .rh_core import COMPLEX, REAL, factor_dyadic, rho, rho_field, sigma
from .spaces import validate_query

__all__ = ["BoundQuery", "BoundReport", "classify", "RULES"]

EXACT = "exact"
UNKNOWN = "unknown"

RULES = {
    "rank-zero": "only the zero space has all nonzero elements of rank 0",
    "odd-rank:inferred": "odd rank forbids a constant-rank circle through A and -A; scalar lines exist",
    "upper-attained": "sigma equals the Radon-Hurwitz number of half the rank; upper bound attained",
    "real-s1:optimal-lower": "(n+1)/2 is 2 or has c in {2,3}; lower bound optimal",
    "real-s1:undecided": "(n+1)/2 has c in {0,1}; optimality not decided",
    "real-s2:undecided": "corank 2 with sigma above rho((n-2)/2); optimality not decided",
    "hermitian:optimal-lower": "hermitian case where the upper bound is not attained; lower bound optimal",
}


@dataclass(frozen=True)
class BoundQuery:
    field: str
    n: int
    s: int

    def __post_init__(self) -> None:
        validate_query(self.field, self.n, self.s)

    @property
    def k(self) -> int:
        return self.n - self.s


@dataclass(frozen=True)
class BoundReport:
    field: str
    n: int
    s: int
    sigma: int
    lower: int
    upper: int
    status: str
    rule: str

    def __post_init__(self) -> None:
        if not self.lower <= self.upper <= self.lower + 1:
            raise AssertionError(f"inconsistent interval [{self.lower}, {self.upper}]")
        if (self.status == EXACT) != (self.lower == self.upper):
            raise AssertionError("status disagrees with the interval")
        if not self.sigma <= self.lower <= self.sigma + 1:
            raise AssertionError("lower bound outside [sigma, sigma + 1]")

    @property
    def k(self) -> int:
        return self.n - self.s

    @property
    def value(self) -> int | None:
        return self.lower if self.status == EXACT else None

    def to_json(self) -> dict:
        d = asdict(self)
        d["k"] = self.k
        return d


def classify(q: BoundQuery | None = None, *, field: str = REAL, n: int = 0, s: int = 0) -> BoundReport:
    """Decide the interval for ``d_X(n - s)``.

    Accepts a :class:`BoundQuery` or keyword arguments.
    """
    if q is None:
        q = BoundQuery(field, n, s)
    field, n, s, k = q.field, q.n, q.s, q.k

    def report(sig: int, lower: int, upper: int, rule: str) -> BoundReport:
        status = EXACT if lower == upper else UNKNOWN
        return BoundReport(field, n, s, sig, lower, upper, status, rule)

    if k == 0:
        return report(0, 0, 0, "rank-zero")
    sig = sigma(n, k, field)
    if k % 2:
        return report(sig, 1, 1, "odd-rank:inferred")
    if sig == rho_field(k // 2, field):
        return report(sig, sig + 1, sig + 1, "upper-attained")
    if field == REAL:
        if s == 1:
            # sigma is then rho((n+1)/2)
            m = (n + 1) // 2
            if m == 2 or factor_dyadic(m).c in (2, 3):
                return report(sig, sig, sig, "real-s1:optimal-lower")
            return report(sig, sig, sig + 1, "real-s1:undecided")
        assert s == 2 and sig > rho((n - 2) // 2)
        return report(sig, sig, sig + 1, "real-s2:undecided")
    return report(sig, sig, sig, "hermitian:optimal-lower")
