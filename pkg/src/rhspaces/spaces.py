"""Explicit constant-rank spaces of symmetric and hermitian matrices.

Three constructions, each carrying a certificate that the verifier can check
by finite exact arithmetic on the basis:

* block form ``[[x I, A], [A^*, -x I]]`` with ``A`` in an invertible family
  on size ``n/2`` (full rank, :class:`SquareIdentity`);
* row deletion ``[[0, B], [B^*, 0]]`` where ``B`` is ``A`` with its last
  ``s`` rows removed (rank ``n - s``, :class:`FactorIdentity`);
* zero padding of a smaller space into the lower-right corner
  (:class:`Padding`).

Hermitian spaces use the same block forms with conjugate transposes and the
complex families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .exact_linalg import ExactMatrix, linear_combination
from .families import build_family
from .rh_core import COMPLEX, REAL, rho_field

__all__ = [
    "SquareIdentity",
    "FactorIdentity",
    "Padding",
    "Certificate",
    "MatrixSpace",
    "build_space",
    "dimension_formula",
    "block_space",
    "row_deletion_space",
    "pad_space",
    "validate_query",
]

MAX_CORANK = {REAL: 2, COMPLEX: 1}


@dataclass(frozen=True)
class SquareIdentity:
    """``G_i G_j + G_j G_i = 2 delta_ij I``: every nonzero combination squares to ``|v|^2 I``."""

    kind = "square"


@dataclass(frozen=True)
class FactorIdentity:
    """``G_i = [[0, B_i], [B_i^*, 0]]`` with ``B_i B_j^* + B_j B_i^* = 2 delta_ij I_p``."""

    p: int
    kind = "factor"


@dataclass(frozen=True)
class Padding:
    """``G_i = [[0, 0], [0, H_i]]`` with ``H_i`` the certified inner basis."""

    removed: int
    inner: "MatrixSpace"
    kind = "padding"


Certificate = Union[SquareIdentity, FactorIdentity, Padding]


@dataclass(frozen=True)
class MatrixSpace:
    field: str
    n: int
    rank: int
    basis: tuple[ExactMatrix, ...]
    certificate: Optional[Certificate] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def element(self, coeffs: Sequence) -> ExactMatrix:
        if not self.basis:
            if any(coeffs):
                raise ValueError("the zero space has no nonzero elements")
            return ExactMatrix.zeros(self.n)
        return linear_combination(list(coeffs), self.basis)


def validate_query(field: str, n: int, s: int) -> None:
    if field not in MAX_CORANK:
        raise ValueError(f"unknown field {field!r}")
    if not 0 <= s <= MAX_CORANK[field]:
        raise ValueError(f"corank {s} is outside the supported range 0..{MAX_CORANK[field]} for {field}")
    if n <= s:
        raise ValueError(f"need n > s, got n={n}, s={s}")


def block_space(field: str, n: int) -> MatrixSpace:
    """Full-rank space ``[[x I, A(y)], [A(y)^*, -x I]]`` on even ``n``."""
    if n % 2 or n < 2:
        raise ValueError("block construction needs even n >= 2")
    h = n // 2
    fam = build_family(h, field)
    one, zero = ExactMatrix.identity(h), ExactMatrix.zeros(h)
    basis = [ExactMatrix.block([[one, zero], [zero, -one]])]
    basis += [ExactMatrix.block([[zero, j], [j.H, zero]]) for j in fam.span_basis]
    return MatrixSpace(field, n, n, tuple(basis), SquareIdentity())


def row_deletion_space(field: str, n: int, s: int) -> MatrixSpace:
    """Rank ``n - s`` space from an invertible family on ``(n+s)/2`` minus its last ``s`` rows."""
    if (n - s) % 2 or s < 1 or n <= s:
        raise ValueError("row deletion needs s >= 1 and n - s even and positive")
    m = (n + s) // 2
    p = m - s
    fam = build_family(m, field)
    top_left, bottom_right = ExactMatrix.zeros(p), ExactMatrix.zeros(m)
    basis = []
    for a in fam.span_basis:
        b = a.submatrix(range(p), range(m))
        basis.append(ExactMatrix.block([[top_left, b], [b.H, bottom_right]]))
    return MatrixSpace(field, n, 2 * p, tuple(basis), FactorIdentity(p))


def pad_space(inner: MatrixSpace, removed: int = 1) -> MatrixSpace:
    """Embed ``inner`` in the lower-right corner behind ``removed`` zero rows and columns."""
    if removed < 1:
        raise ValueError("padding must add at least one row and column")
    z = ExactMatrix.zeros
    basis = tuple(
        ExactMatrix.block([[z(removed), z(removed, inner.n)], [z(inner.n, removed), g]]) for g in inner.basis
    )
    return MatrixSpace(inner.field, inner.n + removed, inner.rank, basis, Padding(removed, inner))


def _scalar_line(field: str, n: int, k: int) -> MatrixSpace:
    core = MatrixSpace(field, k, k, (ExactMatrix.identity(k),), SquareIdentity())
    return core if k == n else pad_space(core, n - k)


def dimension_formula(field: str, n: int, s: int) -> int:
    """Dimension of :func:`build_space` without building any matrix."""
    validate_query(field, n, s)
    k = n - s
    if k % 2:
        return 1
    if s == 0:
        return rho_field(n // 2, field) + 1
    return max(dimension_formula(field, n - 1, s - 1), rho_field((n + s) // 2, field))


@lru_cache(maxsize=None)
def build_space(field: str, n: int, s: int) -> MatrixSpace:
    """Best construction for rank ``n - s`` among block, padding and row deletion.

    Odd ranks get the line through ``diag(0, .., 0, 1, .., 1)``.  Between
    padding and row deletion the larger wins; ties go to padding.
    """
    validate_query(field, n, s)
    k = n - s
    if k % 2:
        return _scalar_line(field, n, k)
    if s == 0:
        return block_space(field, n)
    padded_dim = dimension_formula(field, n - 1, s - 1)
    if rho_field((n + s) // 2, field) > padded_dim:
        return row_deletion_space(field, n, s)
    return pad_space(build_space(field, n - 1, s - 1))
