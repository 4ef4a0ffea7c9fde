"""Anticommuting families of complex structures.

A family on size ``m`` is a list of matrices ``J_1..J_t`` with ``J_i^2 = -I``,
``J_i J_j = -J_j J_i`` and ``J_i^* = -J_i``.  Together with the identity they
span a space in which ``A(y)^* A(y) = |y|^2 I``, so every nonzero element is
invertible.  The family sizes reach the Radon-Hurwitz bound: ``t = rho(m) - 1``
over the reals and ``t = rho_c(m) - 1`` over the complex numbers.

Real recipe, for ``m = 2**(c + 4d) * u`` with ``u`` odd:

* base on ``2**c``: left multiplications by the imaginary units of the
  Cayley-Dickson algebra of that dimension (nothing, ``i``, quaternions,
  octonions);
* ``d`` times the 16-fold step: with eight anticommuting structures
  ``E_1..E_8`` on size 16 and ``w = E_1 ... E_8`` (symmetric, ``w^2 = I``,
  anticommuting with every ``E_i``), a family ``{J}`` on size ``q`` becomes
  ``{E_i x I_q} + {w x J}`` on size ``16 q``;
* tensor with ``I_u``.

Complex recipe: Jordan-Wigner strings of Pauli matrices times ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exact_linalg import ExactMatrix, GaussianRational, I, linear_combination
from .rh_core import COMPLEX, REAL, factor_dyadic, rho_field

__all__ = ["AnticommutingFamily", "build_family", "evaluate", "family_failures", "cayley_dickson_mul"]


@dataclass(frozen=True)
class AnticommutingFamily:
    m: int
    field: str
    generators: tuple[ExactMatrix, ...]

    @property
    def span_basis(self) -> tuple[ExactMatrix, ...]:
        """``(I, J_1, ..., J_t)``: the real basis of the invertible space."""
        return (ExactMatrix.identity(self.m),) + self.generators

    @property
    def dimension(self) -> int:
        return len(self.generators) + 1


# -- Cayley-Dickson -------------------------------------------------------


def _cd_conj(x: tuple) -> tuple:
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _cd_conj(x[:h]) + tuple(-v for v in x[h:])


def cayley_dickson_mul(x: tuple, y: tuple) -> tuple:
    """Product in the doubled algebra: ``(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))``."""
    if len(x) != len(y):
        raise ValueError("operands from different algebras")
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    first = tuple(p - q for p, q in zip(cayley_dickson_mul(a, c), cayley_dickson_mul(_cd_conj(d), b)))
    second = tuple(p + q for p, q in zip(cayley_dickson_mul(d, a), cayley_dickson_mul(b, _cd_conj(c))))
    return first + second


def _unit(k: int, dim: int) -> tuple:
    return tuple(1 if i == k else 0 for i in range(dim))


def _left_mul_matrix(k: int, dim: int) -> ExactMatrix:
    cols = [cayley_dickson_mul(_unit(k, dim), _unit(j, dim)) for j in range(dim)]
    return ExactMatrix([[cols[j][i] for j in range(dim)] for i in range(dim)])


def _base_family(c: int) -> tuple[ExactMatrix, ...]:
    dim = 1 << c
    return tuple(_left_mul_matrix(k, dim) for k in range(1, dim))


# -- 16-fold periodicity --------------------------------------------------

_R = ExactMatrix([[0, -1], [1, 0]])
_Q = ExactMatrix([[1, 0], [0, -1]])


@lru_cache(maxsize=None)
def _period_structures() -> tuple[tuple[ExactMatrix, ...], ExactMatrix]:
    octo = _base_family(3)
    e = tuple(o.kron(_Q) for o in octo) + (ExactMatrix.identity(8).kron(_R),)
    w = ExactMatrix.identity(16)
    for x in e:
        w = w @ x
    ident = ExactMatrix.identity(16)
    if w @ w != ident or w.T != w:
        raise AssertionError("volume element is not a symmetric involution")
    for x in e:
        if w @ x != -(x @ w):
            raise AssertionError("volume element does not anticommute with the structures")
    return e, w


def _step16(gens: tuple[ExactMatrix, ...], q: int) -> tuple[ExactMatrix, ...]:
    e, w = _period_structures()
    iq = ExactMatrix.identity(q)
    return tuple(x.kron(iq) for x in e) + tuple(w.kron(j) for j in gens)


# -- complex --------------------------------------------------------------

_PX = ExactMatrix([[0, 1], [1, 0]])
_PY = ExactMatrix([[0, -I], [I, 0]])
_PZ = ExactMatrix([[1, 0], [0, -1]])


def _kron_all(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    out = ExactMatrix.identity(1)
    for x in mats:
        out = out.kron(x)
    return out


def _jordan_wigner(b: int) -> tuple[ExactMatrix, ...]:
    one = ExactMatrix.identity(2)
    gammas = []
    for j in range(1, b + 1):
        for p in (_PX, _PY):
            gammas.append(_kron_all([_PZ] * (j - 1) + [p] + [one] * (b - j)))
    gammas.append(_kron_all([_PZ] * b))
    return tuple(g.scale(I) for g in gammas)


@lru_cache(maxsize=None)
def build_family(m: int, field: str = REAL) -> AnticommutingFamily:
    """Canonical family of ``rho_field(m) - 1`` anticommuting complex structures on size ``m``."""
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError("m must be an int")
    if m <= 0:
        raise ValueError(f"m must be positive, got {m}")
    f = factor_dyadic(m)
    if field == REAL:
        gens = _base_family(f.c)
        size = 1 << f.c
        for _ in range(f.d):
            gens = _step16(gens, size)
            size *= 16
    elif field == COMPLEX:
        gens = _jordan_wigner(f.two_adic_valuation)
    else:
        raise ValueError(f"unknown field {field!r}")
    if f.odd_part > 1:
        iu = ExactMatrix.identity(f.odd_part)
        gens = tuple(g.kron(iu) for g in gens)
    family = AnticommutingFamily(m=m, field=field, generators=gens)
    assert family.dimension == rho_field(m, field)
    return family


def evaluate(family: AnticommutingFamily, y: Sequence) -> ExactMatrix:
    """``y_0 I + sum y_i J_i``."""
    if len(y) != family.dimension:
        raise ValueError(f"expected {family.dimension} coefficients, got {len(y)}")
    if any(isinstance(v, GaussianRational) and v.im for v in y):
        raise ValueError("coefficients must be real")
    return linear_combination(list(y), family.span_basis)


def family_failures(family: AnticommutingFamily) -> list[str]:
    """Every violated family identity, as readable strings; empty when sound."""
    out = []
    gens = family.generators
    if len(gens) != rho_field(family.m, family.field) - 1:
        out.append(f"expected {rho_field(family.m, family.field) - 1} generators, got {len(gens)}")
    minus_one = -ExactMatrix.identity(family.m)
    allowed = {0, 1, -1} if family.field == REAL else {0, 1, -1, I, -I}
    for i, j_i in enumerate(gens):
        if j_i.shape != (family.m, family.m):
            out.append(f"J{i + 1} has shape {j_i.shape}")
            continue
        if family.field == REAL and j_i.is_complex:
            out.append(f"J{i + 1} has non-real entries")
        if not j_i.is_skew_adjoint():
            out.append(f"J{i + 1} is not skew-adjoint")
        if j_i @ j_i != minus_one:
            out.append(f"J{i + 1}^2 != -I")
        if any(x not in allowed for x in j_i.entries):
            out.append(f"J{i + 1} has entries outside {{0, +-1, +-i}}")
        for k in range(i):
            j_k = gens[k]
            if not (j_i @ j_k + j_k @ j_i).is_zero():
                out.append(f"J{i + 1} and J{k + 1} do not anticommute")
    return out
