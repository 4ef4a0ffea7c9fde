"""Checking that a matrix space really has constant rank.

The certificate check is a complete proof: finitely many exact identities on
the basis imply the rank of every nonzero real combination.  Sampling is the
second line of defence, and the only one for spaces imported without a
certificate.

Random samples come from SplitMix64 so reports are reproducible anywhere:
each coefficient is ``next() % 19 - 9`` and all-zero vectors are redrawn.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .exact_linalg import ExactMatrix, GaussianRational, exact_rank, signature
from .spacefile import space_digest
from .spaces import FactorIdentity, MatrixSpace, Padding, SquareIdentity

__all__ = ["SplitMix64", "VerificationReport", "certificate_failure", "check_certificate", "verify_space"]

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def coefficient(self) -> int:
        return self.next() % 19 - 9


@dataclass
class VerificationReport:
    space_id: str
    certificate_ok: bool
    certificate_reason: Optional[str]
    samples_tested: int
    rank_failures: list[tuple[int, ...]]
    signature_ok: Optional[bool]
    independence_ok: bool
    self_adjoint_ok: bool
    signature_failures: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.certificate_ok
            and self.independence_ok
            and self.self_adjoint_ok
            and not self.rank_failures
            and self.signature_ok is not False
        )

    def to_json(self) -> dict:
        return {
            "space_id": self.space_id,
            "passed": self.passed,
            "certificate_ok": self.certificate_ok,
            "certificate_reason": self.certificate_reason,
            "samples_tested": self.samples_tested,
            "rank_failures": [list(v) for v in self.rank_failures],
            "signature_ok": "not-applicable" if self.signature_ok is None else self.signature_ok,
            "signature_failures": [list(v) for v in self.signature_failures],
            "independence_ok": self.independence_ok,
            "self_adjoint_ok": self.self_adjoint_ok,
        }


# -- certificates ---------------------------------------------------------


def _square_failure(space: MatrixSpace) -> Optional[str]:
    if space.rank != space.n:
        return f"square certificate proves rank {space.n}, space claims {space.rank}"
    g = space.basis
    ident2 = ExactMatrix.identity(space.n).scale(2)
    zero = ExactMatrix.zeros(space.n)
    prods = [[a @ b for b in g] for a in g]
    for i in range(len(g)):
        for j in range(i, len(g)):
            expected = ident2 if i == j else zero
            if prods[i][j] + prods[j][i] != expected:
                rhs = "2I" if i == j else "0"
                return f"square: G{i + 1}G{j + 1} + G{j + 1}G{i + 1} != {rhs}"
    return None


def _factor_failure(space: MatrixSpace, p: int) -> Optional[str]:
    n = space.n
    if not 0 < p < n:
        return f"factor: block size p={p} out of range for n={n}"
    if space.rank != 2 * p:
        return f"factor certificate proves rank {2 * p}, space claims {space.rank}"
    top, bottom = range(p), range(p, n)
    blocks = []
    for idx, g in enumerate(space.basis):
        if not g.submatrix(top, top).is_zero() or not g.submatrix(bottom, bottom).is_zero():
            return f"factor: G{idx + 1} has nonzero diagonal blocks"
        b = g.submatrix(top, bottom)
        if g.submatrix(bottom, top) != b.H:
            return f"factor: lower-left block of G{idx + 1} is not B{idx + 1}^*"
        blocks.append(b)
    ident2 = ExactMatrix.identity(p).scale(2)
    zero = ExactMatrix.zeros(p)
    for i, bi in enumerate(blocks):
        for j in range(i, len(blocks)):
            bj = blocks[j]
            expected = ident2 if i == j else zero
            if bi @ bj.H + bj @ bi.H != expected:
                rhs = "2I" if i == j else "0"
                return f"factor: B{i + 1}B{j + 1}^* + B{j + 1}B{i + 1}^* != {rhs}"
    return None


def _padding_failure(space: MatrixSpace, cert: Padding) -> Optional[str]:
    inner, r = cert.inner, cert.removed
    if inner.n + r != space.n or inner.field != space.field:
        return "padding: inner space does not fit"
    if inner.rank != space.rank:
        return f"padding: inner rank {inner.rank} differs from claimed rank {space.rank}"
    if inner.dimension != space.dimension:
        return "padding: inner dimension differs"
    lower = range(r, space.n)
    for idx, (g, h) in enumerate(zip(space.basis, inner.basis)):
        if any(g.data[i][j] for i in range(r) for j in range(space.n)):
            return f"padding: G{idx + 1} has a nonzero padded row"
        if any(g.data[i][j] for i in lower for j in range(r)):
            return f"padding: G{idx + 1} has a nonzero padded column"
        if g.submatrix(lower, lower) != h:
            return f"padding: G{idx + 1} is not the embedded inner basis matrix"
    reason = certificate_failure(inner)
    return None if reason is None else f"padding > {reason}"


def certificate_failure(space: MatrixSpace) -> Optional[str]:
    """``None`` when the certificate holds, else the first failing identity."""
    cert = space.certificate
    if cert is None:
        return "missing"
    if any(g.shape != (space.n, space.n) for g in space.basis):
        return "basis matrices are not n x n"
    if isinstance(cert, SquareIdentity):
        return _square_failure(space)
    if isinstance(cert, FactorIdentity):
        return _factor_failure(space, cert.p)
    if isinstance(cert, Padding):
        return _padding_failure(space, cert)
    raise TypeError(f"malformed certificate: {cert!r}")


def check_certificate(space: MatrixSpace) -> bool:
    if space.certificate is None and space.dimension == 0:
        return True
    return certificate_failure(space) is None


# -- sampling -------------------------------------------------------------


def structured_samples(dim: int) -> Iterator[tuple[int, ...]]:
    """Basis vectors, pairwise sums and differences, and the all-ones vector."""
    for i in range(dim):
        yield tuple(1 if t == i else 0 for t in range(dim))
    for i in range(dim):
        for j in range(i + 1, dim):
            yield tuple(1 if t in (i, j) else 0 for t in range(dim))
            yield tuple(1 if t == i else -1 if t == j else 0 for t in range(dim))
    if dim > 1:
        yield (1,) * dim


def random_samples(dim: int, count: int, seed: int) -> Iterator[tuple[int, ...]]:
    if dim == 0:
        return
    rng = SplitMix64(seed)
    for _ in range(count):
        while True:
            v = tuple(rng.coefficient() for _ in range(dim))
            if any(v):
                break
        yield v


def _real_vector(m: ExactMatrix, is_complex: bool) -> list:
    out = []
    for x in m.entries:
        if isinstance(x, GaussianRational):
            out.extend((x.re, x.im))
        elif is_complex:
            out.extend((x, 0))
        else:
            out.append(x)
    return out


def basis_independent(space: MatrixSpace) -> bool:
    """Linear independence over the rationals (real and imaginary parts split)."""
    if not space.basis:
        return True
    is_complex = space.field == "complex"
    vecs = ExactMatrix([_real_vector(g, is_complex) for g in space.basis])
    return exact_rank(vecs) == space.dimension


def _self_adjoint(space: MatrixSpace) -> bool:
    for g in space.basis:
        if g.shape != (space.n, space.n) or not g.is_self_adjoint():
            return False
        if space.field == "real" and g.is_complex:
            return False
    return True


def verify_space(space: MatrixSpace, samples: int = 200, seed: int = 0) -> VerificationReport:
    """Run every check on ``space``; failures are reported, never raised."""
    reason = None if check_certificate(space) else certificate_failure(space)
    self_adjoint = _self_adjoint(space)
    dim, k = space.dimension, space.rank
    sig_applicable = self_adjoint and dim >= 2 and k % 2 == 0
    rank_failures, sig_failures = set(), set()
    tested = 0
    vectors = list(structured_samples(dim)) + list(random_samples(dim, samples, seed))
    for v in vectors:
        tested += 1
        m = space.element(v)
        if exact_rank(m) != k:
            rank_failures.add(v)
        if sig_applicable and signature(m) != (k // 2, k // 2):
            sig_failures.add(v)
    return VerificationReport(
        space_id=space_digest(space),
        certificate_ok=reason is None,
        certificate_reason=reason,
        samples_tested=tested,
        rank_failures=sorted(rank_failures),
        signature_ok=(not sig_failures) if sig_applicable else None,
        independence_ok=basis_independent(space),
        self_adjoint_ok=self_adjoint,
        signature_failures=sorted(sig_failures),
    )
