"""Exact matrices over the rationals and the Gaussian rationals.

Real entries are ``int`` or :class:`fractions.Fraction`; complex entries are
:class:`GaussianRational`.  Nothing in this module touches floating point.

Rank uses fraction-free (Bareiss) elimination over the integers or the
Gaussian integers after clearing denominators.  Signature uses the same
elimination restricted to symmetric pivots, so the pivots are leading
principal minors of a congruent matrix and their sign pattern gives the
inertia.  :func:`charpoly` (Berkowitz) offers an independent route to the
signature through Descartes' rule of signs.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

__all__ = [
    "GaussianRational",
    "ExactMatrix",
    "Scalar",
    "parse_scalar",
    "format_scalar",
    "mul",
    "add",
    "scale",
    "conjugate_transpose",
    "exact_rank",
    "signature",
    "charpoly",
    "signature_from_charpoly",
]


class GaussianRational:
    """``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return x, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        return GaussianRational(self.re * a - self.im * b, self.re * b + self.im * a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        den = Fraction(a * a + b * b)
        if not den:
            raise ZeroDivisionError("division by zero")
        return GaussianRational((self.re * a + self.im * b) / den, (self.im * a - self.re * b) / den)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(*p) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self) -> int:
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"


I = GaussianRational(0, 1)

Scalar = Union[int, Fraction, GaussianRational]


def _norm(x) -> Scalar:
    if type(x) is int:
        return x
    if isinstance(x, GaussianRational):
        if x.im:
            return x
        x = x.re
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def conj(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, GaussianRational) else x


def parse_scalar(obj) -> Scalar:
    """Read ``"p"``, ``"p/q"`` or ``{"re": ..., "im": ...}``."""
    if isinstance(obj, dict):
        if set(obj) != {"re", "im"}:
            raise ValueError(f"complex entry needs exactly 're' and 'im': {obj!r}")
        return _norm(GaussianRational(parse_scalar(obj["re"]), parse_scalar(obj["im"])))
    if isinstance(obj, str):
        text = obj.strip()
        if not text or any(ch in text for ch in ".eE_ "):
            raise ValueError(f"not a rational literal: {obj!r}")
        return _norm(Fraction(text))
    raise ValueError(f"entries must be strings or re/im objects, got {obj!r}")


def _fmt_real(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar, complex_form: bool = False):
    if isinstance(x, GaussianRational):
        return {"re": _fmt_real(x.re), "im": _fmt_real(x.im)}
    if complex_form:
        return {"re": _fmt_real(x), "im": "0"}
    return _fmt_real(x)


class ExactMatrix:
    """Immutable dense matrix with exact entries, stored row by row."""

    __slots__ = ("data", "nrows", "ncols", "_complex")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_norm(x) for x in row) for row in rows)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        self.data = data
        self.nrows = len(data)
        self.ncols = widths.pop() if widths else (ncols or 0)
        self._complex = None

    @classmethod
    def _raw(cls, data, ncols: int) -> "ExactMatrix":
        # trusted constructor: entries already normalized
        m = object.__new__(cls)
        m.data = data
        m.nrows = len(data)
        m.ncols = ncols
        m._complex = None
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._raw(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "ExactMatrix":
        ncols = nrows if ncols is None else ncols
        return cls._raw(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        rows = []
        for brow in blocks:
            heights = {b.nrows for b in brow}
            if len(heights) != 1:
                raise ValueError("block row heights differ")
            for i in range(heights.pop()):
                rows.append(tuple(x for b in brow for x in b.data[i]))
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise ValueError("block column widths differ")
        return cls._raw(tuple(rows), widths.pop())

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self.data for x in row)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_complex(self) -> bool:
        if self._complex is None:
            self._complex = any(type(x) is GaussianRational for row in self.data for x in row)
        return self._complex

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self.data]!r})"

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            ([a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)), self.ncols
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            ([a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)), self.ncols
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(tuple(-x for x in r) for r in self.data), self.ncols)

    def scale(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix(([c * x for x in r] for r in self.data), self.ncols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        b = other.data
        out = []
        for row in self.data:
            acc = [0] * other.ncols
            # skipping zeros keeps signed-permutation products linear in size
            for k, a in enumerate(row):
                if a:
                    bk = b[k]
                    if a == 1:
                        acc = [s + y for s, y in zip(acc, bk)]
                    elif a == -1:
                        acc = [s - y for s, y in zip(acc, bk)]
                    else:
                        acc = [s + a * y for s, y in zip(acc, bk)]
            out.append(acc)
        return ExactMatrix(out, other.ncols)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(zip(*self.data)) if self.nrows else (), self.nrows)

    @property
    def H(self) -> "ExactMatrix":
        """Conjugate transpose; plain transpose for real matrices."""
        t = self.T
        if not self.is_complex:
            return t
        return ExactMatrix._raw(tuple(tuple(conj(x) for x in r) for r in t.data), t.ncols)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        rows = []
        for r in self.data:
            for s in other.data:
                rows.append([a * b for a in r for b in s])
        return ExactMatrix(rows, self.ncols * other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(([self.data[i][j] for j in cols] for i in rows), len(cols))

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def is_self_adjoint(self) -> bool:
        return self.is_square and self == self.H

    def is_skew_adjoint(self) -> bool:
        return self.is_square and self == -self.H


def mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b


def add(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a + b


def scale(a: ExactMatrix, c: Scalar) -> ExactMatrix:
    return a.scale(c)


def conjugate_transpose(a: ExactMatrix) -> ExactMatrix:
    return a.H


def linear_combination(coeffs: Sequence[Scalar], mats: Sequence[ExactMatrix]) -> ExactMatrix:
    """``sum(c * M)`` with at least one matrix."""
    if len(coeffs) != len(mats):
        raise ValueError(f"{len(coeffs)} coefficients for {len(mats)} matrices")
    if not mats:
        raise ValueError("empty combination has no shape")
    nrows, ncols = mats[0].shape
    acc = [[0] * ncols for _ in range(nrows)]
    for c, m in zip(coeffs, mats):
        if m.shape != (nrows, ncols):
            raise ValueError("shape mismatch in combination")
        if not c:
            continue
        for i, row in enumerate(m.data):
            arow = acc[i]
            for j, x in enumerate(row):
                if x:
                    arow[j] += c * x
    return ExactMatrix(acc, ncols)


# -- integer kernels ------------------------------------------------------
#
# Gaussian-integer matrices are held as two int matrices (real parts,
# imaginary parts) so the inner loops stay on plain ints.


def _denominator(x: Scalar) -> int:
    if type(x) is int:
        return 1
    if type(x) is GaussianRational:
        return lcm(x.re.denominator, x.im.denominator)
    return x.denominator


def _scaled(x: Scalar, f: int) -> tuple[int, int]:
    """Real and imaginary parts of ``f * x`` as ints (``f`` clears denominators)."""
    t = type(x)
    if t is int:
        return x * f, 0
    if t is GaussianRational:
        re, im = x.re, x.im
        return re.numerator * (f // re.denominator), im.numerator * (f // im.denominator)
    return x.numerator * (f // x.denominator), 0


def _integral(m: ExactMatrix, per_row: bool) -> tuple[list[list[int]], list[list[int]] | None]:
    """Clear denominators, per row or by one global positive factor.

    Returns ``(real_parts, imaginary_parts)``; the second is ``None`` for
    real matrices.
    """
    gaussian = m.is_complex
    if not gaussian and all(type(x) is int for row in m.data for x in row):
        return [list(row) for row in m.data], None
    if per_row:
        factors = [lcm(1, *(_denominator(x) for x in row)) for row in m.data]
    else:
        f = lcm(1, *(_denominator(x) for row in m.data for x in row))
        factors = [f] * m.nrows
    re, im = [], []
    for row, f in zip(m.data, factors):
        parts = [_scaled(x, f) for x in row]
        re.append([a for a, _ in parts])
        im.append([b for _, b in parts])
    return re, (im if gaussian else None)


def _bareiss_rank(rows: list[list[int]]) -> int:
    prev = 1
    rank = 0
    while rows and rows[0]:
        piv = next((i for i, row in enumerate(rows) if row[0]), None)
        if piv is None:
            rows = [row[1:] for row in rows]
            continue
        prow = rows.pop(piv)
        p, ptail = prow[0], prow[1:]
        new = []
        for row in rows:
            f = row[0]
            if f:
                new.append([(p * x - f * y) // prev for x, y in zip(row[1:], ptail)])
            else:
                new.append([(p * x) // prev for x in row[1:]])
        rows = new
        prev = p
        rank += 1
    return rank


def _bareiss_rank_gaussian(re: list[list[int]], im: list[list[int]]) -> int:
    rows = list(zip(re, im))
    pr_, pi_ = 1, 0
    rank = 0
    while rows and rows[0][0]:
        piv = next((t for t, (r, i) in enumerate(rows) if r[0] or i[0]), None)
        if piv is None:
            rows = [(r[1:], i[1:]) for r, i in rows]
            continue
        prow_r, prow_i = rows.pop(piv)
        a, b = prow_r[0], prow_i[0]
        tr, ti = prow_r[1:], prow_i[1:]
        norm = pr_ * pr_ + pi_ * pi_
        new = []
        for r, i in rows:
            fr, fi = r[0], i[0]
            xr, xi = r[1:], i[1:]
            nr = [a * u - b * v - fr * y + fi * z for u, v, y, z in zip(xr, xi, tr, ti)]
            ni = [a * v + b * u - fr * z - fi * y for u, v, y, z in zip(xr, xi, tr, ti)]
            if pi_ == 0:
                new.append(([x // pr_ for x in nr], [x // pr_ for x in ni]))
            else:
                new.append((
                    [(x * pr_ + y * pi_) // norm for x, y in zip(nr, ni)],
                    [(y * pr_ - x * pi_) // norm for x, y in zip(nr, ni)],
                ))
        rows = new
        pr_, pi_ = a, b
        rank += 1
    return rank


def exact_rank(m: ExactMatrix) -> int:
    """Rank over the fraction field, by fraction-free elimination."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    re, im = _integral(m, per_row=True)
    if im is None:
        return _bareiss_rank(re)
    return _bareiss_rank_gaussian(re, im)


def _symmetric_inertia(a: list[list[int]]) -> tuple[int, int]:
    """Inertia of an integral symmetric matrix by symmetric Bareiss pivoting.

    Pivots stay on the diagonal, so each pivot is a leading principal minor of
    a congruent matrix and ``sign(pivot * previous_pivot)`` is the sign of the
    corresponding LDL^T diagonal entry.  When the active diagonal is entirely
    zero, the congruence ``row_j += c row_i, col_j += c col_i`` with
    ``c = a_ij`` makes ``a_jj = 2 a_ij^2 > 0``.
    """
    pos = neg = 0
    prev = 1
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i]), None)
        if k is None:
            hit = next(((i, j) for i in range(n) for j in range(i) if a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            c = a[i][j]
            a[j] = [x + c * y for x, y in zip(a[j], a[i])]
            for row in a:
                row[j] += c * row[i]
            k = j
        if k:
            a[0], a[k] = a[k], a[0]
            for row in a:
                row[0], row[k] = row[k], row[0]
        p = a[0][0]
        if (p > 0) == (prev > 0):
            pos += 1
        else:
            neg += 1
        head = a[0][1:]
        a = [
            [(p * x - row[0] * y) // prev for x, y in zip(row[1:], head)] if row[0]
            else [(p * x) // prev for x in row[1:]]
            for row in a[1:]
        ]
        prev = p
    return pos, neg


def _hermitian_inertia(re: list[list[int]], im: list[list[int]]) -> tuple[int, int]:
    """Gaussian-integer version of :func:`_symmetric_inertia`.

    Principal minors of a hermitian matrix are real, so pivots are real ints;
    the zero-diagonal congruence uses ``c = conj(a_ij)`` giving
    ``a_jj = 2 |a_ij|^2``.
    """
    pos = neg = 0
    prev = 1
    while re:
        n = len(re)
        k = next((t for t in range(n) if re[t][t]), None)
        if k is None:
            hit = next(((i, j) for i in range(n) for j in range(i) if re[i][j] or im[i][j]), None)
            if hit is None:
                break
            i, j = hit
            cr, ci = re[i][j], -im[i][j]
            re[j], im[j] = (
                [x + cr * yr - ci * yi for x, yr, yi in zip(re[j], re[i], im[i])],
                [x + cr * yi + ci * yr for x, yr, yi in zip(im[j], re[i], im[i])],
            )
            for t in range(n):
                xr, xi = re[t][i], im[t][i]
                re[t][j] += cr * xr + ci * xi
                im[t][j] += cr * xi - ci * xr
            k = j
        if k:
            for mat in (re, im):
                mat[0], mat[k] = mat[k], mat[0]
                for row in mat:
                    row[0], row[k] = row[k], row[0]
        p = re[0][0]
        if im[0][0]:
            raise ArithmeticError("non-real principal minor of a hermitian matrix")
        if (p > 0) == (prev > 0):
            pos += 1
        else:
            neg += 1
        hr, hi = re[0][1:], im[0][1:]
        new_re, new_im = [], []
        for r, i in zip(re[1:], im[1:]):
            fr, fi = r[0], i[0]
            new_re.append([(p * x - fr * y + fi * z) // prev for x, y, z in zip(r[1:], hr, hi)])
            new_im.append([(p * x - fr * z - fi * y) // prev for x, y, z in zip(i[1:], hr, hi)])
        re, im = new_re, new_im
        prev = p
    return pos, neg


def signature(m: ExactMatrix) -> tuple[int, int]:
    """Return ``(positive, negative)`` eigenvalue counts of a self-adjoint matrix."""
    if not m.is_self_adjoint():
        raise ValueError("signature needs a symmetric or hermitian matrix")
    if m.nrows == 0:
        return 0, 0
    re, im = _integral(m, per_row=False)
    if im is None:
        return _symmetric_inertia(re)
    return _hermitian_inertia(re, im)


def charpoly(m: ExactMatrix) -> list[Scalar]:
    """Coefficients of ``det(t*I - m)``, highest degree first (Berkowitz, division free)."""
    if not m.is_square:
        raise ValueError("charpoly needs a square matrix")
    a = m.data
    p: list = [1]
    for k in range(m.nrows):
        row = a[k][:k]
        v = [a[i][k] for i in range(k)]
        col = [1, -a[k][k]]
        for _ in range(k):
            col.append(-sum((x * y for x, y in zip(row, v)), 0))
            v = [sum((a[i][j] * v[j] for j in range(k)), 0) for i in range(k)]
        p = [
            sum((col[i - j] * p[j] for j in range(len(p)) if 0 <= i - j < len(col)), 0)
            for i in range(k + 2)
        ]
    return [_norm(c) for c in p]


def _sign_changes(coeffs: Sequence[Fraction]) -> int:
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def signature_from_charpoly(m: ExactMatrix) -> tuple[int, int]:
    """Signature via Descartes' rule on the characteristic polynomial.

    Exact because every root is real for self-adjoint input.
    """
    if not m.is_self_adjoint():
        raise ValueError("signature needs a symmetric or hermitian matrix")
    coeffs = charpoly(m)
    if any(isinstance(c, GaussianRational) for c in coeffs):
        raise ArithmeticError("non-real characteristic polynomial")
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    deg = len(coeffs) - 1
    pos = _sign_changes(coeffs)
    # q(-t): flip the sign of odd-degree terms
    neg = _sign_changes([c if (deg - i) % 2 == 0 else -c for i, c in enumerate(coeffs)])
    return pos, neg
