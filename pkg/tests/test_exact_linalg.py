import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import leibniz_det, rank_by_minors
from rhspaces.exact_linalg import (
    ExactMatrix,
    GaussianRational,
    I,
    add,
    charpoly,
    conjugate_transpose,
    exact_rank,
    format_scalar,
    mul,
    parse_scalar,
    scale,
    signature,
    signature_from_charpoly,
)
from rhspaces.spaces import build_space

small = st.integers(min_value=-3, max_value=3)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
gaussians = st.builds(GaussianRational, rationals, rationals)


def matrices(elements, max_size=4, square=False):
    def build(shape):
        r, c = shape
        return st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r).map(ExactMatrix)

    sizes = st.integers(min_value=1, max_value=max_size)
    shapes = sizes.map(lambda n: (n, n)) if square else st.tuples(sizes, sizes)
    return shapes.flatmap(build)


def test_basic_ops():
    a = ExactMatrix([[1, 2], [3, Fraction(1, 2)]])
    assert mul(ExactMatrix.identity(2), a) == a
    assert add(a, scale(a, -1)).is_zero()
    assert conjugate_transpose(ExactMatrix([[I]])) == ExactMatrix([[-I]])
    assert conjugate_transpose(a) == a.T


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) + ExactMatrix.zeros(2, 3)
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        ExactMatrix([[0.5]])


@pytest.mark.parametrize(
    "rows, expected",
    [([[1, 0], [0, 1]], 2), ([[0, 0], [0, 0]], 0), ([[1, 2], [2, 4]], 1), ([[0, 1, 2]], 1), ([[0], [0], [3]], 1)],
)
def test_rank_examples(rows, expected):
    assert exact_rank(ExactMatrix(rows)) == expected


def test_rank_identity():
    for n in (1, 5, 17):
        assert exact_rank(ExactMatrix.identity(n)) == n


@pytest.mark.parametrize(
    "diag, expected", [([1, -1], (1, 1)), ([2, 3, 0], (2, 0)), ([0, 0], (0, 0)), ([Fraction(-1, 3)], (0, 1))]
)
def test_signature_examples(diag, expected):
    m = ExactMatrix.diag(diag)
    assert signature(m) == expected
    assert signature_from_charpoly(m) == expected


def test_signature_of_block_space_element():
    space = build_space("real", 4, 0)
    m = space.element([1, 2, -1])
    assert charpoly(m) == [1, 0, -12, 0, 36]  # (t^2 - 6)^2
    assert signature(m) == signature_from_charpoly(m) == (2, 2)


def test_signature_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        signature(ExactMatrix([[0, 1], [0, 0]]))


def test_signature_zero_diagonal_needs_congruence():
    m = ExactMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    assert signature(m) == (1, 1)
    h = ExactMatrix([[0, I], [-I, 0]])
    assert signature(h) == (1, 1)
    h2 = ExactMatrix([[0, 1 + I, 0], [1 - I, 0, 2], [0, 2, 0]])
    assert signature(h2) == signature_from_charpoly(h2)


def test_gaussian_arithmetic():
    z = GaussianRational(1, 2)
    assert z * z.conjugate() == 5
    assert z / z == 1
    assert (z - z) == 0 and not (z - z)
    assert I * I == -1
    assert 2 * z == GaussianRational(2, 4)
    assert 1 / I == -I


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@pytest.mark.parametrize("text, value", [("3", 3), ("-2/4", Fraction(-1, 2)), ({"re": "1", "im": "-1/2"}, GaussianRational(1, Fraction(-1, 2)))])
def test_scalar_text_round_trip(text, value):
    x = parse_scalar(text)
    assert x == value
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize("bad", ["1.5", "", "x", 3, {"re": "1"}, "1e3"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_rank_matches_minor_oracle_on_500_random_matrices():
    rng = random.Random(1234)
    for _ in range(500):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.3 and r > 1:
            rows[-1] = [x * rng.randint(-2, 2) for x in rows[0]]
        assert exact_rank(ExactMatrix(rows)) == rank_by_minors(rows)


@given(matrices(rationals))
def test_rank_matches_minors_rational(m):
    assert exact_rank(m) == rank_by_minors([list(r) for r in m.data])


@given(matrices(gaussians, max_size=3))
def test_rank_matches_minors_gaussian(m):
    assert exact_rank(m) == rank_by_minors([list(r) for r in m.data])


def _random_symmetric(rng, n, complex_entries=False):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = rng.randint(-3, 3)
        for j in range(i):
            x = rng.randint(-3, 3)
            if complex_entries:
                x = GaussianRational(x, rng.randint(-3, 3))
                a[i][j], a[j][i] = x, x.conjugate()
            else:
                a[i][j] = a[j][i] = x
    if rng.random() < 0.3:
        k = rng.randrange(n)
        for t in range(n):
            a[k][t] = 0
            a[t][k] = 0
    return ExactMatrix(a)


def _random_invertible(rng, n, complex_entries=False):
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if complex_entries:
            rows = [[GaussianRational(x, rng.randint(-2, 2)) for x in row] for row in rows]
        if leibniz_det(rows):
            return ExactMatrix(rows)


def test_signature_congruence_invariance_100_cases():
    rng = random.Random(99)
    for case in range(100):
        n = rng.randint(1, 4)
        herm = case % 4 == 3
        m = _random_symmetric(rng, n, herm)
        s = _random_invertible(rng, n, herm)
        p, q = signature(m)
        assert p + q == exact_rank(m)
        assert signature(s.H @ m @ s) == (p, q)
        assert signature_from_charpoly(m) == (p, q)


@given(matrices(rationals, square=True))
def test_charpoly_and_elimination_signatures_agree(m):
    sym = m + m.T
    assert signature(sym) == signature_from_charpoly(sym)
    p, q = signature(sym)
    assert p + q == exact_rank(sym)


@given(matrices(gaussians, max_size=4, square=True))
def test_hermitian_charpoly_is_real(m):
    h = m + m.H
    coeffs = charpoly(h)
    assert all(not isinstance(c, GaussianRational) for c in coeffs)
    assert signature(h) == signature_from_charpoly(h)


@given(matrices(small, square=True))
def test_charpoly_constant_term_is_signed_determinant(m):
    coeffs = charpoly(m)
    det = leibniz_det([list(r) for r in m.data])
    assert coeffs[0] == 1
    assert coeffs[-1] == (-1) ** m.nrows * det
