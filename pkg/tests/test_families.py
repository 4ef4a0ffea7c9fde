import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhspaces.exact_linalg import ExactMatrix, I, exact_rank
from rhspaces.families import build_family, cayley_dickson_mul, evaluate, family_failures
from rhspaces.rh_core import rho, rho_c


def test_scalar_family_is_empty():
    assert build_family(1, "real").generators == ()


def test_size_two_real():
    (j,) = build_family(2, "real").generators
    assert j == ExactMatrix([[0, -1], [1, 0]])
    assert j @ j == -ExactMatrix.identity(2)


def test_size_four_real_is_quaternion_left_multiplication():
    li, lj, lk = build_family(4, "real").generators
    # columns are images of the basis (1, i, j, k)
    assert li == ExactMatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    assert lj == ExactMatrix([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
    assert lk == ExactMatrix([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    assert li @ lj == lk


def test_size_two_complex_is_i_times_pauli():
    x = ExactMatrix([[0, 1], [1, 0]])
    y = ExactMatrix([[0, -I], [I, 0]])
    z = ExactMatrix([[1, 0], [0, -1]])
    assert build_family(2, "complex").generators == (x.scale(I), y.scale(I), z.scale(I))


def test_quaternion_and_octonion_tables():
    i, j, k = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert cayley_dickson_mul(i, j) == k
    assert cayley_dickson_mul(j, i) == tuple(-x for x in k)
    # octonions are not associative but are alternative: x(xy) = (xx)y
    rng = random.Random(0)
    for _ in range(20):
        x = tuple(rng.randint(-3, 3) for _ in range(8))
        y = tuple(rng.randint(-3, 3) for _ in range(8))
        assert cayley_dickson_mul(x, cayley_dickson_mul(x, y)) == cayley_dickson_mul(cayley_dickson_mul(x, x), y)
        # the norm is multiplicative
        nx, ny = sum(v * v for v in x), sum(v * v for v in y)
        assert sum(v * v for v in cayley_dickson_mul(x, y)) == nx * ny


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12, 16, 24, 32, 48, 64])
def test_real_family_identities(m):
    fam = build_family(m, "real")
    assert len(fam.generators) == rho(m) - 1
    assert family_failures(fam) == []


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 8, 10, 16, 20])
def test_complex_family_identities(m):
    fam = build_family(m, "complex")
    assert len(fam.generators) == rho_c(m) - 1
    assert family_failures(fam) == []


def test_family_failures_detect_a_bad_generator():
    fam = build_family(4, "real")
    broken = type(fam)(4, "real", (fam.generators[0], fam.generators[0], fam.generators[2]))
    assert any("anticommute" in f for f in family_failures(broken))


def test_determinism():
    build_family.cache_clear()
    first = build_family(32, "real").generators
    build_family.cache_clear()
    second = build_family(32, "real").generators
    assert first == second
    assert [g.data for g in first] == [g.data for g in second]


@pytest.mark.parametrize(
    "m, y, expected",
    [
        (2, (1, 0), ExactMatrix.identity(2)),
        (2, (0, 1), ExactMatrix([[0, -1], [1, 0]])),
        (4, (1, 1, 0, 0), ExactMatrix([[1, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]])),
    ],
)
def test_evaluate_examples(m, y, expected):
    a = evaluate(build_family(m, "real"), y)
    assert a == expected
    assert a.T @ a == ExactMatrix.identity(m).scale(sum(v * v for v in y))


def test_evaluate_length_mismatch():
    with pytest.raises(ValueError):
        evaluate(build_family(4, "real"), (1, 2))


def test_build_family_rejects_bad_size():
    with pytest.raises(ValueError):
        build_family(0, "real")
    with pytest.raises(ValueError):
        build_family(4, "quaternionic")


@pytest.mark.parametrize(
    "m, field",
    [(m, "real") for m in (1, 2, 4, 8, 16, 32, 64)] + [(m, "complex") for m in (1, 2, 4, 8, 16)],
)
def test_span_elements_are_orthogonal_multiples(m, field):
    fam = build_family(m, field)
    rng = random.Random(m * 7 + len(field))
    ident = ExactMatrix.identity(m)
    for _ in range(100):
        y = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(fam.dimension)]
        a = evaluate(fam, y)
        assert a.H @ a == ident.scale(sum(v * v for v in y))
        if any(y) and m <= 16:
            assert exact_rank(a) == m


@settings(max_examples=30, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=6, max_size=6))
def test_complex_combination_is_nonsingular(y):
    a = evaluate(build_family(4, "complex"), y)
    assert a.H @ a == ExactMatrix.identity(4).scale(sum(v * v for v in y))
    assert exact_rank(a) == (4 if any(y) else 0)
