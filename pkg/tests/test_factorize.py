"""Block-Toeplitz windows, minor sweeps, Schur certificates, and the
numeric whirl factorization with its orbit-aware comparison."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsym.factorize import (
    BlockToeplitzWindow,
    NoConvergence,
    NoRealFactorization,
    NotUniUpperTriangular,
    orbit_match,
    skew_schur_certificate,
    skew_schur_value,
    tnn_check,
    toeplitz_window,
    whirl_factorize,
)
from loopsym.lsym import LoopVarArray, loop_schur_jt, whirl_product
from loopsym.matpoly import MatrixPoly, extract_e
from loopsym.rmatrix import apply_word
from loopsym.shapes import SkewShape, partitions_in_box


def _example_2x2():
    return MatrixPoly.from_coeff_matrices(
        2, [[[1, 2], [4, 7]], [[4, -2], [0, 1]], [[9, 0], [6, -1]]]
    )


def _skew_shapes_in_box(rows, cols):
    out = []
    for outer in partitions_in_box(rows, cols):
        for inner in partitions_in_box(rows, cols):
            if outer.contains(inner):
                out.append(SkewShape(outer, inner))
    return out


def _random_product(rng, n, m):
    vals = [[rng.uniform(0.1, 2.0) for _ in range(n)] for _ in range(m)]
    return LoopVarArray.numeric(n, m, vals)


# ---------------------------------------------------------------------------
# windows


def test_window_shifted_by_one_block():
    W = toeplitz_window(_example_2x2(), 3, offset=1)
    assert W.matrix == (
        (4, -2, 9, 0, 0, 0),
        (0, 1, 6, -1, 0, 0),
        (1, 2, 4, -2, 9, 0),
        (4, 7, 0, 1, 6, -1),
        (0, 0, 1, 2, 4, -2),
        (0, 0, 4, 7, 0, 1),
    )


def test_window_principal_blocks():
    P = _example_2x2()
    W = toeplitz_window(P, 3)
    n = 2
    for bi in range(3):
        for bj in range(3):
            for i in range(n):
                for j in range(n):
                    want = P.coeff(i + 1, j + 1, bj - bi) if bj >= bi else 0
                    assert W.matrix[bi * n + i][bj * n + j] == want


def test_window_identity():
    W = toeplitz_window(MatrixPoly.identity(3), 2)
    assert W.size == 6
    for i in range(1, 7):
        for j in range(1, 7):
            assert W.entry(i, j) == (1 if i == j else 0)


def test_window_scalar_upper_triangular():
    a1, a2 = Fraction(3), Fraction(5)
    W = toeplitz_window(MatrixPoly(1, [[(1, a1, a2)]]), 4)
    diags = {0: 1, 1: a1, 2: a2}
    for i in range(1, 5):
        for j in range(1, 5):
            assert W.entry(i, j) == diags.get(j - i, 0)


def test_window_growth_restricts():
    P = _example_2x2()
    small = toeplitz_window(P, 3).matrix
    big = toeplitz_window(P, 4).matrix
    for i in range(6):
        assert big[i][:6] == small[i]


def test_window_rejects_empty():
    with pytest.raises(ValueError):
        toeplitz_window(_example_2x2(), 0)


def test_window_minor_accessor():
    W = toeplitz_window(MatrixPoly(1, [[(1, 1)]]), 3)
    assert W.minor((1, 2), (1, 2)) == 1
    assert W.minor((1,), (2,)) == 1
    assert W.minor((2,), (1,)) == 0


# ---------------------------------------------------------------------------
# minor sweeps


def test_tnn_negative_entry_flagged():
    report = tnn_check(MatrixPoly(1, [[(1, -1)]]), 2, 1)
    assert not report.passed
    assert ((1,), (2,), -1) in report.violations


def test_tnn_complex_roots_show_within_small_window():
    # 1 + t + t^2 has complex roots; entries stay nonnegative but an
    # order-3 minor goes negative once the window reaches four blocks
    P = MatrixPoly(1, [[(1, 1, 1)]])
    assert tnn_check(P, 3, 2).passed
    report = tnn_check(P, 4, 3)
    assert not report.passed
    assert all(value == -1 for _, _, value in report.violations)
    assert ((1, 2, 3), (2, 3, 4), -1) in report.violations


def test_tnn_whirl_product_passes():
    vals = [
        [Fraction(1), Fraction(2)],
        [Fraction(1, 2), Fraction(3)],
        [Fraction(2), Fraction(1)],
    ]
    P = whirl_product(LoopVarArray.numeric(2, 3, vals))
    report = tnn_check(P, 4, 3)
    assert report.passed
    assert report.checked == sum(
        _choose(8, k) ** 2 for k in range(1, 4)
    )


def _choose(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=2),
        min_size=1,
        max_size=3,
    )
)
def test_tnn_whirl_products_always_pass(vals):
    arr = LoopVarArray.numeric(2, len(vals), [[Fraction(v) for v in col] for col in vals])
    assert tnn_check(whirl_product(arr), 3, 2).passed


def test_tnn_float_tolerance():
    P = MatrixPoly(1, [[(1.0, 1.0 - 1e-13)]])
    assert tnn_check(P, 2, 2).passed


def _first_violation(P, max_window):
    for w in range(1, max_window + 1):
        if not tnn_check(P, w, w).passed:
            return w
    return None


def test_tnn_scalar_root_classification():
    # nonnegative-coefficient scalars: totally nonnegative iff real-rooted;
    # complex roots always show a negative minor within deg + 3 blocks
    real_rooted = [(1, 3, 2), (1, 2, 1), (1, 5, 6), (1, 1)]
    complex_rooted = [(1, 1, 1), (1, 0, 1), (1, 1, 2), (1, 2, 3), (1, 3, 4, 2)]
    for coeffs in real_rooted:
        P = MatrixPoly(1, [[coeffs]])
        assert _first_violation(P, len(coeffs) + 2) is None
    for coeffs in complex_rooted:
        P = MatrixPoly(1, [[coeffs]])
        w = _first_violation(P, len(coeffs) + 2)
        assert w is not None and w <= len(coeffs) + 2


# ---------------------------------------------------------------------------
# Schur certificates


def test_certificate_whirl_product_nonnegative():
    vals = [
        [Fraction(1), Fraction(2)],
        [Fraction(1, 2), Fraction(3)],
        [Fraction(2), Fraction(1)],
    ]
    P = whirl_product(LoopVarArray.numeric(2, 3, vals))
    report = skew_schur_certificate(extract_e(P), _skew_shapes_in_box(3, 3), 2)
    assert report.passed
    assert report.checked == 2 * len(_skew_shapes_in_box(3, 3))


def test_certificate_trivial_table():
    shapes = _skew_shapes_in_box(3, 3)
    report = skew_schur_certificate({}, shapes, 2)
    assert report.passed
    assert skew_schur_value({}, (), 1, 2) == 1
    assert skew_schur_value({}, (1,), 1, 2) == 0
    assert skew_schur_value({}, SkewShape((2, 1), (1,)), 2, 2) == 0


def test_certificate_flags_negative_column():
    table = {(1, 1): 0, (2, 1): -1}
    report = skew_schur_certificate(table, [(1, 1)], 1)
    assert not report.passed
    shape, r, value = report.negatives[0]
    assert shape == SkewShape((1, 1)) and r == 1 and value == -1


def test_certificate_matches_direct_evaluation():
    vals = [
        [Fraction(2), Fraction(1)],
        [Fraction(1), Fraction(3)],
        [Fraction(1, 2), Fraction(1)],
    ]
    arr = LoopVarArray.numeric(2, 3, vals)
    table = extract_e(whirl_product(arr))
    for shape in [SkewShape((2, 1)), SkewShape((2, 2), (1,)), SkewShape((3, 1, 1))]:
        for r in (1, 2):
            want = loop_schur_jt(2, shape, r, 3, arr)
            assert skew_schur_value(table, shape, r, 2) == want


# ---------------------------------------------------------------------------
# factorization


def test_factorize_scalar_quadratic():
    result = whirl_factorize(MatrixPoly(1, [[(1, 3, 2)]]), 2)
    assert result.converged and result.residual <= 1e-12
    got = sorted(result.params.value(i, 1) for i in (1, 2))
    assert got == pytest.approx([1.0, 2.0])


def test_factorize_scalar_pads_missing_factors():
    result = whirl_factorize(MatrixPoly(1, [[(1, 2)]]), 3)
    got = sorted(result.params.value(i, 1) for i in (1, 2, 3))
    assert got == pytest.approx([0.0, 0.0, 2.0])
    assert result.converged


def test_factorize_complex_roots_rejected():
    with pytest.raises(NoRealFactorization):
        whirl_factorize(MatrixPoly(1, [[(1, 1, 1)]]), 2)


def test_factorize_requires_uni_upper():
    with pytest.raises(NotUniUpperTriangular):
        whirl_factorize(MatrixPoly(2, [[(2,), ()], [(), (1,)]]), 1)
    with pytest.raises(NotUniUpperTriangular):
        whirl_factorize(MatrixPoly(2, [[(1,), ()], [(1,), (1,)]]), 1)


def test_factorize_rejects_bad_counts():
    with pytest.raises(ValueError):
        whirl_factorize(MatrixPoly.identity(2), 0)
    with pytest.raises(ValueError):
        whirl_factorize(MatrixPoly(1, [[(1, 2, 3, 4)]]), 2)


def test_factorize_identity():
    result = whirl_factorize(MatrixPoly.identity(2), 1)
    assert result.converged and result.residual == 0
    assert [result.params.value(1, j) for j in (1, 2)] == [0.0, 0.0]


def test_factorize_round_trip_small():
    rng = random.Random(4)
    src = _random_product(rng, 2, 2)
    result = whirl_factorize(whirl_product(src), 2)
    assert result.converged and result.residual <= 1e-8
    assert orbit_match(src, result.params)


def test_factorize_round_trip_many():
    rng = random.Random(2026)
    worst = 0.0
    for _ in range(100):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        src = _random_product(rng, n, m)
        result = whirl_factorize(whirl_product(src), m)
        assert result.converged
        worst = max(worst, result.residual)
    assert worst <= 1e-8


def test_factorize_degree_overflow_stalls():
    P = MatrixPoly(2, [[(1,), (0, 0, 0, 1)], [(), (1,)]])
    with pytest.raises(NoConvergence):
        whirl_factorize(P, 2)


def test_factorize_single_whirl_mismatch_reports_failure():
    # (1, 2) entry of one whirl factor is constant, so t there cannot match
    P = MatrixPoly(2, [[(1,), (0, 1)], [(), (1,)]])
    result = whirl_factorize(P, 1)
    assert not result.converged


# ---------------------------------------------------------------------------
# orbit comparison


def test_orbit_match_self():
    a = LoopVarArray.numeric(2, 2, [[1.0, 2.0], [3.0, 0.5]])
    assert orbit_match(a, a)


def test_orbit_match_swapped():
    vals = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(1, 2)]]
    a = LoopVarArray.numeric(2, 2, vals)
    grid = apply_word(a, [1])
    b = LoopVarArray.numeric(
        2, 2, [[float(grid[i][j]) for j in range(2)] for i in range(2)]
    )
    af = LoopVarArray.numeric(2, 2, [[float(v) for v in col] for col in vals])
    assert orbit_match(af, b)
    assert orbit_match(b, af)


def test_orbit_match_rejects_unrelated():
    a = LoopVarArray.numeric(2, 2, [[1.0, 2.0], [3.0, 0.5]])
    b = LoopVarArray.numeric(2, 2, [[1.0, 2.0], [3.0, 0.75]])
    assert not orbit_match(a, b)


def test_orbit_match_shape_mismatch():
    a = LoopVarArray.numeric(2, 2, [[1.0, 2.0], [3.0, 0.5]])
    b = LoopVarArray.numeric(2, 1, [[1.0, 2.0]])
    with pytest.raises(ValueError):
        orbit_match(a, b)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_factorize_round_trip_property(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    m = rng.randint(1, 3)
    src = _random_product(rng, n, m)
    result = whirl_factorize(whirl_product(src), m)
    assert result.converged and result.residual <= 1e-8
