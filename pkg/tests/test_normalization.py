import math

import numpy as np
import pytest

from custrank import (
    DegenerateCriterionWarning,
    MinMaxNormalizer,
    VectorNormalizer,
    build_matrix,
    minmax_normalize,
    normalize,
    vector_normalize,
)


def column(values, direction="benefit"):
    return build_matrix([f"a{k}" for k in range(len(values))], [("x", direction)],
                        [[v] for v in values])


def test_vector_three_four_five():
    out = vector_normalize(column([3, 4]))
    np.testing.assert_allclose(out.values[:, 0], [0.6, 0.8], rtol=0, atol=1e-15)
    assert out.scheme == "vector"


def test_vector_single_row_is_one():
    assert vector_normalize(column([7.5])).values[0, 0] == 1.0


def test_vector_unit_norm_with_independent_summation(rng):
    X = rng.random((3, 2)) * 10
    m = build_matrix(["a", "b", "c"], ["x", "y"], X)
    out = vector_normalize(m).values
    for j in range(2):
        # math.fsum: independent, correctly rounded summation
        assert abs(math.sqrt(math.fsum(v * v for v in out[:, j])) - 1.0) <= 1e-12
        assert list(np.argsort(out[:, j])) == list(np.argsort(X[:, j]))


def test_vector_zero_column_rejected():
    m = build_matrix(["a", "b"], ["x", "dead"], [[1, 0], [2, 0]])
    with pytest.raises(ValueError, match="'dead' is all zero"):
        vector_normalize(m)


def test_minmax_benefit_endpoints():
    out = minmax_normalize(column([2, 4, 6]))
    np.testing.assert_allclose(out.values[:, 0], [0, 0.5, 1])
    assert out.degenerate == ()


def test_minmax_cost_endpoints():
    out = minmax_normalize(column([2, 4, 6], "cost"))
    np.testing.assert_allclose(out.values[:, 0], [1, 0.5, 0])


def test_minmax_constant_column_flagged():
    out = minmax_normalize(column([5, 5, 5]))
    np.testing.assert_array_equal(out.values[:, 0], [0, 0, 0])
    assert out.degenerate == ("x",)


def test_normalize_dispatch(paper):
    assert normalize(paper.matrix, "none").values is not None
    np.testing.assert_array_equal(normalize(paper.matrix, "none").values, paper.appendix_a)
    with pytest.raises(ValueError):
        normalize(paper.matrix, "log")


def test_appendix_a_first_column_is_not_minmax_output(paper):
    # column 1 has min 0.111, which (x - min)/(max - min) can never produce
    col1, col2 = paper.appendix_a.T
    assert col1.min() == pytest.approx(0.111) and col1.max() == 1.0
    assert col2.min() == 0.0 and col2.max() == 1.0


def test_minmax_estimator_matches_function(rng):
    X = rng.random((6, 3))
    dirs = ["benefit", "cost", "benefit"]
    est = MinMaxNormalizer(directions=dirs).fit(X)
    m = build_matrix([str(k) for k in range(6)], list(zip("abc", dirs)), X)
    np.testing.assert_allclose(est.transform(X), minmax_normalize(m).values)
    assert est.get_params() == {"directions": dirs}


def test_minmax_estimator_warns_on_constant_column():
    X = np.array([[1.0, 3.0], [2.0, 3.0]])
    with pytest.warns(DegenerateCriterionWarning):
        out = MinMaxNormalizer().fit_transform(X)
    np.testing.assert_array_equal(out[:, 1], [0, 0])


def test_vector_estimator_reuses_fitted_norms():
    X = np.array([[3.0], [4.0]])
    est = VectorNormalizer().fit(X)
    np.testing.assert_allclose(est.transform([[6.0]]), [[1.2]])
    with pytest.raises(ValueError, match="degenerate"):
        VectorNormalizer().fit(np.zeros((2, 1)))
