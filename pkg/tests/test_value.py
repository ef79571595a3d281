from fractions import Fraction

import pytest

from custrank import (
    CLVInputs,
    ValuePerception,
    clv,
    likert_quantify,
    questionnaire_score,
    value_to_customer,
)
from custrank.value import QUESTIONNAIRE_CATEGORIES, LikertLevel, Period, parse_likert


def _clv_oracle(prices, costs, retention, rate, ac):
    """Exact rational arithmetic, one row per period as in a spreadsheet."""
    rate = Fraction(rate)
    total = Fraction(0)
    for t, (p, c, r) in enumerate(zip(prices, costs, retention)):
        total += (Fraction(p) - Fraction(c)) * Fraction(r) / (1 + rate) ** t
    return total - Fraction(ac)


def test_single_period_is_undiscounted():
    assert clv(CLVInputs([(100, 60, 1.0)], 0.1, 10)) == 30.0


def test_zero_margins():
    assert clv(CLVInputs([(50, 50, 1.0), (20, 20, 0.5)], 0.1, 5)) == -5.0


def test_three_period_example_against_rational_oracle():
    want = _clv_oracle([100] * 3, [60] * 3, ["1", "0.8", "0.64"], "0.1", 50)
    assert want == Fraction(4870, 121)
    got = clv(CLVInputs([(100, 60, 1.0), (100, 60, 0.8), (100, 60, 0.64)], 0.1, 50))
    assert got == pytest.approx(float(want), abs=1e-12)


def test_zero_rate_is_plain_sum():
    periods = [(10, 4, 0.9), (12, 5, 0.7), (8, 1, 0.2)]
    expected = sum((p - c) * r for p, c, r in periods) - 3
    assert clv(CLVInputs(periods, 0.0, 3)) == pytest.approx(expected)


def test_clv_contract():
    with pytest.raises(ValueError, match="-1"):
        CLVInputs([(1, 0, 1)], -1.0)
    with pytest.raises(ValueError, match="retention"):
        Period(1, 0, 1.5)
    with pytest.raises(ValueError, match="at least one period"):
        CLVInputs([], 0.1)
    assert CLVInputs([(1, 0, 1), (1, 0, 1)], 0.1).horizon == 1


def test_value_to_customer_examples():
    assert value_to_customer(ValuePerception([(0.3, 4, 4), (1.0, 2, 2)])) == 0.0
    assert value_to_customer(ValuePerception([(1.0, 6, 3)])) == 1.0
    params = [(0.5, 3, 2), (1.0, 1, 4), (0.25, -2, 1)]
    oracle = sum(Fraction(a).limit_denominator() * (Fraction(b) - c) / c for a, b, c in params)
    assert oracle == Fraction(-5, 4)
    assert value_to_customer(ValuePerception(params)) == pytest.approx(-1.25, abs=1e-15)


def test_value_to_customer_contract():
    with pytest.raises(ZeroDivisionError, match="parameter 2"):
        ValuePerception([(0.5, 1, 1), (0.5, 1, 0)])
    with pytest.raises(ValueError, match="importance"):
        ValuePerception([(1.5, 1, 1)])


def test_value_to_customer_linear_in_importance():
    base = value_to_customer(ValuePerception([(0.2, 5, 2), (0.4, 1, 3)]))
    doubled = value_to_customer(ValuePerception([(0.4, 5, 2), (0.4, 1, 3)]))
    assert doubled - base == pytest.approx(0.2 * 1.5)


@pytest.mark.parametrize("level,points", [
    ("strongly disagree", 1), ("disagree", 3), ("neutral", 5), ("agree", 7), ("strongly agree", 9),
    (1, 1), (3, 5), (5, 9), (LikertLevel.AGREE, 7), ("4", 7), (2.0, 3),
])
def test_likert_quantification(level, points):
    assert likert_quantify(level) == points


@pytest.mark.parametrize("bad", [0, 6, "maybe", 2.5, "7"])
def test_likert_rejects(bad):
    with pytest.raises(ValueError):
        parse_likert(bad)


@pytest.mark.parametrize("level,total", [(1, 50), (5, 450), (3, 250)])
def test_questionnaire_uniform_totals(level, total):
    score = questionnaire_score([level] * 50)
    assert score.total == total
    assert list(score.per_category) == list(QUESTIONNAIRE_CATEGORIES)
    assert set(score.per_category.values()) == {total // 5}


def test_questionnaire_categories_sum_to_total():
    answers = [1 + (k * 7) % 5 for k in range(50)]
    score = questionnaire_score(answers)
    assert sum(score.per_category.values()) == score.total
    assert score.per_category["Planning and financial resources"] == sum(
        2 * a - 1 for a in answers[:10])


def test_questionnaire_wrong_count():
    with pytest.raises(ValueError, match="expected 50 answers, got 49"):
        questionnaire_score([3] * 49)
