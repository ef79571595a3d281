"""Customer profitability drivers: lifetime value, value to customer and questionnaire scoring."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence


@dataclass(frozen=True)
class Period:
    price: float
    direct_cost: float
    retention: float

    def __post_init__(self):
        for name in ("price", "direct_cost", "retention"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not 0.0 <= self.retention <= 1.0:
            raise ValueError(f"retention probability {self.retention!r} outside [0, 1]")


@dataclass(frozen=True)
class CLVInputs:
    """Per-period price, direct cost and retention for ``t = 0..T``."""

    periods: tuple[Period, ...]
    discount_rate: float
    acquisition_cost: float = 0.0

    def __post_init__(self):
        periods = tuple(p if isinstance(p, Period) else Period(*p) for p in self.periods)
        if not periods:
            raise ValueError("at least one period (t = 0) is required")
        object.__setattr__(self, "periods", periods)
        if not math.isfinite(self.discount_rate) or self.discount_rate <= -1:
            raise ValueError(f"discount rate must exceed -1, got {self.discount_rate!r}")
        if not math.isfinite(self.acquisition_cost):
            raise ValueError("acquisition cost must be finite")

    @property
    def horizon(self) -> int:
        return len(self.periods) - 1


def clv(inputs: CLVInputs) -> float:
    """Discounted retention-weighted margins minus acquisition cost.

    >>> clv(CLVInputs([(100, 60, 1.0)], discount_rate=0.1, acquisition_cost=10))
    30.0
    """
    total = 0.0
    for t, p in enumerate(inputs.periods):
        total += (p.price - p.direct_cost) * p.retention / (1.0 + inputs.discount_rate) ** t
    return total - inputs.acquisition_cost


@dataclass(frozen=True)
class ValueParameter:
    importance: float
    benefit: float
    cost: float


@dataclass(frozen=True)
class ValuePerception:
    parameters: tuple[ValueParameter, ...]

    def __post_init__(self):
        params = tuple(p if isinstance(p, ValueParameter) else ValueParameter(*p)
                       for p in self.parameters)
        for j, p in enumerate(params, start=1):
            if not 0.0 <= p.importance <= 1.0:
                raise ValueError(f"parameter {j}: importance {p.importance!r} outside [0, 1]")
            if p.cost == 0:
                raise ZeroDivisionError(f"parameter {j}: perceived cost is zero")
        object.__setattr__(self, "parameters", params)


def value_to_customer(perception: ValuePerception) -> float:
    """Importance-weighted sum of relative net benefit ``(B - C) / C``."""
    return sum(p.importance * (p.benefit - p.cost) / p.cost for p in perception.parameters)


class LikertLevel(IntEnum):
    STRONGLY_DISAGREE = 1
    DISAGREE = 2
    NEUTRAL = 3
    AGREE = 4
    STRONGLY_AGREE = 5


_LABELS = {
    "strongly disagree": LikertLevel.STRONGLY_DISAGREE,
    "disagree": LikertLevel.DISAGREE,
    "neutral": LikertLevel.NEUTRAL,
    "neither agree nor disagree": LikertLevel.NEUTRAL,
    "agree": LikertLevel.AGREE,
    "strongly agree": LikertLevel.STRONGLY_AGREE,
}

QUESTIONNAIRE_CATEGORIES = (
    "Planning and financial resources",
    "Understanding and friendliness",
    "Control and fairness",
    "Options and alternatives",
    "Information and communication",
)
QUESTIONS_PER_CATEGORY = 10
N_QUESTIONS = QUESTIONS_PER_CATEGORY * len(QUESTIONNAIRE_CATEGORIES)


def parse_likert(level) -> LikertLevel:
    """Accept a :class:`LikertLevel`, an ordinal 1..5 or a label such as ``"agree"``."""
    if isinstance(level, str):
        key = level.strip().lower().replace("_", " ")
        if key in _LABELS:
            return _LABELS[key]
        try:
            level = int(key)
        except ValueError:
            raise ValueError(f"invalid Likert level {level!r}") from None
    if isinstance(level, float):
        if not level.is_integer():
            raise ValueError(f"invalid Likert level {level!r}")
        level = int(level)
    try:
        return LikertLevel(level)
    except ValueError:
        raise ValueError(f"invalid Likert level {level!r}; expected 1..5") from None


def likert_quantify(level) -> int:
    """Map the five agreement levels onto 1, 3, 5, 7, 9."""
    return 2 * int(parse_likert(level)) - 1


@dataclass(frozen=True)
class QuestionnaireResponse:
    answers: tuple[LikertLevel, ...]

    def __post_init__(self):
        answers = tuple(parse_likert(a) for a in self.answers)
        if len(answers) != N_QUESTIONS:
            raise ValueError(f"expected {N_QUESTIONS} answers, got {len(answers)}")
        object.__setattr__(self, "answers", answers)


@dataclass(frozen=True)
class QuestionnaireScore:
    total: int
    per_category: dict[str, int]


def questionnaire_score(response: QuestionnaireResponse | Sequence) -> QuestionnaireScore:
    """Sum of quantified answers, overall and per block of ten questions."""
    if not isinstance(response, QuestionnaireResponse):
        response = QuestionnaireResponse(tuple(response))
    points = [likert_quantify(a) for a in response.answers]
    per_category = {
        name: sum(points[k * QUESTIONS_PER_CATEGORY:(k + 1) * QUESTIONS_PER_CATEGORY])
        for k, name in enumerate(QUESTIONNAIRE_CATEGORIES)
    }
    return QuestionnaireScore(sum(points), per_category)
