"""Published 47-customer dataset, embedded verbatim.

The matrix below is already normalized; the raw customer data it came from
was never published, so it serves as the canonical pipeline input. Column
one is value *to* the customer (v2c), column two value *from* the customer
to the firm (v2f).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .copeland import parse_chain
from .core import CriterionSpec, DecisionMatrix

CUSTOMERS = tuple(f"C{k}" for k in range(1, 48))
CRITERIA = (CriterionSpec("v2c"), CriterionSpec("v2f"))

PUBLISHED_ENTROPIES = (0.9446, 0.9198)
PUBLISHED_DIVERGENCES = (0.0553, 0.0802)
PUBLISHED_WEIGHTS = (0.4083, 0.5917)
#: Weights quoted in the running text; inconsistent with every table.
BODY_TEXT_WEIGHTS = (0.492, 0.508)

FINAL_CHAIN_TEXT = (
    "C39 > C46 > C3 > C30 > C1 = C43 > C23 > C41 > C40 > C47 > C33 > C27 > C13 > C35 > "
    "C42 > C31 = C12 > C44 > C20 > C45 > C28 = C6 > C2 = C18 > C10 > C34 > C16 > "
    "C15 = C26 > C37 > C21 = C22 > C11 > C17 > C7 > C14 > C38 > C24 > C19 = C32 > C4 > "
    "C25 > C8 = C29 > C9 > C5 > C36"
)

#: Four-customer worked example: id -> (TOPSIS rank, SAW rank).
COPELAND_EXAMPLE = {"C10": (26, 25), "C11": (33, 33), "C12": (13, 19), "C13": (14, 12)}
COPELAND_EXAMPLE_SCORES = {"C10": -1, "C11": -3, "C12": 2, "C13": 2}
COPELAND_EXAMPLE_CHAIN = "C13 = C12 > C10 > C11"

_APPENDIX_A = """
0.907 0.521
0.641 0.268
0.854 0.778
0.209 0.078
0.111 0.028
0.899 0.092
0.372 0.136
0.111 0.093
0.111 0.032
0.622 0.221
0.489 0.136
0.529 0.419
0.949 0.200
0.289 0.156
0.555 0.166
0.422 0.268
0.422 0.147
0.720 0.156
0.160 0.119
0.809 0.259
0.289 0.294
0.555 0.140
0.555 0.633
0.244 0.147
0.160 0.092
0.622 0.107
0.622 0.419
0.555 0.354
0.209 0.044
0.672 0.722
1 0.151
0.209 0.114
0.489 0.521
0.372 0.354
0.880 0.239
0.111 0
0.489 0.186
0.289 0.133
0.808 1
0.372 0.604
0.773 0.460
0.889 0.230
0.489 0.778
0.720 0.294
0.800 0.188
0.672 0.924
0.808 0.309
"""

_APPENDIX_B_PROPORTIONS = """
0.036523 0.038029
0.025811 0.019577
0.034388 0.05671
0.008416 0.005663
0.00447 0.002024
0.0362 0.006735
0.014979 0.009902
0.00447 0.006783
0.00447 0.002352
0.025046 0.016111
0.019691 0.009937
0.021301 0.030564
0.038214 0.01459
0.011637 0.011347
0.022348 0.012096
0.016993 0.019577
0.016993 0.010702
0.00447 0.011368
0.006443 0.008688
0.032576 0.018866
0.011637 0.02146
0.022348 0.01022
0.022348 0.046156
0.009825 0.010756
0.006443 0.006735
0.025046 0.007807
0.025046 0.030564
0.022348 0.025851
0.008416 0.003186
0.02706 0.052662
0.040267 0.010985
0.008416 0.008343
0.019691 0.038029
0.014979 0.025851
0.035435 0.017433
0.00447 0
0.019691 0.013592
0.011637 0.009681
0.032536 0.072924
0.014979 0.044016
0.031127 0.033538
0.035798 0.016795
0.019691 0.05671
0.028993 0.02146
0.032214 0.0137
0.02706 0.067391
0.032536 0.022533
"""

_APPENDIX_C = """
C1 0.370318 0.308568
C2 0.261713 0.158851
C3 0.348679 0.460147
C4 0.085332 0.045948
C5 0.04532 0.016419
C6 0.367052 0.054648
C7 0.151884 0.080348
C8 0.04532 0.055037
C9 0.04532 0.019087
C10 0.253956 0.13073
C11 0.199653 0.080626
C12 0.215985 0.248003
C13 0.387466 0.118383
C14 0.117996 0.092067
C15 0.2266 0.098149
C16 0.172298 0.158851
C17 0.172298 0.086839
C18 0.293968 0.092243
C19 0.065326 0.070493
C20 0.330306 0.153081
C21 0.117996 0.17413
C22 0.2266 0.082924
C23 0.2266 0.374515
C24 0.099623 0.087274
C25 0.065326 0.054648
C26 0.253956 0.063348
C27 0.253956 0.248003
C28 0.2266 0.209758
C29 0.085332 0.02585
C30 0.27437 0.427301
C31 0.408289 0.089134
C32 0.085332 0.067699
C33 0.199653 0.308568
C34 0.151884 0.209758
C35 0.359294 0.14145
C36 0.04532 0
C37 0.199653 0.110289
C38 0.117996 0.078549
C39 0.329898 0.591711
C40 0.151884 0.357146
C41 0.315607 0.272129
C42 0.362969 0.136278
C43 0.199653 0.460147
C44 0.293968 0.17413
C45 0.326631 0.111165
C46 0.27437 0.54682
C47 0.329898 0.182838
"""

_APPENDIX_D = """
C1 0.240002 0.479002 0.666202
C2 0.403353 0.299989 0.426519
C3 0.132139 0.537441 0.802654
C4 0.606087 0.062762 0.093836
C5 0.657827 0.013645 0.020321
C6 0.44926 0.403082 0.472911
C7 0.531483 0.148515 0.218405
C8 0.634886 0.045737 0.067199
C9 0.656217 0.015862 0.023601
C10 0.428569 0.281531 0.396467
C11 0.497847 0.203474 0.290129
C12 0.372688 0.295997 0.442656
C13 0.394205 0.437143 0.525824
C14 0.550457 0.118487 0.177125
C15 0.468395 0.239959 0.338755
C16 0.464441 0.205945 0.307204
C17 0.512193 0.173766 0.253318
C18 0.438795 0.318886 0.420871
C19 0.443896 0.063656 0.125418
C20 0.377222 0.37689 0.49978
C21 0.501019 0.170662 0.254082
C22 0.479514 0.235958 0.329794
C23 0.289372 0.38444 0.570545
C24 0.568666 0.099146 0.148464
C25 0.617642 0.051795 0.077372
C26 0.479281 0.265006 0.356054
C27 0.344236 0.331562 0.490623
C28 0.389756 0.285155 0.422507
C29 0.618685 0.054245 0.08061
C30 0.215547 0.455413 0.678748
C31 0.417659 0.457881 0.52297
C32 0.592682 0.075141 0.112517
C33 0.350462 0.32042 0.47761
C34 0.450152 0.219053 0.327333
C35 0.379121 0.408152 0.518438
C36 0.667809 0 0
C37 0.47699 0.212868 0.308567
C38 0.55898 0.111563 0.166377
C39 0.097587 0.606055 0.861311
C40 0.374008 0.325098 0.46502
C41 0.289563 0.40541 0.583347
C42 0.382662 0.41133 0.518053
C43 0.281799 0.427949 0.602959
C44 0.375072 0.34169 0.476713
C45 0.412085 0.362177 0.467771
C46 0.170835 0.536476 0.758473
C47 0.353524 0.385473 0.521617
"""

_TABLE_2 = """
C1 0.679 5
C2 0.421 23
C3 0.809 3
C4 0.131 41
C5 0.062 46
C6 0.422 22
C7 0.232 35
C8 0.100 44
C9 0.064 45
C10 0.385 25
C11 0.280 33
C12 0.464 19
C13 0.506 12
C14 0.210 36
C15 0.325 28
C16 0.331 27
C17 0.259 34
C18 0.386 24
C19 0.136 40
C20 0.483 17
C21 0.292 32
C22 0.310 31
C23 0.601 7
C24 0.187 38
C25 0.120 42
C26 0.317 29
C27 0.502 13
C28 0.436 21
C29 0.111 43
C30 0.702 4
C31 0.497 16
C32 0.153 39
C33 0.508 11
C34 0.362 26
C35 0.501 14
C36 0.045 47
C37 0.310 30
C38 0.197 37
C39 0.922 1
C40 0.509 10
C41 0.588 8
C42 0.499 15
C43 0.660 6
C44 0.468 18
C45 0.438 20
C46 0.821 2
C47 0.513 9
"""

_TABLE_3 = """
C1 0.611 6
C2 0.370 23
C3 0.792 3
C4 0.088 41
C5 0.024 46
C6 0.377 22
C7 0.189 35
C8 0.078 43
C9 0.027 45
C10 0.336 26
C11 0.240 33
C12 0.433 13
C13 0.433 14
C14 0.169 36
C15 0.282 29
C16 0.292 27
C17 0.216 34
C18 0.341 24
C19 0.122 39
C20 0.421 18
C21 0.271 30
C22 0.270 31
C23 0.595 7
C24 0.148 38
C25 0.084 42
C26 0.284 28
C27 0.462 11
C28 0.396 20
C29 0.068 44
C30 0.696 4
C31 0.426 17
C32 0.113 40
C33 0.495 10
C34 0.338 25
C35 0.432 15
C36 0.000 47
C37 0.266 32
C38 0.154 37
C39 0.893 1
C40 0.517 9
C41 0.535 8
C42 0.430 16
C43 0.663 5
C44 0.412 19
C45 0.383 21
C46 0.808 2
C47 0.448 12
"""


def _grid(block: str, skip: int = 0) -> np.ndarray:
    rows = [line.split()[skip:] for line in block.strip().splitlines()]
    return np.array(rows, dtype=float)


def _ranked(block: str) -> tuple[np.ndarray, np.ndarray]:
    rows = [line.split() for line in block.strip().splitlines()]
    return (np.array([float(r[1]) for r in rows]), np.array([int(r[2]) for r in rows]))


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PaperDataset:
    """Every published table, row ``k`` being customer ``C{k+1}``.

    ``appendix_d`` (d+, d-, closeness) is kept for the record only: it
    cannot be recomputed from the other tables and is not a reproduction
    target.
    """

    customers: tuple[str, ...]
    appendix_a: np.ndarray
    appendix_b_proportions: np.ndarray
    appendix_b_entropies: tuple[float, float]
    appendix_b_divergences: tuple[float, float]
    appendix_b_weights: tuple[float, float]
    appendix_c: np.ndarray
    appendix_d: np.ndarray
    table2_scores: np.ndarray
    table2_ranks: np.ndarray
    table3_closeness: np.ndarray
    table3_ranks: np.ndarray
    final_chain: tuple[tuple[str, ...], ...]
    appendix_d_is_erratum: bool = True

    @property
    def matrix(self) -> DecisionMatrix:
        return DecisionMatrix(self.customers, CRITERIA, self.appendix_a)

    def table2(self) -> dict[str, tuple[float, int]]:
        return {c: (float(s), int(r)) for c, s, r in
                zip(self.customers, self.table2_scores, self.table2_ranks)}

    def table3(self) -> dict[str, tuple[float, int]]:
        return {c: (float(s), int(r)) for c, s, r in
                zip(self.customers, self.table3_closeness, self.table3_ranks)}


def load_paper_dataset() -> PaperDataset:
    t2_scores, t2_ranks = _ranked(_TABLE_2)
    t3_cl, t3_ranks = _ranked(_TABLE_3)
    return PaperDataset(
        customers=CUSTOMERS,
        appendix_a=_readonly(_grid(_APPENDIX_A)),
        appendix_b_proportions=_readonly(_grid(_APPENDIX_B_PROPORTIONS)),
        appendix_b_entropies=PUBLISHED_ENTROPIES,
        appendix_b_divergences=PUBLISHED_DIVERGENCES,
        appendix_b_weights=PUBLISHED_WEIGHTS,
        appendix_c=_readonly(_grid(_APPENDIX_C, skip=1)),
        appendix_d=_readonly(_grid(_APPENDIX_D, skip=1)),
        table2_scores=_readonly(t2_scores),
        table2_ranks=_readonly(t2_ranks),
        table3_closeness=_readonly(t3_cl),
        table3_ranks=_readonly(t3_ranks),
        final_chain=tuple(parse_chain(FINAL_CHAIN_TEXT)),
    )
