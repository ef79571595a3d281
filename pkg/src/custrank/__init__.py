"""Multi-criteria customer ranking.

Normalization, Shannon-entropy weighting, SAW and TOPSIS scoring, Copeland
aggregation, customer lifetime value and four-quadrant profiling. Each
method is available as plain functions and as a scikit-learn style
estimator.
"""

from .copeland import (
    CopelandAggregator,
    CopelandResult,
    PairwiseTally,
    copeland_rank,
    copeland_scores,
    format_chain,
    pairwise_tally,
    parse_chain,
)
from .core import (
    TIE_TOLERANCE,
    CriterionSpec,
    DecisionMatrix,
    Direction,
    RankEntry,
    Ranking,
    WeightVector,
    apply_weights,
    build_matrix,
    rank_from_scores,
)
from .entropy import EntropyReport, EntropyWeighter, entropy_values, entropy_weights, proportions
from .normalization import (
    MinMaxNormalizer,
    NormalizedMatrix,
    VectorNormalizer,
    minmax_normalize,
    normalize,
    vector_normalize,
)
from .paper_data import PaperDataset, load_paper_dataset
from .reproduce import ReproductionReport, report_schema, reproduce_pipeline
from .saw import SAWRanker, SawResult, saw_rank, saw_scores
from .segmentation import CustomerProfile, Profile, QuadrantSegmenter, assign_profile, segment_all
from .topsis import (
    IdealPair,
    TOPSISRanker,
    TopsisResult,
    closeness,
    ideal_solutions,
    separations,
    topsis_rank,
)
from .validation import DegenerateCriterionWarning
from .value import (
    CLVInputs,
    LikertLevel,
    QuestionnaireResponse,
    ValuePerception,
    clv,
    likert_quantify,
    questionnaire_score,
    value_to_customer,
)

__version__ = "0.1.0"
