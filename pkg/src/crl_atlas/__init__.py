"""crl-atlas: real Waring ranks of binary forms and the walls between them.

Exact rational polynomial arithmetic, apolarity-based rank certificates,
degree formulas for coincident root strata and their duals, and seeded
numerical experiments that locate rank boundaries along segments of forms
and identify which dual varieties they lie on.
"""

from .boundary import (
    BoundaryCandidateSet,
    CrossingEvent,
    MembershipReport,
    candidate_components,
    crossing_scan,
    dual_membership,
)
from .config import RunConfig
from .crl import (
    DualComponentSum,
    crl_degree,
    dual_codim,
    dual_degree,
    polar_degree,
    pullback_decomposition,
    regenerate_table1,
)
from .partitions import Partition, count_table, format_partition, parse_partition
from .poly_core import (
    BinaryForm,
    count_real_roots,
    discriminant,
    is_real_rooted,
    is_squarefree,
    resultant,
)
from .rank import (
    RankCertificate,
    SearchBudget,
    complex_rank,
    rank_histogram,
    real_rank,
)
from .selfcheck import SelfCheckReport, run_selfcheck

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "BoundaryCandidateSet",
    "CrossingEvent",
    "DualComponentSum",
    "MembershipReport",
    "Partition",
    "RankCertificate",
    "RunConfig",
    "SearchBudget",
    "SelfCheckReport",
    "candidate_components",
    "complex_rank",
    "count_real_roots",
    "count_table",
    "crl_degree",
    "crossing_scan",
    "discriminant",
    "dual_codim",
    "dual_degree",
    "dual_membership",
    "format_partition",
    "is_real_rooted",
    "is_squarefree",
    "parse_partition",
    "polar_degree",
    "pullback_decomposition",
    "rank_histogram",
    "real_rank",
    "regenerate_table1",
    "resultant",
    "run_selfcheck",
    "__version__",
]
