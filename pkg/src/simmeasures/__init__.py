"""Similarity and distance measures for vectors, PDFs and strings, with a
measure registry and a randomized metric-axiom audit."""
from .metric_audit import DomainSpec, audit, relation_suite
from .chi_square_family import (
    CovarianceModel,
    additive_symmetric_chi2,
    clark,
    divergence_distance,
    estimate_covariance,
    mahalanobis,
    neyman_chi2,
    pearson_chi2,
    pearson_correlation,
    spearman,
    squared_chi2,
)
from .core import (
    FIXTURES,
    NO_CONVERSION,
    PDF_TOLERANCE,
    NoConversion,
    SimDistPair,
    normalize,
    rank_vector,
)
from .entropy_family import (
    cross_entropy,
    j_divergence,
    jensen_difference,
    jensen_shannon,
    jensen_shannon_distance,
    k_divergence,
    kl_divergence,
    sed,
    shannon_entropy,
    topsoe,
)
from .errors import MeasureError
from .fidelity_family import (
    bhattacharyya_coefficient,
    bhattacharyya_distance,
    hellinger,
    matusita,
    squared_chord,
)
from .inner_product_family import angular, cosine, dice, inner_product, jaccard_vector
from .intersection_family import (
    intersection,
    jaccard_pdf,
    kulczynski_pdf,
    motyka,
    sorensen,
    wave_hedges,
)
from .minkowski_family import (
    INFINITY,
    canberra,
    chebyshev,
    euclidean,
    gower,
    kulczynski_vector,
    lorentzian,
    manhattan,
    minkowski,
    soergel,
    squared_euclidean,
)
from .pairwise import pairwise
from .string_rearrangement import (
    ECM,
    LCM,
    UCM,
    RearrangementOp,
    apply_sequence,
    damerau_levenshtein,
    hamming,
    interchange_distance,
    levenshtein,
    parallel_interchange_distance,
    sequence_cost,
    swap_distance,
)
from .registry import MeasureDescriptor, evaluate, get, registry_list
from .string_similarity import (
    hcs,
    jaro,
    jaro_winkler,
    lcs,
    lcsk,
    ngram_cosine,
    ngram_jaccard,
    ngram_measure,
    ngram_profile,
)

__version__ = "0.1.0"

__all__ = [
    "additive_symmetric_chi2",
    "angular",
    "apply_sequence",
    "audit",
    "bhattacharyya_coefficient",
    "bhattacharyya_distance",
    "canberra",
    "chebyshev",
    "clark",
    "cosine",
    "CovarianceModel",
    "cross_entropy",
    "damerau_levenshtein",
    "dice",
    "divergence_distance",
    "DomainSpec",
    "ECM",
    "estimate_covariance",
    "euclidean",
    "evaluate",
    "FIXTURES",
    "get",
    "gower",
    "hamming",
    "hcs",
    "hellinger",
    "INFINITY",
    "inner_product",
    "interchange_distance",
    "intersection",
    "j_divergence",
    "jaccard_pdf",
    "jaccard_vector",
    "jaro",
    "jaro_winkler",
    "jensen_difference",
    "jensen_shannon",
    "jensen_shannon_distance",
    "k_divergence",
    "kl_divergence",
    "kulczynski_pdf",
    "kulczynski_vector",
    "LCM",
    "lcs",
    "lcsk",
    "levenshtein",
    "lorentzian",
    "mahalanobis",
    "manhattan",
    "matusita",
    "MeasureDescriptor",
    "MeasureError",
    "minkowski",
    "motyka",
    "neyman_chi2",
    "ngram_cosine",
    "ngram_jaccard",
    "ngram_measure",
    "ngram_profile",
    "NO_CONVERSION",
    "NoConversion",
    "normalize",
    "pairwise",
    "parallel_interchange_distance",
    "PDF_TOLERANCE",
    "pearson_chi2",
    "pearson_correlation",
    "rank_vector",
    "RearrangementOp",
    "registry_list",
    "relation_suite",
    "sed",
    "sequence_cost",
    "shannon_entropy",
    "SimDistPair",
    "soergel",
    "sorensen",
    "spearman",
    "squared_chi2",
    "squared_chord",
    "squared_euclidean",
    "swap_distance",
    "topsoe",
    "UCM",
    "wave_hedges",
]
