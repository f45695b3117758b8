"""Uniform catalog of every measure: descriptors, lookup and evaluation."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from . import chi_square_family as chi
from . import entropy_family as ent
from . import fidelity_family as fid
from . import inner_product_family as ip
from . import intersection_family as inter
from . import minkowski_family as mk
from . import string_rearrangement as rr
from . import string_similarity as ss
from .core import FIXTURES, NoConversion, SimDistPair
from .errors import IncompatibleDomain, UnknownMeasure

FAMILIES = (
    "inner-product",
    "minkowski",
    "intersection",
    "entropy",
    "chi2",
    "fidelity",
    "string-rearrangement",
    "string-similarity",
)
INPUT_KINDS = ("vector", "pdf", "string", "dataset+vector")
CLAIMS = ("metric", "semi-metric", "not-metric", "unknown")
AXIOMS = ("non-negativity", "identity", "symmetry", "triangle")


@dataclass(frozen=True)
class MeasureDescriptor:
    """One registry entry.

    ``output`` says what ``fn`` returns: ``"distance"`` (a number or
    NO_CONVERSION), ``"similarity"`` (a number with no distance form) or
    ``"pair"`` (a :class:`SimDistPair`). ``expected_violations`` lists the
    axioms a claimed non-metric is expected to break. ``domain`` is the default
    audit domain in the mini-language of :func:`audit.parse_domain`.
    """

    id: str
    family: str
    input_kind: str
    claimed_metric: str
    value_range: str
    fn: Callable = field(repr=False, compare=False)
    output: str = "distance"
    aliases: tuple = ()
    expected_violations: frozenset = frozenset()
    domain: str = ""
    defaults: Mapping[str, Any] = field(default_factory=dict)
    note: str = ""

    def summary(self) -> dict:
        return {
            "id": self.id,
            "family": self.family,
            "input_kind": self.input_kind,
            "claimed_metric": self.claimed_metric,
            "value_range": self.value_range,
            "output": self.output,
            "aliases": list(self.aliases),
            "expected_violations": sorted(self.expected_violations),
            "defaults": dict(self.defaults),
            "note": self.note,
        }


def _mahalanobis(p, q, model=None, dataset=None, pseudo_inverse=False):
    if model is None:
        if dataset is None:
            raise TypeError("mahalanobis needs a dataset or a CovarianceModel")
        model = chi.estimate_covariance(dataset, pseudo_inverse=pseudo_inverse)
    return chi.mahalanobis(p, q, model)


def _lcs(p, q):
    return ss.lcs(p, q)


_V = "vector:dim=3,low=-10,high=10"
_VNZ = "vector:dim=3,low=-10,high=10,nonzero"
_VNN = "vector:dim=3,low=0,high=10,nonneg"
_VPOS = "vector:dim=3,low=0,high=10,positive"
_PDF = "pdf:dim=4,alpha=1"
_STR = "string:alphabet=abc,max-len=6"
_STR_EQ = "string:alphabet=abc,min-len=1,max-len=6,equal-length"

_ENTRIES = []


def _add(id_, family, kind, claim, rng, fn, **kw):
    kw.setdefault("expected_violations", frozenset())
    kw["expected_violations"] = frozenset(kw["expected_violations"])
    _ENTRIES.append(MeasureDescriptor(id_, family, kind, claim, rng, fn, **kw))


# inner-product family
_add("inner-product", "inner-product", "vector", "metric",
     "sim in R; dist in [0, inf)", ip.inner_product, output="pair", domain=_V,
     note="distance is the induced norm ||p - q||")
_add("cosine-distance", "inner-product", "vector", "not-metric",
     "sim in [-1, 1]; dist in [0, 2]", ip.cosine, output="pair",
     aliases=("cosine", "cosine-similarity"), expected_violations={"triangle"}, domain=_VNZ)
_add("angular", "inner-product", "vector", "metric", "[0, 1]", ip.angular,
     output="pair", aliases=("angular-distance",), domain=_VNZ)
_add("jaccard", "inner-product", "vector", "metric",
     "dist in [0, inf); [0, 1] for non-negative input", ip.jaccard_vector, output="pair",
     aliases=("jaccard-vector", "tanimoto-vector"),
     domain="vector:dim=6,low=0,high=1,integer,nonneg",
     note="a metric on binary (set) vectors; fails the triangle inequality on general "
          "non-negative reals, e.g. (5,2,3), (2,1,3), (1,0,2)")
_add("dice", "inner-product", "vector", "not-metric", "dist in [0, 2]", ip.dice,
     output="pair", expected_violations={"triangle"}, domain=_VNN)

# minkowski family
_add("euclidean", "minkowski", "vector", "metric", "[0, inf)", mk.euclidean,
     aliases=("l2",), domain=_V)
_add("squared-euclidean", "minkowski", "vector", "unknown", "[0, inf)",
     mk.squared_euclidean, domain=_V)
_add("manhattan", "minkowski", "vector", "metric", "[0, inf)", mk.manhattan,
     aliases=("l1", "city-block"), domain=_V)
_add("minkowski", "minkowski", "vector", "metric", "[0, inf)", mk.minkowski,
     aliases=("lp",), domain=_V, defaults={"exp": 3.0})
_add("chebyshev", "minkowski", "vector", "metric", "[0, inf)", mk.chebyshev,
     aliases=("l-inf", "linf"), domain=_V)
_add("gower", "minkowski", "vector", "unknown", "[0, 1] inside the ranges", mk.gower,
     domain="vector:dim=3,low=0,high=10", defaults={"range_size": "count"},
     note="needs ranges")
_add("soergel", "minkowski", "vector", "unknown", "[0, 1] for non-negative input",
     mk.soergel, domain=_VNN)
_add("kulczynski", "minkowski", "vector", "unknown", "[0, inf)", mk.kulczynski_vector,
     domain=_VPOS)
_add("canberra", "minkowski", "vector", "unknown", "[0, d]", mk.canberra, domain=_VPOS)
_add("canberra-adkins", "minkowski", "vector", "unknown", "[0, 1]",
     lambda p, q: mk.canberra(p, q, adkins=True), domain=_VPOS)
_add("lorentzian", "minkowski", "vector", "not-metric", "[0, inf)", mk.lorentzian,
     expected_violations={"identity"}, domain="vector:dim=2,low=-3,high=3,integer",
     note="spacetime form; the log form is lorentzian-log")
_add("lorentzian-log", "minkowski", "vector", "unknown", "[0, inf)",
     lambda p, q: mk.lorentzian(p, q, mode="log"), domain=_V)

# intersection family
_add("intersection", "intersection", "pdf", "unknown", "sim, dist in [0, 1]",
     inter.intersection, output="pair", domain=_PDF)
_add("wave-hedges", "intersection", "pdf", "unknown", "[0, d]", inter.wave_hedges,
     domain=_PDF, defaults={"form": "ratio"})
_add("sorensen", "intersection", "pdf", "unknown", "sim, dist in [0, 1]", inter.sorensen,
     output="pair", aliases=("czekanowski", "bray-curtis"), domain=_PDF)
_add("motyka", "intersection", "pdf", "not-metric", "sim in [0, 1/2]; dist in [1/2, 1]",
     inter.motyka, output="pair", expected_violations={"identity"}, domain=_PDF,
     note="self-distance is 1/2")
_add("kulczynski-pdf", "intersection", "pdf", "unknown", "sim, dist in (0, inf)",
     inter.kulczynski_pdf, output="pair", domain=_PDF,
     note="identical inputs raise IdenticalInputs")
_add("jaccard-pdf", "intersection", "pdf", "unknown", "sim, dist in [0, 1]",
     inter.jaccard_pdf, output="pair", aliases=("tanimoto-pdf", "ruzicka"), domain=_PDF)

# entropy family
_add("kl", "entropy", "pdf", "not-metric", "[0, inf)", ent.kl_divergence,
     aliases=("kullback-leibler",), expected_violations={"symmetry", "triangle"}, domain=_PDF,
     defaults={"eps": 0.0})
_add("cross-entropy", "entropy", "pdf", "unknown", "[0, inf)", ent.cross_entropy,
     domain=_PDF, defaults={"eps": 0.0}, note="cross_entropy(p, p) is the entropy of p")
_add("j-divergence", "entropy", "pdf", "unknown", "[0, inf)", ent.j_divergence,
     aliases=("jeffreys",), domain=_PDF, defaults={"eps": 0.0})
_add("k-divergence", "entropy", "pdf", "unknown", "[0, ln 2]", ent.k_divergence, domain=_PDF)
_add("topsoe", "entropy", "pdf", "unknown", "[0, 2 ln 2]", ent.topsoe, domain=_PDF)
_add("jensen-shannon", "entropy", "pdf", "unknown", "[0, ln 2]", ent.jensen_shannon,
     aliases=("js",), domain=_PDF)
_add("jensen-difference", "entropy", "pdf", "unknown", "[0, ln 2]",
     ent.jensen_difference, domain=_PDF)
_add("sed", "entropy", "pdf", "unknown", "[0, 1] in entropy mode", ent.sed, domain=_PDF,
     defaults={"mode": "entropy"})
_add("jensen-shannon-sqrt", "entropy", "pdf", "metric", "[0, sqrt(ln 2)]",
     ent.jensen_shannon_distance, aliases=("jensen-shannon-distance",), domain=_PDF)

# chi-squared family
_add("pearson-chi2", "chi2", "pdf", "not-metric", "[0, inf)", chi.pearson_chi2,
     aliases=("pearson",), expected_violations={"symmetry"}, domain=_PDF)
_add("neyman-chi2", "chi2", "pdf", "not-metric", "[0, inf)", chi.neyman_chi2,
     aliases=("neyman",), expected_violations={"symmetry"}, domain=_PDF)
_add("pearson-correlation", "chi2", "vector", "unknown", "[-1, 1]",
     chi.pearson_correlation, output="similarity", domain=_V)
_add("additive-symmetric-chi2", "chi2", "pdf", "unknown", "[0, inf)",
     chi.additive_symmetric_chi2, domain=_PDF)
_add("spearman", "chi2", "vector", "unknown", "depends on mode", chi.spearman,
     output="pair", domain=_V, defaults={"mode": "paper"})
_add("squared-chi2", "chi2", "pdf", "unknown", "[0, 2]", chi.squared_chi2,
     aliases=("triangular-discrimination",), domain=_PDF)
_add("probabilistic-symmetric-chi2", "chi2", "pdf", "unknown", "[0, 4]",
     lambda p, q: chi.squared_chi2(p, q, probabilistic_symmetric=True), domain=_PDF)
_add("divergence", "chi2", "pdf", "unknown", "[0, 2d]", chi.divergence_distance, domain=_PDF)
_add("clark", "chi2", "pdf", "unknown", "[0, sqrt(d)]", chi.clark, domain=_PDF)
_add("mahalanobis", "chi2", "dataset+vector", "metric", "[0, inf)", _mahalanobis,
     domain="vector:dim=3,low=-20,high=20", note="needs a dataset or a CovarianceModel")

# fidelity family
_add("fidelity", "fidelity", "pdf", "unknown", "[0, 1]", fid.bhattacharyya_coefficient,
     output="similarity", aliases=("bhattacharyya-coefficient",), domain=_PDF)
_add("bhattacharyya", "fidelity", "pdf", "metric", "[0, inf)", fid.bhattacharyya_distance,
     domain="pdf:dim=4,alpha=0.3",
     note="claimed a metric with values in [0, 1]; neither holds")
_add("hellinger", "fidelity", "pdf", "unknown", "[0, 1]", fid.hellinger, domain=_PDF)
_add("matusita", "fidelity", "pdf", "unknown", "[0, sqrt 2]", fid.matusita, domain=_PDF)
_add("squared-chord", "fidelity", "pdf", "unknown", "dist in [0, 2]; sim in [-1, 1]",
     fid.squared_chord, output="pair", domain=_PDF)

# string rearrangement
_add("hamming", "string-rearrangement", "string", "metric", "{0..n}", rr.hamming,
     domain=_STR_EQ)
_add("levenshtein", "string-rearrangement", "string", "metric", "[0, inf)", rr.levenshtein,
     aliases=("edit-distance",), domain=_STR)
_add("damerau-levenshtein", "string-rearrangement", "string", "unknown", "{0..max(n, m)}",
     rr.damerau_levenshtein, aliases=("osa",), domain="string:alphabet=abc,max-len=4")
_add("swap", "string-rearrangement", "string", "not-metric", "{0..n/2} or no conversion",
     rr.swap_distance, aliases=("swap-distance",), expected_violations={"triangle"},
     domain="string:alphabet=abcdef,min-len=2,max-len=6,equal-length,perturb=swap")
_add("interchange", "string-rearrangement", "string", "metric", "{0..n-1} or no conversion",
     rr.interchange_distance, aliases=("interchange-distance",),
     domain="string:alphabet=abc,min-len=1,max-len=6,equal-length,perturb=interchange")
_add("parallel-interchange", "string-rearrangement", "string", "not-metric",
     "{0..n/2} or no conversion", rr.parallel_interchange_distance,
     aliases=("p-int",), expected_violations={"triangle"},
     domain="string:alphabet=abcdef,min-len=3,max-len=6,equal-length,perturb=interchange")

# string similarity
_add("lcs", "string-similarity", "string", "unknown", "{0..min(n, m)}", _lcs,
     output="similarity", domain=_STR)
_add("lcsk", "string-similarity", "string", "unknown", "{0..min(n, m)/k}", ss.lcsk,
     output="similarity", domain=_STR, defaults={"k": 2})
_add("hcs", "string-similarity", "string", "unknown", "[0, inf)", ss.hcs,
     output="similarity", domain=_STR, note="needs weights")
_add("jaro", "string-similarity", "string", "not-metric", "sim, dist in [0, 1]", ss.jaro,
     output="pair", aliases=("jaro-distance",), expected_violations={"identity", "triangle"},
     domain="string:alphabet=abc,max-len=6,perturb=edit", defaults={"mode": "paper"})
_add("jaro-winkler", "string-similarity", "string", "not-metric", "sim, dist in [0, 1]",
     ss.jaro_winkler, output="pair", aliases=("jaro-winkler-distance",),
     expected_violations={"identity", "triangle"},
     domain="string:alphabet=abc,max-len=6,perturb=edit",
     defaults={"scale": 0.1, "max_prefix": 4, "mode": "paper"})
_add("ngram", "string-similarity", "string", "not-metric", "sim, dist in {0, 1, ...}",
     ss.ngram_measure, output="pair", aliases=("n-gram",), expected_violations={"identity"},
     domain=_STR, defaults={"n": 2})
_add("ngram-jaccard", "string-similarity", "string", "unknown", "sim, dist in [0, 1]",
     ss.ngram_jaccard, output="pair", domain="string:alphabet=abc,min-len=2,max-len=6",
     defaults={"n": 2})
_add("ngram-cosine", "string-similarity", "string", "unknown", "sim, dist in [0, 1]",
     ss.ngram_cosine, output="pair", domain="string:alphabet=abc,min-len=2,max-len=6",
     defaults={"n": 2})


_FAMILY_ORDER = {f: k for k, f in enumerate(FAMILIES)}
_ORDERED = tuple(sorted(_ENTRIES, key=lambda d: (_FAMILY_ORDER[d.family], d.id)))
_BY_ID: dict[str, MeasureDescriptor] = {}
for _d in _ORDERED:
    for _name in (_d.id, *_d.aliases):
        if _name in _BY_ID:
            raise RuntimeError(f"duplicate registry name {_name!r}")
        _BY_ID[_name] = _d


def registry_list(family: str | None = None) -> list[MeasureDescriptor]:
    """Descriptors sorted by family (catalog order) then id."""
    if family is not None and family not in FAMILIES:
        raise UnknownMeasure(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return [d for d in _ORDERED if family is None or d.family == family]


def get(measure_id: str) -> MeasureDescriptor:
    try:
        return _BY_ID[measure_id]
    except KeyError:
        raise UnknownMeasure(f"unknown measure {measure_id!r}") from None


def evaluate(measure_id: str, a, b, **options):
    """Call the measure with its registered defaults overridden by ``options``."""
    desc = get(measure_id)
    return desc.fn(a, b, **{**desc.defaults, **options})


def distance_of(desc: MeasureDescriptor, result) -> float:
    """Distance component of a raw result; NO_CONVERSION maps to ``inf``."""
    if desc.output == "similarity":
        raise IncompatibleDomain(f"{desc.id} is a similarity with no distance form")
    if isinstance(result, SimDistPair):
        return float(result.distance)
    if isinstance(result, NoConversion):
        return math.inf
    return float(result)


def scalar_of(desc: MeasureDescriptor, result) -> float:
    """The number a matrix cell holds: the distance, or the similarity when the
    measure has no distance form."""
    if desc.output == "similarity":
        return float(result)
    return distance_of(desc, result)


def audit_options(desc: MeasureDescriptor, domain) -> dict:
    """Extra arguments a measure needs under audit (ranges, model, weights)."""
    if desc.id == "gower":
        return {"ranges": [(domain.low, domain.high)] * domain.dim}
    if desc.id == "mahalanobis":
        return {"model": chi.estimate_covariance(FIXTURES.MAHALANOBIS_SAMPLE)}
    if desc.id == "hcs":
        return {"weights": {s: float(k + 1) for k, s in enumerate(domain.alphabet)}}
    return {}
