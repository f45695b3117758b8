"""Randomized checks of the metric axioms and of cross-measure identities.

An audit samples input triples from a :class:`DomainSpec`, evaluates the
registered distance on them and records, per axiom, either the number of
trials that passed or the first violation found (shrunk by up to 100 rounds
of random simplification). Everything is driven by one seed.

Domains are written as ``kind[:token,...]`` where a token is a flag or
``key=value``, e.g. ``vector:dim=4,nonneg`` or ``string:alphabet=ab,max-len=5``.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from . import chi_square_family as chi
from . import entropy_family as ent
from . import fidelity_family as fid
from . import inner_product_family as ip
from . import intersection_family as inter
from . import minkowski_family as mk
from . import registry
from . import string_rearrangement as rr
from . import string_similarity as ss
from .errors import IncompatibleDomain, MeasureError
from .registry import AXIOMS

SHRINK_ROUNDS = 100
SIGNS = ("any", "nonneg", "positive", "nonzero")
PERTURBS = ("edit", "swap", "interchange")


@dataclass(frozen=True)
class DomainSpec:
    kind: str
    dim: int = 3
    low: float = -10.0
    high: float = 10.0
    sign: str = "any"
    integer: bool = False
    alpha: float = 1.0
    alphabet: str = "abc"
    min_len: int = 0
    max_len: int = 6
    equal_length: bool = False
    perturb: str = "edit"

    def __post_init__(self):
        if self.kind not in ("vector", "pdf", "string"):
            raise IncompatibleDomain(f"unknown domain kind {self.kind!r}")
        if self.sign not in SIGNS:
            raise IncompatibleDomain(f"unknown sign constraint {self.sign!r}")
        if self.perturb not in PERTURBS:
            raise IncompatibleDomain(f"unknown perturbation {self.perturb!r}")
        if self.dim < 1 or self.low > self.high or not self.alpha > 0:
            raise IncompatibleDomain("domain needs dim >= 1, low <= high and alpha > 0")
        if not self.alphabet or not 0 <= self.min_len <= self.max_len:
            raise IncompatibleDomain("domain needs a non-empty alphabet and min-len <= max-len")

    def describe(self) -> str:
        if self.kind == "vector":
            flags = [f"dim={self.dim}", f"low={self.low:g}", f"high={self.high:g}", self.sign]
            if self.integer:
                flags.append("integer")
        elif self.kind == "pdf":
            flags = [f"dim={self.dim}", f"alpha={self.alpha:g}"]
        else:
            flags = [f"alphabet={self.alphabet}", f"min-len={self.min_len}",
                     f"max-len={self.max_len}", f"perturb={self.perturb}"]
            if self.equal_length:
                flags.append("equal-length")
        return f"{self.kind}:{','.join(flags)}"


_KEYS = {
    "dim": ("dim", int),
    "low": ("low", float),
    "high": ("high", float),
    "alpha": ("alpha", float),
    "alphabet": ("alphabet", str),
    "min-len": ("min_len", int),
    "max-len": ("max_len", int),
    "perturb": ("perturb", str),
}


def parse_domain(text: str, base: DomainSpec | None = None) -> DomainSpec:
    """Parse the domain mini-language; tokens override ``base`` when its kind matches."""
    kind, _, rest = text.strip().partition(":")
    spec = base if base is not None and base.kind == kind else DomainSpec(kind)
    changes: dict = {}
    for tok in filter(None, (t.strip() for t in rest.split(","))):
        key, eq, val = tok.partition("=")
        if not eq:
            if key in SIGNS:
                changes["sign"] = key
            elif key in ("integer", "equal-length"):
                changes[key.replace("-", "_")] = True
            else:
                raise IncompatibleDomain(f"unknown domain flag {key!r}")
            continue
        if key not in _KEYS:
            raise IncompatibleDomain(f"unknown domain key {key!r}")
        name, conv = _KEYS[key]
        try:
            changes[name] = conv(val)
        except ValueError:
            raise IncompatibleDomain(f"bad value for {key}: {val!r}") from None
    return replace(spec, **changes)


def default_domain(desc) -> DomainSpec:
    return parse_domain(desc.domain)


def _check_compatible(desc, domain: DomainSpec) -> None:
    want = {"vector": "vector", "dataset+vector": "vector", "pdf": "pdf", "string": "string"}
    if want[desc.input_kind] != domain.kind:
        raise IncompatibleDomain(
            f"{desc.id} takes {desc.input_kind} inputs, not a {domain.kind} domain"
        )
    if desc.output == "similarity":
        raise IncompatibleDomain(f"{desc.id} is a similarity with no distance to audit")


# sampling

def _clip_vector(dom: DomainSpec, v: np.ndarray) -> np.ndarray:
    lo = max(dom.low, 0.0) if dom.sign in ("nonneg", "positive") else dom.low
    v = np.clip(v, lo, dom.high)
    if dom.integer:
        v = np.round(v)
    if dom.sign == "positive":
        floor = 1.0 if dom.integer else 1e-3
        v = np.maximum(v, min(floor, dom.high))
    if dom.sign == "nonzero" and not v.any():
        v[0] = dom.high if dom.high != 0 else dom.low
    return v


def _sample(dom: DomainSpec, rng: np.random.Generator):
    if dom.kind == "vector":
        if dom.integer:
            v = rng.integers(math.ceil(dom.low), math.floor(dom.high) + 1, dom.dim).astype(float)
        else:
            v = rng.uniform(dom.low, dom.high, dom.dim)
        return _clip_vector(dom, v)
    if dom.kind == "pdf":
        return rng.dirichlet(np.full(dom.dim, dom.alpha))
    n = int(rng.integers(dom.min_len, dom.max_len + 1))
    return "".join(rng.choice(list(dom.alphabet), n))


def _sample_like(dom: DomainSpec, rng: np.random.Generator, x):
    """Independent sample, with the same length as ``x`` for equal-length domains."""
    if dom.kind == "string" and dom.equal_length:
        return "".join(rng.choice(list(dom.alphabet), len(x)))
    return _sample(dom, rng)


def _perturb(dom: DomainSpec, rng: np.random.Generator, x):
    if dom.kind == "vector":
        step = rng.normal(0.0, 0.1 * (dom.high - dom.low), dom.dim)
        return _clip_vector(dom, x + step)
    if dom.kind == "pdf":
        lam = rng.uniform(0.0, 0.5)
        return (1 - lam) * x + lam * rng.dirichlet(np.full(dom.dim, dom.alpha))
    s = list(x)
    n = len(s)
    if dom.perturb == "swap":
        if n >= 2:
            i = int(rng.integers(0, n - 1))
            s[i], s[i + 1] = s[i + 1], s[i]
        return "".join(s)
    if dom.perturb == "interchange":
        if n >= 2:
            i, j = rng.choice(n, 2, replace=False)
            s[i], s[j] = s[j], s[i]
        return "".join(s)
    ops = ["substitute"] if dom.equal_length else ["substitute", "insert", "delete"]
    op = ops[int(rng.integers(len(ops)))]
    if op == "insert" and n < dom.max_len:
        s.insert(int(rng.integers(0, n + 1)), rng.choice(list(dom.alphabet)))
    elif op == "delete" and n > dom.min_len:
        del s[int(rng.integers(0, n))]
    elif n:
        s[int(rng.integers(0, n))] = rng.choice(list(dom.alphabet))
    return "".join(s)


def _same(a, b) -> bool:
    if isinstance(a, str):
        return a == b
    return bool(np.array_equal(a, b))


def _plain(x):
    return x if isinstance(x, str) else [float(v) for v in x]


def _num(v: float):
    return v if math.isfinite(v) else ("inf" if v > 0 else "-inf")


# axiom checks

class _Distance:
    def __init__(self, desc, options):
        self.desc = desc
        self.options = options

    def __call__(self, a, b) -> float:
        return registry.distance_of(self.desc, self.desc.fn(a, b, **self.options))


def _slack(tol: float, *vals: float) -> float:
    finite = [abs(v) for v in vals if math.isfinite(v)]
    return tol * (1.0 + (max(finite) if finite else 0.0))


def _check(axiom: str, d: _Distance, inputs: tuple, tol: float):
    """Return the computed values if ``inputs`` violate ``axiom``, else None."""
    if axiom == "non-negativity":
        x, y = inputs
        v = d(x, y)
        return {"d(x,y)": v} if v < -tol else None
    if axiom == "identity":
        if len(inputs) == 1:
            (x,) = inputs
            v = d(x, x)
            return {"d(x,x)": v} if abs(v) > tol else None
        # the converse needs an exact zero: smooth divergences are O(|x-y|^2)
        # and would fall under any tolerance for near neighbours
        x, y = inputs
        v = d(x, y)
        return {"d(x,y)": v} if (not _same(x, y) and v == 0) else None
    if axiom == "symmetry":
        x, y = inputs
        a, b = d(x, y), d(y, x)
        if a == b:
            return None
        bad = not (math.isfinite(a) and math.isfinite(b)) or abs(a - b) > _slack(tol, a, b)
        return {"d(x,y)": a, "d(y,x)": b} if bad else None
    x, y, z = inputs
    xz, xy, yz = d(x, z), d(x, y), d(y, z)
    if xz <= xy + yz + _slack(tol, xz, xy, yz):
        return None
    return {"d(x,z)": xz, "d(x,y)": xy, "d(y,z)": yz}


def _axiom_inputs(axiom: str, x, y, z):
    if axiom == "triangle":
        return (x, y, z)
    return (x, y)


# shrinking

def _size(x) -> tuple:
    if isinstance(x, str):
        return (len(x), x)
    digits = 0
    for v in x:
        for k in range(13):
            if abs(round(v, k) - v) < 1e-12:
                break
        digits += k
    return (digits, float(np.abs(x).sum()))


def _shrink_one(dom: DomainSpec, rng: np.random.Generator, x):
    if isinstance(x, str):
        if not x:
            return x
        s = list(x)
        i = int(rng.integers(len(s)))
        move = int(rng.integers(3))
        if move == 0 and len(s) > dom.min_len and not dom.equal_length:
            del s[i]
        elif move == 1:
            s[i] = dom.alphabet[0]
        elif len(s) > 1:
            j = int(rng.integers(len(s)))
            s[i], s[j] = s[j], s[i]
        return "".join(s)
    k = int(rng.integers(0, 4))
    if dom.kind == "pdf":
        r = np.round(x, k)
        r[int(np.argmax(r))] += 1.0 - r.sum()
        if (r < 0).any():
            return x
        return np.round(r, k + 1)
    v = np.array(x, dtype=float)
    i = int(rng.integers(len(v)))
    v[i] = round(v[i], k) if rng.random() < 0.7 else round(v[i] / 2.0, k)
    return _clip_vector(dom, v)


def _valid(dom: DomainSpec, x) -> bool:
    if dom.kind == "pdf":
        return bool((x >= 0).all() and abs(x.sum() - 1.0) <= 1e-9)
    return True


def _shrink(axiom, d, inputs, values, dom, rng, tol):
    best, best_vals = list(inputs), values
    for _ in range(SHRINK_ROUNDS):
        k = int(rng.integers(len(best)))
        cand = list(best)
        cand[k] = _shrink_one(dom, rng, cand[k])
        if dom.kind == "string" and dom.equal_length and len({len(c) for c in cand}) > 1:
            continue
        if not _valid(dom, cand[k]) or _size(cand[k]) >= _size(best[k]):
            continue
        try:
            got = _check(axiom, d, tuple(cand), tol)
        except MeasureError:
            continue
        if got is not None:
            best, best_vals = cand, got
    return best, best_vals


# reports

@dataclass
class Verdict:
    axiom: str
    status: str  # "passed" or "violated"
    trials: int
    excluded: int = 0
    witness: dict | None = None


@dataclass
class AuditReport:
    measure_id: str
    claimed_metric: str
    domain: str
    trials: int
    seed: int
    tolerance: float
    verdicts: dict = field(default_factory=dict)
    expected_violations: list = field(default_factory=list)

    @property
    def violated(self) -> set:
        return {a for a, v in self.verdicts.items() if v.status == "violated"}

    def matches(self, claim: str | None = None) -> bool:
        """Do the verdicts agree with ``claim`` (the registry's by default)?"""
        claim = claim or self.claimed_metric
        bad = self.violated
        if claim == "metric":
            return not bad
        if claim == "semi-metric":
            return not bad & {"non-negativity", "identity", "symmetry"}
        if claim == "not-metric":
            return bool(bad) and set(self.expected_violations) <= bad
        return True

    def to_dict(self) -> dict:
        out = asdict(self)
        out["verdicts"] = {a: asdict(v) for a, v in self.verdicts.items()}
        out["matches_claim"] = self.matches()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"measure {self.measure_id} (claimed {self.claimed_metric})",
            f"domain {self.domain}; trials {self.trials}; seed {self.seed}; tol {self.tolerance:g}",
        ]
        for axiom in AXIOMS:
            v = self.verdicts[axiom]
            extra = f", {v.excluded} excluded" if v.excluded else ""
            if v.status == "passed":
                lines.append(f"  {axiom:<15} passed ({v.trials} trials{extra})")
            else:
                w = v.witness
                lines.append(f"  {axiom:<15} VIOLATED at trial {w['trial']}{extra}")
                lines.append(f"    inputs {json.dumps(w['inputs'])}")
                lines.append(f"    values {json.dumps(w['values'])}")
        lines.append("verdicts match claim" if self.matches() else "verdicts DO NOT match claim")
        return "\n".join(lines)


def audit(
    measure_id: str,
    domain: DomainSpec | str | None = None,
    trials: int = 10_000,
    seed: int = 0,
    tol: float = 1e-9,
    options: dict | None = None,
) -> AuditReport:
    """Check the four axioms for ``measure_id`` on ``trials`` sampled triples.

    Odd trials are chained (``y`` perturbs ``x``, ``z`` perturbs ``y``) so that
    near neighbours are covered; even trials are independent. Each axiom stops
    at its first violation. Samples on which the measure raises a
    :class:`MeasureError` are skipped and counted as excluded.
    """
    desc = registry.get(measure_id)
    if domain is None:
        dom = default_domain(desc)
    elif isinstance(domain, str):
        dom = parse_domain(domain, default_domain(desc))
    else:
        dom = domain
    _check_compatible(desc, dom)
    opts = {**desc.defaults, **registry.audit_options(desc, dom), **(options or {})}
    d = _Distance(desc, opts)
    rng = np.random.default_rng(seed)
    shrink_rng = np.random.default_rng([seed, 1])
    state = {a: {"trials": 0, "excluded": 0, "witness": None} for a in AXIOMS}
    for t in range(trials):
        x = _sample(dom, rng)
        if t % 2:
            y = _perturb(dom, rng, x)
            z = _perturb(dom, rng, y)
        else:
            y = _sample_like(dom, rng, x)
            z = _sample_like(dom, rng, x)
        open_axioms = [a for a in AXIOMS if state[a]["witness"] is None]
        if not open_axioms:
            break
        for axiom in open_axioms:
            st = state[axiom]
            cases = [(x,), (x, y)] if axiom == "identity" else [_axiom_inputs(axiom, x, y, z)]
            if axiom == "identity" and t % 2:
                cases.append((y, z))
            hit = None
            try:
                for inputs in cases:
                    got = _check(axiom, d, inputs, tol)
                    if got is not None:
                        hit = (inputs, got)
                        break
            except MeasureError:
                st["excluded"] += 1
                continue
            st["trials"] += 1
            if hit is not None:
                inputs, got = _shrink(axiom, d, hit[0], hit[1], dom, shrink_rng, tol)
                st["witness"] = {
                    "trial": t,
                    "inputs": [_plain(v) for v in inputs],
                    "values": {k: _num(v) for k, v in got.items()},
                }
    report = AuditReport(
        measure_id=desc.id,
        claimed_metric=desc.claimed_metric,
        domain=dom.describe(),
        trials=trials,
        seed=seed,
        tolerance=tol,
        expected_violations=sorted(desc.expected_violations),
    )
    for axiom in AXIOMS:
        st = state[axiom]
        report.verdicts[axiom] = Verdict(
            axiom=axiom,
            status="violated" if st["witness"] else "passed",
            trials=st["trials"],
            excluded=st["excluded"],
            witness=st["witness"],
        )
    return report


# Claims table: measures asserted to be metrics, and the axiom each
# asserted non-metric is said to break.
GOLDEN_VERDICTS = {
    "euclidean": set(),
    "minkowski": set(),
    "chebyshev": set(),
    "manhattan": set(),
    "angular": set(),
    "jaccard": set(),
    "hamming": set(),
    "levenshtein": set(),
    "jensen-shannon-sqrt": set(),
    "cosine-distance": {"triangle"},
    "dice": {"triangle"},
    "kl": {"symmetry"},
    "pearson-chi2": {"symmetry"},
    "neyman-chi2": {"symmetry"},
    "swap": {"triangle"},
    "parallel-interchange": {"triangle"},
    "jaro": {"identity"},
    "jaro-winkler": {"identity"},
    "ngram": {"identity"},
    "lorentzian": {"identity"},
}


def golden_check(report: AuditReport) -> bool:
    """Metrics must pass every axiom; non-metrics must break at least the listed ones."""
    want = GOLDEN_VERDICTS[report.measure_id]
    return report.violated == want if not want else want <= report.violated


# relation suite

@dataclass
class Relation:
    name: str
    max_deviation: float
    samples: int
    tolerance: float

    @property
    def passed(self) -> bool:
        if self.tolerance == 0:
            return self.max_deviation == 0
        return self.max_deviation < self.tolerance


def _well_conditioned_pdf(rng, dim):
    # bounded away from zero so ratios stay O(1)
    return 0.5 * rng.dirichlet(np.ones(dim)) + 0.5 / dim


def relation_suite(seed: int = 0, trials: int = 1000, tol: float = 1e-12) -> list[Relation]:
    """Evaluate the cross-measure identities on ``trials`` seeded inputs each."""
    rng = np.random.default_rng(seed)
    pdf_rel = {
        "topsoe = 2 * jensen-shannon": lambda p, q: ent.topsoe(p, q) - 2 * ent.jensen_shannon(p, q),
        "jensen-difference = jensen-shannon":
            lambda p, q: ent.jensen_difference(p, q) - ent.jensen_shannon(p, q),
        "k(p,q) + k(q,p) = topsoe":
            lambda p, q: ent.k_divergence(p, q) + ent.k_divergence(q, p) - ent.topsoe(p, q),
        "k(p,q) = kl(p, (p+q)/2)":
            lambda p, q: ent.k_divergence(p, q) - ent.kl_divergence(p, (p + q) / 2),
        "j = kl(p,q) + kl(q,p)":
            lambda p, q: ent.j_divergence(p, q) - ent.kl_divergence(p, q) - ent.kl_divergence(q, p),
        "cross-entropy = kl + entropy":
            lambda p, q: ent.cross_entropy(p, q) - ent.kl_divergence(p, q) - ent.shannon_entropy(p),
        "hellinger^2 = 1 - bc":
            lambda p, q: fid.hellinger(p, q) ** 2 - (1 - fid.bhattacharyya_coefficient(p, q)),
        "matusita = sqrt(2) * hellinger":
            lambda p, q: fid.matusita(p, q) - math.sqrt(2) * fid.hellinger(p, q),
        "squared-chord = 2 - 2 bc":
            lambda p, q: fid.squared_chord(p, q).distance - (2 - 2 * fid.bhattacharyya_coefficient(p, q)),
        "squared-chord = matusita^2":
            lambda p, q: fid.squared_chord(p, q).distance - fid.matusita(p, q) ** 2,
        "2 * clark^2 = divergence":
            lambda p, q: 2 * chi.clark(p, q) ** 2 - chi.divergence_distance(p, q),
        "additive-symmetric = pearson + neyman":
            lambda p, q: chi.additive_symmetric_chi2(p, q) - chi.pearson_chi2(p, q) - chi.neyman_chi2(p, q),
        "pearson(p,q) = neyman(q,p)":
            lambda p, q: chi.pearson_chi2(p, q) - chi.neyman_chi2(q, p),
        "intersection dist = l1 / 2":
            lambda p, q: inter.intersection(p, q).distance - 0.5 * mk.manhattan(p, q),
        "soergel = jaccard-pdf dist":
            lambda p, q: mk.soergel(p, q) - inter.jaccard_pdf(p, q).distance,
        "motyka sim = sorensen sim / 2":
            lambda p, q: inter.motyka(p, q).similarity - 0.5 * inter.sorensen(p, q).similarity,
        "kulczynski-pdf sim * dist = 1":
            lambda p, q: (lambda r: r.similarity * r.distance - 1)(inter.kulczynski_pdf(p, q)),
        "sed entropy mode = exp(js) - 1":
            lambda p, q: ent.sed(p, q) - math.expm1(ent.jensen_shannon(p, q)),
    }
    vec_rel = {
        "inner-product dist = euclidean":
            lambda p, q: ip.inner_product(p, q).distance - mk.euclidean(p, q),
        "squared-euclidean = euclidean^2 (relative)":
            lambda p, q: (mk.squared_euclidean(p, q) - mk.euclidean(p, q) ** 2)
            / (1 + mk.squared_euclidean(p, q)),
        "dice = 2 j / (1 + j)":
            lambda p, q: (lambda j: ip.dice(p, q).similarity - 2 * j / (1 + j))(
                ip.jaccard_vector(p, q).similarity),
        "cosine sim + dist = 1": lambda p, q: sum(ip.cosine(p, q)) - 1,
        "mahalanobis(identity) = euclidean":
            lambda p, q: chi.mahalanobis(p, q, chi.identity_model(len(p))) - mk.euclidean(p, q),
    }
    alphabet = list("abcd")

    def rand_str():
        return "".join(rng.choice(alphabet, int(rng.integers(0, 13))))

    str_rel = {
        "levenshtein(sub=2) = |p| + |q| - 2 lcs":
            lambda p, q: rr.levenshtein(p, q, sub=2) - (len(p) + len(q) - 2 * ss.lcs(p, q)),
        "hcs(unit weights) = lcs":
            lambda p, q: ss.hcs(p, q, dict.fromkeys(alphabet, 1)) - ss.lcs(p, q),
        "lcsk(k=1) = lcs": lambda p, q: ss.lcsk(p, q, 1) - ss.lcs(p, q),
        "jaro-winkler(scale=0) = jaro":
            lambda p, q: ss.jaro_winkler(p, q, scale=0).similarity - ss.jaro(p, q).similarity,
    }
    pdfs = [(_well_conditioned_pdf(rng, int(rng.integers(2, 9))),) for _ in range(trials)]
    pdf_pairs = [(p, _well_conditioned_pdf(rng, p.size)) for (p,) in pdfs]
    vec_pairs = []
    for _ in range(trials):
        n = int(rng.integers(1, 9))
        vec_pairs.append((rng.uniform(0.1, 10, n), rng.uniform(0.1, 10, n)))
    str_pairs = [(rand_str(), rand_str()) for _ in range(trials)]
    out = []
    for rels, pairs in ((pdf_rel, pdf_pairs), (vec_rel, vec_pairs), (str_rel, str_pairs)):
        for name, f in rels.items():
            dev = max(abs(f(a, b)) for a, b in pairs)
            out.append(Relation(name, float(dev), len(pairs), tol))
    # self-distance of every registered distance that claims identity
    for desc in registry.registry_list():
        if desc.output == "similarity" or desc.claimed_metric not in ("metric", "semi-metric"):
            continue
        dom = default_domain(desc)
        opts = {**desc.defaults, **registry.audit_options(desc, dom)}
        d = _Distance(desc, opts)
        worst, used = 0.0, 0
        for _ in range(trials):
            x = _sample(dom, rng)
            try:
                worst = max(worst, abs(d(x, x)))
            except MeasureError:
                continue  # outside the measure's domain, e.g. the zero vector
            used += 1
        out.append(Relation(f"{desc.id}: d(x, x) = 0", worst, used, 0.0))
    return out
