"""
Corpus sweeps: the duality, correspondence, reachability, classification
and logic checks run over every small transit or over seeded samples.

Every sweep returns a ``SweepReport``. Exhaustive sweeps walk the frames
produced by ``enumerate_transits_upto``; sampling sweeps draw their inputs
from a seeded numpy generator in the calling process, so the inputs, and
therefore the report, do not depend on the worker count. With ``jobs > 1``
the items are split into contiguous chunks whose failures are concatenated
in chunk order.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import (
    FMP_MAX_POINTS,
    MAX_FORMULA_DEPTH,
    RANDOM_SEED,
    REACHABILITY_MAX_POINTS,
    SWEEP_MAX_POINTS,
    SWEEP_SAMPLES,
)
from src.algebra.congruences import cong_to_filter, congruences_bruteforce, filter_to_cong
from src.algebra.constructions import quotient, quotient_map, subdirect_embedding_check
from src.algebra.filters import dia_compatible, dia_filters, is_dia_filter, principal_filter
from src.algebra.tha import FiniteTHA
from src.core.errors import UsageError
from src.core.order import BinRel, compose
from src.duality.characterisation import classify_with_frame
from src.duality.clop import clop_frame
from src.duality.correspondence import arcup_to_filter, filter_to_arcup
from src.duality.isomorphisms import gamma_check, pi_check
from src.duality.morphisms import naturality_check
from src.duality.spectrum import spec_algebra
from src.frames.enumeration import enumerate_transits_upto
from src.frames.reachability import (
    FINITE,
    GENERAL,
    archival_upsets,
    archival_witness,
    topo_relation,
    z_relation,
    z_roots,
)
from src.frames.transit import TemporalTransit, validate_transit
from src.logic.filtration import (
    filtrate,
    filtration_conditions_check,
    filtration_lemma_check,
    subformula_closure,
)
from src.logic.formula import Atom, Bot, Dia, Formula, Imp, Or, THC_AXIOMS, thc_axioms
from src.logic.models import AlgebraicModel, RelationalModel
from src.logic.parser import parse_formula, print_formula
from src.logic.random_gen import random_formula, random_model
from src.logic.search import countermodel_search
from src.logic.semantics import (
    algebra_validates,
    frame_validates,
    model_validity_transfer_check,
    pd_preserves,
    truth_lemma_check,
)

logger = logging.getLogger(__name__)

FrameKey = Tuple[int, Tuple[int, ...]]


@dataclass
class SweepReport:
    """Outcome of one sweep: how many items were checked and what failed."""

    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    parameters: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, limit: int = 20) -> Dict[str, Any]:
        return {
            "sweep": self.name,
            "parameters": dict(self.parameters),
            "checked": self.checked,
            "failed": len(self.failures),
            "ok": self.ok,
            "failures": self.failures[:limit],
        }


def frame_key(f: TemporalTransit) -> FrameKey:
    return f.size, f.r_fwd.rows


@lru_cache(maxsize=None)
def _frame(key: FrameKey) -> TemporalTransit:
    n, rows = key
    return TemporalTransit(n, BinRel(n, rows))


@lru_cache(maxsize=4096)
def _algebra(key: FrameKey) -> FiniteTHA:
    return clop_frame(_frame(key)).algebra


def corpus_keys(max_points: int) -> List[FrameKey]:
    """Every transit on at most ``max_points`` points, in enumeration order."""
    return [frame_key(f) for f in enumerate_transits_upto(max_points)]


def _run_chunk(check: Callable[[Any], List[str]], items: Sequence[Any]) -> List[str]:
    failures: List[str] = []
    for item in items:
        failures.extend(check(item))
    return failures


def run_items(check: Callable[[Any], List[str]], items: Sequence[Any], jobs: int = 1) -> List[str]:
    """Apply a top-level check to every item, optionally across processes."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return _run_chunk(check, items)
    size = -(-len(items) // jobs)
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_run_chunk, [check] * len(chunks), chunks))
    return [failure for part in parts for failure in part]


# Per-item checks. They are module-level so worker processes can import them.


def check_duality(key: FrameKey) -> List[str]:
    f = _frame(key)
    failures = []
    gamma = gamma_check(f)
    if not gamma.ok:
        failures.append(f"frame {key}: gamma fails {gamma.clauses()}")
    pi = pi_check(_algebra(key))
    if not pi.ok:
        failures.append(f"frame {key}: pi fails {pi.clauses()}")
    return failures


def check_correspondence(key: FrameKey) -> List[str]:
    a = _algebra(key)
    spectrum = spec_algebra(a)
    congs = congruences_bruteforce(a)
    dfs = dia_filters(a)
    arcs = archival_upsets(spectrum.frame)
    if not len(congs) == len(dfs) == len(arcs):
        return [f"frame {key}: |Cong|={len(congs)}, |♦Filt|={len(dfs)}, |ArcUp|={len(arcs)}"]

    failures = []
    images = [cong_to_filter(theta) for theta in congs]
    if sorted(f.elements for f in images) != sorted(f.elements for f in dfs):
        failures.append(f"frame {key}: congruences do not map onto the ♦-filters")
    for theta, image in zip(congs, images):
        if filter_to_cong(image).classes != theta.classes:
            failures.append(f"frame {key}: round trip changes congruence {theta}")
    for i, (t1, f1) in enumerate(zip(congs, images)):
        for t2, f2 in zip(congs[i:], images[i:]):
            if (t1 <= t2) != (f1 <= f2) or (t2 <= t1) != (f2 <= f1):
                failures.append(f"frame {key}: containment not preserved between {t1} and {t2}")

    arc_images = [filter_to_arcup(a, f, spectrum) for f in dfs]
    if sorted(arc_images) != arcs:
        failures.append(f"frame {key}: ♦-filters do not map onto the archival upsets")
    for f, c in zip(dfs, arc_images):
        if arcup_to_filter(a, c, spectrum).elements != f.elements:
            failures.append(f"frame {key}: archival round trip changes filter {bin(f.elements)}")
    for f1, c1 in zip(dfs, arc_images):
        for f2, c2 in zip(dfs, arc_images):
            if (f1 <= f2) != (c2 & ~c1 == 0):
                failures.append(f"frame {key}: filter-upset order is not reversed")

    compatible = dia_compatible(a)
    for x in range(a.size):
        if bool(compatible >> x & 1) != is_dia_filter(principal_filter(a, x)):
            failures.append(f"frame {key}: element {x} disagrees between ♦Com and ♦Filt")
    for f in dfs:
        generator = a.meet_all(f.elements)
        if not compatible >> generator & 1 or a.up(generator) != f.elements:
            failures.append(f"frame {key}: ♦-filter {bin(f.elements)} is not ↑ of a ♦-compatible element")
    return failures


def check_reachability(key: FrameKey) -> List[str]:
    f = _frame(key)
    failures = []
    report = validate_transit(f)
    if not report.ok:
        failures.append(f"frame {key}: not a transit {report.clauses()}")
        return failures

    z = z_relation(f)
    arcs = archival_upsets(f)
    if topo_relation(f, arcs) != z:
        failures.append(f"frame {key}: topo-reachability differs from Z at {topo_relation(f, arcs).difference_pair(z)}")
    identity = BinRel.identity(f.size)
    if not identity.issubset(z) or not f.leq.issubset(z) or not compose(z, z).issubset(z):
        failures.append(f"frame {key}: Z is not a reflexive transitive extension of ≤")
    outside = f.carrier & ~z_roots(f, z)
    if outside and not (f.is_upset(outside) and archival_witness(f, outside) is None):
        failures.append(f"frame {key}: non-roots {bin(outside)} are not an archival upset")
    for i, s in enumerate(arcs):
        for t in arcs[i:]:
            if s & t not in arcs:
                failures.append(f"frame {key}: archival upsets not closed under ∩ at {bin(s)}, {bin(t)}")
    for s in range(1 << f.size):
        if (archival_witness(f, s, GENERAL) is None) != (archival_witness(f, s, FINITE) is None):
            failures.append(f"frame {key}: archival modes disagree on {bin(s)}")
    return failures


def check_characterisation(key: FrameKey) -> List[str]:
    a = _algebra(key)
    result = classify_with_frame(a)
    failures = []
    if not result.consistent:
        failures.append(f"frame {key}: routes disagree {result.to_dict()}")
    if a.size >= 2 and result.simple and not result.subdirectly_irreducible:
        failures.append(f"frame {key}: simple but not subdirectly irreducible")
    return failures


def check_soundness(key: FrameKey) -> List[str]:
    f = _frame(key)
    a = _algebra(key)
    failures = []
    for name, axiom in THC_AXIOMS:
        refutation = frame_validates(f, axiom)
        if refutation is not None:
            failures.append(f"frame {key}: axiom {name} refuted by {refutation}")
        valuation = algebra_validates(a, axiom)
        if valuation is not None:
            failures.append(f"frame {key}: axiom {name} not top in Clop under {valuation}")
    return failures


def check_pd(item: Tuple[FrameKey, Formula, Formula]) -> List[str]:
    key, phi, chi = item
    if pd_preserves(_frame(key), phi, chi):
        return []
    return [f"frame {key}: PD fails for {print_formula(phi)} / {print_formula(chi)}"]


def check_truth_lemma(item: Tuple[FrameKey, Dict[str, int], Formula]) -> List[str]:
    key, valuation, f = item
    m = AlgebraicModel(_algebra(key), valuation)
    failures = []
    if not truth_lemma_check(m, f):
        failures.append(f"frame {key}: truth lemma fails for {print_formula(f)} under {valuation}")
    if not model_validity_transfer_check(m, f):
        failures.append(f"frame {key}: validity transfer fails for {print_formula(f)} under {valuation}")
    return failures


def check_filtration(item: Tuple[FrameKey, Dict[str, int], Formula]) -> List[str]:
    key, valuation, f = item
    m = RelationalModel(_frame(key), valuation)
    sigma = subformula_closure(f)
    result = filtrate(m, sigma)
    failures = []
    if not validate_transit(result.model.frame).ok:
        failures.append(f"frame {key}: filtrated frame through {print_formula(f)} is not a transit")
    if result.size > 2 ** len(sigma):
        failures.append(f"frame {key}: {result.size} classes exceed 2^{len(sigma)}")
    conditions = filtration_conditions_check(m, sigma, result)
    if not conditions.ok:
        failures.append(f"frame {key}: filtration conditions {conditions.clauses()} fail for {print_formula(f)}")
    if not filtration_lemma_check(m, f):
        failures.append(f"frame {key}: filtration changes truth of {print_formula(f)}")
    return failures


def check_subdirect(key: FrameKey) -> List[str]:
    a = _algebra(key)
    failures = []
    report = subdirect_embedding_check(a)
    if not report.ok:
        failures.append(f"frame {key}: subdirect embedding fails {report.clauses()}")
    for theta in congruences_bruteforce(a):
        square = naturality_check(quotient_map(theta), a, quotient(a, theta))
        if not square.ok:
            failures.append(f"frame {key}: naturality fails for quotient by {theta}")
    return failures


# Sweeps.


def _exhaustive(name: str, check: Callable[[FrameKey], List[str]], max_points: int, jobs: int) -> SweepReport:
    keys = corpus_keys(max_points)
    logger.info(f"Sweep {name}: {len(keys)} frames on at most {max_points} points")
    return SweepReport(name, len(keys), run_items(check, keys, jobs), {"max_points": max_points})


def sweep_duality(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    return _exhaustive("duality", check_duality, max_points, jobs)


def sweep_correspondence(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    return _exhaustive("correspondence", check_correspondence, max_points, jobs)


def sweep_reachability(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    return _exhaustive("reachability", check_reachability, max_points, jobs)


def sweep_characterisation(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    return _exhaustive("characterisation", check_characterisation, max_points, jobs)


def sweep_subdirect(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    return _exhaustive("subdirect", check_subdirect, max_points, jobs)


def sweep_soundness(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    """Axioms on every frame and its algebra, then PD on sampled triples."""
    report = _exhaustive("soundness", check_soundness, max_points, jobs)
    keys = corpus_keys(max_points)
    rng = np.random.default_rng(seed)
    triples = []
    for _ in range(samples):
        key = keys[int(rng.integers(len(keys)))]
        triples.append((key, random_formula(rng, depth=2), random_formula(rng, depth=2)))
    report.failures.extend(run_items(check_pd, triples, jobs))
    report.checked += len(triples)
    report.parameters.update(samples=samples, seed=seed)
    return report


def sweep_truth_lemma(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    keys = corpus_keys(max_points)
    rng = np.random.default_rng(seed)
    items = []
    for _ in range(samples):
        key = keys[int(rng.integers(len(keys)))]
        size = _algebra(key).size
        valuation = {name: int(rng.integers(size)) for name in ("p", "q")}
        items.append((key, valuation, random_formula(rng, depth=MAX_FORMULA_DEPTH)))
    logger.info(f"Sweep truth_lemma: {len(items)} samples")
    failures = run_items(check_truth_lemma, items, jobs)
    return SweepReport("truth_lemma", len(items), failures, {"max_points": max_points, "samples": samples, "seed": seed})


def sweep_filtration(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    """Random models on up to three times ``max_points`` points."""
    model_points = 3 * max_points
    rng = np.random.default_rng(seed)
    items = []
    for _ in range(samples):
        m = random_model(rng, model_points)
        items.append((frame_key(m.frame), dict(m.valuation), random_formula(rng, depth=MAX_FORMULA_DEPTH)))
    logger.info(f"Sweep filtration: {len(items)} samples on up to {model_points} points")
    failures = run_items(check_filtration, items, jobs)
    return SweepReport("filtration", len(items), failures, {"model_points": model_points, "samples": samples, "seed": seed})


def sweep_fmp(max_points: int, samples: int, seed: int, jobs: int = 1) -> SweepReport:
    """Known refutations and known theorems, with a worker-count comparison."""
    report = SweepReport("fmp", parameters={"max_points": max_points})
    expected_sizes = {"box p -> p": (1, 2), "p | (p -> bot)": (2, 2)}
    for text, (low, high) in expected_sizes.items():
        result = countermodel_search(parse_formula(text), max_points, jobs=jobs)
        report.checked += 1
        if not result.found or not low <= result.model.frame.size <= high:
            report.failures.append(f"{text}: expected a countermodel on {low}..{high} points, got {result.to_dict()}")

    theorems = [Imp(Dia(Atom("p")), Atom("p"))] + thc_axioms()
    for f in theorems:
        result = countermodel_search(f, max_points, jobs=jobs)
        report.checked += 1
        if result.found:
            report.failures.append(f"{print_formula(f)}: unexpected countermodel {result.to_dict()}")

    probe = Or(Atom("p"), Imp(Atom("p"), Bot()))
    sequential = countermodel_search(probe, max_points, jobs=1).to_dict()
    parallel = countermodel_search(probe, max_points, jobs=max(jobs, 2)).to_dict()
    report.checked += 1
    if sequential != parallel:
        report.failures.append(f"worker count changes the search result: {sequential} vs {parallel}")
    return report


SWEEPS: Dict[str, Callable[..., SweepReport]] = {
    "duality": sweep_duality,
    "correspondence": sweep_correspondence,
    "reachability": sweep_reachability,
    "characterisation": sweep_characterisation,
    "soundness": sweep_soundness,
    "truth_lemma": sweep_truth_lemma,
    "filtration": sweep_filtration,
    "fmp": sweep_fmp,
    "subdirect": sweep_subdirect,
}

# Sweeps whose default corpus differs from SWEEP_MAX_POINTS
DEFAULT_MAX_POINTS: Dict[str, int] = {
    "fmp": FMP_MAX_POINTS,
    "reachability": REACHABILITY_MAX_POINTS,
}


def run_sweep(
    name: str,
    max_points: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: int = 1,
) -> SweepReport:
    """
    Run a named sweep with configured defaults.

    Raises:
        UsageError: If the sweep name is unknown
    """
    if name not in SWEEPS:
        raise UsageError(f"Unknown sweep '{name}'; choose from {', '.join(SWEEPS)}")
    start_time = time.time()
    report = SWEEPS[name](
        DEFAULT_MAX_POINTS.get(name, SWEEP_MAX_POINTS) if max_points is None else max_points,
        SWEEP_SAMPLES if samples is None else samples,
        RANDOM_SEED if seed is None else seed,
        jobs,
    )
    logger.info(f"Sweep {name} checked {report.checked} items in {time.time() - start_time:.2f}s")
    return report
