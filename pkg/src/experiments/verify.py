"""
The full verification suite.

Each check returns a list of mismatch lines (empty on success). The suite
runs them in a fixed order, times each one and collects the results in a
VerificationReport; the CLI turns a failed report into exit code 1.
"""

import logging
import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from src.core.logging import OperationTimer
from src.domination.dominating import (
    DEFAULT_EXACT_CAP,
    domination_number_exact,
    domination_number_tree,
    is_dominating,
)
from src.enumeration.canonical import DEFAULT_CANONICAL_CAP, tree_canonical_code
from src.enumeration.connected import connected_graphs
from src.enumeration.free_trees import free_trees
from src.experiments.census import run_census
from src.experiments.checks import graph_facts, graph_violations
from src.experiments.counterexamples import find_counterexamples
from src.experiments.tables import (
    TABLE2_SPECTRA,
    build_table1,
    describe_mismatch,
    match_spectra,
    table3_mismatches,
    verify_table1,
)
from src.families.constructors import double_starlike, gamma_tree, path, perfect_binary_tree
from src.families.gamma import enumerate_gamma, is_gamma_member, weak_compositions
from src.families.properties import check_properties
from src.families.random_trees import random_gamma_spec, random_tree
from src.families.specs import DoubleStarSpec, GammaSpec
from src.graph.core import diameter, diameter_path, pendant_vertices, tree_diameter
from src.graph.formats import to_graph6
from src.spectral.dense import (
    DEFAULT_THRESHOLD_GUARD,
    eigenvalues_dense,
    guarded_count_below,
)
from src.spectral.detm import build_M, det_M, exact_determinant, verify_det_M
from src.spectral.inertia import inertia_at, m_below_one
from src.spectral.rational import parse_rational

logger = logging.getLogger(__name__)

SAMPLE_ALPHAS = ("1/2", "1", "3/2", "2", "3")


@dataclass
class CheckResult:
    """Outcome of one named check."""

    name: str
    mismatches: list[str]
    duration_seconds: float

    @property
    def passed(self) -> bool:
        return not self.mismatches


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def mismatch_lines(self) -> list[str]:
        return [f"[{r.name}] {line}" for r in self.results for line in r.mismatches]


def check_census(n_min: int = 5, n_max: int = 14, workers: int = 1) -> list[str]:
    """Free-tree counts and extremal counts per order, with zero theorem violations."""
    rows = run_census(n_min, n_max, workers=workers)
    mismatches = table3_mismatches(rows)
    for row in rows:
        if row.violations_total:
            mismatches.append(f"n={row.n}: {row.violations_total} theorem violations")
    return mismatches


def check_table1() -> list[str]:
    return verify_table1(build_table1())


def check_counterexamples(
    workers: int = 1, canonical_cap: int = DEFAULT_CANONICAL_CAP
) -> list[str]:
    """No counterexample up to 5 vertices; exactly the nine published ones on 6."""
    mismatches = []
    for n in range(1, 6):
        found = find_counterexamples(n, workers=workers, canonical_cap=canonical_cap)
        if found:
            mismatches.append(f"n={n}: expected none, found {len(found)}")

    records = find_counterexamples(6, workers=workers, canonical_cap=canonical_cap)
    if len(records) != len(TABLE2_SPECTRA):
        mismatches.append(f"n=6: expected {len(TABLE2_SPECTRA)} records, found {len(records)}")
    for record in records:
        if record.diameter != 3 or record.m_below_1 != 1:
            mismatches.append(
                f"{record.graph6}: diameter {record.diameter}, m[0,1) {record.m_below_1}"
            )
    spectra = [record.spectrum for record in records]
    if match_spectra(spectra, TABLE2_SPECTRA) is None:
        mismatches.extend(describe_mismatch(spectra, TABLE2_SPECTRA, 0.001))
    return mismatches


def check_path_formula(n_max: int = 300) -> list[str]:
    """m_{P_n}[0,1) = ceil(n/3), and 1 is an eigenvalue exactly when 3 | n."""
    mismatches = []
    for n in range(1, n_max + 1):
        triple = inertia_at(path(n), 1)
        if triple.below != -(-n // 3):
            mismatches.append(f"P_{n}: m[0,1) = {triple.below}, expected {-(-n // 3)}")
        if (triple.equal == 1) != (n % 3 == 0) or triple.equal > 1:
            mismatches.append(f"P_{n}: eigenvalue 1 multiplicity {triple.equal}")
    return mismatches


def check_double_starlike(d_max: int = 20, pq_max: int = 6) -> list[str]:
    """m[0,1) = ceil((d + 1) / 3) for every T(d, p, q) in range."""
    mismatches = []
    for d in range(2, d_max + 1):
        expected = -(-(d + 1) // 3)
        for p in range(1, pq_max + 1):
            for q in range(1, pq_max + 1):
                tree = double_starlike(DoubleStarSpec(d=d, p=p, q=q))
                found = m_below_one(tree)
                if found != expected:
                    mismatches.append(f"T({d},{p},{q}): m[0,1) = {found}, expected {expected}")
    return mismatches


def check_gamma_properties(samples: int = 50, n_max: int = 40, seed: int = 0) -> list[str]:
    """P1-P5 on random Γ members, plus the Γ(12, 8) family and its γ = 3 witness."""
    rng = random.Random(seed)
    mismatches = []
    specs = [random_gamma_spec(rng, n_max) for _ in range(samples)] + enumerate_gamma(12, 8)
    for spec in specs:
        tree = gamma_tree(spec)
        report = check_properties(tree, spec)
        if not report.all_hold:
            mismatches.append(f"{spec}: {', '.join(report.failed())} fail")
        if report.one_multiplicity != tree.n - spec.d:
            mismatches.append(f"{spec}: eigenvalue 1 multiplicity {report.one_multiplicity}")

    for spec in enumerate_gamma(12, 8):
        tree = gamma_tree(spec)
        if not is_dominating(tree, [1, 4, 7]):
            mismatches.append(f"{spec}: v_2, v_5, v_8 do not dominate")
        if domination_number_tree(tree).gamma != 3:
            mismatches.append(f"{spec}: γ != 3")
    return mismatches


def check_gamma_recognizer(n_max: int = 20, dedupe_max: int = 16) -> list[str]:
    """Recognizer round trip, and enumerate_gamma sizes against isomorphism dedupe."""
    mismatches = []
    for n in range(3, n_max + 1):
        for d in range(2, n):
            specs = enumerate_gamma(n, d)
            for spec in specs:
                recovered = is_gamma_member(gamma_tree(spec))
                if recovered != spec.normalized():
                    mismatches.append(f"{spec}: recognizer returned {recovered}")
            if n <= dedupe_max and d % 3 == 2:
                codes = {
                    tree_canonical_code(gamma_tree(GammaSpec(d=d, parts=parts)))
                    for parts in weak_compositions(n - d - 1, (d + 1) // 3)
                }
                if len(codes) != len(specs):
                    mismatches.append(
                        f"Γ({n},{d}): {len(specs)} specs but {len(codes)} isomorphism classes"
                    )
    return mismatches


def check_detm(n_max: int = 1000, exact_max: int = 40) -> list[str]:
    mismatches = verify_det_M(n_max)
    for n in range(1, exact_max + 1):
        direct = exact_determinant(build_M(n))
        if direct != det_M(n):
            mismatches.append(f"n={n}: recurrence {det_M(n)} != determinant {direct}")
    return mismatches


def check_domination_oracle(n_max: int = 12) -> list[str]:
    """Tree DP equals subset search, and its witness dominates."""
    mismatches = []
    for n in range(1, n_max + 1):
        for tree in free_trees(n):
            dp = domination_number_tree(tree)
            exact = domination_number_exact(tree)
            if dp.gamma != exact.gamma:
                mismatches.append(f"n={n} {tree.edges}: DP {dp.gamma} != search {exact.gamma}")
            if len(dp.witness) != dp.gamma or not is_dominating(tree, dp.witness):
                mismatches.append(f"n={n} {tree.edges}: bad witness {dp.witness}")
    return mismatches


def check_dense_agreement(
    n_max: int = 12, guard: float = DEFAULT_THRESHOLD_GUARD
) -> list[str]:
    """
    Exact counts agree with Jacobi counts at the sample thresholds.

    Near-threshold eigenvalues make the floating count ambiguous; those
    cases are logged and skipped. Also checks trace = sum of eigenvalues,
    that mu_1 is 0 and that the whole diameter computation agrees.
    """
    mismatches = []
    alphas = [parse_rational(a) for a in SAMPLE_ALPHAS]
    guarded = 0
    for n in range(1, n_max + 1):
        for tree in free_trees(n):
            spectrum = eigenvalues_dense(tree)
            trace = sum(tree.degrees())
            if abs(sum(spectrum.values) - trace) > n * spectrum.tolerance + 1e-9:
                mismatches.append(f"n={n} {tree.edges}: eigenvalue sum != trace {trace}")
            if abs(spectrum.values[0]) > 1e-9:
                mismatches.append(f"n={n} {tree.edges}: mu_1 = {spectrum.values[0]}")
            if diameter(tree) != tree_diameter(tree):
                mismatches.append(f"n={n} {tree.edges}: double BFS diameter disagrees")
            for alpha in alphas:
                dense = guarded_count_below(spectrum, alpha, guard)
                exact = inertia_at(tree, alpha).below
                if dense is None:
                    guarded += 1
                    logger.warning(
                        f"{to_graph6(tree)} alpha={alpha}: eigenvalue within {guard} of "
                        f"the threshold, exact count {exact} not cross-checked"
                    )
                    continue
                if dense != exact:
                    mismatches.append(
                        f"n={n} {tree.edges} alpha={alpha}: exact {exact} != dense {dense}"
                    )
    logger.info(f"Dense agreement: {guarded} near-threshold counts deferred to the exact count")
    return mismatches


def check_interlacing(samples: int = 200, seed: int = 0, n_max: int = 30) -> list[str]:
    """Adding an edge to a random tree never lowers any eigenvalue."""
    rng = random.Random(seed)
    mismatches = []
    for _ in range(samples):
        tree = random_tree(rng.randint(3, n_max), rng)
        non_edges = [
            (u, v) for u in range(tree.n) for v in range(u + 1, tree.n) if not tree.has_edge(u, v)
        ]
        u, v = rng.choice(non_edges)
        before = eigenvalues_dense(tree)
        after = eigenvalues_dense(tree.with_edge(u, v))
        tol = before.tolerance + after.tolerance + 1e-9
        if any(b < a - tol for a, b in zip(before.values, after.values)):
            mismatches.append(f"{tree.edges} + ({u},{v}): an eigenvalue decreased")
        if abs(after.values[0]) > tol:
            mismatches.append(f"{tree.edges} + ({u},{v}): mu_1 = {after.values[0]}")
    return mismatches


def check_pendant_monotonicity(n_max: int = 12, samples: int = 200, seed: int = 0) -> list[str]:
    """Deleting a pendant vertex never raises m[0,1)."""
    rng = random.Random(seed)
    trees = [tree for n in range(2, n_max + 1) for tree in free_trees(n)]
    trees += [random_tree(rng.randint(2, 40), rng) for _ in range(samples)]

    mismatches = []
    one = Fraction(1)
    for tree in trees:
        whole = inertia_at(tree, one).below
        for v in sorted(pendant_vertices(tree)):
            smaller = inertia_at(tree.without_vertex(v), one).below
            if whole < smaller:
                mismatches.append(f"{tree.edges} - {v}: m[0,1) grew from {whole} to {smaller}")
    return mismatches


def check_graph_bounds(n_max: int = 6, exact_cap: int = DEFAULT_EXACT_CAP) -> list[str]:
    """m[0,1) <= γ, m[0,2) <= n - γ, the quasi-pendant bound and spanning-tree monotonicity."""
    mismatches = []
    for n in range(1, n_max + 1):
        for graph in connected_graphs(n):
            broken = graph_violations(graph_facts(graph, exact_cap))
            if broken:
                mismatches.append(f"n={n} {graph.edges}: {', '.join(broken)}")
    return mismatches


def check_binary_trees(h_max: int = 5) -> list[str]:
    """Perfect binary trees have diameter 2h and at least ceil((2h + 1) / 3) eigenvalues below 1."""
    mismatches = []
    for h in range(h_max + 1):
        tree = perfect_binary_tree(h)
        d = diameter_path(tree).length
        if d != 2 * h:
            mismatches.append(f"h={h}: diameter {d}, expected {2 * h}")
        bound = -(-(2 * h + 1) // 3)
        if m_below_one(tree) < bound:
            mismatches.append(f"h={h}: m[0,1) below {bound}")
    return mismatches


def default_suite(
    n_max: int = 14,
    workers: int = 1,
    seed: int = 0,
    exact_cap: int = DEFAULT_EXACT_CAP,
    canonical_cap: int = DEFAULT_CANONICAL_CAP,
    threshold_guard: float = DEFAULT_THRESHOLD_GUARD,
) -> dict[str, Callable[[], list[str]]]:
    """Named checks in execution order."""
    return {
        "census": lambda: check_census(5, n_max, workers=workers),
        "table1": check_table1,
        "counterexamples": lambda: check_counterexamples(workers, canonical_cap),
        "path_formula": check_path_formula,
        "double_starlike": check_double_starlike,
        "gamma_properties": lambda: check_gamma_properties(seed=seed),
        "gamma_recognizer": check_gamma_recognizer,
        "detm": check_detm,
        "domination_oracle": check_domination_oracle,
        "dense_agreement": lambda: check_dense_agreement(guard=threshold_guard),
        "interlacing": lambda: check_interlacing(seed=seed),
        "pendant_monotonicity": lambda: check_pendant_monotonicity(seed=seed),
        "graph_bounds": lambda: check_graph_bounds(exact_cap=exact_cap),
        "binary_trees": check_binary_trees,
    }


def run_verification(
    checks: dict[str, Callable[[], list[str]]] | None = None,
    only: list[str] | None = None,
) -> VerificationReport:
    """
    Run checks in order and collect their results.

    Args:
        checks: Named checks (defaults to default_suite())
        only: Restrict to these names

    Raises:
        KeyError: If `only` names an unknown check
    """
    checks = checks if checks is not None else default_suite()
    names = list(checks) if only is None else only
    for name in names:
        if name not in checks:
            raise KeyError(f"unknown check {name!r}; known: {', '.join(checks)}")

    report = VerificationReport()
    with OperationTimer(logger, "verification suite", logging.INFO):
        for name in names:
            start = time.perf_counter()
            mismatches = checks[name]()
            duration = time.perf_counter() - start
            report.results.append(CheckResult(name, mismatches, duration))
            if mismatches:
                logger.warning(f"{name}: {len(mismatches)} mismatches")
            else:
                logger.info(f"{name}: ok ({duration:.2f}s)")
    return report
