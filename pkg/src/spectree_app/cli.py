"""Command-line interface for Spectree."""

import contextlib
import logging
import os
import sys
from collections.abc import Iterator
from fractions import Fraction
from json import dumps as json_dumps
from pathlib import Path
from typing import Any, TextIO

import fire

from src.core.config import (
    DEFAULT_CONFIG,
    VALID_LOG_LEVELS,
    get_config_value,
    load_config,
    validate_config,
)
from src.core.errors import CapExceededError, SpectreeError, VerificationError
from src.core.logging import log_exception, setup_logging
from src.core.paths import ensure_data_directories, get_report_path
from src.enumeration.free_trees import free_trees
from src.experiments.census import CensusRow, run_census
from src.experiments.counterexamples import CounterexampleRecord, find_counterexamples
from src.experiments.reports import render_csv, render_json
from src.experiments.tables import build_table1, table3_mismatches, verify_table1
from src.experiments.verify import default_suite, run_verification
from src.families.constructors import double_starlike, gamma_tree, path, perfect_binary_tree, star
from src.families.specs import FamilySpecError, make_double_star_spec, make_gamma_spec
from src.graph.core import Graph
from src.graph.formats import GraphFormatError, format_graph, parse_graph_text, to_graph6
from src.spectral.dense import eigenvalues_dense
from src.spectral.detm import verify_det_M
from src.spectral.inertia import inertia_at, m_interval
from src.spectral.rational import (
    IntervalError,
    RationalParseError,
    format_rational,
    parse_interval,
    parse_rational,
)

logger = logging.getLogger(__name__)

FAMILIES = ("path", "star", "binary", "gamma", "double-star")

USAGE_ERRORS = (
    GraphFormatError,
    IntervalError,
    RationalParseError,
    FamilySpecError,
    CapExceededError,
    OSError,
    ValueError,
)


@contextlib.contextmanager
def _output(out: str | None) -> Iterator[TextIO]:
    """stdout, or a freshly written file when `out` is given."""
    if out is None:
        yield sys.stdout
        return
    target = Path(out)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as f:
        yield f
    logger.info(f"Wrote {target}")


def _read_input(source: str, fmt: str) -> Graph:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="ascii")
    return parse_graph_text(text, fmt)


def _alphas(alpha: Any) -> list[Fraction]:
    """Thresholds from a flag value: one rational, a comma list or a sequence."""
    if alpha is None:
        return []
    if isinstance(alpha, list | tuple):
        return [parse_rational(a) for a in alpha]
    if isinstance(alpha, str):
        return [parse_rational(tok) for tok in alpha.split(",") if tok.strip()]
    return [parse_rational(alpha)]


def _format_value(value: float, decimals: int) -> str:
    text = f"{round(value, decimals) + 0.0:.{decimals}f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def format_spectrum(values: list[float] | tuple[float, ...], decimals: int = 6) -> str:
    """Ascending values with repeats collapsed, e.g. "0, 1×10, 12"."""
    groups: list[list[Any]] = []
    for value in sorted(values):
        shown = _format_value(value, decimals)
        if groups and groups[-1][0] == shown:
            groups[-1][1] += 1
        else:
            groups.append([shown, 1])
    return ", ".join(shown if count == 1 else f"{shown}×{count}" for shown, count in groups)


class SpectreeCLI:
    """Spectree CLI commands."""

    def __init__(self) -> None:
        config = load_config()
        errors = validate_config(config)
        for error in errors:
            logger.warning(f"Ignoring config file: {error}")
        self._config = DEFAULT_CONFIG if errors else config

    def _setting(self, key_path: str) -> Any:
        return get_config_value(key_path, config=self._config)

    def spectrum(
        self,
        source: str,
        format: str = "auto",
        alpha: Any = None,
        decimals: int = 6,
        json: bool = False,
    ) -> None:
        """Print the Laplacian spectrum and exact inertia at rational thresholds.

        Args:
            source: Graph file (graph6 or edge list), or "-" for stdin
            format: "graph6", "edges" or "auto"
            alpha: Threshold(s) such as 1, "3/2" or "1,2" for exact counts
            decimals: Digits shown per eigenvalue
            json: Emit one JSON object instead of text
        """
        graph = _read_input(source, format)
        spectrum = eigenvalues_dense(
            graph,
            tol=self._setting("spectral.dense_tolerance"),
            max_sweeps=self._setting("spectral.max_sweeps"),
            dense_cap=self._setting("spectral.dense_cap"),
        )
        triples = [(a, inertia_at(graph, a)) for a in _alphas(alpha)]

        if json:
            payload = {
                "graph6": to_graph6(graph),
                "n": graph.n,
                "spectrum": [round(v, decimals) + 0.0 for v in spectrum.values],
                "tolerance": spectrum.tolerance,
                "inertia": [
                    {
                        "alpha": format_rational(a),
                        "below": t.below,
                        "equal": t.equal,
                        "above": t.above,
                    }
                    for a, t in triples
                ],
            }
            print(json_dumps(payload, indent=2))
            return

        print(format_spectrum(spectrum.values, decimals))
        for a, triple in triples:
            print(
                f"alpha={format_rational(a)}: below={triple.below} "
                f"equal={triple.equal} above={triple.above}"
            )

    def count(self, source: str, interval: str = "[0,1)", format: str = "auto") -> None:
        """Print the exact number of Laplacian eigenvalues in an interval.

        Args:
            source: Graph file, or "-" for stdin
            interval: Bracket notation such as "[0,1)", "(2,inf]" or "[1,1]"
            format: "graph6", "edges" or "auto"
        """
        graph = _read_input(source, format)
        print(m_interval(graph, parse_interval(str(interval))))

    def generate(
        self,
        family: str,
        n: int | None = None,
        h: int | None = None,
        d: int | None = None,
        parts: Any = None,
        p: int | None = None,
        q: int | None = None,
        format: str = "graph6",
        out: str | None = None,
    ) -> None:
        """Write one member of a named tree family.

        Args:
            family: path, star, binary, gamma or double-star
            n: Order for path and star
            h: Height for binary
            d: Diameter for gamma and double-star
            parts: Pendant counts for gamma, e.g. 1,1,1
            p: Leaves at the first end of a double-star
            q: Leaves at the second end of a double-star
            format: "graph6" or "edges"
            out: Output file (stdout when omitted)
        """

        def need(**values: Any) -> None:
            missing = [f"--{name}" for name, value in values.items() if value is None]
            if missing:
                raise FamilySpecError(f"family {family!r} needs {' and '.join(missing)}")

        if family == "path":
            need(n=n)
            tree = path(n)
        elif family == "star":
            need(n=n)
            tree = star(n)
        elif family == "binary":
            need(h=h)
            tree = perfect_binary_tree(h)
        elif family == "gamma":
            need(d=d, parts=parts)
            tree = gamma_tree(make_gamma_spec(d, parts))
        elif family == "double-star":
            need(d=d, p=p, q=q)
            tree = double_starlike(make_double_star_spec(d, p, q))
        else:
            raise FamilySpecError(
                f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}"
            )

        with _output(out) as f:
            f.write(format_graph(tree, format))

    def trees(self, n: int, out: str | None = None) -> None:
        """Write every free tree of order n as graph6, one per line.

        Args:
            n: Tree order
            out: Output file (stdout when omitted)
        """
        stream = free_trees(n, tree_cap=self._setting("enumeration.tree_cap"))
        count = 0
        with _output(out) as f:
            for tree in stream:
                f.write(to_graph6(tree) + "\n")
                count += 1
        logger.info(f"Wrote {count} trees of order {n}")

    def table1(self, json: bool = False, out: str | None = None) -> None:
        """Reproduce the spectra of the six trees in Γ(12, 8).

        Args:
            json: Emit JSON instead of text
            out: Output file (stdout when omitted)
        """
        rows = build_table1()
        with _output(out) as f:
            if json:
                payload = [
                    {
                        "spec": str(row.spec),
                        "spectrum": row.spectrum.rounded(3),
                        "below_one": row.below_one,
                        "equal_one": row.equal_one,
                    }
                    for row in rows
                ]
                f.write(json_dumps(payload, indent=2) + "\n")
            else:
                for row in rows:
                    shown = " ".join(f"{v:.3f}" for v in row.spectrum.rounded(3))
                    f.write(
                        f"{row.spec}\t{shown}\t"
                        f"below_1={row.below_one}\tequal_1={row.equal_one}\n"
                    )

        mismatches = verify_table1(rows)
        if mismatches:
            raise VerificationError("Γ(12, 8) spectra differ from the reference table", mismatches)

    def counterexamples(
        self,
        n: int = 6,
        workers: int | None = None,
        json: bool = False,
        out: str | None = None,
        save: bool = False,
    ) -> None:
        """List connected graphs on n vertices with m[0,1) < ceil((d + 1) / 3).

        Args:
            n: Vertex count (at most the configured graph cap)
            workers: Process count (defaults to census.workers)
            json: Emit JSON instead of CSV
            out: Output file (stdout when omitted)
            save: Without --out, write under the reports directory instead of stdout
        """
        records = find_counterexamples(
            n,
            workers=workers or self._setting("census.workers"),
            graph_cap=self._setting("enumeration.graph_cap"),
            canonical_cap=self._setting("enumeration.canonical_cap"),
        )
        if save and out is None:
            out = str(get_report_path(f"counterexamples-n{n}", ".json" if json else ".csv"))
        with _output(out) as f:
            f.write(render_json(records) if json else render_csv(records, CounterexampleRecord))

    def census(
        self,
        n_min: int = 5,
        n_max: int = 14,
        workers: int | None = None,
        json: bool = False,
        out: str | None = None,
        resume: bool = False,
        source: str | None = None,
        save: bool = False,
    ) -> None:
        """Census of all free trees for each order in n_min..n_max.

        Exits with status 1 when any theorem check fails or a count differs
        from the published table.

        Args:
            n_min: Smallest order
            n_max: Largest order
            workers: Process count (defaults to census.workers)
            json: Emit JSON instead of CSV
            out: Output file (stdout when omitted)
            resume: Reuse per-order checkpoints from an earlier run
            source: graph6 file of trees to use instead of the generator
            save: Without --out, write under the reports directory instead of stdout
        """
        rows = run_census(
            n_min,
            n_max,
            workers=workers or self._setting("census.workers"),
            batch_size=self._setting("enumeration.batch_size"),
            tree_cap=self._setting("enumeration.tree_cap"),
            checkpoint=self._setting("census.checkpoint") or resume,
            resume=resume,
            source=source,
        )
        if save and out is None:
            out = str(get_report_path(f"census-n{n_min}-{n_max}", ".json" if json else ".csv"))
        with _output(out) as f:
            f.write(render_json(rows) if json else render_csv(rows, CensusRow))

        mismatches = table3_mismatches(rows)
        mismatches += [
            f"n={r.n}: {r.violations_total} violations" for r in rows if r.violations_total
        ]
        if mismatches:
            raise VerificationError("census check failed", mismatches)

    def detm(self, n_max: int = 1000) -> None:
        """Check the closed form of det(M_n) against its recurrence.

        Args:
            n_max: Largest n checked
        """
        if n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {n_max}")
        mismatches = verify_det_M(n_max)
        if mismatches:
            raise VerificationError("det(M_n) closed form disagrees", mismatches)
        print(f"det(M_n) closed form matches the recurrence for 1 <= n <= {n_max}")

    def verify(
        self, n_max: int = 14, workers: int | None = None, only: Any = None, seed: int = 0
    ) -> None:
        """Run the full theorem and reproduction suite.

        Args:
            n_max: Largest census order
            workers: Process count for the census and graph scans
            only: Comma-separated subset of check names
            seed: Seed for the randomized checks
        """
        checks = default_suite(
            n_max=n_max,
            workers=workers or self._setting("census.workers"),
            seed=seed,
            exact_cap=self._setting("domination.exact_cap"),
            canonical_cap=self._setting("enumeration.canonical_cap"),
            threshold_guard=self._setting("spectral.threshold_guard"),
        )
        names = None
        if only is not None:
            names = list(only) if isinstance(only, list | tuple) else str(only).split(",")
            unknown = [name for name in names if name not in checks]
            if unknown:
                raise ValueError(
                    f"unknown check(s) {', '.join(unknown)}; known: {', '.join(checks)}"
                )

        report = run_verification(checks, only=names)
        for result in report.results:
            status = "ok" if result.passed else "FAIL"
            print(f"{status:4} {result.name} ({result.duration_seconds:.2f}s)")
        if not report.passed:
            raise VerificationError("verification suite failed", report.mismatch_lines())


def _log_level(value: Any, fallback: str) -> str:
    level = str(value).upper()
    return level if level in VALID_LOG_LEVELS else fallback


def main() -> None:
    """Main entry point for the Spectree CLI."""
    ensure_data_directories()
    config = load_config()
    setup_logging(
        console_level=_log_level(
            os.environ.get("SPECTREE_LOG_LEVEL")
            or get_config_value("logging.console_level", "WARNING", config),
            "WARNING",
        ),
        file_level=_log_level(get_config_value("logging.file_level", "DEBUG", config), "DEBUG"),
    )

    try:
        fire.Fire(SpectreeCLI)
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        for line in e.mismatches:
            print(f"  {line}", file=sys.stderr)
        sys.exit(1)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(2)
    except SpectreeError as e:
        log_exception(logger, "Command failed", e)
        print(f"error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
