"""
Census of all free trees per order.

For every tree of order n the census measures d, γ and the exact counts
m[0,1) and m[0,2), tallies the trees with m[0,1) = ceil((d + 1) / 3) and
counts violations of each tree statement in checks.TREE_CHECKS.

Trees are streamed in fixed-size batches; with more than one worker the
batches go to a process pool and the per-batch tallies are summed, so the
result does not depend on completion order. Each finished order can be
checkpointed as JSON and reloaded with `resume`.
"""

import json
import logging
from collections import Counter
from concurrent.futures import FIRST_COMPLETED, Executor, Future, ProcessPoolExecutor, wait
from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, Field, computed_field, model_validator

from src.core.errors import CapExceededError
from src.core.logging import LogContext, OperationTimer
from src.core.paths import get_checkpoint_path
from src.enumeration.free_trees import (
    DEFAULT_BATCH_SIZE,
    DEFAULT_TREE_CAP,
    TreeStream,
    free_trees,
    trees_from_graph6_file,
)
from src.experiments.checks import TREE_CHECKS, tree_facts, tree_violations
from src.graph.core import Tree

logger = logging.getLogger(__name__)

COUNT_FIELDS = (
    "trees_total",
    "trees_extremal",
    "trees_above",
    *(f"violations_{name}" for name in TREE_CHECKS),
)

# Batches in flight per worker
_PENDING_PER_WORKER = 4


class CensusRow(BaseModel):
    """Aggregate over all trees of one order."""

    report_kind: ClassVar[str] = "census"
    csv_columns: ClassVar[tuple[str, ...]] = (
        "n",
        "trees_total",
        "trees_extremal",
        "ratio",
        "violations_thm1",
        "violations_thm2",
        "violations_thm4",
        "violations_thm5",
        "violations_thm3",
        "violations_bound2",
        "violations_quasi",
        "violations_upper",
        "trees_above",
    )

    n: int = Field(..., ge=1, description="Tree order")
    trees_total: int = Field(..., ge=0, description="Number of free trees of order n")
    trees_extremal: int = Field(..., ge=0, description="Trees with m[0,1) = ceil((d+1)/3)")
    violations_thm1: int = Field(0, ge=0, description="m[0,1) > γ")
    violations_thm2: int = Field(0, ge=0, description="m[0,1) < ceil((d+1)/3)")
    violations_thm4: int = Field(0, ge=0, description="γ and m[0,1) disagree on (d+1)/3")
    violations_thm5: int = Field(0, ge=0, description="Γ membership and m[0,1) disagree")
    violations_thm3: int = Field(0, ge=0, description="γ < (d+1)/3")
    violations_bound2: int = Field(0, ge=0, description="m[0,2) > n - γ")
    violations_quasi: int = Field(0, ge=0, description="m[0,1) < quasi-pendant count")
    violations_upper: int = Field(0, ge=0, description="n > 2q but m(2,n] < q")
    trees_above: int = Field(0, ge=0, description="Trees with m[0,1) > ceil((d+1)/3)")

    @model_validator(mode="after")
    def check_counts(self) -> "CensusRow":
        if self.trees_extremal + self.trees_above > self.trees_total:
            raise ValueError(
                f"n={self.n}: extremal ({self.trees_extremal}) + above ({self.trees_above}) "
                f"exceeds total ({self.trees_total})"
            )
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ratio(self) -> float:
        """trees_extremal / trees_total (0.0 for an empty order)."""
        if self.trees_total == 0:
            return 0.0
        return self.trees_extremal / self.trees_total

    @property
    def violations_total(self) -> int:
        return sum(getattr(self, f"violations_{name}") for name in TREE_CHECKS)

    def to_csv_row(self) -> list[str]:
        return [
            f"{self.ratio:.9f}" if column == "ratio" else str(getattr(self, column))
            for column in self.csv_columns
        ]

    @classmethod
    def from_csv_row(cls, row: dict[str, str]) -> "CensusRow":
        """Rebuild from CSV cells; ratio is recomputed from the counts."""
        return cls(**{key: int(value) for key, value in row.items() if key != "ratio"})


def tally_trees(trees: list[Tree]) -> Counter[str]:
    """Census counters for one batch; a module-level function so it pickles."""
    tally: Counter[str] = Counter()
    for tree in trees:
        facts = tree_facts(tree)
        tally["trees_total"] += 1
        if facts.is_extremal:
            tally["trees_extremal"] += 1
        if facts.is_above:
            tally["trees_above"] += 1
        for name in tree_violations(facts):
            tally[f"violations_{name}"] += 1
    return tally


def _tally_stream(
    stream: TreeStream, batch_size: int, executor: Executor | None, workers: int
) -> Counter[str]:
    total: Counter[str] = Counter()
    if executor is None:
        for batch in stream.batches(batch_size):
            total.update(tally_trees(batch))
        return total

    pending: set[Future[Counter[str]]] = set()
    for batch in stream.batches(batch_size):
        pending.add(executor.submit(tally_trees, batch))
        if len(pending) >= workers * _PENDING_PER_WORKER:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                total.update(future.result())
    for future in pending:
        total.update(future.result())
    return total


def census_row(
    n: int,
    stream: TreeStream | None = None,
    batch_size: int = DEFAULT_BATCH_SIZE,
    tree_cap: int = DEFAULT_TREE_CAP,
    executor: Executor | None = None,
    workers: int = 1,
) -> CensusRow:
    """
    Census of a single order.

    Args:
        n: Tree order
        stream: Trees to scan (defaults to the internal generator)
        batch_size: Trees per batch
        tree_cap: Largest order the internal generator accepts
        executor: Process pool to fan batches out to (None runs inline)
        workers: Pool size, used to bound the batches in flight
    """
    stream = stream if stream is not None else free_trees(n, tree_cap=tree_cap)
    with LogContext(order=n), OperationTimer(logger, f"census n={n}", logging.INFO):
        tally = _tally_stream(stream, batch_size, executor, workers)
    row = CensusRow(n=n, **{name: tally[name] for name in COUNT_FIELDS})
    if row.violations_total:
        logger.warning(f"n={n}: {row.violations_total} violations")
    return row


def _load_checkpoint(path: Path) -> CensusRow | None:
    try:
        return CensusRow.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except (OSError, ValueError) as e:
        logger.warning(f"Ignoring unreadable checkpoint {path}: {e}")
        return None


def _save_checkpoint(path: Path, row: CensusRow) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(row.model_dump_json(indent=2) + "\n", encoding="utf-8")


def run_census(
    n_min: int,
    n_max: int,
    workers: int = 1,
    batch_size: int = DEFAULT_BATCH_SIZE,
    tree_cap: int = DEFAULT_TREE_CAP,
    checkpoint: bool = False,
    resume: bool = False,
    source: Path | str | None = None,
) -> list[CensusRow]:
    """
    Census rows for every order n_min..n_max, sorted by n.

    Args:
        n_min: Smallest order
        n_max: Largest order
        workers: Process count; 1 runs in this process
        batch_size: Trees per worker task
        tree_cap: Enumeration cap
        checkpoint: Write one JSON checkpoint per finished order
        resume: Reuse existing checkpoints instead of recomputing
        source: graph6 file to read trees from instead of the generator

    Raises:
        ValueError: On an empty or non-positive range or workers < 1
        CapExceededError: If n_max exceeds tree_cap for the internal generator
    """
    if n_min < 1 or n_min > n_max:
        raise ValueError(f"invalid order range {n_min}..{n_max}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if source is None and n_max > tree_cap:
        raise CapExceededError("census", n_max, tree_cap)

    label = "internal" if source is None else Path(source).stem
    rows: list[CensusRow] = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        with OperationTimer(
            logger, "census", logging.INFO, n_min=n_min, n_max=n_max, workers=workers
        ):
            for n in range(n_min, n_max + 1):
                path = get_checkpoint_path("census", n, label)
                if resume and path.exists():
                    cached = _load_checkpoint(path)
                    if cached is not None:
                        logger.info(f"n={n}: resumed from {path}")
                        rows.append(cached)
                        continue

                stream = None if source is None else trees_from_graph6_file(source, n)
                row = census_row(
                    n,
                    stream=stream,
                    batch_size=batch_size,
                    tree_cap=tree_cap,
                    executor=executor,
                    workers=workers,
                )
                if checkpoint:
                    _save_checkpoint(path, row)
                rows.append(row)
    finally:
        if executor is not None:
            executor.shutdown()

    return sorted(rows, key=lambda row: row.n)
