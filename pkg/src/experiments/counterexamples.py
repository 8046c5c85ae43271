"""
Connected graphs that break m[0,1) >= ceil((d + 1) / 3).

The inequality holds for every tree but not for general graphs; this scan
lists every small connected graph where it fails. Records are keyed by
canonical graph6 code and sorted by it, so the output does not depend on
representative choice or worker count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import islice
from typing import ClassVar

from pydantic import BaseModel, Field, model_validator

from src.core.logging import OperationTimer
from src.enumeration.canonical import DEFAULT_CANONICAL_CAP, canonical_code
from src.enumeration.connected import DEFAULT_GRAPH_CAP, connected_graphs
from src.experiments.checks import diameter_bound
from src.graph.core import Graph, diameter
from src.spectral.dense import eigenvalues_dense
from src.spectral.inertia import m_below_one

logger = logging.getLogger(__name__)

_GRAPH_BATCH = 256


class CounterexampleRecord(BaseModel):
    """A connected graph with fewer eigenvalues below 1 than its diameter bound."""

    report_kind: ClassVar[str] = "counterexamples"
    csv_columns: ClassVar[tuple[str, ...]] = (
        "graph6",
        "n",
        "diameter",
        "m_below_1",
        "bound",
        "spectrum",
    )

    graph6: str = Field(..., min_length=1, description="Canonical graph6 code")
    n: int = Field(..., ge=1)
    diameter: int = Field(..., ge=0)
    m_below_1: int = Field(..., ge=0)
    bound: int = Field(..., ge=1, description="ceil((d+1)/3)")
    spectrum: list[float] = Field(..., description="Descending, 3 decimals")

    @model_validator(mode="after")
    def check_violation(self) -> "CounterexampleRecord":
        if self.m_below_1 >= self.bound:
            raise ValueError(f"m_below_1={self.m_below_1} does not fall below bound {self.bound}")
        if len(self.spectrum) != self.n:
            raise ValueError(f"spectrum has {len(self.spectrum)} values for n={self.n}")
        return self

    def to_csv_row(self) -> list[str]:
        return [
            self.graph6,
            str(self.n),
            str(self.diameter),
            str(self.m_below_1),
            str(self.bound),
            " ".join(f"{v:.3f}" for v in self.spectrum),
        ]

    @classmethod
    def from_csv_row(cls, row: dict[str, str]) -> "CounterexampleRecord":
        return cls(
            graph6=row["graph6"],
            n=int(row["n"]),
            diameter=int(row["diameter"]),
            m_below_1=int(row["m_below_1"]),
            bound=int(row["bound"]),
            spectrum=[float(tok) for tok in row["spectrum"].split()],
        )


def examine_graph(
    graph: Graph, canonical_cap: int = DEFAULT_CANONICAL_CAP
) -> CounterexampleRecord | None:
    """Record for a connected graph that violates the bound, else None."""
    d = diameter(graph)
    bound = diameter_bound(d)
    below = m_below_one(graph)
    if below >= bound:
        return None
    return CounterexampleRecord(
        graph6=canonical_code(graph, canonical_cap).decode("ascii"),
        n=graph.n,
        diameter=d,
        m_below_1=below,
        bound=bound,
        spectrum=eigenvalues_dense(graph).rounded(3),
    )


def examine_batch(
    graphs: list[Graph], canonical_cap: int = DEFAULT_CANONICAL_CAP
) -> list[CounterexampleRecord]:
    return [
        record
        for graph in graphs
        if (record := examine_graph(graph, canonical_cap)) is not None
    ]


def _batches(graphs, size: int):
    iterator = iter(graphs)
    while batch := list(islice(iterator, size)):
        yield batch


def find_counterexamples(
    n: int,
    workers: int = 1,
    graph_cap: int = DEFAULT_GRAPH_CAP,
    canonical_cap: int = DEFAULT_CANONICAL_CAP,
) -> list[CounterexampleRecord]:
    """
    Every connected graph on n vertices with m[0,1) < ceil((d + 1) / 3).

    Raises:
        CapExceededError: If n exceeds graph_cap, or canonical_cap for the dedupe
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    records: list[CounterexampleRecord] = []
    with OperationTimer(logger, f"counterexample scan n={n}", logging.INFO, workers=workers):
        graphs = connected_graphs(n, graph_cap=graph_cap)
        if workers == 1:
            records = examine_batch(list(graphs), canonical_cap)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for batch_records in pool.map(
                    partial(examine_batch, canonical_cap=canonical_cap),
                    _batches(graphs, _GRAPH_BATCH),
                ):
                    records.extend(batch_records)

    records.sort(key=lambda record: record.graph6)
    logger.info(f"n={n}: {len(records)} counterexamples")
    return records
