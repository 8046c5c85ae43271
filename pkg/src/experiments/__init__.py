"""
Spectree Experiments Module

Theorem checks, the free-tree census, the counterexample scan, published
table reproductions, report files and the verification suite.
"""

from .census import CensusRow, census_row, run_census, tally_trees
from .checks import (
    GRAPH_CHECKS,
    TREE_CHECKS,
    diameter_bound,
    graph_facts,
    graph_violations,
    tree_facts,
    tree_violations,
)
from .counterexamples import CounterexampleRecord, examine_graph, find_counterexamples
from .reports import ReportFormatError, read_csv, render_csv, render_json, write_csv, write_json
from .tables import TABLE1_SPECTRA, TABLE2_SPECTRA, TABLE3_COUNTS, build_table1, verify_table1
from .verify import CheckResult, VerificationReport, default_suite, run_verification

__all__ = [
    "CensusRow",
    "census_row",
    "run_census",
    "tally_trees",
    "TREE_CHECKS",
    "GRAPH_CHECKS",
    "diameter_bound",
    "tree_facts",
    "tree_violations",
    "graph_facts",
    "graph_violations",
    "CounterexampleRecord",
    "examine_graph",
    "find_counterexamples",
    "ReportFormatError",
    "render_csv",
    "render_json",
    "write_csv",
    "write_json",
    "read_csv",
    "TABLE1_SPECTRA",
    "TABLE2_SPECTRA",
    "TABLE3_COUNTS",
    "build_table1",
    "verify_table1",
    "CheckResult",
    "VerificationReport",
    "default_suite",
    "run_verification",
]
