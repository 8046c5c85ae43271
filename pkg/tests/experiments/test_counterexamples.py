"""
Tests for the general-graph counterexample scan.
"""

import pytest
from pydantic import ValidationError

from src.experiments.counterexamples import (
    CounterexampleRecord,
    examine_graph,
    find_counterexamples,
)
from src.experiments.reports import parse_csv, render_csv
from src.experiments.tables import TABLE2_SPECTRA, match_spectra
from src.families.constructors import path
from src.graph.core import from_edge_list


@pytest.fixture(scope="module")
def six_vertex_records():
    return find_counterexamples(6)


class TestFindCounterexamples:
    """Tests for find_counterexamples."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_none_up_to_five(self, n):
        """Test that graphs with at most five vertices satisfy the bound."""
        assert find_counterexamples(n) == []

    def test_nine_at_six(self, six_vertex_records):
        """Test the nine 6-vertex counterexamples."""
        assert len(six_vertex_records) == 9
        for record in six_vertex_records:
            assert record.n == 6
            assert record.diameter == 3
            assert record.m_below_1 == 1
            assert record.bound == 2

    def test_spectra_match_reference(self, six_vertex_records):
        """Test that the spectra pair off with the published rows."""
        spectra = [record.spectrum for record in six_vertex_records]

        assert match_spectra(spectra, TABLE2_SPECTRA) is not None

    def test_sorted_by_code(self, six_vertex_records):
        """Test that records come out in canonical code order."""
        codes = [record.graph6 for record in six_vertex_records]

        assert codes == sorted(codes)
        assert len(set(codes)) == 9

    def test_worker_count_does_not_matter(self, six_vertex_records):
        """Test that a process pool gives the same records."""
        assert find_counterexamples(6, workers=2) == six_vertex_records

    def test_csv_round_trip(self, six_vertex_records):
        """Test that counterexample CSV parses back into equal records."""
        text = render_csv(six_vertex_records, CounterexampleRecord)

        assert text.startswith("# spectree-counterexamples v1\n")
        assert parse_csv(text, CounterexampleRecord) == six_vertex_records

    def test_invalid_workers(self):
        """Test that workers < 1 raises ValueError."""
        with pytest.raises(ValueError, match="workers must be >= 1"):
            find_counterexamples(6, workers=0)


class TestExamineGraph:
    """Tests for examine_graph and the record model."""

    def test_tree_is_never_a_counterexample(self):
        """Test that a path meets its bound."""
        assert examine_graph(path(6)) is None

    def test_c6(self):
        """Test that C_6 falls below its bound with spectrum 4, 3, 3, 1, 1, 0."""
        record = examine_graph(from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)]))

        assert record is not None
        assert record.spectrum == [4.0, 3.0, 3.0, 1.0, 1.0, 0.0]

    def test_record_must_violate(self):
        """Test that a record meeting its bound is rejected."""
        with pytest.raises(ValidationError, match="does not fall below"):
            CounterexampleRecord(
                graph6="E?", n=6, diameter=3, m_below_1=2, bound=2, spectrum=[0.0] * 6
            )

    def test_record_spectrum_length(self):
        """Test that the spectrum length must equal n."""
        with pytest.raises(ValidationError, match="spectrum has 2 values"):
            CounterexampleRecord(
                graph6="E?", n=6, diameter=3, m_below_1=1, bound=2, spectrum=[0.0, 1.0]
            )
