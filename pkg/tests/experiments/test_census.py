"""
Tests for the free-tree census.
"""

import pytest
from pydantic import ValidationError

from src.core.errors import CapExceededError
from src.enumeration.free_trees import free_trees
from src.experiments import census as census_module
from src.experiments.census import CensusRow, census_row, run_census, tally_trees
from src.experiments.reports import parse_csv, render_csv
from src.experiments.tables import TABLE3_COUNTS, table3_mismatches
from src.graph.formats import to_graph6


@pytest.fixture
def checkpoints(tmp_path, monkeypatch):
    """Redirect census checkpoints into tmp_path."""

    def fake_path(kind, n, label):
        return tmp_path / f"{kind}_{n}_{label}.json"

    monkeypatch.setattr(census_module, "get_checkpoint_path", fake_path)
    return tmp_path


class TestCensusRow:
    """Tests for the CensusRow model."""

    def test_ratio(self):
        """Test the computed ratio and its CSV rendering."""
        row = CensusRow(n=9, trees_total=47, trees_extremal=20, trees_above=27)

        assert row.ratio == pytest.approx(20 / 47)
        assert row.to_csv_row()[:4] == ["9", "47", "20", "0.425531915"]

    def test_empty_order(self):
        """Test that an empty order has ratio 0."""
        assert CensusRow(n=4, trees_total=0, trees_extremal=0).ratio == 0.0

    def test_inconsistent_counts(self):
        """Test that extremal + above > total is rejected."""
        with pytest.raises(ValidationError, match="exceeds total"):
            CensusRow(n=5, trees_total=3, trees_extremal=2, trees_above=2)

    def test_csv_round_trip(self):
        """Test that census CSV parses back into equal rows."""
        rows = run_census(5, 7)

        assert parse_csv(render_csv(rows, CensusRow), CensusRow) == rows


class TestCensus:
    """Tests for census_row and run_census."""

    def test_tally(self):
        """Test the counters for the six trees of order 6."""
        tally = tally_trees(list(free_trees(6)))

        assert tally["trees_total"] == 6
        assert tally["trees_extremal"] == 5
        assert tally["trees_above"] == 1

    def test_order_five_is_all_extremal(self):
        """Test that P_5, the chair and K_{1,4} all attain the diameter bound."""
        row = census_row(5)

        assert (row.trees_total, row.trees_extremal, row.trees_above) == (3, 3, 0)

    def test_matches_table(self):
        """Test orders 5 to 12 against the published counts."""
        rows = run_census(5, 12)

        assert [row.n for row in rows] == list(range(5, 13))
        assert table3_mismatches(rows) == []
        for row in rows:
            assert (row.trees_total, row.trees_extremal) == TABLE3_COUNTS[row.n]
            assert row.violations_total == 0

    @pytest.mark.slow
    def test_matches_table_to_16(self):
        """Test orders 13 to 16 with a process pool."""
        rows = run_census(13, 16, workers=2)

        assert table3_mismatches(rows) == []
        assert all(row.violations_total == 0 for row in rows)

    def test_worker_count_does_not_matter(self):
        """Test that a pool with small batches gives the same rows."""
        assert run_census(5, 9, workers=2, batch_size=4) == run_census(5, 9)

    def test_graph6_source(self, tmp_path):
        """Test that trees read from a file give the same row."""
        source = tmp_path / "trees.g6"
        source.write_text("".join(to_graph6(t) + "\n" for t in free_trees(8)))

        assert run_census(8, 8, source=source) == [census_row(8)]

    def test_checkpoint_and_resume(self, checkpoints):
        """Test that resume reuses a stored row instead of recomputing it."""
        run_census(5, 6, checkpoint=True)
        stored = checkpoints / "census_5_internal.json"
        assert stored.exists()

        fake = CensusRow(n=5, trees_total=99, trees_extremal=0)
        stored.write_text(fake.model_dump_json())
        rows = run_census(5, 6, resume=True)

        assert rows[0] == fake
        assert rows[1].trees_total == 6

    def test_unreadable_checkpoint_is_recomputed(self, checkpoints):
        """Test that a corrupt checkpoint is ignored."""
        (checkpoints / "census_5_internal.json").write_text("{not json")

        rows = run_census(5, 5, resume=True)

        assert rows[0].trees_total == 3

    @pytest.mark.parametrize(("n_min", "n_max"), [(0, 5), (7, 6)])
    def test_invalid_range(self, n_min, n_max):
        """Test that empty or non-positive ranges raise ValueError."""
        with pytest.raises(ValueError, match="invalid order range"):
            run_census(n_min, n_max)

    def test_invalid_workers(self):
        """Test that workers < 1 raises ValueError."""
        with pytest.raises(ValueError, match="workers must be >= 1"):
            run_census(5, 5, workers=0)

    def test_cap(self):
        """Test that n_max above the tree cap raises CapExceededError."""
        with pytest.raises(CapExceededError, match="census"):
            run_census(5, 30)

    def test_table3_mismatch_lines(self):
        """Test the mismatch description for a wrong row."""
        row = CensusRow(n=6, trees_total=6, trees_extremal=4)

        assert table3_mismatches([row]) == ["n=6: census (6, 4) != table (6, 5)"]
