"""
Unit Tests for the Edge-List Format
"""

import pytest

from core.exceptions import EdgeListFormatError
from graphss.graph import generate, GraphModel, read_edge_list, write_edge_list


@pytest.mark.unit
class TestEdgeListIO:
    """Test parsing, errors and write/read fidelity"""

    def test_read_with_comments(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("# triangle\nn 3\n\n0 1 1.0\n1 2 0.5\n# done\n0 2 2\n", encoding="utf-8")
        g = read_edge_list(path)
        assert g.n == 3
        assert g.edges == ((0, 1, 1.0), (1, 2, 0.5), (0, 2, 2.0))

    def test_written_file_reads_back_identically(self, tmp_path, sensor100):
        path = tmp_path / "sensor.txt"
        write_edge_list(sensor100, path)
        assert read_edge_list(path).edges == sensor100.edges

    def test_missing_header(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("0 1 1.0\n", encoding="utf-8")
        with pytest.raises(EdgeListFormatError) as exc_info:
            read_edge_list(path)
        assert exc_info.value.line_number == 1

    def test_empty_file(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("# nothing\n", encoding="utf-8")
        with pytest.raises(EdgeListFormatError):
            read_edge_list(path)

    @pytest.mark.parametrize(
        "body,line",
        [
            ("n 3\n0 1\n", 2),
            ("n 3\n0 1 x\n", 2),
            ("n 3\n0 1 1\n1 1 1\n", 3),
            ("n 3\n0 1 1\n2 5 1\n", 3),
            ("n 3\n0 1 -1\n", 2),
        ],
    )
    def test_error_names_the_line(self, tmp_path, body, line):
        path = tmp_path / "g.txt"
        path.write_text(body, encoding="utf-8")
        with pytest.raises(EdgeListFormatError) as exc_info:
            read_edge_list(path)
        assert exc_info.value.line_number == line
        assert f"line {line}" in str(exc_info.value)

    def test_duplicate_reports_both_lines(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("n 3\n0 1 1\n1 2 1\n1 0 1\n", encoding="utf-8")
        with pytest.raises(EdgeListFormatError) as exc_info:
            read_edge_list(path)
        assert exc_info.value.line_number == 4
        assert "first on line 2" in exc_info.value.message

    def test_ring_round_trip(self, tmp_path):
        ring = generate(GraphModel.RING, 5)
        path = tmp_path / "ring.txt"
        write_edge_list(ring, path)
        assert read_edge_list(path) == ring
