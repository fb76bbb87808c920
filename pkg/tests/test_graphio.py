import pytest

from mvgraph.errors import FormatError
from mvgraph.graph import from_edge_list
from mvgraph.graphio import read_graph, read_graph_text, write_graph, write_graph_text


CANONICAL_P3 = "3 2\n0 1\n1 2\n"


def test_round_trip_text():
    g = read_graph_text(CANONICAL_P3)
    assert g.n == 3 and g.m == 2
    assert write_graph_text(g) == CANONICAL_P3


def test_round_trip_file(tmp_path):
    g = from_edge_list(5, [(0, 1), (0, 4), (1, 2), (2, 3)])
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g
    write_graph(read_graph(path), tmp_path / "g2.txt")
    assert (tmp_path / "g2.txt").read_bytes() == path.read_bytes()


def test_comments_skipped():
    g = read_graph_text("# a comment\n3 2\n# another\n0 1\n1 2\n")
    assert g.m == 2


def test_self_loop_line_number():
    with pytest.raises(FormatError, match="line 2"):
        read_graph_text("2 1\n0 0\n")


def test_out_of_order_edges():
    with pytest.raises(FormatError, match="out of order"):
        read_graph_text("3 2\n1 2\n0 1\n")


def test_duplicate_edge_rejected():
    with pytest.raises(FormatError, match="out of order"):
        read_graph_text("3 2\n0 1\n0 1\n")


def test_unsorted_pair_rejected():
    with pytest.raises(FormatError, match="u < v"):
        read_graph_text("3 1\n1 0\n")


def test_bad_header():
    with pytest.raises(FormatError):
        read_graph_text("x y\n")
    with pytest.raises(FormatError, match="missing header"):
        read_graph_text("# nothing here\n")


def test_edge_count_mismatch():
    with pytest.raises(FormatError, match="declares 2"):
        read_graph_text("3 2\n0 1\n")


def test_id_out_of_range():
    with pytest.raises(FormatError, match="line 2"):
        read_graph_text("3 1\n0 3\n")
