import json

import pytest

from digraph_ricci import graph_io
from digraph_ricci.errors import ValidationError
from digraph_ricci.families import cycle_product, oriented_complete, rooted_in_tree, star_tree
from digraph_ricci.verification import A5


def test_edgelist_without_header_and_comments():
    G = graph_io.loads("# triangle\n0 1\n1 2\n\n2 0\n", "edgelist")
    assert G.n == 3 and G.edges == [(0, 1), (1, 2), (2, 0)]


def test_edgelist_header_adds_isolated_vertices():
    G = graph_io.loads("n 5\n0 1\n", "edgelist")
    assert G.n == 5


def test_json():
    G = graph_io.loads(json.dumps({"num_vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}), "json")
    assert G.edges == [(0, 1), (1, 2), (2, 0)]


def test_csv_matches_matrix_convention():
    text = "\n".join(",".join(map(str, row)) for row in A5)
    assert graph_io.loads(text, "csv") == oriented_complete(5)


@pytest.mark.parametrize(
    "text,fmt",
    [
        ("0 x\n", "edgelist"),
        ("0 1 2\n", "edgelist"),
        ('{"edges": []}', "json"),
        ('{"num_vertices": 2, "edges": [[0]]}', "json"),
        ("0,1\n1\n", "csv"),
        ("0,2\n0,0\n", "csv"),
        ("0 0\n", "edgelist"),
    ],
)
def test_malformed(text, fmt):
    with pytest.raises(ValidationError):
        graph_io.loads(text, fmt)


@pytest.mark.parametrize("fmt", graph_io.FORMATS)
@pytest.mark.parametrize(
    "G", [oriented_complete(6), cycle_product(3, 4), rooted_in_tree(star_tree(3))], ids=["K6", "C3xC4", "star"]
)
def test_round_trip_is_byte_identical(G, fmt, tmp_path):
    path = tmp_path / f"g.{fmt}"
    graph_io.dump(G, str(path), fmt)
    first = path.read_bytes()
    H = graph_io.load(str(path), fmt)
    assert H == G
    assert graph_io.dumps(H, fmt).encode() == first


def test_guess_format():
    assert graph_io.guess_format("a.json") == "json"
    assert graph_io.guess_format("a.CSV") == "csv"
    assert graph_io.guess_format("a.txt") == "edgelist"
