import random

import networkx as nx
import pytest

from cageforge.formats import (
    FormatError,
    from_graph6,
    load_graph,
    read_edge_list,
    read_header,
    to_graph6,
    write_edge_list,
)
from cageforge.graph import build_graph
from conftest import construction, levi
from oracles import random_edges


def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def test_graph6_goldens():
    # verified against networkx's encoder
    assert to_graph6(c5()) == b"Dhc"
    assert to_graph6(build_graph(1, [])) == b"@"
    assert to_graph6(build_graph(0, [])) == b"?"
    assert to_graph6(c5(), header=True) == b">>graph6<<Dhc"


@pytest.mark.parametrize("seed", range(25))
def test_graph6_matches_networkx(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 7, 40, 62, 63, 64, 130])
    edges = random_edges(n, rng.random(), seed)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    assert to_graph6(build_graph(n, edges)) == nx.to_graph6_bytes(G, header=False).strip()


def test_graph6_round_trip_500_random():
    rng = random.Random(7)
    for seed in range(500):
        n = rng.randint(0, 70)
        g = build_graph(n, random_edges(n, rng.random(), seed))
        assert from_graph6(to_graph6(g)) == g


def test_graph6_decode_examples():
    g = from_graph6(b"@")
    assert (g.n, g.size) == (1, 0)
    assert from_graph6(">>graph6<<Dhc\n") == c5()
    assert from_graph6(to_graph6(levi(5).graph)) == levi(5).graph


def test_graph6_large_n_prefix():
    g = build_graph(300, [(0, 299)])
    data = to_graph6(g)
    assert data[:4] == bytes([126, 63 + 0, 63 + 4, 63 + 44])
    assert from_graph6(data) == g


@pytest.mark.parametrize(
    "data,offset",
    [
        (b"Dh", 2),  # truncated body
        (b"Dhcc", 3),  # trailing byte
        (b"D\x01c", 1),  # non-printable
        (b"~?", 2),  # truncated 4-byte prefix
        (b"~~??", 4),  # truncated 8-byte prefix
        (b"", 0),
    ],
)
def test_graph6_parse_errors(data, offset):
    with pytest.raises(FormatError) as exc:
        from_graph6(data)
    assert exc.value.offset == offset


def test_graph6_rejects_padding_bits():
    # n=2 uses one bit; set a padding bit as well
    with pytest.raises(FormatError, match="padding"):
        from_graph6(bytes([65, 63 + 0b100001]))


def test_edge_list_triangle():
    doc = write_edge_list(build_graph(3, [(2, 0), (1, 2), (0, 1)]), {"q": 3})
    assert doc == "# n=3\n# q=3\n0 1\n0 2\n1 2\n"
    assert read_edge_list(doc) == build_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert read_header(doc) == {"n": "3", "q": "3"}


def test_edge_list_duplicate_warns():
    with pytest.warns(UserWarning, match="duplicate"):
        g = read_edge_list("0 1\n1 0\n1 2\n")
    assert g.size == 2 and g.n == 3


@pytest.mark.parametrize("doc", ["0 x\n", "# n=2\n0 5\n", "0 1 2\n", "-1 0\n", "3 3\n"])
def test_edge_list_errors(doc):
    with pytest.raises(FormatError):
        read_edge_list(doc)


def test_edge_list_header_n_keeps_isolated_vertices():
    assert read_edge_list("# n=6\n0 1\n").n == 6


def test_edge_list_round_trip_b13_star():
    _, _, g = construction(13)
    doc = write_edge_list(g, {"q": 13, "S": "0", "T": "0", "u": 0})
    assert read_edge_list(doc) == g
    assert doc == write_edge_list(g, {"q": 13, "S": "0", "T": "0", "u": 0})


def test_sniffing():
    assert load_graph(b"Dhc\n") == c5()
    assert load_graph(b">>graph6<<Dhc") == c5()
    assert load_graph(write_edge_list(c5()).encode()) == c5()
    assert load_graph(b"0 1\n1 2\n").size == 2
    with pytest.raises(FormatError):
        load_graph(b"\xff\xfe 0 1")
