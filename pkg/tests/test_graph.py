import pytest
from hypothesis import given, strategies as st

from rainbowdom.graph import (
    Graph,
    GraphParseError,
    cartesian_product_complete,
    closed_neighborhood,
    complement,
    graph_join,
    graph_union,
    parse_graph,
    render_graph,
)


def test_parse_p3():
    g = parse_graph("3 2\n0 1\n1 2")
    assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_k1():
    g = parse_graph("1 0")
    assert g.n == 1 and not g.edges


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("2 1\n0 0", "self-loop"),
        ("2 1\n0 5", "out of range"),
        ("2 2\n0 1\n1 0", "duplicate"),
        ("2 1\nnope", "malformed edge"),
        ("x y", "malformed header"),
        ("2 3\n0 1", "expected 3 edge lines"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(GraphParseError) as err:
        parse_graph(text)
    assert fragment in str(err.value)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@given(graphs())
def test_render_parse_roundtrip(g):
    assert parse_graph(render_graph(g)) == g


def test_closed_neighborhood(c6, k1, k4):
    assert closed_neighborhood(c6, 0) == frozenset({5, 0, 1})
    assert closed_neighborhood(k1, 0) == frozenset({0})
    assert closed_neighborhood(k4, 2) == frozenset({0, 1, 2, 3})


def test_product_with_single_vertex_is_complete(k1):
    g = cartesian_product_complete(k1, 3)
    assert g.n == 3 and g.m == 3


def test_product_k1_identity(k2):
    assert cartesian_product_complete(k2, 1) == k2


def test_product_c6_prism(c6):
    g = cartesian_product_complete(c6, 2)
    assert g.n == 12
    assert g.m == 6 * 1 + 6 * 2  # n*k(k-1)/2 + m*k


@given(graphs(max_n=6), st.integers(1, 3))
def test_product_size_formula(g, k):
    prod = cartesian_product_complete(g, k)
    assert prod.n == g.n * k
    assert prod.m == g.n * k * (k - 1) // 2 + g.m * k


def test_product_rejects_zero(k2):
    with pytest.raises(ValueError):
        cartesian_product_complete(k2, 0)


def test_union_join_counts(p3):
    u = graph_union(p3, p3)
    assert u.n == 6 and u.m == 4
    j = graph_join(p3, p3)
    assert j.n == 6 and j.m == 4 + 9


def test_complement_involution(c6):
    assert complement(complement(c6)) == c6


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 3)])


def test_graph_immutable(k2):
    with pytest.raises(AttributeError):
        k2.n = 5


def test_components():
    g = Graph(5, [(0, 1), (3, 4)])
    assert g.components() == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
