import pytest

from coronares import (
    EmptyGraph,
    LoopEdge,
    InvalidVertex,
    ParseError,
    TooSmall,
    complete_graph,
    cycle_graph,
    graph_from_edges,
    graph_to_spec,
    parse_dot,
    parse_graph_spec,
    path_graph,
)


def test_family_specs():
    assert parse_graph_spec("C3") == cycle_graph(3)
    assert parse_graph_spec("P4") == path_graph(4)
    assert parse_graph_spec("K5") == complete_graph(5)


def test_case_and_whitespace_insensitive():
    assert parse_graph_spec("c3") == cycle_graph(3)
    assert parse_graph_spec(" K 4 ") == complete_graph(4)
    assert parse_graph_spec("edges : 4 : 1-2 , 2-3") == graph_from_edges(
        4, [(1, 2), (2, 3)]
    )


def test_edges_spec():
    assert parse_graph_spec("edges:4:1-2,2-3,3-4,1-4") == cycle_graph(4)
    assert parse_graph_spec("EDGES:3:") == graph_from_edges(3, [])


def test_semantic_errors_delegate():
    with pytest.raises(EmptyGraph):
        parse_graph_spec("P0")
    with pytest.raises(TooSmall):
        parse_graph_spec("C2")
    with pytest.raises(LoopEdge):
        parse_graph_spec("edges:3:1-1")
    with pytest.raises(InvalidVertex):
        parse_graph_spec("edges:3:1-4")


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("X5", 0),
        ("P", 1),
        ("Pabc", 1),
        ("edges", 5),
        ("edges:4", 7),
        ("edges:x:1-2", 6),
        ("edges:4:1+2", 8),
        ("edges:4:1-2,,3-4", 12),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as exc:
        parse_graph_spec(text)
    assert exc.value.position == position


def test_round_trip_identity():
    graphs = [
        complete_graph(1),
        path_graph(5),
        cycle_graph(4),
        graph_from_edges(6, [(1, 3), (2, 5), (4, 6)]),
        graph_from_edges(3, []),
    ]
    for g in graphs:
        assert parse_graph_spec(graph_to_spec(g)) == g


def test_dot_integer_names():
    g = parse_dot("graph { 1 -- 2; 2 -- 3; 3 -- 1; }")
    assert g == cycle_graph(3)


def test_dot_symbolic_names_first_appearance_order():
    g = parse_dot("graph { a -- b; b -- c; }")
    assert g == path_graph(3)


def test_dot_chained_edges_and_isolated_nodes():
    g = parse_dot("graph net { a -- b -- c  d }")
    assert g == graph_from_edges(4, [(1, 2), (2, 3)])


def test_dot_comments_semicolons_newlines():
    text = """
    // comment line
    strict graph G {
        1 -- 2   # trailing comment
        2 -- 3;
        3 -- 4
        4 -- 1
    }
    """
    assert parse_dot(text) == cycle_graph(4)


def test_dot_integer_zero_falls_back_to_symbolic():
    g = parse_dot("graph { 0 -- 1 }")
    assert g == complete_graph(2)


def test_dot_rejections():
    with pytest.raises(ParseError):
        parse_dot("digraph { a -> b }")
    with pytest.raises(ParseError):
        parse_dot("graph { a -> b }")
    with pytest.raises(ParseError):
        parse_dot("graph { a -- b [color=red] }")
    with pytest.raises(ParseError):
        parse_dot("graph { a -- b ")
    with pytest.raises(ParseError):
        parse_dot("not dot at all")
    with pytest.raises(ParseError):
        parse_dot("graph { }")
    with pytest.raises(LoopEdge):
        parse_dot("graph { a -- a }")
