import pytest

from ngons import (ParseError, parse_graph, format_graph, fano_graph,
                   make_cl_witness, make_cycle, make_gamma, make_path)


def test_round_trip_witnesses():
    for g in (make_path(3, 5), make_cycle(4, 10), make_gamma(5),
              make_cl_witness(3, 2), make_cl_witness(4, 3, with_b=True),
              fano_graph()):
        text = format_graph(g)
        h = parse_graph(text)
        assert h == g
        assert h.subsets == g.subsets
        # canonical: serializing again is byte-identical
        assert format_graph(h) == text


def test_parse_minimal():
    g = parse_graph("ngon 3\nvertex 0 0\nvertex 1 1 # a comment\nedge 0 1\n"
                    "subset a 0 1\n")
    assert g.n == 3 and g.edges == frozenset({(0, 1)})
    assert g.subsets["a"] == frozenset({0, 1})


@pytest.mark.parametrize("text", [
    "",                                    # missing header
    "vertex 0 0\nngon 3",                  # header not first
    "ngon 3\nngon 3",                      # duplicate header
    "ngon 3\nvertex 0 2",                  # bad part
    "ngon 3\nvertex 0 0\nvertex 0 0",      # duplicate vertex
    "ngon 3\nvertex 0 0\nedge 0 1",        # unknown endpoint
    "ngon 3\nvertex 0 0\nvertex 1 1\nedge 0 1\nedge 1 0",  # dup edge
    "ngon 3\nvertex 0 0\nsubset a 5",      # unknown subset member
    "ngon 3\nwibble 1 2",                  # unknown declaration
    "ngon x",                              # non-integer n
    "ngon 3\nvertex 0 0\nvertex 1 0\nedge 0 1",  # same-part edge
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)
