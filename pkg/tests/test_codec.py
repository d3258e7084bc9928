"""graph6 and edge-list codecs against an independent reference decoder."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnconn import CodecError, Graph, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from gnconn.codec import parse_graph_auto
from gnconn.families import complete, cycle, path, star, wheel


def reference_decode(record):
    """Separate decoder: expand every byte to a bit string, then walk pairs."""
    if record[0] == "~":
        n = 0
        for ch in record[1:4]:
            n = n * 64 + (ord(ch) - 63)
        body = record[4:]
    else:
        n = ord(record[0]) - 63
        body = record[1:]
    bitstring = "".join(format(ord(ch) - 63, "06b") for ch in body)
    edges = []
    c = 0
    for j in range(1, n):
        for i in range(j):
            if bitstring[c] == "1":
                edges.append((i, j))
            c += 1
    return n, edges


class TestGraph6:
    def test_known_record_is_a_star(self):
        # 'D?{' decodes to 5 vertices with vertex 4 adjacent to all others.
        G = parse_graph6("D?{")
        assert G.n == 5
        assert G.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert emit_graph6(G) == "D?{"

    def test_singleton(self):
        assert emit_graph6(Graph(1)) == "@"
        assert parse_graph6("@").n == 1

    def test_empty_input_rejected(self):
        with pytest.raises(CodecError):
            parse_graph6("")

    def test_bad_length_rejected(self):
        with pytest.raises(CodecError) as err:
            parse_graph6("D?")
        assert "byte offset" in str(err.value)

    def test_bad_character_rejected(self):
        with pytest.raises(CodecError):
            parse_graph6("D?\x07")

    def test_nonzero_padding_rejected(self):
        # K2 record is 'A_' (bit pattern 100000); 'A?' is empty, 'A' + odd pad fails.
        assert parse_graph6("A_").edges() == [(0, 1)]
        with pytest.raises(CodecError):
            parse_graph6("A" + chr(63 + 1))  # padding bit set

    def test_header_is_tolerated(self):
        assert parse_graph6(">>graph6<<D?{").n == 5

    def test_long_form_orders(self):
        for n in (63, 64):
            G = path(n)
            record = emit_graph6(G)
            assert record.startswith("~")
            back = parse_graph6(record)
            assert back == G

    def test_oversized_rejected(self):
        # long form encoding n = 2*64 = 128, beyond the 64-vertex cap
        with pytest.raises(CodecError):
            parse_graph6("~" + chr(63) + chr(63 + 2) + chr(63))

    def test_matches_reference_decoder_on_families(self):
        for G in (path(6), cycle(7), star(9), wheel(8), complete(5)):
            n, edges = reference_decode(emit_graph6(G))
            assert n == G.n
            assert sorted(edges) == G.edges()

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_round_trip_random(self, data):
        n = data.draw(st.integers(min_value=0, max_value=12))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mask = data.draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        G = Graph(n, [p for c, p in enumerate(pairs) if mask >> c & 1])
        record = emit_graph6(G)
        assert parse_graph6(record) == G
        rn, redges = reference_decode(record)
        assert (rn, redges) == (G.n, G.edges())


class TestEdgeList:
    def test_round_trip(self):
        G = wheel(6)
        assert parse_edge_list(emit_edge_list(G)) == G

    def test_header_mismatch_rejected(self):
        with pytest.raises(CodecError):
            parse_edge_list("3 2\n0 1\n")

    def test_bad_tokens_rejected(self):
        with pytest.raises(CodecError):
            parse_edge_list("3 1\n0 x\n")
        with pytest.raises(CodecError):
            parse_edge_list("")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(Exception):
            parse_edge_list("3 2\n0 1\n1 0\n")


class TestAutoDetect:
    def test_digit_start_means_edge_list(self):
        assert parse_graph_auto("3 1\n0 2\n") == Graph(3, [(0, 2)])

    def test_otherwise_graph6(self):
        assert parse_graph_auto("D?{\n").n == 5
