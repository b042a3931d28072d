import random

import networkx as nx
import pytest

from oracles import from_nx, to_nx
from dsq.graph import centipede, complete, empty
from dsq.graph6 import Graph6Error, decode, encode, encode_str, ingest_graph6_stream, iter_records
from dsq.suites import random_graph


def test_known_strings():
    assert decode("Bw") == complete(3)
    assert encode(empty(1)) == b"@"
    assert encode(empty(0)) == b"?"


def test_roundtrip_centipede():
    assert decode(encode(centipede(8))) == centipede(8)


def test_header_tolerated():
    assert decode(b">>graph6<<Bw\n") == complete(3)


def test_random_roundtrip_against_networkx():
    rng = random.Random(3)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 30), rng.random())
        data = encode(g)
        ref = nx.to_graph6_bytes(to_nx(g), header=False).strip()
        assert data == ref
        assert decode(data) == g
        assert encode(decode(data)) == data


def test_long_order_field():
    g = random_graph(random.Random(1), 70, 0.1)
    data = encode(g)
    assert data[0] == 126
    assert decode(data) == g
    assert from_nx(nx.from_graph6_bytes(data)) == g


@pytest.mark.parametrize("bad,offset", [
    (b"Bw?", 2),      # trailing garbage
    (b"C", 1),        # too short for n=4
    (b"B\x20", 1),    # byte out of range
    (b"Bx", 1),       # padding bits set
    (b"", 0),
])
def test_malformed(bad, offset):
    with pytest.raises(Graph6Error) as info:
        decode(bad)
    assert info.value.offset == offset


def test_stream(tmp_path):
    p = tmp_path / "one.g6"
    p.write_text("Bw\n")
    assert list(ingest_graph6_stream(p)) == [complete(3)]

    empty_file = tmp_path / "empty.g6"
    empty_file.write_text("")
    reader = ingest_graph6_stream(empty_file)
    assert list(reader) == [] and reader.count == 0


def test_stream_bad_line(tmp_path):
    lines = [encode_str(centipede(2 * k)) for k in range(1, 10)]
    lines.insert(4, "C~~")
    p = tmp_path / "mixed.g6"
    p.write_text("\n".join(lines) + "\n")

    reader = ingest_graph6_stream(p, skip_bad=True)
    assert len(list(reader)) == 9
    assert len(reader.errors) == 1 and reader.errors[0].line == 5

    with pytest.raises(Graph6Error) as info:
        list(ingest_graph6_stream(p))
    assert info.value.line == 5


def test_shipped_stream_matches_atlas(connected_g6_path):
    # the networkx atlas holds every graph on at most 7 vertices
    from dsq.canon import canonical_label
    atlas = {canonical_label(from_nx(h)) for h in nx.graph_atlas_g()[1:] if nx.is_connected(h)}
    ours = [canonical_label(g) for g in ingest_graph6_stream(connected_g6_path) if g.n <= 7]
    assert len(ours) == len(set(ours)) == len(atlas)
    assert set(ours) == atlas


def test_gzip_stream(connected_g6_path, connected_g6_gz_path, tmp_path):
    import gzip
    p = tmp_path / "k3.g6.gz"
    with gzip.open(p, "wb") as fh:
        fh.write(b">>graph6<<\nBw\n")
    assert list(ingest_graph6_stream(p)) == [complete(3)]
    # the compressed n <= 9 file starts with the n <= 8 file
    plain = list(iter_records(connected_g6_path))
    gz = ingest_graph6_stream(connected_g6_gz_path)
    counts = {}
    for i, g in enumerate(gz):
        if i < len(plain):
            assert encode(g) == plain[i][1]
        counts[g.n] = counts.get(g.n, 0) + 1
    assert [counts[n] for n in range(1, 10)] == [1, 1, 2, 6, 21, 112, 853, 11117, 261080]
