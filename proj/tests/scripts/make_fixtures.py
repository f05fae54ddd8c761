"""Regenerates the graph6 fixtures under tests/fixtures with networkx.

Run from the repository root:  python3 tests/scripts/make_fixtures.py
"""
import random
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(name, lines):
    (OUT / name).write_text("".join(line + "\n" for line in lines))


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() > 0]
    # unlabelled graphs on 1..7 vertices, one per isomorphism class
    write("atlas_upto7.g6", [g6(g) for g in atlas])
    write("atlas_n5.g6", [g6(g) for g in atlas if g.number_of_nodes() == 5])

    rng = random.Random(20240601)
    ext = []
    for i in range(10_000):
        n = 8 + i % 3
        ext.append(g6(nx.gnp_random_graph(n, rng.uniform(0.1, 0.9), seed=rng.randrange(2**32))))
    write("ext_n8_10.g6", ext)

    # 100k mixed graphs for the determinism check, with malformed lines
    # sprinkled in so the report carries witnesses past the default cap
    rng = random.Random(7)
    stream = []
    for i in range(100_000):
        if i % 613 == 0:
            stream.append(rng.choice(["C", "D??", "?", "B~~", "E???????"]))
            continue
        n = rng.randint(4, 9)
        stream.append(g6(nx.gnp_random_graph(n, rng.uniform(0.15, 0.7), seed=rng.randrange(2**32))))
    write("scan_100k.g6", stream)

    # K_{1,2,4} (a = 0, b = 1 2, c = 3..6) with a pendant vertex on a
    k124 = nx.complete_multipartite_graph(1, 2, 4)
    k124.add_edge(0, 7)
    write("k124_pendant.g6", [g6(k124)])


if __name__ == "__main__":
    main()
