#!/usr/bin/env python3
"""Regenerate graph6_n3_8.tsv.

Spines are enumerated with itertools and graphs encoded with networkx, so the
file is independent of the C++ codecs it is used to check. Vertex numbering:
0 left endpoint, 1..k spine, k+1 right endpoint, then pendant leaves by spine
position.
"""
import itertools
import sys

import networkx as nx


def compositions(total, parts):
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cut + (total + parts - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))


def caterpillar(spine):
    k = len(spine)
    g = nx.Graph()
    g.add_nodes_from(range(sum(spine) + k + 2))
    g.add_edges_from((v, v + 1) for v in range(k + 1))
    leaf = k + 2
    for i, w in enumerate(spine):
        for _ in range(w):
            g.add_edge(i + 1, leaf)
            leaf += 1
    return g


def main(out):
    out.write("# N\tspine\tgraph6\n")
    for n in range(3, 9):
        for k in range(1, n - 1):
            for s in sorted(compositions(n - k - 2, k)):
                if s > s[::-1]:
                    continue
                g6 = nx.to_graph6_bytes(caterpillar(s), header=False).decode().strip()
                out.write(f"{n}\t{','.join(map(str, s))}\t{g6}\n")


if __name__ == "__main__":
    main(sys.stdout)
