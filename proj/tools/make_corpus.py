#!/usr/bin/env python3
"""Write every connected graph on lo..hi vertices (hi <= 8) as graph6, one per line.

Up to 7 vertices the source is the networkx graph atlas. Order 8 is built by adding a vertex
to every 7-vertex graph in all possible ways and keeping one graph per isomorphism class,
using nauty certificates (pip install pynauty).
"""
import argparse

import networkx as nx


def atlas(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]


def extend(graphs, n):
    from pynauty import Graph, certificate

    seen = {}
    for g in graphs:
        base = {v: set(g[v]) for v in range(n - 1)}
        for mask in range(1 << (n - 1)):
            adj = {v: set(base[v]) for v in base}
            adj[n - 1] = {v for v in range(n - 1) if mask >> v & 1}
            for v in adj[n - 1]:
                adj[v].add(n - 1)
            cert = certificate(Graph(n, adjacency_dict={v: sorted(a) for v, a in adj.items()}))
            if cert not in seen:
                seen[cert] = nx.Graph([(u, v) for u in adj for v in adj[u] if u < v])
                seen[cert].add_nodes_from(range(n))
    return list(seen.values())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=7)
    ap.add_argument("out")
    args = ap.parse_args()
    if args.hi > 8:
        ap.error("supported up to 8 vertices")
    with open(args.out, "w") as f:
        for n in range(args.lo, args.hi + 1):
            graphs = atlas(n) if n <= 7 else extend(atlas(7), n)
            for g in graphs:
                if nx.is_connected(g):
                    f.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")


if __name__ == "__main__":
    main()
