#!/usr/bin/env python3
"""Enumerate all cubic graphs (connected or not) on n <= 10 vertices up to
isomorphism and print them as graph6 lines, one block per order.

Used once to produce the fixture table in src/fixtures.cpp.
Expected class counts: n=4: 1, n=6: 2, n=8: 6, n=10: 21.
"""
import sys
import networkx as nx
import numpy as np


def labeled_cubic(n):
    # Vertex 0 is pinned to neighbours {1, 2, 3}; every isomorphism class
    # still has a labelling of this form.
    adj = [set() for _ in range(n)]
    for u in (1, 2, 3):
        adj[0].add(u)
        adj[u].add(0)

    def rec():
        v = next((x for x in range(n) if len(adj[x]) < 3), None)
        if v is None:
            yield [sorted(a) for a in adj]
            return
        # Neighbours above v are added in increasing order so each labelled
        # graph is produced once.
        start = max([v] + [w for w in adj[v] if w > v]) + 1
        for u in range(start, n):
            if len(adj[u]) < 3 and u not in adj[v]:
                adj[v].add(u)
                adj[u].add(v)
                yield from rec()
                adj[v].remove(u)
                adj[u].remove(v)

    yield from rec()


def classes(n):
    buckets = {}
    for rows in labeled_cubic(n):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from((v, u) for v in range(n) for u in rows[v] if u > v)
        # WL colouring cannot split regular graphs, so bucket on closed-walk
        # counts instead.
        a = nx.to_numpy_array(g, nodelist=range(n), dtype=np.int64)
        walks, p = [], a.copy()
        for _ in range(2, 9):
            p = p @ a
            walks.append(np.diag(p))
        h = tuple(sorted(zip(*[w.tolist() for w in walks])))
        reps = buckets.setdefault(h, [])
        if not any(nx.is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return [g for reps in buckets.values() for g in reps]


def main():
    for n in (4, 6, 8, 10):
        reps = classes(n)
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in reps)
        print(f"# n={n} count={len(lines)}")
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
