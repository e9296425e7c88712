"""Figure fixtures and brute-force oracles that share no code with the library's fast paths."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from cutpoly import Graph


def graph(n, edges, weights=None):
    return Graph.from_edges(n, edges, weights)


def path(n):
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph(n, list(itertools.combinations(range(n), 2)))


def multipartite(*parts):
    labels = []
    for k, size in enumerate(parts):
        labels += [k] * size
    edges = [(u, v) for u, v in itertools.combinations(range(len(labels)), 2) if labels[u] != labels[v]]
    return graph(len(labels), edges)


# vertices A..E of the five-vertex drawings are 0..4
FIG2 = dict(n=5, edges=[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (1, 3), (1, 4)])
FIG3 = dict(n=5, edges=[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)])

# cactus drawing, vertices numbered in drawing order
FIG4_EDGES = [
    (0, 2), (2, 4), (4, 10), (10, 3), (3, 1), (1, 0),
    (1, 6), (6, 9), (9, 5), (5, 1),
    (2, 7),
    (7, 8), (8, 12), (12, 7),
    (4, 11),
]

# almost-tree(2) drawing
FIG5_EDGES = [
    (0, 1), (1, 4), (4, 8), (8, 0), (0, 4),
    (4, 5),
    (5, 9), (9, 10), (10, 5),
    (5, 2),
    (5, 6),
    (6, 3), (3, 7), (7, 12), (12, 11), (11, 6),
    (11, 7),
]


def fig4():
    return graph(13, FIG4_EDGES)


def fig5():
    return graph(13, FIG5_EDGES)


def random_connected(n, rng: random.Random, extra_p=0.3, weights=None):
    """Random spanning tree plus each remaining pair with probability ``extra_p``."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra_p:
            edges.add((u, v))
    edges = sorted(edges)
    w = None if weights is None else [rng.randint(*weights) for _ in edges]
    return graph(n, edges, w)


# ---------------------------------------------------------------------------
# Oracles


def nx_graph(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def oracle_cut_vector(g: Graph, members: set[int]) -> tuple[int, ...]:
    return tuple(int((u in members) != (v in members)) for u, v in g.edges)


def oracle_adjacent(g: Graph, x: set[int], y: set[int]) -> bool:
    d = x ^ y
    h = nx_graph(g)
    h.remove_edges_from([(u, v) for u, v in g.edges if (u in d) != (v in d)])
    return nx.number_connected_components(h) == 2


def oracle_skeleton(g: Graph) -> nx.Graph:
    """All-pairs skeleton from networkx component counts."""
    cuts = [{v for v in range(g.n) if (i << 1) >> v & 1} for i in range(1 << (g.n - 1))]
    sk = nx.Graph()
    sk.add_nodes_from(range(len(cuts)))
    for i, j in itertools.combinations(range(len(cuts)), 2):
        if oracle_adjacent(g, cuts[i], cuts[j]):
            sk.add_edge(i, j)
    return sk


def oracle_clique_number(sk: nx.Graph) -> int:
    """Exhaustive over every vertex subset: a set is a clique iff dropping its lowest
    member leaves a clique that lies inside that member's neighbourhood."""
    nodes = sorted(sk.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    nbr = [sum(1 << pos[u] for u in sk[v]) for v in nodes]
    is_clique = bytearray(1 << len(nodes))
    is_clique[0] = 1
    best = 0
    for mask in range(1, 1 << len(nodes)):
        low = mask & -mask
        rest = mask ^ low
        if is_clique[rest] and rest & ~nbr[low.bit_length() - 1] == 0:
            is_clique[mask] = 1
            best = max(best, mask.bit_count() if hasattr(mask, "bit_count") else bin(mask).count("1"))
    return best


def oracle_maxcut(g: Graph) -> int:
    best = None
    for bits in range(1 << g.n):
        w = sum(wt for (u, v), wt in zip(g.edges, g.weights) if ((bits >> u) ^ (bits >> v)) & 1)
        best = w if best is None else max(best, w)
    return best
