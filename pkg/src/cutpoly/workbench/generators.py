"""Seeded instance generators for each graph class."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from ..errors import BadSpec, CutPolytopeError
from ..graph import Graph, classify
from .rng import Lcg64

KINDS = ("tree", "cactus", "almost-tree", "cycle", "complete", "complete-bipartite", "complete-multipartite")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int | None = None
    parts: tuple[int, ...] | None = None
    seed: int = 0


def prufer_tree(n: int, rng: Lcg64) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _tree_path(parent: list[int], depth: list[int], u: int, v: int) -> list[int]:
    """Vertices on the tree path u..v."""
    left, right = [u], [v]
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u, v = parent[u], parent[v]
        left.append(u)
        right.append(v)
    right.pop()
    return left + right[::-1]


def _cactus(n: int, rng: Lcg64) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """Random tree plus edges closing cycles over tree paths not yet on a cycle."""
    edges = prufer_tree(n, rng)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent, depth = [-1] * n, [0] * n
    order, seen = [0], {0}
    for u in order:
        for v in sorted(adj[u]):
            if v not in seen:
                seen.add(v)
                parent[v], depth[v] = u, depth[u] + 1
                order.append(v)
    on_cycle: set[frozenset[int]] = set()
    present = {frozenset(e) for e in edges}
    cycles = []
    for _ in range(2 * n):
        u, v = rng.below(n), rng.below(n)
        if u == v or frozenset((u, v)) in present:
            continue
        path = _tree_path(parent, depth, u, v)
        pe = [frozenset(p) for p in zip(path, path[1:])]
        if any(e in on_cycle for e in pe):
            continue
        on_cycle.update(pe)
        on_cycle.add(frozenset((u, v)))
        present.add(frozenset((u, v)))
        edges.append((u, v))
        cycles.append(path)
    return edges, cycles


def _almost_tree(n: int, rng: Lcg64) -> list[tuple[int, int]]:
    """Cactus plus at most one chord per cycle block (block excess <= 2)."""
    edges, cycles = _cactus(n, rng)
    for cyc in cycles:
        length = len(cyc)
        if length < 4 or not rng.chance(3, 4):
            continue
        i = rng.below(length)
        j = (i + 2 + rng.below(length - 3)) % length
        edges.append((cyc[i], cyc[j]))
    return edges


def _multipartite(parts: tuple[int, ...]) -> tuple[int, list[tuple[int, int]]]:
    starts = []
    total = 0
    for p in parts:
        starts.append(total)
        total += p
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(starts[a], starts[a] + parts[a]):
                for v in range(starts[b], starts[b] + parts[b]):
                    edges.append((u, v))
    return total, edges


def generate(spec: GeneratorSpec) -> Graph:
    kind, n = spec.kind, spec.n
    rng = Lcg64(spec.seed)
    if kind in ("tree", "cactus", "almost-tree", "cycle", "complete"):
        if n is None or n < 1:
            raise BadSpec(f"{kind} needs n >= 1")
        if kind == "cycle" and n < 3:
            raise BadSpec("cycle needs n >= 3")
    try:
        if kind == "tree":
            g = Graph.from_edges(n, prufer_tree(n, rng))
        elif kind == "cactus":
            g = Graph.from_edges(n, _cactus(n, rng)[0])
        elif kind == "almost-tree":
            g = Graph.from_edges(n, _almost_tree(n, rng))
        elif kind == "cycle":
            g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        elif kind == "complete":
            g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
        elif kind in ("complete-bipartite", "complete-multipartite"):
            parts = spec.parts
            if not parts or any(p < 1 for p in parts):
                raise BadSpec(f"{kind} needs positive part sizes")
            if kind == "complete-bipartite" and len(parts) != 2:
                raise BadSpec("complete-bipartite needs exactly two parts")
            if len(parts) < 2:
                raise BadSpec("complete-multipartite needs at least two parts")
            total, edges = _multipartite(tuple(parts))
            g = Graph.from_edges(total, edges)
        else:
            raise BadSpec(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")
    except BadSpec:
        raise
    except CutPolytopeError as exc:
        raise BadSpec(f"generator produced an invalid graph: {exc}") from exc
    _revalidate(kind, g, spec)
    return g


def _revalidate(kind: str, g: Graph, spec: GeneratorSpec) -> None:
    gc = classify(g)
    ok = {
        "tree": gc.has("Tree"),
        "cactus": gc.is_cactus,
        "almost-tree": gc.is_almost_tree2,
        "cycle": gc.has("Cycle"),
        "complete": g.n == 1 or gc.has("Complete"),
        "complete-bipartite": gc.parts is not None and sorted(gc.parts) == sorted(spec.parts or ()),
        "complete-multipartite": gc.parts is not None and sorted(gc.parts) == sorted(spec.parts or ()),
    }[kind]
    if not ok:
        raise BadSpec(f"generated graph failed {kind} classification: {gc.tags}")
