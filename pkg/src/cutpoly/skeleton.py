"""Adjacency of cut-polytope vertices and the full 1-skeleton.

Two distinct cuts X, Y are adjacent iff removing the cut-set of X△Y leaves
exactly two components. Because those edges are precisely the ones between
D = X△Y and its complement, the test only depends on D: both G[D] and
G[V\\D] must be connected. With canonical cuts, D is the XOR of the two cut
indices, so the skeleton is invariant under XOR-translation and is fully
described by the set of indices adjacent to the empty cut.
"""

from __future__ import annotations

import json
import random
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    ActuallyAdjacent,
    EqualCuts,
    InvalidSkeleton,
    LimitExceeded,
    NotAdjacent,
    NotSubgraph,
)
from .graph import Cut, CutVector, Graph, bits_of, component_masks, cut_mask, cut_matrix, sym_diff

DEFAULT_CAP = 16
DEFAULT_VERIFY_CAP = 12


def _check_pair(x: Cut, y: Cut) -> None:
    if x.n != y.n:
        raise ValueError("cuts over different vertex sets")
    if x == y:
        raise EqualCuts(f"{x} and {y} are the same cut")


def is_adjacent(g: Graph, x: Cut, y: Cut) -> bool:
    _check_pair(x, y)
    d = sym_diff(x, y)
    return len(component_masks(g, cut_mask(g, d.members))) == 2


# ---------------------------------------------------------------------------
# Proof-carrying outputs


@dataclass(frozen=True)
class AdjacencyCertificate:
    """Objective ``c`` maximized over the cut polytope by exactly the two cuts.

    ``verified`` is True/False after a brute-force scan over all cuts, or
    None when the graph is above the verification cap.
    """

    c: tuple[int, ...]
    maximizers: tuple[int, int]
    verified: bool | None
    trees: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "c": list(self.c),
            "maximizers": list(self.maximizers),
            "verified": self.verified,
            "tree_edges": [list(t) for t in self.trees],
        }


@dataclass(frozen=True)
class NonAdjacencyWitness:
    l: Cut
    component: tuple[int, ...]
    v_x: CutVector
    v_y: CutVector
    v_xl: CutVector
    v_yl: CutVector

    def midpoint_holds(self) -> bool:
        return all(a + b == c + d for a, b, c, d in zip(self.v_xl, self.v_yl, self.v_x, self.v_y))

    def to_json(self) -> dict:
        return {
            "l": self.l.vertices(),
            "component": list(self.component),
            "v_x": list(self.v_x),
            "v_y": list(self.v_y),
            "v_x_l": list(self.v_xl),
            "v_y_l": list(self.v_yl),
        }


def _vec(mask: int, m: int) -> CutVector:
    return tuple((mask >> i) & 1 for i in range(m))


def _bfs_tree(g: Graph, removed: int, root: int) -> list[int]:
    """Edge indices of a BFS spanning tree of root's component in G minus ``removed``."""
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        u = queue.popleft()
        for v, ei in g.incidence[u]:
            if (removed >> ei) & 1 or v in seen:
                continue
            seen.add(v)
            tree.append(ei)
            queue.append(v)
    return sorted(tree)


def certify_adjacent(g: Graph, x: Cut, y: Cut, verify_cap: int = DEFAULT_VERIFY_CAP) -> AdjacencyCertificate:
    _check_pair(x, y)
    removed = cut_mask(g, x.members ^ y.members)
    comps = component_masks(g, removed)
    if len(comps) != 2:
        raise NotAdjacent(f"{x} and {y}: {len(comps)} components after removing the cut-set")
    both = cut_mask(g, x.members) & cut_mask(g, y.members)
    c = [0] * g.m
    trees = []
    for comp in comps:
        root = (comp & -comp).bit_length() - 1
        tree = _bfs_tree(g, removed, root)
        trees.append(tuple(tree))
        for ei in tree:
            c[ei] = 1 if (both >> ei) & 1 else -1
    verified = None
    if g.n <= verify_cap:
        scores = cut_matrix(g).astype(np.int64) @ np.asarray(c, dtype=np.int64)
        top = np.flatnonzero(scores == scores.max())
        verified = sorted(top.tolist()) == sorted((x.index, y.index))
    return AdjacencyCertificate(tuple(c), (x.index, y.index), verified, tuple(trees))


def witness_nonadjacent(g: Graph, x: Cut, y: Cut) -> NonAdjacencyWitness:
    _check_pair(x, y)
    d_mask = x.members ^ y.members
    removed = cut_mask(g, d_mask)
    comps = component_masks(g, removed)
    if len(comps) == 2:
        raise ActuallyAdjacent(f"{x} and {y} are adjacent")
    for comp in comps:
        dl = cut_mask(g, comp)
        if dl and dl & ~removed == 0 and dl != removed:
            l_cut = Cut.of(g.n, comp)
            m = g.m
            vx, vy = cut_mask(g, x.members), cut_mask(g, y.members)
            vxl = cut_mask(g, x.members ^ l_cut.members)
            vyl = cut_mask(g, y.members ^ l_cut.members)
            return NonAdjacencyWitness(
                l_cut, tuple(bits_of(comp)), _vec(vx, m), _vec(vy, m), _vec(vxl, m), _vec(vyl, m)
            )
    # unreachable for a connected graph with >= 3 components
    raise AssertionError("no component with a proper sub-cut-set")


# ---------------------------------------------------------------------------
# Full skeleton


def _induced_connected(nbr: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """Vectorized: is the induced subgraph on each vertex mask non-empty and connected?"""
    reach = masks & -masks
    n = nbr.size
    while True:
        prev = reach
        for v in range(n):
            has = ((reach >> v) & 1).astype(bool)
            reach = np.where(has, reach | (nbr[v] & masks), reach)
        if np.array_equal(reach, prev):
            break
    return (reach == masks) & (masks != 0)


def _table_chunk(g: Graph, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    d = idx << 1
    comp = np.int64(g.full_mask) ^ d
    nbr = np.asarray(g.nbr_masks, dtype=np.int64)
    ok = _induced_connected(nbr, d) & _induced_connected(nbr, comp)
    return ok


def adjacency_table(g: Graph, workers: int = 1) -> np.ndarray:
    """Boolean array over cut indices d: is cut d adjacent to the empty cut?"""
    return _adjacency_table(g, max(1, workers)).copy()


@lru_cache(maxsize=32)
def _adjacency_table(g: Graph, workers: int) -> np.ndarray:
    size = 1 << (g.n - 1)
    if workers == 1 or size < 2 * workers:
        return _table_chunk(g, 0, size)
    bounds = [size * k // workers for k in range(workers + 1)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda k: _table_chunk(g, bounds[k], bounds[k + 1]), range(workers)))
    return np.concatenate(parts)


@dataclass(frozen=True)
class SkeletonGraph:
    """1-skeleton of CUT(G) on the ``2**(n-1)`` canonical cuts.

    ``diffs`` holds the sorted indices adjacent to cut 0; cut ``i`` is
    adjacent to exactly ``i ^ d`` for ``d`` in ``diffs``.
    """

    n: int
    diffs: tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 << (self.n - 1)

    @property
    def cuts(self) -> list[int]:
        return [i << 1 for i in range(self.size)]

    @cached_property
    def diff_set(self) -> frozenset[int]:
        return frozenset(self.diffs)

    @cached_property
    def diff_array(self) -> np.ndarray:
        return np.asarray(self.diffs, dtype=np.int64)

    @property
    def degree(self) -> int:
        return len(self.diffs)

    @property
    def edge_count(self) -> int:
        return self.size * self.degree // 2

    def neighbors(self, i: int) -> list[int]:
        return sorted(i ^ d for d in self.diffs)

    def has_edge(self, i: int, j: int) -> bool:
        return (i ^ j) in self.diff_set

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(i) for i in range(self.size)]

    def edges(self):
        """Yield each skeleton edge once as ``(i, j)`` with ``i < j``."""
        for i in range(self.size):
            for d in self.diffs:
                j = i ^ d
                if i < j:
                    yield i, j

    def to_json(self) -> dict:
        return {"n": self.n, "cuts": self.cuts, "adj": self.adjacency}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, doc: dict) -> "SkeletonGraph":
        n = int(doc["n"])
        size = 1 << (n - 1)
        cuts, adj = doc["cuts"], doc["adj"]
        if list(cuts) != [i << 1 for i in range(size)] or len(adj) != size:
            raise InvalidSkeleton("cuts must be the canonical cuts in bitmask order")
        diffs = tuple(sorted(adj[0]))
        for i, row in enumerate(adj):
            if sorted(row) != sorted(i ^ d for d in diffs):
                raise InvalidSkeleton(f"adjacency of cut {i} is not an XOR-translate of cut 0's")
        if 0 in diffs:
            raise InvalidSkeleton("self-loop in skeleton")
        return cls(n, diffs)

    @classmethod
    def loads(cls, text: str) -> "SkeletonGraph":
        return cls.from_json(json.loads(text))


def build_skeleton(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> SkeletonGraph:
    if g.n > cap:
        raise LimitExceeded(g.n, cap)
    table = _adjacency_table(g, max(1, workers))
    return SkeletonGraph(g.n, tuple(int(d) for d in np.flatnonzero(table)))


# ---------------------------------------------------------------------------
# Subgraph inheritance


@dataclass
class InheritanceReport:
    pairs_checked: int
    adjacent_in_sub: int
    violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_inheritance(g: Graph, sub: Graph, samples: int | None = None, seed: int = 0) -> InheritanceReport:
    """Check that adjacency in CUT(sub) implies adjacency in CUT(g).

    ``samples=None`` scans every unordered pair of distinct cuts; otherwise
    ``samples`` random pairs are tested with :func:`is_adjacent`.
    """
    if sub.n != g.n or not set(sub.edges) <= set(g.edges):
        raise NotSubgraph("sub must be a spanning subgraph of g")
    size = 1 << (g.n - 1)
    violations: list[tuple[int, int]] = []
    if samples is None:
        t_sub = _adjacency_table(sub, 1)
        t_g = _adjacency_table(g, 1)
        idx = np.arange(size)
        adjacent = 0
        for i in range(size):
            j = idx[i + 1:]
            d = i ^ j
            hit = t_sub[d]
            adjacent += int(hit.sum())
            bad = j[hit & ~t_g[d]]
            violations.extend((i, int(b)) for b in bad)
        return InheritanceReport(size * (size - 1) // 2, adjacent, violations)
    rng = random.Random(seed)
    adjacent = 0
    checked = 0
    while checked < samples and size > 1:
        i, j = rng.randrange(size), rng.randrange(size)
        if i == j:
            continue
        checked += 1
        x, y = Cut.from_index(g.n, i), Cut.from_index(g.n, j)
        if is_adjacent(sub, x, y):
            adjacent += 1
            if not is_adjacent(g, x, y):
                violations.append((min(i, j), max(i, j)))
    return InheritanceReport(checked, adjacent, violations)
