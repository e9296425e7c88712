"""Exact skeleton metrics and verification of colorings and cliques."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DisconnectedSkeleton, SizeMismatch, UnknownIndex
from .skeleton import SkeletonGraph

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Coloring:
    """One color per skeleton vertex, each a bit string of width ``width`` stored as an int."""

    colors: tuple[int, ...]
    width: int

    def bitstring(self, i: int) -> str:
        return format(self.colors[i], f"0{self.width}b") if self.width else ""

    @property
    def distinct(self) -> int:
        return len(set(self.colors))

    def to_json(self) -> dict:
        return {"width": self.width, "distinct_colors": self.distinct, "colors": list(self.colors)}


@dataclass(frozen=True)
class CliqueResult:
    size: int
    exact: bool
    witness: tuple[int, ...]
    expansions: int = 0


@dataclass(frozen=True)
class Metrics:
    diameter: int
    clique_number: int
    clique_exact: bool
    witness_clique: tuple[int, ...]
    node_count: int
    edge_count: int

    def to_json(self) -> dict:
        return {
            "diameter": self.diameter,
            "clique_number": self.clique_number,
            "clique_exact": self.clique_exact,
            "witness_clique": list(self.witness_clique),
            "node_count": self.node_count,
            "edge_count": self.edge_count,
        }


# ---------------------------------------------------------------------------
# Diameter


def _bfs_dist(s: SkeletonGraph, source: int) -> np.ndarray:
    dist = np.full(s.size, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.asarray([source], dtype=np.int64)
    gens = s.diff_array
    level = 0
    while frontier.size and gens.size:
        level += 1
        nxt = np.unique((frontier[:, None] ^ gens[None, :]).ravel())
        nxt = nxt[dist[nxt] == -1]
        dist[nxt] = level
        frontier = nxt
    return dist


def eccentricity(s: SkeletonGraph, source: int) -> int:
    dist = _bfs_dist(s, source)
    if (dist < 0).any():
        raise DisconnectedSkeleton(f"skeleton on {s.size} cuts is disconnected")
    return int(dist.max())


def diameter(s: SkeletonGraph, every_source: bool = False) -> int:
    """Exact diameter.

    XOR-translation by any cut index is an automorphism of the skeleton, so
    every vertex has the same eccentricity and one BFS suffices. Pass
    ``every_source=True`` to run the BFS from all vertices anyway.
    """
    if not every_source:
        return eccentricity(s, 0)
    return max(eccentricity(s, v) for v in range(s.size))


# ---------------------------------------------------------------------------
# Maximum clique


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _degeneracy_order(nbrs: Sequence[int]) -> list[int]:
    n = len(nbrs)
    deg = [_popcount(m) for m in nbrs]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    alive = (1 << n) - 1
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if not (alive >> v) & 1 or d != deg[v]:
            continue
        order.append(v)
        alive &= ~(1 << v)
        rest = nbrs[v] & alive
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            deg[u] -= 1
            heapq.heappush(heap, (deg[u], u))
            rest ^= low
    return order


def _color_classes(p: int, nbrs: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of ``p`` in bit order; vertices listed by nondecreasing color."""
    verts: list[int] = []
    cols: list[int] = []
    k = 0
    while p:
        k += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            p &= ~low
            q &= ~low & ~nbrs[v]
            verts.append(v)
            cols.append(k)
    return verts, cols


def max_clique(nbrs: Sequence[int], budget: int = DEFAULT_BUDGET) -> CliqueResult:
    """Maximum clique of a graph given as neighbour bitmasks.

    Branch and bound over greedy color classes: at each node the candidates
    are colored once and expanded from the highest color down, stopping as
    soon as the color number cannot beat the incumbent. Vertices are relabeled
    so the densest core (reverse degeneracy order) gets the low bits.
    ``budget`` caps node expansions; when it runs out the best clique found is
    returned with ``exact=False``.
    """
    n = len(nbrs)
    if n == 0:
        return CliqueResult(0, True, ())
    order = _degeneracy_order(nbrs)[::-1]
    pos = {v: i for i, v in enumerate(order)}
    rel = [0] * n
    for v in range(n):
        m = nbrs[v]
        r = 0
        while m:
            low = m & -m
            r |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rel[pos[v]] = r

    # greedy incumbent from the densest end
    best: list[int] = []
    cand = (1 << n) - 1
    while cand:
        v = (cand & -cand).bit_length() - 1
        best.append(v)
        cand &= rel[v]

    full = (1 << n) - 1
    stack = [[[], full, *_color_classes(full, rel)]]
    expansions = 0
    exhausted = False
    while stack:
        frame = stack[-1]
        r, p, verts, cols = frame
        if not verts or len(r) + cols[-1] <= len(best):
            stack.pop()
            continue
        if expansions >= budget:
            exhausted = True
            break
        expansions += 1
        v = verts.pop()
        cols.pop()
        frame[1] = p & ~(1 << v)
        sub = p & rel[v]
        r2 = r + [v]
        if not sub:
            if len(r2) > len(best):
                best = r2
            continue
        stack.append([r2, sub, *_color_classes(sub, rel)])
    witness = tuple(sorted(order[v] for v in best))
    return CliqueResult(len(best), not exhausted, witness, expansions)


def _bitsets(rows: np.ndarray) -> list[int]:
    packed = np.packbits(rows, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def clique_number(s: SkeletonGraph, budget: int = DEFAULT_BUDGET) -> CliqueResult:
    """Exact clique number of the skeleton (flagged lower bound if the budget runs out).

    By translation symmetry some maximum clique contains cut 0, so the search
    runs on the subgraph induced by cut 0's neighbours.
    """
    gens = s.diff_array
    if gens.size == 0:
        return CliqueResult(1, True, (0,))
    adj = np.isin(gens[:, None] ^ gens[None, :], gens)
    sub = max_clique(_bitsets(adj), budget)
    witness = (0,) + tuple(sorted(int(gens[i]) for i in sub.witness))
    return CliqueResult(sub.size + 1, sub.exact, witness, sub.expansions)


def metrics(s: SkeletonGraph, budget: int = DEFAULT_BUDGET) -> Metrics:
    c = clique_number(s, budget)
    return Metrics(diameter(s), c.size, c.exact, c.witness, s.size, s.edge_count)


# ---------------------------------------------------------------------------
# Verification


def verify_coloring(s: SkeletonGraph, col: Coloring) -> tuple[bool, tuple[int, int] | None]:
    if len(col.colors) != s.size:
        raise SizeMismatch(f"{len(col.colors)} colors for {s.size} skeleton vertices")
    colors = np.asarray(col.colors, dtype=np.int64)
    idx = np.arange(s.size, dtype=np.int64)
    first: tuple[int, int] | None = None
    for d in s.diffs:
        clash = idx[(colors == colors[idx ^ d]) & (idx < (idx ^ d))]
        if clash.size:
            i = int(clash[0])
            pair = (i, i ^ d)
            if first is None or pair < first:
                first = pair
    return first is None, first


def verify_clique(s: SkeletonGraph, members: Sequence[int]) -> tuple[bool, tuple[int, int] | None]:
    for i in members:
        if not 0 <= i < s.size:
            raise UnknownIndex(f"cut index {i} not in skeleton of size {s.size}")
    ms = list(members)
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            if not s.has_edge(ms[a], ms[b]):
                return False, (ms[a], ms[b])
    return True, None
