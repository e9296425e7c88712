"""Graphs, cuts and cut vectors, plus recognition of the graph classes we care about."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import Disconnected, DuplicateEdge, Malformed, SelfLoop

# A cut vector is a 0/1 tuple indexed by the graph's edge order.
CutVector = tuple


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    ``edges`` must be strictly increasing pairs ``(u, v)`` with ``u < v``;
    that order indexes every cut vector. Use :meth:`from_edges` to build
    one from unsorted input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise Malformed("graph needs at least one vertex")
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * len(self.edges))
        if len(self.weights) != len(self.edges):
            raise Malformed("one weight per edge required")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise Malformed(f"edge ({u}, {v}) not of the form u < v < n")
            if prev is not None and (u, v) <= prev:
                if (u, v) == prev:
                    raise DuplicateEdge(f"duplicate edge ({u}, {v})")
                raise Malformed("edge list is not sorted")
            prev = (u, v)
        if not self._connected():
            raise Disconnected("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], weights: Sequence[int] | None = None) -> "Graph":
        pairs = []
        for i, e in enumerate(edges):
            u, v = int(e[0]), int(e[1])
            w = 1 if weights is None else int(weights[i])
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            pairs.append(((min(u, v), max(u, v)), w))
        pairs.sort(key=lambda p: p[0])
        for a, b in zip(pairs, pairs[1:]):
            if a[0] == b[0]:
                raise DuplicateEdge(f"duplicate edge {a[0]}")
        return cls(n, tuple(p for p, _ in pairs), tuple(w for _, w in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(neighbor, edge index)`` pairs sorted by neighbor."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(sorted(x)) for x in inc)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _connected(self) -> bool:
        return _reach(self.nbr_masks, 1, self.full_mask) == self.full_mask


def _reach(nbr: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` (a bitmask) inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= nbr[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Cuts


@dataclass(frozen=True, order=True)
class Cut:
    """Canonical vertex subset: the side of the bipartition not containing 0."""

    members: int
    n: int

    def __post_init__(self):
        if self.members >> self.n:
            raise ValueError(f"cut {self.members:#b} has vertices outside 0..{self.n - 1}")
        if self.members & 1:
            raise ValueError("canonical cuts never contain vertex 0; use Cut.of")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] | int) -> "Cut":
        """Canonical representative of ``{S, V \\ S}``."""
        if isinstance(vertices, int):
            mask = vertices
        else:
            mask = 0
            for v in vertices:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range for n={n}")
                mask |= 1 << v
        if mask & 1:
            mask ^= (1 << n) - 1
        return cls(mask, n)

    @classmethod
    def from_index(cls, n: int, index: int) -> "Cut":
        return cls(index << 1, n)

    @property
    def index(self) -> int:
        """Position in the enumeration ``0 .. 2**(n-1) - 1``."""
        return self.members >> 1

    def vertices(self) -> list[int]:
        return bits_of(self.members)

    def __repr__(self):
        return f"Cut({self.vertices()})"


def all_cuts(n: int) -> list[Cut]:
    return [Cut(i << 1, n) for i in range(1 << (n - 1))]


def sym_diff(x: Cut, y: Cut) -> Cut:
    if x.n != y.n:
        raise ValueError("cuts over different vertex sets")
    return Cut.of(x.n, x.members ^ y.members)


def cut_mask(g: Graph, members: int) -> int:
    """Edge bitmask of the cut-set of ``members`` (bit ``e`` = edge ``e``)."""
    out = 0
    for i, (u, v) in enumerate(g.edges):
        if ((members >> u) ^ (members >> v)) & 1:
            out |= 1 << i
    return out


def cut_set(g: Graph, s: Cut) -> CutVector:
    mask = cut_mask(g, s.members)
    return tuple((mask >> i) & 1 for i in range(g.m))


def vector_mask(vec: Sequence[int]) -> int:
    out = 0
    for i, b in enumerate(vec):
        if b:
            out |= 1 << i
    return out


@lru_cache(maxsize=64)
def cut_matrix(g: Graph) -> np.ndarray:
    """All cut vectors, one row per canonical cut in index order (uint8)."""
    masks = np.arange(1 << (g.n - 1), dtype=np.int64) << 1
    out = np.empty((masks.size, g.m), dtype=np.uint8)
    for e, (u, v) in enumerate(g.edges):
        out[:, e] = ((masks >> u) ^ (masks >> v)) & 1
    return out


def components(g: Graph, removed: Sequence[int]) -> list[tuple[int, ...]]:
    """Connected components after deleting every edge whose bit is set."""
    if len(removed) != g.m:
        raise ValueError(f"removed vector has length {len(removed)}, expected {g.m}")
    return [tuple(bits_of(c)) for c in component_masks(g, vector_mask(removed))]


def component_masks(g: Graph, removed_mask: int) -> list[int]:
    nbr = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        if not (removed_mask >> i) & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
    out = []
    left = g.full_mask
    while left:
        comp = _reach(nbr, left & -left, g.full_mask)
        out.append(comp)
        left &= ~comp
    return out


# ---------------------------------------------------------------------------
# Classification


def biconnected_components(g: Graph) -> list[list[int]]:
    """Blocks as lists of edge indices, via one iterative DFS with an edge stack."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    edge_stack: list[int] = []
    clock = 0
    inc = g.incidence
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            u, parent_edge, it = stack[-1]
            descended = False
            for v, ei in it:
                if ei == parent_edge:
                    continue
                if disc[v] == -1:
                    edge_stack.append(ei)
                    disc[v] = low[v] = clock
                    clock += 1
                    stack.append((v, ei, iter(inc[v])))
                    descended = True
                    break
                if disc[v] < disc[u]:
                    edge_stack.append(ei)
                    low[u] = min(low[u], disc[v])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                block = []
                while True:
                    ei = edge_stack.pop()
                    block.append(ei)
                    if ei == parent_edge:
                        break
                blocks.append(sorted(block))
    return blocks


def block_excess(g: Graph, block: Sequence[int]) -> int:
    verts = set()
    for ei in block:
        verts.update(g.edges[ei])
    return len(block) - (len(verts) - 1)


def multipartite_parts(g: Graph) -> list[list[int]] | None:
    """Parts of a complete multipartite graph, or None.

    The graph qualifies iff its complement is a disjoint union of cliques,
    i.e. the closed non-neighbourhoods partition the vertex set.
    """
    if g.n < 2:
        return None
    full = g.full_mask
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(full & ~g.nbr_masks[v], []).append(v)
    for key, verts in groups.items():
        if key != sum(1 << v for v in verts):
            return None
    return sorted(groups.values(), key=lambda p: (-len(p), p[0]))


@dataclass(frozen=True)
class GraphClass:
    tags: tuple[str, ...]
    most_specific: str
    max_block_excess: int
    parts: tuple[int, ...] | None = None

    def has(self, tag: str) -> bool:
        return tag in self.tags

    @property
    def is_cactus(self) -> bool:
        return self.max_block_excess <= 1

    @property
    def is_almost_tree2(self) -> bool:
        return self.max_block_excess <= 2

    def to_json(self) -> dict:
        return {
            "tags": list(self.tags),
            "most_specific": self.most_specific,
            "max_block_excess": self.max_block_excess,
            "parts": None if self.parts is None else list(self.parts),
        }


_PRIORITY = ("Complete", "Tree", "Cycle", "CompleteBipartite", "CompleteMultipartite", "Cactus", "AlmostTree(2)")


def classify(g: Graph) -> GraphClass:
    excess = max((block_excess(g, b) for b in biconnected_components(g)), default=0)
    tags = []
    if excess == 0:
        tags.append("Tree")
    if excess <= 1:
        tags.append("Cactus")
    for k in range(max(excess, 1), max(excess, 2) + 1):
        tags.append(f"AlmostTree({k})")
    if g.n >= 3 and g.m == g.n and all(bin(m).count("1") == 2 for m in g.nbr_masks):
        tags.append("Cycle")
    parts = multipartite_parts(g)
    sizes = None
    if parts is not None:
        sizes = tuple(len(p) for p in parts)
        if max(sizes) == 1:
            tags.append("Complete")
        if len(sizes) == 2:
            tags.append("CompleteBipartite({},{})".format(*sorted(sizes)))
        tags.append("CompleteMultipartite({})".format(",".join(map(str, sizes))))
    most = "Other"
    for name in _PRIORITY:
        hit = next((t for t in tags if t == name or t.startswith(name + "(")), None)
        if hit is not None:
            most = hit
            break
    if most == "Other":
        tags.append("Other")
    return GraphClass(tuple(tags), most, excess, sizes)


# ---------------------------------------------------------------------------
# Text format


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v [w]``; ``#`` lines are comments."""
    header = None
    rows: list[tuple[int, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise Malformed(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2 or nums[0] < 1 or nums[1] < 0:
                raise Malformed("header must be 'n m' with n >= 1, m >= 0", lineno)
            header = (nums[0], nums[1], lineno)
            continue
        if len(nums) not in (2, 3):
            raise Malformed("edge line must be 'u v' or 'u v w'", lineno)
        u, v = nums[0], nums[1]
        w = nums[2] if len(nums) == 3 else 1
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise Malformed(f"vertex out of range 0..{header[0] - 1}", lineno)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", lineno)
        rows.append((min(u, v), max(u, v), w, lineno))
    if header is None:
        raise Malformed("empty graph document")
    n, m, hline = header
    if len(rows) != m:
        raise Malformed(f"header announces {m} edges, found {len(rows)}", hline)
    seen: dict[tuple[int, int], int] = {}
    for u, v, _, lineno in rows:
        if (u, v) in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) repeats line {seen[(u, v)]}", lineno)
        seen[(u, v)] = lineno
    rows.sort()
    try:
        return Graph(n, tuple((u, v) for u, v, _, _ in rows), tuple(w for _, _, w, _ in rows))
    except Disconnected:
        raise Disconnected("graph is not connected", hline) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    weighted = any(w != 1 for w in g.weights)
    for (u, v), w in zip(g.edges, g.weights):
        lines.append(f"{u} {v} {w}" if weighted else f"{u} {v}")
    return "\n".join(lines) + "\n"
