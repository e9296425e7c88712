"""Constructive bounds: binary-representation colorings, explicit cliques, per-class bounds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import Coloring
from .errors import PartTooSmall, SizeMismatch, WrongClass
from .graph import Cut, Graph, classify, multipartite_parts
from .skeleton import SkeletonGraph


@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def row_values(self) -> tuple[int, ...]:
        """Each row read as a big-endian binary number."""
        return tuple(int("".join(map(str, r)) or "0", 2) for r in self.rows)


def _bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> (width - 1 - j)) & 1 for j in range(width))


def brm(k: int) -> BinaryMatrix:
    """Row ``i`` (1-based) is the binary expansion of ``i``.

    Width is ``ceil(log2(k+1))`` so that row ``k`` stays non-zero when ``k``
    is a power of two.
    """
    if k < 1:
        raise ValueError("k must be positive")
    width = k.bit_length()
    return BinaryMatrix(tuple(_bits(i, width) for i in range(1, k + 1)))


def brm_star(k: int) -> BinaryMatrix:
    """Row ``i`` is the binary expansion of ``i-1`` followed by an odd-parity bit."""
    if k < 1:
        raise ValueError("k must be positive")
    width = (k - 1).bit_length()  # ceil(log2 k)
    rows = []
    for i in range(1, k + 1):
        b = _bits(i - 1, width)
        rows.append(b + ((1 - sum(b) % 2),))
    return BinaryMatrix(tuple(rows))


def _linear_coloring(g: Graph, row_values: tuple[int, ...], width: int) -> Coloring:
    # color(S) = v(S) * M over GF(2) is linear in the vertex indicator of S,
    # so colors over all cuts follow by doubling over vertices 1..n-1
    vertex_color = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        vertex_color[u] ^= row_values[e]
        vertex_color[v] ^= row_values[e]
    colors = np.zeros(1, dtype=np.int64)
    for v in range(1, g.n):
        colors = np.concatenate([colors, colors ^ vertex_color[v]])
    return Coloring(tuple(int(c) for c in colors), width)


def _check_sizes(g: Graph, s: SkeletonGraph) -> None:
    if s.n != g.n:
        raise SizeMismatch(f"skeleton is over {s.n} vertices, graph has {g.n}")


def brm_coloring(g: Graph, s: SkeletonGraph) -> Coloring:
    """Proper coloring of a cactus skeleton with ``2**ceil(log2(|E|+1))`` colors at most."""
    _check_sizes(g, s)
    if not classify(g).is_cactus:
        raise WrongClass("BRM coloring needs a cactus")
    if g.m == 0:
        return Coloring((0,) * s.size, 0)
    mat = brm(g.m)  # rows 1..|E| of BRM(|E|+1), width ceil(log2(|E|+1))
    return _linear_coloring(g, mat.row_values, mat.m)


def brm_star_coloring(g: Graph, s: SkeletonGraph) -> Coloring:
    """Proper coloring of an almost-tree(2) skeleton with ``2**(ceil(log2|E|)+1)`` colors at most."""
    _check_sizes(g, s)
    if not classify(g).is_almost_tree2:
        raise WrongClass("BRM* coloring needs an almost tree (2)")
    if g.m == 0:
        return Coloring((0,) * s.size, 0)
    mat = brm_star(g.m)
    return _linear_coloring(g, mat.row_values, mat.m)


# ---------------------------------------------------------------------------
# Cliques


@dataclass(frozen=True)
class CliqueFamily:
    cuts: tuple[Cut, ...]
    tag: str

    @property
    def indices(self) -> list[int]:
        return [c.index for c in self.cuts]

    def to_json(self) -> dict:
        return {"construction": self.tag, "size": len(self.cuts), "cuts": [c.vertices() for c in self.cuts]}


def cycle_order(g: Graph) -> list[int]:
    """Vertices of a cycle graph walked from 0 towards its smaller neighbour."""
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = min(v for v, _ in g.incidence[cur] if v != prev)
        if nxt == 0:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def hamming_ball_clique(g: Graph) -> CliqueFamily:
    """The nested cuts {v1}, {v1,v2}, ..., {v1..vn} of a cycle: a clique of size n."""
    if not classify(g).has("Cycle"):
        raise WrongClass("Hamming-ball clique needs a cycle graph")
    order = cycle_order(g)
    cuts, members = [], []
    for v in order:
        members.append(v)
        cuts.append(Cut.of(g.n, members))
    return CliqueFamily(tuple(cuts), "hamming-ball")


def symmetric_cut_clique(g: Graph) -> CliqueFamily:
    """Symmetric cuts over the two largest parts of a complete multipartite graph.

    With parts ordered by (size desc, smallest vertex asc) and ``t`` the size
    of the second one, every index set ``S`` of ``{1..t-1}`` yields the cut
    ``{V1[i], V2[i] : i in S}``; index 0 is always left out, which keeps one
    representative of each ``S`` / complement pair. That gives ``2**(t-1)``
    pairwise adjacent cuts.
    """
    parts = multipartite_parts(g)
    if parts is None or len(parts) < 2:
        raise WrongClass("symmetric cuts need a complete multipartite graph")
    if min(len(p) for p in parts) < 2:
        raise PartTooSmall("every part needs at least two vertices")
    v1, v2 = parts[0], parts[1]
    t = len(v2)
    cuts = []
    for s in range(1 << (t - 1)):
        idx = [i + 1 for i in range(t - 1) if (s >> i) & 1]
        cuts.append(Cut.of(g.n, [v1[i] for i in idx] + [v2[i] for i in idx]))
    return CliqueFamily(tuple(cuts), "symmetric")


# ---------------------------------------------------------------------------
# Table of bounds


@dataclass(frozen=True)
class Bound:
    value: int
    source: str


@dataclass(frozen=True)
class BoundsRow:
    """Diameter and clique-number brackets, each end tagged with the result it comes from."""

    cls: str
    diameter_lower: Bound
    diameter_upper: Bound
    clique_lower: Bound
    clique_upper: Bound

    def diameter_ok(self, d: int) -> bool:
        return self.diameter_lower.value <= d <= self.diameter_upper.value

    def to_json(self) -> dict:
        out = {"class": self.cls}
        for name in ("diameter_lower", "diameter_upper", "clique_lower", "clique_upper"):
            b = getattr(self, name)
            out[name] = {"value": b.value, "source": b.source}
        return out


_GENERIC = {"distinct-cuts", "connected-diameter", "skeleton-edge", "vertex-count"}


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length()


def bounds_for(g: Graph) -> BoundsRow:
    """Tightest bounds from every class the graph belongs to.

    Each candidate carries the name of the result it comes from; the
    reported pair is the max of the lowers and the min of the uppers.
    """
    n, m = g.n, g.m
    gc = classify(g)
    size = 1 << (n - 1)
    d_lo = [Bound(1 if n >= 2 else 0, "distinct-cuts")]
    d_hi = [Bound(n - 1, "connected-diameter")]
    w_lo = [Bound(min(2, size), "skeleton-edge")]
    w_hi = [Bound(size, "vertex-count")]

    if gc.has("Complete") and n >= 2:
        d_hi.append(Bound(1, "complete-graph"))
        w_lo.append(Bound(size, "complete-graph"))
    if gc.has("Tree") and n >= 2:
        d_lo.append(Bound(n - 1, "tree-hypercube"))
        w_hi.append(Bound(2, "tree-hypercube"))
    if gc.has("Cycle"):
        d_lo.append(Bound(n // 2, "cycle-diameter"))
        d_hi.append(Bound(n // 2, "cycle-diameter"))
        w_lo.append(Bound(n, "hamming-ball"))
    if gc.parts is not None and len(gc.parts) >= 2:
        sizes = gc.parts
        if min(sizes) >= 2:
            d_lo.append(Bound(2, "multipartite-diameter"))
            d_hi.append(Bound(2, "multipartite-diameter"))
        if len(sizes) == 2:
            w_lo.append(Bound(1 << (min(sizes) - 1), "bipartite-symmetric-cuts"))
        else:
            w_lo.append(Bound(1 << (sizes[1] - 1), "multipartite-symmetric-cuts"))
    if gc.is_cactus and m >= 1:
        d_lo.append(Bound(n // 2, "cactus-diameter"))
        w_hi.append(Bound(1 << _ceil_log2(m + 1), "brm-coloring"))
    if gc.is_almost_tree2 and m >= 1:
        d_lo.append(Bound(n // 3, "almost-tree-diameter"))
        w_hi.append(Bound(1 << (_ceil_log2(m) + 1), "brm-star-coloring"))

    row = BoundsRow(
        gc.most_specific,
        max(d_lo, key=lambda b: (b.value, b.source not in _GENERIC)),
        min(d_hi, key=lambda b: (b.value, b.source in _GENERIC)),
        max(w_lo, key=lambda b: (b.value, b.source not in _GENERIC)),
        min(w_hi, key=lambda b: (b.value, b.source in _GENERIC)),
    )
    if row.diameter_lower.value > row.diameter_upper.value or row.clique_lower.value > row.clique_upper.value:
        raise AssertionError(f"inconsistent bounds {row}")
    return row
