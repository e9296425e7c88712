"""Reference max-cut solver by exhaustive enumeration of canonical cuts."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import LimitExceeded
from ..graph import Cut, Graph

DEFAULT_MAXCUT_CAP = 24
_CHUNK = 1 << 18


@dataclass(frozen=True)
class MaxCutResult:
    cut: Cut
    weight: int

    def to_json(self) -> dict:
        return {"cut": self.cut.vertices(), "weight": self.weight}


def cut_weights(g: Graph, lo: int, hi: int) -> np.ndarray:
    """Weights of the canonical cuts with index in ``[lo, hi)``."""
    masks = np.arange(lo, hi, dtype=np.int64) << 1
    total = np.zeros(masks.size, dtype=np.int64)
    for (u, v), w in zip(g.edges, g.weights):
        total += w * (((masks >> u) ^ (masks >> v)) & 1)
    return total


def maxcut_bruteforce(g: Graph, cap: int = DEFAULT_MAXCUT_CAP) -> MaxCutResult:
    """Exact maximum; ties go to the smallest bitmask."""
    if g.n > cap:
        raise LimitExceeded(g.n, cap)
    size = 1 << (g.n - 1)
    best_idx, best_w = 0, None
    for lo in range(0, size, _CHUNK):
        w = cut_weights(g, lo, min(size, lo + _CHUNK))
        k = int(np.argmax(w))
        if best_w is None or w[k] > best_w:
            best_idx, best_w = lo + k, int(w[k])
    return MaxCutResult(Cut.from_index(g.n, best_idx), best_w)
