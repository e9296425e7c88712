"""Verdict report: class, bounds, exact metrics and a pass/fail line per checked result."""

from __future__ import annotations

import json

import numpy as np

from ..analysis import DEFAULT_BUDGET, metrics, verify_clique, verify_coloring
from ..constructions import (
    bounds_for,
    brm_coloring,
    brm_star_coloring,
    hamming_ball_clique,
    symmetric_cut_clique,
)
from ..graph import Cut, Graph, classify, cut_matrix
from ..skeleton import DEFAULT_CAP, DEFAULT_VERIFY_CAP, build_skeleton, certify_adjacent, witness_nonadjacent

SCHEMA = 1


def _at_least(found: int, exact: bool, target: int) -> bool | None:
    """Does omega >= target hold, given a clique search result?"""
    if found >= target:
        return True
    return False if exact else None


def _at_most(found: int, exact: bool, target: int) -> bool | None:
    if found > target:
        return False
    return True if exact else None


def report(
    g: Graph,
    cap: int = DEFAULT_CAP,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    exact: bool = True,
) -> dict:
    gc = classify(g)
    bounds = bounds_for(g)
    doc: dict = {
        "schema": SCHEMA,
        "graph": {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]},
        "classification": gc.to_json(),
        "bounds": bounds.to_json(),
        "metrics": None,
        "constructions": {},
        "certificates": {},
        "verdicts": {},
    }
    if not exact:
        doc["passed"] = True
        return doc

    s = build_skeleton(g, cap, workers)
    met = metrics(s, budget)
    doc["metrics"] = met.to_json()
    v = doc["verdicts"]
    omega, sure = met.clique_number, met.clique_exact

    v["node_count"] = s.size == 1 << (g.n - 1)
    v["diameter_within_bounds"] = bounds.diameter_ok(met.diameter)
    v["clique_lower_bound"] = _at_least(omega, sure, bounds.clique_lower.value)
    v["clique_upper_bound"] = _at_most(omega, sure, bounds.clique_upper.value)

    cut_sizes = cut_matrix(g).sum(axis=1, dtype=np.int64)
    diff_sizes = cut_sizes[s.diff_array] if s.degree else np.zeros(0, dtype=np.int64)
    if gc.has("Tree"):
        v["tree_adjacent_iff_distance_1"] = bool(
            np.array_equal(np.sort(s.diff_array), np.flatnonzero(cut_sizes == 1))
        )
    if gc.is_cactus:
        v["cactus_adjacent_cutset_at_most_2"] = bool((diff_sizes <= 2).all())
    if gc.is_almost_tree2:
        v["almost_tree_adjacent_cutset_at_most_3"] = bool((diff_sizes <= 3).all())

    colorings = {}
    if gc.is_cactus:
        colorings["brm"] = (brm_coloring(g, s), color_limit(g.m, star=False))
    if gc.is_almost_tree2:
        colorings["brm-star"] = (brm_star_coloring(g, s), color_limit(g.m, star=True))
    for name, (col, limit) in colorings.items():
        ok, bad = verify_coloring(s, col)
        key = name.replace("-", "_")
        v[f"{key}_coloring_proper"] = ok
        v[f"{key}_colors_within_bound"] = col.distinct <= limit
        v[f"{key}_clique_at_most_colors"] = _at_most(omega, sure, col.distinct)
        doc["constructions"][f"{name}_coloring"] = {
            "width": col.width,
            "distinct_colors": col.distinct,
            "bound": limit,
            "first_violation": None if bad is None else list(bad),
        }

    families = []
    if gc.has("Cycle"):
        families.append(hamming_ball_clique(g))
    if gc.parts is not None and len(gc.parts) >= 2 and min(gc.parts) >= 2:
        families.append(symmetric_cut_clique(g))
    for fam in families:
        key = fam.tag.replace("-", "_")
        ok, bad = verify_clique(s, fam.indices)
        v[f"{key}_clique_valid"] = ok
        v[f"{key}_clique_within_omega"] = _at_least(omega, sure, len(fam.cuts))
        entry = fam.to_json()
        entry["first_non_edge"] = None if bad is None else list(bad)
        doc["constructions"][f"{fam.tag}_clique"] = entry

    if g.n <= DEFAULT_VERIFY_CAP and s.size > 1:
        zero = Cut(0, g.n)
        if s.degree:
            cert = certify_adjacent(g, zero, Cut.from_index(g.n, s.diffs[0]))
            v["adjacency_certificate_verified"] = cert.verified
            doc["certificates"]["adjacent"] = {"x": [], "y": Cut.from_index(g.n, s.diffs[0]).vertices(), **cert.to_json()}
        non = next((i for i in range(1, s.size) if i not in s.diff_set), None)
        if non is not None:
            wit = witness_nonadjacent(g, zero, Cut.from_index(g.n, non))
            v["non_adjacency_witness_midpoint"] = wit.midpoint_holds()
            doc["certificates"]["non_adjacent"] = {"x": [], "y": Cut.from_index(g.n, non).vertices(), **wit.to_json()}

    doc["passed"] = all(x is not False for x in v.values())
    return doc


def color_limit(m: int, star: bool) -> int:
    if m == 0:
        return 1
    if star:
        return 1 << ((m - 1).bit_length() + 1)
    return 1 << m.bit_length()


def report_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
