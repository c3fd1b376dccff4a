"""Exact integer cover solvers.

min_cover is a deterministic branch-and-bound: branch on the vertices of
the first uncovered edge in canonical order, prune by the incumbent and by
a greedy disjoint-edge-packing lower bound. min_invariant_cover reduces to
minimum-weight set cover on the orbit quotient (every invariant vertex set
is a union of orbits) and solves it the same way. The brute-force variants
are independent oracles used by the test suite.

Superset edges are dropped inside the solvers only: a cover of the minimal
edges covers all edges. Rank and part degrees are always computed on the
unreduced instance elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Hypergraph, edge_sort_key
from .errors import CapExceededError, InvalidActionError, UncoverableError
from .groups import GroupAction, check_action

ORACLE_VERTEX_CAP = 20
ORACLE_ORBIT_CAP = 20


@dataclass(frozen=True)
class CoverResult:
    size: int
    witness: frozenset[str]
    optimal: bool = True


@dataclass(frozen=True)
class InvariantCoverResult:
    size: int
    witness: frozenset[str]
    chosen_orbits: frozenset[str]  # orbit labels: minimal vertex id per orbit


def is_cover(hypergraph: Hypergraph, candidate: frozenset[str] | set[str]) -> bool:
    """True iff the candidate set meets every edge; false on an empty edge."""
    cand = frozenset(candidate)
    unknown = cand - hypergraph.vertices
    if unknown:
        raise ValueError(f"candidate contains unknown vertices {sorted(unknown)}")
    return all(e & cand for e in hypergraph.edges)


def minimal_edges(hypergraph: Hypergraph) -> list[frozenset[str]]:
    """Edges that contain no other edge, in canonical order."""
    edges = hypergraph.sorted_edges()
    keep = []
    for e in edges:
        if not any(f < e for f in edges):
            keep.append(e)
    return keep


def _packing_lower_bound(uncovered: list[frozenset[str]]) -> int:
    used: set[str] = set()
    count = 0
    for e in uncovered:
        if not (e & used):
            count += 1
            used |= e
    return count


def min_cover(hypergraph: Hypergraph) -> CoverResult:
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    edges = minimal_edges(hypergraph)
    if not edges:
        return CoverResult(0, frozenset())

    best_size = len(hypergraph.vertices) + 1
    best_witness: frozenset[str] | None = None

    def search(chosen: set[str], uncovered: list[frozenset[str]]) -> None:
        nonlocal best_size, best_witness
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_witness = frozenset(chosen)
            return
        if len(chosen) + _packing_lower_bound(uncovered) >= best_size:
            return
        target = uncovered[0]
        for v in sorted(target):
            chosen.add(v)
            rest = [e for e in uncovered if v not in e]
            search(chosen, rest)
            chosen.remove(v)

    search(set(), edges)
    assert best_witness is not None
    return CoverResult(best_size, best_witness)


def _orbit_quotient(
    hypergraph: Hypergraph, action: GroupAction
) -> tuple[list[frozenset[str]], list[frozenset[str]]]:
    """(canonical minimal edges, canonical orbits) for the set-cover reduction."""
    edges = minimal_edges(hypergraph)
    orbits = sorted(action.orbit_partition, key=min)
    return edges, orbits


def min_invariant_cover(hypergraph: Hypergraph, action: GroupAction) -> InvariantCoverResult:
    if not check_action(hypergraph, action):
        raise InvalidActionError("a generator is not an automorphism of the hypergraph")
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    edges, orbits = _orbit_quotient(hypergraph, action)
    if not edges:
        return InvariantCoverResult(0, frozenset(), frozenset())

    covering: list[list[int]] = [
        [i for i, orbit in enumerate(orbits) if orbit & e] for e in edges
    ]
    weights = [len(orbit) for orbit in orbits]
    best_weight = sum(weights) + 1
    best_chosen: tuple[int, ...] | None = None

    def lower_bound(uncovered: list[int]) -> int:
        used: set[int] = set()
        bound = 0
        for ei in uncovered:
            cands = covering[ei]
            if not any(c in used for c in cands):
                bound += min(weights[c] for c in cands)
                used.update(cands)
        return bound

    def search(chosen: list[int], weight: int, uncovered: list[int]) -> None:
        nonlocal best_weight, best_chosen
        if not uncovered:
            if weight < best_weight:
                best_weight = weight
                best_chosen = tuple(chosen)
            return
        if weight + lower_bound(uncovered) >= best_weight:
            return
        target = uncovered[0]
        for oi in covering[target]:
            chosen.append(oi)
            rest = [ei for ei in uncovered if oi not in covering[ei]]
            search(chosen, weight + weights[oi], rest)
            chosen.pop()

    search([], 0, list(range(len(edges))))
    assert best_chosen is not None
    chosen_orbits = [orbits[i] for i in sorted(set(best_chosen))]
    witness = frozenset().union(*chosen_orbits) if chosen_orbits else frozenset()
    return InvariantCoverResult(
        size=best_weight,
        witness=witness,
        chosen_orbits=frozenset(min(o) for o in chosen_orbits),
    )


def brute_force_min_cover(hypergraph: Hypergraph, cap: int = ORACLE_VERTEX_CAP) -> CoverResult:
    """Exact oracle: enumerate vertex subsets in increasing size."""
    if len(hypergraph.vertices) > cap:
        raise CapExceededError(
            f"{len(hypergraph.vertices)} vertices exceeds oracle cap {cap}"
        )
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    vertices = hypergraph.sorted_vertices()
    edges = hypergraph.sorted_edges()
    for size in range(len(vertices) + 1):
        for combo in combinations(vertices, size):
            cand = frozenset(combo)
            if all(e & cand for e in edges):
                return CoverResult(size, cand)
    raise AssertionError("unreachable: the full vertex set covers any coverable hypergraph")


def brute_force_min_invariant_cover(
    hypergraph: Hypergraph, action: GroupAction, cap: int = ORACLE_ORBIT_CAP
) -> InvariantCoverResult:
    """Exact oracle: enumerate orbit subsets by increasing total weight."""
    if not check_action(hypergraph, action):
        raise InvalidActionError("a generator is not an automorphism of the hypergraph")
    if len(action.orbit_partition) > cap:
        raise CapExceededError(
            f"{len(action.orbit_partition)} orbits exceeds oracle cap {cap}"
        )
    if hypergraph.uncoverable:
        raise UncoverableError("hypergraph contains an empty edge")
    edges = hypergraph.sorted_edges()
    orbits = sorted(action.orbit_partition, key=min)
    if not edges:
        return InvariantCoverResult(0, frozenset(), frozenset())
    indexed = list(range(len(orbits)))
    subsets = []
    for size in range(len(orbits) + 1):
        for combo in combinations(indexed, size):
            subsets.append((sum(len(orbits[i]) for i in combo), combo))
    subsets.sort(key=lambda pair: (pair[0], pair[1]))
    for weight, combo in subsets:
        union = frozenset().union(*(orbits[i] for i in combo)) if combo else frozenset()
        if all(e & union for e in edges):
            return InvariantCoverResult(
                size=weight,
                witness=union,
                chosen_orbits=frozenset(min(orbits[i]) for i in combo),
            )
    raise AssertionError("unreachable: all orbits together cover any coverable hypergraph")
