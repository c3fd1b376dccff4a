"""Permutation groups on the vertex set, given by generators.

The group itself is never enumerated for orbit computation: orbits are the
connected components of the union of generator graphs, which is correct
because every element of a finite permutation group has an inverse that is
one of its own powers. Full enumeration exists only in group_order, for
diagnostics and the finite-group mean cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Hypergraph
from .errors import CapExceededError


@dataclass(frozen=True)
class Permutation:
    """A bijection on vertex ids in sparse form: unlisted ids are fixed."""

    mapping: tuple[tuple[str, str], ...]

    @staticmethod
    def build(mapping: dict[str, str]) -> "Permutation":
        moved = {k: v for k, v in mapping.items() if k != v}
        return Permutation(tuple(sorted(moved.items())))

    @staticmethod
    def identity() -> "Permutation":
        return Permutation(())

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def apply(self, v: str) -> str:
        return dict(self.mapping).get(v, v)

    def check_bijective_on(self, vertices: frozenset[str]) -> None:
        """Raise ValueError unless this is a total bijection on the vertex set."""
        moved = dict(self.mapping)
        keys = set(moved)
        values = set(moved.values())
        if not keys <= vertices:
            raise ValueError(f"permutation moves unknown vertices {sorted(keys - vertices)}")
        if not values <= vertices:
            raise ValueError(
                f"permutation maps onto unknown vertices {sorted(values - vertices)}"
            )
        if len(values) != len(moved):
            raise ValueError("permutation is not injective")
        # A sparse map is a bijection on V iff its moved keys and images coincide.
        if keys != values:
            raise ValueError("permutation is not surjective on the vertex set")

    def image_of_edge(self, edge: frozenset[str]) -> frozenset[str]:
        moved = dict(self.mapping)
        return frozenset(moved.get(v, v) for v in edge)


class _UnionFind:
    def __init__(self, items: Iterable[str]):
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # Deterministic representative: smaller id wins.
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def orbits(generators: Iterable[Permutation], vertices: frozenset[str]) -> tuple[frozenset[str], ...]:
    """Orbit partition of the generated group, by undirected closure.

    Returned orbits are sorted by their minimal vertex id.
    """
    gens = list(generators)
    for g in gens:
        g.check_bijective_on(vertices)
    uf = _UnionFind(vertices)
    for g in gens:
        for v, w in g.mapping:
            uf.union(v, w)
    classes: dict[str, set[str]] = {}
    for v in vertices:
        classes.setdefault(uf.find(v), set()).add(v)
    return tuple(
        frozenset(classes[root]) for root in sorted(classes)
    )


@dataclass(frozen=True)
class GroupAction:
    """Generators plus the derived orbit partition on a fixed vertex set."""

    vertices: frozenset[str]
    generators: tuple[Permutation, ...]
    orbit_partition: tuple[frozenset[str], ...]

    @staticmethod
    def build(vertices: Iterable[str], generators: Iterable[Permutation]) -> "GroupAction":
        vertex_set = frozenset(vertices)
        gens = tuple(generators)
        return GroupAction(vertex_set, gens, orbits(gens, vertex_set))

    @staticmethod
    def trivial(vertices: Iterable[str]) -> "GroupAction":
        return GroupAction.build(vertices, ())

    def orbit_of(self, v: str) -> frozenset[str]:
        for orbit in self.orbit_partition:
            if v in orbit:
                return orbit
        raise KeyError(v)

    def orbit_map(self) -> dict[str, frozenset[str]]:
        return {v: orbit for orbit in self.orbit_partition for v in orbit}

    def orbit_label(self, orbit: frozenset[str]) -> str:
        """Stable orbit identifier: the minimal vertex id in the orbit."""
        return min(orbit)


def is_automorphism(hypergraph: Hypergraph, g: Permutation) -> bool:
    """True iff g maps every edge to an edge, bijectively on the edge set."""
    g.check_bijective_on(hypergraph.vertices)
    images = set()
    for e in hypergraph.edges:
        img = g.image_of_edge(e)
        if img not in hypergraph.edges:
            return False
        images.add(img)
    # g is injective on vertices, hence on edges; surjectivity on the finite
    # edge set then follows from the image count.
    return len(images) == len(hypergraph.edges)


def check_action(hypergraph: Hypergraph, action: GroupAction) -> bool:
    return all(is_automorphism(hypergraph, g) for g in action.generators)


def preserves_parts(g: Permutation, part_blocks: Iterable[frozenset[str]]) -> bool:
    """True iff g maps each part into itself."""
    moved = dict(g.mapping)
    for block in part_blocks:
        for v in block:
            if moved.get(v, v) not in block:
                return False
    return True


def action_preserves_parts(action: GroupAction, profile) -> bool:
    blocks = [block for _, block in profile.parts]
    return all(preserves_parts(g, blocks) for g in action.generators)


def group_order(generators: Iterable[Permutation], vertices: frozenset[str], cap: int = 10**6) -> int:
    """Order of the generated permutation group, by breadth-first closure."""
    gens = [g for g in generators]
    for g in gens:
        g.check_bijective_on(vertices)
    gen_maps = [{v: dict(g.mapping).get(v, v) for v in vertices} for g in gens]
    ident = {v: v for v in vertices}
    seen = {tuple(sorted(ident.items()))}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for elem in frontier:
            for gm in gen_maps:
                composed = {v: gm[elem[v]] for v in vertices}
                key = tuple(sorted(composed.items()))
                if key not in seen:
                    seen.add(key)
                    if len(seen) > cap:
                        raise CapExceededError(f"group order exceeds cap {cap}")
                    new_frontier.append(composed)
        frontier = new_frontier
    return len(seen)


def enumerate_group(
    generators: Iterable[Permutation], vertices: frozenset[str], cap: int = 10**6
) -> list[dict[str, str]]:
    """All elements of the generated group as total maps (diagnostic use)."""
    gens = [g for g in generators]
    for g in gens:
        g.check_bijective_on(vertices)
    gen_maps = [{v: dict(g.mapping).get(v, v) for v in vertices} for g in gens]
    ident = {v: v for v in vertices}
    elements = {tuple(sorted(ident.items())): ident}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for elem in frontier:
            for gm in gen_maps:
                composed = {v: gm[elem[v]] for v in vertices}
                key = tuple(sorted(composed.items()))
                if key not in elements:
                    if len(elements) >= cap:
                        raise CapExceededError(f"group order exceeds cap {cap}")
                    elements[key] = composed
                    new_frontier.append(composed)
        frontier = new_frontier
    return [elements[k] for k in sorted(elements)]
