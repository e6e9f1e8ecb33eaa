"""Attachment forests and contraction orderings.

Given a minimal non-face M of a complex K, the vertices outside M hang off M
in a spanning forest of the 1-skeleton of K-bar (K with its minimal non-faces
adjoined).  Contracting that forest leaf by leaf produces an ordering of the
outside vertices, which later becomes the bracket structure of an iterated
Whitehead product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, as_simplex, closure_bar, minimal_non_faces


class DisconnectedClosure(Exception):
    """The 1-skeleton of K-bar is not connected, so no spanning forest reaches
    every vertex."""


@dataclass(frozen=True)
class AttachmentTree:
    root: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class AttachmentForest:
    trees: tuple[AttachmentTree, ...]


@dataclass(frozen=True)
class ContractionOrdering:
    non_face: tuple[int, ...]
    order: tuple[int, ...]

    def __iter__(self):
        return iter(self.order)


def _check_minimal_non_face(K: SimplicialComplex, M: Iterable[int]) -> tuple[int, ...]:
    t = as_simplex(M)
    if t not in minimal_non_faces(K):
        raise ValueError(f"{t} is not a minimal non-face of the complex")
    return t


def _bar_adjacency(K: SimplicialComplex) -> dict[int, set[int]]:
    bar = closure_bar(K)
    adj: dict[int, set[int]] = {v: set() for v in K.vertices}
    for a, b in bar.faces(1):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _bfs_levels(
    vertices: Sequence[int], adj: dict[int, set[int]], M: tuple[int, ...]
) -> tuple[dict[int, int], dict[int, int]]:
    """Breadth-first discovery from the whole set M at level 0.

    Returns (depth, parent) for every vertex outside M; the parent of a newly
    discovered vertex is its smallest-labelled neighbour in the previous
    level.  Raises DisconnectedClosure when some vertex is never reached.
    """
    depth = {v: 0 for v in M}
    parent: dict[int, int] = {}
    frontier = sorted(M)
    level = 0
    while frontier:
        level += 1
        discovered = []
        frontier_set = set(frontier)
        for w in sorted(set(vertices) - set(depth)):
            eligible = adj[w] & frontier_set
            if eligible:
                depth[w] = level
                parent[w] = min(eligible)
                discovered.append(w)
        frontier = discovered
    missing = set(vertices) - set(depth)
    if missing:
        raise DisconnectedClosure(
            f"vertex {min(missing)} is unreachable from {M} in the closure's 1-skeleton"
        )
    return depth, parent


def attachment_forest(K: SimplicialComplex, M: Iterable[int]) -> AttachmentForest:
    """The spanning forest hanging the vertices outside M onto M.

    Trees are grouped by the M-vertex their branches attach to and listed in
    ascending root order; roots with no branch are omitted.  Every edge is an
    edge of K-bar.
    """
    t = _check_minimal_non_face(K, M)
    adj = _bar_adjacency(K)
    depth, parent = _bfs_levels(K.vertices, adj, t)

    def root_of(v: int) -> int:
        while v not in t:
            v = parent[v]
        return v

    grouped: dict[int, list[tuple[int, int, int]]] = {}
    for child, par in parent.items():
        grouped.setdefault(root_of(child), []).append((depth[child], child, par))
    trees = []
    for root in sorted(grouped):
        edges = tuple(
            (min(par, child), max(par, child))
            for _, child, par in sorted(grouped[root])
        )
        trees.append(AttachmentTree(root=root, edges=edges))
    return AttachmentForest(trees=tuple(trees))


def contraction_ordering(K: SimplicialComplex, M: Iterable[int]) -> ContractionOrdering:
    """The canonical contraction ordering of the vertices outside M.

    Within each attachment tree the non-root vertices are listed by
    decreasing discovery depth (leaves first), ties broken by ascending
    label; the trees are then concatenated in ascending root order.
    """
    t = _check_minimal_non_face(K, M)
    adj = _bar_adjacency(K)
    depth, parent = _bfs_levels(K.vertices, adj, t)

    def root_of(v: int) -> int:
        while v not in t:
            v = parent[v]
        return v

    grouped: dict[int, list[int]] = {}
    for child in parent:
        grouped.setdefault(root_of(child), []).append(child)
    order: list[int] = []
    for root in sorted(grouped):
        order.extend(sorted(grouped[root], key=lambda v: (-depth[v], v)))
    return ContractionOrdering(non_face=t, order=tuple(order))


def validate_ordering(
    K: SimplicialComplex, M: Iterable[int], order: Sequence[int]
) -> bool:
    """Whether ``order`` is a valid contraction ordering of the complement of M.

    It must enumerate the vertices outside M exactly once, and each entry
    must be adjacent, in the 1-skeleton of K-bar, to M or to a later entry.
    """
    t = as_simplex(M)
    if isinstance(order, ContractionOrdering):
        order = order.order
    seq = [int(v) for v in order]
    outside = set(K.vertices) - set(t)
    if sorted(seq) != sorted(outside):
        return False
    adj = _bar_adjacency(K)
    allowed = set(t)
    for v in reversed(seq):
        if not (adj[v] & allowed):
            return False
        allowed.add(v)
    return True
