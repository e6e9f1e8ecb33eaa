"""Finite simplicial complexes on integer-labelled vertex sets, stored by facets.

A complex is represented by its maximal faces; a set is a face exactly when it
is contained in some facet.  Vertices are 1-based integer labels and every
declared vertex must occur in at least one facet.  All values are immutable
after construction, so they are safe to share between computations.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Simplex = tuple  # ascending tuple of vertex labels


class ParseError(ValueError):
    """Raised for malformed facet-list documents."""


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of labels into an ascending tuple.

    Rejects empty input, repeated labels and labels below 1.
    """
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    if vs[0] < 1:
        raise ValueError(f"vertex labels must be positive, got {vs[0]}")
    if len(set(vs)) != len(vs):
        raise ValueError(f"repeated vertex in simplex {vs}")
    return vs


class SimplicialComplex:
    """A finite simplicial complex given by its facets.

    ``vertices`` is the declared vertex set (usually ``1..m``; full
    subcomplexes keep their original labels instead of being renumbered).
    """

    def __init__(self, vertices: Iterable[int], facets: Iterable[Iterable[int]]):
        vs = tuple(sorted({int(v) for v in vertices}))
        if not vs:
            raise ValueError("vertex set must be non-empty")
        if vs[0] < 1:
            raise ValueError("vertex labels must be positive")
        cleaned = {as_simplex(f) for f in facets}
        declared = set(vs)
        for f in cleaned:
            extra = set(f) - declared
            if extra:
                raise ValueError(f"facet {f} uses undeclared vertex {min(extra)}")
        maximal = frozenset(
            f for f in cleaned if not any(f != g and set(f) <= set(g) for g in cleaned)
        )
        covered = set(itertools.chain.from_iterable(maximal))
        missing = declared - covered
        if missing:
            raise ValueError(
                f"vertex {min(missing)} appears in no facet; every declared vertex must be used"
            )
        self.vertices: tuple[int, ...] = vs
        self.facets: frozenset[Simplex] = maximal

    # -- basic queries ---------------------------------------------------

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _faces_by_card(self) -> dict[int, frozenset[Simplex]]:
        by_card: dict[int, set[Simplex]] = {}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                by_card.setdefault(k, set()).update(itertools.combinations(f, k))
        return {k: frozenset(v) for k, v in by_card.items()}

    def faces(self, d: int) -> list[Simplex]:
        """All faces of dimension ``d``, in lexicographic order."""
        return sorted(self._faces_by_card.get(d + 1, ()))

    def all_faces(self) -> Iterator[Simplex]:
        for k in sorted(self._faces_by_card):
            yield from sorted(self._faces_by_card[k])

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(d)) for d in range(self.dim + 1))

    def is_face(self, s: Iterable[int]) -> bool:
        t = as_simplex(s)
        if not set(t) <= set(self.vertices):
            raise ValueError(f"simplex {t} uses a vertex outside the complex")
        return t in self._faces_by_card.get(len(t), ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __repr__(self) -> str:
        return (
            f"<SimplicialComplex |V|={len(self.vertices)} "
            f"facets={len(self.facets)} dim={self.dim}>"
        )


def full_subcomplex(K: SimplicialComplex, I: Iterable[int]) -> SimplicialComplex:
    """The faces of ``K`` contained in ``I``, with labels retained."""
    sub = tuple(sorted({int(v) for v in I}))
    if not sub:
        raise ValueError("full subcomplex over an empty vertex set")
    if not set(sub) <= set(K.vertices):
        raise ValueError("subset contains vertices outside the complex")
    inside = set(sub)
    restricted = {tuple(v for v in f if v in inside) for f in K.facets}
    restricted.discard(())
    return SimplicialComplex(sub, restricted)


def skeleton(K: SimplicialComplex, n: int) -> SimplicialComplex:
    """All faces of ``K`` of dimension at most ``n``."""
    if n < 0:
        raise ValueError("skeleton dimension must be non-negative")
    facets = []
    for f in K.facets:
        if len(f) <= n + 1:
            facets.append(f)
        else:
            facets.extend(itertools.combinations(f, n + 1))
    return SimplicialComplex(K.vertices, facets)


def minimal_non_faces(K: SimplicialComplex) -> list[Simplex]:
    """All minimal non-faces of ``K``, sorted by cardinality then lexicographically.

    A subset is a minimal non-face when it is not a face but every proper
    subset is one; equivalently its full subcomplex is the boundary of a
    simplex.  Candidates are grown from existing faces, so the search never
    ranges over all vertex subsets.
    """
    out: list[Simplex] = []
    vs = K.vertices
    # Size 2: pairs of vertices that do not span an edge.
    edges = K._faces_by_card.get(2, frozenset())
    for pair in itertools.combinations(vs, 2):
        if pair not in edges:
            out.append(pair)
    max_card = max(len(f) for f in K.facets) + 1
    for card in range(3, max_card + 1):
        base = K._faces_by_card.get(card - 1, frozenset())
        present = K._faces_by_card.get(card, frozenset())
        candidates = set()
        for face in base:
            inside = set(face)
            for v in vs:
                if v not in inside:
                    candidates.add(tuple(sorted(face + (v,))))
        for cand in sorted(candidates):
            if cand in present:
                continue
            if all(sub in base for sub in itertools.combinations(cand, card - 1)):
                out.append(cand)
    out.sort(key=lambda s: (len(s), s))
    return out


def closure_bar(K: SimplicialComplex) -> SimplicialComplex:
    """``K`` with all of its minimal non-faces adjoined as faces.

    Only the minimal non-faces of the input are added; the result may have
    new minimal non-faces of its own.
    """
    return SimplicialComplex(K.vertices, list(K.facets) + minimal_non_faces(K))


# -- generators ----------------------------------------------------------


def gen_simplex_skeleton(m: int, k: int) -> SimplicialComplex:
    """The ``k``-skeleton of the boundary of the simplex on ``1..m``."""
    if m < 2:
        raise ValueError("need at least two vertices")
    if not 0 <= k <= m - 2:
        raise ValueError(f"skeleton dimension must lie in 0..{m - 2}")
    return SimplicialComplex(
        range(1, m + 1), itertools.combinations(range(1, m + 1), k + 1)
    )


def gen_cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the (n+2)-dimensional cross-polytope on ``1..2n+4``.

    Facets are the sets {2 - a1, 4 - a2, ..., 2n+4 - a(n+2)} over all 0/1
    choices of the ai; equivalently, a subset is a face exactly when it
    contains no antipodal pair {2i-1, 2i}.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    m = 2 * n + 4
    facets = []
    for alpha in itertools.product((0, 1), repeat=n + 2):
        facets.append(tuple(sorted(2 * (i + 1) - a for i, a in enumerate(alpha))))
    return SimplicialComplex(range(1, m + 1), facets)


def cross_polytope_facet(alpha: Sequence[int]) -> Simplex:
    """The facet of the cross-polytope boundary selected by a 0/1 vector."""
    if any(a not in (0, 1) for a in alpha):
        raise ValueError("selector entries must be 0 or 1")
    return tuple(sorted(2 * (i + 1) - a for i, a in enumerate(alpha)))


_RP2_TRIANGLES = (
    (1, 2, 3),
    (1, 2, 5),
    (1, 3, 6),
    (1, 4, 5),
    (1, 4, 6),
    (2, 3, 4),
    (2, 4, 6),
    (2, 5, 6),
    (3, 4, 5),
    (3, 5, 6),
)

# The ten triples used as fillings of the 1-skeleton; disjoint from the
# triangle list above.
RP2_FILLING_TRIPLES = (
    (1, 2, 4),
    (1, 2, 6),
    (1, 3, 4),
    (1, 3, 5),
    (1, 5, 6),
    (2, 3, 5),
    (2, 3, 6),
    (2, 4, 5),
    (3, 4, 6),
    (4, 5, 6),
)


def gen_rp2_six() -> SimplicialComplex:
    """The six-vertex triangulation of the real projective plane.

    The triangle list is validated on every call: the 1-skeleton must be the
    complete graph on six vertices, the ten reserved filling triples must all
    be non-faces, and the reduced homology must be a single Z/2 in dimension
    one.
    """
    K = SimplicialComplex(range(1, 7), _RP2_TRIANGLES)
    if len(K.faces(1)) != 15:
        raise AssertionError("projective plane triangulation lost an edge")
    two_faces = set(K.faces(2))
    if two_faces & set(RP2_FILLING_TRIPLES):
        raise AssertionError("filling triple collides with a triangle")
    from .chains import reduced_homology

    profile = reduced_homology(K)
    ok = (
        profile.total_betti == 0
        and profile.torsion(1) == (2,)
        and all(profile.torsion(d) == () for d in (0, 2))
    )
    if not ok:
        raise AssertionError("triangle list does not have projective-plane homology")
    return K


# -- facet-list text format ----------------------------------------------


def parse_complex(text: str) -> SimplicialComplex:
    """Parse a facet-list document.

    Format: an optional first line ``m=<int>`` declaring the vertex count,
    then one facet per line as space-separated labels.  ``#`` starts a
    comment and blank lines are ignored.
    """
    declared_m: int | None = None
    facets: list[tuple[int, ...]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("m=") and not seen_content:
            seen_content = True
            body = line[2:].strip()
            try:
                declared_m = int(body)
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {body!r}") from None
            if declared_m < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            continue
        seen_content = True
        labels = []
        for tok in line.split():
            try:
                labels.append(int(tok))
            except ValueError:
                raise ParseError(f"line {lineno}: {tok!r} is not an integer label") from None
        if any(v <= 0 for v in labels):
            raise ParseError(f"line {lineno}: vertex labels must be positive")
        if len(set(labels)) != len(labels):
            raise ParseError(f"line {lineno}: repeated vertex within a facet")
        facets.append(tuple(sorted(labels)))
    if not facets:
        raise ParseError("document declares no facets")
    m = declared_m if declared_m is not None else max(max(f) for f in facets)
    try:
        return SimplicialComplex(range(1, m + 1), facets)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_complex(K: SimplicialComplex) -> str:
    """Canonical facet-list form: header, then facets in lexicographic order."""
    m = len(K.vertices)
    if K.vertices != tuple(range(1, m + 1)):
        raise ValueError("only complexes on a contiguous vertex set 1..m serialize")
    lines = [f"m={m}"]
    lines.extend(" ".join(str(v) for v in f) for f in sorted(K.facets))
    return "\n".join(lines) + "\n"
