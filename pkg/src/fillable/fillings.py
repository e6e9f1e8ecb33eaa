"""Fillings: sets of minimal non-faces whose adjunction makes a complex contractible.

Contractibility of the union is certified, not assumed.  The certificate
hierarchy is: a greedy elementary-collapse sequence (replayable, strongest),
then vanishing reduced homology together with a bounded triviality check of
the edge-path group (labelled as evidence, not collapsibility), and finally
``failed``.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .chains import HomologyProfile, reduced_homology
from .complexes import (
    Simplex,
    SimplicialComplex,
    as_simplex,
    minimal_non_faces,
)

COLLAPSE_RESTARTS = 32
TIETZE_MOVE_BUDGET = 10_000


@dataclass(frozen=True)
class ContractibilityCertificate:
    """Outcome of a contractibility check.

    ``kind`` is one of ``collapse_sequence``, ``homology_evidence`` or
    ``failed``.  For a collapse sequence, replaying ``collapse_steps`` (each a
    free face paired with its unique coface) removes every face except one
    vertex.  Homology evidence means all reduced homology vanishes and the
    edge-path group trivializes under bounded simplification; that is weaker
    than collapsibility and is labelled accordingly.
    """

    kind: str
    collapse_steps: tuple[tuple[Simplex, Simplex], ...] = ()
    homology_report: Optional[HomologyProfile] = None

    def __bool__(self) -> bool:
        return self.kind != "failed"


@dataclass(frozen=True)
class Filling:
    """An ordered list of minimal non-faces certified to fill the complex."""

    non_faces: tuple[Simplex, ...]
    certificate: ContractibilityCertificate
    pure: bool


@dataclass(frozen=True)
class NotFilling:
    """Verdict value explaining why a candidate list is not a filling."""

    reason: str
    certificate: Optional[ContractibilityCertificate] = None

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Obstructed:
    """The complex has torsion, so no filling can exist."""

    torsion: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())


def union_with(K: SimplicialComplex, Ms: Iterable[Iterable[int]]) -> SimplicialComplex:
    """``K`` with the simplex on each listed minimal non-face adjoined."""
    mnf = set(minimal_non_faces(K))
    adjoined = []
    for M in Ms:
        t = as_simplex(M)
        if t not in mnf:
            raise ValueError(f"{t} is not a minimal non-face of the complex")
        adjoined.append(t)
    return SimplicialComplex(K.vertices, list(K.facets) + adjoined)


# -- collapsing -----------------------------------------------------------


def _free_pairs(faces: set[Simplex]) -> list[tuple[Simplex, Simplex]]:
    pairs = []
    for f in faces:
        fs = set(f)
        cofaces = [g for g in faces if len(g) > len(f) and fs < set(g)]
        if len(cofaces) == 1:
            pairs.append((f, cofaces[0]))
    pairs.sort()
    return pairs


def _try_collapse(
    all_faces: list[Simplex], rng: Optional[random.Random]
) -> Optional[tuple[tuple[Simplex, Simplex], ...]]:
    faces = set(all_faces)
    steps = []
    while True:
        pairs = _free_pairs(faces)
        if not pairs:
            break
        f, g = pairs[0] if rng is None else rng.choice(pairs)
        faces.discard(f)
        faces.discard(g)
        steps.append((f, g))
    if len(faces) == 1 and len(next(iter(faces))) == 1:
        return tuple(steps)
    return None


def _spanning_tree(vertices: Sequence[int], edges: set[Simplex]) -> set[Simplex]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    root = min(vertices)
    seen = {root}
    tree: set[Simplex] = set()
    frontier = [root]
    while frontier:
        nxt = []
        for v in sorted(frontier):
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    tree.add((min(v, w), max(v, w)))
                    nxt.append(w)
        frontier = nxt
    return tree


def _edge_path_group_trivial(L: SimplicialComplex, budget: int = TIETZE_MOVE_BUDGET) -> bool:
    """Bounded triviality check of the edge-path group presentation.

    Generators are the edges outside a spanning tree; each triangle gives a
    relator.  Simplification only applies sound moves (free and cyclic
    reduction, eliminating generators from length-1 and length-2 relators),
    so a ``True`` answer is trustworthy while ``False`` may just mean the
    budget was too small.
    """
    edges = set(L.faces(1))
    if not edges and len(L.vertices) == 1:
        return True
    tree = _spanning_tree(L.vertices, edges)
    if len(tree) < len(L.vertices) - 1:
        return False
    gens = {e: i + 1 for i, e in enumerate(sorted(edges - tree))}

    def letter(a: int, b: int) -> list[int]:
        e = (min(a, b), max(a, b))
        g = gens.get(e)
        if g is None:
            return []
        return [g if a < b else -g]

    relators = []
    for a, b, c in L.faces(2):
        word = letter(a, b) + letter(b, c) + letter(c, a)
        relators.append(word)

    def reduce_word(w: list[int]) -> list[int]:
        out: list[int] = []
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        while len(out) >= 2 and out[0] == -out[-1]:
            out = out[1:-1]
        return out

    alive = set(gens.values())
    moves = 0
    while alive and moves < budget:
        relators = [reduce_word(w) for w in relators]
        relators = [w for w in relators if w]
        moves += 1
        killed = None
        for w in relators:
            if len(w) == 1:
                killed = (abs(w[0]), [])
                break
            if len(w) == 2 and abs(w[0]) != abs(w[1]):
                # w = x y means y = x^-1: replace y by the inverse of x.
                x, y = w[0], w[1]
                killed = (abs(y), [-x] if y > 0 else [x])
                break
        if killed is None:
            return False
        g, replacement = killed
        alive.discard(g)
        new_relators = []
        for w in relators:
            nw: list[int] = []
            for x in w:
                if abs(x) == g:
                    nw.extend(replacement if x > 0 else [-r for r in reversed(replacement)])
                else:
                    nw.append(x)
            new_relators.append(nw)
        relators = new_relators
    return not alive


def certify_contractible(L: SimplicialComplex, seed: int = 0) -> ContractibilityCertificate:
    """Certify that ``L`` is contractible, or report failure.

    Greedy elementary collapses come first (smallest free face, then up to
    32 seeded random restarts); when no schedule collapses, vanishing reduced
    homology plus a trivial edge-path group is reported as evidence.
    """
    profile = reduced_homology(L)
    # A collapse can only exist when the reduced homology already vanishes,
    # so a non-trivial profile short-circuits every schedule.
    if not profile.is_trivial():
        return ContractibilityCertificate(kind="failed", homology_report=profile)
    all_faces = list(L.all_faces())
    steps = _try_collapse(all_faces, rng=None)
    if steps is None:
        for attempt in range(COLLAPSE_RESTARTS):
            rng = random.Random(1_000_003 * seed + attempt)
            steps = _try_collapse(all_faces, rng=rng)
            if steps is not None:
                break
    if steps is not None:
        return ContractibilityCertificate(kind="collapse_sequence", collapse_steps=steps)
    if _edge_path_group_trivial(L):
        return ContractibilityCertificate(kind="homology_evidence", homology_report=profile)
    return ContractibilityCertificate(kind="failed", homology_report=profile)


# -- fillings --------------------------------------------------------------


def is_filling(
    K: SimplicialComplex, Ms: Sequence[Iterable[int]], seed: int = 0
) -> Filling | NotFilling:
    """Check whether the listed minimal non-faces fill ``K``."""
    try:
        cleaned = [as_simplex(M) for M in Ms]
    except ValueError as exc:
        return NotFilling(reason=str(exc))
    if len(set(cleaned)) != len(cleaned):
        return NotFilling(reason="repeated non-face in the candidate list")
    mnf = set(minimal_non_faces(K))
    for t in cleaned:
        if t not in mnf:
            return NotFilling(reason=f"{t} is not a minimal non-face of the complex")
    L = SimplicialComplex(K.vertices, list(K.facets) + cleaned)
    cert = certify_contractible(L, seed=seed)
    if not cert:
        return NotFilling(
            reason="the union is not certified contractible", certificate=cert
        )
    pure = len({len(t) for t in cleaned}) <= 1
    return Filling(non_faces=tuple(cleaned), certificate=cert, pure=pure)


def filling_shape(K: SimplicialComplex) -> tuple[int, ...] | Obstructed:
    """The multiset of non-face sizes any filling of ``K`` must have.

    Every filling has one non-face of size d+2 for each unit of reduced
    Betti number in dimension d; torsion rules fillings out entirely.
    """
    profile = reduced_homology(K)
    if profile.has_torsion:
        torsion = tuple(
            (d, profile.torsion(d)) for d in range(K.dim + 1) if profile.torsion(d)
        )
        return Obstructed(torsion=torsion)
    shape: list[int] = []
    for d in range(K.dim + 2):
        shape.extend([d + 2] * profile.betti(d))
    return tuple(sorted(shape))


def find_fillings(
    K: SimplicialComplex, limit: Optional[int] = None, seed: int = 0
) -> list[Filling]:
    """Enumerate fillings of ``K`` in deterministic lexicographic order.

    Candidate subsets of the minimal non-faces are generated with the exact
    size multiset dictated by :func:`filling_shape` and verified one by one;
    at most ``limit`` fillings are returned (all of them when ``limit`` is
    None).  Obstructed complexes yield an empty list immediately.
    """
    shape = filling_shape(K)
    if isinstance(shape, Obstructed):
        return []
    if limit is not None and limit <= 0:
        return []
    need = Counter(shape)
    groups = {}
    for t in minimal_non_faces(K):
        groups.setdefault(len(t), []).append(t)
    for size, count in need.items():
        if len(groups.get(size, [])) < count:
            return []
    per_size = [
        itertools.combinations(sorted(groups[size]), need[size])
        for size in sorted(need)
    ]
    found: list[Filling] = []
    for combo in itertools.product(*per_size):
        candidate = list(itertools.chain.from_iterable(combo))
        verdict = is_filling(K, candidate, seed=seed)
        if isinstance(verdict, Filling):
            found.append(verdict)
            if limit is not None and len(found) >= limit:
                break
    return found


def sphere_skeleton_filling(
    S: SimplicialComplex, omit: Iterable[int], seed: int = 0
) -> Filling:
    """The filling of the codimension-one skeleton of a simplicial sphere
    consisting of every facet except ``omit``.

    ``S`` must look like an n-sphere: pure of dimension n, reduced homology
    one copy of the integers in dimension n and nothing else.
    """
    t = as_simplex(omit)
    if t not in S.facets:
        raise ValueError(f"{t} is not a facet of the sphere")
    n = S.dim
    if any(len(f) != n + 1 for f in S.facets):
        raise ValueError("complex is not pure, so it cannot be a simplicial sphere")
    profile = reduced_homology(S)
    sphere_like = (
        not profile.has_torsion
        and profile.betti(n) == 1
        and profile.total_betti == 1
    )
    if not sphere_like:
        raise ValueError(f"homology profile {profile!r} is not that of a sphere")
    from .complexes import skeleton

    K = skeleton(S, n - 1)
    # Facets are taken in order of their complements, so for a simplex
    # boundary the basis runs sigma_1, sigma_2, ... as in the classical
    # Jacobi and Hardie arrangements.
    everything = set(S.vertices)
    by_complement = sorted(S.facets, key=lambda f: tuple(sorted(everything - set(f))))
    Ms = [f for f in by_complement if f != t]
    verdict = is_filling(K, Ms, seed=seed)
    if isinstance(verdict, NotFilling):
        raise ValueError(f"facet complement failed to fill the skeleton: {verdict.reason}")
    return verdict
