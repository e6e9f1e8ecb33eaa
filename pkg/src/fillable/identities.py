"""Symbolic iterated (higher) Whitehead products and the identities between them.

An expression ``w_M`` is the higher product over the vertices of a minimal
non-face M, bracketed against the remaining vertices in contraction order and
composed with the coordinate permutation ``rho`` that sorts M to the front.
Two fillings of the same complex that share a chain relation between their
boundaries yield a linear identity between such expressions; for spheres the
coefficients are forced to be +1 or -1.

Everything here is formal: identities are asserted at the chain level, and
``graded_lie_check`` provides an independent oracle for the binary-bracket
specialization by expanding commutators in the free associative envelope.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .chains import Chain, NoSolution, boundary, solve_chain_relation
from .complexes import SimplicialComplex, as_simplex
from .fillings import Filling, sphere_skeleton_filling
from .orderings import ContractionOrdering, contraction_ordering, validate_ordering


@dataclass(frozen=True)
class WhiteheadExpr:
    """w_M composed with rho.

    ``rho`` is stored as the image sequence (j1..jl, i1..ik): the vertices of
    M in ascending order followed by the contraction ordering.
    """

    non_face: tuple[int, ...]
    ordering: tuple[int, ...]
    rho: tuple[int, ...]

    def describe(self) -> str:
        inner = "w(" + _label(self.non_face) + ")"
        expr = inner
        for v in self.ordering:
            expr = f"[{expr},e_{v}]"
        if not self.ordering:
            return expr
        return f"{expr} . rho->{_label(self.rho)}"


@dataclass(frozen=True)
class Provenance:
    """How an identity was derived: the two fillings, the target, the solver output."""

    filling_a: tuple[tuple[int, ...], ...]
    filling_b: tuple[tuple[int, ...], ...]
    target_index: int
    solution: tuple[int, ...]
    kernel_dim: int
    certificate_a: str
    certificate_b: str


@dataclass(frozen=True)
class WhiteheadIdentity:
    """A linear relation lhs = sum of coeff * expr, sound at the chain level."""

    lhs: WhiteheadExpr
    rhs: tuple[tuple[int, WhiteheadExpr], ...]
    unique: bool
    provenance: Optional[Provenance] = None

    @property
    def pure(self) -> bool:
        cards = {len(self.lhs.non_face)} | {len(e.non_face) for _, e in self.rhs}
        return len(cards) <= 1

    def coefficient(self, non_face: Iterable[int]) -> int:
        t = as_simplex(non_face)
        for c, e in self.rhs:
            if e.non_face == t:
                return c
        return 0


def identity_residual(identity: WhiteheadIdentity) -> Chain:
    """boundary(lhs) minus the weighted boundaries of the rhs; zero when sound."""
    res = boundary(identity.lhs.non_face)
    for c, e in identity.rhs:
        res = res - c * boundary(e.non_face)
    return res


def build_expr(
    K: SimplicialComplex,
    M: Iterable[int],
    ordering: ContractionOrdering | Sequence[int],
) -> WhiteheadExpr:
    """Assemble w_M for a given contraction ordering, computing rho."""
    t = as_simplex(M)
    order = tuple(ordering.order if isinstance(ordering, ContractionOrdering) else ordering)
    if not validate_ordering(K, t, order):
        raise ValueError(f"{order} is not a contraction ordering of {t}")
    return WhiteheadExpr(non_face=t, ordering=order, rho=t + order)


def derive_identity(
    K: SimplicialComplex,
    filling_a: Filling,
    filling_b: Filling,
    i: int,
    orderings: Optional[Mapping[tuple[int, ...], Sequence[int]]] = None,
) -> WhiteheadIdentity:
    """Express the i-th non-face of ``filling_b`` over the non-faces of ``filling_a``.

    Both fillings must be pure and share one non-face cardinality.  The
    chain relation is solved exactly over the integers; when the solution is
    not unique, the canonical representative is used and the identity is
    flagged as non-unique.
    """
    if not (filling_a.pure and filling_b.pure):
        raise ValueError("identities need pure fillings")
    cards = {len(t) for t in filling_a.non_faces} | {len(t) for t in filling_b.non_faces}
    if len(cards) > 1:
        raise ValueError("the two fillings have different non-face cardinalities")
    if not 0 <= i < len(filling_b.non_faces):
        raise ValueError(f"target index {i} out of range")
    target_nf = filling_b.non_faces[i]
    basis = [boundary(t) for t in filling_a.non_faces]
    particular, kernel = solve_chain_relation(boundary(target_nf), basis)

    def ordering_for(t: tuple[int, ...]):
        if orderings and t in orderings:
            return orderings[t]
        return contraction_ordering(K, t)

    lhs = build_expr(K, target_nf, ordering_for(target_nf))
    rhs = tuple(
        (coeff, build_expr(K, t, ordering_for(t)))
        for coeff, t in zip(particular, filling_a.non_faces)
        if coeff
    )
    prov = Provenance(
        filling_a=filling_a.non_faces,
        filling_b=filling_b.non_faces,
        target_index=i,
        solution=tuple(particular),
        kernel_dim=len(kernel),
        certificate_a=filling_a.certificate.kind,
        certificate_b=filling_b.certificate.kind,
    )
    return WhiteheadIdentity(lhs=lhs, rhs=rhs, unique=not kernel, provenance=prov)


def sphere_identity(
    S: SimplicialComplex, omit: Iterable[int], seed: int = 0
) -> WhiteheadIdentity:
    """The identity expressing w over ``omit`` in terms of the other facets.

    ``S`` must be a simplicial sphere; the identity lives on its
    codimension-one skeleton and every coefficient is checked to be +1 or -1.
    """
    t = as_simplex(omit)
    filling_a = sphere_skeleton_filling(S, t, seed=seed)
    everything = set(S.vertices)
    complement = lambda f: tuple(sorted(everything - set(f)))
    other = min((f for f in S.facets if f != t), key=complement)
    filling_b = sphere_skeleton_filling(S, other, seed=seed)
    i = filling_b.non_faces.index(t)
    from .complexes import skeleton

    K = skeleton(S, S.dim - 1)
    identity = derive_identity(K, filling_a, filling_b, i)
    coeffs = [c for c, _ in identity.rhs]
    if len(coeffs) != len(filling_a.non_faces) or any(abs(c) != 1 for c in coeffs):
        raise ValueError(
            "sphere identity produced a coefficient outside {+1,-1}; "
            "the input cannot be a genuine sphere"
        )
    return identity


# -- sphere specialization and the graded Lie oracle -----------------------

# A bracket word is an int (the generator e_i), a pair (left, right), or an
# opaque higher product ('w', vertices) that is never expanded.
BracketWord = object


@dataclass(frozen=True)
class GradedBracketTerm:
    coeff: int
    word: BracketWord


def _normalize_degrees(grading, labels: Iterable[int]) -> dict[int, int]:
    if isinstance(grading, Mapping):
        deg = {int(k): int(v) for k, v in grading.items()}
    else:
        deg = {i + 1: int(p) for i, p in enumerate(grading)}
    for i in labels:
        if i not in deg:
            raise ValueError(f"no sphere dimension given for vertex {i}")
        if deg[i] < 1:
            raise ValueError("sphere dimensions must be at least 1")
    return deg


def _koszul_sign(seq: Sequence[int], deg: Mapping[int, int]) -> int:
    """Sign for permuting smash factors of spheres into the order ``seq``.

    Each inversion of two odd-dimensional factors contributes -1; the
    suspension coordinates never move and contribute nothing.
    """
    sign = 1
    for s in range(len(seq)):
        for t in range(s + 1, len(seq)):
            if seq[s] > seq[t] and (deg[seq[s]] * deg[seq[t]]) % 2:
                sign = -sign
    return sign


def _bracket_word(expr: WhiteheadExpr) -> BracketWord:
    nf = expr.non_face
    word: BracketWord
    if len(nf) == 2:
        word = (nf[0], nf[1])
    else:
        word = ("w", nf)
    for v in expr.ordering:
        word = (word, v)
    return word


def bracket_text(word: BracketWord) -> str:
    if isinstance(word, int):
        return f"e_{word}"
    if word[0] == "w":
        return "w(" + _label(word[1]) + ")"
    return f"[{bracket_text(word[0])},{bracket_text(word[1])}]"


def specialize_spheres(
    identity: WhiteheadIdentity, grading
) -> list[GradedBracketTerm]:
    """Rewrite an identity over sphere generators as signed bracket terms.

    Returns the terms of lhs - rhs with Koszul signs from each rho, like
    terms collected, and the overall sign normalized so the first surviving
    term is positive.  A pair non-face becomes a genuine binary bracket; a
    larger one stays an opaque inner product with only the outer brackets
    normalized.
    """
    labels = set(identity.lhs.rho)
    for _, e in identity.rhs:
        labels.update(e.rho)
    deg = _normalize_degrees(grading, sorted(labels))
    collected: dict[BracketWord, int] = {}
    order: list[BracketWord] = []
    pending = [(1, identity.lhs)] + [(-c, e) for c, e in identity.rhs]
    for outer, expr in pending:
        word = _bracket_word(expr)
        coeff = outer * _koszul_sign(expr.rho, deg)
        if word not in collected:
            collected[word] = 0
            order.append(word)
        collected[word] += coeff
    terms = [
        GradedBracketTerm(coeff=collected[w], word=w) for w in order if collected[w]
    ]
    if terms and terms[0].coeff < 0:
        terms = [GradedBracketTerm(coeff=-t.coeff, word=t.word) for t in terms]
    return terms


def _expand(word: BracketWord, deg: Mapping[int, int]) -> tuple[dict[tuple[int, ...], int], int]:
    """Expansion of a bracket word in the free associative envelope.

    Returns (monomial -> coefficient, total degree).  The bracket is the
    graded commutator [x, y] = xy - (-1)**(|x||y|) yx with |e_i| = p_i.
    """
    if isinstance(word, int):
        return {(word,): 1}, deg[word]
    if word[0] == "w":
        raise ValueError("only binary brackets can be checked in the envelope")
    left, dl = _expand(word[0], deg)
    right, dr = _expand(word[1], deg)
    out: dict[tuple[int, ...], int] = {}
    swap_sign = 1 if (dl * dr) % 2 else -1
    for u, cu in left.items():
        for v, cv in right.items():
            out[u + v] = out.get(u + v, 0) + cu * cv
            out[v + u] = out.get(v + u, 0) + swap_sign * cu * cv
    return out, dl + dr


def graded_lie_check(terms: Sequence[GradedBracketTerm], grading) -> bool:
    """Whether the signed bracket terms sum to zero in the free graded Lie algebra.

    Checked by expanding every term in the free associative algebra, where
    the free graded Lie algebra embeds; an empty term list counts as zero.
    """
    labels = set()

    def collect(word: BracketWord):
        if isinstance(word, int):
            labels.add(word)
        elif word[0] == "w":
            raise ValueError("only binary brackets can be checked in the envelope")
        else:
            collect(word[0])
            collect(word[1])

    for t in terms:
        collect(t.word)
    deg = _normalize_degrees(grading, sorted(labels))
    total: dict[tuple[int, ...], int] = {}
    for t in terms:
        expansion, _ = _expand(t.word, deg)
        for mono, c in expansion.items():
            total[mono] = total.get(mono, 0) + t.coeff * c
    return all(v == 0 for v in total.values())


# -- rendering -------------------------------------------------------------


def _label(vs: Sequence[int]) -> str:
    if all(v <= 9 for v in vs):
        return "".join(str(v) for v in vs)
    return ",".join(str(v) for v in vs)


def _sigma_names(identity: WhiteheadIdentity) -> Optional[dict[tuple[int, ...], int]]:
    """Map non-faces to sigma indices when they are all facets of a simplex boundary.

    Applies when every non-face is the vertex set 1..m minus one vertex, with
    the omitted vertices pairwise distinct; sigma_i omits vertex i.
    """
    nfs = [identity.lhs.non_face] + [e.non_face for _, e in identity.rhs]
    m = max(max(t) for t in nfs)
    full = set(range(1, m + 1))
    names = {}
    for t in nfs:
        missing = full - set(t)
        if len(t) != m - 1 or len(missing) != 1:
            return None
        names[t] = missing.pop()
    if len(set(names.values())) != len(names):
        return None
    return names


def _term_pieces(coeff: int, name: str, star: bool) -> str:
    mag = abs(coeff)
    if mag == 1:
        return name
    return f"{mag}{'*' if star else ''}{name}"


def render_identity(identity: WhiteheadIdentity, fmt: str = "text") -> str:
    """Deterministic serialization of an identity as text, latex or json."""
    if fmt == "text":
        lhs = "w_" + _label(identity.lhs.non_face)
        if not identity.rhs:
            return f"{lhs} = 0"
        parts = []
        for k, (c, e) in enumerate(identity.rhs):
            body = _term_pieces(c, "w_" + _label(e.non_face), star=True)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return f"{lhs} = " + " ".join(parts)
    if fmt == "latex":
        sigma = _sigma_names(identity)
        if sigma is not None:
            name = lambda t: f"w_{{\\sigma_{sigma[t]}}}"
            rhs = sorted(identity.rhs, key=lambda ce: sigma[ce[1].non_face])
        else:
            name = lambda t: f"w_{{{_label(t)}}}"
            rhs = list(identity.rhs)
        lhs = name(identity.lhs.non_face)
        if not rhs:
            return f"{lhs}=0"
        out = lhs + "="
        for k, (c, e) in enumerate(rhs):
            body = _term_pieces(c, name(e.non_face), star=False)
            if c < 0:
                out += "-" + body
            else:
                out += ("" if k == 0 else "+") + body
        return out
    if fmt == "json":
        doc = {
            "lhs": {
                "non_face": list(identity.lhs.non_face),
                "ordering": list(identity.lhs.ordering),
            },
            "rhs": [
                {
                    "coeff": c,
                    "non_face": list(e.non_face),
                    "ordering": list(e.ordering),
                }
                for c, e in identity.rhs
            ],
            "pure": identity.pure,
            "unique": identity.unique,
        }
        return json.dumps(doc)
    raise ValueError(f"unknown format {fmt!r}")


def parse_identity_json(document: str) -> WhiteheadIdentity:
    """Inverse of the json rendering; provenance is not part of the schema."""
    data = json.loads(document)
    if set(data) != {"lhs", "rhs", "pure", "unique"}:
        raise ValueError("identity document must have lhs, rhs, pure and unique fields")

    def expr(node) -> WhiteheadExpr:
        nf = as_simplex(node["non_face"])
        order = tuple(int(v) for v in node["ordering"])
        return WhiteheadExpr(non_face=nf, ordering=order, rho=nf + order)

    lhs = expr(data["lhs"])
    rhs = tuple((int(item["coeff"]), expr(item)) for item in data["rhs"])
    identity = WhiteheadIdentity(lhs=lhs, rhs=rhs, unique=bool(data["unique"]))
    if identity.pure != bool(data["pure"]):
        raise ValueError("pure flag does not match the non-face cardinalities")
    return identity
