"""Exact integer simplicial chain algebra.

Boundary operators, Smith normal form with recorded unimodular transforms,
reduced integral homology, and an integer linear solver for boundary-chain
relations.  Matrices are numpy arrays with ``dtype=object`` so every entry is
an arbitrary-precision Python int; nothing here ever touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .complexes import Simplex, as_simplex


class NoSolution(Exception):
    """An integer chain relation has no solution."""


class Chain:
    """An integer linear combination of simplices of one fixed dimension.

    ``dimension`` may be -1, in which case the only simplex is the empty
    tuple (used by the augmentation).  Zero coefficients are never stored.
    """

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension: int, terms: Mapping[Simplex, int] | None = None):
        if dimension < -1:
            raise ValueError("chain dimension must be at least -1")
        cleaned: dict[Simplex, int] = {}
        for s, c in (terms or {}).items():
            c = int(c)
            if c == 0:
                continue
            t = () if s == () else as_simplex(s)
            if len(t) != dimension + 1:
                raise ValueError(f"simplex {t} does not have dimension {dimension}")
            cleaned[t] = c
        self.dimension = dimension
        self.terms: dict[Simplex, int] = cleaned

    def coefficient(self, s: Iterable[int]) -> int:
        t = () if s == () else as_simplex(s)
        return self.terms.get(t, 0)

    @property
    def support(self) -> list[Simplex]:
        return sorted(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Chain") -> "Chain":
        if not isinstance(other, Chain):
            return NotImplemented
        if self.dimension != other.dimension:
            raise ValueError("cannot add chains of different dimensions")
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return Chain(self.dimension, terms)

    def __neg__(self) -> "Chain":
        return Chain(self.dimension, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, k: int) -> "Chain":
        return Chain(self.dimension, {s: k * c for s, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dimension, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Chain({self.dimension}, 0)"
        parts = [f"{c:+d}*{s}" for s, c in sorted(self.terms.items())]
        return f"Chain({self.dimension}, {' '.join(parts)})"


def boundary(s: Iterable[int]) -> Chain:
    """Boundary of a single simplex.

    For s = {v1 < ... < v(d+1)} this is the alternating sum of the facets,
    the i-th vertex omitted with sign (-1)**(i-1).  The boundary of a vertex
    is the zero chain in dimension -1; the augmentation map is handled
    separately by :func:`reduced_homology`.
    """
    t = as_simplex(s)
    d = len(t) - 1
    if d == 0:
        return Chain(-1, {})
    terms: dict[Simplex, int] = {}
    for i in range(len(t)):
        face = t[:i] + t[i + 1 :]
        terms[face] = 1 if i % 2 == 0 else -1
    return Chain(d - 1, terms)


def chain_boundary(c: Chain) -> Chain:
    """Linear extension of :func:`boundary` to chains."""
    if c.dimension <= 0:
        return Chain(-1, {})
    out = Chain(c.dimension - 1, {})
    for s, coeff in c.terms.items():
        out = out + coeff * boundary(s)
    return out


# -- matrices -------------------------------------------------------------


def _zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def _identity(n: int) -> np.ndarray:
    mat = _zeros(n, n)
    for i in range(n):
        mat[i, i] = 1
    return mat


def to_matrix(rows: Sequence[Sequence[int]]) -> np.ndarray:
    """Copy nested integer sequences into an exact object-dtype matrix."""
    data = [list(map(int, r)) for r in rows]
    if not data:
        return _zeros(0, 0)
    width = len(data[0])
    if any(len(r) != width for r in data):
        raise ValueError("ragged matrix")
    mat = _zeros(len(data), width)
    for i, row in enumerate(data):
        for j, v in enumerate(row):
            mat[i, j] = v
    return mat


def boundary_matrix(K, d: int) -> np.ndarray:
    """Matrix of the boundary operator from d-faces to (d-1)-faces of ``K``.

    Rows are indexed by the (d-1)-faces and columns by the d-faces, both in
    lexicographic order.
    """
    cols = K.faces(d)
    rows = K.faces(d - 1) if d >= 1 else []
    index = {s: i for i, s in enumerate(rows)}
    mat = _zeros(len(rows), len(cols))
    for j, s in enumerate(cols):
        for face, c in boundary(s).terms.items():
            mat[index[face], j] = c
    return mat


def _augmentation_matrix(K) -> np.ndarray:
    verts = K.faces(0)
    mat = _zeros(1, len(verts))
    for j in range(len(verts)):
        mat[0, j] = 1
    return mat


@dataclass
class SmithDecomposition:
    """U @ A @ V = S with U, V unimodular and S diagonal.

    The positive diagonal entries form a divisibility chain d1 | d2 | ...
    and ``rank`` counts them.
    """

    S: np.ndarray
    U: np.ndarray
    V: np.ndarray
    rank: int

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(int(self.S[i, i]) for i in range(self.rank))


def _min_abs_position(S: np.ndarray, t: int) -> tuple[int, int] | None:
    best = None
    best_val = None
    nr, nc = S.shape
    for i in range(t, nr):
        for j in range(t, nc):
            v = S[i, j]
            if v != 0 and (best_val is None or abs(v) < best_val):
                best, best_val = (i, j), abs(v)
                if best_val == 1:
                    return best
    return best


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with recorded transforms.

    Uses gcd-pivot elimination, always promoting the entry of smallest
    absolute value, and repairs the divisibility chain by folding offending
    rows into the pivot row.
    """
    S = np.array(to_matrix(A) if not isinstance(A, np.ndarray) else A, dtype=object)
    nr, nc = S.shape
    U = _identity(nr)
    V = _identity(nc)
    t = 0
    while t < nr and t < nc:
        pos = _min_abs_position(S, t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            S[[t, i]] = S[[i, t]]
            U[[t, i]] = U[[i, t]]
        if j != t:
            S[:, [t, j]] = S[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
        while True:
            restart = False
            for i in range(t + 1, nr):
                if S[i, t]:
                    q = S[i, t] // S[t, t]
                    if q:
                        S[i, :] = S[i, :] - q * S[t, :]
                        U[i, :] = U[i, :] - q * U[t, :]
                    if S[i, t]:
                        S[[t, i]] = S[[i, t]]
                        U[[t, i]] = U[[i, t]]
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, nc):
                if S[t, j]:
                    q = S[t, j] // S[t, t]
                    if q:
                        S[:, j] = S[:, j] - q * S[:, t]
                        V[:, j] = V[:, j] - q * V[:, t]
                    if S[t, j]:
                        S[:, [t, j]] = S[:, [j, t]]
                        V[:, [t, j]] = V[:, [j, t]]
                        restart = True
                        break
            if restart:
                continue
            offender = None
            pivot = S[t, t]
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if S[i, j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            S[t, :] = S[t, :] + S[offender, :]
            U[t, :] = U[t, :] + U[offender, :]
        if S[t, t] < 0:
            S[t, :] = -S[t, :]
            U[t, :] = -U[t, :]
        t += 1
    rank = sum(1 for i in range(min(nr, nc)) if S[i, i] != 0)
    return SmithDecomposition(S=S, U=U, V=V, rank=rank)


# -- homology -------------------------------------------------------------


class HomologyProfile:
    """Reduced integral homology: one Betti number and torsion list per dimension."""

    def __init__(self, betti: Mapping[int, int], torsion: Mapping[int, Sequence[int]]):
        self._betti = {int(d): int(b) for d, b in betti.items()}
        self._torsion = {int(d): tuple(int(x) for x in v) for d, v in torsion.items() if v}

    def betti(self, d: int) -> int:
        return self._betti.get(d, 0)

    def torsion(self, d: int) -> tuple[int, ...]:
        return self._torsion.get(d, ())

    @property
    def total_betti(self) -> int:
        return sum(self._betti.values())

    @property
    def has_torsion(self) -> bool:
        return bool(self._torsion)

    def is_trivial(self) -> bool:
        return self.total_betti == 0 and not self._torsion

    def nonzero(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """Summary keyed by dimension, skipping trivial groups."""
        dims = set(d for d, b in self._betti.items() if b) | set(self._torsion)
        return {d: (self.betti(d), self.torsion(d)) for d in sorted(dims)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __repr__(self) -> str:
        body = ", ".join(
            f"H~{d}=Z^{b}" + ("" if not t else "+" + "+".join(f"Z/{x}" for x in t))
            for d, (b, t) in self.nonzero().items()
        )
        return f"<HomologyProfile {body or 'trivial'}>"


def reduced_homology(K) -> HomologyProfile:
    """Reduced integral homology of ``K`` from Smith normal forms.

    The chain complex is augmented: dimension -1 is one copy of the integers
    and the augmentation sends every vertex to 1.
    """
    top = K.dim
    mats = {0: _augmentation_matrix(K)}
    for d in range(1, top + 1):
        mats[d] = boundary_matrix(K, d)
    decs = {d: smith_normal_form(mats[d]) for d in mats}
    ranks = {d: decs[d].rank for d in decs}
    ranks[top + 1] = 0
    betti = {}
    torsion = {}
    for d in range(0, top + 1):
        betti[d] = len(K.faces(d)) - ranks[d] - ranks[d + 1]
        if d + 1 in decs:
            torsion[d] = [x for x in decs[d + 1].invariant_factors if x > 1]
    return HomologyProfile(betti, torsion)


# -- integer chain relations ----------------------------------------------


def _column_echelon(vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Integer column echelon form: strictly increasing pivot rows, positive pivots."""
    cols = [list(v) for v in vectors if any(v)]
    n = len(cols[0]) if cols else 0

    def pivot_row(col: list[int]) -> int:
        for r, v in enumerate(col):
            if v:
                return r
        return n

    changed = True
    while changed:
        changed = False
        cols.sort(key=pivot_row)
        for a in range(len(cols) - 1):
            pa, pb = pivot_row(cols[a]), pivot_row(cols[a + 1])
            if pa == pb and pa < n:
                x, y = cols[a][pa], cols[a + 1][pa]
                g, u, v = _exgcd(x, y)
                newa = [u * cols[a][r] + v * cols[a + 1][r] for r in range(n)]
                newb = [
                    (-y // g) * cols[a][r] + (x // g) * cols[a + 1][r] for r in range(n)
                ]
                cols[a], cols[a + 1] = newa, newb
                changed = True
    cols = [c for c in cols if any(c)]
    for c in cols:
        if c[pivot_row(c)] < 0:
            for r in range(n):
                c[r] = -c[r]
    cols.sort(key=pivot_row)
    return [tuple(c) for c in cols]


def _exgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, u, v with u*a + v*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _reduce_mod_lattice(x: list[int], lattice: list[tuple[int, ...]]) -> list[int]:
    """Canonical coset representative of ``x`` modulo the integer lattice.

    The representative minimizes, coordinate by coordinate in order, the key
    (absolute value, sign) with positive preferred.  Because the lattice
    basis is in column echelon form, each pivot coordinate is controlled by
    exactly one remaining generator, so the greedy sweep below attains the
    lexicographic minimum.
    """
    x = list(x)
    for gen in lattice:
        p = next(i for i, v in enumerate(gen) if v)
        d = gen[p]
        r = x[p] % d
        v = r if 2 * r <= d else r - d
        q = (x[p] - v) // d
        if q:
            for i in range(len(x)):
                x[i] -= q * gen[i]
    return x


def solve_chain_relation(
    target: Chain, basis: Sequence[Chain]
) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Integer coefficients a with sum(a_j * basis_j) == target.

    Returns ``(particular, kernel_basis)``.  The kernel basis spans all
    integer solutions of the homogeneous system; when it is empty the
    solution is unique.  The particular solution is the canonical coset
    representative described in :func:`_reduce_mod_lattice`.

    Raises :class:`NoSolution` when no integer solution exists.
    """
    dim = target.dimension
    for b in basis:
        if b.dimension != dim:
            raise ValueError("all chains must share one dimension")
    rows = sorted(set(target.terms) | {s for b in basis for s in b.terms})
    index = {s: i for i, s in enumerate(rows)}
    A = _zeros(len(rows), len(basis))
    for j, b in enumerate(basis):
        for s, c in b.terms.items():
            A[index[s], j] = c
    bvec = _zeros(len(rows), 1)
    for s, c in target.terms.items():
        bvec[index[s], 0] = c
    dec = smith_normal_form(A)
    c = dec.U.dot(bvec)
    nc = len(basis)
    y = [0] * nc
    for i in range(len(rows)):
        ci = int(c[i, 0]) if i < c.shape[0] else 0
        if i < dec.rank:
            di = int(dec.S[i, i])
            if ci % di:
                raise NoSolution(f"divisibility fails at invariant factor {di}")
            y[i] = ci // di
        elif ci:
            raise NoSolution("target is outside the span of the basis chains")
    x = dec.V.dot(np.array([[v] for v in y], dtype=object) if nc else _zeros(0, 1))
    particular = [int(x[i, 0]) for i in range(nc)]
    kernel = [
        tuple(int(dec.V[i, j]) for i in range(nc)) for j in range(dec.rank, nc)
    ]
    kernel = _column_echelon(kernel)
    particular = _reduce_mod_lattice(particular, kernel)
    return tuple(particular), kernel
