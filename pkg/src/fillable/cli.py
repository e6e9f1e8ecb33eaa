"""Command line front end.

Subcommands walk the pipeline end to end: ``nonfaces`` lists minimal
non-faces, ``fillings`` searches for or checks fillings, ``identity`` derives
a symbolic identity from two fillings (or one omitted facet of a sphere), and
``jacobi`` specializes the three-sphere case and runs the graded Lie oracle.

Inputs are either a facet-list file or a ``--gen`` spec:

    simplex-skeleton:m,k        k-skeleton of the boundary of the m-simplex
    cross-polytope-skeleton:n   n-skeleton of the boundary of the
                                (n+2)-dimensional cross polytope
    rp2-skeleton                1-skeleton of the six-vertex projective plane
    sphere-skeleton:simplex:m   boundary of the m-simplex, exposed as a sphere

Output is deterministic for identical invocations.  Exit codes: 0 success,
1 domain failure (no solution, not a filling, obstructed), 2 usage or parse.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .chains import NoSolution
from .complexes import (
    ParseError,
    SimplicialComplex,
    as_simplex,
    gen_cross_polytope_boundary,
    gen_rp2_six,
    gen_simplex_skeleton,
    minimal_non_faces,
    parse_complex,
    skeleton,
)
from .fillings import Filling, NotFilling, Obstructed, filling_shape, find_fillings, is_filling
from .identities import (
    GradedBracketTerm,
    bracket_text,
    derive_identity,
    graded_lie_check,
    render_identity,
    specialize_spheres,
    sphere_identity,
)


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _token(t: Sequence[int]) -> str:
    if all(v <= 9 for v in t):
        return "".join(str(v) for v in t)
    return ",".join(str(v) for v in t)


def _parse_simplex(text: str, m: int) -> tuple[int, ...]:
    """A single simplex from a flag value.

    Accepts space or comma separated labels; a lone digit string is one label
    when it fits among the vertices and splits into digits otherwise.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise _Fail(2, "error: empty simplex")
    try:
        if len(tokens) == 1 and len(tokens[0]) > 1 and int(tokens[0]) > m:
            return as_simplex(int(ch) for ch in tokens[0])
        return as_simplex(int(tok) for tok in tokens)
    except ValueError as exc:
        raise _Fail(2, f"error: bad simplex {text!r}: {exc}")


def _parse_filling(text: str) -> list[tuple[int, ...]]:
    """A whitespace-separated list of non-face tokens.

    Each token is one non-face: comma-separated labels, or digits that split
    one per vertex.
    """
    out = []
    for tok in text.split():
        try:
            if "," in tok:
                out.append(as_simplex(int(x) for x in tok.split(",") if x))
            elif len(tok) > 1:
                out.append(as_simplex(int(ch) for ch in tok))
            else:
                out.append(as_simplex([int(tok)]))
        except ValueError as exc:
            raise _Fail(2, f"error: bad non-face token {tok!r}: {exc}")
    if not out:
        raise _Fail(2, "error: empty filling list")
    return out


def _generator(spec: str) -> tuple[SimplicialComplex, Optional[SimplicialComplex]]:
    """Build (complex, backing sphere or None) from a generator spec."""
    name, _, rest = spec.partition(":")
    try:
        if name == "simplex-skeleton":
            m_text, k_text = rest.split(",")
            m, k = int(m_text), int(k_text)
            K = gen_simplex_skeleton(m, k)
            return K, K if k == m - 2 else None
        if name == "cross-polytope-skeleton":
            n = int(rest)
            S = gen_cross_polytope_boundary(n)
            return skeleton(S, n), S
        if name == "rp2-skeleton":
            if rest:
                raise ValueError("rp2-skeleton takes no parameters")
            return skeleton(gen_rp2_six(), 1), None
        if name == "sphere-skeleton":
            kind, _, m_text = rest.partition(":")
            if kind != "simplex":
                raise ValueError(f"unknown sphere family {kind!r}")
            m = int(m_text)
            if m < 3:
                raise ValueError("sphere-skeleton:simplex needs m >= 3")
            S = gen_simplex_skeleton(m, m - 2)
            return skeleton(S, m - 3), S
    except _Fail:
        raise
    except ValueError as exc:
        raise _Fail(2, f"error: bad generator spec {spec!r}: {exc}")
    raise _Fail(2, f"error: unknown generator {name!r}")


def _resolve_input(args) -> tuple[SimplicialComplex, Optional[SimplicialComplex]]:
    if (args.path is None) == (args.gen is None):
        raise _Fail(2, "error: give exactly one input, a facet-list file or --gen")
    if args.gen is not None:
        return _generator(args.gen)
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Fail(2, f"error: cannot read {args.path}: {exc}")
    try:
        K = parse_complex(text)
    except ParseError as exc:
        raise _Fail(2, f"error: {args.path}: {exc}")
    return K, K


def cmd_nonfaces(args) -> int:
    K, _ = _resolve_input(args)
    nfs = minimal_non_faces(K)
    if args.json:
        print(json.dumps([list(t) for t in nfs]))
    else:
        for t in nfs:
            print(" ".join(str(v) for v in t))
    return 0


def cmd_fillings(args) -> int:
    K, _ = _resolve_input(args)
    if args.check is not None:
        candidate = _parse_filling(args.check)
        verdict = is_filling(K, candidate, seed=args.seed)
        if isinstance(verdict, NotFilling):
            if args.json:
                print(json.dumps({"filling": False, "reason": verdict.reason}))
            else:
                print(f"not a filling: {verdict.reason}", file=sys.stderr)
            return 1
        if args.json:
            print(
                json.dumps(
                    {
                        "filling": True,
                        "certificate": verdict.certificate.kind,
                        "pure": verdict.pure,
                    }
                )
            )
        else:
            print(
                f"filling: certificate={verdict.certificate.kind} "
                f"pure={'true' if verdict.pure else 'false'}"
            )
        return 0
    shape = filling_shape(K)
    if isinstance(shape, Obstructed):
        report = "; ".join(
            f"dimension {d}: {', '.join(str(x) for x in factors)}"
            for d, factors in shape.torsion
        )
        print(f"obstructed: torsion in homology ({report})", file=sys.stderr)
        return 1
    found = find_fillings(K, limit=args.limit, seed=args.seed)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "non_faces": [list(t) for t in f.non_faces],
                        "certificate": f.certificate.kind,
                        "pure": f.pure,
                    }
                    for f in found
                ]
            )
        )
    else:
        for f in found:
            tokens = " ".join(_token(t) for t in f.non_faces)
            print(f"{tokens}  certificate={f.certificate.kind}")
    return 0


def _provenance_lines(identity, prefix: str) -> list[str]:
    prov = identity.provenance
    if prov is None:
        return []
    return [
        f"{prefix} filling A: " + " ".join(_token(t) for t in prov.filling_a),
        f"{prefix} filling B: " + " ".join(_token(t) for t in prov.filling_b),
        f"{prefix} target: " + _token(prov.filling_b[prov.target_index]),
        f"{prefix} certificates: A={prov.certificate_a} B={prov.certificate_b}",
        f"{prefix} unique: " + ("yes" if identity.unique else "no"),
    ]


def cmd_identity(args) -> int:
    K, sphere = _resolve_input(args)
    general = [args.filling_a, args.filling_b, args.target]
    if args.omit is not None:
        if any(v is not None for v in general):
            raise _Fail(2, "error: --omit cannot be combined with explicit fillings")
        if sphere is None:
            raise _Fail(2, "error: --omit needs a sphere input (file or sphere generator)")
        t = _parse_simplex(args.omit, max(sphere.vertices))
        try:
            identity = sphere_identity(sphere, t, seed=args.seed)
        except (ValueError, NoSolution) as exc:
            raise _Fail(1, f"error: {exc}")
    else:
        if any(v is None for v in general):
            raise _Fail(2, "error: need --omit, or all of --filling-a --filling-b --target")
        cand_a = _parse_filling(args.filling_a)
        cand_b = _parse_filling(args.filling_b)
        filling_a = is_filling(K, cand_a, seed=args.seed)
        if isinstance(filling_a, NotFilling):
            raise _Fail(1, f"error: filling A rejected: {filling_a.reason}")
        filling_b = is_filling(K, cand_b, seed=args.seed)
        if isinstance(filling_b, NotFilling):
            raise _Fail(1, f"error: filling B rejected: {filling_b.reason}")
        target = _parse_simplex(args.target, max(K.vertices))
        if target not in filling_b.non_faces:
            raise _Fail(1, f"error: target {_token(target)} is not in filling B")
        i = filling_b.non_faces.index(target)
        try:
            identity = derive_identity(K, filling_a, filling_b, i)
        except NoSolution as exc:
            raise _Fail(1, f"error: no integral relation: {exc}")
        except ValueError as exc:
            raise _Fail(1, f"error: {exc}")
    print(render_identity(identity, fmt=args.format))
    if args.format in ("text", "latex"):
        prefix = "#" if args.format == "text" else "%"
        for line in _provenance_lines(identity, prefix):
            print(line)
    return 0


def _term_text(k: int, term: GradedBracketTerm) -> str:
    mag = abs(term.coeff)
    body = bracket_text(term.word) if mag == 1 else f"{mag}*{bracket_text(term.word)}"
    if k == 0:
        return ("-" if term.coeff < 0 else "") + body
    return ("- " if term.coeff < 0 else "+ ") + body


def cmd_jacobi(args) -> int:
    degrees = {1: args.p1, 2: args.p2, 3: args.p3}
    S = gen_simplex_skeleton(3, 1)
    identity = sphere_identity(S, (1, 2))
    terms = specialize_spheres(identity, degrees)
    ok = graded_lie_check(terms, degrees)
    print(f"degrees: p1={args.p1} p2={args.p2} p3={args.p3}")
    print("identity: " + render_identity(identity, fmt="text"))
    rendered = " ".join(_term_text(k, t) for k, t in enumerate(terms))
    print((rendered if rendered else "0") + " = 0")
    print("oracle: ok" if ok else "oracle: FAILED")
    return 0 if ok else 1


def _sphere_dim(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("sphere dimensions must be at least 1")
    return value


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("path", nargs="?", help="facet-list file")
    sub.add_argument("--gen", help="generator spec instead of a file")
    sub.add_argument("--seed", type=int, default=0, help="seed for collapse restarts")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fillable",
        description="minimal non-faces, fillings and Whitehead product identities",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("nonfaces", help="list the minimal non-faces")
    _add_input_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nonfaces)

    p = subs.add_parser("fillings", help="search for fillings, or check one")
    _add_input_args(p)
    p.add_argument("--limit", type=int, default=20, help="stop after this many fillings")
    p.add_argument("--check", help="verify this list of non-faces instead of searching")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fillings)

    p = subs.add_parser("identity", help="derive a Whitehead product identity")
    _add_input_args(p)
    p.add_argument("--omit", help="facet to omit (sphere inputs only)")
    p.add_argument("--filling-a", help="non-faces of the filling used as basis")
    p.add_argument("--filling-b", help="non-faces of the filling holding the target")
    p.add_argument("--target", help="non-face to express over filling A")
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.set_defaults(func=cmd_identity)

    p = subs.add_parser("jacobi", help="three-sphere specialization with oracle check")
    p.add_argument("p1", type=_sphere_dim)
    p.add_argument("p2", type=_sphere_dim)
    p.add_argument("p3", type=_sphere_dim)
    p.set_defaults(func=cmd_jacobi)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _Fail as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoSolution, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
