"""Command-line front end.

Inputs are JSON files or inline generator specs like `complete-complex(4,2)`,
`torus7`, `uniform-matroid(3,2)`, `graphic(K4)`. Reports are canonical JSON
on stdout (or --output); reruns with the same config and seed are
byte-identical, so wall time goes to stderr. Exit codes: 0 ok, 2 parse
error, 3 cap exceeded, 4 property violated, 5 numeric failure.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time

from . import codes, f2, formats, generators, matroids, spectral, walks
from .complexes import WeightedComplex
from .errors import HdxError, ParseError
from .f2 import F2Cochain

_GEN_SPEC = re.compile(r"^([a-z0-9-]+)(?:\((.*)\))?$")


def _gen_args(raw: str | None) -> list[str]:
    return [a.strip() for a in raw.split(",")] if raw else []


def resolve_generator(spec: str):
    """Inline generator spec -> ('complex'|'matroid', object)."""
    m = _GEN_SPEC.match(spec)
    if not m:
        raise ParseError(f"bad generator spec {spec!r}")
    name, args = m.group(1), _gen_args(m.group(2))
    try:
        if name == "complete-complex":
            n, d = map(int, args)
            return "complex", generators.complete_complex(n, d)
        if name == "simplex":
            (n,) = map(int, args)
            return "complex", generators.simplex(n)
        if name == "full-2-simplex":
            return "complex", generators.simplex(2)
        if name == "simplex-boundary":
            (n,) = map(int, args)
            return "complex", generators.simplex_boundary(n)
        if name == "torus7":
            return "complex", generators.torus7()
        if name == "complete-multipartite":
            return "complex", generators.complete_multipartite(list(map(int, args)))
        if name == "random-pure":
            n, d = int(args[0]), int(args[1])
            p = float(args[2])
            seed = int(args[3])
            return "complex", generators.random_pure(n, d, p, seed)
        if name == "uniform-matroid":
            n, r = map(int, args)
            return "matroid", generators.uniform_matroid(n, r)
        if name == "graphic":
            (gname,) = args
            return "matroid", generators.graphic_matroid(gname)
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad arguments in {spec!r}: {exc}") from exc
    raise ParseError(f"unknown generator {name!r}")


def resolve_input(spec: str):
    """File path or generator spec -> (kind, object, canonical json doc)."""
    if os.path.exists(spec):
        kind, obj = formats.parse_input(formats.load_json(spec))
    else:
        kind, obj = resolve_generator(spec)
    doc = (
        formats.complex_to_json(obj) if kind == "complex" else formats.matroid_to_json(obj)
    )
    return kind, obj, doc


def _need(kind_got: str, kind_want: str, command: str):
    if kind_got != kind_want:
        raise ParseError(f"{command} needs a {kind_want} input, got {kind_got}")


def parse_face(X: WeightedComplex, token: str) -> tuple[int, ...]:
    parts = [p.strip() for p in token.split(",") if p.strip()]
    resolved = []
    for p in parts:
        if p in X._label_index:
            resolved.append(p)
        else:
            try:
                q = int(p)
            except ValueError:
                raise ParseError(f"unknown vertex {p!r}")
            if q not in X._label_index:
                raise ParseError(f"unknown vertex {p!r}")
            resolved.append(q)
    return X.index_face(resolved)


def _cochain_from_args(X: WeightedComplex, level: int, support: list[str]) -> F2Cochain:
    faces = [parse_face(X, tok) for tok in support]
    for face in faces:
        if len(face) - 1 != level:
            raise ParseError(f"face {face} not at level {level}")
    return F2Cochain.from_faces(X, level, [X.label_face(f) for f in faces])


def _elements(token: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in token.split(",") if p.strip())
    except ValueError as exc:
        raise ParseError(f"bad element list {token!r}") from exc


def _inf_str(x):
    if x is None:
        return None
    if x == f2.INF:
        return "inf"
    return x


def run(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="hdx", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--enum-cap", type=int, default=1 << 24)
    common.add_argument("--format", choices=["json", "csv"], default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("-o", "--output", default=None)

    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common])
    p.add_argument("name")

    for cmd in ("certify", "spectrum", "cheeger", "cohomology", "expansion", "css"):
        p = sub.add_parser(cmd, parents=[common])
        p.add_argument("input")
        if cmd == "certify":
            p.add_argument("--lam", "--lambda", dest="lam", type=float, required=True)
        if cmd == "css":
            p.add_argument("--distances", action="store_true")
            p.add_argument("--export-checks", default=None)

    p = sub.add_parser("mix", parents=[common])
    p.add_argument("input")
    p.add_argument("--level", "-k", type=int, required=True)

    p = sub.add_parser("minimality", parents=[common])
    p.add_argument("input")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--support", nargs="*", default=[])

    p = sub.add_parser("test-code", parents=[common])
    p.add_argument("input")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--support", nargs="*", default=[])
    p.add_argument("--trials", type=int, default=100000)

    p = sub.add_parser("matroid-verify", parents=[common])
    p.add_argument("input")
    p = sub.add_parser("matroid-sample", parents=[common])
    p.add_argument("input")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--start", default=None)
    p = sub.add_parser("matroid-count", parents=[common])
    p.add_argument("input")

    p = sub.add_parser("tv-curve", parents=[common])
    p.add_argument("input")
    p.add_argument("--level", "-k", type=int, required=True)
    p.add_argument("--kind", choices=["up-down", "down-up"], default="down-up")
    p.add_argument("--start", default=None)
    p.add_argument("--max-steps", type=int, default=20)

    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    text, exit_code = dispatch(args)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"wall_time_s={time.perf_counter() - t0:.3f}", file=sys.stderr)
    return exit_code


def _envelope(args, doc, result) -> dict:
    return {
        "command": args.command,
        "input": {"spec": getattr(args, "input", None), "digest": formats.digest(doc)},
        "config": {
            "seed": args.seed,
            "tol": args.tol,
            "enum_cap": args.enum_cap,
            "threads": args.threads,
            "format": args.format or "json",
        },
        "result": result,
    }


def dispatch(args) -> tuple[str, int]:
    cap_bits = max(1, args.enum_cap.bit_length() - 1) if hasattr(args, "enum_cap") else 24

    if args.command == "generate":
        kind, obj = resolve_generator(args.name)
        doc = (
            formats.complex_to_json(obj)
            if kind == "complex"
            else formats.matroid_to_json(obj)
        )
        return formats.jdump(doc), 0

    kind, obj, doc = resolve_input(args.input)
    if kind == "matroid" and args.command not in (
        "matroid-verify",
        "matroid-sample",
        "matroid-count",
    ):
        # complex commands act on the independence complex of a matroid input
        obj = matroids.independence_complex(obj)
        kind = "complex"

    if args.command == "certify":
        _need(kind, "complex", "certify")
        rep = spectral.certify_local_spectral(
            obj, args.lam, tol=args.tol, threads=max(1, args.threads)
        )
        out = _envelope(args, doc, rep.to_json())
        return formats.jdump(out), 0 if rep.certified else 4

    if args.command == "spectrum":
        _need(kind, "complex", "spectrum")
        spec = spectral.eigen(spectral.graph_from_complex(obj), tol=args.tol)
        return formats.jdump(_envelope(args, doc, {"eigenvalues": spec.eigenvalues})), 0

    if args.command == "cheeger":
        _need(kind, "complex", "cheeger")
        graph = spectral.graph_from_complex(obj)
        rep = spectral.check_cheeger_inequalities(graph, tol=args.tol, cap=cap_bits)
        return formats.jdump(_envelope(args, doc, rep)), 0 if rep["ok"] else 4

    if args.command == "mix":
        _need(kind, "complex", "mix")
        rep = walks.verify_mixing(obj, args.level, tol=args.tol)
        return formats.jdump(_envelope(args, doc, rep.to_json())), 0 if rep.ok else 4

    if args.command == "cohomology":
        _need(kind, "complex", "cohomology")
        return formats.jdump(_envelope(args, doc, f2.spaces(obj).to_json())), 0

    if args.command == "expansion":
        _need(kind, "complex", "expansion")
        sp = f2.spaces(obj)
        levels = []
        for i in range(0, obj.d + 1):
            if i <= obj.d - 1:
                h = f2.coboundary_expansion(obj, i, cap_bits)
            else:
                h = None
            ht, cs = f2.cosystolic_expansion(obj, i, cap_bits)
            levels.append(
                {
                    "i": i,
                    "h": _inf_str(h),
                    "h_tilde": _inf_str(ht),
                    "cosyst": _inf_str(cs),
                    "dim_H": sp.dim_h(i),
                }
            )
        return formats.jdump(_envelope(args, doc, {"levels": levels})), 0

    if args.command == "minimality":
        _need(kind, "complex", "minimality")
        f = _cochain_from_args(obj, args.level, args.support)
        result = {
            "level": args.level,
            "support": [list(t) for t in f.support(obj)],
            "norm": f2.norm(obj, f),
            "distance_to_coboundaries": f2.distance_to_space(obj, f, "B", cap_bits),
            "minimal": f2.is_minimal(obj, f, cap_bits),
            "locally_minimal": f2.is_locally_minimal(obj, f, cap_bits),
        }
        return formats.jdump(_envelope(args, doc, result)), 0

    if args.command == "test-code":
        _need(kind, "complex", "test-code")
        f = _cochain_from_args(obj, args.level, args.support)
        rep = codes.cocycle_test(obj, args.level, f, seed=args.seed, trials=args.trials)
        try:
            eps = codes.testability_epsilon(obj, args.level)
            h = f2.coboundary_expansion(obj, args.level, cap_bits)
            extra = {"testability_epsilon": _inf_str(eps), "matches_h": eps == h}
        except HdxError:
            extra = {"testability_epsilon": None, "matches_h": None}
        result = {
            "level": args.level,
            "exact_rejection": rep["exact_rejection"],
            "empirical_rejection": rep["empirical_rejection"],
            "trials": rep["trials"],
            **extra,
        }
        return formats.jdump(_envelope(args, doc, result)), 0

    if args.command == "css":
        _need(kind, "complex", "css")
        code = codes.css_from_complex(obj)
        if args.distances:
            codes.css_distances(code, cap_bits)
        if args.export_checks:
            hx, hz = code.export_checks()
            with open(args.export_checks + ".hx.txt", "w") as fh:
                fh.write(hx)
            with open(args.export_checks + ".hz.txt", "w") as fh:
                fh.write(hz)
        return formats.jdump(_envelope(args, doc, code.to_json())), 0

    if args.command == "matroid-verify":
        _need(kind, "matroid", "matroid-verify")
        rep = matroids.verify_axioms(obj)
        return formats.jdump(_envelope(args, doc, rep)), 0 if rep["ok"] else 4

    if args.command == "matroid-sample":
        _need(kind, "matroid", "matroid-sample")
        start = (
            _elements(args.start)
            if args.start
            else matroids.bases(obj)[0]
        )
        base = matroids.sample_base(obj, start, args.steps, args.seed)
        result = {
            "start": list(start),
            "steps": args.steps,
            "seed": args.seed,
            "base": list(base),
        }
        return formats.jdump(_envelope(args, doc, result)), 0

    if args.command == "matroid-count":
        _need(kind, "matroid", "matroid-count")
        return formats.jdump(_envelope(args, doc, {"bases": matroids.count_bases(obj)})), 0

    if args.command == "tv-curve":
        _need(kind, "complex", "tv-curve")
        start = parse_face(obj, args.start) if args.start else obj.level(args.level)[0]
        curve = walks.exact_tv_curve(obj, args.level, args.kind, start, args.max_steps)
        if args.format == "json":
            result = {
                "level": args.level,
                "kind": args.kind,
                "start": list(obj.label_face(start)),
                "curve": [[t, float(v)] for t, v in curve],
            }
            return formats.jdump(_envelope(args, doc, result)), 0
        lines = ["step,tv"]
        for t, v in curve:
            lines.append(f"{t},{float(v):.12g}")
        return "\n".join(lines) + "\n", 0

    raise ParseError(f"unknown command {args.command!r}")


def main() -> None:
    try:
        sys.exit(run())
    except HdxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(exc.exit_code)


if __name__ == "__main__":
    main()
