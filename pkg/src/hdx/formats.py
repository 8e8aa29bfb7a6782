"""JSON formats and deterministic serialization.

Rationals travel as exact "p/q" strings (plain integers allowed on input),
floats are printed to 12 significant digits, and serialization is canonical:
identical objects yield identical bytes, and generate -> parse -> serialize
is idempotent.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .complexes import WeightedComplex, from_top_faces
from .errors import ParseError
from .matroids import (
    ExplicitMatroid,
    GraphicMatroid,
    LinearF2Matroid,
    Matroid,
    UniformMatroid,
)


def frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_frac(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"weights must be exact rationals, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {x!r}") from exc
    raise ParseError(f"bad rational {x!r}")


def _clean(obj: Any) -> Any:
    """Canonical JSON-ready form: fractions to strings, floats rounded."""
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, float):
        if obj != obj or obj in (float("inf"), float("-inf")):
            return {"sentinel": repr(obj)}
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def jdump(obj: Any) -> str:
    return json.dumps(_clean(obj), indent=2) + "\n"


def digest(obj: Any) -> str:
    return hashlib.sha256(jdump(obj).encode()).hexdigest()


# -- complexes ---------------------------------------------------------------


def complex_to_json(X: WeightedComplex) -> dict:
    uniform = len(set(X.pi.values())) == 1
    tops = []
    for t in X.tops:
        entry: dict[str, Any] = {"face": list(X.label_face(t))}
        if not uniform:
            entry["weight"] = frac_str(X.pi[t])
        tops.append(entry)
    return {"vertices": list(X.labels), "tops": tops}


def parse_complex(data: dict) -> WeightedComplex:
    if "vertices" not in data or "tops" not in data:
        raise ParseError("complex JSON needs 'vertices' and 'tops'")
    labels = list(data["vertices"])
    if len(set(map(repr, labels))) != len(labels):
        raise ParseError("duplicate vertices")
    tops = []
    weights = []
    with_weight = 0
    for entry in data["tops"]:
        if not isinstance(entry, dict) or "face" not in entry:
            raise ParseError(f"bad top entry {entry!r}")
        tops.append(tuple(entry["face"]))
        if "weight" in entry:
            with_weight += 1
            weights.append(parse_frac(entry["weight"]))
    if with_weight == 0:
        return from_top_faces(tops, labels=labels)
    if with_weight != len(tops):
        raise ParseError("either all top weights or none")
    return from_top_faces(tops, weights, labels=labels)


# -- matroids ----------------------------------------------------------------


def matroid_to_json(M: Matroid) -> dict:
    if isinstance(M, UniformMatroid):
        return {"kind": "uniform", "n": M.n, "r": M.r}
    if isinstance(M, GraphicMatroid):
        return {
            "kind": "graphic",
            "n_vertices": M.n_vertices,
            "edges": [list(e) for e in M.edges],
        }
    if isinstance(M, LinearF2Matroid):
        height = max((c.bit_length() for c in M.columns), default=1) or 1
        return {
            "kind": "linear_f2",
            "columns": [[c >> i & 1 for i in range(height)] for c in M.columns],
        }
    if isinstance(M, ExplicitMatroid):
        return {
            "kind": "explicit",
            "ground": M.n,
            "independent": sorted(sorted(s) for s in M.independent),
        }
    raise ParseError(f"cannot serialize matroid kind {M.kind!r}")


def parse_matroid(data: dict) -> Matroid:
    kind = data.get("kind")
    try:
        if kind == "uniform":
            return UniformMatroid(int(data["n"]), int(data["r"]))
        if kind == "graphic":
            return GraphicMatroid(
                int(data["n_vertices"]), [tuple(e) for e in data["edges"]]
            )
        if kind == "linear_f2":
            cols = []
            for vec in data["columns"]:
                cols.append(sum(int(b) << i for i, b in enumerate(vec)))
            return LinearF2Matroid(cols)
        if kind == "explicit":
            return ExplicitMatroid(int(data["ground"]), data["independent"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matroid JSON: {exc}") from exc
    raise ParseError(f"unknown matroid kind {kind!r}")


def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def parse_input(data: dict):
    """Dispatch a JSON document to ('complex', X) or ('matroid', M)."""
    if "tops" in data:
        return "complex", parse_complex(data)
    if "kind" in data:
        return "matroid", parse_matroid(data)
    raise ParseError("unrecognized input document")
