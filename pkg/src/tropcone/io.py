"""JSON encodings.  Indices are 1-based and rationals are strings such as ``"7/2"``."""
from __future__ import annotations

import hashlib
import json
from typing import Any

from .canonical import ApexEntry, ApexStructure, Component
from .cells import VertexClassification
from .cone import Cone, TypeVector
from .errors import TropconeError
from .halfspace import GeneralHalfSpace, HalfSpace
from .hypergraph import DirectedHypergraph
from .semiring import BOTTOM, DimensionError, Point, format_scalar, parse_scalar


class ParseError(TropconeError, ValueError):
    """Malformed input file; the message names the offending field."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def sha256_file(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def encode_scalar(x) -> str:
    return format_scalar(x)


def decode_scalar(value: Any, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: {value!r} is not exact; write integers or 'p/q' strings")
    if isinstance(value, int):
        return parse_scalar(str(value))
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
    raise ParseError(f"{where}: expected a rational, got {value!r}")


def encode_vector(v) -> list:
    return [encode_scalar(x) for x in v]


def decode_vector(value: Any, where: str, n: int = None) -> tuple:
    if isinstance(value, str):
        value = [s for s in value.split(",")]
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list of rationals")
    if n is not None and len(value) != n:
        raise ParseError(f"{where}: expected {n} coordinates, got {len(value)}")
    return tuple(decode_scalar(x, f"{where}[{k + 1}]") for k, x in enumerate(value))


def decode_point(value: Any, where: str, n: int = None) -> Point:
    v = decode_vector(value, where, n)
    try:
        return Point(v)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def encode_set(s) -> list:
    return sorted(i + 1 for i in s)


def decode_set(value: Any, where: str, n: int) -> frozenset:
    if not isinstance(value, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in value):
        raise ParseError(f"{where}: expected a list of 1-based indices")
    for i in value:
        if not 1 <= i <= n:
            raise ParseError(f"{where}: index {i} outside 1..{n}")
    return frozenset(i - 1 for i in value)


# cones

def encode_cone(c: Cone) -> dict:
    return {"dim": c.n, "generators": [encode_vector(v) for v in c.generators]}


def decode_cone(data: Any) -> Cone:
    if not isinstance(data, dict):
        raise ParseError("cone file: top level must be an object with 'dim' and 'generators'")
    if "generators" not in data:
        raise ParseError("cone file: missing field 'generators'")
    rows = data["generators"]
    if not isinstance(rows, list) or not rows:
        raise ParseError("cone file: 'generators' must be a non-empty list")
    n = data.get("dim")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 2):
        raise ParseError("cone file: 'dim' must be an integer >= 2")
    if n is None:
        n = len(rows[0]) if isinstance(rows[0], list) else None
    gens = [decode_vector(row, f"generators row {r + 1}", n) for r, row in enumerate(rows)]
    try:
        return Cone(gens)
    except (ValueError, DimensionError) as exc:
        raise ParseError(f"cone file: {exc}") from None


def load_cone(path: str) -> Cone:
    try:
        return decode_cone(load_json(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


# half-spaces

def encode_halfspace(h) -> dict:
    if isinstance(h, HalfSpace):
        return {"apex": encode_vector(h.apex), "sectors": encode_set(h.sectors)}
    return {
        "I": encode_set(h.lhs),
        "J": encode_set(h.rhs),
        "alpha": {str(i + 1): encode_scalar(h.alpha[i]) for i in sorted(h.lhs | h.rhs)},
        "dim": h.n,
    }


def decode_halfspace(data: Any, where: str = "half-space", n: int = None):
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object")
    if "apex" in data:
        apex = decode_point(data["apex"], f"{where}.apex", n)
        dim = len(apex)
        if "sectors" not in data:
            raise ParseError(f"{where}: missing field 'sectors'")
        sectors = decode_set(data["sectors"], f"{where}.sectors", dim)
        try:
            return HalfSpace(apex, sectors)
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
    for key in ("I", "J", "alpha"):
        if key not in data:
            raise ParseError(f"{where}: needs either 'apex'/'sectors' or 'I'/'J'/'alpha'; missing '{key}'")
    dim = data.get("dim", n)
    if dim is None:
        raise ParseError(f"{where}: general half-spaces need 'dim' (or a cone to take it from)")
    alpha_raw = data["alpha"]
    if isinstance(alpha_raw, list):
        alpha = {k: decode_scalar(v, f"{where}.alpha[{k + 1}]") for k, v in enumerate(alpha_raw)}
        alpha = {k: v for k, v in alpha.items() if v != BOTTOM}
    elif isinstance(alpha_raw, dict):
        alpha = {}
        for key, v in alpha_raw.items():
            try:
                idx = int(key)
            except ValueError:
                raise ParseError(f"{where}.alpha: key {key!r} is not an index") from None
            alpha[idx - 1] = decode_scalar(v, f"{where}.alpha[{key}]")
    else:
        raise ParseError(f"{where}.alpha: expected an object or a list")
    I = decode_set(data["I"], f"{where}.I", dim)
    J = decode_set(data["J"], f"{where}.J", dim)
    try:
        return GeneralHalfSpace(dim, I, J, alpha)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def decode_halfspace_list(data: Any, n: int = None) -> list:
    if isinstance(data, dict) and "halfspaces" not in data:
        return [decode_halfspace(data, "half-space", n)]
    items = data["halfspaces"] if isinstance(data, dict) else data
    if not isinstance(items, list):
        raise ParseError("half-space file: expected a list under 'halfspaces'")
    return [decode_halfspace(item, f"halfspaces[{k + 1}]", n) for k, item in enumerate(items)]


def load_halfspaces(path: str, n: int = None) -> list:
    try:
        return decode_halfspace_list(load_json(path), n)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


# reports

def encode_hypergraph(g: DirectedHypergraph, origins=None) -> dict:
    arcs = []
    for k, (t, h) in enumerate(g.arcs):
        arc = {"T": encode_set(t), "H": encode_set(h)}
        if origins is not None:
            arc["origin"] = origins[k] + 1
        arcs.append(arc)
    return {"n": g.n, "arcs": arcs}


def decode_hypergraph(data: dict) -> tuple:
    n = data["n"]
    arcs = [(decode_set(a["T"], "arc.T", n), decode_set(a["H"], "arc.H", n)) for a in data["arcs"]]
    origins = [a["origin"] - 1 for a in data["arcs"]] if all("origin" in a for a in data["arcs"]) else None
    return DirectedHypergraph(n, arcs), origins


def encode_type(t: TypeVector) -> list:
    return t.one_based()


def encode_structure(s: ApexStructure) -> dict:
    return {
        "apices": [
            {
                "apex": encode_vector(e.apex),
                "components": [
                    {
                        "members": [encode_set(m) for m in comp.members],
                        "principal": encode_set(comp.principal),
                        "representative": encode_set(comp.representative),
                    }
                    for comp in e.components
                ],
            }
            for e in s.apices
        ]
    }


def decode_structure(data: dict, n: int) -> ApexStructure:
    entries = []
    for k, e in enumerate(data["apices"]):
        comps = tuple(
            Component(
                tuple(decode_set(m, "members", n) for m in comp["members"]),
                decode_set(comp["principal"], "principal", n),
                decode_set(comp["representative"], "representative", n),
            )
            for comp in e["components"]
        )
        entries.append(ApexEntry(decode_point(e["apex"], f"apices[{k + 1}].apex", n), comps))
    return ApexStructure(tuple(entries))


def encode_classification(v: VertexClassification) -> dict:
    return {
        "point": encode_vector(v.point),
        "is_vertex": v.is_vertex,
        "witnesses": [{"I": encode_set(w.I), "j": w.j + 1, "C4": w.C4, "C5": w.C5} for w in v.witnesses],
    }
