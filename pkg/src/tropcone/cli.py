"""Command-line front end.

Every command prints (or writes with ``-o``) one JSON report with a ``meta``
block.  Exit codes: 0 success, 1 usage or parse error, 2 failed self-check,
3 precondition violation.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .canonical import USER, Representation, canonical_structure, minimize, verify_theorem_main
from .cells import classify_vertex, certify_generic_extremities, perturb_generic
from .cone import Cone, cell_dimension, conditions_from_type, contains, project, type_of
from .errors import CandidateCapExceeded, PreconditionError, VerificationError
from .halfspace import HalfSpace, contains_cone, is_minimal, saturation
from .hypergraph import redundancy_certificate, replay_trace, tangent_hypergraph, witness_point
from .io import (
    ParseError,
    decode_cone,
    decode_halfspace,
    decode_point,
    decode_set,
    decode_structure,
    decode_vector,
    dumps,
    encode_classification,
    encode_cone,
    encode_halfspace,
    encode_hypergraph,
    encode_set,
    encode_structure,
    encode_type,
    encode_vector,
    load_cone,
    load_halfspaces,
    load_json,
    sha256_file,
)
from .plotting import plot_data, render
from .polar import DEFAULT_CANDIDATE_CAP, PolarVector, enumerate_polar_extremes, in_polar, initial_representation_with_sources, is_extreme_polar
from .sampling import falsify_representation
from .semiring import DimensionError, Point, format_scalar, parse_scalar

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_PRECONDITION = 0, 1, 2, 3

SATURATION_POLICY = "half-spaces are taken with apices in the cone; saturate others first"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def candidate_cap() -> int:
    raw = os.environ.get("TROPCONE_CANDIDATE_CAP")
    if raw is None:
        return DEFAULT_CANDIDATE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ParseError(f"TROPCONE_CANDIDATE_CAP={raw!r} is not an integer") from None
    if cap < 1:
        raise ParseError("TROPCONE_CANDIDATE_CAP must be positive")
    return cap


def _meta(command: str, inputs: dict, seed=None) -> dict:
    return {
        "command": command,
        "inputs": {name: sha256_file(path) for name, path in inputs.items() if path},
        "seed": seed,
        "version": __version__,
    }


def _point_arg(text: str, n: int) -> Point:
    try:
        return decode_point([s.strip() for s in text.split(",")], "--point", n)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"--point: {exc}") from None


def _rational(text: str) -> Fraction:
    try:
        value = parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return value


# commands

def cmd_represent(args) -> tuple:
    c = load_cone(args.cone)
    entries = initial_representation_with_sources(c, candidate_cap())
    rows = []
    for e in entries:
        row = encode_halfspace(e.halfspace)
        row["sources"] = [{"j": pv.j + 1, "u": encode_vector(pv.u)} for pv in e.sources]
        rows.append(row)
    report = {"meta": _meta("represent", {"cone": args.cone}), "cone": encode_cone(c), "halfspaces": rows}
    return report, EXIT_OK


def _user_representation(c: Cone, path: str, seed) -> Representation:
    hs = load_halfspaces(path, c.n)
    for k, h in enumerate(hs):
        if not isinstance(h, HalfSpace):
            raise PreconditionError(f"half-space {k + 1} is given in general form; run 'saturate' to obtain H(a, I) with apex in the cone")
        if not contains(c, h.apex):
            raise PreconditionError(f"half-space {k + 1} {h!r} has its apex outside the cone; run 'saturate' first")
    rep = Representation(c, hs, USER)
    bad = falsify_representation(c, hs, samples=1000, seed=0 if seed is None else seed)
    if bad is not None:
        raise PreconditionError(f"the half-spaces do not cut out the cone: {Point(bad)!r} satisfies all of them but lies outside")
    return rep


def cmd_minimize(args) -> tuple:
    c = load_cone(args.cone)
    if args.halfspaces:
        rep = _user_representation(c, args.halfspaces, args.seed)
    else:
        rep = Representation(c, (e.halfspace for e in initial_representation_with_sources(c, candidate_cap())))
    m = minimize(rep, seed=args.seed)
    s = canonical_structure(m)
    ok = verify_theorem_main(m, s)
    hs = list(m.halfspaces)
    rows = []
    for k, h in enumerate(hs):
        row = encode_halfspace(h)
        row["witness"] = encode_vector(witness_point(h, hs[:k] + hs[k + 1:]))
        rows.append(row)
    meta = _meta("minimize", {"cone": args.cone, "halfspaces": args.halfspaces}, args.seed)
    meta["policy"] = SATURATION_POLICY
    meta["provenance"] = rep.provenance
    report = {
        "meta": meta,
        "cone": encode_cone(c),
        "input_count": len(rep),
        "halfspaces": rows,
        "canonical": encode_structure(s),
        "verified": ok,
    }
    return report, EXIT_OK if ok else EXIT_VERIFY


def cmd_saturate(args) -> tuple:
    c = load_cone(args.cone)
    rows = []
    for g in load_halfspaces(args.halfspaces, c.n):
        sat = saturation(g, c)
        row = encode_halfspace(sat.halfspace)
        row.update({
            "input": encode_halfspace(g),
            "beta": encode_vector(sat.beta),
            "lambdas": encode_vector(sat.lambdas),
            "minimal": is_minimal(sat.halfspace, c),
        })
        rows.append(row)
    report = {"meta": _meta("saturate", {"cone": args.cone, "halfspaces": args.halfspaces}), "cone": encode_cone(c), "halfspaces": rows}
    return report, EXIT_OK


def cmd_redundant(args) -> tuple:
    tested = load_halfspaces(args.halfspace)
    if len(tested) != 1 or not isinstance(tested[0], HalfSpace):
        raise PreconditionError("the tested file must hold exactly one half-space in apex/sectors form")
    h = tested[0]
    gamma = load_halfspaces(args.against, h.n)
    cert = redundancy_certificate(h, gamma)
    g, origins = tangent_hypergraph(gamma, h.apex)
    report = {
        "meta": _meta("redundant", {"halfspace": args.halfspace, "against": args.against}),
        "halfspace": encode_halfspace(h),
        "against": [encode_halfspace(m) for m in gamma],
        "redundant": cert.redundant,
        "closure": encode_set(cert.closure),
        "trace": [{"T": encode_set(t), "H": encode_set(hd), "origin": o + 1} for t, hd, o in cert.trace],
        "witness": encode_vector(cert.witness) if cert.witness is not None else None,
        "hypergraph": encode_hypergraph(g, origins),
    }
    return report, EXIT_OK


def cmd_type(args) -> tuple:
    c = load_cone(args.cone)
    x = _point_arg(args.point, c.n)
    report = {
        "meta": _meta("type", {"cone": args.cone}),
        "cone": encode_cone(c),
        "point": encode_vector(x),
        "type": encode_type(type_of(c, x)),
        "cell_dimension": cell_dimension(c, x),
        "in_cone": contains(c, x),
    }
    return report, EXIT_OK


def cmd_classify(args) -> tuple:
    c = load_cone(args.cone)
    x = _point_arg(args.point, c.n)
    report = {"meta": _meta("classify", {"cone": args.cone}), "cone": encode_cone(c), "type": encode_type(type_of(c, x))}
    report.update(encode_classification(classify_vertex(c, x)))
    return report, EXIT_OK


def cmd_perturb(args) -> tuple:
    c = load_cone(args.cone)
    ce = perturb_generic(c, args.eps)
    report = {"meta": _meta("perturb", {"cone": args.cone}), "source": encode_cone(c), "eps": format_scalar(args.eps)}
    report.update(encode_cone(ce))
    report["certified_generic"] = certify_generic_extremities(ce, args.eps)
    return report, EXIT_OK


def cmd_member(args) -> tuple:
    if bool(args.cone) == bool(args.halfspace):
        raise ParseError("give exactly one of --cone or --halfspace")
    if args.cone:
        c = load_cone(args.cone)
        x = _point_arg(args.point, c.n)
        proj, lambdas = project(c, x)
        report = {
            "meta": _meta("member", {"cone": args.cone}),
            "cone": encode_cone(c),
            "point": encode_vector(x),
            "member": tuple(proj) == tuple(x),
            "projection": encode_vector(proj),
            "lambdas": encode_vector(lambdas),
        }
    else:
        hs = load_halfspaces(args.halfspace)
        if len(hs) != 1:
            raise ParseError("--halfspace file must hold exactly one half-space")
        h = hs[0]
        x = _point_arg(args.point, h.n)
        left, right = h.sides(x)
        report = {
            "meta": _meta("member", {"halfspace": args.halfspace}),
            "halfspace": encode_halfspace(h),
            "point": encode_vector(x),
            "member": left >= right,
            "sides": [format_scalar(left), format_scalar(right)],
        }
    return report, EXIT_OK


def cmd_polar(args) -> tuple:
    c = load_cone(args.cone)
    if not 1 <= args.j <= c.n:
        raise ParseError(f"--j must lie in 1..{c.n}")
    rows = []
    for pv in enumerate_polar_extremes(c, args.j - 1, candidate_cap()):
        g = pv.halfspace()
        rows.append({"u": encode_vector(pv.u), "halfspace": encode_halfspace(g), "saturated": encode_halfspace(saturation(g, c).halfspace)})
    report = {"meta": _meta("polar", {"cone": args.cone}), "cone": encode_cone(c), "j": args.j, "extremes": rows}
    return report, EXIT_OK


def _encode_layers(layers: dict) -> dict:
    def pt(p):
        return [format_scalar(Fraction(v)) for v in p]

    return {
        "generators": [pt(p) for p in layers["generators"]],
        "cone_segments": [[pt(p) for p in seg] for seg in layers["cone_segments"]],
        "apices": [pt(p) for p in layers["apices"]],
        "halfspaces": [
            {
                "apex": pt(h["apex"]),
                "sectors": h["sectors"],
                "rays": [{"from": pt(r["from"]), "direction": list(r["direction"]), "pair": [i + 1 for i in r["pair"]]} for r in h["rays"]],
            }
            for h in layers["halfspaces"]
        ],
    }


def cmd_plot2d(args) -> tuple:
    c = load_cone(args.cone)
    hs = load_halfspaces(args.halfspaces, c.n) if args.halfspaces else []
    layers = plot_data(c, hs)
    report = {
        "meta": _meta("plot2d", {"cone": args.cone, "halfspaces": args.halfspaces}),
        "cone": encode_cone(c),
        "halfspaces": [encode_halfspace(h) for h in hs],
        "chart": "(x2 - x1, x3 - x1)",
        "layers": _encode_layers(layers),
    }
    if args.figure:
        render(layers, args.figure)
        report["figure"] = os.path.basename(args.figure)
    return report, EXIT_OK


# verification of reports

def _verify_represent(r: dict, fail) -> None:
    c = decode_cone(r["cone"])
    for k, row in enumerate(r["halfspaces"]):
        h = decode_halfspace(row, f"halfspaces[{k + 1}]", c.n)
        if not contains_cone(h, c):
            fail(f"half-space {k + 1} misses a generator")
        if not contains(c, h.apex):
            fail(f"half-space {k + 1} has its apex outside the cone")
        for src in row.get("sources", []):
            j = src["j"] - 1
            u = decode_vector(src["u"], "u", c.n)
            if not in_polar(c, j, u) or not is_extreme_polar(c, j, u):
                fail(f"half-space {k + 1}: source vector is not an extreme polar vector")
            elif saturation(PolarVector(j, u).halfspace(), c).halfspace != h:
                fail(f"half-space {k + 1}: source does not saturate to it")


def _verify_minimize(r: dict, fail) -> None:
    c = decode_cone(r["cone"])
    hs = [decode_halfspace(row, f"halfspaces[{k + 1}]", c.n) for k, row in enumerate(r["halfspaces"])]
    for k, (h, row) in enumerate(zip(hs, r["halfspaces"])):
        if not contains_cone(h, c) or not contains(c, h.apex):
            fail(f"half-space {k + 1} is not a half-space of the cone with apex in it")
        x = decode_vector(row["witness"], "witness", c.n)
        if h.member(x):
            fail(f"witness of half-space {k + 1} lies inside it")
        if not all(m.member(x) for m in hs[:k] + hs[k + 1:]):
            fail(f"witness of half-space {k + 1} leaves another member")
    s = decode_structure(r["canonical"], c.n)
    rep = Representation(c, hs)
    if not verify_theorem_main(rep, s):
        fail("representation does not pick one member per exchange class")
    if encode_structure(canonical_structure(rep)) != r["canonical"]:
        fail("canonical structure does not recompute")


def _verify_saturate(r: dict, fail) -> None:
    c = decode_cone(r["cone"])
    for k, row in enumerate(r["halfspaces"]):
        g = decode_halfspace(row["input"], "input", c.n)
        h = decode_halfspace(row, f"halfspaces[{k + 1}]", c.n)
        if saturation(g, c).halfspace != h:
            fail(f"entry {k + 1} does not recompute")
        if not contains_cone(h, c) or not contains(c, h.apex):
            fail(f"entry {k + 1}: saturated half-space is not tight on the cone")


def _verify_redundant(r: dict, fail) -> None:
    h = decode_halfspace(r["halfspace"])
    gamma = [decode_halfspace(m, "against", h.n) for m in r["against"]]
    if r["redundant"]:
        trace = [(decode_set(a["T"], "T", h.n), decode_set(a["H"], "H", h.n), a["origin"] - 1) for a in r["trace"]]
        if not replay_trace(h, gamma, trace):
            fail("redundancy trace does not replay")
    else:
        x = decode_vector(r["witness"], "witness", h.n)
        if h.member(x):
            fail("witness lies inside the tested half-space")
        if not all(m.member(x) for m in gamma):
            fail("witness leaves some member of the list")


def _verify_type(r: dict, fail) -> None:
    c = decode_cone(r["cone"])
    x = decode_point(r["point"], "point", c.n)
    if encode_type(type_of(c, x)) != r["type"]:
        fail("type does not recompute")
    if "cell_dimension" in r and cell_dimension(c, x) != r["cell_dimension"]:
        fail("cell dimension does not recompute")


def _verify_classify(r: dict, fail) -> None:
    _verify_type(r, fail)
    c = decode_cone(r["cone"])
    x = decode_point(r["point"], "point", c.n)
    t = type_of(c, x)
    if r["is_vertex"] != (cell_dimension(c, x) == 0):
        fail("vertex flag does not match the cell dimension")
    for w in r["witnesses"]:
        cond = conditions_from_type(t, c.p, decode_set(w["I"], "I", c.n), w["j"] - 1)
        if not (cond.C1 and cond.C2 and cond.C4) or cond.C5 != w["C5"]:
            fail(f"witness ({w['I']}, {w['j']}) fails its conditions")


def _verify_member(r: dict, fail) -> None:
    if "cone" in r:
        c = decode_cone(r["cone"])
        x = decode_vector(r["point"], "point", c.n)
        if contains(c, x) != r["member"]:
            fail("membership does not recompute")
    else:
        h = decode_halfspace(r["halfspace"])
        x = decode_vector(r["point"], "point", h.n)
        if h.member(x) != r["member"]:
            fail("membership does not recompute")


def _verify_polar(r: dict, fail) -> None:
    c = decode_cone(r["cone"])
    j = r["j"] - 1
    for row in r["extremes"]:
        u = decode_vector(row["u"], "u", c.n)
        if not in_polar(c, j, u) or not is_extreme_polar(c, j, u):
            fail(f"{row['u']} is not an extreme polar vector")


def _verify_perturb(r: dict, fail) -> None:
    c = decode_cone(r["source"])
    eps = parse_scalar(r["eps"])
    if perturb_generic(c, eps) != decode_cone(r):
        fail("perturbed generators do not recompute")


def _verify_plot2d(r: dict, fail) -> None:
    c = decode_cone(r["cone"])
    hs = [decode_halfspace(h, "halfspaces", c.n) for h in r["halfspaces"]]
    if _encode_layers(plot_data(c, hs)) != r["layers"]:
        fail("plot data does not recompute")


VERIFIERS = {
    "represent": _verify_represent,
    "minimize": _verify_minimize,
    "saturate": _verify_saturate,
    "redundant": _verify_redundant,
    "type": _verify_type,
    "classify": _verify_classify,
    "member": _verify_member,
    "polar": _verify_polar,
    "perturb": _verify_perturb,
    "plot2d": _verify_plot2d,
}


def verify_report(report: dict) -> list:
    """Re-check the certificates of a report; returns the list of failures."""
    if not isinstance(report, dict) or "meta" not in report:
        raise ParseError("report has no 'meta' block")
    command = report["meta"].get("command")
    if command not in VERIFIERS:
        raise ParseError(f"reports of command {command!r} cannot be verified")
    failures = []
    try:
        VERIFIERS[command](report, failures.append)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"report is missing or mangles field {exc}") from None
    except (PreconditionError, DimensionError, ValueError) as exc:
        failures.append(f"re-check raised: {exc}")
    return failures


def cmd_verify(args) -> tuple:
    report = load_json(args.report)
    failures = verify_report(report)
    out = {
        "meta": _meta("verify", {"report": args.report}),
        "checked": report["meta"]["command"],
        "verified": not failures,
        "failures": failures,
    }
    return out, EXIT_OK if not failures else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropcone", description="Exact half-space representations of tropical polyhedral cones.")
    p.add_argument("--version", action="version", version=f"tropcone {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-o", "--output", help="write the JSON report here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    sp = add("represent", cmd_represent, "initial half-space representation from the polar extremes")
    sp.add_argument("cone")
    sp = add("minimize", cmd_minimize, "non-redundant representation and canonical structure")
    sp.add_argument("cone")
    sp.add_argument("--halfspaces", help="start from these half-spaces instead of the initial representation")
    sp.add_argument("--seed", type=int, help="shuffle the elimination order with this seed")
    sp = add("saturate", cmd_saturate, "saturate containing half-spaces onto the cone")
    sp.add_argument("cone")
    sp.add_argument("halfspaces")
    sp = add("redundant", cmd_redundant, "test a half-space for redundancy against a list")
    sp.add_argument("halfspace")
    sp.add_argument("against")
    sp = add("type", cmd_type, "type and cell dimension of a point")
    sp.add_argument("cone")
    sp.add_argument("--point", required=True, help="comma-separated rationals, e.g. 0,8,3")
    sp = add("classify", cmd_classify, "(I, j)-vertex witnesses of a point of the cone")
    sp.add_argument("cone")
    sp.add_argument("--point", required=True)
    sp = add("perturb", cmd_perturb, "replace each generator by a Hilbert ball of radius eps")
    sp.add_argument("cone")
    sp.add_argument("--eps", type=_rational, default=Fraction(1, 2))
    sp = add("member", cmd_member, "membership of a point in a cone or a half-space")
    sp.add_argument("--cone")
    sp.add_argument("--halfspace")
    sp.add_argument("--point", required=True)
    sp = add("polar", cmd_polar, "non-trivial extreme vectors of the j-th polar")
    sp.add_argument("cone")
    sp.add_argument("--j", type=int, required=True)
    sp = add("plot2d", cmd_plot2d, "planar plot data for a cone in dimension 3")
    sp.add_argument("cone")
    sp.add_argument("--halfspaces")
    sp.add_argument("--figure", help="also render a PNG here")
    sp = add("verify", cmd_verify, "re-check the certificates in a report")
    sp.add_argument("report")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except ParseError as exc:
        print(f"tropcone: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"tropcone: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (PreconditionError, CandidateCapExceeded, DimensionError) as exc:
        print(f"tropcone: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = dumps(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
