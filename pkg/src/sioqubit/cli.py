"""Command-line front end.

Subcommands: validate, decompose, relaxing, evolve, convert, synthesize,
selftest.  Channel documents are JSON with exactly one of the keys
"kraus", "builtin" or "typical_form"; numbers are emitted with 17
significant digits and keys in a fixed order, so identical inputs produce
byte-identical output.

Exit codes: 0 success, 1 domain/validation failure, 2 parse/usage failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import checks
from .channel import (
    BUILTIN_NAMES,
    ChannelError,
    ClassificationError,
    KrausChannel,
    TransferParams,
    builtin,
    classify,
    transfer_params,
)
from .convertibility import RegionKind, convertible_pauli_sio, convertible_sio, image_region
from .linalg import (
    InvalidStateError,
    bloch_to_density,
    complex_from_json,
    complex_to_json,
    mat2_from_json,
)
from .semigroup import power_closed_form, relaxing_report, trajectory
from .typical_form import (
    InfeasibleError,
    NotApplicableError,
    TypicalForm,
    abcd,
    decompose_theorem1,
    decompose_theorem3,
    synthesize,
    to_kraus,
)

DEFAULT_SEED = 42


class ParseFailure(Exception):
    """Malformed input document or arguments (exit code 2)."""


class DomainFailure(Exception):
    """Well-formed input that violates a library invariant (exit code 1)."""


# ---------------------------------------------------------------------------
# deterministic JSON output

def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("non-finite value in output")
    s = f"{x:.17g}"
    return s


def dump_json(obj) -> str:
    """JSON serialization with .17g floats and insertion-ordered keys."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {dump_json(v)}"
                          for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dump_json(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj)}")


# ---------------------------------------------------------------------------
# input parsing

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseFailure(f"cannot read {path}: {exc}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseFailure(f"malformed JSON: {exc}") from exc


def parse_typical_form(body) -> TypicalForm:
    try:
        a = [float(x) for x in body["a"]]
        if len(a) != 4:
            raise ParseFailure("typical_form.a must have four entries")
        b1 = complex_from_json(body["b1"])
        b2 = complex_from_json(body["b2"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseFailure(f"bad typical_form document: {exc}") from exc
    try:
        return TypicalForm(a1=a[0], a2=a[1], a3=a[2], a4=a[3], b1=b1, b2=b2)
    except ValueError as exc:
        raise DomainFailure(str(exc)) from exc


def parse_channel_document(doc) -> KrausChannel:
    """Build a channel from a JSON document with exactly one source key."""
    if not isinstance(doc, dict):
        raise ParseFailure("channel document must be a JSON object")
    sources = [k for k in ("kraus", "builtin", "typical_form") if k in doc]
    if len(sources) != 1:
        raise ParseFailure(
            "channel document needs exactly one of 'kraus', 'builtin', "
            f"'typical_form' (got {sources or 'none'})")
    key = sources[0]
    if key == "kraus":
        try:
            mats = [mat2_from_json(m) for m in doc["kraus"]]
        except (TypeError, ValueError) as exc:
            raise ParseFailure(f"bad kraus document: {exc}") from exc
        try:
            return KrausChannel(mats)
        except ChannelError as exc:
            raise DomainFailure(str(exc)) from exc
    if key == "typical_form":
        tf = parse_typical_form(doc["typical_form"])
        return to_kraus(tf)
    body = doc["builtin"]
    if not isinstance(body, dict) or "name" not in body or "q" not in body:
        raise ParseFailure("builtin document needs 'name' and 'q'")
    name = body["name"]
    if name not in BUILTIN_NAMES:
        raise ParseFailure(f"unknown builtin channel {name!r}")
    try:
        q = float(body["q"])
        theta = float(body["theta"]) if "theta" in body else None
    except (TypeError, ValueError) as exc:
        raise ParseFailure(f"bad builtin parameters: {exc}") from exc
    try:
        return builtin(name, q, theta)
    except ValueError as exc:
        raise DomainFailure(str(exc)) from exc


def _parse_vec(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseFailure(f"expected rx,ry,rz triple, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise ParseFailure(f"bad vector {text!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands

def _transfer_dict(tp: TransferParams) -> dict:
    return {"a": tp.a, "b": tp.b, "c": tp.c, "d": tp.d, "z": tp.z}


def cmd_validate(args) -> tuple[str, int]:
    ch = parse_channel_document(_load_json(args.input))
    cls = classify(ch)
    out = {
        "trace_preserving": cls.trace_preserving,
        "incoherent": cls.incoherent,
        "strictly_incoherent": cls.strictly_incoherent,
        "bistochastic": cls.bistochastic,
    }
    if cls.bistochastic and cls.strictly_incoherent:
        out["transfer_params"] = _transfer_dict(transfer_params(ch))
    return dump_json(out) + "\n", 0


_BASIS_STATES = [
    bloch_to_density(v)
    for v in ([0, 0, 1], [0, 0, -1], [1, 0, 0], [0, 1, 0])
]


def cmd_decompose(args) -> tuple[str, int]:
    ch = parse_channel_document(_load_json(args.input))
    try:
        tp = transfer_params(ch)
    except ClassificationError as exc:
        raise DomainFailure(str(exc)) from exc
    tf = _synthesize_checked(tp)
    if args.theorem == "t3":
        try:
            mix = decompose_theorem3(tf)
        except NotApplicableError as exc:
            raise DomainFailure(f"theorem 3 inapplicable: {exc}") from exc
    else:
        mix = decompose_theorem1(tf)
    from .channel import kraus_apply
    residual = max(np.abs(mix.apply(rho) - kraus_apply(ch, rho)).max()
                   for rho in _BASIS_STATES)
    return dump_json({"coefficients": mix.as_dict(),
                      "residual": float(residual)}) + "\n", 0


def _synthesize_checked(tp: TransferParams) -> TypicalForm:
    try:
        return synthesize(tp)
    except InfeasibleError as exc:
        raise DomainFailure(str(exc)) from exc


def cmd_relaxing(args) -> tuple[str, int]:
    ch = parse_channel_document(_load_json(args.input))
    try:
        rep = relaxing_report(transfer_params(ch))
    except ClassificationError as exc:
        raise DomainFailure(str(exc)) from exc
    out = {
        "lambda1": complex_to_json(rep.lambda1),
        "lambda2": complex_to_json(rep.lambda2),
        "mod1": rep.mod1,
        "mod2": rep.mod2,
        "z": rep.z,
        "b1b2_nonzero": rep.b1b2_nonzero,
        "relaxing": rep.relaxing,
        "case": rep.case.value,
    }
    return dump_json(out) + "\n", 0


def cmd_evolve(args) -> tuple[str, int]:
    ch = parse_channel_document(_load_json(args.input))
    v0 = _parse_vec(args.state)
    try:
        rho0 = bloch_to_density(v0)
        traj = trajectory(ch, rho0, args.steps)
    except (InvalidStateError, ValueError) as exc:
        raise DomainFailure(str(exc)) from exc
    if not args.closed_form:
        return traj.to_csv(), 0
    try:
        tp = transfer_params(ch)
    except ClassificationError as exc:
        raise DomainFailure(str(exc)) from exc
    lines = ["step,distance,rx,ry,rz,cf_rx,cf_ry,cf_rz,deviation"]
    from .linalg import density_to_bloch
    for k, (rho, dist) in enumerate(zip(traj.states, traj.distances)):
        r = density_to_bloch(rho)
        tpk = power_closed_form(tp, k)
        cf_xy = tpk.block() @ v0[:2]
        cf = np.array([cf_xy[0], cf_xy[1], tpk.z * v0[2]])
        dev = np.abs(r - cf).max()
        vals = [f"{x:.17g}" for x in (dist, *r, *cf, dev)]
        lines.append(f"{k}," + ",".join(vals))
    return "\n".join(lines) + "\n", 0


def cmd_convert(args) -> tuple[str, int]:
    r = _parse_vec(getattr(args, "from"))
    s = _parse_vec(args.to)
    try:
        if args.pauli_only:
            verdict = convertible_pauli_sio(r, s)
        else:
            verdict = convertible_sio(r, s)
        region = image_region(r, pauli_only=args.pauli_only)
    except InvalidStateError as exc:
        raise DomainFailure(str(exc)) from exc
    if region.kind is RegionKind.CYLINDER:
        reg = {"kind": "cylinder", "radius": region.params[0],
               "half_height": region.params[1]}
    else:
        reg = {"kind": "cuboid", "half_extents": list(region.params)}
    return dump_json({"convertible": verdict, "region": reg}) + "\n", 0


def cmd_synthesize(args) -> tuple[str, int]:
    doc = _load_json(args.input)
    if not isinstance(doc, dict):
        raise ParseFailure("transfer-parameter document must be a JSON object")
    try:
        tp = TransferParams(**{k: float(doc[k]) for k in "abcdz"})
    except KeyError as exc:
        raise ParseFailure(f"missing transfer parameter {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise DomainFailure(str(exc)) from exc
    tf = _synthesize_checked(tp)
    out = {"typical_form": {
        "a": [tf.a1, tf.a2, tf.a3, tf.a4],
        "b1": complex_to_json(tf.b1),
        "b2": complex_to_json(tf.b2),
    }}
    return dump_json(out) + "\n", 0


def cmd_selftest(args) -> tuple[str, int]:
    results = checks.run_all(seed=args.seed, samples=args.samples)
    lines = [f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.detail})"
             for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"selftest: {'PASS' if ok else 'FAIL'} "
                 f"({sum(r.passed for r in results)}/{len(results)} checks)")
    return "\n".join(lines) + "\n", 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sioqubit",
        description="Bistochastic strictly incoherent single-qubit channels: "
                    "validation, decomposition, relaxing dynamics, "
                    "convertibility.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", default="-",
                           help="JSON document path, or - for stdin")
        p.add_argument("--output", default="-",
                       help="output path, or - for stdout")

    p = sub.add_parser("validate", help="classify a channel document")
    add_io(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("decompose",
                       help="Pauli/phase-operator mixture coefficients")
    add_io(p)
    p.add_argument("--theorem", choices=("t1", "t3"), default="t1")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("relaxing", help="spectral relaxing verdict")
    add_io(p)
    p.set_defaults(func=cmd_relaxing)

    p = sub.add_parser("evolve", help="orbit of a state as CSV")
    add_io(p)
    p.add_argument("--state", required=True, help="initial Bloch rx,ry,rz")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--closed-form", action="store_true",
                   help="add closed-form prediction and deviation columns")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("convert", help="Bloch-vector convertibility verdict")
    add_io(p, needs_input=False)
    p.add_argument("--from", required=True, help="source Bloch rx,ry,rz")
    p.add_argument("--to", required=True, help="target Bloch sx,sy,sz")
    p.add_argument("--pauli-only", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("synthesize",
                       help="typical form from transfer parameters")
    add_io(p)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("selftest", help="run the randomized property suite")
    add_io(p, needs_input=False)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_selftest)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ChannelError, InvalidStateError, InfeasibleError,
            NotApplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
