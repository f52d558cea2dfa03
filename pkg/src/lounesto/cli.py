"""Command-line interface: JSON spinor files in, JSON reports out.

Exit codes: 0 success, 2 invalid input, 3 no convergence or singular operator.
"""
import argparse
import json
import logging
import sys
import time

import numpy as np

from . import __version__
from .bilinears import compute_bilinears, fierz_residuals
from .classifier import Tolerance, classify
from .elko import ElkoLabel, Momentum, charge_conjugate, elko_dual, elko_spinor
from .errors import (DegenerateFreeParameters, DivisionDegenerate, ExhaustedRetries, LabelMismatch,
                     LounestoError, NoConvergence, NonRealBilinear, SingularOperator, ZeroDirection)
from .mapping import (MappingParams, build_M, compare_modes, direct_conditions, infer_label,
                      paper_conditions)
from .sampler import SampleSpec, sample_class, sample_mappable
from .solver import solve_equivalence_class

SCHEMA = 1
EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 2, 3

log = logging.getLogger("lounesto")


class InputError(ValueError):
    """Malformed input, with a JSON pointer to the offending field."""

    def __init__(self, pointer, message):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


# -- spinor files --------------------------------------------------------------

def _number(value, pointer):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(pointer, "expected a number")
    if not np.isfinite(value):
        raise InputError(pointer, "expected a finite number")
    return float(value)


def parse_spinor_file(data):
    """Validate a SpinorFile object; returns (psi, momentum or None, label or None)."""
    if not isinstance(data, dict):
        raise InputError("", "expected a JSON object")
    comps = data.get("components")
    if not isinstance(comps, list):
        raise InputError("/components", "expected an array of 4 [re, im] pairs")
    if len(comps) != 4:
        raise InputError("/components", f"expected 4 components, got {len(comps)}")
    psi = np.empty(4, dtype=complex)
    for i, pair in enumerate(comps):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"/components/{i}", "expected a [re, im] pair")
        psi[i] = complex(_number(pair[0], f"/components/{i}/0"), _number(pair[1], f"/components/{i}/1"))
    mom = None
    if "momentum" in data:
        m = data["momentum"]
        if not isinstance(m, dict):
            raise InputError("/momentum", "expected an object with mass and p")
        mass = _number(m.get("mass"), "/momentum/mass")
        if mass <= 0:
            raise InputError("/momentum/mass", "mass must be positive")
        p = m.get("p", [0.0, 0.0, 0.0])
        if not isinstance(p, list) or len(p) != 3:
            raise InputError("/momentum/p", "expected [px, py, pz]")
        mom = Momentum(mass, tuple(_number(v, f"/momentum/p/{i}") for i, v in enumerate(p)))
    label = None
    if "label" in data:
        lab = data["label"]
        if not isinstance(lab, dict):
            raise InputError("/label", "expected an object with type and pair")
        try:
            label = ElkoLabel(lab.get("type"), lab.get("pair"))
        except LabelMismatch as exc:
            raise InputError("/label", str(exc)) from None
    return psi, mom, label


def spinor_file(psi, mom=None, label=None, **extra):
    out = {"schema": SCHEMA, "components": [[float(z.real), float(z.imag)] for z in np.asarray(psi)]}
    if mom is not None:
        out["momentum"] = mom.as_dict()
    if label is not None:
        out["label"] = {"type": label.conjugacy, "pair": label.pair}
    out.update(extra)
    return out


def _load_json(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError("", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_spinor(path):
    return parse_spinor_file(_load_json(path))


def _floats(text, count, name):
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"--{name}", f"expected comma-separated numbers, got {text!r}") from None
    if len(values) not in count:
        raise InputError(f"--{name}", f"expected {' or '.join(map(str, count))} values, got {len(values)}")
    return values


# -- commands ------------------------------------------------------------------

def _bilinear_block(psi, tol):
    b = compute_bilinears(psi)
    return b, {"bilinears": b.as_dict(), "class": int(classify(b, tol)),
               "fierz": fierz_residuals(b).tolist()}


def cmd_classify(args, tol):
    psi, _, _ = load_spinor(args.file)
    _, block = _bilinear_block(psi, tol)
    return block


def cmd_fierz(args, tol):
    psi, _, _ = load_spinor(args.file)
    b, block = _bilinear_block(psi, tol)
    bound = tol.rel_tol * b.scale ** 2
    block["fierz_bound"] = bound
    block["fierz_ok"] = bool(np.all(np.asarray(block["fierz"]) <= bound))
    return block


def _momentum(args):
    p = tuple(_floats(args.p, (3,), "p"))
    if not args.mass > 0:
        raise InputError("--mass", "mass must be positive")
    return Momentum(args.mass, p)


def cmd_elko_gen(args, tol):
    label = ElkoLabel(args.type, args.pair)
    mom = _momentum(args)
    return spinor_file(elko_spinor(label, mom), mom, label)


def cmd_elko_verify(args, tol):
    psi, mom, label = load_spinor(args.file)
    if label is None:
        label = infer_label(psi, tol.rel_tol)
    b, block = _bilinear_block(psi, tol)
    s = label.conjugation_sign
    c_residual = float(np.max(np.abs(charge_conjugate(psi) - s * psi)))
    scale = float(np.linalg.norm(psi))
    pairing = complex(elko_dual(psi, label, mom, tol=tol.rel_tol) @ psi)
    expected = -2.0 if label.conjugacy == "S" else 2.0
    ok = (c_residual <= tol.rel_tol * max(scale, 1e-300) and block["class"] == 5
          and abs(pairing - expected) <= 1e-9)
    block.update({
        "label": {"type": label.conjugacy, "pair": label.pair},
        "c_eigenvalue": s,
        "c_residual": c_residual,
        "dual_pairing": [pairing.real, pairing.imag],
        "dual_pairing_expected": expected,
        "ok": bool(ok),
    })
    return block


def _params(args):
    if args.params is None:
        return MappingParams.ansatz(args.epsilon)
    data = _load_json(args.params)
    if not isinstance(data, dict):
        raise InputError("", "parameter file must be a JSON object")
    data.setdefault("epsilon", args.epsilon)
    try:
        return MappingParams.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("", f"bad mapping parameters: {exc}") from None


def cmd_map_apply(args, tol):
    psi, mom, _ = load_spinor(args.file)
    params = _params(args)
    lam = build_M(params, mom)(psi)
    mapped = compute_bilinears(lam) if np.any(lam) else None
    report = {
        "params": params.as_dict(),
        "input_class": int(classify(compute_bilinears(psi), tol)),
        "output_class": int(classify(mapped, tol)) if mapped is not None else 0,
    }
    return spinor_file(lam, mom, report=report)


def cmd_map_check(args, tol):
    psi, mom, _ = load_spinor(args.file)
    M = build_M(MappingParams.ansatz(args.epsilon), mom)
    if args.mode == "both":
        cmp = compare_modes(psi, args.cls, M, tol.rel_tol)
        return {"mode": "both", "paper": cmp["paper"].as_dict(), "direct": cmp["direct"].as_dict(),
                "agreement": cmp["agreement"], "degenerate": cmp["degenerate"],
                "mappable": cmp["paper"].mappable and cmp["direct"].mappable}
    check = (paper_conditions(psi, args.cls, tol.rel_tol) if args.mode == "paper"
             else direct_conditions(psi, M, args.cls, tol.rel_tol))
    return {"mode": args.mode, args.mode: check.as_dict(), "mappable": check.mappable}


def cmd_map_solve(args, tol):
    free = _floats(args.free, (2,) if args.cls == 1 else (3,), "free")
    free = complex(*free) if args.cls == 1 else tuple(free)
    res = solve_equivalence_class(args.cls, args.mode, free, seed=args.seed, epsilon=args.epsilon,
                                  tol=tol.rel_tol)
    report = {"class": args.cls, "mode": args.mode, "residual": res.residual, "scale": res.scale,
              "iterations": res.iterations, "restart": res.restart}
    return spinor_file(res.psi, report=report)


def cmd_sample(args, tol):
    if args.count < 0:
        raise InputError("--count", "must be non-negative")
    if args.mappable:
        if args.cls not in (1, 2, 3):
            raise InputError("--class", "mappable samples exist for classes 1-3")
        psis = sample_mappable(args.cls, args.mode, args.count, args.seed, epsilon=args.epsilon)
    else:
        psis = sample_class(SampleSpec(args.cls, args.count, args.seed), tol)
    return [spinor_file(p) for p in psis]


COMMANDS = {
    "classify": cmd_classify,
    "fierz": cmd_fierz,
    "elko-gen": cmd_elko_gen,
    "elko-verify": cmd_elko_verify,
    "map-apply": cmd_map_apply,
    "map-check": cmd_map_check,
    "map-solve": cmd_map_solve,
    "sample": cmd_sample,
}
# commands whose output is a spinor file rather than a report
SPINOR_OUTPUT = {"elko-gen", "map-apply", "map-solve"}


def _global_flags(defaults):
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--tolerance", type=float, default=d(1e-10), help="relative zero tolerance")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--quiet", action="store_true", default=d(False), help="no diagnostics on stderr")
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="lounesto", parents=[_global_flags(True)],
                                     description="Spinor classification, ELKO and Dirac-to-ELKO maps.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    local = [_global_flags(False)]

    for name in ("classify", "fierz", "elko-verify"):
        sp = sub.add_parser(name, parents=local)
        sp.add_argument("file", help="spinor JSON file, '-' for stdin")

    sp = sub.add_parser("elko-gen", parents=local)
    sp.add_argument("--type", choices=("S", "A"), required=True)
    sp.add_argument("--pair", choices=("mp", "pm"), required=True)
    sp.add_argument("--mass", type=float, default=1.0)
    sp.add_argument("--p", default="0,0,0", help="momentum X,Y,Z")

    sp = sub.add_parser("map-apply", parents=local)
    sp.add_argument("file")
    sp.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    sp.add_argument("--params", help="JSON file of mapping parameters")

    sp = sub.add_parser("map-check", parents=local)
    sp.add_argument("file")
    sp.add_argument("--class", dest="cls", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--mode", choices=("paper", "direct", "both"), default="both")
    sp.add_argument("--epsilon", type=int, choices=(1, -1), default=1)

    sp = sub.add_parser("map-solve", parents=local)
    sp.add_argument("--class", dest="cls", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--mode", choices=("paper", "direct"), default="direct")
    sp.add_argument("--free", required=True, help="re,im of psi_1 (class 1) or re,im,Re psi_2")
    sp.add_argument("--epsilon", type=int, choices=(1, -1), default=1)

    sp = sub.add_parser("sample", parents=local)
    sp.add_argument("--class", dest="cls", type=int, choices=range(1, 7), required=True)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--mappable", action="store_true")
    sp.add_argument("--mode", choices=("paper", "direct"), default="direct")
    sp.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    return parser


def _error(args, code, message):
    if not getattr(args, "quiet", False):
        print(f"lounesto: {message}", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING)
    start = time.perf_counter()
    try:
        tol = Tolerance(args.tolerance)
        result = COMMANDS[args.command](args, tol)
    except (InputError, DegenerateFreeParameters, LabelMismatch, ZeroDirection, ValueError) as exc:
        return _error(args, EXIT_INVALID, exc)
    except (NoConvergence, SingularOperator, ExhaustedRetries, DivisionDegenerate, NonRealBilinear) as exc:
        return _error(args, EXIT_FAILED, exc)
    except LounestoError as exc:
        return _error(args, EXIT_FAILED, exc)
    elapsed = time.perf_counter() - start
    if isinstance(result, list):
        for item in result:
            print(json.dumps(item))
        return EXIT_OK
    if args.command not in SPINOR_OUTPUT:
        echo = {k: v for k, v in vars(args).items() if k not in ("command", "quiet")}
        result = {"schema": SCHEMA, "command": args.command, "arguments": echo,
                  "tolerance": args.tolerance, **result}
    result["timing"] = {"seconds": elapsed}
    print(json.dumps(result, indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
