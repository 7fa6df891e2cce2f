"""Command-line front-end: ``mucurve <command> <file> [--json]``."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Any

from . import __version__
from .adjoint import (
    CurveError,
    CurveModel,
    SingularityReport,
    adjoint_candidates,
    adjoint_pencils,
    analyze,
    curve_model,
    inverse_map,
    point_str,
)
from .inertia import moving_curve_generators
from .mubasis import InconsistencyError, Parametrization, ParametrizationError
from .poly import ParseError, Poly, parse_poly
from .resultants import subresultants
from .verify import run_checks

COMMANDS = ("mubasis", "implicitize", "generators", "subres", "adjoints", "dres", "singular", "verify")

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class CurveFileError(ValueError):
    def __init__(self, message: str, code: str = "E_INPUT"):
        super().__init__(message)
        self.code = code


def parse_curve(text: str) -> Parametrization:
    """Parse ``name = expr`` lines (``field``, ``g1``, ``g2``, ``g3``); ``#`` starts a comment."""
    forms: dict[str, tuple[Poly, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'name = expr'", lineno, col)
        key, expr = line.split("=", 1)
        key = key.strip()
        offset = len(line) - len(expr)
        if key == "field":
            if expr.strip() != "QQ":
                raise CurveFileError(f"unsupported field {expr.strip()!r} at line {lineno}; only QQ is supported")
            continue
        if key not in ("g1", "g2", "g3"):
            raise CurveFileError(f"unknown key {key!r} at line {lineno}")
        if key in forms:
            raise CurveFileError(f"duplicate key {key!r} at line {lineno}")
        try:
            f = parse_poly(expr, {"X1", "X2"}, lineno)
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column + offset) from None
        if not f.is_homogeneous():
            raise ParametrizationError(f"{key} is not homogeneous at line {lineno}", "E_INHOMOGENEOUS")
        forms[key] = (f, lineno)
    missing = [k for k in ("g1", "g2", "g3") if k not in forms]
    if missing:
        raise CurveFileError(f"missing {', '.join(missing)}")
    return Parametrization.from_forms(*(forms[k][0] for k in ("g1", "g2", "g3")))


# ---------------------------------------------------------------------------
# payloads

def _frac(x: Fraction) -> str:
    return str(x)


def _mubasis_payload(cm: CurveModel) -> dict[str, Any]:
    mb = cm.mb
    return {
        "d": cm.d,
        "mu": mb.mu,
        "p": str(mb.p),
        "q": str(mb.q),
        "deg_phi": cm.deg_phi,
    }


def _implicit_payload(cm: CurveModel) -> dict[str, Any]:
    return {"C": str(cm.C), "alpha": _frac(cm.alpha), "deg_phi": cm.deg_phi, "degree": cm.C.degree()}


def _generators_payload(cm: CurveModel) -> dict[str, Any]:
    gs = moving_curve_generators(cm.mb, cm.deg_phi)
    return {
        "case": gs.mu_case,
        "flag": gs.flag,
        "condition": gs.condition,
        "notes": list(gs.notes),
        "generators": [
            {"label": g.label(), "form": str(g.form), "scale": _frac(g.scale), "xdeg": g.xdeg, "tdeg": g.tdeg}
            for g in gs.generators
        ],
    }


def _subres_payload(cm: CurveModel) -> dict[str, Any]:
    S = subresultants(cm.mb.form_pair())
    return {"delta": cm.mb.delta, "subresultants": [str(s) for s in S]}


def _adjoints_payload(cm: CurveModel) -> dict[str, Any]:
    return {
        "candidates": [str(F) for F in adjoint_candidates(cm)],
        "pencils": [str(F) for F in adjoint_pencils(cm)],
    }


def _dres_payload(rep: SingularityReport) -> dict[str, Any]:
    return {
        "dres": str(rep.dres),
        "degree": rep.total_degree,
        "expected_degree": rep.expected_degree,
        "unit": _frac(rep.dres_unit),
        "squarefree": [{"factor": str(f), "exponent": e} for f, e in rep.squarefree],
        "chart_shift": rep.chart,
    }


def _singular_payload(cm: CurveModel, rep: SingularityReport) -> dict[str, Any]:
    out = _dres_payload(rep)
    out["clusters"] = [
        {
            "parameters": cl.parameters,
            "factors": [str(f) for f in cl.factors],
            "epsilon": cl.epsilon,
            "point": point_str(cl.point) if cl.point is not None else None,
            "multiplicity": cl.multiplicity,
        }
        for cl in rep.clusters
    ]
    out["genus_ledger"] = {
        "left": _frac(rep.genus_left),
        "resolved": _frac(rep.genus_resolved),
        "unresolved": _frac(rep.genus_unresolved),
        "balanced": rep.ledger_balanced,
    }
    try:
        inv = inverse_map(cm)
        out["inverse_map"] = {
            "A": str(inv.A),
            "B": str(inv.B),
            "orientation": inv.orientation,
            "route": inv.route,
            "index": inv.index,
        }
    except CurveError:
        out["inverse_map"] = None
    out["notes"] = list(rep.notes)
    return out


def run_command(command: str, phi: Parametrization, chart_retries: int = 5, seed: int = 0) -> tuple[dict[str, Any], bool]:
    """Payload and success flag (False only for failed verification)."""
    if command in ("dres", "singular", "verify"):
        cm0 = curve_model(phi)
        if command == "verify" and cm0.deg_phi != 1:
            checks = run_checks(cm0, None)
            return _checks_payload(checks), all(c.ok for c in checks)
        cm, rep = analyze(phi, chart_retries, seed)
        if command == "dres":
            return _dres_payload(rep), True
        if command == "singular":
            return _singular_payload(cm, rep), True
        checks = run_checks(cm, rep)
        return _checks_payload(checks), all(c.ok for c in checks)
    cm = curve_model(phi)
    builders = {
        "mubasis": _mubasis_payload,
        "implicitize": _implicit_payload,
        "generators": _generators_payload,
        "subres": _subres_payload,
        "adjoints": _adjoints_payload,
    }
    return builders[command](cm), True


def _checks_payload(checks) -> dict[str, Any]:
    return {
        "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
        "passed": all(c.ok for c in checks),
    }


# ---------------------------------------------------------------------------
# text rendering

def _render(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines += _render(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict):
                inner = _render(v, indent + 1)
                lines.append(f"{pad}- " + inner[0].strip())
                lines += inner[1:]
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mucurve", description="mu-basis tools for rational plane curves")
    ap.add_argument("--version", action="version", version=f"mucurve {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file", help="curve file (use - for stdin)")
    ap.add_argument("--json", action="store_true", help="emit a JSON envelope")
    ap.add_argument("--chart-retries", type=int, default=5, metavar="N")
    ap.add_argument("--seed", type=int, default=0, metavar="N")
    return ap


def _error(args, data: bytes, code: str, message: str) -> None:
    if args.json:
        env = {
            "tool": "mucurve",
            "version": __version__,
            "command": args.command,
            "input_sha256": hashlib.sha256(data).hexdigest(),
            "error": {"code": code, "message": message},
        }
        print(json.dumps(env, sort_keys=True, indent=2))
    else:
        print(f"error [{code}]: {message}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.file == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.file, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        print(f"error [E_IO]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        phi = parse_curve(data.decode("utf-8"))
        payload, ok = run_command(args.command, phi, args.chart_retries, args.seed)
    except UnicodeDecodeError as exc:
        _error(args, data, "E_INPUT", f"input is not UTF-8: {exc}")
        return EXIT_INPUT
    except ParseError as exc:
        _error(args, data, "E_SYNTAX", str(exc))
        return EXIT_INPUT
    except (ParametrizationError, CurveFileError, CurveError) as exc:
        _error(args, data, exc.code, str(exc))
        return EXIT_INPUT
    except InconsistencyError as exc:
        _error(args, data, exc.code, str(exc))
        return EXIT_INTERNAL
    elapsed = time.perf_counter() - start
    if args.json:
        env = {
            "tool": "mucurve",
            "version": __version__,
            "command": args.command,
            "input_sha256": hashlib.sha256(data).hexdigest(),
            "result": payload,
            "timing_ms": round(elapsed * 1000, 3),
        }
        print(json.dumps(env, sort_keys=True, indent=2))
    else:
        print("\n".join(_render(payload)))
    return EXIT_OK if ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
