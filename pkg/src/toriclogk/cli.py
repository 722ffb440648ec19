"""Command-line front end.

Commands: ``check``, ``r``, ``futaki``, ``classify``, ``sweep``, ``oracle``,
``plot``, ``p1conic``.  Polytopes come from a JSON file (``--input``) or a
built-in name (``--builtin``).  Reports are JSON by default, ``--format
text`` for humans, SVG for ``plot``.  Identical invocations produce
byte-identical output.

Exit codes: 0 success, 1 I/O failure, 2 validation/domain error (the latter
with a machine-readable error object on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence, TextIO

from . import __version__
from .catalog import BUILTIN_NAMES, builtin_polytope
from .ehrhart import fit_expansions, sample_series
from .errors import InvalidInput, ToricLogKError
from .invariants import critical_beta, log_futaki_toric, r_invariant
from .p1conic import cone_data, existence_check, stability_check
from .polytope import LatticePolytope, RatVec
from .serialize import (
    format_optional,
    format_optional_vec,
    format_rational,
    format_ratvec,
    parse_rational,
    parse_vector_text,
    polytope_from_json,
    polytope_to_obj,
    to_json,
)
from .stability import classify, sweep
from .svg import render_svg

SIGN_CONVENTION = "degeneration at t -> 0; stable along a direction means value <= 0"

_VALUE_FLAGS = ("--lambda", "--beta", "--alphas")


@dataclass
class RunConfig:
    """Validated invocation: one command plus whichever flags it needs."""

    command: str
    input_path: Optional[str] = None
    builtin: Optional[str] = None
    direction: Optional[RatVec] = None
    beta: Optional[Fraction] = None
    kmax: Optional[int] = None
    alphas: Optional[tuple[Fraction, ...]] = None
    output: Optional[str] = None
    format: str = "json"


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Join value flags with their argument so negative literals like
    ``--lambda -1,-1`` survive argparse's option detection."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriclogk",
        description="Exact stability invariants of reflexive lattice polytopes.",
    )
    parser.add_argument("--version", action="version", version=f"toriclogk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", metavar="PATH", help="polytope JSON file")
        group.add_argument("--builtin", choices=BUILTIN_NAMES, help="named example polytope")

    def add_io(p: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    p = sub.add_parser("check", help="validate a polytope and report its basic data")
    add_source(p)
    add_io(p, ("json", "text"), "json")

    p = sub.add_parser("r", help="R-invariant of a reflexive polytope")
    add_source(p)
    add_io(p, ("json", "text"), "json")

    p = sub.add_parser("futaki", help="log-Futaki value of a direction at an angle")
    add_source(p)
    p.add_argument("--lambda", dest="direction", required=True, metavar="V",
                   help="direction, comma-separated rationals, e.g. -1,-1")
    p.add_argument("--beta", default="0", metavar="Q", help="angle parameter in [0,1), default 0")
    add_io(p, ("json", "text"), "json")

    p = sub.add_parser("classify", help="stable/semistable/unstable verdict at an angle")
    add_source(p)
    p.add_argument("--beta", required=True, metavar="Q", help="angle parameter in (0,1)")
    add_io(p, ("json", "text"), "json")

    p = sub.add_parser("sweep", help="critical angle per facet normal plus R")
    add_source(p)
    add_io(p, ("json", "text"), "json")

    p = sub.add_parser("oracle", help="counting-oracle fit of the expansion coefficients")
    add_source(p)
    p.add_argument("--lambda", dest="direction", required=True, metavar="V")
    p.add_argument("--kmax", type=int, default=None, metavar="N",
                   help="largest dilation sampled (default n + 4)")
    add_io(p, ("json", "text"), "json")

    p = sub.add_parser("plot", help="SVG diagram of a planar polytope")
    add_source(p)
    p.add_argument("--beta", default=None, metavar="Q", help="also draw the rescaled point Q_beta")
    add_io(p, ("svg",), "svg")

    p = sub.add_parser("p1conic", help="cone-metric existence and stability on the sphere")
    p.add_argument("--alphas", required=True, metavar="LIST",
                   help="comma-separated cone weights in (0,1), e.g. 1/2,1/2,1/2")
    add_io(p, ("json", "text"), "json")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.input_path = getattr(args, "input", None)
    cfg.builtin = getattr(args, "builtin", None)
    cfg.output = getattr(args, "output", None)
    cfg.format = getattr(args, "format", "json")
    if getattr(args, "direction", None) is not None:
        cfg.direction = parse_vector_text(args.direction)
    raw_beta = getattr(args, "beta", None)
    if raw_beta is not None:
        cfg.beta = parse_rational(raw_beta)
    cfg.kmax = getattr(args, "kmax", None)
    raw_alphas = getattr(args, "alphas", None)
    if raw_alphas is not None:
        cfg.alphas = tuple(parse_rational(p.strip()) for p in raw_alphas.split(","))
    return cfg


def _load_polytope(cfg: RunConfig) -> tuple[str, LatticePolytope]:
    if cfg.builtin is not None:
        return cfg.builtin, builtin_polytope(cfg.builtin)
    text = Path(cfg.input_path).read_text(encoding="utf-8")
    name, poly = polytope_from_json(text)
    return name or Path(cfg.input_path).stem, poly


# --- report builders ------------------------------------------------------


def _report_check(name: str, P: LatticePolytope) -> dict[str, Any]:
    return {
        "name": name,
        "dim": P.dim,
        "vertices": [format_ratvec(v) for v in P.vertices],
        "facets": [
            {"normal": list(f.normal), "offset": format_rational(f.offset)} for f in P.facets
        ],
        "reflexive": P.is_reflexive,
        "volume": format_rational(P.volume),
        "barycenter": format_ratvec(P.barycenter),
    }


def _report_r(name: str, P: LatticePolytope) -> dict[str, Any]:
    return {"name": name, "R": format_rational(r_invariant(P))}


def _report_futaki(name: str, P: LatticePolytope, cfg: RunConfig) -> dict[str, Any]:
    result = log_futaki_toric(P, cfg.direction, cfg.beta)
    return {
        "name": name,
        "lambda": format_ratvec(result.direction),
        "beta": format_rational(result.beta),
        "value": format_rational(result.value),
        "W": format_rational(result.support),
        "pairing": format_rational(result.pairing),
        "vol": format_rational(result.vol),
        "critical_beta": format_optional(critical_beta(P, cfg.direction)),
        "sign_convention": SIGN_CONVENTION,
    }


def _report_classify(P: LatticePolytope, cfg: RunConfig) -> dict[str, Any]:
    verdict = classify(P, cfg.beta)
    return {
        "beta": format_rational(verdict.beta),
        "R": format_rational(verdict.R),
        "verdict": verdict.verdict.value,
        "witness": format_optional_vec(verdict.witness),
        "q_beta": format_optional_vec(verdict.q_beta),
        "notes": list(verdict.notes),
    }


def _report_sweep(name: str, P: LatticePolytope) -> dict[str, Any]:
    result = sweep(P)
    return {
        "name": name,
        "R": format_rational(result.R),
        "per_facet": [
            {"normal": format_ratvec(normal), "critical_beta": format_optional(beta)}
            for normal, beta in result.per_facet
        ],
    }


def _report_oracle(name: str, P: LatticePolytope, cfg: RunConfig) -> dict[str, Any]:
    series = sample_series(P, cfg.direction, cfg.kmax)
    fit = fit_expansions(series, P)
    support = P.support(cfg.direction)
    pairing = P.barycenter.dot(cfg.direction)
    vol = P.volume
    n = P.dim

    w_prev, d_prev = Fraction(0), Fraction(1)
    table = []
    for k, d, w in series.samples:
        wt = w - (w_prev - support * d_prev)
        table.append({
            "k": k,
            "d": d,
            "w": format_rational(w),
            "w_tilde": format_rational(wt),
        })
        w_prev, d_prev = w, Fraction(d)

    def verdict(ok: bool) -> str:
        return "OK" if ok else "MISMATCH"

    identities = {
        "b0 = vol": verdict(fit.b0 == vol),
        "a0 = -vol*pairing": verdict(fit.a0 == -vol * pairing),
        "a0_tilde = (n+1)*a0 + W*b0": verdict(fit.a0_tilde == (n + 1) * fit.a0 + support * fit.b0),
        "b0_tilde = n*b0": verdict(fit.b0_tilde == n * fit.b0),
    }
    return {
        "name": name,
        "lambda": format_ratvec(cfg.direction),
        "kmax": series.ks[-1],
        "table": table,
        "fit": {
            "a0": format_rational(fit.a0),
            "a1": format_rational(fit.a1),
            "b0": format_rational(fit.b0),
            "b1": format_rational(fit.b1),
            "a0_tilde": format_rational(fit.a0_tilde),
            "b0_tilde": format_rational(fit.b0_tilde),
        },
        "identities": identities,
        "sign_convention": SIGN_CONVENTION,
    }


def _report_p1conic(cfg: RunConfig) -> dict[str, Any]:
    cone = cone_data(cfg.alphas)
    existence = existence_check(cone)
    stab = stability_check(cone)
    return {
        "alphas": [format_rational(a) for a in cone.alphas],
        "exists": existence.exists,
        "curvature_sign": existence.curvature_sign,
        "failed_conditions": list(existence.failed_conditions),
        "futaki_values": [format_rational(v) for v in stab.futaki_values],
        "stable_all": stab.stable_all,
    }


# --- text rendering -------------------------------------------------------

_COLORS = {"stable": "32", "semistable": "33", "unstable": "31", "OK": "32", "MISMATCH": "31"}


def _paint(text: str, enabled: bool) -> str:
    code = _COLORS.get(text)
    if enabled and code:
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _color_enabled(stream: TextIO) -> bool:
    mode = os.environ.get("TORICLOGK_COLOR", "auto")
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _as_text(payload: dict[str, Any], command: str, color: bool) -> str:
    lines: list[str] = []

    def row(key: str, value: Any) -> None:
        lines.append(f"{key:<14} {value}")

    if command == "check":
        row("name", payload["name"])
        row("dim", payload["dim"])
        row("reflexive", str(payload["reflexive"]).lower())
        row("volume", payload["volume"])
        row("barycenter", payload["barycenter"])
        lines.append("vertices:")
        for v in payload["vertices"]:
            lines.append(f"  {v}")
        lines.append("facets:")
        for f in payload["facets"]:
            lines.append(f"  <{f['normal']}, x> <= {f['offset']}")
    elif command == "r":
        row("name", payload["name"])
        row("R", payload["R"])
    elif command == "futaki":
        for key in ("name", "lambda", "beta", "value", "W", "pairing", "vol", "critical_beta"):
            row(key, payload[key])
        lines.append(f"convention: {payload['sign_convention']}")
    elif command == "classify":
        for key in ("beta", "R"):
            row(key, payload[key])
        row("verdict", _paint(payload["verdict"], color))
        row("witness", payload["witness"])
        row("q_beta", payload["q_beta"])
        for note in payload["notes"]:
            lines.append(f"note: {note}")
    elif command == "sweep":
        row("name", payload["name"])
        row("R", payload["R"])
        lines.append("critical beta per facet normal:")
        for entry in payload["per_facet"]:
            beta = entry["critical_beta"]
            lines.append(f"  {str(entry['normal']):<14} {beta if beta is not None else '-'}")
    elif command == "oracle":
        row("name", payload["name"])
        row("lambda", payload["lambda"])
        lines.append(f"{'k':>4} {'d_k':>8} {'w_k':>12} {'w~_k':>12}")
        for entry in payload["table"]:
            lines.append(
                f"{entry['k']:>4} {entry['d']:>8} {str(entry['w']):>12} {str(entry['w_tilde']):>12}"
            )
        lines.append("fit:")
        for key, value in payload["fit"].items():
            lines.append(f"  {key:<10} {value}")
        lines.append("identities:")
        for key, value in payload["identities"].items():
            lines.append(f"  {key:<28} {_paint(value, color)}")
    elif command == "p1conic":
        row("alphas", ", ".join(str(a) for a in payload["alphas"]))
        row("curvature", payload["curvature_sign"])
        row("exists", str(payload["exists"]).lower())
        row("stable_all", str(payload["stable_all"]).lower())
        row("futaki", ", ".join(str(v) for v in payload["futaki_values"]))
        if payload["failed_conditions"]:
            row("failed", ", ".join(payload["failed_conditions"]))
    return "\n".join(lines) + "\n"


# --- driver ---------------------------------------------------------------


def run(cfg: RunConfig, stdout: Optional[TextIO] = None) -> int:
    """Execute one validated invocation; returns the process exit code."""
    if stdout is None:
        stdout = sys.stdout
    if cfg.command == "p1conic":
        payload: Any = _report_p1conic(cfg)
        text = None
    elif cfg.command == "plot":
        name, poly = _load_polytope(cfg)
        text = render_svg(poly, cfg.beta)
        payload = None
    else:
        name, poly = _load_polytope(cfg)
        if cfg.command == "check":
            payload = _report_check(name, poly)
        elif cfg.command == "r":
            payload = _report_r(name, poly)
        elif cfg.command == "futaki":
            payload = _report_futaki(name, poly, cfg)
        elif cfg.command == "classify":
            payload = _report_classify(poly, cfg)
        elif cfg.command == "sweep":
            payload = _report_sweep(name, poly)
        elif cfg.command == "oracle":
            payload = _report_oracle(name, poly, cfg)
        else:
            raise InvalidInput(f"unknown command {cfg.command!r}")
        text = None

    if text is None:
        if cfg.format == "json":
            text = to_json(payload)
        else:
            color = cfg.output is None and _color_enabled(stdout)
            text = _as_text(payload, cfg.command, color)

    if cfg.output is not None:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_values(raw))
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except ToricLogKError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"toriclogk: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
