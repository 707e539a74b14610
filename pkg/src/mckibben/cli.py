"""Command line interface.

Subcommands ``resolve``, ``force``, ``compare``, ``sweep`` and ``energy``.
Exit status: 0 success, 1 verification or consistency failure, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import energy_audit as ea
from . import fascicle_compare as fc
from . import force_model as fm
from .config import FORMATS, POLICIES, ConfigError, RunConfig, parse_value
from .geometry import (
    BraidSpec,
    DomainError,
    RawParameterSet,
    StrokeSpec,
    check_consistency,
    resolve,
)
from .units import UnitError

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

MM = 1e3
KPA = 1e3
SIGN_NOTE = "sign convention: positive = tensile (contraction), negative = extension"


class Report:
    """Result of one command in all three output shapes."""

    def __init__(self, inputs: dict, columns: Sequence[str], rows: list[dict],
                 verdicts: dict, pretty: str, outputs: Optional[dict] = None):
        self.inputs = inputs
        self.columns = list(columns)
        self.rows = rows
        self.verdicts = verdicts
        self.pretty = pretty
        self.outputs = outputs if outputs is not None else {"rows": rows}
        self.strict_failure = False

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = {"inputs": self.inputs, "outputs": self.outputs, "verdicts": self.verdicts}
            return json.dumps(doc, indent=2, allow_nan=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=self.columns, lineterminator="\n")
            writer.writeheader()
            for row in self.rows:
                writer.writerow({k: _csv_cell(row.get(k)) for k in self.columns})
            return buf.getvalue()
        return self.pretty

    @property
    def passed(self) -> bool:
        return all(v in (True, "PASS") for v in self.verdicts.values() if v is not None)


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def _deg(rad: float) -> float:
    return math.degrees(rad)


# ----------------------------------------------------------------- builders


def _design(cfg: RunConfig) -> tuple[fc.ActuatorDesign, float]:
    """Unit design from (L, D, N); evaluation angle defaults to the resolved one."""
    braid, theta_resolved = resolve(cfg.L, cfg.D, cfg.N)
    theta = cfg.theta if cfg.theta is not None else theta_resolved
    if cfg.t_hat is not None:
        wall = fm.WallSpec.from_relative(cfg.t_hat)
    else:
        wall = fm.WallSpec.from_thickness(cfg.t_k if cfg.t_k is not None else 0.0)
    return fc.ActuatorDesign(braid, wall, theta), theta_resolved


def _design_inputs(cfg: RunConfig) -> dict:
    inputs = {"L [mm]": cfg.L * MM, "D [mm]": cfg.D * MM, "N": cfg.N}
    if cfg.t_hat is not None:
        inputs["t_hat"] = cfg.t_hat
    else:
        inputs["t_k [mm]"] = (cfg.t_k or 0.0) * MM
    if cfg.theta is not None:
        inputs["theta [deg]"] = _deg(cfg.theta)
    return inputs


def cmd_resolve(cfg: RunConfig, strict: bool = False) -> Report:
    raw = RawParameterSet(cfg.L, cfg.D, cfg.N, cfg.theta)
    report = check_consistency(raw, cfg.tolerance)
    braid, theta = resolve(cfg.L, cfg.D, cfg.N)
    row = {
        "b_from_length [mm]": None if report.b_from_length is None else report.b_from_length * MM,
        "b_from_diameter [mm]": None if report.b_from_diameter is None else report.b_from_diameter * MM,
        "b_from_pythagoras [mm]": report.b_from_pythagoras * MM,
        "max_relative_spread": report.max_relative_spread,
        "consistent": report.consistent,
        "b [mm]": braid.b * MM,
        "theta [deg]": _deg(theta),
        "D0 [mm]": braid.d0 * MM,
    }
    verdict = "PASS" if report.consistent else "FAIL"
    lines = [
        f"input       L = {cfg.L * MM:g} mm, D = {cfg.D * MM:g} mm, N = {cfg.N:g}"
        + ("" if cfg.theta is None else f", theta = {_deg(cfg.theta):g} deg"),
    ]
    if report.theta_absent:
        lines.append("theta absent: fiber length from the Pythagorean relation only")
    else:
        lines += [
            f"b (length relation)      = {report.b_from_length * MM:.6f} mm",
            f"b (diameter relation)    = {report.b_from_diameter * MM:.6f} mm",
        ]
    lines += [
        f"b (Pythagorean relation) = {report.b_from_pythagoras * MM:.6f} mm",
        f"max relative spread      = {report.max_relative_spread:.3e} "
        f"(tolerance {report.tolerance:g}): {'consistent' if report.consistent else 'INCONSISTENT'}",
        "resolved (supplied theta discarded):" if cfg.theta is not None else "resolved:",
        f"  b     = {braid.b * MM:.3f} mm",
        f"  theta = {_deg(theta):.3f} deg",
        f"  D0    = {braid.d0 * MM:.4f} mm",
    ]
    rep = Report(
        {"L [mm]": cfg.L * MM, "D [mm]": cfg.D * MM, "N": cfg.N,
         "theta [deg]": None if cfg.theta is None else _deg(cfg.theta),
         "tolerance": cfg.tolerance},
        list(row), [row], {"consistency": verdict}, "\n".join(lines) + "\n",
    )
    rep.strict_failure = strict and not report.consistent
    return rep


def cmd_force(cfg: RunConfig) -> Report:
    design, _ = _design(cfg)
    braid, theta, P = design.braid, design.theta, cfg.pressure
    thin = fm.force_thin(braid, theta, P)
    thick = fm.force_thick(braid, theta, design.wall, P)
    t_hat = design.relative_thickness
    f_hat = fm.normalized_force(theta, t_hat)
    via_hat = fm.force_from_normalized(theta, t_hat, P, design.area)
    row = {
        "theta [deg]": _deg(theta),
        "pressure [kPa]": P / KPA,
        "D [mm]": design.diameter * MM,
        "t_k [mm]": design.thickness * MM,
        "t_hat": t_hat,
        "F_thin [N]": thin,
        "F_thick [N]": thick,
        "F_hat": f_hat,
        "F_hat*P*A [N]": via_hat,
    }
    pretty = "\n".join([
        f"theta = {_deg(theta):.3f} deg, P' = {P / KPA:g} kPa, D = {design.diameter * MM:.4f} mm, "
        f"t_k = {design.thickness * MM:g} mm (t_hat = {t_hat:.5f})",
        f"thin-wall force        F_thin  = {fc.format_sig(thin)} N",
        f"thick-wall force       F_thick = {fc.format_sig(thick)} N",
        f"normalized force       F_hat   = {f_hat:.5f}",
        f"F_hat * P' * A                 = {fc.format_sig(via_hat)} N",
        SIGN_NOTE,
        "wall elasticity is not modelled",
    ]) + "\n"
    return Report(_design_inputs(cfg) | {"pressure [kPa]": P / KPA}, list(row), [row], {}, pretty)


def cmd_compare(cfg: RunConfig, replicate_original_error: bool = False) -> Report:
    unit, _ = _design(cfg)
    rows = fc.compare(unit, cfg.n)
    table = []
    rel_ok = True
    for r in rows:
        table.append({
            "n": r.n,
            "pack [N/kPa]": r.pack * KPA,
            "eq_relative [N/kPa]": r.eq_relative * KPA,
            "eq_absolute [N/kPa]": r.eq_absolute * KPA,
            "error": r.error,
        })
        if r.error is None:
            dev = fm.relative_deviation(r.pack, r.eq_relative, fc.piston_scale(unit, r.n))
            rel_ok &= dev <= 1e-12
        else:
            rel_ok = False
    verdicts = {"pack_equals_relative_equivalent": "PASS" if rel_ok else "FAIL"}
    if cfg.policy == "absolute":
        verdicts["absolute_exceeds_pack_for_n_gt_1"] = (
            "PASS" if all(abs(r.eq_absolute) > abs(r.pack) for r in rows if r.n > 1 and not r.error)
            else "FAIL"
        )
    pretty = fc.format_table(rows)
    outputs = {"rows": table, "policy": cfg.policy}
    if replicate_original_error:
        diag = []
        for n in cfg.n:
            rep = fc.replicate_original_equivalent(unit, n)
            diag.append({"n": n, "max_relative_spread": rep.max_relative_spread,
                         "consistent": rep.consistent})
        outputs["original_equivalent_consistency"] = diag
        pretty += "\nequivalent with N held fixed (force not computed):\n"
        pretty += "".join(
            f"  n = {d['n']:>3}: b spread {d['max_relative_spread']:.3e} -> "
            f"{'consistent' if d['consistent'] else 'INCONSISTENT'}\n"
            for d in diag
        )
    inputs = _design_inputs(cfg) | {"n": list(cfg.n), "policy": cfg.policy}
    return Report(inputs, list(table[0]), table, verdicts, pretty, outputs)


def _grid(lo: float, hi: float, count: Optional[int], step: Optional[float]) -> np.ndarray:
    if hi < lo:
        raise DomainError(f"grid upper bound {hi!r} below lower bound {lo!r}")
    if step is not None:
        if not step > 0:
            raise DomainError(f"grid step {step!r} must be positive")
        k = int(math.floor((hi - lo) / step + 1e-9))
        return lo + step * np.arange(k + 1)
    if count is None or count < 1:
        raise DomainError(f"grid count {count!r} must be >= 1")
    if count == 1:
        return np.array([lo])
    return np.linspace(lo, hi, count)


def cmd_sweep(cfg: RunConfig) -> Report:
    if not (0.0 < cfg.theta_min and cfg.theta_max <= fm.HALF_PI * (1 + 1e-15)):
        raise DomainError("theta range must lie in (0, 90] deg")
    if not (0.0 <= cfg.t_hat_min and cfg.t_hat_max <= fm.MAX_RELATIVE_THICKNESS):
        raise DomainError("t_hat range must lie in [0, 0.5]")
    thetas = _grid(cfg.theta_min, cfg.theta_max, cfg.theta_count, cfg.theta_step)
    t_hats = _grid(cfg.t_hat_min, cfg.t_hat_max, cfg.t_hat_count, cfg.t_hat_step)
    thetas = np.minimum(thetas, fm.HALF_PI)
    rows = []
    zeros = []
    for t in t_hats:
        t = float(t)
        zero = _deg(fm.zero_force_angle(t)) if t < fm.MAX_RELATIVE_THICKNESS else None
        zeros.append({"t_hat": t, "zero_force_theta [deg]": zero})
        for th in thetas:
            th = float(th)
            rows.append({
                "theta [deg]": _deg(th),
                "t_hat": t,
                "F_hat": fm.normalized_force(th, t),
                "zero_force_theta [deg]": zero,
            })
    columns = ["theta [deg]", "t_hat", "F_hat", "zero_force_theta [deg]"]
    lines = [f"{'theta [deg]':>12}{'t_hat':>10}{'F_hat':>12}"]
    lines += [f"{r['theta [deg]']:12.4f}{r['t_hat']:10.4f}{r['F_hat']:12.5f}" for r in rows]
    lines.append("")
    lines.append("zero-force angle per t_hat (identically zero force at t_hat = 0.5):")
    lines += [
        f"  t_hat = {z['t_hat']:.4f}: "
        + ("-" if z["zero_force_theta [deg]"] is None else f"{z['zero_force_theta [deg]']:.4f} deg")
        for z in zeros
    ]
    inputs = {
        "theta_min [deg]": _deg(cfg.theta_min), "theta_max [deg]": _deg(cfg.theta_max),
        "t_hat_min": cfg.t_hat_min, "t_hat_max": cfg.t_hat_max,
    }
    outputs = {"rows": rows, "zero_force": zeros}
    return Report(inputs, columns, rows, {}, "\n".join(lines) + "\n", outputs)


def cmd_energy(cfg: RunConfig) -> Report:
    unit, theta_resolved = _design(cfg)
    braid = unit.braid
    theta1 = cfg.theta1 if cfg.theta1 is not None else unit.theta
    stroke = StrokeSpec(theta1, cfg.theta2)
    P = cfg.pressure
    audit = ea.audit_stroke(braid, stroke, P)
    dV_two = ea.delta_volume_two_state(braid, stroke)
    work, work_err = ea.work_integral(braid, stroke, P)
    # both checks are relative to the stroke's natural scale, so strokes whose
    # volume change nearly cancels do not fail on rounding alone
    scale = max(P * abs(audit.delta_V), ea.work_scale(braid, stroke, P))
    identity = abs(work + P * audit.delta_V) / scale if scale else abs(work)
    identity_ok = identity < 1e-9
    forms_dev = fm.relative_deviation(audit.delta_V, dV_two, ea.volume_scale(braid, stroke))
    forms_ok = forms_dev <= 1e-12

    rows = []
    pack_ok = True
    for n in cfg.n:
        rep = ea.pack_vs_equivalent_energy(braid, n, stroke, P)
        pack_ok &= rep.equal
        rows.append({
            "n": n,
            "theta1 [deg]": _deg(theta1),
            "theta2 [deg]": _deg(cfg.theta2),
            "gamma": stroke.gamma,
            "delta_L [mm]": audit.delta_L * MM,
            "delta_V_pack [mm^3]": rep.delta_V_pack * MM**3,
            "delta_V_eq [mm^3]": rep.delta_V_eq * MM**3,
            "F_avg_pack [N]": rep.F_avg_pack,
            "F_avg_eq [N]": rep.F_avg_eq,
            "relative_deviation": rep.relative_deviation,
        })
    verdicts = {
        "delta_V_gamma_form_equals_two_state": "PASS" if forms_ok else "FAIL",
        "work_integral_equals_minus_P_delta_V": "PASS" if identity_ok else "FAIL",
        "delta_V_pack_equals_delta_V_eq": "PASS" if pack_ok else "FAIL",
    }
    single = {
        "delta_V_gamma [mm^3]": audit.delta_V * MM**3,
        "delta_V_two_state [mm^3]": dV_two * MM**3,
        "delta_L [mm]": audit.delta_L * MM,
        "work_integral [J]": work,
        "work_integral_abs_error [J]": work_err,
        "energy_identity_relative_error": identity,
        "delta_V_form_deviation": forms_dev,
        "F_avg [N]": audit.F_avg,
        "E_in [J]": audit.E_in,
        "E_out [J]": audit.E_out,
    }
    lines = [
        f"stroke {_deg(theta1):.3f} deg -> {_deg(cfg.theta2):.3f} deg at P' = {P / KPA:g} kPa "
        f"(gamma = {stroke.gamma:.5f})",
        f"delta_L                 = {audit.delta_L * MM:.6g} mm",
        f"delta_V (gamma form)    = {audit.delta_V * MM**3:.6g} mm^3",
        f"delta_V (two states)    = {dV_two * MM**3:.6g} mm^3",
        f"work integral of F_thin = {work:.6g} J (quadrature abs error {work_err:.2g} J)",
        f"energy identity error   = {identity:.3e}",
        f"dV form deviation       = {forms_dev:.3e}",
        f"F_avg                   = {audit.F_avg:.6g} N",
        f"E_in = {audit.E_in:.6g} J, E_out = {audit.E_out:.6g} J",
        "",
        f"{'n':>4}{'dV_pack [mm^3]':>18}{'dV_eq [mm^3]':>18}{'F_avg_pack [N]':>17}{'F_avg_eq [N]':>15}",
    ]
    lines += [
        f"{r['n']:>4}{r['delta_V_pack [mm^3]']:18.6g}{r['delta_V_eq [mm^3]']:18.6g}"
        f"{r['F_avg_pack [N]']:17.6g}{r['F_avg_eq [N]']:15.6g}"
        for r in rows
    ]
    lines.append("")
    lines += [f"{k}: {v}" for k, v in verdicts.items()]
    inputs = _design_inputs(cfg) | {
        "theta1 [deg]": _deg(theta1), "theta2 [deg]": _deg(cfg.theta2),
        "pressure [kPa]": P / KPA, "n": list(cfg.n),
    }
    outputs = {"single": single, "rows": rows}
    return Report(inputs, list(rows[0]), rows, verdicts, "\n".join(lines) + "\n", outputs)


# ---------------------------------------------------------------- argparse

_DESIGN_FLAGS = {"L": "length", "D": "diameter", "N": "fiber turn count"}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--strict", action="store_true",
                        help="exit 1 when consistency checks fail")
    common.add_argument("--tolerance", metavar="X", help="consistency tolerance")
    return common


def _add_design(p: argparse.ArgumentParser, wall: bool = True) -> None:
    p.add_argument("--L", metavar="LEN", help="actuator length, e.g. 145mm")
    p.add_argument("--D", metavar="LEN", help="external diameter, e.g. 17mm")
    p.add_argument("--N", metavar="X", help="fiber turns")
    p.add_argument("--theta", metavar="ANGLE", help="braid angle, e.g. 80.369deg")
    if wall:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--t-k", dest="t_k", metavar="LEN", help="absolute wall thickness")
        g.add_argument("--t-hat", dest="t_hat", metavar="X", help="relative wall thickness")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="mckibben", description="McKibben muscle pack vs. equivalent actuator calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", parents=[common], help="check and resolve L, D, N, theta")
    _add_design(p, wall=False)

    p = sub.add_parser("force", parents=[common], help="thin, thick and normalized force")
    _add_design(p)
    p.add_argument("--pressure", metavar="P", help="gauge pressure, e.g. 1kPa")

    p = sub.add_parser("compare", parents=[common], help="pack vs. equivalent actuator table")
    _add_design(p)
    p.add_argument("--n", metavar="LIST", help="fascicle counts, e.g. 1,2,4")
    p.add_argument("--policy", choices=POLICIES)
    p.add_argument("--replicate-original-error", action="store_true",
                   help="also report consistency of an equivalent with N held fixed")

    p = sub.add_parser("sweep", parents=[common], help="normalized force over (theta, t_hat)")
    for key, help_ in [("theta_min", "ANGLE"), ("theta_max", "ANGLE"), ("theta_count", "INT"),
                       ("theta_step", "ANGLE"), ("t_hat_min", "X"), ("t_hat_max", "X"),
                       ("t_hat_count", "INT"), ("t_hat_step", "X")]:
        p.add_argument("--" + key.replace("_", "-"), dest=key, metavar=help_)

    p = sub.add_parser("energy", parents=[common], help="energy audit of a stroke")
    _add_design(p)
    p.add_argument("--theta1", metavar="ANGLE", help="initial braid angle (default: reference)")
    p.add_argument("--theta2", metavar="ANGLE", help="final braid angle")
    p.add_argument("--pressure", metavar="P")
    p.add_argument("--n", metavar="LIST")
    return parser


_NOT_CONFIG = {"command", "config", "strict", "replicate_original_error"}


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.load(args.config) if args.config else RunConfig()
    overrides = {}
    for key, value in vars(args).items():
        if key in _NOT_CONFIG or value is None:
            continue
        overrides[key] = value if key in ("format", "out", "policy") else parse_value(key, value)
    return cfg.replace(**overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if args.command == "resolve":
            report = cmd_resolve(cfg, strict=args.strict)
        elif args.command == "force":
            report = cmd_force(cfg)
        elif args.command == "compare":
            report = cmd_compare(cfg, args.replicate_original_error)
        elif args.command == "sweep":
            report = cmd_sweep(cfg)
        else:
            report = cmd_energy(cfg)
    except (DomainError, ConfigError, UnitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ea.QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY

    text = report.render(cfg.format)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if report.strict_failure:
        return EXIT_VERIFY
    if args.command != "resolve" and not report.passed:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
