"""Command-line front end.

Subcommands: spectrum, det, asymp, scan, verify. Output is deterministic
CSV or JSON (schema_version 1); floats are emitted with 17 significant
digits so files are byte-identical across runs.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
error.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

from . import asymptotics as asym
from . import verify as verify_mod
from .errors import (
    ArgumentError,
    DegeneracyError,
    DomainError,
    NumericalError,
    PoleError,
)
from .kernels import Family, IntervalSpec, _coerce_family, bessel_spec
from .kernels import AIRY, SINE
from .operator import build_discretization, compute_spectrum, log_fredholm_det

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _fmt(x):
    """17-significant-digit float formatting shared by CSV and JSON."""
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


@dataclass
class RunConfig:
    """Validated run parameters; seedless determinism is unconditional."""

    family: Family = None
    a: float = None
    s: float = None
    gamma: float = None
    v: float = None
    chi: float = None
    n: int = 80
    fmt: str = "csv"
    output: str = None
    deterministic: bool = True
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 20 <= self.n <= 1000:
            raise ArgumentError(f"n must be in [20, 1000], got {self.n}")
        if self.fmt not in ("csv", "json"):
            raise ArgumentError(f"format must be csv or json, got {self.fmt}")

    @property
    def spec(self):
        if self.family is Family.BESSEL:
            if self.a is None:
                raise ArgumentError("--a is required for the bessel kernel")
            return bessel_spec(self.a)
        return SINE if self.family is Family.SINE else AIRY

    def gamma_value(self):
        """Resolve exactly one of gamma / v / chi into gamma."""
        given = [x is not None for x in (self.gamma, self.v, self.chi)]
        if sum(given) > 1:
            raise ArgumentError("supply exactly one of --gamma, --v, --chi")
        if self.gamma is not None:
            return self.gamma
        if self.v is not None:
            return -math.expm1(-self.v)
        if self.chi is not None:
            fam = self.family
            if fam is Family.AIRY:
                t = (-self.s) ** 1.5
            elif fam is Family.BESSEL:
                t = math.sqrt(self.s)
            else:
                t = self.s
            return -math.expm1(-asym.stokes_v(fam, t, self.chi, self.a or 0.0))
        return 1.0


def _emit(cfg, header, rows, summary, out=None):
    """Write rows in the configured format to the output path or stdout."""
    stream = out or sys.stdout
    if cfg.fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(_fmt(x) for x in row))
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "config_echo": _config_echo(cfg),
            "rows": [
                {h: (_fmt(x) if isinstance(x, float) else x) for h, x in zip(header, row)}
                for row in rows
            ],
            "summary": summary,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        stream.write(text)


def _config_echo(cfg):
    echo = {
        "family": cfg.family.value if cfg.family else None,
        "a": cfg.a,
        "s": cfg.s,
        "gamma": cfg.gamma,
        "v": cfg.v,
        "chi": cfg.chi,
        "n": cfg.n,
        "format": cfg.fmt,
        "deterministic": True,
    }
    echo.update(cfg.extra)
    return {k: (_fmt(v) if isinstance(v, float) else v) for k, v in echo.items()}


def cmd_spectrum(cfg, args):
    top = args.top
    d = build_discretization(cfg.spec, IntervalSpec(cfg.family, cfg.s), cfg.n)
    sp = compute_spectrum(d)
    rows = []
    for i in range(min(top, sp.n)):
        lam = float(sp.eigenvalues[i])
        one_minus = 1.0 - lam
        mu = lam / one_minus if one_minus > 0.0 else math.inf
        rows.append((i, lam, one_minus, mu))
    _emit(
        cfg,
        ("index", "lambda", "one_minus_lambda", "mu"),
        rows,
        {"n": cfg.n, "truncation": _fmt(d.truncation)},
    )
    return EXIT_OK


def cmd_det(cfg, args):
    gamma = cfg.gamma_value()
    d = build_discretization(cfg.spec, IntervalSpec(cfg.family, cfg.s), cfg.n)
    sp = compute_spectrum(d)
    logdet = log_fredholm_det(sp, gamma)
    det = math.exp(logdet) if logdet > -745.0 else 0.0
    rows = [(logdet, det, cfg.n, float(d.truncation))]
    _emit(cfg, ("log_det", "det", "n", "truncation"), rows, {"gamma": _fmt(gamma)})
    return EXIT_OK


_ASYMP_SELECTORS = (
    "sine-transition",
    "airy-transition",
    "bessel-transition",
    "airy-gap",
    "bessel-gap",
    "sine-crit",
    "sine-sub",
)


def cmd_asymp(cfg, args):
    sel = args.formula
    s, v, a = cfg.s, cfg.v, cfg.a or 0.0
    chi = cfg.chi
    if sel.endswith("transition"):
        fam = _coerce_family(sel.split("-")[0])
        if v is None:
            if chi is None:
                raise ArgumentError("transition formulas need --v or --chi")
            t = (-s) ** 1.5 if fam is Family.AIRY else (math.sqrt(s) if fam is Family.BESSEL else s)
            v = asym.stokes_v(fam, t, chi, a)
        p = args.p if args.p is not None else asym.p_of_chi(chi if chi is not None else 0.0, fam)
        if fam is Family.AIRY:
            te = asym.airy_transition(s, v, p, chi=chi)
        elif fam is Family.BESSEL:
            te = asym.bessel_transition(s, v, a, p, chi=chi)
        else:
            te = asym.sine_transition(s, v, p, chi=chi)
        rows = [
            (
                te.log_prefactor,
                ";".join(_fmt(f) for f in te.factors),
                te.p,
                te.error_exponent,
                te.log_value,
            )
        ]
        _emit(
            cfg,
            ("log_prefactor", "factors", "p", "error_exponent", "log_value"),
            rows,
            {"formula": sel, "v": _fmt(float(v))},
        )
        return EXIT_OK
    if sel == "airy-gap":
        value = asym.airy_gap(s)
    elif sel == "bessel-gap":
        value = asym.bessel_gap(s, a)
    elif sel == "sine-crit":
        value = asym.sine_det_crit(s)
    else:
        if v is None:
            raise ArgumentError("sine-sub needs --v")
        value = asym.sine_det_sub(s, v)
    _emit(cfg, ("log_value",), [(value,)], {"formula": sel})
    return EXIT_OK


def cmd_scan(cfg, args):
    grid = [float(x) for x in args.grid.split(",")]
    jobs = args.jobs
    kind = args.kind
    if kind == "eig":
        res = verify_mod.eig_ratio_scan(
            cfg.family, args.index, grid, n=cfg.n, a=cfg.a or 0.0, jobs=jobs
        )
    elif kind == "det":
        if cfg.chi is None:
            raise ArgumentError("det scans need --chi")
        res = verify_mod.det_ratio_scan(
            cfg.family, cfg.chi, grid, a=cfg.a or 0.0, n=cfg.n, jobs=jobs
        )
    elif kind == "stokes":
        res = verify_mod.stokes_crossing_scan(
            cfg.family, args.q, grid, a=cfg.a or 0.0, n=cfg.n, jobs=jobs
        )
    else:
        raise ArgumentError(f"unknown scan kind {kind!r}")
    rows = list(zip(res.grid, res.numeric, res.predicted, res.rel_error))
    summary = {
        k: (_fmt(v) if isinstance(v, float) else v)
        for k, v in res.metadata.items()
        if k != "seconds"
    }
    _emit(cfg, ("t", "numeric", "predicted", "rel_error"), rows, summary)
    return EXIT_OK


def cmd_verify(cfg, args):
    results = verify_mod.run_acceptance()
    rows = [(name, "pass" if ok else "FAIL", detail) for name, ok, detail in results]
    n_fail = sum(1 for _, ok, _ in results if not ok)
    _emit(
        cfg,
        ("criterion", "status", "detail"),
        rows,
        {"passed": len(results) - n_fail, "failed": n_fail},
    )
    return EXIT_OK if n_fail == 0 else EXIT_VERIFY_FAIL


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="gapspec",
        description="Spectra, Fredholm determinants and eigenvalue expansions "
        "of the sine, Airy and Bessel kernels.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_family=True):
        if need_family:
            p.add_argument("--kernel", choices=["sine", "airy", "bessel"])
        p.add_argument("--a", type=float, default=None, help="Bessel order")
        p.add_argument("--s", type=float, default=None, help="interval parameter")
        p.add_argument("--gamma", type=float, default=None)
        p.add_argument("--v", type=float, default=None, help="v = -ln(1-gamma)")
        p.add_argument("--chi", type=float, default=None, help="Stokes curve parameter")
        p.add_argument("--n", type=int, default=None, help="quadrature size")
        p.add_argument("--format", choices=["csv", "json"], default=None)
        p.add_argument("--output", default=None)
        p.add_argument("--config", default=None, help="optional JSON config file")

    p = sub.add_parser("spectrum", help="top eigenvalues of the discretized operator")
    common(p)
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(fn=cmd_spectrum, need=("kernel", "s"))

    p = sub.add_parser("det", help="Fredholm determinant")
    common(p)
    p.set_defaults(fn=cmd_det, need=("kernel", "s"))

    p = sub.add_parser("asymp", help="closed-form expansions")
    common(p)
    p.add_argument("--formula", choices=_ASYMP_SELECTORS, required=True)
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(fn=cmd_asymp, need=("s",))

    p = sub.add_parser("scan", help="oracle-vs-formula scans")
    common(p)
    p.add_argument("--kind", choices=["eig", "det", "stokes"], required=True)
    p.add_argument("--grid", required=True, help="comma-separated t values")
    p.add_argument("--index", type=int, default=0, help="eigenvalue index (eig scans)")
    p.add_argument("--q", type=int, default=1, help="factor index (stokes scans)")
    p.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("GAPSPEC_JOBS", "1")),
        help="parallel workers over grid points",
    )
    p.set_defaults(fn=cmd_scan, need=("kernel",))

    p = sub.add_parser("verify", help="run the full acceptance suite")
    common(p, need_family=False)
    p.set_defaults(fn=cmd_verify, need=())
    return ap


def _load_config(args):
    file_cfg = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as f:
            file_cfg = json.load(f)
        if not isinstance(file_cfg, dict):
            raise ArgumentError("config file must contain a JSON object")

    def pick(flag, key, default=None):
        val = getattr(args, flag, None)
        if val is not None:
            return val
        return file_cfg.get(key, default)

    fam_name = pick("kernel", "kernel")
    family = _coerce_family(fam_name) if fam_name else None
    cfg = RunConfig(
        family=family,
        a=pick("a", "a"),
        s=pick("s", "s"),
        gamma=pick("gamma", "gamma"),
        v=pick("v", "v"),
        chi=pick("chi", "chi"),
        n=int(pick("n", "n", 80)),
        fmt=pick("format", "format", "csv"),
        output=pick("output", "output"),
    )
    for key in getattr(args, "need", ()):
        attr = "family" if key == "kernel" else key
        if getattr(cfg, attr) is None:
            raise ArgumentError(f"--{key} is required for this command")
    if cfg.family is Family.BESSEL and cfg.a is None:
        raise ArgumentError("--a is required for the bessel kernel")
    return cfg


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = _load_config(args)
    except (ArgumentError, DomainError, OSError, json.JSONDecodeError) as exc:
        print(f"gapspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(cfg, args)
    except (ArgumentError, DomainError) as exc:
        print(f"gapspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, PoleError, DegeneracyError, FloatingPointError, OverflowError) as exc:
        print(f"gapspec: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
