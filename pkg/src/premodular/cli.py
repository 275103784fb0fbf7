"""Command-line entry point: ``premodular <subcommand> ...``.

Exit status is 0 on success, 1 when a computation raises or a verification
check fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.polynomial import format_in
from .analysis.counting import counting
from .analysis.cusp import cusp_expansion
from .analysis.evaluator import eval_Zn, exact_W
from .analysis.fiber import green_residual
from .analysis.zeros import find_zeros
from .elliptic.curve import maier_check, monodromy_exponents, sample_liouville_point
from .elliptic.torus import TorusContext
from .errors import PremodularError
from .lame.spectral import assemble_ell, consistency_polys
from .verify import SUITES, run_suite

SIG = 15


@dataclass(frozen=True)
class RunConfig:
    command: str
    options: dict = field(default_factory=dict)
    seed: int = 0
    trunc: int | None = None
    json: bool = False


# -- parsing helpers ---------------------------------------------------------

def complex_pair(text):
    try:
        a, b = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    return complex(a, b)


def real_pair(text):
    try:
        a, b = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def rational_pair(text):
    try:
        a, b = (Fraction(v) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected 'p/q,p/q', got {text!r}") from None
    return a, b


def region(text):
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        vals = ()
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("expected 're0,re1,im0,im1'")
    return vals


def s_value(text):
    if text in ("0", "half"):
        return text
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected 0, half or a number, got {text!r}") from None


def positive_n(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("n must be positive")
    return n


def fmt(x):
    x = complex(x)
    if x.imag == 0:
        return f"{x.real:.{SIG}g}"
    return f"{x.real:.{SIG}g},{x.imag:.{SIG}g}"


def jnum(x):
    x = complex(x)
    return [float(f"{x.real:.{SIG}g}"), float(f"{x.imag:.{SIG}g}")]


# -- subcommands -------------------------------------------------------------

def _ctx(cfg, tau):
    return TorusContext(tau, M=cfg.trunc)


def cmd_emit_wn(cfg):
    W = exact_W(cfg.options["n"])
    return W.to_dict() if cfg.json else format_in(W, "z")


def cmd_emit_ell(cfg):
    ell = assemble_ell(cfg.options["n"])
    return ell.to_dict() if cfg.json else format_in(ell, "B")


def cmd_emit_consistency(cfg):
    pair = consistency_polys(cfg.options["n"])
    if cfg.json:
        return {"G1": pair.G1.to_dict(), "G0": pair.G0.to_dict()}
    return f"G1 = {pair.G1}\nG0 = {pair.G0}"


def cmd_eval(cfg):
    o = cfg.options
    ctx = _ctx(cfg, o["tau"])
    r, s = o["z"]
    what = o["what"]
    if what == "Z":
        value = ctx.hecke_Z(r, s)
    elif what == "Zn":
        value = eval_Zn(o["n"], r, s, ctx=ctx)
    else:
        wp, dwp, zeta = ctx.weierstrass(ctx.from_rs(r, s))
        value = {"wp": wp, "wp_prime": dwp, "zeta": zeta}[what]
    if cfg.json:
        return {"what": what, "tau": jnum(o["tau"]), "r": r, "s": s, "value": jnum(value)}
    return fmt(value)


def cmd_sample_point(cfg):
    o = cfg.options
    ctx = _ctx(cfg, o["tau"])
    pt = sample_liouville_point(o["n"], o["B"], ctx)
    m = maier_check(pt)
    r, s = monodromy_exponents(pt)
    data = {
        "n": pt.n, "B": jnum(pt.B), "C": jnum(pt.C),
        "a": [jnum(a) for a in pt.a], "sigma": jnum(pt.sigma.z),
        "z_n": jnum(pt.zn), "residual": max(pt.residual, default=0.0), "ell_residual": pt.ell_residual,
        "maier": {"err_x": m.err_x, "err_y": m.err_y, "err_kappa": m.err_kappa, "cross_i": m.cross_i},
        "monodromy": [jnum(r), jnum(s)],
        "green_residual": abs(green_residual(pt)),
    }
    if cfg.json:
        return data
    lines = [f"n = {pt.n}", f"B = {fmt(pt.B)}", f"C = {fmt(pt.C)}"]
    lines += [f"a_{i + 1} = {fmt(a)}" for i, a in enumerate(pt.a)]
    lines += [f"sigma = {fmt(pt.sigma.z)}", f"z_n = {fmt(pt.zn)}",
              f"relation residual = {data['residual']:.3e}", f"C^2 - ell residual = {pt.ell_residual:.3e}",
              f"wp(sigma) - x0 = {m.err_x:.3e}", f"wp'(sigma) - y0 = {m.err_y:.3e}",
              f"kappa + z_n = {m.err_kappa:.3e}", f"(r, s) = ({fmt(r)}; {fmt(s)})",
              f"|Z(sigma) - z_n| = {data['green_residual']:.3e}"]
    return "\n".join(lines)


def cmd_zeros(cfg):
    o = cfg.options
    r, s = o["rs"]
    res = find_zeros(o["n"], r, s, o["region"])
    rows = [{"r": str(z.r), "s": str(z.s), "tau": jnum(z.tau), "residual": z.residual,
             "derivative": z.derivative, "winding": z.winding} for z in res.records]
    if o.get("csv"):
        with open(o["csv"], "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["r", "s", "re_tau", "im_tau", "residual", "winding"])
            for z in res.records:
                w.writerow([z.r, z.s, repr(z.tau.real), repr(z.tau.imag), z.residual, z.winding])
    unresolved = [str(u) for u in res.unresolved]
    if cfg.json:
        return {"zeros": rows, "total_winding": res.total_winding, "unresolved": unresolved}
    lines = [f"{len(rows)} zero(s); scan winding {res.total_winding}, {len(unresolved)} unresolved cell(s)"]
    for z in res.records:
        lines.append(f"tau = {fmt(z.tau)}  |Z_n|/scale = {z.residual:.3e}  "
                     f"|dZ_n/dtau|/scale = {z.derivative:.3e}  winding = {z.winding}")
    lines += [f"unresolved: {u}" for u in unresolved]
    return "\n".join(lines)


def cmd_cusp(cfg):
    o = cfg.options
    fit = cusp_expansion(o["n"], o["s"], o["t"])
    if cfg.json:
        return {"order": fit.order, "coefficient": jnum(fit.coefficient), "heights": list(fit.heights),
                "order_estimate": fit.order_estimate, "spread": fit.spread}
    return f"order {fit.order}\ncoefficient {fmt(fit.coefficient)}"


def cmd_count(cfg):
    rep = counting(cfg.options["n"], cfg.options["N"])
    if cfg.json:
        return rep.as_dict()
    lines = [f"{k} = {v}" for k, v in rep.as_dict().items()]
    if rep.flagged:
        lines.append("note: the count without the elliptic-point term is not an integer")
    return "\n".join(lines)


def cmd_verify(cfg):
    checks = run_suite(cfg.options["suite"], seed=cfg.seed)
    ok = all(c.passed for c in checks)
    if cfg.json:
        data = {"suite": cfg.options["suite"], "seed": cfg.seed, "passed": ok,
                "checks": [{"name": c.name, "value": c.value, "tol": c.tol, "passed": c.passed,
                            "detail": c.detail} for c in checks]}
        return data, ok
    lines = [f"suite {cfg.options['suite']} (seed {cfg.seed})"] + [c.line() for c in checks]
    lines.append("OK" if ok else "FAILED")
    return "\n".join(lines), ok


COMMANDS = {
    "emit-wn": cmd_emit_wn,
    "emit-ell": cmd_emit_ell,
    "emit-consistency": cmd_emit_consistency,
    "eval": cmd_eval,
    "sample-point": cmd_sample_point,
    "zeros": cmd_zeros,
    "cusp": cmd_cusp,
    "count": cmd_count,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trunc", type=int, default=None, metavar="M", help="q-series truncation order")
    common.add_argument("--json", action="store_true")

    p = argparse.ArgumentParser(prog="premodular", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("emit-wn", "emit-ell", "emit-consistency"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--n", type=positive_n, required=True)

    sp = sub.add_parser("eval", parents=[common])
    sp.add_argument("--what", choices=("wp", "wp_prime", "zeta", "Z", "Zn"), required=True)
    sp.add_argument("--tau", type=complex_pair, required=True)
    sp.add_argument("--z", type=real_pair, required=True, metavar="r,s", help="z = r + s tau")
    sp.add_argument("--n", type=positive_n, default=None, help="required for --what Zn")

    sp = sub.add_parser("sample-point", parents=[common])
    sp.add_argument("--n", type=positive_n, required=True)
    sp.add_argument("--B", type=complex_pair, required=True)
    sp.add_argument("--tau", type=complex_pair, required=True)

    sp = sub.add_parser("zeros", parents=[common])
    sp.add_argument("--n", type=positive_n, required=True)
    sp.add_argument("--rs", type=rational_pair, required=True, metavar="k1/N,k2/N")
    sp.add_argument("--region", type=region, default=(-0.5, 0.5, 0.5, 4.0))
    sp.add_argument("--csv", default=None, help="also write zero locations to this CSV file")

    sp = sub.add_parser("cusp", parents=[common])
    sp.add_argument("--n", type=positive_n, required=True)
    sp.add_argument("--s", type=s_value, required=True)
    sp.add_argument("--t", type=Fraction, required=True)

    sp = sub.add_parser("count", parents=[common])
    sp.add_argument("--n", type=positive_n, required=True)
    sp.add_argument("--N", type=int, required=True)

    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    return p


def parse(argv):
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "eval" and ns.what == "Zn" and ns.n is None:
        parser.error("--what Zn needs --n")
    opts = {k: v for k, v in vars(ns).items() if k not in ("command", "seed", "trunc", "json")}
    return RunConfig(ns.command, opts, ns.seed, ns.trunc, ns.json)


def dispatch(argv=None):
    try:
        cfg = parse(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = COMMANDS[cfg.command](cfg)
    except PremodularError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    ok = True
    if isinstance(out, tuple):
        out, ok = out
    print(json.dumps(out, indent=2) if cfg.json else out)
    return 0 if ok else 1


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
