"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 bad arguments, 3 I/O error,
4 model-assumption violation.
"""

import argparse
import contextlib
import json
import sys

import numpy as np

from .collective import HalfInt, allowed_j, identity_report, multiplicity
from .dynamics import (BathType, BlockFormError, ModelParams, Scaling, TwoQubitState, concurrence,
                       evolve)
from .figures import figure_data, write_csv
from .limits import c_infinity, f_asymptote
from .oracle import build_full, compare_report, exact_evolve
from .wigner import verify_decomposition, wigner3j

EXIT_OK, EXIT_MISMATCH, EXIT_ARGS, EXIT_IO, EXIT_MODEL = 0, 1, 2, 3, 4

# config-file key -> argparse dest
_CONFIG_KEYS = {
    "lambda": "lam", "gamma": "gamma", "mu": "mu", "delta": "delta", "hbeta": "hbeta",
    "n": "n", "bath": "bath", "scaling": "scaling", "t_start": "t_start", "t_stop": "t_stop",
    "steps": "steps", "initial": "initial", "out": "out", "format": "format", "tol": "tol",
    "seed": "seed", "rho_real": "rho_real", "rho_imag": "rho_imag",
}
_DEFAULTS = {
    "lam": 0.0, "gamma": 0.0, "mu": 0.0, "delta": 0.0, "hbeta": 0.0, "n": None,
    "bath": "deltaz", "scaling": "sqrtn", "t_start": 0.0, "t_stop": 10.0, "steps": 400,
    "initial": "bell-outer", "out": None, "format": "csv", "tol": 1e-10, "seed": 0,
    "rho_real": None, "rho_imag": None,
}


class UsageError(Exception):
    pass


def _half(s):
    try:
        return HalfInt.of(s)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"not a half-integer: {s!r}") from None


def _model_flags(p):
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--hbeta", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--bath", choices=["deltaz", "sigmaz"], default=None)
    p.add_argument("--scaling", choices=["sqrtn", "linearn"], default=None)
    p.add_argument("--config", default=None, help="flat JSON file; flags override its values")


def _time_flags(p):
    p.add_argument("--t-start", dest="t_start", type=float, default=None)
    p.add_argument("--t-stop", dest="t_stop", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)


def build_parser():
    parser = argparse.ArgumentParser(prog="spintrace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiplicity", help="multiplicities nu(N, j) and sum-rule checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=_half, default=None)

    p = sub.add_parser("wigner3j", help="exact 3j symbol; pass negatives as --m2=-1/2")
    for name in ("j1", "j2", "j3", "m1", "m2", "m3"):
        p.add_argument(f"--{name}", type=_half, required=True)

    p = sub.add_parser("verify-decomposition", help="check the two-part decomposition law exactly")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)

    p = sub.add_parser("simulate", help="evolve the two qubits and write rho(t) and concurrence")
    _model_flags(p)
    _time_flags(p)
    p.add_argument("--initial", choices=["bell-outer", "bell-inner", "custom"], default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default=None)

    p = sub.add_parser("figure", help="write the data series of figure 1..6 as CSV")
    p.add_argument("id", type=int, choices=range(1, 7))
    _model_flags(p)
    _time_flags(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("oracle-check", help="compare closed forms with brute-force evolution")
    _model_flags(p)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--draws", type=int, default=20)

    p = sub.add_parser("asymptote", help="long-time f and concurrence for infinite N, beta = 0")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    return parser


def _merged(args, defaults=_DEFAULTS):
    """Defaults < config file < explicit flags."""
    cfg = dict(defaults)
    path = getattr(args, "config", None)
    if path:
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except OSError as err:
            raise OSError(f"cannot read config {path}: {err}") from err
        except json.JSONDecodeError as err:
            raise UsageError(f"config {path} is not valid JSON: {err}") from err
        for key, val in raw.items():
            if key not in _CONFIG_KEYS:
                raise UsageError(f"unknown config key {key!r}")
            cfg[_CONFIG_KEYS[key]] = val
    for dest in set(_CONFIG_KEYS.values()):
        val = getattr(args, dest, None)
        if val is not None:
            cfg[dest] = val
    return cfg


def _params(cfg, n_default=100):
    n = cfg["n"] if cfg["n"] is not None else n_default
    try:
        return ModelParams(lam=cfg["lam"], gamma=cfg["gamma"], mu=cfg["mu"], delta=cfg["delta"],
                           h=cfg["hbeta"], beta=1.0, n_bath=n,
                           bath_type=BathType(cfg["bath"]), scaling=Scaling(cfg["scaling"]))
    except (TypeError, ValueError) as err:
        raise UsageError(f"bad model parameters: {err}") from err


def _open_out(path, out):
    if path in (None, "-"):
        return contextlib.nullcontext(out)
    return open(path, "w", newline="")


def cmd_multiplicity(args, out):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    js = allowed_j(args.n)
    if args.j is not None:
        if args.j not in js:
            raise UsageError(f"j = {args.j} is not allowed for N = {args.n}")
        js = [args.j]
    out.write("j,nu\n")
    for j in js:
        out.write(f"{j},{multiplicity(args.n, j)}\n")
    rep = identity_report(args.n)
    for c in rep.checks:
        out.write(f"# identity {c.name}: {c.lhs} == {c.rhs} {'pass' if c.passed else 'FAIL'}\n")
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_wigner3j(args, out):
    try:
        val = wigner3j(args.j1, args.j2, args.j3, args.m1, args.m2, args.m3)
    except ValueError as err:
        raise UsageError(str(err)) from err
    out.write(f"{val} = {val.to_float():.17g}\n")
    return EXIT_OK


def cmd_verify_decomposition(args, out):
    if args.n1 < 1 or args.n2 < 1 or args.n1 + args.n2 > 12:
        raise UsageError("need N1, N2 >= 1 and N1 + N2 <= 12")
    rep = verify_decomposition(args.n1, args.n2)
    out.write("J,rhs,nu,status\n")
    for r in rep.rows:
        out.write(f"{r.J},{r.rhs},{r.nu},{'pass' if r.passed else 'FAIL'}\n")
    out.write(f"# stretched identity: {rep.stretched}\n")
    if rep.zero_j is not None:
        out.write(f"# J=0 from sum_j nu(N1,j) nu(N2,j): {rep.zero_j}\n")
    out.write(f"# {'PASS' if rep.passed else 'FAIL'}\n")
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def _initial_state(cfg):
    kind = cfg["initial"]
    if kind == "bell-outer":
        return TwoQubitState.bell_outer()
    if kind == "bell-inner":
        return TwoQubitState.bell_inner()
    if kind != "custom" or cfg["rho_real"] is None:
        raise UsageError("custom initial state needs rho_real (and optionally rho_imag) in --config")
    m = np.array(cfg["rho_real"], dtype=float) + 1j * np.array(cfg["rho_imag"] or np.zeros((4, 4)), dtype=float)
    try:
        st = TwoQubitState(m)
    except ValueError as err:
        raise UsageError(str(err)) from err
    problems = st.problems()
    if problems:
        raise UsageError("custom state: " + ", ".join(problems))
    return st


_ENTRIES = [(0, 0), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0), (3, 3)]


def cmd_simulate(args, out):
    cfg = _merged(args)
    if cfg["steps"] < 2 or not cfg["t_stop"] > cfg["t_start"] >= 0:
        raise UsageError("need steps >= 2 and t_stop > t_start >= 0")
    params = _params(cfg)
    rho0 = _initial_state(cfg)
    times = np.linspace(cfg["t_start"], cfg["t_stop"], int(cfg["steps"]))
    states = evolve(params, rho0, times)
    cols = ["t"]
    for i, j in _ENTRIES:
        cols += [f"re_rho{i + 1}{j + 1}", f"im_rho{i + 1}{j + 1}"]
    cols.append("concurrence")
    rows = []
    for t, s in zip(times, states):
        row = [t]
        for i, j in _ENTRIES:
            row += [s[i, j].real, s[i, j].imag]
        row.append(concurrence(s))
        rows.append(row)
    meta = {k: v for k, v in cfg.items() if k not in ("out",)}
    with _open_out(cfg["out"], out) as fh:
        if cfg["format"] == "json":
            json.dump({"config": meta, "columns": cols, "rows": rows}, fh)
            fh.write("\n")
        else:
            write_csv(fh, cols, np.array(rows), meta)
    return EXIT_OK


_FIG_FLAG_MAP = {"lam": "lam", "gamma": "gamma", "mu": "mu", "delta": "delta", "hbeta": "hbeta",
                 "n": "n_bath", "t_start": "t_start", "t_stop": "t_stop", "steps": "steps"}


def cmd_figure(args, out):
    explicit = _merged(args, defaults={})
    overrides = {_FIG_FLAG_MAP[k]: v for k, v in explicit.items() if k in _FIG_FLAG_MAP}
    try:
        table = figure_data(args.id, **overrides)
    except ValueError as err:
        raise UsageError(str(err)) from err
    with _open_out(args.out, out) as fh:
        table.to_csv(fh)
    return EXIT_OK


def _random_block_state(rng):
    m = np.zeros((4, 4), dtype=complex)
    for idx in ((0, 3), (1, 2)):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        m[np.ix_(idx, idx)] = a @ a.conj().T
    return TwoQubitState(m / np.trace(m).real)


def cmd_oracle_check(args, out):
    cfg = _merged(args)
    n = cfg["n"] if cfg["n"] is not None else 2
    if not 1 <= n <= 3:
        raise UsageError("oracle-check needs 1 <= --n <= 3")
    rng = np.random.default_rng(cfg["seed"])
    baths = [BathType(args.bath)] if args.bath else list(BathType)
    times = [0.3, 1.1, 2.7]
    worst = (0.0, None)
    failed = 0
    out.write("draw,bath,max_dev,concurrence_dev,status\n")
    for k in range(args.draws):
        for bath in baths:
            draw = dict(lam=rng.uniform(-2, 2), gamma=rng.uniform(-3, 3), mu=rng.uniform(-2, 2),
                        h=rng.uniform(-2, 2), beta=rng.uniform(0, 2), delta=0.0)
            fixed = {"lam": args.lam, "gamma": args.gamma, "mu": args.mu, "delta": args.delta}
            draw.update({k2: v for k2, v in fixed.items() if v is not None})
            if args.hbeta is not None:
                draw.update(h=args.hbeta, beta=1.0)
            scaling = Scaling(args.scaling) if args.scaling else Scaling(rng.choice(["sqrtn", "linearn"]))
            p = ModelParams(n_bath=n, bath_type=bath, scaling=scaling, **draw)
            rho0 = _random_block_state(rng)
            sysm = build_full(p)
            analytic = evolve(p, rho0, times)
            exact = [exact_evolve(sysm, rho0, t) for t in times]
            rep = compare_report(analytic, exact, cfg["tol"])
            w = rep.worst
            dev = max(w.max_dev, w.concurrence_dev)
            if dev >= worst[0]:
                worst = (dev, (k, bath.value, p))
            failed += not rep.passed
            out.write(f"{k},{bath.value},{w.max_dev:.3e},{w.concurrence_dev:.3e},"
                      f"{'pass' if rep.passed else 'FAIL'}\n")
    out.write(f"# worst deviation {worst[0]:.3e} at draw {worst[1][0]} ({worst[1][1]}): {worst[1][2]}\n")
    verdict = "PASS" if not failed else f"FAIL ({failed} runs above tol {cfg['tol']:g})"
    out.write(f"# {verdict}\n")
    return EXIT_OK if not failed else EXIT_MISMATCH


def cmd_asymptote(args, out):
    if args.gamma == 0:
        raise UsageError("gamma must be nonzero")
    out.write(f"f_infinity,{f_asymptote(args.lam, args.gamma):.17g}\n")
    out.write(f"c_infinity,{c_infinity(args.lam, args.gamma):.17g}\n")
    return EXIT_OK


COMMANDS = {
    "multiplicity": cmd_multiplicity,
    "wigner3j": cmd_wigner3j,
    "verify-decomposition": cmd_verify_decomposition,
    "simulate": cmd_simulate,
    "figure": cmd_figure,
    "oracle-check": cmd_oracle_check,
    "asymptote": cmd_asymptote,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as err:
        print(f"spintrace: error: {err}", file=sys.stderr)
        return EXIT_ARGS
    except BlockFormError as err:
        print(f"spintrace: model assumption violated: {err}", file=sys.stderr)
        return EXIT_MODEL
    except OSError as err:
        print(f"spintrace: I/O error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
