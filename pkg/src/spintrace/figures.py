"""Data series for the six standard plots, and the CSV writer used for them."""

import json
from dataclasses import dataclass

import numpy as np

from .dynamics import BathType, ModelParams, Scaling, TwoQubitState, concurrence, evolve, f_and_g, outer_ratio
from .limits import c_infinity, f_infinite_n, gaussian_envelope

# default parameters per figure; sweep figures use (start, stop) as the swept range
FIGURE_DEFAULTS = {
    1: dict(n_bath=100, gamma=2.0, hbeta=1.0, mu=4.0, lam=0.0, t_start=0.0, t_stop=20.0, steps=400),
    2: dict(n_bath=100, gamma=4.0, hbeta=4.0, mu=0.0, lam=2.0, t_start=0.0, t_stop=10.0, steps=400),
    3: dict(n_bath=100, gamma=1.0, hbeta=1.0, mu=0.0, lam=2.0, t_start=0.0, t_stop=20.0, steps=400),
    4: dict(n_bath=100, gamma=1.0, hbeta=0.0, mu=0.0, lam=2.0, t_start=0.0, t_stop=20.0, steps=400),
    5: dict(gamma=2.0, t_start=0.0, t_stop=10.0, steps=400),
    6: dict(lam=2.0, t_start=0.05, t_stop=20.0, steps=400),
}


@dataclass
class Table:
    columns: list
    data: np.ndarray
    meta: dict

    def to_csv(self, fh):
        write_csv(fh, self.columns, self.data, self.meta)


def write_csv(fh, columns, data, meta):
    """``#`` metadata line, header row, then rows at 17 significant digits."""
    fh.write("# " + json.dumps(meta, sort_keys=True) + "\n")
    fh.write(",".join(columns) + "\n")
    for row in np.asarray(data):
        fh.write(",".join(f"{float(v) + 0.0:.17g}" for v in row) + "\n")


def _params(cfg):
    return ModelParams(lam=cfg.get("lam", 0.0), gamma=cfg.get("gamma", 0.0), mu=cfg.get("mu", 0.0),
                       delta=cfg.get("delta", 0.0), h=cfg.get("hbeta", 0.0), beta=1.0,
                       n_bath=cfg.get("n_bath", 100),
                       bath_type=BathType.DELTA_Z, scaling=Scaling.SQRT_N)


def figure_data(fig, **overrides):
    """Columns for figure ``fig`` (1..6); keyword overrides replace defaults."""
    if fig not in FIGURE_DEFAULTS:
        raise ValueError(f"figure id must be 1..6, got {fig}")
    cfg = dict(FIGURE_DEFAULTS[fig])
    cfg.update({k: v for k, v in overrides.items() if v is not None})
    if cfg["steps"] < 2 or not cfg["t_stop"] > cfg["t_start"]:
        raise ValueError("need steps >= 2 and stop > start")
    x = np.linspace(cfg["t_start"], cfg["t_stop"], int(cfg["steps"]))
    meta = {"figure": fig, **cfg}

    if fig == 1:
        p = _params(cfg)
        ratio = outer_ratio(p, x)
        states = evolve(p, TwoQubitState.bell_outer(), x)
        conc = np.array([concurrence(s) for s in states])
        env = gaussian_envelope(p, x)
        ref = np.real(np.exp(4j * p.mu * x)) * env
        cols = ["t", "re_rho14_ratio", "im_rho14_ratio", "concurrence", "re_rho14_ratio_inf", "concurrence_inf"]
        return Table(cols, np.column_stack([x, ratio.real, ratio.imag, conc, ref, env]), meta)

    if fig in (2, 3, 4):
        p = _params(cfg)
        states = evolve(p, TwoQubitState.bell_inner(), x)
        conc = np.array([concurrence(s) for s in states])
        fg = np.array([f_and_g(p, t) for t in x], dtype=object)
        f = np.array([complex(v) for v in fg[:, 0]])
        g = np.array([float(v) for v in fg[:, 1]])
        if fig < 4:
            cols = ["t", "re_f", "im_f", "g", "concurrence"]
            return Table(cols, np.column_stack([x, f.real, f.imag, g, conc]), meta)
        f_inf = np.array([f_infinite_n(p.lam, p.gamma, t) for t in x])
        c_inf = np.full_like(x, c_infinity(p.lam, p.gamma))
        cols = ["t", "f", "concurrence", "f_inf", "concurrence_inf", "c_infinity"]
        return Table(cols, np.column_stack([x, f.real, conc, f_inf, 1 - f_inf, c_inf]), meta)

    if fig == 5:
        c = np.array([c_infinity(v, cfg["gamma"]) for v in x])
        return Table(["lambda", "c_infinity"], np.column_stack([x, c]), meta)

    c = np.array([c_infinity(cfg["lam"], v) for v in x])
    return Table(["gamma", "c_infinity"], np.column_stack([x, c]), meta)
