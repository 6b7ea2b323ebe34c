"""Batch command-line front end.

    bilab lagrangian --prescription bina --algebra su2 --random 100 --seed 7
    bilab soliton {shoot,scan,energy} ...
    bilab scalar {derrick,portrait,singular} ...
    bilab scalar frw fixpoints --beta B --gamma G

Precedence for every option: command-line flag, then the --config JSON file,
then the built-in default.  Exit codes: 0 success, 2 configuration error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import __version__
from . import lagrangians as lg
from . import scalar_dynamics as sd
from . import soliton as sol
from .liealg import LieBasis, build_su2, build_sun, build_u1
from .nc_calculus import NCConnection

EXIT_OK, EXIT_CONFIG, EXIT_IO = 0, 2, 3
SIGNATURE = "mostly-plus"

DEFAULTS = {
    "output": None,
    "workers": None,
    # lagrangian
    "prescription": "bina",
    "algebra": "su2",
    "random": None,
    "seed": 0,
    "scale": 0.5,
    "beta": 1.0,
    "mass": 1.0,
    "metric": "minkowski",
    "input": None,
    "crosscheck": False,
    # soliton
    "tauc": None,
    "c": None,
    "emit_profile": None,
    "profile": None,
    "r_min": 1e-3,
    "rtol": 1e-10,
    "atol": 1e-12,
    # scalar
    "grid": "-2:3:101,-3:3:101",
    "phi": "-0.4:1.4:10",
    "u": "-1:1:9",
    "tmax": 20.0,
    "box": None,
    "gamma": 1.0,
    "kappa": 1.0,
}


class ConfigError(ValueError):
    pass


# --- helpers ---------------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, np.generic):
        return _jsonable(x.item())
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def config_hash(cfg: dict) -> str:
    blob = json.dumps(_jsonable(cfg), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def csv_text(cfg: dict, header, rows) -> str:
    buf = io.StringIO()
    buf.write(f"# bilab {__version__} config={config_hash(cfg)} signature={SIGNATURE}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])
    return buf.getvalue()


def json_text(cfg: dict, payload: dict) -> str:
    doc = {"bilab": __version__, "config": config_hash(cfg), "signature": SIGNATURE}
    doc.update(payload)
    return json.dumps(_jsonable(doc), indent=2, sort_keys=True) + "\n"


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_json(path):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: malformed JSON ({exc})") from exc


def _positive(cfg, *keys):
    for k in keys:
        v = cfg.get(k)
        if v is None:
            continue
        if not isinstance(v, (int, float)) or not math.isfinite(v) or v <= 0:
            raise ConfigError(f"{k} must be a positive finite number, got {v!r}")


def _range_step(spec: str) -> np.ndarray:
    """'a:b:step' -> a, a+step, ..., up to and including b."""
    try:
        a, b, h = (float(x) for x in spec.split(":"))
    except ValueError as exc:
        raise ConfigError(f"range {spec!r} must be start:stop:step") from exc
    if h <= 0 or b < a:
        raise ConfigError(f"range {spec!r} needs step > 0 and stop >= start")
    n = int(math.floor((b - a) / h + 1e-9)) + 1
    return a + h * np.arange(n)


def _linspace(spec: str) -> np.ndarray:
    """'lo:hi:n' -> n evenly spaced points."""
    try:
        lo, hi, n = spec.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError as exc:
        raise ConfigError(f"grid {spec!r} must be lo:hi:n") from exc
    if n < 1 or hi < lo:
        raise ConfigError(f"grid {spec!r} needs n >= 1 and hi >= lo")
    return np.linspace(lo, hi, n)


def _box(spec):
    if spec is None:
        return sd.DEFAULT_BOX
    try:
        p, u = spec.split(",")
        (p0, p1), (u0, u1) = (tuple(float(x) for x in p.split(":")),
                              tuple(float(x) for x in u.split(":")))
    except ValueError as exc:
        raise ConfigError(f"box {spec!r} must be phi_lo:phi_hi,u_lo:u_hi") from exc
    return (p0, p1), (u0, u1)


def _workers(cfg) -> int:
    w = cfg.get("workers")
    if w is None:
        env = os.environ.get("BILAB_WORKERS")
        try:
            w = int(env) if env else 1
        except ValueError as exc:
            raise ConfigError(f"BILAB_WORKERS={env!r} is not an integer") from exc
    if int(w) < 1:
        raise ConfigError("workers must be >= 1")
    return int(w)


def _basis(name: str) -> LieBasis:
    if name == "u1":
        return build_u1()
    m = re.fullmatch(r"su(\d+)", name or "")
    if not m:
        raise ConfigError(f"unknown algebra {name!r} (use u1, su2, su3, ...)")
    n = int(m.group(1))
    if n < 2:
        raise ConfigError("su(n) needs n >= 2")
    return build_su2() if n == 2 else build_sun(n)


def _metric(name, d=4):
    if name == "minkowski":
        return lg.minkowski(d)
    if name == "euclidean":
        return lg.euclidean(d)
    raise ConfigError(f"unknown metric {name!r}")


def _cplx(v):
    if isinstance(v, dict):
        return np.asarray(v["re"], float) + 1j * np.asarray(v.get("im", 0.0), float)
    return np.asarray(v, complex)


# --- lagrangian ------------------------------------------------------------------

_J_ALT = np.array([[0.0, 1.0], [-1.0, 0.0]])


def _field_value(presc, s, basis, cross):
    b2 = s.beta ** 2
    if presc == "bi":
        L = lg.bi_abelian(s)
        alt = lg.bi_invariant_form(*lg.abelian_invariants(s), s.beta) if cross else None
    elif presc == "bina":
        L = lg.bina(s, basis, b2)
        if not cross:
            alt = None
        elif basis.N == 1:
            alt = lg.bi_abelian(s)
        elif basis.N == 3 and basis.d_R == 2:
            alt = b2 * lg.bina_su2_closed(*lg.invariants_su2(s, basis))
        else:
            alt = lg.bina(s, basis, b2, J=_J_ALT)
    elif presc == "sym4":
        L = lg.sym_trace_order4(s, basis, b2)
        alt = lg.sym_trace_order4_traces(s, basis, b2) if cross else None
    elif presc == "park":
        L = lg.park(s, basis, b2)
        if cross:
            X = lg.hat_lift(s, basis) / s.beta
            det = np.prod(np.linalg.eigvals(np.eye(X.shape[0]) + X))
            alt = b2 * (abs(det) ** (1.0 / (2 * basis.d_R)) - 1.0)
        else:
            alt = None
    elif presc == "gk":
        # beyond the field bound the radicand is negative: a NaN row, not an error
        P, S = lg.galtsov_kerner_invariants(s, basis)
        ok = 1 + 2 * P / b2 - (S / b2) ** 2 >= 0
        L = b2 * lg.galtsov_kerner(P / b2, S / b2) if ok else float("nan")
        if cross:
            t2 = lg.lift_traces(s, basis, 2)[2].real
            P2 = t2 / (4 * basis.d_R)
            ok2 = 1 + 2 * P2 - (S / b2) ** 2 >= 0
            alt = b2 * lg.galtsov_kerner(P2, S / b2) if ok2 else float("nan")
        else:
            alt = None
    else:
        raise ConfigError(f"unknown prescription {presc!r}")
    return L, alt


def _field_samples(cfg, basis, metric):
    if cfg["input"] is not None:
        data = _load_json(cfg["input"])
        items = data.get("samples") if isinstance(data, dict) else data
        if not isinstance(items, list):
            raise ConfigError("field file must be a list of samples or {'samples': [...]}")
        out = []
        for i, it in enumerate(items):
            try:
                g = np.asarray(it.get("metric", metric), float)
                out.append(lg.FieldSample(np.asarray(it["F"], float), g, float(it.get("beta", cfg["beta"]))))
            except (KeyError, TypeError, ValueError, AttributeError) as exc:
                raise ConfigError(f"sample {i}: {exc}") from exc
        return out
    rng = np.random.default_rng(cfg["seed"])
    return [lg.random_field(rng, basis.N, metric, cfg["scale"], cfg["beta"]) for _ in range(cfg["random"])]


def _random_conn(rng, basis, d, scale, K=2):
    def ah(*shape):
        X = rng.normal(scale=scale, size=shape + (K, K)) + 1j * rng.normal(scale=scale, size=shape + (K, K))
        return (X - np.swapaxes(X, -1, -2).conj()) / 2

    return NCConnection(basis, ah(d), ah(basis.N), ah(d, d), ah(d, basis.N))


def _binc_rows(cfg, metric, cross):
    su2 = build_su2()
    if cfg["input"] is not None:
        data = _load_json(cfg["input"])
        items = data.get("samples") if isinstance(data, dict) else data
        conns = []
        for i, it in enumerate(items or []):
            try:
                conns.append(NCConnection(su2, _cplx(it["A"]), _cplx(it["phi"]),
                                          _cplx(it["dA"]) if "dA" in it else None,
                                          _cplx(it["dphi"]) if "dphi" in it else None))
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"sample {i}: {exc}") from exc
    else:
        rng = np.random.default_rng(cfg["seed"])
        conns = [_random_conn(rng, su2, 4, cfg["scale"]) for _ in range(cfg["random"])]
    b, m = cfg["beta"], cfg["mass"]
    rows = []
    for i, c in enumerate(conns):
        L = b * b * lg.binc(c, metric, b, m)
        row = [i, float(np.linalg.norm(c.A)), float(np.linalg.norm(c.phi)), L]
        if cross:
            alt = b * b * lg.binc(c, metric, b, m, J=_J_ALT)
            row += [alt, abs(L - alt)]
        rows.append(row)
    header = ["sample", "norm_A", "norm_phi", "L"] + (["L_alt", "abs_diff"] if cross else [])
    return header, rows


def _scalar_rows(cfg, ansatz, metric, cross):
    if ansatz not in lg.SCALAR_ANSATZE:
        raise ConfigError(f"unknown scalar ansatz {ansatz!r}; choose from {lg.SCALAR_ANSATZE}")
    su2 = build_su2()
    d = metric.shape[0]
    gi = np.linalg.inv(metric)
    if cfg["input"] is not None:
        data = _load_json(cfg["input"])
        items = data.get("samples") if isinstance(data, dict) else data
        try:
            pairs = [(np.asarray(it["phi"], float), np.asarray(it["dphi"], float)) for it in items]
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"scalar samples need phi and dphi: {exc}") from exc
    else:
        rng = np.random.default_rng(cfg["seed"])
        sc = cfg["scale"]
        if ansatz == "diagonal":
            pairs = [(np.asarray(rng.uniform(-1, 2)), rng.normal(scale=sc, size=d)) for _ in range(cfg["random"])]
        else:
            pairs = [(rng.normal(size=3), rng.normal(scale=sc, size=(d, 3))) for _ in range(cfg["random"])]
    b, m = cfg["beta"], cfg["mass"]
    rows = []
    for phi, dphi in pairs:
        if ansatz == "diagonal":
            grad = float(dphi @ gi @ dphi)
            ins = [float(phi), grad]
        else:
            grad = dphi.T @ gi @ dphi
            ins = list(phi) + [grad[i, j] for i in range(3) for j in range(i, 3)]
        try:
            L = b * b * lg.scalar_closed_form(ansatz, phi, grad, b, m)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        row = ins + [L]
        if cross:
            conn = lg.scalar_connection(ansatz, phi, dphi, su2, d)
            alt = b * b * lg.binc(conn, metric, b, m)
            row += [alt, abs(L - alt)]
        rows.append(row)
    if ansatz == "diagonal":
        header = ["phi", "grad2"]
    else:
        header = ["phi1", "phi2", "phi3"] + [f"G{i + 1}{j + 1}" for i in range(3) for j in range(i, 3)]
    header += ["L"] + (["L_det", "abs_diff"] if cross else [])
    return header, rows


def cmd_lagrangian(cfg: dict) -> int:
    _positive(cfg, "beta", "scale")
    if cfg["input"] is None:
        if cfg["random"] is None or int(cfg["random"]) < 1:
            raise ConfigError("give --input FILE or --random N (N >= 1)")
        cfg["random"] = int(cfg["random"])
    presc = cfg["prescription"]
    cross = bool(cfg["crosscheck"])
    metric = _metric(cfg["metric"])
    if presc.startswith("scalar:"):
        header, rows = _scalar_rows(cfg, presc.split(":", 1)[1], metric, cross)
    elif presc == "binc":
        header, rows = _binc_rows(cfg, metric, cross)
    elif presc in lg.PRESCRIPTIONS:
        basis = _basis("u1" if presc == "bi" else cfg["algebra"])
        samples = _field_samples(cfg, basis, metric)
        rows = []
        for i, s in enumerate(samples):
            if s.N != basis.N:
                raise ConfigError(f"sample {i} has {s.N} field components, algebra needs {basis.N}")
            try:
                L, alt = _field_value(presc, s, basis, cross)
            except ValueError as exc:
                raise ConfigError(f"sample {i}: {exc}") from exc
            iu = np.triu_indices(s.d, 1)
            row = [i] + [float(v) for a in range(s.N) for v in s.F[a][iu]] + [L]
            if cross:
                row += [alt, abs(L - alt)]
            rows.append(row)
        d = samples[0].d if samples else 4
        names = [f"F{a}_{m}{n}" for a in range(basis.N) for m, n in zip(*np.triu_indices(d, 1))]
        header = ["sample"] + names + ["L"] + (["L_alt", "abs_diff"] if cross else [])
    else:
        raise ConfigError(f"unknown prescription {presc!r}")
    _emit(csv_text(cfg, header, rows), cfg["output"])
    if cross and rows:
        diffs = [r[-1] for r in rows if math.isfinite(r[-1])]
        print(f"max abs_diff {max(diffs, default=float('nan')):.3e} over {len(diffs)} finite rows",
              file=sys.stderr)
    return EXIT_OK


# --- soliton ---------------------------------------------------------------------

def _shoot_config(cfg) -> sol.ShootConfig:
    _positive(cfg, "r_min", "rtol", "atol")
    return sol.ShootConfig(r_min=cfg["r_min"], rtol=cfg["rtol"], atol=cfg["atol"])


def cmd_soliton(cfg: dict) -> int:
    action = cfg["action"]
    if action == "energy":
        if cfg["profile"] is None:
            raise ConfigError("energy needs --profile FILE")
        data = _load_json(cfg["profile"])
        try:
            tau, k, u = (np.asarray(data[key], float) for key in ("tau", "k", "u"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"profile needs tau, k and u arrays: {exc}") from exc
        if not (tau.shape == k.shape == u.shape) or tau.size < 3:
            raise ConfigError("profile arrays must have equal length >= 3")
        prof = sol.Profile(float(data.get("tau_c", "nan")), tau, k, u)
        _emit(json_text(cfg, {"energy": sol.energy(prof)}), cfg["output"])
        return EXIT_OK
    scfg = _shoot_config(cfg)
    if action == "shoot":
        if cfg["c"] is not None:
            _positive(cfg, "c")
            tau_c = math.log(cfg["c"])
        elif cfg["tauc"] is not None:
            tau_c = float(cfg["tauc"])
        else:
            raise ConfigError("shoot needs --tauc or --c")
        prof = sol.shoot(tau_c, scfg)
        if cfg["emit_profile"]:
            doc = {"summary": prof.summary(), "tau_c": tau_c, "tau": prof.tau, "k": prof.k, "u": prof.u}
            _emit(json_text(cfg, doc), cfg["emit_profile"])
        _emit(json_text(cfg, {"solution": prof.summary()}), cfg["output"])
        return EXIT_OK
    if action == "scan":
        if cfg["tauc"] is None:
            raise ConfigError("scan needs --tauc start:stop:step")
        taus = _range_step(str(cfg["tauc"]))
        res = sol.scan(taus, scfg, workers=_workers(cfg))
        cols = ["tau_c", "k0", "a", "nodes", "energy", "residual", "converged", "message"]
        _emit(csv_text(cfg, cols, [[r[c] for c in cols] for r in res]), cfg["output"])
        return EXIT_OK
    raise ConfigError(f"unknown soliton action {action!r}")


# --- scalar ----------------------------------------------------------------------

def _portrait_job(args):
    p0, us, tmax = args
    return sd.portrait([p0], us, tmax)


def cmd_scalar(cfg: dict) -> int:
    action = cfg["action"]
    if action == "derrick":
        try:
            gp, gd = str(cfg["grid"]).split(",")
        except ValueError as exc:
            raise ConfigError("grid must be phi_lo:phi_hi:n,dphi_lo:dphi_hi:n") from exc
        P, D = np.meshgrid(_linspace(gp), _linspace(gd), indexing="ij")
        f = sd.derrick_f(P, D)
        i = np.unravel_index(np.argmin(f), f.shape)
        zeros = [[float(P[j]), float(D[j])] for j in zip(*np.nonzero(f < 1e-12))]
        doc = {"points": int(f.size), "min": float(f[i]), "argmin": [float(P[i]), float(D[i])], "zeros": zeros}
        _emit(json_text(cfg, doc), cfg["output"])
        return EXIT_OK
    if action == "portrait":
        _positive(cfg, "tmax")
        phis, us = _linspace(cfg["phi"]), _linspace(cfg["u"])
        jobs = [(float(p), us, float(cfg["tmax"])) for p in phis]
        w = _workers(cfg)
        if w > 1:
            with ProcessPoolExecutor(max_workers=w) as ex:
                parts = list(ex.map(_portrait_job, jobs))
        else:
            parts = [_portrait_job(j) for j in jobs]
        rows = [r for part in parts for r in part]
        cols = ["phi", "u", "classification", "t_end", "phi_end", "u_end"]
        _emit(csv_text(cfg, cols, rows), cfg["output"])
        return EXIT_OK
    if action == "singular":
        box = _box(cfg["box"])
        pts = sd.singular_set(box)
        doc = {"box": box, "count": len(pts), "lifted": sum(p.lifted for p in pts),
               "points": [vars(p) for p in pts]}
        _emit(json_text(cfg, doc), cfg["output"])
        return EXIT_OK
    if action == "frw":
        _positive(cfg, "beta", "gamma", "kappa")
        fps = sd.frw_fixed_points(cfg["beta"], cfg["gamma"], cfg["kappa"])
        _emit(json_text(cfg, {"fixed_points": fps}), cfg["output"])
        return EXIT_OK
    raise ConfigError(f"unknown scalar action {action!r}")


# --- parser ----------------------------------------------------------------------

def _opt(p, *names, **kw):
    kw.setdefault("default", None)
    p.add_argument(*names, **kw)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bilab", description="Born-Infeld Lagrangian laboratory")
    ap.add_argument("--version", action="version", version=f"bilab {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    _opt(common, "--config", help="JSON file of option values (flags take precedence)")
    _opt(common, "--output", "-o", help="output file (default stdout)")
    _opt(common, "--workers", type=int, help="worker processes (default $BILAB_WORKERS or 1)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lagrangian", parents=[common], help="evaluate a Lagrangian on field samples")
    _opt(p, "--prescription", help="bi, bina, sym4, park, gk, binc or scalar:<ansatz>")
    _opt(p, "--algebra", help="u1, su2, su3, ...")
    _opt(p, "--random", type=int, help="number of random samples")
    _opt(p, "--seed", type=int)
    _opt(p, "--scale", type=float, help="standard deviation of random components")
    _opt(p, "--beta", type=float)
    _opt(p, "--mass", type=float, help="scale of the structure-constant term (binc, scalar)")
    _opt(p, "--metric", help="minkowski or euclidean")
    _opt(p, "--input", help="JSON file of samples")
    _opt(p, "--crosscheck", action="store_const", const=True, help="add an independent second evaluation")
    p.set_defaults(func=cmd_lagrangian)

    p = sub.add_parser("soliton", help="spherically symmetric solitons")
    ssub = p.add_subparsers(dest="action", required=True)
    for name in ("shoot", "scan", "energy"):
        q = ssub.add_parser(name, parents=[common])
        _opt(q, "--tauc", help="log of the asymptotic coefficient (scan: start:stop:step)")
        _opt(q, "--c", type=float, help="asymptotic coefficient (shoot)")
        _opt(q, "--emit-profile", dest="emit_profile", help="write the sampled profile as JSON")
        _opt(q, "--profile", help="profile JSON for energy")
        _opt(q, "--r-min", dest="r_min", type=float)
        _opt(q, "--rtol", type=float)
        _opt(q, "--atol", type=float)
        q.set_defaults(func=cmd_soliton)

    p = sub.add_parser("scalar", help="scalar sector: virial function, portraits, FRW")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("derrick", parents=[common])
    _opt(q, "--grid", help="phi_lo:phi_hi:n,dphi_lo:dphi_hi:n")
    q.set_defaults(func=cmd_scalar)
    q = ssub.add_parser("portrait", parents=[common])
    _opt(q, "--phi", help="lo:hi:n")
    _opt(q, "--u", help="lo:hi:n")
    _opt(q, "--tmax", type=float)
    q.set_defaults(func=cmd_scalar)
    q = ssub.add_parser("singular", parents=[common])
    _opt(q, "--box", help="phi_lo:phi_hi,u_lo:u_hi")
    q.set_defaults(func=cmd_scalar)
    q = ssub.add_parser("frw")
    fsub = q.add_subparsers(dest="frw_action", required=True)
    f = fsub.add_parser("fixpoints", parents=[common])
    _opt(f, "--beta", type=float)
    _opt(f, "--gamma", type=float)
    _opt(f, "--kappa", type=float)
    f.set_defaults(func=cmd_scalar)
    return ap


def resolve(args: argparse.Namespace) -> dict:
    """Merge flags over the config file over the defaults."""
    file_cfg = {}
    if getattr(args, "config", None):
        file_cfg = _load_json(args.config)
        if not isinstance(file_cfg, dict):
            raise ConfigError("config file must hold a JSON object")
        unknown = set(file_cfg) - set(DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    cfg = dict(DEFAULTS)
    cfg.update(file_cfg)
    for k, v in vars(args).items():
        if k in ("func", "config"):
            continue
        if v is not None or k not in cfg:
            cfg[k] = v
    return cfg


_RANGE_FLAGS = ("--tauc", "--phi", "--u", "--grid", "--box")


def _join_ranges(argv):
    # let range values such as "--tauc -10:20:0.5" start with a minus sign
    out, it = [], iter(argv)
    for a in it:
        if a in _RANGE_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_ranges(argv))
    try:
        cfg = resolve(args)
        return args.func(cfg)
    except ConfigError as exc:
        print(f"bilab: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"bilab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
