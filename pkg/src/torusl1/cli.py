"""Command line driver for norm sweeps, extrema tables, witness sets, and
identity checks.

Output is deterministic: no timestamps, floats at 17 significant digits in
CSV, sorted keys in JSON.  Every file embeds the resolved run config (JSON)
or a config hash comment line (CSV) so a result can be traced back to the
exact invocation.  Exit code 0 means the run completed (whatever the math
said); 2 means the configuration did not parse or validate.
"""

import argparse
import dataclasses
import hashlib
import json
import sys

import numpy as np

from .coefficients import ConvexSequence
from .diagnostics import analyze_trace
from .exceptional import build_witness, uniform_integrability_certificate
from .extrema import coefficient_sum, crossing_check, find_extrema
from .intervals import IntervalUnion
from .kernels import canonical
from .partial_sums import residual_identity_check
from .quadrature import norm_trace

__all__ = ["RunConfig", "main", "parse_n_values"]


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Resolved settings for one run.  `out` is excluded from hashing and
    embedding so the same experiment written to two paths stays identical."""
    command: str
    sequence: str = None
    Ns: tuple = None
    set_spec: str = None
    kind: str = None
    eta: float = None
    panels_per_cell: int = None
    nodes_per_panel: int = None
    j_max: int = None
    grid_size: int = None
    tail_window: int = None
    tol: float = None
    seed: int = None
    samples: int = None
    N0s: tuple = None
    b: int = None
    n: int = None
    t: float = None
    fmt: str = None
    out: str = None

    def resolved(self):
        d = dataclasses.asdict(self)
        d.pop("out")
        return {k: v for k, v in d.items() if v is not None}

    def canonical_json(self):
        return json.dumps(self.resolved(), sort_keys=True)

    def hash(self):
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:16]


def parse_n_values(text):
    """Order list grammar: "a..bxk" geometric from a to b by factor k
    (k defaults to 2), or a comma list "4,9,100", or a single integer."""
    text = text.strip()
    if ".." in text:
        head, _, rest = text.partition("..")
        stop_txt, _, fac_txt = rest.partition("x")
        start, stop = int(head), int(stop_txt)
        factor = int(fac_txt) if fac_txt else 2
        if start < 1 or stop < start or factor < 2:
            raise ValueError(f"bad order range {text!r}")
        vals = []
        v = start
        while v <= stop:
            vals.append(v)
            v *= factor
        return vals
    vals = [int(tok) for tok in text.split(",") if tok.strip()]
    if not vals or any(v < 1 for v in vals):
        raise ValueError(f"bad order list {text!r}")
    return vals


def _resolve_sequence(name):
    if name == "log":
        return ConvexSequence.log_reciprocal()
    if name == "log2":
        return ConvexSequence.log_squared_reciprocal()
    return ConvexSequence.from_file(name)


def _resolve_set(spec):
    if spec in (None, "full"):
        return IntervalUnion.full_torus()
    return IntervalUnion.parse(spec)


def _g17(x):
    return f"{float(x):.17g}"


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _csv_head(cfg, extra=()):
    lines = [f"# config_hash={cfg.hash()}", f"# config={cfg.canonical_json()}"]
    lines.extend(extra)
    return lines


def _pick_format(fmt, out, default):
    if fmt:
        return fmt
    if out and out.endswith(".csv"):
        return "csv"
    if out and out.endswith(".json"):
        return "json"
    return default


def _json_payload(cfg, body):
    payload = {"config": cfg.resolved(), "config_hash": cfg.hash()}
    payload.update(body)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _verdict_dict(v):
    return {
        "verdict": v.verdict,
        "cauchy_gap": v.cauchy_gap,
        "tail_window": v.tail_window,
        "limit_estimate": v.limit_estimate,
        "uncertainty": v.uncertainty,
        "window_gaps": list(v.window_gaps),
        "window_means": list(v.window_means),
    }


def cmd_norms(cfg):
    seq = _resolve_sequence(cfg.sequence)
    base = _resolve_set(cfg.set_spec)
    domain = base.minus_window(cfg.eta) if cfg.kind == "residual" else base
    if domain.is_empty:
        raise ValueError("integration set is empty after removing the origin window")
    trace = norm_trace(seq, cfg.Ns, domain, kind=cfg.kind,
                       panels_per_cell=cfg.panels_per_cell,
                       nodes_per_panel=cfg.nodes_per_panel,
                       j_max=cfg.j_max, grid_size=cfg.grid_size)
    verdict = None
    if len(trace) >= cfg.tail_window + 2:
        verdict = analyze_trace(trace, tail_window=cfg.tail_window)

    if cfg.fmt == "json":
        body = {"trace": [{"N": e.N, "value": e.value, "error": e.error_estimate}
                          for e in trace],
                "verdict": _verdict_dict(verdict) if verdict else None}
        _emit(_json_payload(cfg, body), cfg.out)
        return
    extra = []
    if verdict:
        extra = [f"# verdict={verdict.verdict}",
                 f"# limit_estimate={_g17(verdict.limit_estimate)}",
                 f"# cauchy_gap={_g17(verdict.cauchy_gap)}",
                 f"# uncertainty={_g17(verdict.uncertainty)}"]
    lines = _csv_head(cfg, extra) + ["N,value,error"]
    lines += [f"{e.N},{_g17(e.value)},{_g17(e.error_estimate)}" for e in trace]
    _emit("\n".join(lines) + "\n", cfg.out)


def cmd_extrema(cfg):
    if cfg.Ns is not None:
        rows = coefficient_sum(cfg.Ns, tol=cfg.tol)
        if cfg.fmt == "json":
            body = {"sweep": [{"N": n, "c_sum": s, "c_sum_over_logN": r}
                              for n, s, r in rows]}
            _emit(_json_payload(cfg, body), cfg.out)
            return
        lines = _csv_head(cfg) + ["N,c_sum,c_sum_over_logN"]
        lines += [f"{n},{_g17(s)},{_g17(r)}" for n, s, r in rows]
        _emit("\n".join(lines) + "\n", cfg.out)
        return
    table = find_extrema(cfg.n, tol=cfg.tol)
    report = crossing_check(cfg.n, tol=cfg.tol)
    if cfg.fmt == "json":
        body = {"N": table.N,
                "rows": [{"i": r.i, "t": r.t, "height": r.height, "c": r.c}
                         for r in table.rows],
                "crossings": list(table.crossings),
                "envelope_max_error": report.max_product_error,
                "sandwich_ok": report.sandwich_ok}
        _emit(_json_payload(cfg, body), cfg.out)
        return
    extra = [f"# N={table.N}",
             f"# envelope_max_error={_g17(report.max_product_error)}",
             f"# sandwich_ok={report.sandwich_ok}"]
    lines = _csv_head(cfg, extra) + ["i,t,height,c"]
    lines += [f"{r.i},{_g17(r.t)},{_g17(r.height)},{_g17(r.c)}"
              for r in table.rows]
    _emit("\n".join(lines) + "\n", cfg.out)


def _witness_dict(w, with_cells=True):
    d = {"N0": w.N0, "b": w.b, "n": w.n, "measure": w.measure,
         "integral": w.integral, "integral_error": w.integral_error,
         "feasible": w.feasible}
    if with_cells:
        d["cells"] = [list(p) for p in w.Q.intervals]
        d["trim"] = list(w.trim) if w.trim else None
    return d


def cmd_witness(cfg):
    seq = _resolve_sequence(cfg.sequence)
    single = cfg.b is not None or cfg.n is not None
    if single:
        if len(cfg.N0s) != 1:
            raise ValueError("explicit --b/--n needs exactly one N0")
        N0 = cfg.N0s[0]
        w = build_witness(seq, N0, cfg.b if cfg.b is not None else N0, cfg.n,
                          cfg.panels_per_cell, cfg.nodes_per_panel)
        if cfg.fmt == "csv":
            lines = _csv_head(cfg) + ["N0,b,n,measure,integral,integral_error,feasible"]
            lines.append(f"{w.N0},{w.b},{w.n},{_g17(w.measure)},"
                         f"{_g17(w.integral)},{_g17(w.integral_error)},{int(w.feasible)}")
            _emit("\n".join(lines) + "\n", cfg.out)
            return
        _emit(_json_payload(cfg, _witness_dict(w)), cfg.out)
        return
    cert = uniform_integrability_certificate(seq, cfg.N0s)
    if cfg.fmt == "csv":
        extra = [f"# kappa={_g17(cert.kappa)}",
                 f"# min_integral={_g17(cert.min_integral)}",
                 f"# max_integral={_g17(cert.max_integral)}",
                 f"# passed={cert.passed}"]
        lines = _csv_head(cfg, extra)
        lines.append("N0,b,n,measure,integral,integral_error,feasible")
        for w in cert.witnesses:
            lines.append(f"{w.N0},{w.b},{w.n},{_g17(w.measure)},"
                         f"{_g17(w.integral)},{_g17(w.integral_error)},{int(w.feasible)}")
        _emit("\n".join(lines) + "\n", cfg.out)
        return
    body = {"N0s": list(cert.N0s),
            "measures": list(cert.measures),
            "integrals": list(cert.integrals),
            "kappa": cert.kappa,
            "min_integral": cert.min_integral,
            "max_integral": cert.max_integral,
            "passed": cert.passed,
            "witnesses": [_witness_dict(w, with_cells=False)
                          for w in cert.witnesses]}
    _emit(_json_payload(cfg, body), cfg.out)


def _check_dict(c, note=None):
    d = {"N": c.N, "t": c.t, "lhs": c.lhs,
         "rhs": dict(c.rhs), "diff": dict(c.diff),
         "tolerance": c.tolerance, "f_tail_bound": c.f_tail_bound,
         "matched": list(c.matched)}
    if note:
        d["note"] = note
    return d


def cmd_identity(cfg):
    seq = _resolve_sequence(cfg.sequence)
    checks = []
    if cfg.t is not None:
        if cfg.n is None:
            raise ValueError("--t needs --n")
        note = None
        u = canonical(cfg.t)
        if u != cfg.t:
            note = f"t={cfg.t!r} canonicalized to {u!r}"
        checks.append(_check_dict(
            residual_identity_check(seq, cfg.n, cfg.t, cfg.j_max), note))
    else:
        rng = np.random.default_rng(cfg.seed)
        for _ in range(cfg.samples):
            n = int(rng.integers(2, 65))
            t = float(rng.uniform(0.05, 0.45))
            checks.append(_check_dict(
                residual_identity_check(seq, n, t, cfg.j_max)))
    all_matched = all(c["matched"] for c in checks)
    common = set(checks[0]["matched"]) if checks else set()
    for c in checks[1:]:
        common &= set(c["matched"])
    variant = ("derived" if "derived" in common
               else next(iter(sorted(common)), None))
    counts = {k: sum(k in c["matched"] for c in checks)
              for k in ("derived", "alternate")}
    if cfg.fmt == "csv":
        extra = [f"# all_matched={all_matched}", f"# matched_variant={variant}"]
        lines = _csv_head(cfg, extra)
        lines.append("N,t,lhs,rhs_derived,rhs_alternate,diff_derived,"
                     "diff_alternate,tolerance,matched")
        for c in checks:
            lines.append(",".join([
                str(c["N"]), _g17(c["t"]), _g17(c["lhs"]),
                _g17(c["rhs"]["derived"]), _g17(c["rhs"]["alternate"]),
                _g17(c["diff"]["derived"]), _g17(c["diff"]["alternate"]),
                _g17(c["tolerance"]), "+".join(c["matched"])]))
        _emit("\n".join(lines) + "\n", cfg.out)
        return
    body = {"checks": checks, "all_matched": all_matched,
            "matched_variant": variant, "match_counts": counts}
    _emit(_json_payload(cfg, body), cfg.out)


def _build_parser():
    p = argparse.ArgumentParser(
        prog="torusl1",
        description="Desk-scale experiments with Dirichlet/Fejer kernels, "
                    "convex-coefficient partial sums, and L1 traces.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seq_default="log"):
        sp.add_argument("--sequence", default=seq_default,
                        help="family id 'log' or 'log2', or a sequence file path")
        sp.add_argument("--format", dest="fmt", choices=("csv", "json"))
        sp.add_argument("--out", help="output path, '-' for stdout")

    sp = sub.add_parser("norms", help="L1 norm trace over an order sweep")
    common(sp)
    sp.add_argument("--kind", choices=("abs", "residual"), default="abs")
    sp.add_argument("--n", dest="ns", default="16..4096x2",
                    help="orders: 'a..bxk', comma list, or single integer")
    sp.add_argument("--set", dest="set_spec", default="full",
                    help="'full' or semicolon-separated lo,hi pairs")
    sp.add_argument("--eta", type=float, default=1e-3,
                    help="origin half-window removed for residual runs")
    sp.add_argument("--panels-per-cell", type=int, default=2)
    sp.add_argument("--nodes-per-panel", type=int, default=16)
    sp.add_argument("--j-max", type=int, default=100000)
    sp.add_argument("--grid-size", type=int, default=2 ** 16)
    sp.add_argument("--tail-window", type=int, default=4)

    sp = sub.add_parser("extrema", help="kernel extrema table or growth sweep")
    sp.add_argument("--n", type=int, help="single kernel order")
    sp.add_argument("--sweep", help="order sweep 'a..bxk' or comma list")
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--format", dest="fmt", choices=("csv", "json"))
    sp.add_argument("--out", help="output path, '-' for stdout")

    sp = sub.add_parser("witness", help="small-measure witness sets")
    common(sp)
    sp.add_argument("--n0", required=True, help="comma list of scales N0")
    sp.add_argument("--b", type=int, help="cell-count parameter (single witness)")
    sp.add_argument("--n", type=int, help="kernel order (single witness)")
    sp.add_argument("--panels-per-cell", type=int, default=2)
    sp.add_argument("--nodes-per-panel", type=int, default=16)

    sp = sub.add_parser("identity", help="summed-by-parts residual checks")
    common(sp)
    sp.add_argument("--n", type=int, help="single check order")
    sp.add_argument("--t", type=float, help="single check point")
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--j-max", type=int, default=100000)
    return p


def _config_from_args(args):
    cmd = args.command
    if cmd == "norms":
        ns = tuple(parse_n_values(args.ns))
        if args.eta <= 0 or args.panels_per_cell < 1 or args.nodes_per_panel < 2:
            raise ValueError("quadrature settings must be positive")
        if args.tail_window < 3:
            raise ValueError("tail window must be >= 3")
        return RunConfig(command=cmd, sequence=args.sequence, Ns=ns,
                         set_spec=args.set_spec, kind=args.kind, eta=args.eta,
                         panels_per_cell=args.panels_per_cell,
                         nodes_per_panel=args.nodes_per_panel,
                         j_max=args.j_max, grid_size=args.grid_size,
                         tail_window=args.tail_window,
                         fmt=_pick_format(args.fmt, args.out, "csv"),
                         out=args.out)
    if cmd == "extrema":
        if (args.n is None) == (args.sweep is None):
            raise ValueError("give exactly one of --n or --sweep")
        ns = tuple(parse_n_values(args.sweep)) if args.sweep else None
        return RunConfig(command=cmd, Ns=ns, n=args.n, tol=args.tol,
                         fmt=_pick_format(args.fmt, args.out, "csv"),
                         out=args.out)
    if cmd == "witness":
        n0s = tuple(parse_n_values(args.n0))
        return RunConfig(command=cmd, sequence=args.sequence, N0s=n0s,
                         b=args.b, n=args.n,
                         panels_per_cell=args.panels_per_cell,
                         nodes_per_panel=args.nodes_per_panel,
                         fmt=_pick_format(args.fmt, args.out, "json"),
                         out=args.out)
    if cmd == "identity":
        if args.samples < 1:
            raise ValueError("--samples must be positive")
        return RunConfig(command=cmd, sequence=args.sequence, n=args.n,
                         t=args.t, samples=args.samples, seed=args.seed,
                         j_max=args.j_max,
                         fmt=_pick_format(args.fmt, args.out, "json"),
                         out=args.out)
    raise ValueError(f"unknown command {cmd!r}")


_RUNNERS = {"norms": cmd_norms, "extrema": cmd_extrema,
            "witness": cmd_witness, "identity": cmd_identity}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        _RUNNERS[cfg.command](cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
