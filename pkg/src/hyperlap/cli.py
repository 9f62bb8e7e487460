"""Command-line front end: ``hyperlap {spectrum,table1,walk,diameter,expansion,verify-all}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import metrics, table1, walks
from .hypergraph import Hypergraph, complete_hypergraph, random_hypergraph, read_hypergraph
from .projection import build_projection
from .spectra import component_count, sigma_alpha, spectrum


class CommandError(Exception):
    pass


def _fmt(x, precision: int) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "pass" if x else "FAIL"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, float):
        return f"{x:.{precision}g}"
    return str(x)


def _load(args) -> Hypergraph:
    if args.input:
        return read_hypergraph(args.input)
    if args.complete:
        return complete_hypergraph(*args.complete)
    if args.random:
        n, r, p, seed = args.random
        return random_hypergraph(int(n), int(r), float(p), int(seed))
    raise CommandError("no input: give --input, --complete or --random")


def _s_values(args, H: Hypergraph) -> list[int]:
    if args.s is None:
        return list(range(1, H.r))
    if not 1 <= args.s <= H.r - 1:
        raise CommandError(f"s must lie in [1, r-1] = [1, {H.r - 1}], got {args.s}")
    return [args.s]


class Output:
    """Collects rows and renders them as text, json or csv."""

    def __init__(self, args):
        self.format = args.format
        self.precision = args.precision
        self.records: list[dict] = []
        self.notes: list[str] = []

    def add(self, **row):
        self.records.append(row)

    def note(self, line: str):
        self.notes.append(line)

    def render(self) -> str:
        if self.format == "json":
            doc = {"records": [_finite(r) for r in self.records], "notes": self.notes}
            return json.dumps(doc, indent=2, default=_json_default, allow_nan=False) + "\n"
        keys: list[str] = []
        for rec in self.records:
            keys.extend(k for k in rec if k not in keys and not isinstance(rec[k], (list, dict)))
        if self.format == "csv":
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=keys, extrasaction="ignore", lineterminator="\n")
            w.writeheader()
            for rec in self.records:
                w.writerow({k: _fmt(rec.get(k, ""), self.precision) for k in keys})
            return buf.getvalue()
        lines = list(self.notes)
        for rec in self.records:
            lines.append("  ".join(f"{k}={_fmt(rec[k], self.precision)}" for k in keys if k in rec))
        return "\n".join(lines) + "\n"


def _finite(rec: dict) -> dict:
    # JSON has no infinity; unreachable distances are written as "inf"
    return {k: "inf" if isinstance(v, float) and np.isinf(v) else v for k, v in rec.items()}


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.bool_):
        return bool(o)
    raise TypeError(type(o))


def cmd_spectrum(args, out: Output) -> bool:
    H = _load(args)
    for s in _s_values(args, H):
        P = build_projection(H, s)
        sp = spectrum(P)
        rec = {"s": s, "count": sp.count, "lambda1": sp.lambda1, "lambdaMax": sp.lambda_max,
               "lambdaBar": sp.lambda_bar, "zeroMultiplicity": sp.zero_multiplicity}
        if args.format == "json":
            rec["eigenvalues"] = [float(v) for v in sp.eigenvalues]
        out.add(**rec)
        if args.export_triplets:
            path = args.export_triplets if len(_s_values(args, H)) == 1 else f"{args.export_triplets}.s{s}"
            with open(path, "w") as fh:
                fh.write(P.to_triplets())
    return True


def cmd_table1(args, out: Output) -> bool:
    ok = True
    for res in table1.evaluate():
        c = res.cell
        frac = res.nearest_fraction
        out.add(cell=c.label, paper=str(c.value), computed=res.computed,
                fraction=str(frac) if abs(frac - res.computed) <= table1.EXACT_TOL else "-",
                error=res.error, tol=c.tol, status=res.passed)
        ok &= res.passed
    return ok


def _start_index(P, args) -> int:
    if args.start:
        return P.index.index_of_tuple(args.start)
    pos = np.flatnonzero(P.degrees > 0)
    if pos.size == 0:
        raise CommandError("projection has no edges")
    return int(pos[0])


def cmd_walk(args, out: Output) -> bool:
    H = _load(args)
    ok = True
    for s in _s_values(args, H):
        P = build_projection(H, s)
        x0 = _start_index(P, args)
        if args.exact:
            f0 = walks.delta(P.size, x0)
            lhs, rhs = walks.mixing_profile(P, f0, args.alpha, args.k, allow_vacuous=args.allow_vacuous)
            good = bool(np.all(lhs <= rhs + args.tolerance))
            out.add(s=s, start=str(P.index.tuple_of_index(x0)), alpha=args.alpha, k=args.k,
                    lhs=float(lhs[-1]), rhs=float(rhs[-1]), status=good)
        else:
            seed = args.seed
            out.note(f"seed={seed} rng={walks.RNG_ALGORITHM}")
            x = P.index.tuple_of_index(x0)
            emp, stuck = walks.sample_stop_distribution(H, s, x, args.alpha, args.k, args.walks, seed)
            exact = walks.evolve(walks.transition_matrix(P, args.alpha), walks.delta(P.size, x0), args.k)
            tv = walks.total_variation(emp, exact)
            good = tv <= args.tv_tolerance
            out.add(s=s, start=str(x), alpha=args.alpha, k=args.k, walks=args.walks, seed=seed,
                    stuck=stuck, tv=tv, status=good)
            if args.trace:
                with open(args.trace, "w") as fh:
                    for i in range(min(args.walks, args.trace_limit)):
                        trace = walks.sample_s_walk(H, s, x, args.alpha, args.k, [seed, i])
                        fh.write(trace.to_json() + "\n")
        ok &= good
    return ok


def cmd_diameter(args, out: Output) -> bool:
    H = _load(args)
    ok = True
    for s in _s_values(args, H):
        P = build_projection(H, s)
        measured = metrics.s_diameter(P)
        if not args.bound:
            out.add(s=s, diameter=measured)
            continue
        try:
            reports = metrics.diameter_reports(P, alpha=args.alpha)
        except metrics.PreconditionError as exc:
            out.add(s=s, diameter=measured, quantity="n/a", note=str(exc))
            continue
        for rep in reports:
            out.add(s=s, quantity=rep.quantity, measured=rep.measured, bound=rep.bound, status=rep.satisfied)
            ok &= rep.satisfied
    return ok


def _expansion_trial(H, s, t, rng, spec):
    r = H.r
    if 2 * s <= r:
        S = metrics.random_family(H.n, s, rng)
        T = metrics.random_family(H.n, t, rng)
        return metrics.hyper_expansion(H, s, t, S, T, spec=spec)
    if 2 * t < r and s + t <= r and t < s:
        S, T = metrics.random_halved_families(H.n, r, s, t, rng)
        return metrics.hyper_expansion_directed(H, s, t, S, T, spec=spec)
    S = metrics.random_family(H.n, s, rng)
    T = metrics.random_family(H.n, s, rng)
    return metrics.hyper_expansion_union(H, s, S, T, spec=spec)


def cmd_expansion(args, out: Output) -> bool:
    H = _load(args)
    out.note(f"seed={args.seed}")
    ok = True
    for s in _s_values(args, H):
        t = args.t if args.t is not None else (1 if 2 * s <= H.r else s)
        if 2 * s <= H.r and not 1 <= t <= s:
            raise CommandError(f"need 1 <= t <= s for s <= r/2, got t={t}")
        rng = np.random.default_rng(args.seed)
        spec = spectrum(build_projection(H, s))
        results = [_expansion_trial(H, s, t, rng, spec) for _ in range(args.trials)]
        passed = sum(r.satisfied for r in results)
        worst = max((abs(r.measured) - r.bound for r in results), default=0.0)
        out.add(s=s, t=t, quantity=results[0].quantity if results else "", satisfied=f"{passed}/{len(results)}",
                worst_slack=worst, status=passed == len(results))
        ok &= passed == len(results)
    return ok


def cmd_verify_all(args, out: Output) -> bool:
    H = _load(args)
    rng = np.random.default_rng(args.seed)
    out.note(f"seed={args.seed}")
    ok = True
    for s in _s_values(args, H):
        P = build_projection(H, s)
        sp = spectrum(P)
        checks = {
            "eigen_count": sp.count == P.size,
            "eigen_range": bool(sp.eigenvalues[0] >= -1e-9 and sp.eigenvalues[-1] <= 2 + 1e-9),
            "zero_mult_components": sp.zero_multiplicity == component_count(P),
        }
        if sp.connected:
            f0 = walks.random_distribution(P, rng)
            alpha = 0.5 if P.directed else 0.0
            lhs, rhs = walks.mixing_profile(P, f0, alpha, args.k, spec=sp)
            checks["mixing"] = bool(np.all(lhs <= rhs + 1e-9))
            try:
                checks["diameter"] = all(rep.satisfied for rep in metrics.diameter_reports(P, sp))
            except metrics.PreconditionError:
                pass
        if P.directed:
            s0 = sigma_alpha(P, 0.0)
            checks["sigma0_one"] = abs(s0 - 1) <= 1e-9
        for name, good in checks.items():
            out.add(s=s, check=name, status=bool(good))
            ok &= bool(good)
    return ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="hypergraph text file")
    src.add_argument("--complete", nargs=2, type=int, metavar=("N", "R"), help="complete hypergraph K_N^R")
    src.add_argument("--random", nargs=4, metavar=("N", "R", "P", "SEED"), help="random hypergraph")
    common.add_argument("--s", type=int, help="walk order s (default: every valid s)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--precision", type=int, default=6, help="significant digits in text/csv")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="hyperlap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="Laplacian spectrum for each s")
    p.add_argument("--export-triplets", metavar="PATH", help="also write the projection as 'i j value' triplets")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table1", parents=[common], help="recompute the complete-hypergraph eigenvalue table")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("walk", parents=[common], help="mixing bound (exact) or Monte Carlo walk check")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--exact", action="store_true", help="exact evolution against the mixing bound")
    p.add_argument("--start", type=int, nargs="+", help="initial stop (s vertex ids)")
    p.add_argument("--walks", type=int, default=100000)
    p.add_argument("--tv-tolerance", type=float, default=0.01)
    p.add_argument("--trace", metavar="PATH", help="write sampled walks as JSON lines")
    p.add_argument("--trace-limit", type=int, default=100)
    p.add_argument("--allow-vacuous", action="store_true", help="permit alpha=0 on digraphs")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("diameter", parents=[common], help="s-diameter and its spectral bounds")
    p.add_argument("--bound", action="store_true")
    p.add_argument("--alpha", type=float, default=0.5, help="laziness for the sigma_alpha bound")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("expansion", parents=[common], help="random edge-expansion trials")
    p.add_argument("--t", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_expansion)

    p = sub.add_parser("verify-all", parents=[common], help="run every check on one hypergraph")
    p.add_argument("--k", type=int, default=30)
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args)
    try:
        ok = args.func(args, out)
    except (CommandError, ValueError, OSError) as exc:
        print(f"hyperlap {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = out.render()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
