"""Command-line front end.

Every subcommand prints JSON on stdout (``sample`` prints an edge list
unless ``--json`` is given).  Exit codes: 0 success, 1 domain error
(bad input, violated precondition), 2 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import problab
from .blocks import Decomposition, validate_decomposition
from .builders import BuilderError, beta_decomposition, sparse_cover_decomposition, star_decomposition
from .experiments import ExperimentConfig, mc_alpha_beta, mc_sparse
from .extremal.budget import BudgetExceeded
from .extremal.cliques import alpha, beta
from .extremal.sparse import gamma_max, structural_condition
from .extremal.tau import DEFAULT_BUDGET, exact_tau, exact_tau_prime
from .graph import GnpParams, Graph, GraphFormatError, bits, gnp_sample, parse_graph, serialize_graph


class Partial(Exception):
    """An experiment finished with budget-exhausted trials."""


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_graph(text)


def _write(path: str | None, text: str):
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(obj):
    print(json.dumps(_jsonable(obj), indent=2))


def _cert(g: Graph, d: Decomposition, args) -> dict:
    report = validate_decomposition(g, d)
    out = {"blocks": len(d), "valid": report.ok, "certificate": d.to_text().splitlines()}
    if not report.ok:
        out["violation"] = report.message
    if getattr(args, "cert", None):
        _write(args.cert, d.to_text())
        out["certificate_path"] = args.cert
    return out


def cmd_sample(args):
    g = gnp_sample(GnpParams(args.n, args.p, args.seed))
    text = serialize_graph(g)
    _write(args.out, text)
    if args.json:
        _emit({"n": g.n, "p": args.p, "seed": args.seed, "edges": g.edge_count, "edge_list": text})
    else:
        sys.stdout.write(text)


def cmd_alpha(args):
    g = _read_graph(args.graph)
    a, witness = alpha(g, args.budget)
    _emit({"n": g.n, "alpha": a, "witness": list(bits(witness))})


def cmd_beta(args):
    g = _read_graph(args.graph)
    b, blk = beta(g, args.budget)
    _emit({"n": g.n, "beta": b, "witness": None if blk is None else {"a": sorted(blk.a), "b": sorted(blk.b)}})


def cmd_tau(args):
    g = _read_graph(args.graph)
    t, d = exact_tau(g, args.budget)
    _emit({"n": g.n, "tau": t, **_cert(g, d, args)})


def cmd_tau_prime(args):
    g = _read_graph(args.graph)
    t, d = exact_tau_prime(g, args.budget)
    out = {"n": g.n, "tau_prime": t}
    if d is not None:
        out.update(_cert(g, d, args))
    _emit(out)


def cmd_decompose_star(args):
    g = _read_graph(args.graph)
    a, witness = alpha(g, args.budget)
    d = star_decomposition(g, witness)
    _emit({"n": g.n, "alpha": a, "bound": g.n - a, **_cert(g, d, args)})


def cmd_decompose_beta(args):
    g = _read_graph(args.graph)
    b, blk = beta(g, args.budget)
    if blk is None:
        raise BuilderError("graph has no edges, so there is no complete bipartite subgraph")
    d = beta_decomposition(g, blk)
    _emit({"n": g.n, "beta": b, "bound": g.n - b + 1, **_cert(g, d, args)})


def cmd_gamma(args):
    g = _read_graph(args.graph)
    gam, cover = gamma_max(g, args.budget)
    d = sparse_cover_decomposition(g, cover)
    out = {"n": g.n, "gamma": gam, "n_minus_gamma": g.n - gam, "structural_condition": structural_condition(g),
           "cover": cover.to_text().strip(), **_cert(g, d, args)}
    _emit(out)


def cmd_regime(args):
    _emit(problab.regime_classify(args.n, args.T).to_dict())


def cmd_events(args):
    _emit(problab.event_probabilities(args.lam, args.mu).as_dict())


def cmd_moments(args):
    checks = {"f": problab.lemma21_check, "g": problab.lemma22_check, "h": problab.cross_term_check}
    kinds = "fgh" if args.kind == "all" else args.kind
    tables = [checks[c](args.n, args.k) for c in kinds]
    if args.out_csv:
        if len(tables) == 1:
            _write(args.out_csv, tables[0].to_csv())
        else:
            base = Path(args.out_csv)
            for t in tables:
                _write(str(base.with_name(f"{base.stem}_{t.kind}{base.suffix}")), t.to_csv())
    _emit({"n": args.n, "tables": [dict(t.to_dict(), max_margin=t.max_margin) for t in tables]})


def cmd_lemma31(args):
    if args.m is not None:
        _emit({"n": args.n, "p": args.p, "m": args.m,
               "log2_sum": problab.lemma31_sum(args.n, args.p, args.m, args.odd_surrogate),
               "terms": [{"d": d, "log2_term": t} for d, t in problab.lemma31_terms(args.n, args.p, args.m)]})
        return
    b, rows = problab.lemma31_check(args.n, args.p, args.C)
    if args.out_csv:
        lines = ["m,log2_sum,b,log2_d2_term,log2_max_other"]
        lines += [f"{r.m},{r.log2_sum!r},{r.b!r},{r.log2_d2_term!r},{r.log2_max_other!r}" for r in rows]
        _write(args.out_csv, "\n".join(lines) + "\n")
    _emit({"n": args.n, "p": args.p, "b_empirical": b,
           "rows": [{"m": r.m, "log2_sum": r.log2_sum, "b": r.b, "log2_dominance": r.log2_dominance}
                    for r in rows]})


def _config(args, **kw) -> ExperimentConfig:
    return ExperimentConfig(n=args.n, p=args.p, trials=args.trials, seed=args.seed, workers=args.workers,
                            budget=args.budget, T=getattr(args, "T", 10.0), **kw)


def cmd_mc_alpha_beta(args):
    res = mc_alpha_beta(_config(args))
    _write(args.out_csv, res.rows_csv())
    _emit(res.summary())
    if res.partial:
        raise Partial()


def cmd_mc_sparse(args):
    res = mc_sparse(_config(args, exact_max_n=args.exact_max_n), force=args.force)
    _write(args.out_csv, res.rows_csv())
    _emit(res.summary())
    if res.partial:
        raise Partial()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="biclab", description="Biclique partitions of graphs and random graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, graph=False, budget=False, cert=False, help=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        if graph:
            sp.add_argument("graph", help="edge-list file, '-' for stdin")
        if budget:
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
        if cert:
            sp.add_argument("--cert", help="write the certificate to this path")
        return sp

    sp = add("sample", cmd_sample, help="sample G(n, p) as an edge list")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="also write the edge list here")
    sp.add_argument("--json", action="store_true", help="print JSON instead of the edge list")

    add("alpha", cmd_alpha, graph=True, budget=True, help="independence number")
    add("beta", cmd_beta, graph=True, budget=True, help="largest induced complete bipartite subgraph")
    add("tau", cmd_tau, graph=True, budget=True, cert=True, help="exact biclique partition number")
    add("tau-prime", cmd_tau_prime, graph=True, budget=True, cert=True, help="nontrivial-blocks-only variant")
    add("decompose-star", cmd_decompose_star, graph=True, budget=True, cert=True, help="n - alpha stars")
    add("decompose-beta", cmd_decompose_beta, graph=True, budget=True, cert=True, help="n - beta + 1 blocks")
    add("gamma", cmd_gamma, graph=True, budget=True, cert=True, help="max gamma and the n - gamma decomposition")

    sp = add("regime", cmd_regime, help="k0, f(k0), f(k0+1) and the regime of n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--T", type=float, default=10.0)

    sp = add("events", cmd_events, help="Poisson prediction of the four events")
    sp.add_argument("--lam", type=float, required=True)
    sp.add_argument("--mu", type=float, required=True)

    sp = add("moments", cmd_moments, help="second-moment margin tables")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=None, help="defaults to k0(n)")
    sp.add_argument("--kind", choices=["f", "g", "h", "all"], default="all")
    sp.add_argument("--out-csv")

    sp = add("lemma31", cmd_lemma31, help="divisor sum scan for sparse G(n, p)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--C", type=float, default=10.0)
    sp.add_argument("--m", type=int, default=None, help="evaluate a single sum instead of the scan")
    sp.add_argument("--odd-surrogate", action="store_true")
    sp.add_argument("--out-csv")

    for name, fn, p_default in (("mc-alpha-beta", cmd_mc_alpha_beta, 0.5), ("mc-sparse", cmd_mc_sparse, None)):
        sp = add(name, fn, budget=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--p", type=float, default=p_default, required=p_default is None)
        sp.add_argument("--trials", type=int, default=200)
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--out-csv")
        if name == "mc-alpha-beta":
            sp.add_argument("--T", type=float, default=10.0)
        else:
            sp.add_argument("--exact-max-n", type=int, default=10)
            sp.add_argument("--force", action="store_true", help="run even when p > n^(-7/8)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except BudgetExceeded as exc:
        print(json.dumps(_jsonable({"error": "budget", "message": str(exc),
                                    "lower": exc.lower, "upper": exc.upper})), file=sys.stderr)
        return 2
    except Partial:
        print(json.dumps({"error": "budget", "message": "some trials exhausted the search budget"}),
              file=sys.stderr)
        return 2
    except GraphFormatError as exc:
        print(json.dumps({"error": "format", "kind": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": "domain", "kind": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
