"""Command-line front end.

    scmbei cutsets  [INPUT]
    scmbei classify [INPUT] [--oracle]
    scmbei verify-lemma31 [INPUT] --vertex V
    scmbei batch    [FILE]   (one graph6 string per line, NDJSON out)

Exit codes: 0 success, 2 parse error, 3 resource limit, 4 rule/oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import __version__
from .algebra.binomial import graph_ring
from .algebra.ring import ORDERS
from .cutsets import profiles, spectrum
from .errors import InvalidInput, ResourceLimit
from .graph import DEFAULT_MAX_CUTSET_N, Graph, blocks_and_cutpoints, connected_components, recognize
from .graph6 import parse_graph, parse_graph6, to_graph6
from .scm import DEFAULT_ORACLE_VARS, UNKNOWN, Verdict, check_lemma31, classify, oracle_scm

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_MISMATCH = 0, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    characteristic: int = 32003
    order: str = "degrevlex"
    max_cutset_n: int = DEFAULT_MAX_CUTSET_N
    oracle_budget: int = DEFAULT_ORACLE_VARS
    oracle: bool = False
    format: str = "json"

    def header(self) -> dict:
        return {"version": __version__, "characteristic": self.characteristic, "order": self.order,
                "budgets": {"max_cutset_n": self.max_cutset_n, "oracle_variables": self.oracle_budget}}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------- helpers
def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None


def _parse(text: str) -> Graph:
    try:
        return parse_graph(text)
    except InvalidInput as exc:
        raise CliError(EXIT_PARSE, f"parse error: {exc}") from None


def _split(g: Graph) -> List[Graph]:
    """Connected components as graphs relabelled 1..k (original labels kept)."""
    return [g.induced(c) for c in connected_components(g)]


def _orig(h: Graph, vs) -> list:
    return [h.labels[v - 1] for v in vs]


def _graph_json(h: Graph) -> dict:
    return {"n": h.n, "labels": list(h.labels), "edges": [list(e) for e in h.sorted_edges()],
            "graph6": to_graph6(h)}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# ---------------------------------------------------------------- cutsets
def cutsets_report(g: Graph, cfg: RunConfig) -> dict:
    comps = []
    for h in _split(g):
        try:
            profs = profiles(h, cfg.max_cutset_n)
        except ResourceLimit as exc:
            raise CliError(EXIT_RESOURCE, str(exc)) from None
        spec = spectrum(h, profs)
        comps.append({"graph": _graph_json(h),
                      "cutsets": [{"T": _orig(h, p.t), "c": p.c, "dim": p.prime_dim} for p in profs],
                      "dims": list(spec.dims), "krull_dim": spec.krull_dim, "m": spec.min_dim})
    return {"command": "cutsets", "config": cfg.header(), "components": comps}


def _cutsets_table(rep: dict) -> str:
    lines = []
    for comp in rep["components"]:
        lines.append(f"graph6 {comp['graph']['graph6']}  n={comp['graph']['n']}")
        lines.append(f"  {'T':<24} {'c(T)':>5} {'dim':>5}")
        for row in comp["cutsets"]:
            t = "{" + ",".join(map(str, row["T"])) + "}"
            lines.append(f"  {t:<24} {row['c']:>5} {row['dim']:>5}")
        lines.append(f"  dims={comp['dims']} krull_dim={comp['krull_dim']} m={comp['m']}")
    return "\n".join(lines)


# --------------------------------------------------------------- classify
def _verdict_json(v: Verdict, cfg: RunConfig) -> dict:
    out = v.to_json()
    out["characteristic"] = cfg.characteristic
    out["order"] = cfg.order
    return out


def classify_component(h: Graph, cfg: RunConfig) -> Tuple[dict, bool]:
    """(report, mismatch flag) for one connected graph."""
    verdict = classify(h, cfg.max_cutset_n)
    entry = {"graph": _graph_json(h), "tags": [str(t) for t in recognize(h, cfg.max_cutset_n)]
             if h.n <= cfg.max_cutset_n else [],
             "verdict": _verdict_json(verdict, cfg)}
    mismatch = False
    if cfg.oracle:
        ring = graph_ring(h, cfg.characteristic, cfg.order)
        o = oracle_scm(h, ring, cfg.oracle_budget)
        entry["oracle"] = _verdict_json(o, cfg)
        if verdict.status == UNKNOWN:
            entry["final_status"] = o.status
        else:
            entry["final_status"] = verdict.status
            if o.decisive and o.status != verdict.status:
                mismatch = True
                entry["mismatch"] = True
    else:
        entry["final_status"] = verdict.status
    return entry, mismatch


def classify_report(g: Graph, cfg: RunConfig) -> Tuple[dict, bool]:
    entries, mismatch = [], False
    for h in _split(g):
        e, m = classify_component(h, cfg)
        entries.append(e)
        mismatch |= m
    return {"command": "classify", "config": cfg.header(), "components": entries}, mismatch


def _classify_table(rep: dict) -> str:
    lines = []
    for e in rep["components"]:
        v = e["verdict"]
        lines.append(f"{e['graph']['graph6']:<12} n={e['graph']['n']:<3} {e['final_status']:<8} "
                     f"rule={v['rule']}  tags={','.join(e['tags'])}")
        if "oracle" in e:
            o = e["oracle"]
            rows = " ".join(f"d={r['d']}:depth={r['depth']}" for r in o.get("transcript") or [])
            lines.append(f"{'':<12} oracle {o['status']:<8} {rows} {o.get('reason') or ''}".rstrip())
        if e.get("mismatch"):
            lines.append(f"{'':<12} MISMATCH between rule and oracle")
    return "\n".join(lines)


# ------------------------------------------------------- cutpoint identity
def lemma31_report(g: Graph, vertex, cfg: RunConfig) -> dict:
    try:
        v = list(g.labels).index(vertex) + 1
    except ValueError:
        raise CliError(EXIT_PARSE, f"vertex {vertex} is not in the graph") from None
    if len(connected_components(g)) != 1:
        raise CliError(EXIT_PARSE, "verify-lemma31 needs a connected graph")
    _, cuts = blocks_and_cutpoints(g)
    if v not in cuts:
        raise CliError(EXIT_PARSE, f"vertex {vertex} is not a cutpoint")
    ring = graph_ring(g, cfg.characteristic, cfg.order)
    if ring.nvars > cfg.oracle_budget:
        raise CliError(EXIT_RESOURCE, f"{ring.nvars} variables exceed the oracle budget {cfg.oracle_budget}")
    rep = check_lemma31(g, v, ring)
    out = rep.to_json()
    out["vertex"] = vertex
    return {"command": "verify-lemma31", "config": cfg.header(), "graph": _graph_json(g), "result": out}


def _lemma_table(rep: dict) -> str:
    res = rep["result"]
    lines = [f"vertex {res['vertex']}: {res['status']}"
             + (f" (first failure at i={res['first_failure']})" if res["first_failure"] is not None else ""),
             f"hypotheses: {res['hypotheses']}", f"  {'i':>3}  equal"]
    lines += [f"  {row['i']:>3}  {row['equal']}" for row in res["levels"]]
    return "\n".join(lines)


# ------------------------------------------------------------------ batch
def _batch_line(args) -> Tuple[dict, bool]:
    lineno, text, cfg = args
    try:
        g = parse_graph6(text)
    except InvalidInput as exc:
        return {"line": lineno, "input": text, "error": f"parse error: {exc}"}, False
    rep, mismatch = classify_report(g, cfg)
    return {"line": lineno, "input": text, "components": rep["components"]}, mismatch


def run_batch(text: str, cfg: RunConfig, jobs: int = 1, out=None):
    """Write one NDJSON record per non-blank line in input order, then a summary; return the exit code."""
    out = out or sys.stdout
    work = [(k, line.strip(), cfg) for k, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_line, work, chunksize=8))
    else:
        results = map(_batch_line, work)
    by_rule, by_status = {}, {}
    errors = mismatches = count = 0
    for record, mismatch in results:
        count += 1
        out.write(dumps(record) + "\n")
        if "error" in record:
            errors += 1
            continue
        mismatches += mismatch
        for e in record["components"]:
            rule = e["verdict"]["rule"]
            by_rule[rule] = by_rule.get(rule, 0) + 1
            by_status[e["final_status"]] = by_status.get(e["final_status"], 0) + 1
    if count:
        out.write(dumps({"summary": {"lines": count, "errors": errors, "mismatches": mismatches,
                                     "by_rule": by_rule, "by_status": by_status,
                                     "config": cfg.header()}}) + "\n")
    if mismatches:
        return EXIT_MISMATCH
    if errors:
        return EXIT_PARSE
    return EXIT_OK


# ------------------------------------------------------------------- main
def _config(ns) -> RunConfig:
    if ns.char != 0 and ns.char < 2:
        raise CliError(EXIT_PARSE, "--char must be a prime or 0")
    for flag in ("max_cutset_n", "oracle_budget"):
        if getattr(ns, flag) < 1:
            raise CliError(EXIT_PARSE, f"--{flag.replace('_', '-')} must be positive")
    try:
        graph_ring(Graph(1), ns.char, ns.order)
    except InvalidInput as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    return RunConfig(ns.char, ns.order, ns.max_cutset_n, ns.oracle_budget,
                     getattr(ns, "oracle", False), ns.format)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=32003, help="coefficient field characteristic (prime, or 0 for Q)")
    common.add_argument("--order", choices=ORDERS, default="degrevlex", help="monomial order")
    common.add_argument("--max-cutset-n", type=int, default=DEFAULT_MAX_CUTSET_N,
                        help="refuse cutset enumeration above this many vertices")
    common.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_VARS,
                        help="largest number of polynomial variables (2n) the oracle will handle")
    common.add_argument("--format", choices=("json", "table"), default="json")

    p = argparse.ArgumentParser(prog="scmbei", description="Sequentially Cohen-Macaulay binomial edge ideals.")
    p.add_argument("--version", action="version", version=f"scmbei {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cutsets", parents=[common], help="list cutsets, prime dimensions, dim and m(G)")
    c.add_argument("input", nargs="?", help="edge list or graph6 file (default: stdin)")

    c = sub.add_parser("classify", parents=[common], help="decide SCM by structural rules")
    c.add_argument("input", nargs="?")
    c.add_argument("--oracle", action="store_true", help="escalate Unknown and cross-check with the algebraic oracle")

    c = sub.add_parser("verify-lemma31", parents=[common], help="test the filtered Mayer-Vietoris identity at a cutpoint")
    c.add_argument("input", nargs="?")
    c.add_argument("--vertex", type=int, required=True, help="cutpoint (original label)")

    c = sub.add_parser("batch", parents=[common], help="classify every graph6 line of a file, NDJSON out")
    c.add_argument("input", nargs="?")
    c.add_argument("--oracle", action="store_true")
    c.add_argument("--jobs", type=int, default=1, help="worker processes (output stays in input order)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = _config(ns)
        text = _read(ns.input)
        if ns.command == "batch":
            return run_batch(text, cfg, max(1, ns.jobs))
        g = _parse(text)
        code = EXIT_OK
        if ns.command == "cutsets":
            rep = cutsets_report(g, cfg)
            table = _cutsets_table
        elif ns.command == "classify":
            rep, mismatch = classify_report(g, cfg)
            table = _classify_table
            code = EXIT_MISMATCH if mismatch else EXIT_OK
        else:
            rep = lemma31_report(g, ns.vertex, cfg)
            table = _lemma_table
            code = EXIT_RESOURCE if rep["result"]["status"] == UNKNOWN else EXIT_OK
        sys.stdout.write((table(rep) if cfg.format == "table" else dumps(rep)) + "\n")
        return code
    except CliError as exc:
        print(f"scmbei: {exc}", file=sys.stderr)
        return exc.code
    except ResourceLimit as exc:
        print(f"scmbei: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidInput as exc:
        print(f"scmbei: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
