"""Command-line interface.

Commands
    bipartite N M        exact sg(K_{N,M}) by constraint scan
    multipartite PARTS   exact sg of a complete multipartite graph
    exact FILE           brute-force sg of an arbitrary graph file
    table N [M]          sg grid over 1..N x 1..M
    levelset K           all (n, m) with sg(K_{n,m}) = K
    conjecture N         quartic root-distance scan over m in [N, C(N,2)]
    reduce FILE BUDGET   dominating-set-to-strong-geodetic target instance

Exit codes: 0 success, 2 usage or input errors, 3 resource limits hit
(search budget, geodesic cap, part limit). Output is byte-deterministic
for a fixed command line except under --timing.

The environment variable SGKIT_BUDGET overrides the backtracking node
budget of the exhaustive searches.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from .bipartite import (
    classify_sg_eq_k,
    conjecture_samples,
    conjecture_scan,
    level_set,
    sg_bipartite,
)
from .graphs import Certificate, GeodesicCapError, Partition, parse_graph, serialize_graph
from .multipartite import (
    TooManyPartsError,
    bounds_report,
    selection_certificate,
    sg_multipartite,
)
from .oracle import BudgetExceededError, OracleLimits, strong_geodetic_number_exact
from .reduction import build_reduction, verify_equivalence

__all__ = ["SolveReport", "main"]


@dataclass(frozen=True)
class SolveReport:
    """Uniform JSON-facing result of a solve command.

    method is one of scan, classification, multipartite, oracle, bounds.
    Optional sections are None when a command does not produce them; all
    payload values are JSON-native so to_dict/from_dict round-trip to
    equal objects.
    """

    method: str
    input: dict[str, Any]
    k: int | None
    selection: tuple[int, ...] | None = None
    certificate: dict[str, Any] | None = None
    bounds: dict[str, Any] | None = None
    meta: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "method": self.method,
            "input": self.input,
            "k": self.k,
            "meta": self.meta,
        }
        if self.selection is not None:
            d["selection"] = list(self.selection)
        if self.certificate is not None:
            d["certificate"] = self.certificate
        if self.bounds is not None:
            d["bounds"] = self.bounds
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "SolveReport":
        return cls(
            method=d["method"],
            input=d["input"],
            k=d["k"],
            selection=tuple(d["selection"]) if "selection" in d else None,
            certificate=d.get("certificate"),
            bounds=d.get("bounds"),
            meta=d.get("meta", {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _print(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_report(report: SolveReport, ns) -> None:
    if ns.json:
        _print(report.to_json())
        return
    _print(f"method = {report.method}")
    if report.k is not None:
        _print(f"k = {report.k}")
    if report.selection is not None:
        _print("selection = " + " ".join(str(s) for s in report.selection))
    if report.bounds is not None:
        for key in sorted(report.bounds):
            _print(f"{key} = {report.bounds[key]}")
    if report.certificate is not None:
        cert = report.certificate
        if "members" in cert:
            _print("members = " + " ".join(str(v) for v in cert["members"]))
        for geo in cert.get("geodesics", ()):
            _print("geodesic = " + " ".join(str(v) for v in geo))
        for pair in cert.get("assignments", ()):
            (u, v), w = pair
            _print(f"pair {u} {v} covers {w}")
    if "seconds" in report.meta:
        _print(f"seconds = {report.meta['seconds']}")


def _limits_from_env() -> OracleLimits:
    raw = os.environ.get("SGKIT_BUDGET")
    if raw is None:
        return OracleLimits()
    try:
        budget = int(raw)
        if budget <= 0:
            raise ValueError
    except ValueError:
        raise ValueError(f"SGKIT_BUDGET must be a positive integer, got {raw!r}")
    return OracleLimits(node_budget=budget)


def _certificate_dict(cert: Certificate) -> dict[str, Any]:
    return {
        "members": list(cert.members),
        "geodesics": [list(p) for p in cert.geodesics],
    }


def _parse_partition(tokens: list[str]) -> Partition:
    if len(tokens) == 1 and any(c in tokens[0] for c in ",^"):
        return Partition.parse(tokens[0])
    try:
        sizes = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"partition entries must be integers, got {tokens}")
    return Partition.of(sizes)


def _maybe_time(ns, t0: float, meta: dict[str, Any]) -> None:
    if ns.timing:
        meta["seconds"] = round(time.perf_counter() - t0, 6)


# ---------------------------------------------------------------- commands


def cmd_bipartite(ns) -> int:
    t0 = time.perf_counter()
    if ns.classify:
        hit = None
        for k in range(1, ns.n + ns.m + 1):
            if classify_sg_eq_k(ns.n, ns.m, k):
                hit = k
                break
        meta: dict[str, Any] = {}
        _maybe_time(ns, t0, meta)
        report = SolveReport(
            method="classification",
            input={"n": ns.n, "m": ns.m},
            k=hit,
            meta=meta,
        )
        _emit_report(report, ns)
        return 0
    sol = sg_bipartite(ns.n, ns.m)
    certificate = None
    if ns.certificate:
        parts = Partition.of((ns.n, ns.m))
        # partition order is nonincreasing: map the scan split onto it
        sel = (sol.s1, sol.s2) if ns.n >= ns.m else (sol.s2, sol.s1)
        assignments = selection_certificate(parts, sel)
        certificate = {
            "vertex_order": "larger side first, parts consecutive, ids 0-based",
            "assignments": [[list(pair), w] for pair, w in (assignments or [])],
        }
    meta = {}
    _maybe_time(ns, t0, meta)
    report = SolveReport(
        method="scan",
        input={"n": ns.n, "m": ns.m},
        k=sol.k,
        selection=(sol.s1, sol.s2),
        certificate=certificate,
        meta=meta,
    )
    _emit_report(report, ns)
    return 0


def cmd_multipartite(ns) -> int:
    t0 = time.perf_counter()
    parts = _parse_partition(ns.parts)
    if ns.bounds:
        rep = bounds_report(parts)
        meta: dict[str, Any] = {}
        _maybe_time(ns, t0, meta)
        report = SolveReport(
            method="bounds",
            input={"parts": list(parts.parts)},
            k=rep.exact,
            bounds={
                "lp_lower": rep.lp_lower,
                "whole_parts_upper": rep.whole_parts_upper,
            },
            meta=meta,
        )
        _emit_report(report, ns)
        return 0
    k, sel = sg_multipartite(parts)
    certificate = None
    if ns.certificate:
        assignments = selection_certificate(parts, sel)
        certificate = {
            "vertex_order": "parts consecutive in nonincreasing size order, ids 0-based",
            "assignments": [[list(pair), w] for pair, w in (assignments or [])],
        }
    meta = {}
    _maybe_time(ns, t0, meta)
    report = SolveReport(
        method="multipartite",
        input={"parts": list(parts.parts)},
        k=k,
        selection=sel,
        certificate=certificate,
        meta=meta,
    )
    _emit_report(report, ns)
    return 0


def cmd_exact(ns) -> int:
    t0 = time.perf_counter()
    with open(ns.file, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    limits = _limits_from_env()
    k, cert = strong_geodetic_number_exact(g, limits)
    meta: dict[str, Any] = {}
    _maybe_time(ns, t0, meta)
    report = SolveReport(
        method="oracle",
        input={"file": ns.file, "n": g.n, "edges": g.edge_count()},
        k=k,
        selection=cert.members,
        certificate=_certificate_dict(cert) if ns.certificate else None,
        meta=meta,
    )
    _emit_report(report, ns)
    return 0


def _table_values(n_max: int, m_max: int) -> list[list[int]]:
    return [[sg_bipartite(n, m).k for n in range(1, n_max + 1)] for m in range(1, m_max + 1)]


def cmd_table(ns) -> int:
    m_max = ns.m if ns.m is not None else ns.n
    values = _table_values(ns.n, m_max)
    if ns.csv:
        import csv

        with open(ns.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["m"] + [str(n) for n in range(1, ns.n + 1)])
            for i, row in enumerate(values, start=1):
                w.writerow([i] + row)
    if ns.plot:
        from .plots import render_table_heatmap

        render_table_heatmap(values, ns.plot)
    if ns.json:
        _print(json.dumps(
            {"n_max": ns.n, "m_max": m_max, "rows": values}, indent=2, sort_keys=True
        ))
    elif ns.grid:
        width = max(len(str(v)) for row in values for v in row)
        width = max(width, len(str(ns.n)), len(str(m_max)))
        head = " ".join(str(n).rjust(width) for n in range(1, ns.n + 1))
        _print(" " * (width + 2) + head)
        for i, row in enumerate(values, start=1):
            _print(str(i).rjust(width) + ": " + " ".join(str(v).rjust(width) for v in row))
    else:
        for i, row in enumerate(values, start=1):
            _print("\t".join([str(i)] + [str(v) for v in row]))
    return 0


def cmd_levelset(ns) -> int:
    pairs = level_set(ns.k)
    if ns.csv:
        import csv

        with open(ns.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "m"])
            w.writerows(pairs)
    if ns.plot:
        from .plots import render_levelset

        render_levelset(pairs, ns.k, ns.plot)
    if ns.json:
        _print(json.dumps(
            {"k": ns.k, "count": len(pairs), "pairs": [list(p) for p in pairs]},
            indent=2,
            sort_keys=True,
        ))
    else:
        for n, m in pairs:
            _print(f"{n}\t{m}")
    return 0


def cmd_conjecture(ns) -> int:
    t0 = time.perf_counter()
    if ns.csv or ns.plot:
        ms: list[int] = []
        gaps: list[float] = []
        rows = []
        for s in conjecture_samples(ns.n):
            ms.append(s.m)
            gaps.append(s.gap)
            rows.append(s)
        if ns.csv:
            import csv

            with open(ns.csv, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh)
                w.writerow(["m", "sg", "gap", "roots"])
                for s in rows:
                    w.writerow([
                        s.m,
                        s.sg,
                        f"{s.gap:.9f}",
                        ";".join(f"{r:.9f}" for r in s.roots),
                    ])
        if ns.plot:
            from .plots import render_conjecture

            render_conjecture(ms, gaps, ns.n, ns.plot)
    scan = conjecture_scan(ns.n, threads=ns.threads)
    payload = {
        "n": scan.n,
        "max_gap": round(scan.max_gap, 9),
        "argmax_m": scan.argmax_m,
        "missing": list(scan.missing),
        "bound_holds": scan.max_gap < 2.0,
    }
    if ns.timing:
        payload["seconds"] = round(time.perf_counter() - t0, 6)
    if ns.json:
        _print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print(f"n = {scan.n}")
        _print(f"max_gap = {scan.max_gap:.6f}")
        _print(f"argmax_m = {scan.argmax_m}")
        _print(f"missing = {len(scan.missing)}")
        _print(f"bound_holds = {str(scan.max_gap < 2.0).lower()}")
        if ns.timing:
            _print(f"seconds = {payload['seconds']}")
    return 0


def cmd_reduce(ns) -> int:
    with open(ns.file, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    inst = build_reduction(g, ns.budget)
    comments = [
        f"reduction target: dominating budget {ns.budget} "
        f"-> strong geodetic budget {inst.target_budget}",
        f"u1 = {inst.u1 + 1}",
        f"u2 = {inst.u2 + 1}",
    ]
    comments += [f"twin {inst.twin(v) + 1} of {v + 1}" for v in range(g.n)]
    text = serialize_graph(inst.target, comments=comments)
    verified = None
    if ns.verify:
        verified = verify_equivalence(g, (inst.side_x, inst.side_y), _limits_from_env())
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if ns.json:
        payload: dict[str, Any] = {
            "source": {"n": g.n, "edges": [list(e) for e in g.edges()]},
            "sides": {"x": list(inst.side_x), "y": list(inst.side_y)},
            "budget": ns.budget,
            "target_budget": inst.target_budget,
            "layout": {
                "u1": inst.u1,
                "u2": inst.u2,
                "twins": list(inst.twins),
            },
            "target": {"n": inst.target.n, "edges": [list(e) for e in inst.target.edges()]},
        }
        if verified is not None:
            payload["verified"] = verified
        if ns.output:
            payload["output"] = ns.output
        _print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if not ns.output:
            sys.stdout.write(text)
        else:
            _print(f"target written to {ns.output}")
            _print(f"target_budget = {inst.target_budget}")
        if verified is not None:
            _print(f"verified = {str(verified).lower()}")
    if verified is False:
        return 1
    return 0


# ------------------------------------------------------------------ parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sgkit",
        description="Strong geodetic numbers of complete multipartite graphs: "
        "exact solvers, bounds, scans, and the domination reduction.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, timing=True):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if timing:
            p.add_argument("--timing", action="store_true",
                           help="include wall-clock seconds (breaks byte determinism)")

    p = sub.add_parser("bipartite", help="exact sg(K_{n,m})")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--classify", action="store_true",
                   help="answer via the threshold classification instead of the scan")
    p.add_argument("--certificate", action="store_true",
                   help="include a concrete pair-to-vertex covering assignment")
    common(p)
    p.set_defaults(func=cmd_bipartite)

    p = sub.add_parser("multipartite", help="exact sg of a complete multipartite graph")
    p.add_argument("parts", nargs="+",
                   help="part sizes: '3 2 2 1' or compact '3,2^2,1'")
    p.add_argument("--bounds", action="store_true",
                   help="report relaxation lower / whole-parts upper bounds")
    p.add_argument("--certificate", action="store_true",
                   help="include a concrete pair-to-vertex covering assignment")
    common(p)
    p.set_defaults(func=cmd_multipartite)

    p = sub.add_parser("exact", help="brute-force sg of a graph file")
    p.add_argument("file")
    p.add_argument("--certificate", action="store_true",
                   help="include the chosen geodesics")
    common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("table", help="sg grid for 1 <= n <= N, 1 <= m <= M")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int, nargs="?", default=None)
    p.add_argument("--csv", metavar="PATH", help="also write the grid as CSV")
    p.add_argument("--plot", metavar="PATH", help="also render a heatmap figure")
    p.add_argument("--grid", action="store_true", help="aligned human-readable grid")
    common(p, timing=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("levelset", help="all (n, m) with sg(K_{n,m}) = k")
    p.add_argument("k", type=int)
    p.add_argument("--csv", metavar="PATH", help="also write the pairs as CSV")
    p.add_argument("--plot", metavar="PATH", help="also render a scatter figure")
    common(p, timing=False)
    p.set_defaults(func=cmd_levelset)

    p = sub.add_parser("conjecture", help="root-distance scan over m in [n, C(n,2)]")
    p.add_argument("n", type=int)
    p.add_argument("--threads", type=int, default=1,
                   help="partition the m range over worker threads (same output)")
    p.add_argument("--csv", metavar="PATH", help="write per-m samples as CSV")
    p.add_argument("--plot", metavar="PATH", help="render the gap curve")
    common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("reduce", help="build the domination reduction target")
    p.add_argument("file")
    p.add_argument("budget", type=int, help="dominating-set size budget")
    p.add_argument("--output", metavar="PATH", help="write the target graph here")
    p.add_argument("--verify", action="store_true",
                   help="check the equivalence with the brute-force oracles")
    common(p, timing=False)
    p.set_defaults(func=cmd_reduce)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return ns.func(ns)
    except (BudgetExceededError, TooManyPartsError, GeodesicCapError) as e:
        sys.stderr.write(f"resource limit: {e}\n")
        return 3
    except (ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
