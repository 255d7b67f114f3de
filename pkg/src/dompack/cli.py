"""Command-line surface: compute, verify, construct, search, lemmacheck.

Every campaign instance is summarized as a CampaignRecord that embeds its
GenSpec, so any record can be replayed bit-exactly.  Records stream as JSON
lines, an aligned table, or CSV; any bound violation, invalid certificate,
or lemma falsification makes the exit status nonzero.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import codec
from .constructions import (
    chordal_bipartite_dompack,
    homogeneously_orderable_dompack,
    strongly_chordal_dompack,
    tree_dompack,
)
from .errors import DompackError
from .generators import GenSpec, derive_seed, gen_chordal_bipartite_with_stats, generate
from .graph import Graph, VertexSet, greedy_maximal_independent_set
from .lp import verify_sandwich
from .planar import (
    charge_audit,
    embed_maximal_planar,
    find_low_degree_edge,
    random_min_degree4_planar,
    random_planar_embedding,
    triangulate_preserving_independent,
)
from .recognition import (
    find_homogeneous_ordering,
    find_simple_elimination_ordering,
    is_chordal_bipartite,
    is_tree,
)
from .solvers import exact_domination, exact_packing

VERIFY_CLASSES = (
    "tree",
    "strongly-chordal",
    "chordal-bipartite",
    "homogeneously-orderable",
    "planar",
    "rook",
    "any",
)

DEFAULT_BOUNDS = {
    "tree": Fraction(1),
    "strongly-chordal": Fraction(1),
    "chordal-bipartite": Fraction(2),
    "homogeneously-orderable": Fraction(2),
    "planar": Fraction(7),
    "rook": Fraction(1),
    "any": Fraction(1),
}

DEFAULT_MAX_N = {
    "tree": 50,
    "strongly-chordal": 40,
    "chordal-bipartite": 16,
    "homogeneously-orderable": 14,
    "planar": 30,
    "rook": 25,
    "any": 12,
}


@dataclass
class CampaignRecord:
    graph6: str
    n: int
    m: int
    genspec: dict | None = None
    gamma: int | None = None
    rho: int | None = None
    gamma_x: int | None = None
    rho_x: int | None = None
    x_set: list | None = None
    gamma_f: str | None = None
    certificate: dict | None = None
    bound: str | None = None
    ratio: str | None = None
    passed: bool = True
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {}
        for key in (
            "graph6",
            "n",
            "m",
            "genspec",
            "gamma",
            "rho",
            "gamma_x",
            "rho_x",
            "x_set",
            "gamma_f",
            "certificate",
            "bound",
            "ratio",
            "passed",
            "wall_time",
        ):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        out.update(self.extra)
        return out


def _frac_str(x: Fraction) -> str:
    return str(x)


def _emit(records: list[CampaignRecord], summary: dict, args) -> None:
    fmt = args.format
    lines: list[str] = []
    if fmt == "json":
        for rec in records:
            lines.append(json.dumps(rec.to_dict(), sort_keys=True))
        lines.append(json.dumps({"summary": summary}, sort_keys=True))
    elif fmt == "csv":
        import csv as _csv
        import io

        cols = ["graph6", "n", "m", "gamma", "rho", "gamma_f", "ratio", "passed", "wall_time"]
        buf = io.StringIO()
        writer = _csv.writer(buf)
        writer.writerow(cols)
        for rec in records:
            d = rec.to_dict()
            writer.writerow([d.get(c, "") for c in cols])
        lines = buf.getvalue().splitlines()
        lines.append("# " + json.dumps({"summary": summary}, sort_keys=True))
    else:
        header = f"{'graph6':<24} {'n':>3} {'m':>4} {'gamma':>5} {'rho':>4} {'gamma_f':>8} {'ratio':>6} {'pass':>5}"
        lines.append(header)
        lines.append("-" * len(header))
        for rec in records:
            d = rec.to_dict()
            lines.append(
                f"{d.get('graph6', '')[:24]:<24} {d.get('n', ''):>3} {d.get('m', ''):>4} "
                f"{str(d.get('gamma', '')):>5} {str(d.get('rho', '')):>4} "
                f"{str(d.get('gamma_f', '')):>8} {str(d.get('ratio', '')):>6} "
                f"{str(d.get('passed', '')):>5}"
            )
        lines.append("summary: " + json.dumps(summary, sort_keys=True))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_graphs(path: str) -> list[Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            graphs.append(codec.parse_graph(line))
    if not graphs:
        raise DompackError("no graphs found in input")
    return graphs


def _parse_x_set(text: str, g: Graph) -> VertexSet:
    members = [int(tok) for tok in text.replace(",", " ").split()]
    return VertexSet(g.n, members)


# -- compute -------------------------------------------------------------------


def cmd_compute(args) -> int:
    records = []
    violations = 0
    for g in _read_graphs(args.input):
        t0 = time.perf_counter()
        gamma = exact_domination(g)
        rho = exact_packing(g)
        rec = CampaignRecord(
            graph6=codec.emit_graph6(g),
            n=g.n,
            m=g.m,
            gamma=gamma.value,
            rho=rho.value,
            ratio=_frac_str(Fraction(gamma.value, rho.value)),
        )
        rec.extra["gamma_witness"] = sorted(gamma.witness)
        rec.extra["rho_witness"] = sorted(rho.witness)
        if args.fractional:
            report = verify_sandwich(g)
            rec.gamma_f = _frac_str(report.gamma_f)
            rec.passed = report.holds
        if args.x_set:
            x = _parse_x_set(args.x_set, g)
            rec.gamma_x = exact_domination(g, x).value
            rec.rho_x = exact_packing(g, x).value
            rec.x_set = sorted(x)
        rec.wall_time = round(time.perf_counter() - t0, 6)
        if not rec.passed:
            violations += 1
        records.append(rec)
    _emit(records, {"instances": len(records), "violations": violations}, args)
    return 1 if violations else 0


# -- verify --------------------------------------------------------------------


def _instance_spec(cls: str, index: int, seed: int, max_n: int, x_prob: float) -> GenSpec:
    sub = derive_seed(seed, index)
    rng = random.Random(sub)
    if cls == "tree":
        return GenSpec("tree", rng.randrange(2, max_n + 1), sub)
    if cls == "strongly-chordal":
        return GenSpec(
            "interval",
            rng.randrange(2, max_n + 1),
            sub,
            {"span": rng.choice([0.15, 0.3, 0.5])},
        )
    if cls == "chordal-bipartite":
        return GenSpec(
            "chordal-bipartite",
            rng.randrange(4, min(max_n, 16) + 1),
            sub,
            {"edge_prob": rng.choice([0.2, 0.3, 0.45])},
        )
    if cls == "homogeneously-orderable":
        return GenSpec("distance-hereditary", rng.randrange(2, max_n + 1), sub)
    if cls == "planar":
        n = rng.randrange(4, max_n + 1)
        return GenSpec("planar", n, sub, {"m": rng.randrange(0, 3 * n - 5), "x_prob": x_prob})
    if cls == "rook":
        k = 2 + index % max(1, int(math.isqrt(max_n)) - 1)
        return GenSpec("rook", k * k, sub, {"k": k, "l": k})
    if cls == "any":
        return GenSpec("gnp", rng.randrange(2, max_n + 1), sub, {"edge_prob": 0.5})
    raise DompackError(f"unknown class {cls!r}")


def _verify_one(payload: tuple) -> dict:
    cls, spec_json, bound_str, x_samples = payload
    spec = GenSpec.from_json(spec_json)
    bound = Fraction(bound_str)
    t0 = time.perf_counter()
    gen_attempts = None
    if spec.family == "chordal-bipartite":
        g, gen_attempts = gen_chordal_bipartite_with_stats(spec)
    else:
        g = generate(spec)
    gamma = exact_domination(g).value
    rho = exact_packing(g).value
    passed = gamma <= bound * rho
    rec = {
        "graph6": codec.emit_graph6(g),
        "n": g.n,
        "m": g.m,
        "genspec": json.loads(spec_json),
        "gamma": gamma,
        "rho": rho,
        "bound": bound_str,
        "ratio": _frac_str(Fraction(gamma, rho)),
    }
    if cls == "planar" and x_samples:
        rng = random.Random(derive_seed(spec.seed, 991))
        x_prob = spec.params.get("x_prob", 0.25)
        x_records = []
        for _ in range(x_samples):
            x = VertexSet(g.n, [v for v in range(g.n) if rng.random() < x_prob])
            gx = exact_domination(g, x).value
            rx = exact_packing(g, x).value
            if gx > bound * rx:
                passed = False
            x_records.append({"x": sorted(x), "gamma_x": gx, "rho_x": rx})
        rec["x_checks"] = x_records
        if x_records:
            rec["gamma_x"] = x_records[0]["gamma_x"]
            rec["rho_x"] = x_records[0]["rho_x"]
            rec["x_set"] = x_records[0]["x"]
    if gen_attempts is not None:
        rec["gen_attempts"] = gen_attempts
    rec["passed"] = passed
    rec["wall_time"] = round(time.perf_counter() - t0, 6)
    return rec


def cmd_verify(args) -> int:
    cls = args.cls
    bound = Fraction(args.bound) if args.bound else DEFAULT_BOUNDS[cls]
    max_n = args.n or DEFAULT_MAX_N[cls]
    payloads = [
        (
            cls,
            _instance_spec(cls, i, args.seed, max_n, args.x_prob).to_json(),
            str(bound),
            args.x_samples if cls == "planar" else 0,
        )
        for i in range(args.count)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, payloads))
    else:
        results = [_verify_one(p) for p in payloads]

    records = []
    violations = 0
    max_ratio = Fraction(0)
    for raw in results:
        rec = CampaignRecord(
            graph6=raw["graph6"],
            n=raw["n"],
            m=raw["m"],
            genspec=raw["genspec"],
            gamma=raw["gamma"],
            rho=raw["rho"],
            gamma_x=raw.get("gamma_x"),
            rho_x=raw.get("rho_x"),
            x_set=raw.get("x_set"),
            bound=raw["bound"],
            ratio=raw["ratio"],
            passed=raw["passed"],
            wall_time=raw["wall_time"],
        )
        if "x_checks" in raw:
            rec.extra["x_checks"] = raw["x_checks"]
        if "gen_attempts" in raw:
            rec.extra["gen_attempts"] = raw["gen_attempts"]
        max_ratio = max(max_ratio, Fraction(raw["ratio"]))
        if not raw["passed"]:
            violations += 1
        records.append(rec)
    summary = {
        "class": cls,
        "bound": str(bound),
        "instances": len(records),
        "violations": violations,
        "max_ratio": _frac_str(max_ratio),
    }
    attempts = [r["gen_attempts"] for r in results if "gen_attempts" in r]
    if attempts:
        summary["generator_acceptance"] = round(len(attempts) / sum(attempts), 4)
    _emit(records, summary, args)
    return 1 if violations else 0


# -- construct -----------------------------------------------------------------


def cmd_construct(args) -> int:
    cls = args.cls
    records = []
    failures = 0
    for g in _read_graphs(args.input):
        t0 = time.perf_counter()
        rec = CampaignRecord(graph6=codec.emit_graph6(g), n=g.n, m=g.m)
        try:
            if cls == "tree":
                if not is_tree(g):
                    raise DompackError("input is not a tree")
                cert = tree_dompack(g, args.root)
            elif cls == "strongly-chordal":
                ordering = find_simple_elimination_ordering(g)
                if ordering is None:
                    raise DompackError("input is not strongly chordal")
                cert = strongly_chordal_dompack(g, ordering)
            elif cls == "chordal-bipartite":
                if not is_chordal_bipartite(g):
                    raise DompackError("input is not chordal bipartite")
                cert = chordal_bipartite_dompack(g)
            elif cls == "homogeneously-orderable":
                ordering = find_homogeneous_ordering(g)
                if ordering is None:
                    raise DompackError("input is not homogeneously orderable")
                cert = homogeneously_orderable_dompack(g, ordering)
            else:
                raise DompackError(f"no constructive algorithm for class {cls!r}")
        except DompackError as exc:
            rec.passed = False
            rec.extra["error"] = str(exc)
            failures += 1
            records.append(rec)
            continue
        rec.certificate = json.loads(cert.to_json())
        rec.gamma = exact_domination(g).value
        rec.rho = exact_packing(g).value
        rec.bound = str(cert.bound_constant)
        rec.passed = cert.valid and len(cert.d) <= cert.bound_constant * len(cert.p)
        rec.wall_time = round(time.perf_counter() - t0, 6)
        if not rec.passed:
            failures += 1
        records.append(rec)
    _emit(records, {"class": cls, "instances": len(records), "failures": failures}, args)
    return 1 if failures else 0


# -- search --------------------------------------------------------------------


def cmd_search(args) -> int:
    if args.n > 30:
        raise DompackError("extremal search is capped at n <= 30")
    target = Fraction(args.target)
    rng = random.Random(args.seed)
    best_ratio = Fraction(0)
    best_g6 = None
    best_gamma = best_rho = None
    t0 = time.perf_counter()

    iterations_left = args.iterations
    restart = 0
    while iterations_left > 0 and best_ratio < target:
        restart += 1
        emb = embed_maximal_planar(derive_seed(args.seed, restart), args.n)
        all_edges = sorted((min(u, v), max(u, v)) for u, v in emb.edges)
        keep = rng.uniform(0.7, 1.0)
        present = {e for e in all_edges if rng.random() < keep}

        def evaluate(graph: Graph):
            gamma = exact_domination(graph).value
            rho = exact_packing(graph).value
            # Climb key: first eliminate distant vertex pairs (rho drops to
            # 1 exactly when none remain, and that is where large ratios
            # live), then push gamma up.  The reported and target-tested
            # quantity is always the exact ratio.
            far = sum(
                graph.n - graph.second_masks[v].bit_count() for v in range(graph.n)
            )
            climb = (1, gamma) if far == 0 else (0, -far)
            return climb, Fraction(gamma, rho), gamma, rho

        def consider(graph: Graph, ratio: Fraction, gamma: int, rho: int) -> None:
            nonlocal best_ratio, best_g6, best_gamma, best_rho
            if ratio > best_ratio:
                best_ratio = ratio
                best_g6 = codec.emit_graph6(graph)
                best_gamma = gamma
                best_rho = rho

        g = Graph(args.n, sorted(present))
        cur, ratio, gamma, rho = evaluate(g)
        consider(g, ratio, gamma, rho)
        stall = 0
        while iterations_left > 0 and best_ratio < target and stall < 12 * args.n:
            iterations_left -= 1
            e = all_edges[rng.randrange(len(all_edges))]
            nxt = set(present)
            if e in nxt:
                nxt.discard(e)
            else:
                nxt.add(e)
            g = Graph(args.n, sorted(nxt))
            climb, ratio, gamma, rho = evaluate(g)
            if climb >= cur:
                stall = stall + 1 if climb == cur else 0
                present, cur = nxt, climb
                consider(g, ratio, gamma, rho)
            else:
                stall += 1

    found = best_ratio >= target
    rec = CampaignRecord(
        graph6=best_g6 or "",
        n=args.n,
        m=codec.parse_graph6(best_g6).m if best_g6 else 0,
        gamma=best_gamma,
        rho=best_rho,
        ratio=_frac_str(best_ratio),
        passed=True,
        wall_time=round(time.perf_counter() - t0, 3),
    )
    rec.extra["target"] = str(target)
    rec.extra["found"] = found
    _emit(
        [rec],
        {"target": str(target), "found": found, "best_ratio": _frac_str(best_ratio)},
        args,
    )
    return 0  # best-effort by design


# -- lemmacheck ----------------------------------------------------------------


def _connected_min_degree2_embedding(seed: int, n_max: int):
    for attempt in range(10_000):
        sub = derive_seed(seed, attempt)
        rng = random.Random(sub)
        n = rng.randrange(4, n_max + 1)
        m = rng.randrange(int(1.4 * n), 3 * n - 5)
        emb = random_planar_embedding(sub, n, m)
        g = emb.graph()
        if g.is_connected() and g.min_degree() >= 2:
            return emb, g
    raise DompackError("could not generate a connected min-degree-2 planar graph")


def cmd_lemmacheck(args) -> int:
    failures = 0
    records = []
    n_max = args.n or 40
    for i in range(args.count):
        sub = derive_seed(args.seed, 7_000_000 + i)
        t0 = time.perf_counter()
        rec = CampaignRecord(graph6="", n=0, m=0)
        try:
            if args.lemma == "triangulate":
                emb, g = _connected_min_degree2_embedding(sub, n_max)
                ind = greedy_maximal_independent_set(g)
                tri = triangulate_preserving_independent(emb, ind)
                ok = tri.is_triangulated()
                mg = tri.multigraph()
                ok = ok and not any(u in ind and v in ind for u, v in mg.edges)
                ok = ok and all(mg.degree(v) >= g.degree(v) for v in range(g.n))
                rec.graph6, rec.n, rec.m = codec.emit_graph6(g), g.n, g.m
                rec.extra["independent_set"] = sorted(ind)
            elif args.lemma == "discharge":
                g = random_min_degree4_planar(sub, 6 + (i % (max(n_max, 12) - 5)) + 6)
                edge = find_low_degree_edge(g)
                ok = edge is not None
                rec.graph6, rec.n, rec.m = codec.emit_graph6(g), g.n, g.m
                rec.extra["edge"] = list(edge) if edge else None
            elif args.lemma == "charge-audit":
                rng = random.Random(sub)
                n = rng.randrange(4, n_max + 1)
                emb = embed_maximal_planar(sub, n)
                g = emb.graph()
                low = VertexSet(g.n, [v for v in range(g.n) if emb.degree(v) <= 7])
                ind = greedy_maximal_independent_set(g, low)
                ledger = charge_audit(emb, ind)
                ok = ledger.total == Fraction(-12) and len(ledger.negative_vertices) > 0
                rec.graph6, rec.n, rec.m = codec.emit_graph6(g), g.n, g.m
                rec.extra["total_charge"] = str(ledger.total)
                rec.extra["transfers"] = len(ledger.transfers)
            else:
                raise DompackError(f"unknown lemma {args.lemma!r}")
        except DompackError as exc:
            ok = False
            rec.extra["error"] = str(exc)
        rec.passed = ok
        rec.wall_time = round(time.perf_counter() - t0, 6)
        if not ok:
            failures += 1
        records.append(rec)
    summary = {"lemma": args.lemma, "instances": len(records), "failures": failures}
    _emit(records, summary, args)
    return 1 if failures else 0


# -- entry ---------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("DOMPACK_SEED", "0")),
        help="master seed (default: env DOMPACK_SEED or 0)",
    )
    parser.add_argument("--format", choices=("json", "table", "csv"), default="table")
    parser.add_argument("--out", help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dompack",
        description="domination/packing numbers: exact solvers, bounds, constructions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="gamma, rho (and gamma_f, X-variants) of input graphs")
    p.add_argument("input", nargs="?", default="-", help="file of graph6/JSON lines, or - for stdin")
    p.add_argument("--fractional", action="store_true", help="also compute gamma_f exactly")
    p.add_argument("--x-set", help="comma-separated vertices for gamma_X / rho_X")
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="bound-verification campaign over generated instances")
    p.add_argument("--class", dest="cls", choices=VERIFY_CLASSES, required=True)
    p.add_argument("--bound", help="rational c to assert gamma <= c * rho (default per class)")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, help="max vertex count (default per class)")
    p.add_argument("--x-prob", type=float, default=0.25, help="planar: P(v in X)")
    p.add_argument("--x-samples", type=int, default=2, help="planar: random X sets per instance")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="run the class construction on input graphs")
    p.add_argument("--class", dest="cls", choices=VERIFY_CLASSES[:4], required=True)
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--root", type=int, default=0, help="root vertex for the tree construction")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="hill-climb planar instances toward a target gamma/rho")
    p.add_argument("--target", default="3", help="target ratio (rational, e.g. 5/2)")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--iterations", type=int, default=2000)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("lemmacheck", help="run executable lemma checks over generated instances")
    p.add_argument("--lemma", choices=("triangulate", "discharge", "charge-audit"), required=True)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--n", type=int, help="max vertex count")
    _add_common(p)
    p.set_defaults(func=cmd_lemmacheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DompackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
