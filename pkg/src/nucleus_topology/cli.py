"""Command-line entry point.

    python -m nucleus_topology elser --edges "0-1,0-2,1-2" --k 2
    python -m nucleus_topology verify --corpus 4

Exit codes: 0 success, 1 verification failure, 2 matching anomaly,
64 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .complex import SimplicialComplex, alexander_dual, reduced_betti
from .graph import Graph, GraphError, bits, max_edges_from_env, parse_graph, parse_inline
from .morse import MatchingAnomaly
from .nucleus import (
    MAX_SUBSET_VERTICES,
    GuardError,
    a_complex,
    elser_number,
    elser_via_euler,
    enumerate_nuclei,
    nucleus_complex,
)
from .verify import check_graph, morse_report, verify_corpus, verify_theorem

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ANOMALY = 2
EXIT_USAGE = 64

COMMANDS = ("nuclei", "elser", "complex", "acomplex", "homology", "morse", "verify", "duality")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    edges: str | None = None
    graph: str | None = None
    graph6: str | None = None
    u: str | None = None
    k: int = 2
    format: str = "json"
    max_edges: int | None = None
    max_subset_vertices: int = MAX_SUBSET_VERTICES
    seed: int = 0
    jobs: int = 1
    corpus: int | None = None
    permutations: int = 3
    strict: bool = False
    of: str = "nucleus"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        for name in ("max_subset_vertices", "jobs"):
            if getattr(self, name) <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.max_edges is not None and self.max_edges <= 0:
            raise UsageError("--max-edges must be positive")
        if self.k < 0:
            raise UsageError("--k must be nonnegative")
        if self.permutations < 0:
            raise UsageError("--permutations must be nonnegative")

    def load_graph(self) -> Graph:
        sources = [s for s in (self.edges, self.graph, self.graph6) if s is not None]
        if len(sources) != 1:
            raise UsageError("give exactly one of --edges, --graph, --graph6")
        limit = self.max_edges if self.max_edges is not None else max_edges_from_env()
        if self.edges is not None:
            return parse_inline(self.edges, max_edges=limit)
        if self.graph6 is not None:
            return parse_graph(self.graph6, max_edges=limit, fmt="graph6")
        try:
            with open(self.graph) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {self.graph}: {exc}")
        return parse_graph(text, max_edges=limit)

    def vertex_list(self, g: Graph) -> list[int]:
        if self.u is None:
            raise UsageError("--u is required for this command")
        out = []
        for token in self.u.split(","):
            token = token.strip()
            if not token:
                continue
            if not token.isdigit() or int(token) >= g.n:
                raise UsageError(f"bad vertex {token!r} in --u")
            out.append(int(token))
        if len(set(out)) != len(out):
            raise UsageError("--u repeats a vertex")
        return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nucleus-topology", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_argument_group("graph source")
        src.add_argument("--edges", help='inline edge list, e.g. "0-1,1-2"')
        src.add_argument("--graph", help="edge-list file (or graph6 file)")
        src.add_argument("--graph6", help="graph6 string")
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--max-edges", type=int, default=None,
                       help="edge guard (default: $NUCLEUS_MAX_EDGES or 20)")
        if name in ("complex", "acomplex", "homology", "morse", "verify", "duality"):
            p.add_argument("--u", default=None, help='comma-separated vertices, e.g. "0,1"; "" is U = ∅')
        if name == "elser":
            p.add_argument("--k", type=int, default=2)
            p.add_argument("--max-subset-vertices", type=int, default=MAX_SUBSET_VERTICES)
        if name == "homology":
            p.add_argument("--of", choices=("nucleus", "a"), default="nucleus")
        if name == "morse":
            p.add_argument("--strict", action="store_true",
                           help="abort when a step selects a face whose partner is taken")
        if name == "verify":
            p.add_argument("--corpus", type=int, default=None, metavar="N",
                           help="all labeled connected graphs on 3..N vertices")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--permutations", type=int, default=3)
            p.add_argument("--jobs", type=int, default=1)
    return parser


# -- output -----------------------------------------------------------------------

def _emit_json(payload, out):
    out.write(json.dumps(payload, indent=2) + "\n")


def _emit_tsv(header, rows, out):
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(c) for c in row) + "\n")


def _join(xs) -> str:
    return ",".join(map(str, xs))


# -- commands -------------------------------------------------------------------------

def cmd_nuclei(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    nuclei = [{"edges": bits(n.edge_set), "vertices": bits(n.vertex_set)} for n in enumerate_nuclei(g)]
    if cfg.format == "tsv":
        _emit_tsv(("edges", "vertices"), ((_join(n["edges"]), _join(n["vertices"])) for n in nuclei), out)
    else:
        _emit_json({"graph": str(g), "count": len(nuclei), "nuclei": nuclei}, out)
    return EXIT_OK


def cmd_elser(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    report = elser_number(g, cfg.k)
    payload = report.to_json()
    if g.n <= cfg.max_subset_vertices:
        via = elser_via_euler(g, cfg.k, max_vertices=cfg.max_subset_vertices)
        payload["via_euler"] = via
        payload["identity_ok"] = via == report.value
    if cfg.format == "tsv":
        _emit_tsv(("edges", "vertices", "sign"),
                  ((t.edges, t.vertices, t.sign) for t in report.terms), out)
        out.write(f"# k={cfg.k}\tvalue={report.value}\n")
    else:
        _emit_json(payload, out)
    return EXIT_OK if payload.get("identity_ok", True) else EXIT_FAILED


def _emit_complex(cx: SimplicialComplex, cfg: RunConfig, out):
    if cfg.format == "tsv":
        _emit_tsv(("facet",), ((_join(bits(f)),) for f in cx.facets()), out)
    else:
        _emit_json(cx.to_json(), out)


def cmd_complex(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    _emit_complex(nucleus_complex(g, cfg.vertex_list(g)), cfg, out)
    return EXIT_OK


def cmd_acomplex(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    _emit_complex(a_complex(g, cfg.vertex_list(g)), cfg, out)
    return EXIT_OK


def cmd_homology(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    u = cfg.vertex_list(g)
    cx = nucleus_complex(g, u) if cfg.of == "nucleus" else a_complex(g, u)
    betti = reduced_betti(cx)
    if cfg.format == "tsv":
        _emit_tsv(("degree", "betti"), betti.betti.items(), out)
    else:
        _emit_json({"complex": cfg.of, "u": u, "f_vector": {str(k): v for k, v in cx.f_vector().items()},
                    "betti": betti.to_json()}, out)
    return EXIT_OK


def cmd_duality(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    u = cfg.vertex_list(g)
    delta = nucleus_complex(g, u)
    dual = alexander_dual(delta)
    a = a_complex(g, u)
    bd, bdual = reduced_betti(delta), reduced_betti(dual)
    reflected = all(bd[i] == bdual[g.m - i - 3] for i in range(-1, g.m - 1))
    same = dual == a
    payload = {"u": u, "dual_equals_a": same, "betti_nucleus": bd.to_json(),
               "betti_dual": bdual.to_json(), "reflection_ok": reflected}
    if cfg.format == "tsv":
        _emit_tsv(("check", "result"), (("dual_equals_a", same), ("reflection_ok", reflected)), out)
    else:
        _emit_json(payload, out)
    # A_∅ is void by definition, so the face-set identity is only claimed for U ≠ ∅
    return EXIT_OK if reflected and (same or not u) else EXIT_FAILED


def cmd_morse(cfg: RunConfig, out) -> int:
    g = cfg.load_graph()
    u = cfg.vertex_list(g)
    if not u:
        raise UsageError("morse needs a nonempty --u")
    try:
        report = morse_report(g, u, strict=cfg.strict)
    except MatchingAnomaly as exc:
        _emit_json({"anomaly": str(exc), "layer": exc.layer, "step": exc.step,
                    "face": bits(exc.face), "partner": bits(exc.partner)}, out)
        return EXIT_ANOMALY
    if cfg.format == "tsv":
        _emit_tsv(("low", "high", "layer", "step"),
                  ((_join(bits(p.low)), _join(bits(p.high)), p.layer, p.step) for p in report.matching.pairs),
                  out)
    else:
        _emit_json(report.to_json(), out)
    return EXIT_OK if report.valid and report.acyclic else EXIT_FAILED


def cmd_verify(cfg: RunConfig, out) -> int:
    rows = cfg.format == "tsv"
    if cfg.corpus is not None:
        if any(s is not None for s in (cfg.edges, cfg.graph, cfg.graph6)):
            raise UsageError("--corpus cannot be combined with a graph source")
        tally = verify_corpus(cfg.corpus, seed=cfg.seed, permutations=cfg.permutations,
                              jobs=cfg.jobs, rows=rows)
    else:
        g = cfg.load_graph()
        if cfg.u is not None:
            report = verify_theorem(g, cfg.vertex_list(g))
            if rows:
                _emit_tsv(("graph", "u", "check", "result"),
                          [(str(g), _join(report.u), "theorem",
                            {True: "pass", False: "fail", None: "report"}[report.passed])], out)
            else:
                _emit_json({"graph": str(g), **report.to_json()}, out)
            return EXIT_FAILED if report.passed is False else EXIT_OK
        tally = check_graph(g, seed=cfg.seed, permutations=cfg.permutations, rows=rows)
    if rows:
        _emit_tsv(("graph", "u", "check", "result"), tally.rows, out)
    else:
        _emit_json(tally.to_json(), out)
    return EXIT_OK if tally.ok else EXIT_FAILED


HANDLERS = {
    "nuclei": cmd_nuclei, "elser": cmd_elser, "complex": cmd_complex, "acomplex": cmd_acomplex,
    "homology": cmd_homology, "morse": cmd_morse, "verify": cmd_verify, "duality": cmd_duality,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        return HANDLERS[cfg.command](cfg, out)
    except (UsageError, GraphError, GuardError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
