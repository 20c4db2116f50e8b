"""Document formats, SVG output and the ``monogrid`` command line.

Graph documents come in two interchangeable encodings.  The text form is
line oriented::

    # comments and blank lines are ignored
    n 3
    outer 0 1
    label 0 r              (optional, the rest of the line is the label)
    0: 1 2                 (neighbours of 0 in counterclockwise order)
    1: 2 0
    2: 0 1

Every vertex ``0 .. n-1`` needs exactly one adjacency line.  The JSON form
is an object with the keys ``n``, ``rotation``, ``outer`` and optionally
``labels``.  Drawings are exchanged as JSON only.

Exit codes of the command line: 0 when every requested check passes, 1 when
a property check fails, 2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from . import generators
from .full_layout import LayoutError, draw_graph
from .good_tree import GoodSpanningTree, GoodTreeError, build_good_spanning_tree
from .plane_graph import PlaneGraph, PlaneGraphError, validate
from .tree_layout import GridDrawing
from .verify import ORACLE_MAX_N, check_all_pairs, grid_bounds, oracle_all_paths_monotone

CORPUS_ENV = "MONOGRID_CORPUS"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class GraphParseError(PlaneGraphError):
    """A graph document could not be turned into a valid plane graph.

    ``line`` is 1-based and ``None`` for whole-graph problems such as
    disconnection; ``field`` names the offending part of the document.
    """

    def __init__(self, message: str, line: Optional[int] = None, field: str = "graph"):
        where = f"line {line}, {field}" if line is not None else field
        super().__init__(f"{where}: {message}")
        self.message = message
        self.line = line
        self.field = field

    def report(self) -> dict:
        return {"message": self.message, "line": self.line, "field": self.field}


# graph documents -----------------------------------------------------------


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", line, what) from None


def _parse_text(text: str):
    n = None
    outer = None
    outer_line = None
    labels: dict[int, str] = {}
    rows: dict[int, tuple[list[int], int]] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        head, _, rest = body.partition(" ")
        if head == "n":
            if n is not None:
                raise GraphParseError("vertex count given twice", no, "n")
            n = _int(rest.strip(), no, "n")
            if n < 1:
                raise GraphParseError("a graph needs at least one vertex", no, "n")
        elif head == "outer":
            parts = rest.split()
            if len(parts) != 2:
                raise GraphParseError("outer dart needs two vertices", no, "outer")
            outer = (_int(parts[0], no, "outer"), _int(parts[1], no, "outer"))
            outer_line = no
        elif head == "label":
            v_tok, _, name = rest.strip().partition(" ")
            labels[_int(v_tok, no, "label")] = name.strip()
        elif head.endswith(":") or ":" in body:
            v_tok, _, nbrs = body.partition(":")
            v = _int(v_tok.strip(), no, "vertex")
            if v in rows:
                raise GraphParseError(f"vertex {v} has two adjacency lines", no, "vertex")
            rows[v] = ([_int(w, no, f"neighbours of {v}") for w in nbrs.split()], no)
        else:
            raise GraphParseError(f"unrecognised line {body!r}", no, "line")
    if n is None:
        raise GraphParseError("missing 'n' line", None, "n")
    return n, outer, outer_line, labels, rows


def _parse_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno, f"column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise GraphParseError("expected a JSON object", 1, "document")
    n = doc.get("n")
    rotation = doc.get("rotation")
    if not isinstance(n, int) or n < 1:
        raise GraphParseError("'n' must be a positive integer", None, "n")
    if not isinstance(rotation, list):
        raise GraphParseError("'rotation' must be a list of lists", None, "rotation")
    rows = {}
    for v, nbrs in enumerate(rotation):
        if not isinstance(nbrs, list) or not all(isinstance(w, int) for w in nbrs):
            raise GraphParseError("expected a list of integers", None, f"rotation[{v}]")
        rows[v] = (list(nbrs), None)
    outer = doc.get("outer")
    if outer is not None:
        if not (isinstance(outer, list) and len(outer) == 2 and all(isinstance(w, int) for w in outer)):
            raise GraphParseError("outer dart must be two integers", None, "outer")
        outer = (outer[0], outer[1])
    labels = doc.get("labels")
    labels = {} if labels is None else {v: str(s) for v, s in enumerate(labels)}
    return n, outer, None, labels, rows


def parse_graph(text: str) -> PlaneGraph:
    """Parse a text or JSON graph document into a validated plane graph."""
    if text.lstrip().startswith("{"):
        n, outer, outer_line, labels, rows = _parse_json(text)
        json_doc = True
    else:
        n, outer, outer_line, labels, rows = _parse_text(text)
        json_doc = False

    def where(v: int) -> tuple[Optional[int], str]:
        if json_doc:
            return None, f"rotation[{v}]"
        return rows[v][1], f"neighbours of {v}"

    for v in rows:
        if not 0 <= v < n:
            line = None if json_doc else rows[v][1]
            raise GraphParseError(f"vertex {v} is outside 0..{n - 1}", line, "vertex")
    for v in range(n):
        if v not in rows:
            raise GraphParseError(f"vertex {v} has no adjacency list", None, "rotation")
    for v in range(n):
        nbrs = rows[v][0]
        seen = set()
        for w in nbrs:
            if w == v:
                raise GraphParseError(f"self-loop at {v}", *where(v))
            if not 0 <= w < n:
                raise GraphParseError(f"neighbour {w} is outside 0..{n - 1}", *where(v))
            if w in seen:
                raise GraphParseError(f"duplicate neighbour {w} of {v}", *where(v))
            seen.add(w)
    for v in range(n):
        for w in rows[v][0]:
            if v not in rows[w][0]:
                raise GraphParseError(
                    f"asymmetric adjacency: edge ({v}, {w}) is listed at {v} but not at {w}",
                    *where(v),
                )
    if any(rows[v][0] for v in range(n)):
        if outer is None:
            raise GraphParseError("missing outer dart", None, "outer")
        u, v = outer
        if not (0 <= u < n and v in rows[u][0]):
            raise GraphParseError(f"outer dart ({u}, {v}) is not an edge", outer_line, "outer")
    else:
        outer = None
    for v in labels:
        if not 0 <= v < n:
            raise GraphParseError(f"label for unknown vertex {v}", None, "labels")
    names = None
    if labels:
        names = tuple(labels.get(v, str(v)) for v in range(n))
    g = PlaneGraph(tuple(tuple(rows[v][0]) for v in range(n)), outer, names)
    report = validate(g)
    if not report:
        raise GraphParseError(report.problems[0], None, "graph")
    return g


def format_graph(g: PlaneGraph, fmt: str = "text") -> str:
    """Serialise ``g``; ``parse_graph(format_graph(g, f)) == g`` for both formats."""
    if fmt == "json":
        doc: dict[str, Any] = {
            "n": g.n,
            "rotation": [list(r) for r in g.rotation],
            "outer": None if g.outer is None else list(g.outer),
        }
        if g.labels is not None:
            doc["labels"] = list(g.labels)
        return json.dumps(doc, sort_keys=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown graph format {fmt!r}")
    lines = [f"n {g.n}"]
    if g.outer is not None:
        lines.append(f"outer {g.outer[0]} {g.outer[1]}")
    if g.labels is not None:
        lines.extend(f"label {v} {s}" for v, s in enumerate(g.labels))
    for v, nbrs in enumerate(g.rotation):
        lines.append(f"{v}: " + " ".join(map(str, nbrs)) if nbrs else f"{v}:")
    return "\n".join(lines) + "\n"


def generate(kind: str, n: int, seed: int = 0) -> PlaneGraph:
    """Deterministic generated graph; unknown kinds and sizes are rejected."""
    if kind not in generators.KINDS:
        raise PlaneGraphError(f"unsupported graph kind {kind!r}; choose from {', '.join(generators.KINDS)}")
    low = generators.MIN_N.get(kind, 1)
    if n < low:
        raise PlaneGraphError(f"{kind} needs n >= {low}")
    return generators.generate(kind, n, seed)


# drawing documents ---------------------------------------------------------


@dataclass(frozen=True)
class DrawingDocument:
    """A finished drawing with enough structure to re-verify it offline.

    ``rotation`` and ``outer`` describe the embedding that was drawn, which
    may differ from the input embedding when the tree builder re-embedded.
    """

    positions: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int, str], ...]
    root: int
    reference_edge: Optional[tuple[int, int]]
    rotation: tuple[tuple[int, ...], ...]
    outer: Optional[tuple[int, int]]
    bounds: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)
    labels: Optional[tuple[str, ...]] = None

    @property
    def n(self) -> int:
        return len(self.positions)

    def to_json(self) -> str:
        doc = {
            "positions": [list(p) for p in self.positions],
            "edges": [list(e) for e in self.edges],
            "root": self.root,
            "reference_edge": None if self.reference_edge is None else list(self.reference_edge),
            "rotation": [list(r) for r in self.rotation],
            "outer": None if self.outer is None else list(self.outer),
            "bounds": self.bounds,
            "summary": self.summary,
            "labels": None if self.labels is None else list(self.labels),
        }
        return json.dumps(doc, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> DrawingDocument:
        try:
            doc = json.loads(text)
            ref = doc["reference_edge"]
            outer = doc["outer"]
            labels = doc.get("labels")
            return cls(
                positions=tuple((int(x), int(y)) for x, y in doc["positions"]),
                edges=tuple((int(u), int(v), str(role)) for u, v, role in doc["edges"]),
                root=int(doc["root"]),
                reference_edge=None if ref is None else (int(ref[0]), int(ref[1])),
                rotation=tuple(tuple(int(w) for w in r) for r in doc["rotation"]),
                outer=None if outer is None else (int(outer[0]), int(outer[1])),
                bounds=dict(doc.get("bounds", {})),
                summary=dict(doc.get("summary", {})),
                labels=None if labels is None else tuple(labels),
            )
        except json.JSONDecodeError as exc:
            raise GraphParseError(exc.msg, exc.lineno, f"column {exc.colno}") from None
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphParseError(f"malformed drawing document ({exc})", None, "drawing") from None

    def graph(self) -> PlaneGraph:
        return PlaneGraph(self.rotation, self.outer, self.labels)

    def drawing(self) -> GridDrawing:
        return GridDrawing(self.positions)

    def tree(self) -> GoodSpanningTree:
        """Rebuild the ordered spanning tree from the edge roles."""
        g = self.graph()
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, role in self.edges:
            if role == "tree":
                adj[u].append(v)
                adj[v].append(u)
        parent: list[Optional[int]] = [None] * self.n
        seen = {self.root}
        todo = [self.root]
        while todo:
            u = todo.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    todo.append(w)
        if len(seen) != self.n:
            raise GraphParseError("tree edges do not span the graph", None, "edges")
        s = None if self.reference_edge is None else self.reference_edge[1]
        return GoodSpanningTree.from_parent(g, self.root, parent, s, "document")


def grid_summary(d: GridDrawing, g: PlaneGraph) -> dict:
    width_bound, y_bound = grid_bounds(g.n, g.m)
    ys = [p[1] for p in d.pos] or [0]
    return {
        "width": d.width,
        "height": d.height,
        "y_min": min(ys),
        "y_max": max(ys),
        "width_bound": width_bound,
        "y_bound": y_bound,
        "within": d.width <= width_bound and min(ys) >= 0 and max(ys) <= y_bound,
    }


def drawing_document(
    g: PlaneGraph, t: GoodSpanningTree, d: GridDrawing, summary: Optional[dict] = None
) -> DrawingDocument:
    edges = []
    for u, v in g.edges():
        a, b = (u, v) if u < v else (v, u)
        edges.append((a, b, "tree" if t.is_tree_edge(a, b) else "non_tree"))
    edges.sort()
    return DrawingDocument(
        positions=tuple(d.pos),
        edges=tuple(edges),
        root=t.root,
        reference_edge=t.reference_edge,
        rotation=g.rotation,
        outer=g.outer,
        bounds=grid_summary(d, g),
        summary=dict(summary or {}),
        labels=g.labels,
    )


# SVG -----------------------------------------------------------------------


@dataclass(frozen=True)
class SvgOptions:
    unit: float = 20.0
    margin: float = 10.0
    labels: bool = False
    radius: float = 3.0


def _num(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def emit_svg(doc: DrawingDocument, options: Optional[SvgOptions] = None) -> str:
    """SVG 1.1 picture with the y-axis pointing up; tree edges solid, others dashed."""
    o = options or SvgOptions()
    pts = doc.positions or ((0, 0),)
    xmin = min(p[0] for p in pts)
    xmax = max(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    ymax = max(p[1] for p in pts)

    def sx(x: int) -> str:
        return _num(o.margin + (x - xmin) * o.unit)

    def sy(y: int) -> str:
        return _num(o.margin + (ymax - y) * o.unit)

    w = _num(2 * o.margin + (xmax - xmin) * o.unit)
    h = _num(2 * o.margin + (ymax - ymin) * o.unit)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        '<g stroke="black" stroke-width="1" fill="none">',
    ]
    for u, v, role in sorted(doc.edges):
        (x1, y1), (x2, y2) = doc.positions[u], doc.positions[v]
        dash = "" if role == "tree" else ' stroke-dasharray="4 3"'
        out.append(
            f'<line class="{role}" x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}"{dash}/>'
        )
    out.append("</g>")
    out.append('<g fill="black">')
    for v, (x, y) in enumerate(doc.positions):
        out.append(f'<circle class="vertex" cx="{sx(x)}" cy="{sy(y)}" r="{_num(o.radius)}"/>')
    out.append("</g>")
    if o.labels:
        out.append('<g font-family="sans-serif" font-size="10" fill="black">')
        for v, (x, y) in enumerate(doc.positions):
            name = doc.labels[v] if doc.labels is not None else str(v)
            name = name.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            out.append(f'<text x="{_num(float(sx(x)) + o.radius + 1)}" y="{_num(float(sy(y)) - o.radius - 1)}">{name}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# pipeline ------------------------------------------------------------------


def draw_document(
    g: PlaneGraph, root: Optional[int] = None, debug_stepwise: bool = False
) -> tuple[DrawingDocument, dict]:
    """Build the tree, draw, and package the result with stage timings."""
    t0 = time.perf_counter()
    gp, t = build_good_spanning_tree(g, root)
    t1 = time.perf_counter()
    d = draw_graph(gp, t, debug_stepwise=debug_stepwise)
    t2 = time.perf_counter()
    summary = {"construction": t.construction, "stepwise_checked": debug_stepwise}
    timing = {"build_s": t1 - t0, "draw_s": t2 - t1}
    return drawing_document(gp, t, d, summary), timing


def verify_document(doc: DrawingDocument, graph: Optional[PlaneGraph] = None, oracle: bool = False) -> dict:
    """Re-run every check on a stored drawing and report the outcome."""
    g = doc.graph()
    report = validate(g)
    if not report:
        raise GraphParseError(report.problems[0], None, "rotation")
    if graph is not None:
        want = sorted(tuple(sorted(e)) for e in graph.edges())
        have = sorted(tuple(sorted(e)) for e in g.edges())
        if want != have:
            raise GraphParseError("drawing edges differ from the graph document", None, "edges")
    t = doc.tree()
    d = doc.drawing()
    rep = check_all_pairs(d, g, t)
    out = rep.summary()
    if oracle:
        if g.n > ORACLE_MAX_N:
            raise GraphParseError(f"oracle is limited to n <= {ORACLE_MAX_N}", None, "oracle")
        failures = [
            [a, b] for a in range(g.n) for b in range(a + 1, g.n) if not oracle_all_paths_monotone(d, g, a, b)
        ]
        out["oracle_failures"] = failures
        out["passed"] = out["passed"] and not failures
    return out


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _fail(code: int, stage: str, exc: Exception) -> int:
    report = {"status": "input_error" if code == EXIT_INPUT else "failed", "stage": stage}
    if isinstance(exc, GraphParseError):
        report.update(exc.report())
    else:
        report["message"] = str(exc)
    sys.stderr.write(json.dumps(report, sort_keys=True) + "\n")
    return code


def _load_graph(args) -> PlaneGraph:
    if args.kind is not None:
        return generate(args.kind, args.n, args.seed)
    if args.graph is None:
        raise GraphParseError("give a graph file or --kind/--n", None, "arguments")
    return parse_graph(_read(args.graph))


def _cmd_gen(args) -> int:
    try:
        g = generate(args.kind, args.n, args.seed)
    except PlaneGraphError as exc:
        return _fail(EXIT_INPUT, "gen", exc)
    _write(args.output, format_graph(g, args.format))
    return EXIT_OK


def _cmd_draw(args) -> int:
    try:
        g = _load_graph(args)
    except (OSError, PlaneGraphError) as exc:
        return _fail(EXIT_INPUT, "parse", exc)
    try:
        doc, timing = draw_document(g, args.root, args.debug_stepwise)
    except GoodTreeError as exc:
        code = EXIT_INPUT if "not an outer vertex" in str(exc) else EXIT_FAILED
        return _fail(code, "good_tree", exc)
    except LayoutError as exc:
        return _fail(EXIT_FAILED, "layout", exc)
    if args.verify or args.oracle:
        try:
            result = verify_document(doc, oracle=args.oracle)
        except PlaneGraphError as exc:
            return _fail(EXIT_INPUT, "verify", exc)
        doc = DrawingDocument(**{**doc.__dict__, "summary": {**doc.summary, **result}})
    if args.format == "svg":
        _write(args.output, emit_svg(doc, SvgOptions(labels=args.labels)))
    else:
        _write(args.output, doc.to_json())
    if args.timing:
        sys.stderr.write(json.dumps({k: round(v, 4) for k, v in timing.items()}) + "\n")
    if (args.verify or args.oracle) and not doc.summary.get("passed", False):
        return EXIT_FAILED
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        doc = DrawingDocument.from_json(_read(args.drawing))
        graph = parse_graph(_read(args.graph)) if args.graph else None
        result = verify_document(doc, graph, args.oracle)
    except (OSError, PlaneGraphError) as exc:
        return _fail(EXIT_INPUT, "verify", exc)
    sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
    return EXIT_OK if result["passed"] else EXIT_FAILED


def _corpus(args) -> list[tuple[str, PlaneGraph]]:
    directory = args.corpus or os.environ.get(CORPUS_ENV)
    if directory:
        out = []
        for p in sorted(Path(directory).iterdir()):
            if p.suffix in (".txt", ".json", ".graph"):
                out.append((p.name, parse_graph(p.read_text())))
        return out
    out = []
    for kind in args.kinds.split(","):
        for n in (int(s) for s in args.sizes.split(",")):
            out.append((f"{kind}-{n}-{args.seed}", generate(kind, n, args.seed)))
    return out


def scaling_exponents(rows: Sequence[dict]) -> dict[str, float]:
    """Least-squares slope of log(build + draw time) against log(n), per kind."""
    import numpy as np

    by_kind: dict[str, list[tuple[float, float]]] = {}
    for r in rows:
        total = r["build_s"] + r["draw_s"]
        if r["n"] > 1 and total > 0:
            by_kind.setdefault(r["kind"], []).append((math.log(r["n"]), math.log(total)))
    out = {}
    for kind, pts in sorted(by_kind.items()):
        if len({p[0] for p in pts}) >= 2:
            xs, ys = zip(*pts)
            out[kind] = float(np.polyfit(xs, ys, 1)[0])
    return out


def _cmd_stats(args) -> int:
    try:
        corpus = _corpus(args)
    except (OSError, PlaneGraphError) as exc:
        return _fail(EXIT_INPUT, "corpus", exc)
    rows = []
    ok = True
    for name, g in corpus:
        try:
            doc, timing = draw_document(g, None, args.debug_stepwise)
        except (GoodTreeError, LayoutError) as exc:
            rows.append({"name": name, "kind": name.split("-")[0], "n": g.n, "m": g.m, "error": str(exc)})
            ok = False
            continue
        b = doc.bounds
        row = {
            "name": name,
            "kind": name.split("-")[0],
            "n": g.n,
            "m": g.m,
            "z": g.m - g.n + 1,
            "width": b["width"],
            "width_bound": b["width_bound"],
            "y_max": b["y_max"],
            "y_bound": b["y_bound"],
            "within_bounds": b["within"],
            "build_s": timing["build_s"],
            "draw_s": timing["draw_s"],
            "construction": doc.summary["construction"],
        }
        if args.verify:
            row["verified"] = verify_document(doc)["passed"]
            ok = ok and row["verified"]
        ok = ok and row["within_bounds"]
        rows.append(row)
    header = f"{'name':<28} {'n':>6} {'m':>6} {'width':>8} {'w_bound':>8} {'y_max':>12} {'y_bound':>12} {'ok':>3} {'build_s':>8} {'draw_s':>8}"
    lines = [header]
    for r in rows:
        if "error" in r:
            lines.append(f"{r['name']:<28} {r['n']:>6} {r['m']:>6} error: {r['error']}")
            continue
        lines.append(
            f"{r['name']:<28} {r['n']:>6} {r['m']:>6} {r['width']:>8} {r['width_bound']:>8} "
            f"{r['y_max']:>12} {r['y_bound']:>12} {'yes' if r['within_bounds'] else 'no':>3} "
            f"{r['build_s']:>8.3f} {r['draw_s']:>8.3f}"
        )
    scaling = scaling_exponents([r for r in rows if "error" not in r])
    for kind, k in scaling.items():
        lines.append(f"scaling {kind}: time ~ n^{k:.2f}")
    sys.stdout.write("\n".join(lines) + "\n")
    if args.stats_out:
        Path(args.stats_out).write_text(json.dumps({"rows": rows, "scaling": scaling}, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monogrid", description="Monotone grid drawings of planar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a generated graph document")
    gen.add_argument("kind", choices=generators.KINDS)
    gen.add_argument("n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=("text", "json"), default="text")
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_gen)

    draw = sub.add_parser("draw", help="draw a graph document as SVG or JSON")
    draw.add_argument("graph", nargs="?", help="graph document path, '-' for stdin")
    draw.add_argument("--kind", choices=generators.KINDS, help="draw a generated graph instead of a file")
    draw.add_argument("--n", type=int, default=10)
    draw.add_argument("--seed", type=int, default=0)
    draw.add_argument("--root", type=int)
    draw.add_argument("--format", choices=("svg", "json"), default="json")
    draw.add_argument("--labels", action="store_true", help="render vertex labels in SVG output")
    draw.add_argument("--debug-stepwise", action="store_true", help="re-verify after each insertion")
    draw.add_argument("--verify", action="store_true", help="run all checks on the result")
    draw.add_argument("--oracle", action="store_true", help="also run the all-paths oracle")
    draw.add_argument("--timing", action="store_true", help="print stage timings to stderr")
    draw.add_argument("-o", "--output")
    draw.set_defaults(func=_cmd_draw)

    ver = sub.add_parser("verify", help="check a drawing document")
    ver.add_argument("drawing")
    ver.add_argument("--graph", help="graph document whose edges the drawing must match")
    ver.add_argument("--oracle", action="store_true", help=f"brute-force all simple paths (n <= {ORACLE_MAX_N})")
    ver.set_defaults(func=_cmd_verify)

    st = sub.add_parser("stats", help="width, height and runtime table over a corpus")
    st.add_argument("corpus", nargs="?", help=f"directory of graph documents (default: ${CORPUS_ENV})")
    st.add_argument("--kinds", default="tree,cycle,wheel,maximal_planar")
    st.add_argument("--sizes", default="100,1000,10000")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--verify", action="store_true")
    st.add_argument("--debug-stepwise", action="store_true")
    st.add_argument("--stats-out", help="write rows and fitted scaling exponents as JSON")
    st.set_defaults(func=_cmd_stats)
    return p


def run_pipeline(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    return args.func(args)


def main() -> None:
    sys.exit(run_pipeline())
