"""Command-line front end.

Structures travel as JSON documents::

    {"signature": [2],
     "vertices": ["a", "b"],
     "relations": {"0": [["a", "b"]]},
     "lift": {"arities": [1], "relations": {"0": [["a"]]}}}

``lift`` is optional.  Exit codes: 0 ok, 1 negative answer, 2 usage or
input error, 3 internal assertion.
"""

from __future__ import annotations

import itertools
import json
import random
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import click

from . import lifts, orders, paths, presentations as pr, relcore, suites, urysohn
from .relcore import RelStructure

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(click.ClickException):
    exit_code = EXIT_USAGE


class Negative(Exception):
    """A well-formed query whose answer is no."""

    def __init__(self, message: str, payload=None):
        super().__init__(message)
        self.payload = payload


# ------------------------------------------------------------ documents

def _load_json(text: str, where: str = "input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _relations_field(obj, arities, verts, where):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: must be an object mapping relation index to tuple lists")
    rels = [set() for _ in arities]
    for key, tuples in obj.items():
        try:
            i = int(key)
        except ValueError:
            raise InputError(f"{where}.{key}: relation index must be an integer")
        if not 0 <= i < len(arities):
            raise InputError(f"{where}.{key}: no relation with this index")
        if not isinstance(tuples, list):
            raise InputError(f"{where}.{key}: must be a list of tuples")
        for j, t in enumerate(tuples):
            if not isinstance(t, list) or len(t) != arities[i]:
                raise InputError(f"{where}.{key}[{j}]: expected a list of {arities[i]} vertex names")
            for x in t:
                if x not in verts:
                    raise InputError(f"{where}.{key}[{j}]: unknown vertex {x!r}")
            rels[i].add(tuple(t))
    return tuple(frozenset(r) for r in rels)


def _arities_field(obj, where):
    if not isinstance(obj, list) or not obj or not all(isinstance(a, int) and not isinstance(a, bool) and a >= 1 for a in obj):
        raise InputError(f"{where}: must be a non-empty list of positive integers")
    return tuple(obj)


def parse_document(text: str, where: str = "input") -> Tuple[RelStructure, Optional[lifts.Lift]]:
    doc = _load_json(text, where)
    if not isinstance(doc, dict):
        raise InputError(f"{where}: top level must be an object")
    for key in doc:
        if key not in ("signature", "vertices", "relations", "lift"):
            raise InputError(f"{where}.{key}: unknown field")
    for key in ("signature", "vertices", "relations"):
        if key not in doc:
            raise InputError(f"{where}: missing field {key!r}")
    arities = _arities_field(doc["signature"], f"{where}.signature")
    verts = doc["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise InputError(f"{where}.vertices: must be a list of strings")
    if len(set(verts)) != len(verts):
        raise InputError(f"{where}.vertices: names must be distinct")
    vs = set(verts)
    A = RelStructure(arities, tuple(verts), _relations_field(doc["relations"], arities, vs, f"{where}.relations"))
    X = None
    if "lift" in doc:
        block = doc["lift"]
        if not isinstance(block, dict) or set(block) - {"arities", "relations"}:
            raise InputError(f"{where}.lift: expected fields 'arities' and 'relations'")
        ext_ar = _arities_field(block.get("arities"), f"{where}.lift.arities")
        ext = _relations_field(block.get("relations", {}), ext_ar, vs, f"{where}.lift.relations")
        X = lifts.Lift(A, ext)
    return A, X


def parse_structure(text: str, where: str = "input") -> RelStructure:
    return parse_document(text, where)[0]


def _name(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    return json.dumps(v, default=str, ensure_ascii=False)


def _rel_json(rels, names):
    out = {}
    for i, rel in enumerate(rels):
        if rel:
            out[str(i)] = sorted([names[x] for x in t] for t in rel)
    return out


def structure_document(A: RelStructure, X: Optional[lifts.Lift] = None, ext_arities: Optional[Sequence[int]] = None) -> dict:
    names = {v: _name(v) for v in A.vertices}
    if len(set(names.values())) != len(names):
        names = {v: repr(v) for v in A.vertices}
    doc = {"signature": list(A.arities), "vertices": [names[v] for v in A.vertices],
           "relations": _rel_json(A.relations, names)}
    if X is not None:
        ar = list(ext_arities) if ext_arities is not None else [lifts._arity_of(r, 1) for r in X.extended]
        doc["lift"] = {"arities": ar, "relations": _rel_json(X.extended, names)}
    return doc


def emit_structure(A: RelStructure, X: Optional[lifts.Lift] = None, ext_arities=None) -> str:
    return json.dumps(structure_document(A, X, ext_arities), ensure_ascii=False)


def export_dot(A: RelStructure, name: str = "G") -> str:
    """The Gaifman graph, each edge labelled with the relations that join its ends."""
    names = structure_document(A)["vertices"]
    label = dict(zip(A.vertices, names))
    order = {v: i for i, v in enumerate(A.vertices)}
    edges: Dict[Tuple, set] = {}
    for i, t in A.tuples():
        for x, y in itertools.combinations(sorted(set(t), key=order.get), 2):
            edges.setdefault((x, y), set()).add(i)
    lines = [f"graph {name} {{"]
    for v in A.vertices:
        lines.append(f"  {json.dumps(label[v], ensure_ascii=False)};")
    for (x, y), rels in sorted(edges.items(), key=lambda e: (order[e[0][0]], order[e[0][1]])):
        lab = ",".join(f"R{i}" for i in sorted(rels))
        lines.append(f"  {json.dumps(label[x], ensure_ascii=False)} -- {json.dumps(label[y], ensure_ascii=False)} [label=\"{lab}\"];")
    lines.append("}")
    return "\n".join(lines)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}")


def _structure_file(path: str) -> RelStructure:
    return parse_structure(_read(path), path)


def _family(paths_: Sequence[str]) -> lifts.Family:
    if not paths_:
        raise InputError("give at least one member structure")
    members = [_structure_file(p) for p in paths_]
    try:
        return lifts.Family(members)
    except lifts.LiftError as exc:
        raise InputError(str(exc))


# ---------------------------------------------------------------- output

def _emit(obj, fmt: str, text: Optional[str] = None, dot: Optional[str] = None):
    if fmt == "json":
        click.echo(json.dumps(obj, ensure_ascii=False, indent=2))
    elif fmt == "dot":
        if dot is None:
            raise InputError("this command has no DOT output")
        click.echo(dot)
    else:
        click.echo(text if text is not None else json.dumps(obj, ensure_ascii=False))


def _format_option(f):
    return click.option("--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="json",
                        show_default=True, help="Output format.")(f)


def _seed_option(f):
    return click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=0, show_default=True,
                        help="Seed for every random choice.")(f)


# ------------------------------------------------------------- commands

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Finite presentations of universal structures, with exact checks."""


GRAPH_KINDS = ("rado", "kkfree", "rado_N")
DIGRAPH_KINDS = ("directed", "oriented", "oriented_N", "tournament_N")
PRESENT_KINDS = GRAPH_KINDS + DIGRAPH_KINDS + ("poset",)


def _vertex_stream(kind: str, k: int):
    if kind == "poset":
        yield from pr.poset_generator().enumerate()
        return
    params = {"k": k} if kind == "kkfree" else None
    n = 0
    while True:
        if kind.endswith("_N"):
            M = n
        elif kind in GRAPH_KINDS:
            M = pr.ackermann_decode(n)
        else:
            M = pr.pair_decode(n)
        if pr.presentation_vertex(kind, M, params):
            yield M
        n += 1


def _vertex_label(M) -> str:
    return str(M) if isinstance(M, int) else pr.hf_to_text(M)


def _vertex_json(M):
    return M if isinstance(M, int) else pr.hf_to_json(M)


def _vertex_from_json(kind: str, obj, where: str):
    if kind.endswith("_N"):
        if not isinstance(obj, int) or isinstance(obj, bool) or obj < 0:
            raise InputError(f"{where}: vertices of {kind} are natural numbers")
        return obj
    try:
        return pr.hf_from_json(obj)
    except pr.PresentationError as exc:
        raise InputError(f"{where}: {exc}")


@cli.command()
@click.argument("kind", type=click.Choice(PRESENT_KINDS))
@click.option("--bound", type=click.IntRange(1, 400), default=8, show_default=True, help="Number of vertices.")
@click.option("--k", "k", type=click.IntRange(3, 8), default=3, show_default=True, help="Clique size for kkfree.")
@click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=None,
              help="Take a random sample of the first 4*bound vertices instead of the first bound.")
@_format_option
def present(kind, bound, k, seed, fmt):
    """Sample a finite induced slice of a named presentation."""
    stream = _vertex_stream(kind, k)
    if seed is None:
        verts = list(itertools.islice(stream, bound))
    else:
        pool = list(itertools.islice(stream, 4 * bound))
        verts = random.Random(seed).sample(pool, bound)
    params = {"k": k} if kind == "kkfree" else None
    names = [_vertex_label(M) for M in verts]
    rel = set()
    for (a, M), (b, N) in itertools.permutations(list(zip(names, verts)), 2):
        if kind == "poset":
            if pr.poset_lt(M, N):
                rel.add((a, b))
        elif kind in GRAPH_KINDS:
            if pr.presentation_edge(kind, M, N, params):
                rel.add((a, b))
        elif pr.presentation_edge(kind, M, N, params)[0]:
            rel.add((a, b))
    A = RelStructure((2,), tuple(names), (frozenset(rel),))
    doc = structure_document(A)
    _emit(doc, fmt, text=f"{kind}: {len(names)} vertices, {len(rel)} arcs\n" + "\n".join(names), dot=export_dot(A))


@cli.command()
@click.argument("kind", type=click.Choice(PRESENT_KINDS))
@click.argument("request", type=click.Path(dir_okay=False))
@click.option("--k", "k", type=click.IntRange(3, 8), default=3, show_default=True, help="Clique size for kkfree.")
@_format_option
def extend(kind, request, k, fmt):
    """Realise a one-vertex extension request.

    Graph kinds read {"J": [...], "D": [...]}; digraph kinds and poset read
    {"minus": [...], "plus": [...], "zero": [...]}.  Vertices are HF sets as
    nested lists (the atom is "♥") or integers for the arithmetic kinds.
    """
    req = _load_json(_read(request), request)
    if not isinstance(req, dict):
        raise InputError(f"{request}: top level must be an object")
    keys = ("J", "D") if kind in GRAPH_KINDS else ("minus", "plus", "zero")
    for key in req:
        if key not in keys:
            raise InputError(f"{request}.{key}: unknown field for {kind}")
    sets = {}
    for key in keys:
        vals = req.get(key, [])
        if not isinstance(vals, list):
            raise InputError(f"{request}.{key}: must be a list")
        sets[key] = [_vertex_from_json(kind, v, f"{request}.{key}[{i}]") for i, v in enumerate(vals)]
    try:
        if kind == "poset":
            out = pr.poset_extend(sets["minus"], sets["plus"], sets["zero"])
        else:
            out = pr.presentation_extend(kind, {"k": k} if kind == "kkfree" else None, **sets)
    except pr.ConsistencyError as exc:
        raise Negative(f"no extension: {exc}")
    except pr.PresentationError as exc:
        raise InputError(str(exc))
    if out is pr.KKFREE_FAILURE:
        raise Negative(f"no extension: J contains a clique of size {k - 1}")
    _emit({"vertex": _vertex_json(out), "text": _vertex_label(out)}, fmt, text=_vertex_label(out))


REPS = ("words", "intervals", "convex", "tv", "periodic", "grammar", "paths")


def _poset_from_structure(A: RelStructure, where: str):
    if A.arities != (2,):
        raise InputError(f"{where}: a poset document has exactly one binary relation")
    idx = {v: i + 1 for i, v in enumerate(A.vertices)}
    pairs = {(idx[x], idx[y]) for x, y in A.relations[0] if x != y}
    # accept a covering relation and close it
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(closed), repeat=2):
            if b == c and (a, d) not in closed:
                closed.add((a, d))
                changed = True
    if any((b, a) in closed for a, b in closed):
        raise InputError(f"{where}: the relation has a cycle, so it is not a partial order")
    return len(A.vertices), frozenset(closed)


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _represent(rep: str, n: int, rel):
    """Images of the vertices and the order used to compare them."""
    W = orders.psi((n, rel))
    if rep == "words":
        return [sorted(A) for A in W], orders.antichain_leq, W
    if rep == "intervals":
        I = [orders.to_intervals(A) for A in W]
        return [sorted([_frac(a), _frac(b)] for a, b in x) for x in I], orders.interval_leq, I
    if rep == "convex":
        C = [orders.to_convex(orders.to_intervals(A)) for A in W]
        return [sorted([_frac(a), _frac(b)] for a, b in x) for x in C], orders.convex_leq, C
    if rep == "tv":
        V = orders.psi_prime((n, rel))
        return [sorted(list(v) for v in x) for x in V], orders.tvset_leq, V
    if rep == "grammar":
        G = [orders.to_grammar(A) for A in W]
        return G, orders.grammar_leq, G
    S = [orders.to_periodic_faithful(A) for A in W]
    if rep == "periodic":
        return [s.to_json() for s in S], orders.periodic_subset, S
    P = [paths.embed_periodic_to_path(s) for s in S]
    return P, paths.path_hom_exists, P


@cli.command("embed-poset")
@click.argument("poset", type=click.Path(dir_okay=False))
@click.option("--rep", type=click.Choice(REPS), default="words", show_default=True, help="Target representation.")
@_format_option
def embed_poset(poset, rep, fmt):
    """Embed a finite poset (one binary relation, vertices in insertion order)."""
    A = _structure_file(poset)
    n, rel = _poset_from_structure(A, poset)
    shown, leq, imgs = _represent(rep, n, rel)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            want = a == b or (a, b) in rel
            if bool(leq(imgs[a - 1], imgs[b - 1])) != want:
                raise AssertionError(f"{rep} images disagree with the order at {A.vertices[a - 1]}, {A.vertices[b - 1]}")
    out = {"representation": rep, "images": dict(zip(A.vertices, shown))}
    text = "\n".join(f"{v}: {json.dumps(s, ensure_ascii=False)}" for v, s in zip(A.vertices, shown))
    _emit(out, fmt, text=text)


@cli.command()
@click.argument("source", type=click.Path(dir_okay=False))
@click.argument("target", type=click.Path(dir_okay=False))
@click.option("--injective", is_flag=True, help="Require distinct images.")
@click.option("--induced", is_flag=True, help="Require non-tuples to map to non-tuples.")
@_format_option
def hom(source, target, injective, induced, fmt):
    """Decide whether SOURCE maps homomorphically to TARGET."""
    A, B = _structure_file(source), _structure_file(target)
    if A.arities != B.arities:
        raise InputError("the two structures have different signatures")
    found = relcore.all_homomorphisms(A, B, limit=1, injective=injective, induced=induced)
    if not found:
        raise Negative("no homomorphism")
    f = found[0]
    _emit({"homomorphism": {v: f[v] for v in A.vertices}}, fmt,
          text="\n".join(f"{v} -> {f[v]}" for v in A.vertices))


@cli.command()
@click.argument("members", nargs=-1, type=click.Path(dir_okay=False))
@_format_option
def pieces(members, fmt):
    """List the pieces of a family, one per extended relation."""
    F = _family(members)
    out = []
    for P in F.pieces:
        doc = structure_document(P.structure)
        doc_names = dict(zip(P.structure.vertices, doc["vertices"]))
        out.append({"roots": [doc_names[r] for r in P.roots], "structure": doc})
    text = "\n".join(f"piece {i}: arity {len(p['roots'])}, roots {p['roots']}, {len(p['structure']['vertices'])} vertices"
                     for i, p in enumerate(out)) or "no pieces"
    dot = "\n".join(export_dot(P.structure, f"piece{i}") for i, P in enumerate(F.pieces))
    _emit({"pieces": out}, fmt, text=text, dot=dot or None)


@cli.command()
@click.argument("structure", type=click.Path(dir_okay=False))
@click.argument("members", nargs=-1, type=click.Path(dir_okay=False))
@_format_option
def lift(structure, members, fmt):
    """Canonical lift of STRUCTURE for the family given by MEMBERS.

    If STRUCTURE already carries a lift block, report whether that lift is
    in the lifted class instead (exit 1 when it is not).
    """
    A, X = parse_document(_read(structure), structure)
    F = _family(members)
    if A.arities != F.arities:
        raise InputError("structure and family have different signatures")
    if X is not None:
        if len(X.extended) != len(F.pieces):
            raise InputError(f"lift block has {len(X.extended)} relations, the family has {len(F.pieces)} pieces")
        ok, why = lifts.lift_membership(X, F, explain=True)
        if not ok:
            raise Negative(f"not in the lifted class: {why}")
        _emit({"member": True}, fmt, text="member of the lifted class")
        return
    L = lifts.canonical_lift(A, F)
    _emit(structure_document(A, L, F.piece_arities), fmt,
          text=f"{L.num_extended()} extended tuples", dot=export_dot(lifts._typed_lift_structure(L, F)))


@cli.command()
@click.argument("members", nargs=-1, type=click.Path(dir_okay=False))
@_format_option
def dual(members, fmt):
    """Dual of a family of relational trees."""
    F = _family(members)
    try:
        D = lifts.tree_dual(F)
    except lifts.LiftError as exc:
        raise InputError(str(exc))
    _emit(structure_document(D), fmt, text=f"dual with {len(D)} vertices and {D.num_tuples()} tuples",
          dot=export_dot(D))


@cli.command("duality-check")
@click.argument("dual_file", metavar="DUAL", type=click.Path(dir_okay=False))
@click.argument("members", nargs=-1, type=click.Path(dir_okay=False))
@click.option("--bound", type=click.IntRange(0, 5), default=3, show_default=True,
              help="Check every structure with at most this many vertices.")
@_format_option
def duality_check(dual_file, members, bound, fmt):
    """Check exhaustively that DUAL is a dual of the family MEMBERS."""
    D = _structure_file(dual_file)
    F = _family(members)
    if D.arities != F.arities:
        raise InputError("dual and family have different signatures")
    bad = lifts.duality_counterexample(F, D, bound)
    if bad is not None:
        raise Negative("duality fails", structure_document(bad))
    _emit({"dual": True, "bound": bound}, fmt, text=f"duality holds up to {bound} vertices")


# -------------------------------------------------------------- urysohn

def _rational(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"{where}: distances are integers or 'p/q' strings")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{where}: not a rational number: {x!r}")


def _metric_from_json(obj, where):
    if not isinstance(obj, dict) or "points" not in obj or "distances" not in obj:
        raise InputError(f"{where}: expected fields 'points' and 'distances'")
    pts = obj["points"]
    if not isinstance(pts, list) or not all(isinstance(p, str) for p in pts):
        raise InputError(f"{where}.points: must be a list of strings")
    table = {}
    for i, row in enumerate(obj["distances"]):
        if not isinstance(row, list) or len(row) != 3:
            raise InputError(f"{where}.distances[{i}]: expected [x, y, distance]")
        table[(row[0], row[1])] = _rational(row[2], f"{where}.distances[{i}]")
    try:
        return urysohn.metric_space(pts, table)
    except urysohn.MetricError as exc:
        raise InputError(f"{where}: {exc}")


def _triplet(obj, where):
    try:
        return urysohn.triplet_from_json(obj)
    except urysohn.MetricError as exc:
        raise InputError(f"{where}: {exc}")


@cli.group("urysohn")
def urysohn_group():
    """Complete triplets: embed metric spaces, extend, measure."""


@urysohn_group.command("embed")
@click.argument("space", type=click.Path(dir_okay=False))
@_format_option
def urysohn_embed(space, fmt):
    """Isometric images of a rational metric space {"points", "distances"}."""
    X = _metric_from_json(_load_json(_read(space), space), space)
    img = urysohn.embed_metric(X)
    for x, y in itertools.combinations(X.points, 2):
        if urysohn.triplet_distance(img[x], img[y]) != X.d(x, y):
            raise AssertionError(f"embedding is not isometric at {x}, {y}")
    _emit({"images": {x: urysohn.triplet_to_json(img[x]) for x in X.points}}, fmt,
          text="\n".join(f"{x}: {img[x]!r}" for x in X.points))


@urysohn_group.command("extend")
@click.argument("request", type=click.Path(dir_okay=False))
@_format_option
def urysohn_extend(request, fmt):
    """A new point: {"points": [triplet, ...], "distances": [q, ...]}."""
    req = _load_json(_read(request), request)
    if not isinstance(req, dict) or not isinstance(req.get("points"), list) or not isinstance(req.get("distances"), list):
        raise InputError(f"{request}: expected lists 'points' and 'distances'")
    if len(req["points"]) != len(req["distances"]):
        raise InputError(f"{request}: one distance per point expected")
    pts = [_triplet(p, f"{request}.points[{i}]") for i, p in enumerate(req["points"])]
    D = {}
    for i, (A, q) in enumerate(zip(pts, req["distances"])):
        D[A] = _rational(q, f"{request}.distances[{i}]")
    if not urysohn.katetov_validate(pts, D):
        raise Negative("the distances are not a one-point metric extension")
    M = urysohn.extend(pts, D)
    _emit({"point": urysohn.triplet_to_json(M)}, fmt, text=repr(M))


@urysohn_group.command("distance")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
@_format_option
def urysohn_distance(first, second, fmt):
    """Distance between two triplets, with how it was found."""
    A = _triplet(_load_json(_read(first), first), first)
    B = _triplet(_load_json(_read(second), second), second)
    value, how, via = urysohn.distance_with_provenance(A, B)
    _emit({"distance": _frac(value), "how": how, "via": urysohn.triplet_to_json(via)}, fmt,
          text=f"{_frac(value)} ({how})")


# ---------------------------------------------------------------- check

@cli.command()
@click.option("--suite", default="all", show_default=True,
              help="Suite name or 'all': " + ", ".join(suites.SUITES) + ".")
@_seed_option
@click.option("--timings", is_flag=True, help="Include wall-clock times (output then varies between runs).")
@_format_option
def check(suite, seed, timings, fmt):
    """Run acceptance suites; exit 1 if any fails."""
    names = list(suites.SUITES) if suite == "all" else [suite]
    for n in names:
        if n not in suites.SUITES:
            raise InputError(f"unknown suite {n!r}")
    results = [suites.run_suite(n, seed) for n in names]
    report = {"seed": seed, "passed": all(r.passed for r in results),
              "suites": [r.to_json(timings) for r in results]}
    text = "\n".join(r.line(timings) for r in results)
    _emit(report, fmt, text=text)
    if not report["passed"]:
        raise Negative("some suites failed")


# ----------------------------------------------------------------- main

def main(argv: Optional[List[str]] = None) -> int:
    try:
        cli.main(args=argv, prog_name="finpres", standalone_mode=False)
    except click.exceptions.Abort:
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE if exc.exit_code != 0 else EXIT_OK
    except Negative as exc:
        if exc.payload is not None:
            click.echo(json.dumps({"answer": str(exc), "witness": exc.payload}, ensure_ascii=False, indent=2))
        else:
            click.echo(str(exc))
        return EXIT_NEGATIVE
    except (AssertionError, suites.SuiteFailure) as exc:
        click.echo(f"internal assertion failed: {exc}", err=True)
        return EXIT_INTERNAL
    except (relcore.StructureError, lifts.LiftError, urysohn.MetricError, orders.OrderError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    return EXIT_OK


def run_command(argv: Sequence[str]) -> int:
    return main(list(argv))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
