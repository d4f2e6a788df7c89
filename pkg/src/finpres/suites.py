"""Seeded acceptance suites.

Each suite draws its instances from ``random.Random(seed)`` and re-checks
every answer with an oracle that does not share code with the routine under
test: hereditarily finite sets are re-read as plain nested tuples, triplet
distances are recomputed by shortest paths, orders by closure or cone
inclusion, and so on.  A suite returns a :class:`SuiteResult`; the first
counterexample found is kept as text.
"""

from __future__ import annotations

import heapq
import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import lifts, orders, paths, presentations as pr, relcore, urysohn


class SuiteFailure(AssertionError):
    pass


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    limit: float
    seconds: float = 0.0
    counterexample: Optional[str] = None
    notes: Dict[str, object] = field(default_factory=dict)

    def to_json(self, timings: bool = False) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked,
               "limit_seconds": self.limit, "counterexample": self.counterexample,
               "notes": self.notes}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out

    def line(self, timings: bool = True) -> str:
        verdict = "PASS" if self.passed and self.seconds < self.limit else "FAIL"
        extra = f" counterexample: {self.counterexample}" if self.counterexample else ""
        when = f" in {self.seconds:.2f}s (limit {self.limit:.0f}s)" if timings else ""
        return f"{verdict} {self.name}: {self.checked} checks{when}{extra}"


class _Counter:
    def __init__(self):
        self.n = 0
        self.bad: Optional[str] = None
        self.tally: Dict[str, int] = {}

    def count(self, what: str):
        self.tally[what] = self.tally.get(what, 0) + 1

    def expect(self, ok: bool, what: Callable[[], str]):
        self.n += 1
        if not ok and self.bad is None:
            self.bad = what()


# ======================================================= plain HF set oracle
#
# The oracle keeps its own hash-consed copy of every set: a node is an
# integer and its members are a frozenset of node integers.  Node 0 is the
# atom.  Pairs, membership and purity are then read off these nodes.

HEART = 0
_children: Dict[int, frozenset] = {HEART: frozenset()}
_node_of: Dict[frozenset, int] = {}
_memo: Dict[object, int] = {}


def _node(key: frozenset) -> int:
    n = _node_of.get(key)
    if n is None:
        n = _node_of[key] = len(_children)
        _children[n] = key
    return n


def _tree(M) -> int:
    n = _memo.get(M)
    if n is None:
        n = HEART if M.is_atom else _node(frozenset(_tree(m) for m in M.members))
        _memo[M] = n
    return n


def _has_heart(t) -> bool:
    return t != HEART and HEART in _children[t]


def _split(t):
    ch = _children[t]
    L = {x for x in ch if x != HEART and not _has_heart(x)}
    R = {_node(_children[x] - {HEART}) for x in ch if _has_heart(x)}
    return L, R


def _pure(t) -> bool:
    return t != HEART and all(_pure(x) for x in _children[t])


def _graph_adj(a, b) -> bool:
    return a != b and (a in _children[b] or b in _children[a])


def _digraph_arc(a, b) -> bool:
    return a in _split(b)[0] or b in _split(a)[1]


def _has_clique(members, size, adj) -> bool:
    return any(all(adj(x, y) for x, y in itertools.combinations(c, 2))
               for c in itertools.combinations(members, size))


def _oracle_vertex(kind, t, k=None) -> bool:
    if kind == "rado":
        return _pure(t)
    if kind == "kkfree":
        return _pure(t) and not _has_clique(list(_children[t]), k - 1, _graph_adj)
    if t == HEART or HEART in _children[t]:
        return False
    if kind == "directed":
        return True
    if kind == "oriented":
        L, R = _split(t)
        return not (L & R)
    raise ValueError(kind)


def _tn_vertex(n: int) -> bool:
    L, R = _split(_tree(pr.pair_decode(n)))
    return not (L & R)


def _tn_arc(m: int, n: int) -> bool:
    """Tournament arc read off the decoded pair sets."""
    if m == n:
        return False
    a, b = _tree(pr.pair_decode(m)), _tree(pr.pair_decode(n))
    if _digraph_arc(a, b):
        return True
    return m < n and not _digraph_arc(b, a)


def _split_request(rng, pool, size, parts):
    chosen = rng.sample(pool, size)
    out = [[] for _ in range(parts)]
    for x in chosen:
        out[rng.randrange(parts)].append(x)
    return out


def _extension_graphs(rng, c: _Counter, runs: int):
    rado_pool = [pr.ackermann_decode(n) for n in rng.sample(range(1 << 12), 120)]
    for _ in range(runs):
        J, D = _split_request(rng, rado_pool, rng.randint(0, 6), 2)
        c.count("rado")
        out = pr.presentation_extend("rado", J=J, D=D)
        t = _tree(out)
        c.expect(_oracle_vertex("rado", t), lambda: f"rado: {out!r} is not pure")
        c.expect(all(_graph_adj(t, _tree(x)) for x in J) and not any(_graph_adj(t, _tree(x)) for x in D),
                 lambda: f"rado: wrong adjacencies for J={J!r} D={D!r}")
        if out not in rado_pool:
            rado_pool.append(out)
    for k in (3, 4):
        pool = [M for M in (pr.ackermann_decode(n) for n in range(1 << 10)) if _oracle_vertex("kkfree", _tree(M), k)]
        for _ in range(runs):
            J, D = _split_request(rng, pool, rng.randint(0, min(6, len(pool))), 2)
            c.count(f"K{k}-free")
            out = pr.presentation_extend("kkfree", {"k": k}, J=J, D=D)
            clique = _has_clique([_tree(x) for x in J], k - 1, _graph_adj)
            if out is pr.KKFREE_FAILURE:
                c.expect(clique, lambda: f"K{k}-free: refused J={J!r} without a clique")
                continue
            t = _tree(out)
            c.expect(not clique and _oracle_vertex("kkfree", t, k), lambda: f"K{k}-free: bad vertex {out!r}")
            c.expect(all(_graph_adj(t, _tree(x)) for x in J) and not any(_graph_adj(t, _tree(x)) for x in D),
                     lambda: f"K{k}-free: wrong adjacencies for J={J!r} D={D!r}")
            if out not in pool:
                pool.append(out)


def _extension_digraphs(rng, c: _Counter, runs: int):
    for kind in ("directed", "oriented"):
        pool = [M for M in (pr.pair_decode(n) for n in rng.sample(range(1 << 12), 200))
                if _oracle_vertex(kind, _tree(M))]
        for _ in range(runs):
            minus, plus, zero = _split_request(rng, pool, rng.randint(0, 6), 3)
            both = []
            if kind == "directed":
                both = minus[: len(minus) // 2]
                minus = minus[len(minus) // 2:]
            c.count(kind)
            out = pr.presentation_extend(kind, minus=minus + both, plus=plus + both, zero=zero)
            t = _tree(out)
            want = [(x, (False, True)) for x in minus] + [(x, (True, False)) for x in plus]
            want += [(x, (False, False)) for x in zero] + [(x, (True, True)) for x in both]
            c.expect(_oracle_vertex(kind, t), lambda: f"{kind}: bad vertex {out!r}")
            c.expect(all((_digraph_arc(t, _tree(x)), _digraph_arc(_tree(x), t)) == w for x, w in want),
                     lambda: f"{kind}: wrong arcs for {minus!r}/{plus!r}/{zero!r}")
            if out not in pool:
                pool.append(out)
    pool = [n for n in range(256) if _tn_vertex(n)]
    for _ in range(runs):
        minus, plus = _split_request(rng, pool, rng.randint(0, 6), 2)
        c.count("tournament_N")
        out = pr.presentation_extend("tournament_N", minus=minus, plus=plus)
        c.expect(_tn_vertex(out), lambda: f"T_N: {out} is not a vertex")
        c.expect(all(_tn_arc(x, out) and not _tn_arc(out, x) for x in minus)
                 and all(_tn_arc(out, x) and not _tn_arc(x, out) for x in plus),
                 lambda: f"T_N: wrong arcs for {minus}/{plus}")
        if out < 1 << 12 and out not in pool:
            pool.append(out)


def _poset_closure(elements):
    """Strict order generated by ``A < M`` for A left of M and ``M < B`` for B right of M."""
    trees = {}
    stack = [_tree(M) for M in elements]
    while stack:
        t = stack.pop()
        if t in trees:
            continue
        L, R = _split(t)
        trees[t] = (L, R)
        stack.extend(L | R)
    up = {t: set() for t in trees}
    for t, (L, R) in trees.items():
        for a in L:
            up[a].add(t)
        for b in R:
            up[t].add(b)
    reach = {}
    for t in trees:
        seen, st = set(), list(up[t])
        while st:
            x = st.pop()
            if x not in seen:
                seen.add(x)
                st.extend(up[x])
        reach[t] = seen
    return lambda a, b: _tree(b) in reach[_tree(a)]


def _extension_posets(rng, c: _Counter, runs: int):
    pool = pr.poset_elements_up_to_level(2)
    lt = _poset_closure(pool)
    done = 0
    while done < runs:
        X = rng.sample(pool, min(len(pool), rng.randint(0, 6)))
        low = {x for x in X if any(lt(x, y) or x is y for y in rng.sample(X, len(X) // 2))}
        low = {x for x in X if any(x is y or lt(x, y) for y in low)}
        rest = [x for x in X if x not in low]
        high = {x for x in rest if any(x is y or lt(y, x) for y in rng.sample(rest, len(rest) // 2))}
        high = {x for x in rest if any(x is y or lt(y, x) for y in high)}
        c.count("poset")
        if not all(lt(a, b) for a in low for b in high):
            try:
                pr.poset_extend(low, high, [x for x in X if x not in low and x not in high])
            except pr.ConsistencyError:
                c.expect(True, str)
            else:
                c.expect(False, lambda: f"P: inconsistent request accepted {low!r} {high!r}")
            continue
        zero = [x for x in X if x not in low and x not in high]
        out = pr.poset_extend(low, high, zero)
        lt = _poset_closure(pool + [out])
        c.expect(all(lt(a, out) for a in low) and all(lt(out, b) for b in high)
                 and not any(lt(out, z) or lt(z, out) for z in zero) and all(out is not x for x in X),
                 lambda: f"P: wrong order for {low!r}/{high!r}/{zero!r}")
        if len(pool) < 48 and out not in pool:
            pool.append(out)
        done += 1


# ========================================================== triplet oracle

def _shortest(A, B) -> Fraction:
    """Dijkstra over the listed top-to-lower distances of both triplets."""
    nodes = set(A.down()) | set(B.down())
    adj: Dict[object, List[Tuple[object, Fraction]]] = {v: [] for v in nodes}
    for v in nodes:
        for w, q in v.members:
            adj[v].append((w, q))
            adj[w].append((v, q))
    ids = {v: i for i, v in enumerate(nodes)}
    best = {A: Fraction(0)}
    heap = [(Fraction(0), ids[A], A)]
    while heap:
        d, _, v = heapq.heappop(heap)
        if v is B:
            return d
        if best[v] != d:
            continue
        for w, q in adj[v]:
            if w not in best or d + q < best[w]:
                best[w] = d + q
                heapq.heappush(heap, (d + q, ids[w], w))
    raise SuiteFailure("triplets share no point")


def random_metric_space(rng, n: int, scale: int = 6):
    """Shortest-path closure of random positive rational weights on K_n."""
    pts = list(range(n))
    w = {(i, j): Fraction(rng.randint(1, scale * 4), rng.choice((1, 2, 3, 4))) for i, j in itertools.combinations(pts, 2)}
    d = {(i, i): Fraction(0) for i in pts}
    for (i, j), q in w.items():
        d[(i, j)] = d[(j, i)] = q
    for k in pts:
        for i in pts:
            for j in pts:
                if d[(i, k)] + d[(k, j)] < d[(i, j)]:
                    d[(i, j)] = d[(i, k)] + d[(k, j)]
    return pts, {(i, j): d[(i, j)] for i, j in itertools.combinations(pts, 2)}


def _katetov_request(rng, size: int):
    """A metric space of ``size`` points plus distances to one more point."""
    pts, table = random_metric_space(rng, size + 1)
    new = pts[-1]
    X = urysohn.metric_space(pts[:-1], {k: v for k, v in table.items() if new not in k})
    D = {x: table[(x, new)] for x in pts[:-1]}
    return X, D


def _extension_triplets(rng, c: _Counter, runs: int):
    for _ in range(runs):
        X, D = _katetov_request(rng, rng.randint(1, 6))
        c.count("urysohn")
        img = urysohn.embed_metric(X, rng.sample(list(X.points), len(X.points)))
        req = {img[x]: D[x] for x in X.points}
        out = urysohn.extend(list(req), req)
        c.expect(all(_shortest(out, A) == q for A, q in req.items()),
                 lambda: f"urysohn: extension misses {sorted(map(str, D.values()))}")


def suite_extension(seed: int) -> SuiteResult:
    rng = random.Random(seed)
    c = _Counter()
    _extension_graphs(rng, c, 200)
    _extension_digraphs(rng, c, 200)
    _extension_posets(rng, c, 200)
    _extension_triplets(rng, c, 200)
    return SuiteResult("extension", c.bad is None, c.n, 60, counterexample=c.bad, notes={"requests": c.tally})


# ========================================================== poset embedding

def suite_poset_embedding(seed: int, max_n: int = 6) -> SuiteResult:
    c = _Counter()
    count = 0
    for n in range(1, max_n + 1):
        for rel in orders.enumerate_posets(n):
            count += 1
            le = lambda a, b: a == b or (a, b) in rel
            P = (n, rel)
            W = orders.psi(P)
            V = orders.psi_prime(P)
            c.expect(len(set(W)) == n and len(set(V)) == n, lambda: f"not injective on {sorted(rel)}")
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    c.expect(orders.antichain_leq(W[a - 1], W[b - 1]) == le(a, b),
                             lambda: f"words: {sorted(rel)} at {a},{b}")
                    c.expect(orders.tvset_leq(V[a - 1], V[b - 1]) == le(a, b),
                             lambda: f"vectors: {sorted(rel)} at {a},{b}")
    return SuiteResult("poset-embedding", c.bad is None, c.n, 120, counterexample=c.bad, notes={"posets": count})


# ==================================================== representation orders

def random_antichain(rng, max_len: int, p_stop: float = 0.35, p_empty: float = 0.25) -> frozenset:
    def grow(prefix):
        if len(prefix) == max_len or rng.random() < p_stop:
            return set() if rng.random() < p_empty else {prefix}
        return grow(prefix + "0") | grow(prefix + "1")

    return frozenset(grow(""))


def _refine(rng, A: frozenset, max_len: int) -> frozenset:
    """Something below ``A``: drop words or replace a word by an antichain under it."""
    out = set()
    for w in sorted(A):
        r = rng.random()
        if r < 0.2:
            continue
        if r < 0.55 and len(w) < max_len:
            out |= {w + x for x in random_antichain(rng, max_len - len(w))}
        else:
            out.add(w)
    return frozenset(out)


def _cone(A, max_len: int) -> int:
    """Bitmask of the words of length <= max_len with a prefix in A (heap numbering)."""
    mask = 0
    for w in A:
        start = int("1" + w, 2)
        level = [start]
        while level:
            nxt = []
            for i in level:
                mask |= 1 << i
                if i.bit_length() - 1 < max_len:
                    nxt += [2 * i, 2 * i + 1]
            level = nxt
    return mask


def _grammar_by_rewriting(g: str, h: str) -> bool:
    return g in orders.grammar_rewrites(h, max(len(g), len(h)) + 3)


def suite_representations(seed: int, pairs: int = 2000, max_len: int = 5) -> SuiteResult:
    rng = random.Random(seed)
    c = _Counter()
    comparable = 0
    for i in range(pairs):
        B = random_antichain(rng, max_len)
        A = _refine(rng, B, max_len) if i % 2 else random_antichain(rng, max_len)
        if rng.random() < 0.5:
            A, B = B, A
        ref = _cone(A, max_len) & ~_cone(B, max_len) == 0
        comparable += ref
        word = orders.antichain_leq(A, B)
        IA, IB = orders.to_intervals(A), orders.to_intervals(B)
        got = {
            "words": word,
            "intervals": orders.interval_leq(IA, IB),
            "convex": orders.convex_leq(orders.to_convex(IA), orders.to_convex(IB)),
            "tv": orders.tvset_leq(orders.to_tv(A), orders.to_tv(B)),
            "periodic": orders.periodic_subset(orders.to_periodic_faithful(A), orders.to_periodic_faithful(B)),
            "grammar": orders.grammar_leq(orders.to_grammar(A), orders.to_grammar(B)),
        }
        bad = [k for k, v in got.items() if v != ref]
        if ref and not orders.periodic_subset(orders.to_periodic(A), orders.to_periodic(B)):
            bad.append("plain periodic map is not monotone")
        c.expect(not bad, lambda: f"{sorted(A)} vs {sorted(B)}: {bad}")
    # the rewriting system is exponential; check it on the short words
    small = orders.all_antichains(2)
    for A in small:
        for B in small:
            g, h = orders.to_grammar(A), orders.to_grammar(B)
            c.expect(_grammar_by_rewriting(g, h) == orders.antichain_leq(A, B),
                     lambda: f"rewriting: {g} vs {h}")
    return SuiteResult("representations", c.bad is None, c.n, 120, counterexample=c.bad,
                       notes={"pairs": pairs, "comparable": comparable})


# ====================================================================== gaps

def _cones_between(lo: int, hi: int, max_len: int):
    """Upward-closed node sets C with lo <= C <= hi, lazily, in the heap-numbered tree."""
    size = (1 << (max_len + 1)) - 1

    def sub(i):
        m, level = 0, [i]
        while level:
            nxt = []
            for j in level:
                m |= 1 << j
                if j.bit_length() - 1 < max_len:
                    nxt += [2 * j, 2 * j + 1]
            level = nxt
        return m

    def rec(i):
        s = sub(i)
        if lo >> i & 1:
            yield s
            return
        if hi & s == s:
            yield s
        if i.bit_length() - 1 < max_len:
            for a in rec(2 * i):
                for b in rec(2 * i + 1):
                    yield a | b
        else:
            yield 0

    assert size > 0
    yield from rec(1)


def brute_gap(S, T, max_len: int) -> bool:
    """No upward-closed set strictly between the cones, words one longer allowed."""
    lo, hi = _cone(S, max_len + 1), _cone(T, max_len + 1)
    for C in _cones_between(lo, hi, max_len + 1):
        if C != lo and C != hi:
            return False
    return True


def suite_gaps(seed: int, samples: int = 3000, max_len: int = 4) -> SuiteResult:
    rng = random.Random(seed)
    c = _Counter()
    small = orders.all_antichains(2)
    for S in small:
        for T in small:
            if orders.antichain_lt(S, T):
                c.expect(orders.is_gap_B(S, T) == brute_gap(S, T, 2), lambda: f"{sorted(S)} < {sorted(T)}")
    gaps = 0
    tried = 0
    while tried < samples:
        T = random_antichain(rng, max_len)
        if rng.random() < 0.5 and T:
            w = rng.choice(sorted(T))
            S = (T - {w}) | ({w + "0", w + "1"} if len(w) < max_len else set())
            if rng.random() < 0.3 and len(S) > 1:
                S = _refine(rng, frozenset(S), max_len)
            S = frozenset(S)
        else:
            S = _refine(rng, T, max_len)
        if not orders.antichain_lt(S, T):
            continue
        tried += 1
        g = orders.is_gap_B(S, T)
        gaps += g
        c.expect(g == brute_gap(S, T, max_len), lambda: f"{sorted(S)} < {sorted(T)}")
    return SuiteResult("gaps", c.bad is None, c.n, 60, counterexample=c.bad, notes={"gaps": gaps})


# ===================================================================== paths

def brute_path_hom(p: str, q: str) -> bool:
    """Exhaustive search over vertex maps, extended one vertex at a time."""
    arcs_q = {(i, i + 1) if ch == ">" else (i + 1, i) for i, ch in enumerate(q)}

    def place(i, f):
        if i == len(p) + 1:
            return True
        for y in range(len(q) + 1):
            if i and ((f[-1], y) if p[i - 1] == ">" else (y, f[-1])) not in arcs_q:
                continue
            if place(i + 1, f + [y]):
                return True
        return False

    return place(0, [])


def suite_path_homs(seed: int, max_vertices: int = 8) -> SuiteResult:
    c = _Counter()
    words = [""] + ["".join(w) for n in range(1, max_vertices) for w in itertools.product("<>", repeat=n)]
    for p in words:
        for q in words:
            c.count("brute-force pairs")
            c.expect(paths.path_hom_exists(p, q) == brute_path_hom(p, q), lambda: f"DP vs brute: {p} -> {q}")
    rng = random.Random(seed)
    long_ = [w for w in words if len(w) > 4]
    for _ in range(2000):
        p, q = rng.choice(words), rng.choice(long_)
        c.expect(paths.path_hom_exists(p, q) == relcore.hom_exists(paths.path_structure(p), paths.path_structure(q)),
                 lambda: f"DP vs search: {p} -> {q}")
    sets = [(k, S) for k, S in orders.all_periodic(2)]
    images = {S: paths.pbar(S.signature) for _, S in sets}
    for k, S in sets:
        for k2, S2 in sets:
            c.count("periodic pairs")
            got = paths.path_hom_exists(images[S], images[S2])
            want = orders.periodic_subset(S, S2) and k2 <= k
            c.expect(got == want, lambda: f"images of {S.signature} -> {S2.signature}")
    c.tally["longest path (vertices)"] = max_vertices
    return SuiteResult("path-homs", c.bad is None, c.n, 600, counterexample=c.bad, notes=c.tally)


# ================================================================== urysohn

def _triplet_pool(rng, spaces: int):
    pool = []
    for _ in range(spaces):
        pts, table = random_metric_space(rng, rng.randint(2, 6))
        X = urysohn.metric_space(pts, table)
        pool.extend(urysohn.embed_metric(X, rng.sample(pts, len(pts))).values())
    return pool


def suite_urysohn(seed: int) -> SuiteResult:
    rng = random.Random(seed)
    c = _Counter()
    pool = _triplet_pool(rng, 40)
    for _ in range(40):
        X = rng.sample(pool, rng.randint(1, 4))
        # a fresh point hanging off a random member of the pool
        hub = rng.choice(pool)
        r = Fraction(rng.randint(1, 8), rng.choice((1, 2)))
        D = {A: r + urysohn.triplet_distance(hub, A) for A in X}
        pool.append(urysohn.extend(X, D))
    for _ in range(1000):
        A, B, C = rng.sample(pool, 3)
        c.count("triangles")
        ab, bc, ac = (urysohn.triplet_distance(*p) for p in ((A, B), (B, C), (A, C)))
        c.expect(ac <= ab + bc and ab <= ac + bc and bc <= ab + ac, lambda: f"triangle fails: {ab} {bc} {ac}")
    for _ in range(100):
        pts, table = random_metric_space(rng, rng.randint(1, 6))
        c.count("isometries")
        X = urysohn.metric_space(pts, table)
        img = urysohn.embed_metric(X, rng.sample(pts, len(pts)))
        c.expect(len(set(img.values())) == len(pts)
                 and all(_shortest(img[x], img[y]) == X.d(x, y) for x, y in itertools.combinations(pts, 2)),
                 lambda: f"embedding is not isometric: {sorted(table.items())}")
    for _ in range(100):
        X, D = _katetov_request(rng, rng.randint(1, 6))
        c.count("extensions")
        img = urysohn.embed_metric(X)
        req = {img[x]: D[x] for x in X.points}
        out = urysohn.extend(list(req), req)
        c.expect(all(_shortest(out, A) == q for A, q in req.items()) and out not in req,
                 lambda: f"extension misses {sorted(map(str, D.values()))}")
    return SuiteResult("urysohn", c.bad is None, c.n, 120, counterexample=c.bad, notes=c.tally)


# ==================================================================== lifts

FAMILIES = {"C5": [relcore.cycle(5)], "C3,C5": [relcore.complete(3), relcore.cycle(5)]}


def suite_lift_amalgamation(seed: int, triples: int = 200) -> SuiteResult:
    c = _Counter()
    for name, members in FAMILIES.items():
        F = lifts.Family(members)
        rng = random.Random(seed)
        for _ in range(triples):
            X, Y, Z = lifts.random_lift_triple(F, rng)
            c.count(name)
            V = lifts.lift_amalgam(X, Y, Z, F)
            ok = (lifts.same_lift(V.induced(X.vertices), X) and lifts.same_lift(V.induced(Y.vertices), Y)
                  and lifts.lift_membership(V, F))
            c.expect(ok, lambda: f"{name}: X={X} Y={Y} Z={Z}")
    return SuiteResult("lift-amalgamation", c.bad is None, c.n, 300, counterexample=c.bad, notes={"triples": c.tally})


def transitive_tournament(n: int) -> relcore.RelStructure:
    return relcore.graph(range(n), [(i, j) for i, j in itertools.combinations(range(n), 2)], directed=True)


def brute_dual(members, n: int, max_size: int, pool) -> Optional[relcore.RelStructure]:
    """Smallest digraph on at most ``max_size`` vertices that is a dual up to ``n``."""
    for D in lifts.enumerate_structures((2,), max_size, include_empty=False):
        if lifts.duality_check(members, D, n, pool):
            return D
    return None


def suite_tree_duality(seed: int, n: int = 4) -> SuiteResult:
    c = _Counter()
    pool = lifts.enumerate_structures((2,), n)
    trees = [S for S in lifts.enumerate_structures((2,), n, include_empty=False) if relcore.is_relational_tree(S)]
    for T in trees:
        D = lifts.tree_dual([T])
        c.expect(lifts.duality_check([T], D, n, pool), lambda: f"dual of {sorted(T.relations[0])} fails")
    P3 = relcore.path(3, directed=True)
    found = brute_dual([P3], n, 3, pool)
    TT3 = transitive_tournament(3)
    c.expect(found is not None and relcore.hom_equivalent(found, TT3), lambda: f"brute dual {found}")
    c.expect(relcore.hom_equivalent(lifts.tree_dual([P3]), TT3), lambda: "P3 dual is not TT3")
    return SuiteResult("tree-duality", c.bad is None, c.n, 600, counterexample=c.bad, notes={"trees": len(trees)})


# ================================================================= even-odd

def random_connected_graph(rng, n: int, p: float):
    verts = list(range(n))
    edges = set()
    for v in verts[1:]:
        u = rng.randrange(v)
        edges.add((u, v))
    for u, v in itertools.combinations(verts, 2):
        if rng.random() < p:
            edges.add((u, v))
    return verts, sorted(edges)


def _walk_oracle(verts, edges):
    """Shortest even and odd walks by exploring (vertex, parity) layers to depth 2n."""
    adj = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = {}
    for s in verts:
        reach = {s}
        found = {(s, 0): 0}
        for length in range(1, 2 * len(verts) + 1):
            reach = {w for v in reach for w in adj[v]}
            for t in reach:
                found.setdefault((t, length % 2), length)
        for t in verts:
            out[(s, t)] = (found.get((t, 0)), found.get((t, 1)))
    return out


def _slice_graph_ok(S: urysohn.EvenOddSpace):
    edges = urysohn.forb_cycle_graph(S, 5)
    G = relcore.graph(S.points, edges)
    return not any(relcore.find_embedding(relcore.cycle(k), G, induced=False) for k in (3, 5)), len(edges)


def g5_slice(rng, rounds: int = 30, cap: int = 14) -> urysohn.EvenOddSpace:
    """Grow a space of odd girth above 5 by one-point extensions and free amalgams."""
    verts = list(range(7))
    edges = [(i, (i + 1) % 7) for i in verts]
    S = urysohn.eo_of_graph(verts, edges)
    counter = len(verts)
    for _ in range(rounds):
        if len(S.points) >= cap:
            break
        if rng.random() < 0.7:
            nbrs = rng.sample(list(S.points), rng.randint(1, 3))
            D = {}
            for x in S.points:
                ev = min((S.d(n, x).odd for n in nbrs if S.d(n, x).odd is not urysohn.OMEGA), default=None)
                od = min((S.d(n, x).even for n in nbrs if S.d(n, x).even is not urysohn.OMEGA), default=None)
                D[x] = urysohn.EvenOddPair(urysohn.OMEGA if ev is None else ev + 1, urysohn.OMEGA if od is None else od + 1)
            loops = [S.d(a, b).odd for a in nbrs for b in nbrs if S.d(a, b).odd is not urysohn.OMEGA]
            self_d = urysohn.EvenOddPair(0, min(loops) + 2 if loops else urysohn.OMEGA)
            try:
                T = urysohn.eo_extend(S, counter, D, self_d)
            except urysohn.EvenOddError:
                continue
            counter += 1
        else:
            base = rng.sample(list(S.points), rng.randint(1, 2))
            ren = {x: x if x in base else ("copy", counter, x) for x in S.points}
            counter += 1
            copy = urysohn.EvenOddSpace(tuple(ren[x] for x in S.points),
                                        {(ren[x], ren[y]): p for (x, y), p in S.table.items()})
            T = urysohn.eo_amalgam(S, copy)
            if len(T.points) > cap:
                keep = list(S.points) + [p for p in T.points if p not in set(S.points)][: cap - len(S.points)]
                T = T.restrict(keep)
        if urysohn.in_odd_girth_class(T, 5):
            S = T
    return S


def suite_even_odd(seed: int, graphs: int = 200, slices: int = 12) -> SuiteResult:
    rng = random.Random(seed)
    c = _Counter()
    for _ in range(graphs):
        verts, edges = random_connected_graph(rng, rng.randint(1, 8), rng.choice((0.0, 0.15, 0.3)))
        S = urysohn.eo_of_graph(verts, edges)
        c.count("graphs")
        ref = _walk_oracle(verts, edges)
        same = all((None if S.d(x, y).even is urysohn.OMEGA else S.d(x, y).even,
                    None if S.d(x, y).odd is urysohn.OMEGA else S.d(x, y).odd) == ref[(x, y)]
                   for x in verts for y in verts)
        c.expect(same and urysohn.is_even_odd_space(S), lambda: f"graph {edges}")
    sizes = []
    for _ in range(slices):
        S = g5_slice(rng)
        ok, m = _slice_graph_ok(S)
        sizes.append(len(S.points))
        c.expect(ok and urysohn.is_even_odd_space(S), lambda: f"slice with {len(S.points)} points has a short odd cycle")
    return SuiteResult("even-odd", c.bad is None, c.n, 120, counterexample=c.bad, notes={"graphs": c.tally.get("graphs", 0), "slice sizes": sizes})


# ================================================================== zig-zag

def suite_zigzag(seed: int, steps: int = 10) -> SuiteResult:
    c = _Counter()
    pairs = pr.zigzag_partial_iso(pr.rado_generator(), pr.rado_n_generator(), steps, verify=False)
    trees = [(_tree(a), b) for a, b in pairs]
    for (a1, b1), (a2, b2) in itertools.combinations(trees, 2):
        arith = b1 != b2 and (b1 >> b2 & 1 or b2 >> b1 & 1) == 1
        c.expect(a1 != a2 and _graph_adj(a1, a2) == bool(arith), lambda: f"pair {b1},{b2}")
    c.expect(len(pairs) >= 8, lambda: f"only {len(pairs)} vertices")
    return SuiteResult("zigzag", c.bad is None, c.n, 30, counterexample=c.bad, notes={"vertices": len(pairs)})


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "extension": suite_extension,
    "poset-embedding": suite_poset_embedding,
    "representations": suite_representations,
    "path-homs": suite_path_homs,
    "urysohn": suite_urysohn,
    "lift-amalgamation": suite_lift_amalgamation,
    "tree-duality": suite_tree_duality,
    "gaps": suite_gaps,
    "even-odd": suite_even_odd,
    "zigzag": suite_zigzag,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    try:
        res = SUITES[name](seed)
    except Exception as exc:  # a crash is a failed check, reported with its message
        res = SuiteResult(name, False, 0, 0, counterexample=f"{type(exc).__name__}: {exc}")
        limits = {"extension": 60, "gaps": 60, "zigzag": 30, "path-homs": 600, "lift-amalgamation": 300,
                  "tree-duality": 600}
        res.limit = limits.get(name, 120)
    res.seconds = time.perf_counter() - t0
    if res.seconds >= res.limit:
        res.passed = False
    return res
