"""Complete triplets as points of the rational Urysohn space, and even-odd spaces.

A complete triplet is stored as its greatest element: a finite set of pairs
``(b, q)`` where ``b`` is again such an element and ``q`` a positive rational.
Everything else about the triplet (its points, standard order and distance
table) is recovered from that one value, so two complete triplets are equal
exactly when they are the same interned object.
"""

from __future__ import annotations

import heapq
import itertools
import threading
import weakref
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Rational = Union[int, Fraction, str]


class MetricError(ValueError):
    pass


def as_rational(q: Rational) -> Fraction:
    if isinstance(q, bool) or isinstance(q, float):
        raise MetricError(f"distances must be exact rationals, got {q!r}")
    try:
        return Fraction(q)
    except (TypeError, ValueError) as exc:
        raise MetricError(f"not a rational: {q!r}") from exc


# ------------------------------------------------------------ the points

class CompleteTriplet:
    """The greatest element of a complete triplet, interned by value."""

    __slots__ = ("members", "_down", "_height", "_key", "_hash", "__weakref__")
    _table: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()
    _lock = threading.Lock()

    def __new__(cls, pairs: Iterable[Tuple["CompleteTriplet", Rational]] = ()):
        members: Dict[CompleteTriplet, Fraction] = {}
        for b, q in pairs:
            if not isinstance(b, CompleteTriplet):
                raise MetricError(f"members must be complete triplets, got {b!r}")
            q = as_rational(q)
            if q <= 0:
                raise MetricError("distances to lower elements must be positive")
            if b in members and members[b] != q:
                raise MetricError("an element is listed with two distances")
            members[b] = q
        key = frozenset(members.items())
        with cls._lock:
            found = cls._table.get(key)
            if found is not None:
                return found
            self = object.__new__(cls)
            self.members = key
            self._hash = hash(key)
            down = {self: Fraction(0)}
            down.update(members)
            self._down = down
            self._height = 1 + max((b._height for b in members), default=0)
            self._key = None
            cls._table[key] = self
            return self

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __len__(self):
        return len(self._down)

    @property
    def height(self) -> int:
        return self._height

    def down(self) -> Dict["CompleteTriplet", Fraction]:
        """Every point of the triplet mapped to its distance from the top."""
        return dict(self._down)

    def sort_key(self):
        if self._key is None:
            self._key = (self._height, len(self._down),
                         tuple(sorted((b.sort_key(), q) for b, q in self.members)))
        return self._key

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if not self.members:
            return "CompleteTriplet()"
        inner = ", ".join(f"({b!r}, {q})" for b, q in sorted(self.members, key=lambda t: t[0].sort_key()))
        return f"CompleteTriplet({{{inner}}})"


EMPTY_TRIPLET = CompleteTriplet()


def triplet_distance(A: CompleteTriplet, B: CompleteTriplet) -> Fraction:
    """The metric of the space: cheapest route through a shared lower point."""
    return distance_with_provenance(A, B)[0]


def distance_with_provenance(A: CompleteTriplet, B: CompleteTriplet):
    """``(value, how, via)``.

    ``how`` is ``"equal"``, ``"B mentioned in A"``, ``"A mentioned in B"`` or
    ``"witness"``; ``via`` is the shared lower point realising the minimum.
    """
    if A is B:
        return Fraction(0), "equal", A
    if B in A._down:
        return A._down[B], "B mentioned in A", B
    if A in B._down:
        return B._down[A], "A mentioned in B", A
    da, db = A._down, B._down
    if len(da) > len(db):
        best = min(((da[c] + q, c) for c, q in db.items() if c in da), key=lambda t: (t[0], t[1].sort_key()))
    else:
        best = min(((q + db[c], c) for c, q in da.items() if c in db), key=lambda t: (t[0], t[1].sort_key()))
    return best[0], "witness", best[1]


# ---------------------------------------------------------- plain triplets

@dataclass(frozen=True)
class Triplet:
    """A finite set with a standard order and a rational metric.

    ``order`` lists pairs ``(x, y)`` with ``x`` below ``y``; reflexive pairs
    are implied.  ``dist`` may list each unordered pair once.
    """

    points: Tuple
    order: FrozenSet[Tuple]
    dist: Mapping

    def d(self, x, y) -> Fraction:
        if x == y:
            return Fraction(0)
        if (x, y) in self.dist:
            return as_rational(self.dist[(x, y)])
        return as_rational(self.dist[(y, x)])

    def leq(self, x, y) -> bool:
        return x == y or (x, y) in self.order

    def downset(self, a) -> List:
        return [x for x in self.points if self.leq(x, a)]


def triplet_of(A: CompleteTriplet) -> Triplet:
    """Unpack a complete triplet into an explicit points/order/distance triple."""
    pts = sorted(A._down, key=CompleteTriplet.sort_key)
    order = frozenset((b, a) for a in pts for b in a._down if b is not a)
    dist = {(x, y): triplet_distance(x, y) for x, y in itertools.combinations(pts, 2)}
    return Triplet(tuple(pts), order, dist)


@dataclass
class TripletReport:
    failures: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def add(self, clause: str, detail: str):
        self.failures.append((clause, detail))


def _isomorphic_downsets(T: Triplet, X: Sequence, Y: Sequence) -> bool:
    if len(X) != len(Y):
        return False
    sig = lambda S: sorted(T.d(a, b) for a, b in itertools.combinations(S, 2))
    if sig(X) != sig(Y):
        return False
    for perm in itertools.permutations(Y):
        f = dict(zip(X, perm))
        if all(T.d(a, b) == T.d(f[a], f[b]) and T.leq(a, b) == T.leq(f[a], f[b])
               for a in X for b in X):
            return True
    return False


def triplet_validate(T: Union[Triplet, CompleteTriplet]) -> TripletReport:
    """Check the triplet axioms and list every violated clause.

    Clauses: ``order``, ``metric``, ``greatest``, ``smallest``, ``proper``,
    ``path metric`` and, for complete triplets, ``complete``.
    """
    complete = isinstance(T, CompleteTriplet)
    top = T if complete else None
    if complete:
        rep = _complete_prechecks(T)
        if not rep.ok:
            return rep
        T = triplet_of(T)
    else:
        rep = TripletReport()
    pts = list(T.points)
    if len(set(pts)) != len(pts):
        rep.add("order", "repeated point")
        return rep
    for x, y in T.order:
        if x not in pts or y not in pts:
            rep.add("order", f"pair {(x, y)!r} uses an unknown point")
            return rep
    for x, y in itertools.permutations(pts, 2):
        if T.leq(x, y) and T.leq(y, x):
            rep.add("order", f"{x!r} and {y!r} are below each other")
    for x, y, z in itertools.permutations(pts, 3):
        if T.leq(x, y) and T.leq(y, z) and not T.leq(x, z):
            rep.add("order", f"not transitive at {x!r} <= {y!r} <= {z!r}")
    try:
        for x, y in itertools.combinations(pts, 2):
            if T.d(x, y) <= 0:
                rep.add("metric", f"non-positive distance between {x!r} and {y!r}")
    except KeyError as exc:
        rep.add("metric", f"missing distance {exc}")
        return rep
    for x, y, z in itertools.permutations(pts, 3):
        if T.d(x, z) > T.d(x, y) + T.d(y, z):
            rep.add("metric", f"triangle inequality fails on {x!r}, {y!r}, {z!r}")
    tops = [a for a in pts if all(T.leq(x, a) for x in pts)]
    bottoms = [a for a in pts if all(T.leq(a, x) for x in pts)]
    if not tops:
        rep.add("greatest", "no greatest element")
    if not bottoms:
        rep.add("smallest", "no smallest element")
    downs = {a: T.downset(a) for a in pts}
    for a, b in itertools.combinations(pts, 2):
        if _isomorphic_downsets(T, downs[a], downs[b]):
            rep.add("proper", f"down-sets of {a!r} and {b!r} are isomorphic")
    for a, b in itertools.combinations(pts, 2):
        if T.leq(a, b) or T.leq(b, a):
            continue
        if not any(T.leq(c, a) and T.leq(c, b) and T.d(a, b) == T.d(a, c) + T.d(c, b) for c in pts):
            rep.add("path metric", f"no witness for the distance of {a!r} and {b!r}")
    if complete:
        if bottoms and bottoms[0] is not EMPTY_TRIPLET:
            rep.add("complete", "the smallest element is not the empty set")
        for a in pts:
            want = frozenset((b, T.d(a, b)) for b in downs[a] if b is not a)
            if a.members != want:
                rep.add("complete", f"element of height {a.height} does not list its down-set")
        if tops and tops[0] is not top:
            rep.add("greatest", "top element mismatch")
    return rep


def _complete_prechecks(A: CompleteTriplet) -> TripletReport:
    rep = TripletReport()
    if EMPTY_TRIPLET not in A._down:
        rep.add("smallest", "the empty set is not below the top")
    for b in A._down:
        for c in b._down:
            if c not in A._down:
                rep.add("complete", "down-set is not closed under lower elements")
                return rep
    return rep


def is_complete_triplet(A: CompleteTriplet) -> bool:
    """Fast check for complete triplets: closure, empty bottom, triangle inequality."""
    if not _complete_prechecks(A).ok:
        return False
    pts = list(A._down)
    for b in pts:
        for c in b._down:
            if c not in A._down:
                return False
    dist = {}
    for x, y in itertools.combinations(pts, 2):
        dist[x, y] = dist[y, x] = triplet_distance(x, y)
    for x in pts:
        dist[x, x] = Fraction(0)
    for x, y, z in itertools.combinations(pts, 3):
        a, b, c = dist[x, y], dist[y, z], dist[x, z]
        if a > b + c or b > a + c or c > a + b:
            return False
    # an encoded distance must not beat a route through a shared lower point
    for a in pts:
        for b, q in a.members:
            for c, r in b.members:
                if a._down[c] > q + r:
                    return False
    return True


# ------------------------------------------------------------- embedding

@dataclass(frozen=True)
class RationalMetricSpace:
    points: Tuple
    table: Mapping

    def d(self, x, y) -> Fraction:
        if x == y:
            return Fraction(0)
        return self.table[(x, y)] if (x, y) in self.table else self.table[(y, x)]


def metric_space(points: Iterable, distances: Mapping) -> RationalMetricSpace:
    """Build and validate a finite rational metric space."""
    pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise MetricError("repeated point")
    table = {}
    for x, y in itertools.combinations(pts, 2):
        if (x, y) in distances:
            q = distances[(x, y)]
        elif (y, x) in distances:
            q = distances[(y, x)]
        else:
            raise MetricError(f"missing distance between {x!r} and {y!r}")
        q = as_rational(q)
        if q <= 0:
            raise MetricError(f"distance between distinct points must be positive: {x!r}, {y!r}")
        table[(x, y)] = q
    X = RationalMetricSpace(pts, table)
    for x, y, z in itertools.permutations(pts, 3):
        if X.d(x, z) > X.d(x, y) + X.d(y, z):
            raise MetricError(f"triangle inequality fails on {x!r}, {y!r}, {z!r}")
    return X


def embed_metric(X: RationalMetricSpace, order: Optional[Sequence] = None) -> Dict[object, CompleteTriplet]:
    """Isometric copy of ``X`` inside the space of complete triplets.

    Points are added in ``order`` (default: ``X.points``); each new point
    lists every earlier image with its distance, so later images mention
    earlier ones.
    """
    seq = list(X.points if order is None else order)
    if sorted(map(repr, seq)) != sorted(map(repr, X.points)) or len(seq) != len(X.points):
        raise MetricError("order must enumerate the points exactly once")
    images: Dict[object, CompleteTriplet] = {}
    for i, x in enumerate(seq):
        images[x] = CompleteTriplet((images[y], X.d(y, x)) for y in seq[:i])
    return images


# ------------------------------------------------------------- extension

def katetov_validate(X: Iterable[CompleteTriplet], D: Mapping[CompleteTriplet, Rational]) -> bool:
    """True when ``D`` prescribes a consistent new point at positive distances."""
    X = list(X)
    try:
        vals = {A: as_rational(D[A]) for A in X}
    except (KeyError, MetricError):
        return False
    if any(v <= 0 for v in vals.values()):
        return False
    for A, B in itertools.combinations(X, 2):
        dab = triplet_distance(A, B)
        if abs(vals[A] - vals[B]) > dab or dab > vals[A] + vals[B]:
            return False
    return True


def extend(X: Iterable[CompleteTriplet], D: Mapping[CompleteTriplet, Rational]) -> CompleteTriplet:
    """A new complete triplet at distance ``D[A]`` from every ``A`` in ``X``.

    The new top lists every point below some member of ``X`` at the cheapest
    distance routed through a member of ``X``.
    """
    X = list(dict.fromkeys(X))
    if not X:
        raise MetricError("cannot extend an empty set of points")
    if not katetov_validate(X, D):
        raise MetricError("distances do not define a one-point metric extension")
    vals = {A: as_rational(D[A]) for A in X}
    under = set()
    for A in X:
        under.update(A._down)
    pairs = []
    for b in under:
        pairs.append((b, min(vals[C] + triplet_distance(C, b) for C in X)))
    M = CompleteTriplet(pairs)
    for A in X:
        if triplet_distance(M, A) != vals[A]:
            raise MetricError("extension failed to realise the prescribed distances")
    return M


# ------------------------------------------------------------------ JSON

def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def triplet_to_json(A: CompleteTriplet) -> dict:
    """Hash-consed encoding: nodes listed bottom-up, children referenced by index."""
    nodes = sorted(A._down, key=CompleteTriplet.sort_key)
    ref = {b: i for i, b in enumerate(nodes)}
    body = [[[ref[b], _fmt(q)] for b, q in sorted(n.members, key=lambda t: ref[t[0]])] for n in nodes]
    return {"nodes": body, "root": ref[A]}


def triplet_from_json(obj: dict) -> CompleteTriplet:
    try:
        built: List[CompleteTriplet] = []
        for row in obj["nodes"]:
            pairs = []
            for r, q in row:
                if not 0 <= r < len(built):
                    raise MetricError("node references must point to earlier nodes")
                pairs.append((built[r], q))
            built.append(CompleteTriplet(pairs))
        return built[obj["root"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise MetricError(f"malformed triplet JSON: {exc}") from exc


# ============================================================ even-odd spaces

class EvenOddError(ValueError):
    pass


class _Omega:
    """The unbounded length; absorbs addition."""

    __slots__ = ()

    def __repr__(self):
        return "OMEGA"

    def __reduce__(self):
        return "OMEGA"


OMEGA = _Omega()


def _check_part(x, parity):
    if x is OMEGA:
        return
    if isinstance(x, bool) or not isinstance(x, int) or x < 0 or x % 2 != parity:
        kind = "even" if parity == 0 else "odd"
        raise EvenOddError(f"expected a non-negative {kind} integer or OMEGA, got {x!r}")


@dataclass(frozen=True, order=False)
class EvenOddPair:
    even: Union[int, _Omega]
    odd: Union[int, _Omega]

    def __post_init__(self):
        _check_part(self.even, 0)
        _check_part(self.odd, 1)

    def __add__(self, other: "EvenOddPair") -> "EvenOddPair":
        return eo_add(self, other)

    def __le__(self, other: "EvenOddPair") -> bool:
        return eo_leq(self, other)

    def to_json(self):
        return ["inf" if self.even is OMEGA else self.even, "inf" if self.odd is OMEGA else self.odd]

    @staticmethod
    def from_json(obj) -> "EvenOddPair":
        a, b = obj
        return EvenOddPair(OMEGA if a == "inf" else a, OMEGA if b == "inf" else b)


def _plus(x, y):
    return OMEGA if x is OMEGA or y is OMEGA else x + y


def _min(x, y):
    if x is OMEGA:
        return y
    if y is OMEGA:
        return x
    return min(x, y)


def _le(x, y):
    return y is OMEGA or (x is not OMEGA and x <= y)


def eo_add(p: EvenOddPair, q: EvenOddPair) -> EvenOddPair:
    return EvenOddPair(_min(_plus(p.even, q.even), _plus(p.odd, q.odd)),
                       _min(_plus(p.even, q.odd), _plus(p.odd, q.even)))


def eo_leq(p: EvenOddPair, q: EvenOddPair) -> bool:
    return _le(p.even, q.even) and _le(p.odd, q.odd)


@dataclass(frozen=True)
class EvenOddSpace:
    points: Tuple
    table: Mapping  # (x, y) -> EvenOddPair, both orders and the diagonal

    def d(self, x, y) -> EvenOddPair:
        return self.table[(x, y)]

    def restrict(self, pts: Iterable) -> "EvenOddSpace":
        pts = tuple(pts)
        return EvenOddSpace(pts, {(x, y): self.table[(x, y)] for x in pts for y in pts})


def eo_violations(S: EvenOddSpace) -> List[str]:
    """Every failure of the even-odd distance axioms, as text."""
    out = []
    pts = S.points
    for x in pts:
        for y in pts:
            if (x, y) not in S.table:
                out.append(f"missing distance {x!r}, {y!r}")
    if out:
        return out
    for x, y in itertools.product(pts, repeat=2):
        p = S.d(x, y)
        if (p.even == 0) != (x == y):
            out.append(f"zero even part exactly on the diagonal fails at {x!r}, {y!r}")
        if S.d(y, x) != p:
            out.append(f"asymmetric at {x!r}, {y!r}")
    for x, y, z in itertools.product(pts, repeat=3):
        if not eo_leq(S.d(x, z), eo_add(S.d(x, y), S.d(y, z))):
            out.append(f"triangle inequality fails on {x!r}, {y!r}, {z!r}")
    return out


def is_even_odd_space(S: EvenOddSpace) -> bool:
    return not eo_violations(S)


def eo_of_graph(vertices: Iterable, edges: Iterable[Tuple]) -> EvenOddSpace:
    """Shortest even and odd walks between all pairs of an undirected graph."""
    pts = tuple(vertices)
    adj = {v: set() for v in pts}
    for u, v in edges:
        if u == v:
            raise EvenOddError("loops are not allowed")
        adj[u].add(v)
        adj[v].add(u)
    table = {}
    for s in pts:
        dist = {(s, 0): 0}
        frontier = [(s, 0)]
        while frontier:
            nxt = []
            for v, par in frontier:
                for w in adj[v]:
                    st = (w, 1 - par)
                    if st not in dist:
                        dist[st] = dist[(v, par)] + 1
                        nxt.append(st)
            frontier = nxt
        for t in pts:
            table[(s, t)] = EvenOddPair(dist.get((t, 0), OMEGA), dist.get((t, 1), OMEGA))
    return EvenOddSpace(pts, table)


def _walk_closure(pts: Sequence, links: Mapping) -> Dict[Tuple, EvenOddPair]:
    """Shortest even/odd walks where each known pair is a pair of step lengths.

    ``links`` maps ``(x, y)`` (either order, possibly ``x == y``) to an
    even-odd pair; every finite component is a usable step.
    """
    adj: Dict[object, List[Tuple[object, int]]] = {v: [] for v in pts}
    for (x, y), p in links.items():
        for length in (p.even, p.odd):
            if length is not OMEGA and length > 0:
                adj[x].append((y, length))
                adj[y].append((x, length))
    order = {v: i for i, v in enumerate(pts)}
    table = {}
    for s in pts:
        best = {(s, 0): 0}
        heap = [(0, 0, order[s])]
        while heap:
            dd, par, vi = heapq.heappop(heap)
            v = pts[vi]
            if best.get((v, par), None) != dd:
                continue
            for w, length in adj[v]:
                st = (w, (par + length) % 2)
                nd = dd + length
                if st not in best or nd < best[st]:
                    best[st] = nd
                    heapq.heappush(heap, (nd, st[1], order[w]))
        for t in pts:
            table[(s, t)] = EvenOddPair(best.get((t, 0), OMEGA), best.get((t, 1), OMEGA))
    return table


def eo_amalgam(A: EvenOddSpace, B: EvenOddSpace) -> EvenOddSpace:
    """Glue two spaces along their shared points and close under walks."""
    shared = [x for x in A.points if x in set(B.points)]
    for x in shared:
        for y in shared:
            if A.d(x, y) != B.d(x, y):
                raise EvenOddError(f"the spaces disagree on the shared pair {x!r}, {y!r}")
    pts = tuple(A.points) + tuple(x for x in B.points if x not in set(A.points))
    links = dict(A.table)
    links.update(B.table)
    return EvenOddSpace(pts, _walk_closure(pts, links))


def eo_extend(X: EvenOddSpace, new, D: Mapping, self_distance: EvenOddPair = EvenOddPair(0, OMEGA)) -> EvenOddSpace:
    """Add ``new`` at the prescribed distances; fail if walks would shorten any of them."""
    if new in X.points:
        raise EvenOddError(f"{new!r} is already a point")
    pts = tuple(X.points) + (new,)
    links = dict(X.table)
    links[(new, new)] = self_distance
    for x, p in D.items():
        if (x, x) not in X.table:
            raise EvenOddError(f"unknown point {x!r}")
        links[(new, x)] = p
    out = EvenOddSpace(pts, _walk_closure(pts, links))
    for x, p in D.items():
        if out.d(new, x) != p:
            raise EvenOddError(f"distance to {x!r} is not realisable: walks give {out.d(new, x)}")
    for x, y in itertools.product(X.points, repeat=2):
        if out.d(x, y) != X.d(x, y):
            raise EvenOddError("the new point shortens distances of the old space")
    if out.d(new, new) != self_distance:
        raise EvenOddError(f"self distance is not realisable: walks give {out.d(new, new)}")
    return out


def in_odd_girth_class(S: EvenOddSpace, l: int) -> bool:
    """No pair at even-odd distance ``(a, b)`` with ``a + b <= l``."""
    for p in S.table.values():
        if p.even is not OMEGA and p.odd is not OMEGA and p.even + p.odd <= l:
            return False
    return True


def forb_cycle_graph(S: EvenOddSpace, l: int) -> List[Tuple]:
    """Edges of the graph on ``S``: pairs whose shortest odd walk is a single step."""
    if l < 3 or l % 2 == 0:
        raise EvenOddError("l must be an odd integer >= 3")
    if not in_odd_girth_class(S, l):
        raise EvenOddError(f"space has a pair with even + odd length at most {l}")
    return [(x, y) for x, y in itertools.combinations(S.points, 2) if S.d(x, y).odd == 1]
