"""Hereditarily finite sets over one atom and the presentations built on them.

Sets are interned, so structural equality is identity and hashing is cheap.
The atom ``HEART`` marks the right half of a nested ordered pair:
``hf_pair(L, R) = L ∪ {X ∪ {HEART} : X in R}``.
"""

from __future__ import annotations

import functools
import itertools
import threading
import weakref
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple


class PresentationError(ValueError):
    pass


class ConsistencyError(PresentationError):
    pass


class HFSet:
    """An interned hereditarily finite set, or the atom."""

    __slots__ = ("members", "is_atom", "rank", "_hash", "_sorted", "__weakref__")
    _table: "weakref.WeakValueDictionary" = weakref.WeakValueDictionary()
    _lock = threading.Lock()

    def __new__(cls, members: Iterable["HFSet"] = (), _atom: bool = False):
        if _atom:
            self = object.__new__(cls)
            self.members = frozenset()
            self.is_atom = True
            self.rank = 0
            self._hash = hash(("atom",))
            self._sorted = ()
            return self
        members = frozenset(members)
        for m in members:
            if not isinstance(m, HFSet):
                raise PresentationError(f"members must be HFSet values, got {m!r}")
        with cls._lock:
            found = cls._table.get(members)
            if found is not None:
                return found
            self = object.__new__(cls)
            self.members = members
            self.is_atom = False
            self.rank = 1 + max((m.rank for m in members), default=-1) if members else 0
            self._hash = hash(members)
            self._sorted = None
            cls._table[members] = self
            return self

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(self.sorted_members())

    def __len__(self):
        return len(self.members)

    def sorted_members(self) -> Tuple["HFSet", ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.members, key=_order_key))
        return self._sorted

    def __lt__(self, other):
        return hf_compare(self, other) < 0

    def __repr__(self):
        return hf_to_text(self)

    def __reduce__(self):
        return (hf_from_json, (hf_to_json(self),))


HEART = HFSet(_atom=True)
EMPTY = HFSet()


@functools.lru_cache(maxsize=None)
def _cmp_cached(a: HFSet, b: HFSet) -> int:
    if a is b:
        return 0
    if a.is_atom:
        return -1
    if b.is_atom:
        return 1
    for x, y in zip(a.sorted_members(), b.sorted_members()):
        c = _cmp_cached(x, y)
        if c:
            return c
    return (len(a) > len(b)) - (len(a) < len(b))


def hf_compare(a: HFSet, b: HFSet) -> int:
    """Total order: atom first, then lexicographic on sorted member lists."""
    return _cmp_cached(a, b)


_order_key = functools.cmp_to_key(hf_compare)


def hf(*members: HFSet) -> HFSet:
    return HFSet(members)


def hf_union(*sets: HFSet) -> HFSet:
    out = set()
    for s in sets:
        out |= s.members
    return HFSet(out)


def contains_heart(M: HFSet) -> bool:
    return HEART in M.members


def is_pure(M: HFSet) -> bool:
    """No atom anywhere inside."""
    if M.is_atom:
        return False
    return all(is_pure(m) for m in M.members)


def hf_to_json(M: HFSet):
    if M.is_atom:
        return "♥"
    return [hf_to_json(m) for m in M.sorted_members()]


def hf_from_json(obj) -> HFSet:
    if obj == "♥":
        return HEART
    if not isinstance(obj, list):
        raise PresentationError(f"bad HF set encoding: {obj!r}")
    return HFSet(hf_from_json(x) for x in obj)


def hf_to_text(M: HFSet) -> str:
    if M.is_atom:
        return "♥"
    return "{" + ",".join(hf_to_text(m) for m in M.sorted_members()) + "}"


def nested_singleton(depth: int) -> HFSet:
    x = EMPTY
    for _ in range(depth):
        x = HFSet([x])
    return x


# ------------------------------------------------------------- pairs

def hf_pair(L: Iterable[HFSet], R: Iterable[HFSet]) -> HFSet:
    L, R = list(L), list(R)
    for X in L + R:
        if X.is_atom or contains_heart(X):
            raise PresentationError("pair components may not contain the atom")
    return HFSet(L + [HFSet(set(X.members) | {HEART}) for X in R])


@functools.lru_cache(maxsize=None)
def hf_split(M: HFSet) -> Tuple[FrozenSet[HFSet], FrozenSet[HFSet]]:
    """Left and right parts of a nested pair."""
    if M.is_atom:
        raise PresentationError("the atom is not a pair")
    L = frozenset(A for A in M.members if not A.is_atom and not contains_heart(A))
    R = frozenset(HFSet(A.members - {HEART}) for A in M.members if not A.is_atom and contains_heart(A))
    return L, R


def left(M):
    return hf_split(M)[0]


def right(M):
    return hf_split(M)[1]


def is_pair_value(M: HFSet) -> bool:
    """Built from the empty set by pairing alone."""
    if M.is_atom or contains_heart(M):
        return False
    L, R = hf_split(M)
    return all(is_pair_value(x) for x in L | R)


# ------------------------------------------------------------- codes

def ackermann_encode(M: HFSet) -> int:
    if not is_pure(M):
        raise PresentationError("Ackermann code needs a set without the atom")
    return _ack(M)


@functools.lru_cache(maxsize=None)
def _ack(M):
    return sum(1 << _ack(m) for m in M.members)


def ackermann_decode(n: int) -> HFSet:
    if n < 0:
        raise PresentationError("codes are natural numbers")
    return _ack_dec(n)


@functools.lru_cache(maxsize=None)
def _ack_dec(n):
    return HFSet(_ack_dec(i) for i in range(n.bit_length()) if n >> i & 1)


def pair_encode(M: HFSet) -> int:
    """Bit 2c(A) for A on the left, bit 2c(A)+1 for A on the right."""
    if not is_pair_value(M):
        raise PresentationError("pair code needs a nested pair value")
    return _pcode(M)


@functools.lru_cache(maxsize=None)
def _pcode(M):
    L, R = hf_split(M)
    return sum(1 << (2 * _pcode(A)) for A in L) + sum(1 << (2 * _pcode(A) + 1) for A in R)


@functools.lru_cache(maxsize=None)
def pair_decode(n: int) -> HFSet:
    if n < 0:
        raise PresentationError("codes are natural numbers")
    L = [pair_decode(i // 2) for i in range(0, n.bit_length(), 2) if n >> i & 1]
    R = [pair_decode(i // 2) for i in range(1, n.bit_length(), 2) if n >> i & 1]
    return hf_pair(L, R)


def bit(n: int, i: int) -> bool:
    return bool(n >> i & 1)


# ------------------------------------------------------ vertex tests

KINDS = ("rado", "kkfree", "directed", "oriented", "forb_tournament", "tournament_N", "oriented_N", "rado_N")


def _complete_subset(members: Sequence[HFSet], size: int) -> bool:
    """Some ``size`` members are pairwise membership-comparable."""
    adj = {a: {b for b in members if b is not a and (a in b or b in a)} for a in members}

    def grow(chosen, cands):
        if len(chosen) == size:
            return True
        for i, c in enumerate(cands):
            if grow(chosen + [c], [d for d in cands[i + 1:] if d in adj[c]]):
                return True
        return False

    return grow([], list(members))


def is_directed_arc(M: HFSet, N: HFSet) -> bool:
    return M in left(N) or N in right(M)


def _tournament_parts(T):
    verts, arcs = T
    arcs = set(map(tuple, arcs))
    for u, v in itertools.combinations(verts, 2):
        if ((u, v) in arcs) == ((v, u) in arcs):
            raise PresentationError("forbidden structure must be a tournament")
    return list(verts), arcs


def condition_cv(M: HFSet, T, v) -> bool:
    """True when the members of M cannot represent T minus v around M."""
    verts, arcs = _tournament_parts(T)
    L, R = hf_split(M)
    others = [u for u in verts if u != v]
    pools = [sorted(L if (u, v) in arcs else R, key=_order_key) for u in others]
    inner = [(i, j) for i, a in enumerate(others) for j, b in enumerate(others) if (a, b) in arcs]

    def place(i, chosen):
        if i == len(others):
            return True
        for X in pools[i]:
            ok = True
            for a, b in inner:
                if a == i and b < i and not is_directed_arc(X, chosen[b]):
                    ok = False
                    break
                if b == i and a < i and not is_directed_arc(chosen[a], X):
                    ok = False
                    break
            if ok and place(i + 1, chosen + [X]):
                return True
        return False

    return not place(0, [])


def presentation_vertex(kind: str, M, params: Optional[dict] = None) -> bool:
    params = params or {}
    if kind == "rado":
        return isinstance(M, HFSet) and is_pure(M)
    if kind == "kkfree":
        k = params.get("k")
        if not isinstance(k, int) or k < 3:
            raise PresentationError("kkfree needs an integer k >= 3")
        return isinstance(M, HFSet) and is_pure(M) and not _complete_subset(M.sorted_members(), k - 1)
    if kind == "directed":
        return isinstance(M, HFSet) and not M.is_atom and not contains_heart(M)
    if kind == "oriented":
        if not presentation_vertex("directed", M):
            return False
        L, R = hf_split(M)
        return not (L & R)
    if kind == "forb_tournament":
        T = params.get("T")
        if T is None:
            raise PresentationError("forb_tournament needs the tournament T")
        return presentation_vertex("directed", M) and all(condition_cv(M, T, v) for v in T[0])
    if kind in ("tournament_N", "oriented_N"):
        return isinstance(M, int) and M >= 0 and not (_evens(M) & _odds(M))
    if kind == "rado_N":
        return isinstance(M, int) and M >= 0
    raise PresentationError(f"unknown presentation kind {kind!r}")


def _evens(n):
    return {i // 2 for i in range(0, n.bit_length(), 2) if n >> i & 1}


def _odds(n):
    return {i // 2 for i in range(1, n.bit_length(), 2) if n >> i & 1}


def oriented_arc_N(m: int, n: int) -> bool:
    """Arc m -> n of the arithmetic oriented graph."""
    return bit(n, 2 * m) or bit(m, 2 * n + 1)


def tournament_arc_N(m: int, n: int) -> bool:
    if m == n:
        return False
    if oriented_arc_N(m, n):
        return True
    return m < n and not oriented_arc_N(n, m)


def presentation_edge(kind: str, M, N, params: Optional[dict] = None):
    """Adjacency verdict: a bool for graphs, ``(M->N, N->M)`` for digraphs."""
    for X in (M, N):
        if not presentation_vertex(kind, X, params):
            raise PresentationError(f"{X!r} is not a vertex of {kind}")
    if kind in ("rado", "kkfree"):
        return M is not N and (M in N or N in M)
    if kind == "rado_N":
        return M != N and (bit(N, M) or bit(M, N))
    if kind in ("directed", "oriented", "forb_tournament"):
        return (is_directed_arc(M, N), is_directed_arc(N, M))
    if kind == "oriented_N":
        return (M != N and oriented_arc_N(M, N), M != N and oriented_arc_N(N, M))
    if kind == "tournament_N":
        return (tournament_arc_N(M, N), tournament_arc_N(N, M))
    raise PresentationError(f"unknown presentation kind {kind!r}")


# ------------------------------------------------------------ extension

KKFREE_FAILURE = None


def _fresh(pool: Iterable[HFSet]) -> HFSet:
    """A nested singleton of rank above everything in the pool.

    It is pure and a valid pair value, so it serves every kind.
    """
    top = max((X.rank for X in pool), default=0)
    return nested_singleton(top + 2)


def presentation_extend(kind: str, params: Optional[dict] = None, **sets):
    """A new vertex with exactly the requested adjacencies.

    Graph kinds take ``J`` (neighbours) and ``D`` (non-neighbours).  Digraph
    kinds take ``minus`` (arcs into the new vertex), ``plus`` (arcs out of
    it) and ``zero`` (no arcs); for ``directed`` a vertex may sit in both
    ``minus`` and ``plus``.  For kkfree, returns ``KKFREE_FAILURE`` when J
    already holds a (k-1)-clique.
    """
    params = params or {}
    if kind in ("rado", "kkfree", "rado_N"):
        J, D = list(sets.get("J", ())), list(sets.get("D", ()))
        _disjoint(J, D)
        for X in J + D:
            if not presentation_vertex(kind, X, params):
                raise PresentationError(f"{X!r} is not a vertex of {kind}")
        if kind == "rado_N":
            # one extra bit t outside J and D keeps the code fresh; take the least that works
            base = sum(1 << j for j in set(J))
            t = 0
            while True:
                out = base | (1 << t)
                if t not in J and t not in D and out not in J and out not in D and not any(bit(d, out) for d in D):
                    break
                t += 1
        else:
            if kind == "kkfree" and _complete_subset(sorted(set(J), key=_order_key), params["k"] - 1):
                return KKFREE_FAILURE
            out = HFSet(set(J) | {_fresh(J + D)})
        return _verified(kind, params, out, {X: True for X in J}, {X: False for X in D})
    if kind in ("directed", "oriented", "forb_tournament", "oriented_N", "tournament_N"):
        minus, plus, zero = (list(sets.get(k, ())) for k in ("minus", "plus", "zero"))
        if kind == "directed":
            # arcs both ways are allowed, so only the no-arc set must be apart
            _disjoint(list(dict.fromkeys(minus + plus)), zero)
        else:
            _disjoint(minus, plus, zero)
        for X in minus + plus + zero:
            if not presentation_vertex(kind, X, params):
                raise PresentationError(f"{X!r} is not a vertex of {kind}")
        if kind == "tournament_N" and zero:
            raise PresentationError("a tournament has an arc between every pair")
        if kind in ("oriented_N", "tournament_N"):
            # same recipe as the set version, on codes: one fresh left member t
            base = sum(1 << (2 * m) for m in minus) + sum(1 << (2 * p + 1) for p in plus)
            given = set(minus) | set(plus) | set(zero)
            width = max((x.bit_length() for x in given), default=0)
            t = 0
            while True:
                out = base | (1 << (2 * t))
                if t not in given and out not in given and 2 * out >= width:
                    break
                t += 1
        else:
            out = hf_pair(set(minus) | {_fresh(minus + plus + zero)}, set(plus))
            if kind == "forb_tournament" and not presentation_vertex(kind, out, params):
                raise PresentationError("requested extension would create the forbidden tournament")
        want = {}
        for X in minus:
            want[X] = (False, True)
        for X in plus:
            want[X] = (True, X in want)
        for X in zero:
            want[X] = (False, False)
        return _verified(kind, params, out, want, {})
    raise PresentationError(f"unknown presentation kind {kind!r}")


def _disjoint(*groups):
    seen = set()
    for g in groups:
        for X in g:
            if X in seen:
                raise PresentationError("input sets must be disjoint")
            seen.add(X)


def _verified(kind, params, out, want, want_false):
    if not presentation_vertex(kind, out, params):
        raise PresentationError("extension produced an invalid vertex")  # pragma: no cover
    for X, expected in list(want.items()) + list(want_false.items()):
        if X == out or presentation_edge(kind, out, X, params) != expected:
            raise PresentationError("extension self-check failed")  # pragma: no cover
    return out


# ---------------------------------------------------------- generic poset

@functools.lru_cache(maxsize=None)
def poset_is_element(M: HFSet) -> bool:
    if M.is_atom or contains_heart(M):
        return False
    L, R = hf_split(M)
    if L & R:
        return False
    if not all(poset_is_element(X) for X in L | R):
        return False
    for A in L:
        for B in R:
            if not (({A} | right(A)) & ({B} | left(B))):
                return False
    if not all(left(A) <= L for A in L):
        return False
    return all(right(B) <= R for B in R)


def _need_element(*Ms):
    for M in Ms:
        if not isinstance(M, HFSet) or not poset_is_element(M):
            raise PresentationError(f"{M!r} is not an element of the generic poset")


def poset_witnesses(M: HFSet, N: HFSet) -> List[HFSet]:
    return sorted(({M} | right(M)) & ({N} | left(N)), key=_order_key)


def poset_leq(M: HFSet, N: HFSet) -> Tuple[str, Optional[HFSet]]:
    """``("equal", None)``, ``("less", witness)`` or ``("not", None)``."""
    _need_element(M, N)
    if M is N:
        return "equal", None
    w = poset_witnesses(M, N)
    return ("less", w[0]) if w else ("not", None)


def poset_lt(M, N) -> bool:
    return M is not N and bool(({M} | right(M)) & ({N} | left(N)))


def poset_le(M, N) -> bool:
    return M is N or poset_lt(M, N)


@functools.lru_cache(maxsize=None)
def poset_level(M: HFSet) -> int:
    if M is EMPTY:
        return 0
    L, R = hf_split(M)
    return max(poset_level(B) for B in L | R) + 1


def poset_extend(minus: Iterable[HFSet], plus: Iterable[HFSet], zero: Iterable[HFSet]) -> HFSet:
    """A new element above ``minus``, below ``plus``, incomparable to ``zero``."""
    minus, plus, zero = list(minus), list(plus), list(zero)
    _need_element(*(minus + plus + zero))
    _disjoint(minus, plus, zero)
    for A in minus:
        for B in plus:
            if not poset_lt(A, B):
                raise ConsistencyError("every lower element must lie below every upper element")
        for B in zero:
            if poset_le(B, A):
                raise ConsistencyError("an incomparable element lies below a lower element")
    for A in plus:
        for B in zero:
            if poset_le(A, B):
                raise ConsistencyError("an incomparable element lies above an upper element")
    low = set(minus).union(*(left(B) for B in minus))
    high = set(plus).union(*(right(B) for B in plus))
    A = hf_pair(low, high)
    everything = minus + plus + zero
    below_all = hf_pair([], set(everything).union(*(right(B) for B in everything)))
    out = hf_pair(set(left(A)) | {below_all}, right(A))
    if not poset_is_element(out):
        raise PresentationError("extension produced an invalid element")  # pragma: no cover
    for X in minus:
        if not poset_lt(X, out):
            raise PresentationError("extension self-check failed")  # pragma: no cover
    for X in plus:
        if not poset_lt(out, X):
            raise PresentationError("extension self-check failed")  # pragma: no cover
    for X in zero:
        if X is out or poset_lt(X, out) or poset_lt(out, X):
            raise PresentationError("extension self-check failed")  # pragma: no cover
    return out


@functools.lru_cache(maxsize=None)
def surreal_leq(A: HFSet, B: HFSet) -> bool:
    """Conway comparison restricted to generic-poset elements."""
    if any(surreal_leq(B, l) for l in left(A)):
        return False
    return not any(surreal_leq(r, A) for r in right(B))


def poset_elements_up_to_level(level: int) -> List[HFSet]:
    """All elements of the generic poset with level at most ``level``."""
    elems = [EMPTY]
    for _ in range(level):
        pool = list(elems)
        new = set(pool)
        for bits in itertools.product((0, 1, 2), repeat=len(pool)):
            L = [X for X, b in zip(pool, bits) if b == 1]
            R = [X for X, b in zip(pool, bits) if b == 2]
            M = hf_pair(L, R)
            if poset_is_element(M):
                new.add(M)
        elems = sorted(new, key=_order_key)
    return [M for M in elems if poset_level(M) <= level]


# ------------------------------------------------- finite presentation P_f

@dataclass(frozen=True)
class PosetPresentation:
    P: FrozenSet[HFSet]
    leq: FrozenSet[Tuple[HFSet, HFSet]]


def _closure_edges(P):
    return {(A, B) for B in P for A in left(B) | right(B)} | {(A, A) for A in P}


def _transitive_closure(pairs):
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b is c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def pf_violations(pres: PosetPresentation) -> List[str]:
    P, leq = set(pres.P), set(pres.leq)
    out = []
    for M in P:
        if M.is_atom or contains_heart(M):
            out.append("I.1(a) atom in element")
            continue
        L, R = hf_split(M)
        if not (L | R) <= P:
            out.append("I.1(b) parts outside P")
        if L & R:
            out.append("I.1(c) left and right parts meet")
        if any(not (({A} | right(A)) & ({B} | left(B))) for A in L for B in R):
            out.append("I.2 ordering property")
        if any(not left(A) <= L for A in L):
            out.append("I.3 left completeness")
        if any(not right(B) <= R for B in R):
            out.append("I.4 right completeness")
    if any(a not in P or b not in P for a, b in leq):
        out.append("II.1 relation leaves P")
    elif leq != _transitive_closure(leq) or any((a, b) in leq and (b, a) in leq and a is not b for a, b in leq):
        out.append("II.1 not a partial order")
    pure = {x for x in P if not x.is_atom and not contains_heart(x)}
    if leq != _transitive_closure(_closure_edges(pure)):
        out.append("II.2 not the closure of membership")
    tops = [m for m in P if all((x, m) in leq for x in P)]
    if len(tops) != 1:
        out.append("II.3 no maximum")
    return sorted(set(out))


def pf_validate(pres: PosetPresentation) -> bool:
    return not pf_violations(pres)


def pf_to_pin(pres: PosetPresentation) -> HFSet:
    bad = pf_violations(pres)
    if bad:
        raise PresentationError("invalid presentation: " + "; ".join(bad))
    (top,) = [m for m in pres.P if all((x, m) in pres.leq for x in pres.P)]
    return top


def pin_to_pf(M: HFSet) -> PosetPresentation:
    _need_element(M)
    P = set()
    stack = [M]
    while stack:
        X = stack.pop()
        if X in P:
            continue
        P.add(X)
        stack.extend(left(X) | right(X))
    return PosetPresentation(frozenset(P), frozenset(_transitive_closure(_closure_edges(P))))


def pf_leq(P1: PosetPresentation, P2: PosetPresentation) -> bool:
    return poset_le(pf_to_pin(P1), pf_to_pin(P2))


# ---------------------------------------------------------------- zig-zag

@dataclass
class Generator:
    """A countable structure given by lazy enumeration and one-point extension.

    ``relate(x, y)`` returns a hashable label of the pair; ``extend(req)``
    returns a vertex whose label against each key of ``req`` is the value.
    """

    name: str
    enumerate: Callable[[], Iterator]
    relate: Callable
    extend: Callable[[Dict], object]


def rado_generator() -> Generator:
    def enum():
        n = 0
        while True:
            yield ackermann_decode(n)
            n += 1

    def ext(req):
        J = [x for x, v in req.items() if v]
        D = [x for x, v in req.items() if not v]
        return presentation_extend("rado", J=J, D=D)

    return Generator("rado", enum, lambda x, y: presentation_edge("rado", x, y), ext)


def rado_n_generator() -> Generator:
    def enum():
        n = 0
        while True:
            yield n
            n += 1

    def ext(req):
        J = [x for x, v in req.items() if v]
        D = [x for x, v in req.items() if not v]
        return presentation_extend("rado_N", J=J, D=D)

    return Generator("rado_N", enum, lambda x, y: presentation_edge("rado_N", x, y), ext)


def _poset_label(lt, x, y):
    if x == y:
        return "="
    if lt(x, y):
        return "<"
    if lt(y, x):
        return ">"
    return "|"


def _poset_ext(req, lift=lambda x: x, lower=lambda x: x):
    minus = [lift(x) for x, v in req.items() if v == "<"]
    plus = [lift(x) for x, v in req.items() if v == ">"]
    zero = [lift(x) for x, v in req.items() if v == "|"]
    return lower(poset_extend(minus, plus, zero))


def poset_generator() -> Generator:
    def enum():
        n = 0
        while True:
            M = pair_decode(n)
            if poset_is_element(M):
                yield M
            n += 1

    return Generator("poset", enum, lambda x, y: _poset_label(poset_lt, x, y), _poset_ext)


def pf_generator() -> Generator:
    def enum():
        for M in poset_generator().enumerate():
            yield pin_to_pf(M)

    def lt(a, b):
        return poset_lt(pf_to_pin(a), pf_to_pin(b))

    return Generator("pf", enum, lambda x, y: _poset_label(lt, x, y),
                     lambda req: _poset_ext(req, pf_to_pin, pin_to_pf))


def zigzag_partial_iso(genA: Generator, genB: Generator, steps: int, verify: bool = True) -> List[Tuple[object, object]]:
    """Alternate forth and back steps; return the pairs of the partial map."""
    pairs: List[Tuple[object, object]] = []
    itA, itB = genA.enumerate(), genB.enumerate()
    for step in range(steps):
        forth = step % 2 == 0
        src, dst, it = (genA, genB, itA) if forth else (genB, genA, itB)
        dom = {a for a, _ in pairs} if forth else {b for _, b in pairs}
        x = next(v for v in it if v not in dom)
        req = {}
        for a, b in pairs:
            s, t = (a, b) if forth else (b, a)
            # the label of (new, s) must be reproduced by (image, t)
            req[t] = src.relate(s, x)
        y = dst.extend(req)
        pairs.append((x, y) if forth else (y, x))
    if verify:
        for (a1, b1), (a2, b2) in itertools.combinations(pairs, 2):
            if genA.relate(a1, a2) != genB.relate(b1, b2) or a1 == a2 or b1 == b2:
                raise PresentationError("zig-zag produced a map that is not a partial isomorphism")
    return pairs
