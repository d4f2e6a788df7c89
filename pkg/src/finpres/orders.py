"""Prefix-free word sets as a universal partial order, and exact translations.

A word ``W`` is below ``W'`` when ``W'`` is a prefix of ``W``.  A set of
words ``A`` is below ``B`` when every word of ``A`` has a prefix in ``B``.
The on-line map :func:`psi` sends the vertices ``1..n`` of a partial order,
in that order, to prefix-free sets so that the order is reproduced exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

DOWN = "↓"
UP = "↑"


class OrderError(ValueError):
    pass


# --------------------------------------------------------------- words

def _check_word(w: str) -> str:
    if any(c not in "01" for c in w):
        raise OrderError(f"word must be over 0/1: {w!r}")
    return w


def word_leq(w: str, v: str) -> bool:
    """True when ``v`` is a prefix of ``w``."""
    return _check_word(w).startswith(_check_word(v))


def min_antichain(words: Iterable[str]) -> FrozenSet[str]:
    """Keep the words that have no proper prefix in the set."""
    ws = {_check_word(w) for w in words}
    return frozenset(w for w in ws if not any(w[:k] in ws for k in range(len(w))))


def is_antichain(words: Iterable[str]) -> bool:
    ws = set(words)
    return min_antichain(ws) == ws


def antichain(words: Iterable[str]) -> FrozenSet[str]:
    ws = frozenset(_check_word(w) for w in words)
    if not is_antichain(ws):
        raise OrderError(f"not prefix-free: {sorted(ws)}")
    return ws


def antichain_leq(A: Iterable[str], B: Iterable[str]) -> bool:
    B = set(B)
    return all(any(w[:k] in B for k in range(len(w) + 1)) for w in A)


def antichain_lt(A, B) -> bool:
    return antichain_leq(A, B) and set(A) != set(B)


def all_antichains(max_len: int) -> List[FrozenSet[str]]:
    """Every prefix-free set of words of length at most ``max_len``."""

    def rec(depth):
        # antichains of the subtree of the given remaining depth, rooted at ""
        if depth < 0:
            return [frozenset()]
        sub = rec(depth - 1)
        out = [frozenset(), frozenset({""})]
        for a in sub:
            for b in sub:
                if a or b:
                    out.append(frozenset({"0" + w for w in a} | {"1" + w for w in b}))
        return out

    return rec(max_len)


# ------------------------------------------------------------------ psi

def _check_poset(n: int, leq) -> None:
    for i in range(1, n + 1):
        if not leq(i, i):
            raise OrderError("order must be reflexive")
        for j in range(1, n + 1):
            if i != j and leq(i, j) and leq(j, i):
                raise OrderError("order must be antisymmetric")
            for k in range(1, n + 1):
                if leq(i, j) and leq(j, k) and not leq(i, k):
                    raise OrderError("order must be transitive")


def _as_leq(poset):
    """Accept ``(n, relation)`` where relation is a callable or a set of pairs."""
    n, rel = poset
    if callable(rel):
        return n, rel
    pairs = set(map(tuple, rel))
    return n, lambda a, b: a == b or (a, b) in pairs


def psi(poset) -> List[FrozenSet[str]]:
    """On-line images of the prefixes ``[1], [1,2], ..., [1..n]``.

    Vertex ``n`` receives the minimal words among the images of the earlier
    vertices below it together with every length-``n`` word ending in 0
    that has a prefix in the image of each earlier vertex above it.
    """
    n, leq = _as_leq(poset)
    _check_poset(n, leq)
    out: List[FrozenSet[str]] = []
    for k in range(1, n + 1):
        lower: Set[str] = set()
        for m in range(1, k):
            if leq(m, k):
                lower |= out[m - 1]
        above = [out[m - 1] for m in range(1, k) if leq(k, m)]
        upper = {
            "".join(bits) + "0"
            for bits in itertools.product("01", repeat=k - 1)
            if all(antichain_leq({"".join(bits) + "0"}, img) for img in above)
        }
        out.append(min_antichain(lower | upper))
    return out


def upward_closure(poset, S: Iterable[int]) -> Set[int]:
    n, leq = _as_leq(poset)
    S = set(S)
    return {k for k in range(1, n + 1) if any(leq(s, k) for s in S)}


def separator_word(poset, S: Iterable[int]) -> str:
    """A word of length n below exactly the images of the up-closure of S.

    Letter k is 0 for members of the closure and 1 otherwise; images of
    earlier vertices only see shorter prefixes, so the choice is local.
    """
    n, leq = _as_leq(poset)
    images = psi((n, leq))
    up = upward_closure((n, leq), S)
    W = "".join("0" if k in up else "1" for k in range(1, n + 1))
    for k in range(1, n + 1):
        if antichain_leq({W}, images[k - 1]) != (k in up):
            raise OrderError("separator construction failed")  # pragma: no cover
    return W


# ----------------------------------------------------------------- gaps

def is_gap_B(S: Iterable[str], T: Iterable[str]) -> bool:
    """True when ``S < T`` arises from ``T`` by splitting one word into its two sons."""
    S, T = frozenset(S), frozenset(T)
    if not antichain_lt(S, T):
        raise OrderError("gap test needs S strictly below T")
    gone = T - S
    new = S - T
    if len(gone) != 1:
        return False
    (s,) = gone
    return new == {s + "0", s + "1"}


# ------------------------------------------------------------ intervals

Interval = Tuple[Fraction, Fraction]


def word_value(w: str) -> Fraction:
    return sum((Fraction(int(c), 3 ** (i + 1)) for i, c in enumerate(w)), Fraction(0))


def to_intervals(A: Iterable[str]) -> FrozenSet[Interval]:
    out = set()
    for w in A:
        a = word_value(w)
        out.add((a, a + Fraction(2, 3 ** (len(w) + 1))))
    return frozenset(out)


def interval_leq(A: Iterable[Interval], B: Iterable[Interval]) -> bool:
    B = list(B)
    return all(any(c <= a and b <= d for c, d in B) for a, b in A)


def interval_between(A, B):
    """A set strictly between ``A < B``.

    Some interval of B is not an interval of A.  If no interval of A sits
    inside it, halve it; otherwise cut a small hole into one uncovered gap.
    """
    A, B = list(A), list(B)
    if not (interval_leq(A, B) and not interval_leq(B, A)):
        raise OrderError("need A strictly below B")
    for i, (c, d) in enumerate(B):
        inside = sorted((a, b) for a, b in A if c <= a and b <= d)
        if inside == [(c, d)]:
            continue
        rest = [iv for j, iv in enumerate(B) if j != i]
        if not inside:
            return frozenset(rest + [(c, (c + d) / 2)])
        pts = [c] + [x for ab in inside for x in ab] + [d]
        for lo, hi in zip(pts[0::2], pts[1::2]):
            if lo < hi:
                mid, q = (lo + hi) / 2, (hi - lo) / 4
                return frozenset(rest + [(c, mid - q), (mid + q, d)])
    raise OrderError("no intermediate found")  # pragma: no cover


# ---------------------------------------------------------- convex hulls

Point = Tuple[Fraction, Fraction]


def to_convex(I: Iterable[Interval]) -> FrozenSet[Point]:
    pts = set()
    for a, b in I:
        a, b = Fraction(a), Fraction(b)
        pts.update({(a, a * a), ((a + b) / 2, a * b), (b, b * b)})
    return frozenset(pts)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> List[Point]:
    """Vertices in counter-clockwise order (monotone chain, exact)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def point_in_hull(p: Point, hull: List[Point]) -> bool:
    if not hull:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        a, b = hull
        return _cross(a, b, p) == 0 and min(a, b) <= p <= max(a, b)
    return all(_cross(hull[i], hull[(i + 1) % len(hull)], p) >= 0 for i in range(len(hull)))


def convex_leq(P: Iterable[Point], Q: Iterable[Point]) -> bool:
    """Hull of P inside hull of Q; generators of P suffice."""
    hull = convex_hull(Q)
    return all(point_in_hull(p, hull) for p in P)


# ------------------------------------------------------ truncated vectors

def word_to_vector(w: str) -> Tuple[int, ...]:
    out: List[int] = []
    for c in _check_word(w):
        out += [1, 0] if c == "1" else [0, 1]
    return tuple(out)


def tv_leq(v: Sequence[int], u: Sequence[int]) -> bool:
    return len(v) >= len(u) and all(v[i] >= u[i] for i in range(len(u)))


def tvset_leq(V, U) -> bool:
    return all(any(tv_leq(v, u) for u in U) for v in V)


def to_tv(A: Iterable[str]) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(word_to_vector(w) for w in A)


def psi_prime(poset) -> List[FrozenSet[Tuple[int, ...]]]:
    n, leq = _as_leq(poset)
    _check_poset(n, leq)
    vec = {k: tuple(1 if leq(k, m) else 0 for m in range(1, k + 1)) for k in range(1, n + 1)}
    return [frozenset(vec[m] for m in range(1, k + 1) if leq(m, k)) for k in range(1, n + 1)]


# ---------------------------------------------------------- periodic sets

@dataclass(frozen=True)
class PeriodicSet:
    period: int
    signature: str

    def __post_init__(self):
        p = self.period
        if p < 1 or p & (p - 1):
            raise OrderError("period must be a power of two")
        if len(self.signature) != p or any(c not in "01" for c in self.signature):
            raise OrderError("signature must be a 0/1 word of the period's length")

    def __contains__(self, n: int) -> bool:
        return self.signature[n % self.period] == "1"

    def minimized(self) -> "PeriodicSet":
        s = self.signature
        while len(s) > 1 and s[: len(s) // 2] == s[len(s) // 2:]:
            s = s[: len(s) // 2]
        return PeriodicSet(len(s), s)

    def to_json(self):
        return {"period": self.period, "signature": self.signature}


def to_periodic(A: Iterable[str]) -> PeriodicSet:
    """n is a member when its low binary digits, least significant first, start with a word of A."""
    A = list(A)
    L = max((len(w) for w in A), default=0)
    p = 1 << L
    sig = []
    for n in range(p):
        digits = "".join(str(n >> i & 1) for i in range(L))
        sig.append("1" if any(digits.startswith(w) for w in A) else "0")
    return PeriodicSet(p, "".join(sig))


def spread_word(w: str) -> str:
    """Follow every letter by a 1, so no two sibling cones cover their parent."""
    return "".join(c + "1" for c in _check_word(w))


def to_periodic_faithful(A: Iterable[str]) -> PeriodicSet:
    """:func:`to_periodic` after :func:`spread_word`; injective and order-reflecting.

    The plain map sends ``{w}`` and ``{w0, w1}`` to the same set.
    """
    return to_periodic([spread_word(w) for w in A])


def periodic_subset(S: PeriodicSet, T: PeriodicSet) -> bool:
    L = max(S.period, T.period)
    return all((n not in S) or (n in T) for n in range(L))


def periodic_project(S: PeriodicSet, i: int) -> PeriodicSet:
    """Largest subset of S with period ``i``."""
    if i < 1 or i & (i - 1) or S.period % i:
        if i >= 1 and not i & (i - 1) and i % S.period == 0:
            return PeriodicSet(i, S.signature * (i // S.period))
        raise OrderError("projection period must be a power-of-two divisor")
    k = S.period // i
    return PeriodicSet(i, "".join("1" if all(S.signature[r + j * i] == "1" for j in range(k)) else "0" for r in range(i)))


def all_periodic(max_log: int) -> List[Tuple[int, PeriodicSet]]:
    out = []
    for k in range(max_log + 1):
        for bits in itertools.product("01", repeat=1 << k):
            out.append((k, PeriodicSet(1 << k, "".join(bits))))
    return out


# ---------------------------------------------------------------- grammar

def to_grammar(A: Iterable[str]) -> str:
    A = set(A)
    if not A:
        return "0"
    if "" in A:
        if len(A) > 1:
            raise OrderError("not prefix-free")
        return "1"
    A0 = {w[1:] for w in A if w[0] == "0"}
    A1 = {w[1:] for w in A if w[0] == "1"}
    return DOWN + to_grammar(A0) + to_grammar(A1) + UP


def grammar_decode(g: str) -> FrozenSet[str]:
    """Word set denoted by a derivable grammar word."""

    def parse(i):
        if i >= len(g):
            raise OrderError(f"truncated grammar word: {g!r}")
        c = g[i]
        if c == "0":
            return set(), i + 1
        if c == "1":
            return {""}, i + 1
        if c == DOWN:
            a, j = parse(i + 1)
            b, k = parse(j)
            if k >= len(g) or g[k] != UP:
                raise OrderError(f"unbalanced grammar word: {g!r}")
            return {"0" + w for w in a} | {"1" + w for w in b}, k + 1
        raise OrderError(f"bad grammar symbol {c!r}")

    out, end = parse(0)
    if end != len(g):
        raise OrderError(f"trailing symbols in grammar word: {g!r}")
    return frozenset(out)


def grammar_leq(g: str, h: str) -> bool:
    """Semantic decision: decode both words and compare the word sets."""
    return antichain_leq(grammar_decode(g), grammar_decode(h))


def grammar_rewrites(h: str, max_len: int) -> Set[str]:
    """Words reachable from ``h`` by the three rewriting rules, length-bounded."""
    seen = {h}
    stack = [h]
    rules = [("1", DOWN + "11" + UP), ("1", "0"), (DOWN + "00" + UP, "0")]
    while stack:
        w = stack.pop()
        for lhs, rhs in rules:
            start = w.find(lhs)
            while start != -1:
                v = w[:start] + rhs + w[start + len(lhs):]
                if len(v) <= max_len and v not in seen:
                    seen.add(v)
                    stack.append(v)
                start = w.find(lhs, start + 1)
    return seen


# ------------------------------------------------------------- utilities

def enumerate_posets(n: int) -> List[FrozenSet[Tuple[int, int]]]:
    """All partial orders on ``1..n`` up to isomorphism, as sets of strict pairs.

    Grown one vertex at a time: the new vertex gets a down-set D and an
    up-set U of the old order with every member of D below every member of U.
    """
    from .relcore import canonical_form, make_structure

    level = [frozenset()]
    for k in range(1, n + 1):
        old = list(range(1, k))
        seen = {}
        for rel in level:
            below = lambda a, b: a == b or (a, b) in rel
            downs = [D for r in range(k) for D in itertools.combinations(old, r)
                     if all(x in D for y in D for x in old if below(x, y))]
            ups = [U for r in range(k) for U in itertools.combinations(old, r)
                   if all(x in U for y in U for x in old if below(y, x))]
            for D in downs:
                for U in ups:
                    if set(D) & set(U) or not all(below(d, u) for d in D for u in U):
                        continue
                    new = set(rel) | {(d, k) for d in D} | {(k, u) for u in U}
                    key = canonical_form(make_structure((2,), range(1, k + 1), [(0, t) for t in new]))[0]
                    seen.setdefault(key, frozenset(new))
        level = list(seen.values())
    return level
