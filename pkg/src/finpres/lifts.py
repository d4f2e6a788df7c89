"""Lifts that make classes with forbidden homomorphic images into amalgamation classes.

A family ``F`` of connected structures is cut into pieces: a minimal cut
together with one component of the remainder, rooted at the cut vertices.
A lift adds one relation per piece; the canonical lift of ``A`` puts a root
tuple into that relation whenever the piece maps into ``A`` with its roots
landing on the tuple.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .relcore import (
    RelStructure,
    _adjacency,
    _components,
    canonical_form,
    free_amalgam,
    hom_exists,
    is_connected,
    is_irreducible,
    is_relational_tree,
    make_structure,
    minimal_cuts,
    pieces_of_cut,
    all_homomorphisms,
)


class LiftError(ValueError):
    pass


class BoundExceeded(LiftError):
    """An enumeration went past its explicit resource bound."""


# ----------------------------------------------------------------- pieces

@dataclass(frozen=True)
class Piece:
    structure: RelStructure
    roots: Tuple

    @property
    def arity(self) -> int:
        return len(self.roots)


def _rooted_key(S: RelStructure, roots: Sequence, extra: Sequence[Tuple[int, tuple]] = ()):
    """Isomorphism invariant of a structure with ordered marked tuples."""
    marks = [(len(S.arities) + j, (r,)) for j, r in enumerate(roots)]
    arities = S.arities + (1,) * len(roots) + tuple(len(t) for _, t in extra)
    tuples = list(S.tuples()) + marks
    base = len(S.arities) + len(roots)
    tuples += [(base + j, t) for j, (_, t) in enumerate(extra)]
    tag = tuple(i for i, _ in extra)
    return tag, canonical_form(make_structure(arities, S.vertices, tuples))[0]


class Family:
    """A finite list of connected structures of one type, with its pieces."""

    def __init__(self, members: Iterable[RelStructure]):
        self.members = tuple(members)
        if not self.members:
            raise LiftError("a family needs at least one member")
        arities = {F.arities for F in self.members}
        if len(arities) != 1:
            raise LiftError("family members must share a type")
        self.arities = self.members[0].arities
        for F in self.members:
            if len(F) == 0 or not is_connected(F):
                raise LiftError("family members must be non-empty and connected")
        self._pieces: Optional[Tuple[Piece, ...]] = None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def pieces(self) -> Tuple[Piece, ...]:
        if self._pieces is None:
            self._pieces = _enumerate_pieces(self.members)
        return self._pieces

    @property
    def piece_arities(self) -> Tuple[int, ...]:
        return tuple(p.arity for p in self.pieces)


def as_family(F) -> Family:
    return F if isinstance(F, Family) else Family(F)


def _enumerate_pieces(members) -> Tuple[Piece, ...]:
    seen = {}
    for F in members:
        if len(F) < 2:
            continue
        for cut in minimal_cuts(F):
            for S, _ in pieces_of_cut(F, cut):
                for roots in itertools.permutations(sorted(cut, key=F.index)):
                    key = _rooted_key(S, roots)
                    if key not in seen:
                        seen[key] = Piece(S, tuple(roots))
    return tuple(sorted(seen.values(), key=lambda p: (len(p.structure), p.arity, p.structure.num_tuples(), repr(p.roots))))


def pieces_of(F) -> Tuple[Piece, ...]:
    """All pieces of all members, one per rooted isomorphism type."""
    return as_family(F).pieces


def piece_index(F, S: RelStructure, roots: Sequence) -> Optional[int]:
    key = _rooted_key(S, tuple(roots))
    for i, P in enumerate(as_family(F).pieces):
        if P.arity == len(roots) and _rooted_key(P.structure, P.roots) == key:
            return i
    return None


# ------------------------------------------------------------------ lifts

@dataclass(frozen=True)
class Lift:
    """A shadow structure plus one extra relation per piece of the family."""

    shadow: RelStructure
    extended: Tuple[FrozenSet[tuple], ...]

    def __post_init__(self):
        ext = tuple(frozenset(tuple(t) for t in rel) for rel in self.extended)
        for rel in ext:
            for t in rel:
                for x in t:
                    if not self.shadow.has_vertex(x):
                        raise LiftError(f"extended tuple {t!r} uses a vertex outside the shadow")
        object.__setattr__(self, "extended", ext)

    @property
    def vertices(self):
        return self.shadow.vertices

    def __len__(self):
        return len(self.shadow)

    def induced(self, subset: Iterable) -> "Lift":
        keep = set(subset)
        return Lift(self.shadow.induced(keep),
                    tuple(frozenset(t for t in rel if all(x in keep for x in t)) for rel in self.extended))

    def relabel(self, mapping: Mapping) -> "Lift":
        return Lift(self.shadow.relabel(mapping),
                    tuple(frozenset(tuple(mapping[x] for x in t) for t in rel) for rel in self.extended))

    def num_extended(self) -> int:
        return sum(len(r) for r in self.extended)


def lift_structure(X: Lift) -> RelStructure:
    """The lift as one structure whose type lists shadow then piece relations."""
    arities = X.shadow.arities + tuple(_arity_of(rel, default=1) for rel in X.extended)
    return RelStructure(arities, X.shadow.vertices, X.shadow.relations + X.extended)


def _arity_of(rel, default):
    for t in rel:
        return len(t)
    return default


def lift_from_structure(S: RelStructure, n_shadow: int) -> Lift:
    shadow = RelStructure(S.arities[:n_shadow], S.vertices, S.relations[:n_shadow])
    return Lift(shadow, S.relations[n_shadow:])


def _typed_lift_structure(X: Lift, F: Family) -> RelStructure:
    arities = X.shadow.arities + F.piece_arities
    return RelStructure(arities, X.shadow.vertices, X.shadow.relations + X.extended)


def empty_lift(F, shadow: RelStructure) -> Lift:
    return Lift(shadow, tuple(frozenset() for _ in as_family(F).pieces))


def _check_compatible(X: Lift, F: Family):
    if X.shadow.arities != F.arities:
        raise LiftError("lift shadow and family have different types")
    if len(X.extended) != len(F.pieces):
        raise LiftError(f"lift has {len(X.extended)} extended relations, the family has {len(F.pieces)} pieces")
    for rel, P in zip(X.extended, F.pieces):
        for t in rel:
            if len(t) != P.arity:
                raise LiftError(f"extended tuple {t!r} has the wrong arity")


def root_images(P: Piece, A: RelStructure, candidates: Optional[Iterable] = None) -> FrozenSet[tuple]:
    """Tuples of ``A`` onto which some homomorphism of the piece sends its roots."""
    pool = list(A.vertices if candidates is None else candidates)
    out = set()
    for t in itertools.product(pool, repeat=P.arity):
        pins = {}
        ok = True
        for r, x in zip(P.roots, t):
            if pins.setdefault(r, x) != x:
                ok = False
                break
        if ok and hom_exists(P.structure, A, pins):
            out.add(t)
    return frozenset(out)


def canonical_lift(A: RelStructure, F, restrict_to: Optional[Iterable] = None) -> Lift:
    """The lift of ``A`` recording every rooted image of every piece.

    With ``restrict_to`` only tuples inside that vertex set are computed and
    the lift is induced on it.
    """
    F = as_family(F)
    if A.arities != F.arities:
        raise LiftError("structure and family have different types")
    keep = list(A.vertices) if restrict_to is None else [v for v in A.vertices if v in set(restrict_to)]
    ext = tuple(root_images(P, A, keep) for P in F.pieces)
    lift = Lift(A, ext)
    return lift if restrict_to is None else lift.induced(keep)


def universal_witness(X: Lift, F) -> RelStructure:
    """The shadow with a fresh copy of the piece glued along every extended tuple."""
    F = as_family(F)
    _check_compatible(X, F)
    verts = list(X.shadow.vertices)
    tuples = list(X.shadow.tuples())
    for i, (P, rel) in enumerate(zip(F.pieces, X.extended)):
        for k, t in enumerate(sorted(rel, key=repr)):
            glue = dict(zip(P.roots, t))
            name = {}
            for v in P.structure.vertices:
                if v in glue:
                    name[v] = glue[v]
                else:
                    name[v] = ("uw", i, k, v)
                    verts.append(name[v])
            for j, u in P.structure.tuples():
                tuples.append((j, tuple(name[x] for x in u)))
    return make_structure(X.shadow.arities, verts, tuples)


def lift_membership(X: Lift, F, explain: bool = False):
    """Is ``X`` an induced sublift of the canonical lift of some F-free structure?

    Decided on the universal witness: it must admit no homomorphism from a
    member of ``F`` and its canonical lift must add nothing on ``X``.
    """
    F = as_family(F)
    _check_compatible(X, F)
    W = universal_witness(X, F)
    for j, M in enumerate(F.members):
        if hom_exists(M, W):
            return (False, f"member {j} maps into the universal witness") if explain else False
    L = canonical_lift(W, F, restrict_to=X.vertices)
    for i, (have, want) in enumerate(zip(X.extended, L.extended)):
        if have != want:
            if not explain:
                return False
            missing = sorted(want - have, key=repr)
            if missing:
                return False, f"piece {i} also reaches {missing[0]!r}"
            return False, f"piece {i} cannot reach {sorted(have - want, key=repr)[0]!r}"
    return (True, "ok") if explain else True


def is_forb_h(A: RelStructure, F) -> bool:
    """No member of ``F`` maps homomorphically into ``A``."""
    return not any(hom_exists(M, A) for M in as_family(F).members)


# ------------------------------------------------------------- amalgams

def _disjoint_names(W: RelStructure, keep: Iterable, tag) -> Tuple[RelStructure, Dict]:
    keep = set(keep)
    ren = {v: v if v in keep else (tag, v) for v in W.vertices}
    return W.relabel(ren), ren


def lift_amalgam(X: Lift, Y: Lift, Z: Lift, F, check: bool = True) -> Lift:
    """Amalgamate two members of the class over a common induced sublift.

    Vertices shared by ``X`` and ``Y`` must be exactly those of ``Z``.  The
    result is the canonical lift of the free amalgam of the universal
    witnesses, induced on the union of the two vertex sets.
    """
    F = as_family(F)
    zs = set(Z.vertices)
    if set(X.vertices) & set(Y.vertices) != zs:
        raise LiftError("X and Y must share exactly the vertices of Z")
    if not same_lift(X.induced(zs), Z) or not same_lift(Y.induced(zs), Z):
        raise LiftError("Z must be the sublift induced by both X and Y")
    for name, L in (("X", X), ("Y", Y)):
        if check and not lift_membership(L, F):
            raise LiftError(f"{name} is not in the lifted class")
    A, _ = _disjoint_names(universal_witness(X, F), X.vertices, "a")
    B, _ = _disjoint_names(universal_witness(Y, F), Y.vertices, "b")
    C = Z.shadow
    ident = {v: v for v in C.vertices}
    D, fa, fb = free_amalgam(A, B, C, ident, ident)
    back = {}
    for v in X.vertices:
        back[fa[v]] = v
    for v in Y.vertices:
        back[fb[v]] = v
    V = canonical_lift(D, F, restrict_to=list(back)).relabel(back)
    order = list(X.vertices) + [v for v in Y.vertices if v not in set(X.vertices)]
    V = V.induced(order)
    if check:
        if not same_lift(V.induced(X.vertices), X) or not same_lift(V.induced(Y.vertices), Y):
            raise LiftError("amalgam changed one of the factors")
        if not is_forb_h(D, F):
            raise LiftError("the free amalgam of witnesses contains a forbidden image")
    return V


def same_lift(X: Lift, Y: Lift) -> bool:
    """Equal as labelled lifts, ignoring the listing order of vertices."""
    return (X.shadow.arities == Y.shadow.arities and set(X.vertices) == set(Y.vertices)
            and X.shadow.relations == Y.shadow.relations and X.extended == Y.extended)


def random_forb_graph(F, rng: random.Random, n: int, p: float = 0.4, tries: int = 200) -> RelStructure:
    """A random simple graph on ``n`` vertices with no homomorphic image of a member."""
    F = as_family(F)
    for _ in range(tries):
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        rel = frozenset(edges) | frozenset((v, u) for u, v in edges)
        A = RelStructure((2,), tuple(range(n)), (rel,))
        if is_forb_h(A, F):
            return A
    return RelStructure((2,), tuple(range(n)), (frozenset(),))


def random_lift_triple(F, rng: random.Random, max_vertices: int = 5):
    """A random ``(X, Y, Z)`` of class members with ``Z`` induced in both.

    ``X`` is cut out of the canonical lift of a random F-free graph.  ``Y``
    comes from a second graph that keeps the part of the first around ``Z``;
    graphs whose lift disagrees on ``Z`` are redrawn.
    """
    F = as_family(F)
    A = random_forb_graph(F, rng, rng.randint(1, max_vertices + 1))
    LA = canonical_lift(A, F)
    xs = rng.sample(list(A.vertices), rng.randint(1, min(max_vertices, len(A))))
    X = LA.induced(xs)
    zs = rng.sample(xs, rng.randint(0, len(xs)))
    Z = X.induced(zs)
    for _ in range(60):
        keep = set(zs) | {v for v in A.vertices if v not in xs and rng.random() < 0.5}
        base = A.induced(keep)
        ren = {v: v if v in zs else ("y", v) for v in base.vertices}
        base = base.relabel(ren)
        extra = rng.randint(0, 2)
        verts = list(base.vertices) + [("y", "new", j) for j in range(extra)]
        edges = set(base.relations[0])
        for j in range(extra):
            for u in verts:
                w = ("y", "new", j)
                if u != w and rng.random() < 0.4:
                    edges |= {(u, w), (w, u)}
        B = RelStructure((2,), tuple(verts), (frozenset(edges),))
        if not is_forb_h(B, F):
            continue
        others = [v for v in B.vertices if v not in set(zs)]
        ys = list(zs) + rng.sample(others, rng.randint(0, min(len(others), max_vertices - len(zs))))
        if not ys:
            continue
        Y = canonical_lift(B, F, restrict_to=ys)
        if same_lift(Y.induced(zs), Z):
            return X, Y, Z
    ren = {v: v if v in zs else ("y", v) for v in A.vertices}
    return X, LA.relabel(ren).induced([ren[v] for v in xs]), Z


# ------------------------------------------------------- forbidden lifts

@dataclass(frozen=True)
class ForbiddenLift:
    """A lift to be avoided; ``negative`` names a piece tuple that must stay absent."""

    lift: Lift
    negative: Optional[Tuple[int, tuple]] = None


def _quotients(vertices: Sequence, limit: int):
    """All set partitions of ``vertices`` as maps to block representatives."""
    vertices = list(vertices)

    def rec(i, blocks):
        if i == len(vertices):
            yield {v: b[0] for b in blocks for v in b}
            return
        v = vertices[i]
        for b in blocks:
            b.append(v)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([v])
        yield from rec(i + 1, blocks)
        blocks.pop()

    count = 0
    for q in rec(0, []):
        count += 1
        if count > limit:
            raise BoundExceeded(f"more than {limit} quotients")
        yield q


def _fold_options(sub: RelStructure, comp: Sequence, nbrs: Sequence, F: Family, tag) -> List[Tuple]:
    """Ways to send a component into the interior of one glued piece copy.

    Each option is ``(j, y, merges)``: the piece index, the tuple the copy is
    glued along (boundary vertices or fresh ones) and the boundary vertices
    that must coincide.  Copies may have some roots identified.
    """
    out = set()
    comp_set = set(comp)
    for j, P in enumerate(F.pieces):
        for theta in _quotients(range(P.arity), 1000):
            cls = {P.roots[k]: ("root", theta[k]) for k in range(P.arity)}
            name = {v: cls.get(v, ("in", v)) for v in P.structure.vertices}
            Q = make_structure(P.structure.arities, list(dict.fromkeys(name.values())),
                               [(i, tuple(name[x] for x in t)) for i, t in P.structure.tuples()])
            for h in all_homomorphisms(sub, Q):
                if any((h[x][0] == "root") == (x in comp_set) for x in sub.vertices):
                    continue
                hit: Dict = {}
                for n in nbrs:
                    hit.setdefault(h[n][1], []).append(n)
                merges = tuple(sorted(tuple(sorted(g, key=repr)) for g in hit.values() if len(g) > 1))
                y = tuple(hit[theta[k]][0] if theta[k] in hit else ("fresh", tag, theta[k]) for k in range(P.arity))
                out.add((j, y, merges))
    return sorted(out, key=repr)


def _coverings(S: RelStructure, keep: FrozenSet, F: Family) -> Iterator[Tuple[Lift, Dict]]:
    """Lifts on ``keep`` (plus fresh roots) whose universal witness receives ``S``.

    Vertices of ``keep`` stay put; every component of the rest is folded into
    one piece copy.  Yields the lift and the map merging boundary vertices.
    """
    adj = _adjacency(S)
    rest = [v for v in S.vertices if v not in keep]
    options = []
    for c, comp in enumerate(_components(adj, rest)):
        nbrs = set()
        for x in comp:
            nbrs |= adj[x] & keep
        nbrs = sorted(nbrs, key=S.index)
        found = _fold_options(S.induced(set(comp) | set(nbrs)), comp, nbrs, F, c)
        if not found:
            return
        options.append(found)
    for choice in itertools.product(*options):
        parent = {v: v for v in keep}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for _, _, merges in choice:
            for group in merges:
                r0 = find(group[0])
                for g in group[1:]:
                    r = find(g)
                    if r != r0:
                        parent[r] = r0
        q = {v: find(v) for v in keep}
        verts = list(dict.fromkeys(q[v] for v in S.vertices if v in keep))
        ext = [set() for _ in F.pieces]
        for j, y, _ in choice:
            t = tuple(q.get(x, x) for x in y)
            for x in t:
                if x not in verts:
                    verts.append(x)
            ext[j].add(t)
        tuples = [(i, tuple(q[x] for x in t)) for i, t in S.induced(keep).tuples()]
        yield Lift(make_structure(S.arities, verts, tuples), tuple(frozenset(e) for e in ext)), q


def forbidden_lifts(F, max_templates: int = 20000, max_quotients: int = 5000) -> List[ForbiddenLift]:
    """Covering lifts of members and of pieces, closed under surjective images.

    A member-covering lift has a universal witness that receives the member;
    any homomorphic copy of it is forbidden.  A piece-covering lift receives
    the piece with its roots fixed and carries the root tuple as a negative:
    a copy is forbidden only when the image of that tuple is missing from the
    piece relation.  Components outside the kept vertices may fold into piece
    copies with identified roots.  Raises ``BoundExceeded`` when a bound is hit.
    """
    F = as_family(F)
    seen: Dict = {}

    def add(X: Lift, negative):
        if len(seen) >= max_templates:
            raise BoundExceeded(f"more than {max_templates} forbidden lifts")
        S = _typed_lift_structure(X, F)
        extra = [negative] if negative else []
        key = _rooted_key(S, (), extra)
        if key not in seen:
            seen[key] = ForbiddenLift(X, negative)

    def close(Y: Lift, negative):
        for q in _quotients(Y.vertices, max_quotients):
            reps = list(dict.fromkeys(q[v] for v in Y.vertices))
            tuples = [(i, tuple(q[x] for x in t)) for i, t in Y.shadow.tuples()]
            shadow = make_structure(Y.shadow.arities, reps, tuples)
            ext = tuple(frozenset(tuple(q[x] for x in t) for t in rel) for rel in Y.extended)
            neg = None
            if negative is not None:
                i, t = negative
                img = tuple(q[x] for x in t)
                if img in ext[i]:
                    continue
                neg = (i, img)
            add(Lift(shadow, ext), neg)

    for M in F.members:
        for size in range(0, len(M) + 1):
            for keep in itertools.combinations(M.vertices, size):
                for Y, _ in _coverings(M, frozenset(keep), F):
                    close(Y, None)
    for i, P in enumerate(F.pieces):
        roots = set(P.roots)
        others = [v for v in P.structure.vertices if v not in roots]
        for size in range(0, len(others) + 1):
            for more in itertools.combinations(others, size):
                for Y, q in _coverings(P.structure, frozenset(roots | set(more)), F):
                    neg = tuple(q[r] for r in P.roots)
                    if neg not in Y.extended[i]:
                        close(Y, (i, neg))
    return list(seen.values())


def avoids_forbidden(X: Lift, Fp: Sequence[ForbiddenLift], F) -> bool:
    """No forbidden lift maps injectively into ``X`` (respecting negatives)."""
    F = as_family(F)
    target = _typed_lift_structure(X, F)
    for T in Fp:
        src = _typed_lift_structure(T.lift, F)
        if len(src) > len(target):
            continue
        for f in all_homomorphisms(src, target, injective=True):
            if T.negative is None:
                return False
            i, t = T.negative
            if tuple(f[x] for x in t) not in X.extended[i]:
                return False
    return True


# ----------------------------------------------------------- tree duals

def tree_dual(F) -> RelStructure:
    """A finite structure D with: A -> D iff no member of F maps into A.

    Vertices are the consistent sets of piece labels on a single vertex;
    a tuple of such vertices is added when the one-tuple lift it spans is
    in the lifted class.
    """
    F = as_family(F)
    for M in F.members:
        if not is_relational_tree(M):
            raise LiftError("tree duals need every member to be a relational tree")
    pieces = F.pieces
    if any(P.arity != 1 for P in pieces):
        raise LiftError("tree pieces must have a single root")
    k = len(pieces)
    labels = []
    for mask in range(1 << k):
        ext = tuple(frozenset({("x",)}) if mask >> i & 1 else frozenset() for i in range(k))
        X = Lift(make_structure(F.arities, ["x"], []), ext)
        if lift_membership(X, F):
            labels.append(mask)
    verts = tuple(labels)
    tuples = []
    for j, a in enumerate(F.arities):
        for t in itertools.product(verts, repeat=a):
            names = list(dict.fromkeys(t))
            ext = tuple(frozenset((v,) for v in names if v >> i & 1) for i in range(k))
            X = Lift(make_structure(F.arities, names, [(j, t)]), ext)
            if lift_membership(X, F):
                tuples.append((j, t))
    return make_structure(F.arities, verts, tuples)


def enumerate_structures(arities: Sequence[int], n: int, include_empty: bool = True) -> List[RelStructure]:
    """One structure per isomorphism type on at most ``n`` vertices."""
    arities = tuple(arities)
    from .relcore import empty_structure

    out = [empty_structure(arities)] if include_empty else []
    level = [empty_structure(arities)]
    for size in range(1, n + 1):
        new_v = size - 1
        slots = []
        for j, a in enumerate(arities):
            for t in itertools.product(range(size), repeat=a):
                if new_v in t:
                    slots.append((j, t))
        seen = {}
        for S in level:
            base = list(S.tuples())
            for mask in range(1 << len(slots)):
                extra = [slots[b] for b in range(len(slots)) if mask >> b & 1]
                T = make_structure(arities, range(size), base + extra)
                key = canonical_form(T)[0]
                if key not in seen:
                    seen[key] = T
        level = list(seen.values())
        out.extend(level)
    return out


def duality_check(F, D: RelStructure, n: int, structures: Optional[Sequence[RelStructure]] = None) -> bool:
    """Exhaustively compare ``F``-freeness with mapping to ``D`` up to ``n`` vertices."""
    return duality_counterexample(F, D, n, structures) is None


def duality_counterexample(F, D: RelStructure, n: int, structures=None) -> Optional[RelStructure]:
    members = list(F.members if isinstance(F, Family) else F)
    pool = enumerate_structures(D.arities, n) if structures is None else structures
    for A in pool:
        free = not any(hom_exists(M, A) for M in members)
        if free != hom_exists(A, D):
            return A
    return None


# ------------------------------------------------------ arity criteria

def min_lift_arity(F) -> int:
    """Largest minimal cut over the members (0 when no member has a cut)."""
    best = 0
    for M in as_family(F).members:
        if len(M) >= 2:
            for cut in minimal_cuts(M):
                best = max(best, len(cut))
    return best


def cut_irreducibility(F) -> bool:
    """Every minimal cut of every member induces an irreducible substructure."""
    for M in as_family(F).members:
        if len(M) < 2:
            continue
        for cut in minimal_cuts(M):
            if not is_irreducible(M.induced(cut)):
                return False
    return True


# ------------------------------------------------------ generic slices

def generic_slice(F, rounds: int, seed: int = 0, max_new: int = 3, target: int = 40) -> Lift:
    """Grow a member of the lifted class by repeated one-sided amalgamation.

    Each round amalgamates the current lift with a small random member over
    a random induced sublift; it stops after ``rounds`` or at ``target``
    vertices.
    """
    F = as_family(F)
    rng = random.Random(seed)
    cur = canonical_lift(random_forb_graph(F, rng, 2), F).relabel({0: 0, 1: 1})
    counter = 2
    for _ in range(rounds):
        if len(cur) >= target:
            break
        base_size = rng.randint(0, min(3, len(cur)))
        zs = rng.sample(list(cur.vertices), base_size)
        Z = cur.induced(zs)
        k = rng.randint(1, max_new)
        W = universal_witness(Z, F)
        verts = list(W.vertices)
        new = list(range(counter, counter + k))
        counter += k
        edges = set(W.relations[0])
        for v in new:
            for u in list(verts):
                if rng.random() < 0.3:
                    edges |= {(u, v), (v, u)}
            verts.append(v)
        B = RelStructure((2,), tuple(verts), (frozenset(edges),))
        if not is_forb_h(B, F):
            continue
        Y = canonical_lift(B, F, restrict_to=list(zs) + new)
        if not same_lift(Y.induced(zs), Z):
            continue
        cur = lift_amalgam(cur, Y, Z, F, check=False)
    return cur
