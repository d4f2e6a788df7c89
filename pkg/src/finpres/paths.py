"""Oriented paths, planks and the block construction of path images.

A path is a string over ``>`` and ``<``.  Vertex ``i`` is joined to
``i + 1``; ``>`` means the arc ``i -> i+1`` and ``<`` the arc ``i+1 -> i``.
Homomorphisms between paths are decided by a bitset dynamic program: the
set of positions of the target reachable by the image of vertex ``i`` is
carried along the source, one arc at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

from .orders import PeriodicSet, periodic_project

FORWARD = ">"
BACKWARD = "<"


class PathError(ValueError):
    pass


def check_path(p: str) -> str:
    if any(c not in "<>" for c in p):
        raise PathError(f"path must be a string over '<' and '>': {p!r}")
    return p


def reverse(p: str) -> str:
    """The same path read from its terminal vertex."""
    return "".join(BACKWARD if c == FORWARD else FORWARD for c in reversed(p))


def concat(*parts: str) -> str:
    return "".join(parts)


def algebraic_length(p: str) -> int:
    return p.count(FORWARD) - p.count(BACKWARD)


def levels(p: str) -> List[int]:
    out = [0]
    for c in p:
        out.append(out[-1] + (1 if c == FORWARD else -1))
    return out


def path_structure(p: str):
    """The path as a binary relational structure on ``0..len(p)``."""
    from .relcore import graph

    arcs = [(i, i + 1) if c == FORWARD else (i + 1, i) for i, c in enumerate(check_path(p))]
    return graph(range(len(p) + 1), arcs, directed=True)


# ----------------------------------------------------------------- the DP

def _masks(q):
    fw = 0
    bw = 0
    for y, c in enumerate(q):
        if c == FORWARD:
            fw |= 1 << y
        else:
            bw |= 1 << (y + 1)
    return fw, bw


def _step(X, c, fw, bw):
    if c == FORWARD:
        return ((X & fw) << 1) | ((X & bw) >> 1)
    return ((X >> 1) & fw) | ((X << 1) & bw)


def _reachable(p, q, start_mask):
    """Bitsets of admissible images for every vertex of ``p`` (forward pass)."""
    fw, bw = _masks(q)
    sets = [start_mask]
    X = start_mask
    for c in p:
        X = _step(X, c, fw, bw)
        sets.append(X)
        if not X:
            break
    return sets


def end_positions(p: str, q: str, start: Optional[int] = None) -> set:
    """Positions of ``q`` that can receive the terminal vertex of ``p``."""
    mask = (1 << (len(q) + 1)) - 1 if start is None else 1 << start
    sets = _reachable(p, q, mask)
    X = sets[-1] if len(sets) == len(p) + 1 else 0
    return {i for i in range(len(q) + 1) if X >> i & 1}


def path_hom_exists(p: str, q: str) -> bool:
    check_path(p)
    check_path(q)
    sets = _reachable(p, q, (1 << (len(q) + 1)) - 1)
    return len(sets) == len(p) + 1 and sets[-1] != 0


def plank_hom_exists(p: str, q: str) -> bool:
    """Rooted variant: the initial vertex must go to the initial vertex."""
    sets = _reachable(check_path(p), check_path(q), 1)
    return len(sets) == len(p) + 1 and sets[-1] != 0


def path_hom_witness(p: str, q: str, start: Optional[int] = None, end: Optional[int] = None) -> Optional[List[int]]:
    """One homomorphism as a list of target positions, or None.

    Optional ``start``/``end`` pin the images of the two end vertices.
    """
    mask = (1 << (len(q) + 1)) - 1 if start is None else 1 << start
    sets = _reachable(p, q, mask)
    if len(sets) != len(p) + 1:
        return None
    last = sets[-1] if end is None else sets[-1] & (1 << end)
    if not last:
        return None
    fw, bw = _masks(q)
    y = (last & -last).bit_length() - 1
    out = [y]
    for i in range(len(p) - 1, -1, -1):
        # predecessor candidates z in sets[i] with an arc step p[i] from z to y
        cand = sets[i] & _step_back(y, p[i], fw, bw)
        y = (cand & -cand).bit_length() - 1
        out.append(y)
    out.reverse()
    return out


def _step_back(y, c, fw, bw):
    """Positions z such that ``_step({z}, c)`` contains y."""
    out = 0
    for z in (y - 1, y + 1):
        if z >= 0 and _step(1 << z, c, fw, bw) >> y & 1:
            out |= 1 << z
    return out


def is_path_hom(p: str, q: str, f: List[int]) -> bool:
    if len(f) != len(p) + 1:
        return False
    for i, c in enumerate(p):
        u, v = (f[i], f[i + 1]) if c == FORWARD else (f[i + 1], f[i])
        if v == u + 1:
            if q[u] != FORWARD:
                return False
        elif u == v + 1:
            if q[v] != BACKWARD:
                return False
        else:
            return False
    return True


def count_rooted_homs(p: str, q: str, start: int, end: int) -> int:
    """Number of homomorphisms sending in(p) to ``start`` and term(p) to ``end``."""
    m = len(q)
    cnt = {start: 1}
    for c in p:
        new: Dict[int, int] = {}
        for y, k in cnt.items():
            for z in (y - 1, y + 1):
                if 0 <= z <= m and _step(1 << y, c, *_masks(q)) >> z & 1:
                    new[z] = new.get(z, 0) + k
        cnt = new
    return cnt.get(end, 0)


# ------------------------------------------------------------- the blocks

@dataclass(frozen=True)
class BlockKit:
    H: str
    T: str
    B0: str
    B1: str
    S: str


# Found by bounded search over zig-zag shapes and frozen; see block_property_suite.
SHIPPED_KIT = BlockKit(
    H=">>>>>>><>>>>>><<<<",
    T=">>>><<<<<<><<<<<<><<",
    B0="<<<><<>>><<>><>>",
    B1="<<<><<>>><>>",
    S=">>><>><<<><<",
)


def make_blocks() -> BlockKit:
    kit = SHIPPED_KIT
    failures = [name for name, ok in block_property_suite(kit).items() if not ok]
    if failures:
        raise PathError(f"block kit fails: {', '.join(failures)}")
    return kit


def _is_power_of_two(n):
    return n > 0 and n & (n - 1) == 0


def p_of_word(W: str, kit: BlockKit = SHIPPED_KIT) -> str:
    if not _is_power_of_two(len(W)) or any(c not in "01" for c in W):
        raise PathError(f"word must be over 0/1 with power-of-two length: {W!r}")
    if len(W) == 1:
        return kit.B0 if W == "0" else kit.B1
    h = len(W) // 2
    return p_of_word(W[:h], kit) + kit.S + reverse(p_of_word(W[h:], kit))


def pbar(W: str, kit: BlockKit = SHIPPED_KIT) -> str:
    return kit.H + p_of_word(W, kit) + kit.T


def embed_periodic_to_path(S: PeriodicSet, kit: BlockKit = SHIPPED_KIT) -> str:
    """H followed by each doubled image of the 2^j-periodic cores of S."""
    S = S.minimized()
    out = [kit.H]
    p = 1
    while p <= S.period:
        piece = pbar(periodic_project(S, p).signature, kit)
        out.append(piece + reverse(piece))
        p *= 2
    return "".join(out)


def _rigid_ends(X: str) -> bool:
    """Every endomorphism fixes both ends and none starts at the terminal vertex."""
    n = len(X)
    return end_positions(X, X, 0) == {n} and not end_positions(X, X, n)


def block_property_suite(kit: BlockKit) -> Dict[str, bool]:
    H, B0, B1, S = kit.H, kit.B0, kit.B1, kit.S
    rep: Dict[str, bool] = {}
    rep["balanced B0"] = algebraic_length(B0) == 0
    rep["balanced B1"] = algebraic_length(B1) == 0
    rep["balanced S"] = algebraic_length(S) == 0
    rep["H starts with 7 forward arcs"] = H.startswith(FORWARD * 7)
    rep["no hom B1 -> B0"] = not path_hom_exists(B1, B0)
    rep["unique end-respecting hom B0 -> B1"] = count_rooted_homs(B0, B1, 0, len(B1)) == 1
    rep["B0 end-respecting endomorphism is identity"] = (
        count_rooted_homs(B0, B0, 0, len(B0)) == 1 and path_hom_witness(B0, B0, 0, len(B0)) == list(range(len(B0) + 1))
    )
    lv_S = set(levels(S)[1:-1])
    lv_B = set(levels(B0)[1:-1]) | set(levels(B1)[1:-1])
    rep["S interior levels disjoint from blocks"] = not (lv_S & lv_B)
    rep["rigid ends of S"] = _rigid_ends(S)
    rep["rigid ends of B0"] = _rigid_ends(B0)
    rep["rigid ends of B1"] = _rigid_ends(B1)
    init_ok = True
    for k in (1, 2):
        words = [format(i, f"0{k}b") for i in range(2 ** k)]
        for W in words:
            for V in words:
                P, Q = pbar(W, kit), pbar(V, kit)
                f = path_hom_witness(P, Q)
                if f is not None:
                    if f[0] != 0 or levels(Q)[f[0]] != 0:
                        init_ok = False
                    lp, lq = levels(P), levels(Q)
                    if any(lp[i] != lq[f[i]] for i in range(len(f))):
                        init_ok = False
                starts = _reachable(P, Q, (1 << (len(Q) + 1)) - 1)
                if len(starts) == len(P) + 1 and starts[-1]:
                    for s in range(1, len(Q) + 1):
                        if plank_start_hom(P, Q, s):
                            init_ok = False
    rep["homs between images map in to in"] = init_ok
    fold = True
    for k in (1, 2):
        for i in range(2 ** k):
            W = format(i, f"0{k}b")
            if path_hom_witness(pbar(W + W, kit), pbar(W, kit), 0, 0) is None:
                fold = False
    rep["folding hom exists"] = fold
    return rep


def plank_start_hom(p: str, q: str, start: int) -> bool:
    sets = _reachable(p, q, 1 << start)
    return len(sets) == len(p) + 1 and sets[-1] != 0
