"""Pure-Python backtracking core for finite constraint search.

The problem format is shared with the compiled module ``_homsearch``:

* ``n`` variables, ``m`` target values;
* ``domains``: per variable a sorted list of allowed values;
* ``constraints``: ``(scope, keys, positive)`` where ``scope`` is a tuple of
  variable indices, ``keys`` a sorted list of encoded value tuples
  (``sum(t[j] * m**j)``) and ``positive`` says whether the assigned tuple must
  be among the keys (True) or must avoid them (False);
* ``order``: the variable order used for branching;
* ``injective``: forbid two variables taking the same value;
* ``limit``: stop after that many solutions (0 means enumerate all).

Values are tried in increasing order, so both backends return solutions in
the same order.
"""


def search(n, m, domains, constraints, order, injective, limit):
    doms = [set(d) for d in domains]
    if any(not d for d in doms):
        return []
    if n == 0:
        return [()]
    cons = [(tuple(scope), frozenset(keys), bool(pos)) for scope, keys, pos in constraints]
    by_var = [[] for _ in range(n)]
    for ci, (scope, _, _) in enumerate(cons):
        for v in set(scope):
            by_var[v].append(ci)
    powers = [m ** j for j in range(max((len(c[0]) for c in cons), default=0) + 1)]
    assign = [-1] * n
    used = set()
    trail = []
    out = []

    def key_of(scope, u=-1, x=-1):
        k = 0
        for j, w in enumerate(scope):
            k += (x if w == u else assign[w]) * powers[j]
        return k

    def prune(u, x):
        doms[u].discard(x)
        trail.append((u, x))
        return bool(doms[u])

    def propagate(v):
        for ci in by_var[v]:
            scope, keys, pos = cons[ci]
            free = {w for w in scope if assign[w] < 0}
            if not free:
                if (key_of(scope) in keys) != pos:
                    return False
            elif len(free) == 1:
                (u,) = free
                for x in sorted(doms[u]):
                    if (key_of(scope, u, x) in keys) != pos:
                        if not prune(u, x):
                            return False
        if injective:
            x = assign[v]
            for u in range(n):
                if assign[u] < 0 and x in doms[u]:
                    if not prune(u, x):
                        return False
        return True

    def rec(d):
        if d == n:
            out.append(tuple(assign))
            return limit and len(out) >= limit
        v = order[d]
        for x in sorted(doms[v]):
            if injective and x in used:
                continue
            mark = len(trail)
            assign[v] = x
            if injective:
                used.add(x)
            if propagate(v) and rec(d + 1):
                return True
            while len(trail) > mark:
                u, y = trail.pop()
                doms[u].add(y)
            assign[v] = -1
            used.discard(x)
        return False

    rec(0)
    return out
