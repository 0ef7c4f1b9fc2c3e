"""Independent brute-force oracles.

Everything here enumerates naively (multiset products, full coloring
enumeration, assignment search) so it shares no code path with the package
implementations it checks.
"""

from itertools import combinations, combinations_with_replacement, product


def brute_has_solution(values, a, b):
    vals = sorted(values)
    if not vals:
        return False
    right_sums = {sum(c) for c in combinations_with_replacement(vals, b)}
    return any(sum(c) in right_sums for c in combinations_with_replacement(vals, a))


def brute_min_m(values, m_max):
    for m in range(1, m_max + 1):
        if brute_has_solution(values, m + 1, m):
            return m
    return None


def brute_avoidance_exists(n, r, a, b):
    """Full enumeration of all r^n colorings of [1..n]."""
    for assignment in product(range(1, r + 1), repeat=n):
        classes = [
            [i + 1 for i, c in enumerate(assignment) if c == col]
            for col in range(1, r + 1)
        ]
        if all(not brute_has_solution(cls, a, b) for cls in classes):
            return True
    return False


def brute_chromatic(vertices, edges):
    vs = sorted(set(vertices))
    if not vs:
        return 0
    es = [tuple(e) for e in edges]
    for k in range(1, len(vs) + 1):
        for colors in product(range(k), repeat=len(vs)):
            cmap = dict(zip(vs, colors))
            if all(cmap[u] != cmap[v] for u, v in es):
                return k
    raise AssertionError("unreachable: n colors always suffice")


def brute_is_minimal_zero_sum(terms):
    terms = tuple(terms)
    if not terms or sum(terms) != 0:
        return False
    for size in range(1, len(terms)):
        for idx in combinations(range(len(terms)), size):
            if sum(terms[i] for i in idx) == 0:
                return False
    return True


def subsets_of(universe):
    us = sorted(universe)
    for mask in range(1 << len(us)):
        yield {us[i] for i in range(len(us)) if mask >> i & 1}


def witness_is_valid(w, values=None, sizes=None):
    ok = sum(w.left) == sum(w.right) and len(w.left) >= 1 and len(w.right) >= 1
    if values is not None:
        ok = ok and set(w.left) | set(w.right) <= set(values)
    if sizes is not None:
        ok = ok and (len(w.left), len(w.right)) == sizes
    return ok
