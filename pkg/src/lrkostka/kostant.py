"""Kostant partition function for the positive roots e_i - e_j (i < j) of A_{n-1}."""

from itertools import accumulate


def positive_roots(n):
    """Positive roots as index pairs (i, j), i < j, in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def kostant_partition(v, cache=None):
    """Number of ways to write ``v`` as a non-negative integer combination of
    the positive roots e_i - e_j.

    Roots are consumed in lexicographic order. When the search reaches root
    (i, j), coordinates before i are already zero, so the coefficient of
    (i, j) is bounded by the current v[i], and the last root leaving i is
    forced to absorb all of it.

    ``cache`` may be a dict shared between calls; keys are (root index,
    vector) and entries are never overwritten with a different value.
    """
    v = tuple(v)
    n = len(v)
    if n == 0:
        return 1
    if sum(v) != 0 or any(s < 0 for s in accumulate(v)):
        return 0
    if cache is None:
        cache = {}
    roots = positive_roots(n)
    return _count(v, 0, roots, cache)


def _count(v, k, roots, cache):
    if k == len(roots):
        return 1 if not any(v) else 0
    key = (k, v)
    hit = cache.get(key)
    if hit is not None:
        return hit

    i, j = roots[k]
    budget = v[i]
    if budget < 0:
        result = 0
    elif j == len(v) - 1:
        w = list(v)
        w[i] = 0
        w[j] += budget
        result = _count(tuple(w), k + 1, roots, cache)
    else:
        result = 0
        w = list(v)
        for c in range(budget + 1):
            w[i] = budget - c
            w[j] = v[j] + c
            result += _count(tuple(w), k + 1, roots, cache)
    cache[key] = result
    return result

