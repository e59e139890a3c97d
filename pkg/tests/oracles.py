"""Brute-force oracles for the test suite.

Nothing here imports the package: each function recomputes its quantity by
the most direct enumeration available, so agreement is evidence of
correctness rather than of shared code.
"""

from itertools import accumulate, permutations, product


def brute_partitions(total, n):
    """Partitions of ``total`` with at most n parts, padded to length n."""
    return sorted(
        (p for p in product(range(total + 1), repeat=n)
         if sum(p) == total and all(a >= b for a, b in zip(p, p[1:]))),
        reverse=True,
    )


def brute_dominated(xi, mu):
    n = max(len(xi), len(mu))
    xi = tuple(xi) + (0,) * (n - len(xi))
    mu = tuple(mu) + (0,) * (n - len(mu))
    return sum(xi) == sum(mu) and all(
        sum(xi[: i + 1]) <= sum(mu[: i + 1]) for i in range(n)
    )


def inversion_sign(v):
    inv = sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] < v[j])
    return -1 if inv % 2 else 1


def _valid_skew(outer, inner, grid):
    """grid maps (row, col) -> letter for every box of outer/inner."""
    for (i, j), x in grid.items():
        if (i, j + 1) in grid and grid[(i, j + 1)] < x:
            return False
        if (i + 1, j) in grid and grid[(i + 1, j)] <= x:
            return False
    return True


def _boxes(outer, inner=()):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]


def brute_fillings(outer, content, inner=()):
    """Every SSYT of skew shape outer/inner with the given content, as dicts."""
    boxes = _boxes(outer, inner)
    letters = [i + 1 for i, c in enumerate(content) for _ in range(c)]
    if len(letters) != len(boxes):
        return []
    out = []
    for word in set(permutations(letters)):
        grid = dict(zip(boxes, word))
        if _valid_skew(outer, inner, grid):
            out.append(grid)
    return out


def brute_kostka(shape, content):
    return len(brute_fillings(shape, content))


def _lattice(word):
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def brute_lr(outer, inner, content):
    """c^outer_{inner,content}: skew SSYT with a lattice reverse reading word."""
    n = len(outer)
    inner = tuple(inner) + (0,) * (n - len(inner))
    if any(a < b for a, b in zip(outer, inner)):
        return 0
    count = 0
    for grid in brute_fillings(outer, content, inner):
        word = [grid[(i, j)] for i in range(n) for j in range(outer[i] - 1, inner[i] - 1, -1)]
        if _lattice(word):
            count += 1
    return count


def positive_roots(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def brute_kostant(v):
    """Try every coefficient vector for the positive roots up to a global bound.

    No coefficient can exceed the largest prefix sum of v, since each root
    e_i - e_j adds one to prefix sums i..j-1.
    """
    v = tuple(v)
    n = len(v)
    if sum(v) != 0:
        return 0
    roots = positive_roots(n)
    bound = max(0, max(accumulate(v)))
    count = 0
    for coeffs in product(range(bound + 1), repeat=len(roots)):
        w = [0] * n
        for (i, j), c in zip(roots, coeffs):
            w[i] += c
            w[j] -= c
        if tuple(w) == v:
            count += 1
    return count


def brute_polynomial_schur(lam, n):
    """Dict exponent -> coefficient summing x^content over brute-force SSYT."""
    lam = tuple(p for p in lam if p)
    terms = {}
    size = sum(lam)
    for content in product(range(size + 1), repeat=n):
        if sum(content) != size:
            continue
        k = brute_kostka(lam, content) if lam else 1
        if k:
            terms[content] = k
    return terms
