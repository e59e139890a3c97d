"""Semistandard tableaux, Kostka numbers and the Littlewood-Richardson rule."""

from dataclasses import dataclass
from functools import lru_cache

from .kostant import kostant_partition
from .partitions import (
    PartitionError,
    add,
    as_partition,
    is_dominated,
    length,
    pad,
    signed_permutations,
    staircase,
    strip,
    sub,
)


@dataclass(frozen=True)
class Tableau:
    """A filling of the skew shape outer/inner, stored row by row.

    ``rows[i]`` holds the entries of row i left to right, skipping the first
    ``inner[i]`` boxes. A straight shape has ``inner == ()``.
    """

    rows: tuple
    inner: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        object.__setattr__(self, "inner", pad(strip(self.inner), len(self.rows)) if self.rows else ())

    @property
    def shape(self):
        return tuple(i + len(r) for i, r in zip(self.inner, self.rows))

    def content(self, n=None):
        top = max((x for r in self.rows for x in r), default=0)
        counts = [0] * (top if n is None else max(n, top))
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def entry(self, i, j):
        """Entry at absolute column j of row i, or None if the box is not filled."""
        if i >= len(self.rows):
            return None
        k = j - self.inner[i]
        if 0 <= k < len(self.rows[i]):
            return self.rows[i][k]
        return None

    def is_semistandard(self):
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return False
        if any(a < b for a, b in zip(self.inner, self.inner[1:])):
            return False
        for i, row in enumerate(self.rows):
            if any(x < 1 for x in row):
                return False
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            if i == 0:
                continue
            for j in range(self.inner[i], shape[i]):
                above = self.entry(i - 1, j)
                if above is not None and above >= self.entry(i, j):
                    return False
                if above is None and j >= self.inner[i - 1]:
                    return False
        return True

    def reverse_reading_word(self):
        """Entries read right to left along rows, top row first."""
        return [x for r in self.rows for x in reversed(r)]

    def __str__(self):
        return "\n".join(
            " " * (2 * i) + " ".join(str(x) for x in r) for i, r in zip(self.inner, self.rows)
        )


def is_lattice_word(word):
    """Every prefix has at least as many i's as (i+1)'s, for every i."""
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def iter_ssyt(shape, content=None, max_entry=None):
    """Yield every SSYT of ``shape`` as a list of rows, filling boxes row-major.

    Either ``content`` (exact letter counts) or ``max_entry`` bounds the
    alphabet. The search prunes letters too small for their row and letters
    too large to leave room for the column below.
    """
    shape = strip(as_partition(shape))
    if content is not None:
        content = tuple(content)
        if any(c < 0 for c in content):
            raise PartitionError(f"negative content {content}")
        if sum(content) != sum(shape):
            return
        top = len(content)
        remaining = list(content)
    else:
        if max_entry is None:
            raise ValueError("need content or max_entry")
        top = max_entry
        remaining = None
    if len(shape) > top:
        return

    height = [sum(1 for p in shape if p > j) for j in range(shape[0] if shape else 0)]
    grid = [[0] * p for p in shape]
    boxes = [(i, j) for i, p in enumerate(shape) for j in range(p)]

    def fill(b):
        if b == len(boxes):
            yield [list(r) for r in grid]
            return
        i, j = boxes[b]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        hi = top - (height[j] - i - 1)
        for x in range(lo, hi + 1):
            if remaining is not None:
                if not remaining[x - 1]:
                    continue
                remaining[x - 1] -= 1
            grid[i][j] = x
            yield from fill(b + 1)
            if remaining is not None:
                remaining[x - 1] += 1
        grid[i][j] = 0

    yield from fill(0)


def semistandard_tableaux(shape, content=None, max_entry=None):
    """List form of :func:`iter_ssyt`, as Tableau objects."""
    return [Tableau(rows) for rows in iter_ssyt(shape, content, max_entry)]


def kostka_ssyt(shape, content):
    """Number of SSYT of ``shape`` with content[i] copies of letter i+1.

    Counts chains of horizontal strips: the boxes holding the largest letter
    form a horizontal strip whose removal leaves an SSYT on the remaining
    letters. ``content`` may be any non-negative vector, not just a partition.
    """
    shape = strip(as_partition(shape))
    content = tuple(content)
    if any(c < 0 for c in content):
        raise PartitionError(f"negative content {content}")
    if sum(content) != sum(shape):
        return 0
    return _kostka(shape, content)


@lru_cache(maxsize=None)
def _kostka(shape, content):
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content):
        return 0
    last = content[-1]
    rest = content[:-1]
    total = 0
    for inner in _strip_removals(shape, last):
        total += _kostka(strip(inner), rest)
    return total


def _strip_removals(shape, size):
    """Shapes ``inner`` with shape/inner a horizontal strip of ``size`` boxes.

    Horizontal strip means shape[i+1] <= inner[i] <= shape[i].
    """
    n = len(shape)
    out = []
    inner = [0] * n

    def choose(i, left):
        if i == n:
            if left == 0:
                out.append(tuple(inner))
            return
        below = shape[i + 1] if i + 1 < n else 0
        most = shape[i] - below
        for take in range(min(most, left) + 1):
            inner[i] = shape[i] - take
            choose(i + 1, left - take)

    choose(0, size)
    return out


def kostka_kostant(shape, content, n=None, cache=None):
    """Kostka number as an alternating sum of Kostant partition functions,
    summed over every permutation of shape + staircase."""
    shape = as_partition(shape)
    content = tuple(content)
    if n is None:
        n = max(length(shape), len(content), 1)
    shape = pad(shape, n)
    content = pad(content, n)
    rho = staircase(n)
    shifted = add(shape, rho)
    target = add(content, rho)
    if cache is None:
        cache = {}
    total = 0
    for perm, sign in signed_permutations(n):
        moved = tuple(shifted[p] for p in perm)
        total += sign * kostant_partition(sub(moved, target), cache)
    return total


def dominance_filling(mu, xi):
    """Fill shape ``mu`` with content ``xi`` by placing the largest letter first.

    The copies of the largest letter k go bottom-up, right to left: row i
    takes at most mu[i] - mu[i+1] of them (measured before this letter), so
    they form a horizontal strip at the right ends of the rows. Then the same
    step repeats on the unfilled shape with letter k-1.

    Returns the rows and the list of ``(letter, unfilled shape)`` after each
    letter is placed.
    """
    mu = strip(as_partition(mu))
    xi = as_partition(xi)
    if not is_dominated(xi, mu):
        raise PartitionError(f"{xi} is not dominated by {mu}; no SSYT exists")
    m = len(mu)
    current = list(mu)
    rows = [[0] * p for p in mu]
    trace = []
    for letter in range(len(xi), 0, -1):
        left = xi[letter - 1]
        if left == 0:
            continue
        before = current[:]
        for i in range(m - 1, -1, -1):
            if not left:
                break
            below = before[i + 1] if i + 1 < m else 0
            take = min(before[i] - below, left)
            for j in range(before[i] - take, before[i]):
                rows[i][j] = letter
            current[i] -= take
            left -= take
        if left:
            raise AssertionError(f"letter {letter} did not fit into {before}")
        trace.append((letter, tuple(current)))
    return rows, trace


def construct_ssyt(mu, xi):
    """An SSYT of shape ``mu`` and content ``xi``; requires xi ⊴ mu."""
    rows, _ = dominance_filling(mu, xi)
    return Tableau(rows)


def lr_rule_count(outer, inner, content):
    """Littlewood-Richardson coefficient c^{outer}_{inner, content} by the LR rule.

    Counts SSYT of skew shape outer/inner with the given content whose
    reverse reading word (rows top to bottom, each right to left) is a
    lattice word. Boxes are filled in that reading order, so the lattice
    condition is checked incrementally.
    """
    outer = strip(as_partition(outer))
    inner = strip(as_partition(inner))
    content = strip(as_partition(content))
    if sum(outer) != sum(inner) + sum(content):
        return 0
    if len(inner) > len(outer):
        return 0
    n = len(outer)
    inner = pad(inner, n)
    if any(a < b for a, b in zip(outer, inner)):
        return 0

    boxes = [(i, j) for i in range(n) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    grid = [[0] * p for p in outer]
    used = [0] * (len(content) + 1)

    def fill(b):
        if b == len(boxes):
            return 1
        i, j = boxes[b]
        # right neighbour is filled already; entries weakly decrease leftwards
        hi = grid[i][j + 1] if j + 1 < outer[i] else len(content)
        lo = 1
        if i > 0 and j >= inner[i - 1]:
            lo = grid[i - 1][j] + 1
        # letter x sits in row >= x - 1 (0-based) in any lattice filling
        hi = min(hi, i + 1)
        count = 0
        for x in range(lo, hi + 1):
            if used[x] >= content[x - 1]:
                continue
            if x > 1 and used[x] + 1 > used[x - 1]:
                continue
            used[x] += 1
            grid[i][j] = x
            count += fill(b + 1)
            used[x] -= 1
        grid[i][j] = 0
        return count

    return fill(0)

