"""Integer partitions, weight vectors and the dominance order.

Partitions and weight vectors are plain tuples of ints. Partitions are
weakly decreasing and non-negative; weight vectors carry no constraint.
Functions that combine several partitions pad them with trailing zeros to a
common length ``n``.
"""

from collections import Counter
from itertools import accumulate, permutations
from math import factorial
from typing import NamedTuple

# Documented desk-scale bounds for user-facing entry points.
MAX_CONTENT = 40
MAX_LENGTH = 8


class PartitionError(ValueError):
    """Raised for malformed partitions or weight vectors."""


class SizeError(ValueError):
    """Raised when an input exceeds a documented size bound."""


class SignedSort(NamedTuple):
    sorted: tuple
    sign: int
    degenerate: bool


def parse_vector(text):
    """Parse ``"2,0,-2"`` into ``(2, 0, -2)``. The empty string is ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise PartitionError(f"cannot parse integer vector {text!r}") from None


def as_partition(parts):
    """Validate ``parts`` as a partition and return it as a tuple.

    Unsorted input is rejected rather than sorted, so caller mistakes surface.
    """
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int):
            raise PartitionError(f"non-integer part {p!r} in {parts}")
        if p < 0:
            raise PartitionError(f"negative part in {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise PartitionError(f"{parts} is not weakly decreasing")
    return parts


def parse_partition(text):
    return as_partition(parse_vector(text))


def length(parts):
    """Number of nonzero parts."""
    return sum(1 for p in parts if p)


def strip(parts):
    """Drop trailing zeros."""
    parts = tuple(parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def pad(parts, n):
    """Zero-pad ``parts`` to length ``n``.

    Only trailing zeros may be removed when ``parts`` is longer than ``n``.
    """
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise PartitionError(f"{parts} has more than {n} parts")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


def common_length(*parts_list):
    return max((length(p) for p in parts_list), default=0)


def check_bounds(*parts_list, n=None, max_content=MAX_CONTENT, max_length=MAX_LENGTH):
    """Raise SizeError if the inputs exceed the supported desk-scale bounds."""
    total = sum(sum(p) for p in parts_list)
    if total > max_content:
        raise SizeError(f"total content {total} exceeds bound {max_content}")
    if n is None:
        n = common_length(*parts_list)
    if n > max_length:
        raise SizeError(f"length {n} exceeds bound {max_length}")


def is_dominated(xi, mu):
    """True iff ``xi`` is below ``mu`` in dominance order.

    Requires equal content and every prefix sum of ``xi`` at most the
    corresponding prefix sum of ``mu``.
    """
    n = max(len(xi), len(mu))
    xi, mu = pad(xi, n), pad(mu, n)
    if sum(xi) != sum(mu):
        return False
    return all(a <= b for a, b in zip(accumulate(xi), accumulate(mu)))


def partitions_of(total, n, largest=None):
    """Partitions of ``total`` with at most ``n`` parts, padded to length n,
    in descending lexicographic order."""
    if largest is None:
        largest = total
    if n == 0:
        if total == 0:
            yield ()
        return
    if total == 0:
        yield (0,) * n
        return
    # remaining n parts each ≤ first part
    for first in range(min(total, largest), -1, -1):
        if first * n < total:
            break
        for rest in partitions_of(total - first, n - 1, first):
            yield (first,) + rest


def enumerate_dominated(mu, n):
    """All partitions ``psi`` of |mu| with at most ``n`` parts and psi ⊴ mu.

    Recursive descent over parts; part i is capped by the previous part and
    by the slack between the prefix sums of mu and psi. Output is descending
    lexicographic.
    """
    if length(mu) > n:
        raise PartitionError(f"{mu} has more than {n} parts")
    mu = pad(mu, n)
    total = sum(mu)
    bounds = list(accumulate(mu))
    out = []

    def descend(i, prefix, prev, acc):
        if i == n:
            if acc == total:
                out.append(tuple(prefix))
            return
        left = total - acc
        slots = n - i
        hi = min(prev, bounds[i] - acc, left)
        # ceil(left / slots) is the least the current part can be
        lo = -(-left // slots)
        for part in range(hi, lo - 1, -1):
            prefix.append(part)
            descend(i + 1, prefix, part, acc + part)
            prefix.pop()

    descend(0, [], total, 0)
    return out


def staircase(n):
    """The integral staircase (n-1, n-2, ..., 0)."""
    return tuple(range(n - 1, -1, -1))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def permutation_sign(perm):
    """Parity of a permutation of range(len(perm)), by cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, cycle = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def signed_permutations(n):
    """Yield ``(perm, sign)`` for every permutation of range(n)."""
    for perm in permutations(range(n)):
        yield perm, permutation_sign(perm)


def sort_with_sign(v):
    """Sort ``v`` strictly decreasing and report the parity of the sort.

    A repeated entry makes the result degenerate: the corresponding
    alternant vanishes, and ``sorted``/``sign`` carry no meaning.
    """
    v = tuple(v)
    if len(set(v)) != len(v):
        return SignedSort(v, 0, True)
    order = sorted(range(len(v)), key=lambda i: -v[i])
    return SignedSort(tuple(v[i] for i in order), permutation_sign(order), False)


def distinct_rearrangements(xi):
    """Each distinct rearrangement of ``xi`` exactly once (cosets of its stabilizer).

    Emitted in descending lexicographic order.
    """
    counts = Counter(xi)
    values = sorted(counts, reverse=True)
    n = len(xi)
    out = []
    current = []

    def build():
        if len(current) == n:
            out.append(tuple(current))
            return
        for value in values:
            if counts[value]:
                counts[value] -= 1
                current.append(value)
                build()
                current.pop()
                counts[value] += 1

    build()
    return out


def stabilizer_order(xi):
    """Order of the subgroup of S_n fixing ``xi``."""
    order = 1
    for mult in Counter(xi).values():
        order *= factorial(mult)
    return order


def format_vector(v):
    return ",".join(str(x) for x in v)
