"""Exact sparse polynomials over the integers and the Schur basis.

Schur polynomials are built as sums of SSYT content monomials, so no
polynomial division is ever needed. The bialternant identity is checked in
the tests by multiplying through by the Vandermonde alternant instead.
"""

from functools import lru_cache
from itertools import product

from .partitions import PartitionError, SizeError, as_partition, partitions_of, signed_permutations, strip
from .tableaux import iter_ssyt

CAUCHY_MAX_N = 3
CAUCHY_MAX_DEG = 8


class NotSymmetricError(ValueError):
    pass


class DecompositionError(RuntimeError):
    pass


class SparsePolynomial:
    """Immutable polynomial in ``nvars`` variables: exponent tuple -> nonzero int."""

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms, nvars):
        clean = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} does not have {nvars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self.nvars = nvars

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i, nvars):
        exps = [0] * nvars
        exps[i] = 1
        return cls({tuple(exps): 1}, nvars)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms sorted descending lexicographically by exponent."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(out, self.nvars)

    def __neg__(self):
        return SparsePolynomial({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return SparsePolynomial({e: k * c for e, c in self._terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def degrees(self):
        return {sum(e) for e in self._terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def swap(self, i, j):
        def sw(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)

        return SparsePolynomial({sw(e): c for e, c in self._terms.items()}, self.nvars)

    def is_symmetric(self):
        return all(self.swap(i, i + 1) == self for i in range(self.nvars - 1))

    def truncate(self, maxdeg):
        return SparsePolynomial({e: c for e, c in self._terms.items() if sum(e) <= maxdeg}, self.nvars)

    def evaluate(self, point):
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x**k
            total += term
        return total

    def format_terms(self, names=None):
        """One string per term, ``"coeff * x1^a x2^b"``, zero exponents omitted."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        lines = []
        for e, c in self.items():
            mono = " ".join(f"{names[i]}^{k}" for i, k in enumerate(e) if k)
            lines.append(f"{c} * {mono or '1'}")
        return lines

    def __repr__(self):
        body = " + ".join(self.format_terms()) or "0"
        return f"SparsePolynomial({body}; nvars={self.nvars})"


def multiply(p, q, maxdeg=None):
    """Exact product of two polynomials; terms above ``maxdeg`` are dropped."""
    p._check(q)
    out = {}
    for e1, c1 in p._terms.items():
        d1 = sum(e1)
        for e2, c2 in q._terms.items():
            if maxdeg is not None and d1 + sum(e2) > maxdeg:
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return SparsePolynomial(out, p.nvars)


def schur_polynomial(lam, n):
    """S_lam in n variables as the sum of x^content over SSYT with entries <= n."""
    lam = strip(as_partition(lam))
    if len(lam) > n:
        raise PartitionError(f"{lam} has more than {n} parts")
    return _schur(lam, n)


@lru_cache(maxsize=None)
def _schur(lam, n):
    terms = {}
    for rows in iter_ssyt(lam, max_entry=n):
        exps = [0] * n
        for row in rows:
            for x in row:
                exps[x - 1] += 1
        exps = tuple(exps)
        terms[exps] = terms.get(exps, 0) + 1
    return SparsePolynomial(terms, n)


def compositions(total, n):
    """All length-n non-negative integer vectors summing to ``total``."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def complete_homogeneous(k, n):
    """H_k: the sum of every degree-k monomial in n variables."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    return SparsePolynomial({e: 1 for e in compositions(k, n)}, n)


def complete_homogeneous_product(mu, n):
    """H_mu = H_{mu_1} H_{mu_2} ..."""
    out = SparsePolynomial.constant(1, n)
    for part in mu:
        out = multiply(out, complete_homogeneous(part, n))
    return out


def alternant(exponents, n):
    """det(x_i^{exponents_j}) expanded by permutations."""
    exponents = tuple(exponents)
    terms = {}
    for perm, sign in signed_permutations(n):
        e = tuple(exponents[perm[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + sign
    return SparsePolynomial(terms, n)


def schur_decompose(p):
    """Coordinates of a symmetric homogeneous polynomial in the Schur basis.

    Repeatedly takes the lexicographically largest exponent, which for a
    symmetric polynomial is a partition, and subtracts that multiple of the
    corresponding Schur polynomial. Returns a dict partition -> coefficient.
    """
    if not p.is_symmetric():
        raise NotSymmetricError("polynomial is not symmetric")
    if not p.is_homogeneous():
        raise NotSymmetricError("polynomial is not homogeneous")
    n = p.nvars
    out = {}
    rest = p
    for _ in range(len(p) + 1):
        if not rest:
            return out
        lead, c = max(rest._terms.items())
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise DecompositionError(f"leading exponent {lead} is not a partition")
        out[lead] = c
        rest = rest - schur_polynomial(lead, n).scale(c)
    if rest:
        raise DecompositionError("peeling did not terminate")
    return out


def embed(p, offset, nvars):
    """Place the variables of ``p`` at positions offset.. of an nvars-variable ring."""
    terms = {}
    for e, c in p._terms.items():
        full = [0] * nvars
        full[offset:offset + p.nvars] = e
        terms[tuple(full)] = c
    return SparsePolynomial(terms, nvars)


def cauchy_sides(n, maxdeg):
    """Both sides of the Cauchy identity in 2n variables (x's, then y's),
    truncated at total degree ``maxdeg``."""
    if n > CAUCHY_MAX_N or maxdeg > CAUCHY_MAX_DEG:
        raise SizeError(f"cauchy check bounded by n <= {CAUCHY_MAX_N}, maxdeg <= {CAUCHY_MAX_DEG}")
    if n < 1 or maxdeg < 0:
        raise ValueError("need n >= 1 and maxdeg >= 0")
    nv = 2 * n
    left = SparsePolynomial.constant(1, nv)
    for i, j in product(range(n), repeat=2):
        # 1/(1 - x_i y_j) = sum_k (x_i y_j)^k, each power of degree 2k
        series = {}
        for k in range(maxdeg // 2 + 1):
            e = [0] * nv
            e[i] = k
            e[n + j] = k
            series[tuple(e)] = 1
        left = multiply(left, SparsePolynomial(series, nv), maxdeg)

    right = SparsePolynomial({}, nv)
    for size in range(maxdeg // 2 + 1):
        for mu in partitions_of(size, n):
            s = schur_polynomial(mu, n)
            right = right + multiply(embed(s, 0, nv), embed(s, n, nv))
    return left, right


def cauchy_truncated_check(n, maxdeg):
    left, right = cauchy_sides(n, maxdeg)
    return left == right


def dimension(lam, n):
    """Number of SSYT of shape lam with entries <= n, i.e. S_lam(1, ..., 1)."""
    return schur_polynomial(lam, n).evaluate([1] * n)
