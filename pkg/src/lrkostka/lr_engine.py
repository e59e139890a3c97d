"""Littlewood-Richardson coefficients from Kostka numbers and Kostant partition functions.

Every routine takes partitions padded to a common length ``n`` and works with
the staircase-shifted vectors lambda + rho and nu + rho, whose entries are
strictly decreasing.
"""

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .kostant import kostant_partition
from .partitions import (
    PartitionError,
    SizeError,
    add,
    as_partition,
    common_length,
    distinct_rearrangements,
    enumerate_dominated,
    is_dominated,
    pad,
    permutation_sign,
    signed_permutations,
    sort_with_sign,
    staircase,
    sub,
)
from .tableaux import kostka_kostant, kostka_ssyt, lr_rule_count

STEINBERG_MAX_N = 6


def _kostka_fn(method):
    if method == "ssyt":
        return kostka_ssyt
    if method == "kostant":
        cache = {}
        return lambda shape, content: kostka_kostant(shape, content, cache=cache)
    raise ValueError(f"unknown kostka method {method!r}")


def _prepare(n, *parts):
    parts = [as_partition(p) for p in parts]
    need = common_length(*parts)
    if n is None:
        n = max(need, 1)
    elif n < need:
        raise PartitionError(f"n={n} is smaller than the number of parts {need}")
    return n, [pad(p, n) for p in parts]


class SignedKostkaTerm(NamedTuple):
    perm: tuple
    sign: int
    vector: tuple       # w(nu + rho) - (lambda + rho)
    candidate: tuple    # vector sorted descending
    dominated: bool     # candidate is a partition with candidate ⊴ mu
    kostka: int         # K_{mu, candidate}, 0 when not dominated


def signed_kostka_terms(lam, mu, nu, n=None, kostka="ssyt"):
    """One term per permutation w of nu + rho, in itertools order."""
    n, (lam, mu, nu) = _prepare(n, lam, mu, nu)
    K = _kostka_fn(kostka)
    rho = staircase(n)
    shifted_nu = add(nu, rho)
    shifted_lam = add(lam, rho)
    terms = []
    for perm, sign in signed_permutations(n):
        vector = sub(tuple(shifted_nu[p] for p in perm), shifted_lam)
        candidate = tuple(sorted(vector, reverse=True))
        ok = candidate[-1] >= 0 and is_dominated(candidate, mu)
        terms.append(SignedKostkaTerm(perm, sign, vector, candidate, ok, K(mu, candidate) if ok else 0))
    return terms


def lr_signed_kostka(lam, mu, nu, n=None, kostka="ssyt"):
    """c^nu_{lam,mu} as the signed sum of K_{mu, psi} over permutations of nu + rho.

    Vectors with a negative entry, or whose sorted form is not dominated by
    mu, contribute nothing.
    """
    n, (lam, mu, nu) = _prepare(n, lam, mu, nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return sum(t.sign * t.kostka for t in signed_kostka_terms(lam, mu, nu, n, kostka) if t.dominated)


def signed_matchings(psi, shifted_lam, shifted_nu):
    """Signed count of permutations w with sort(w(nu+rho) - (lam+rho)) = psi.

    Position i carries offset shifted_lam[i] and is matched to an unused
    entry k of nu+rho whose difference is still available in psi's multiset.
    Every complete matching is one permutation; its sign is added. Several
    matchings can exist for one psi and their signs may cancel, so all of
    them are enumerated.
    """
    n = len(psi)
    need = Counter(psi)
    taken = [False] * n
    assign = [0] * n

    def match(i):
        if i == n:
            return permutation_sign(assign)
        total = 0
        for k in range(n):
            if taken[k]:
                continue
            diff = shifted_nu[k] - shifted_lam[i]
            if need[diff] <= 0:
                continue
            need[diff] -= 1
            taken[k] = True
            assign[i] = k
            total += match(i + 1)
            taken[k] = False
            need[diff] += 1
        return total

    return match(0)


def lr_matching(lam, mu, nu, n=None, kostka="ssyt"):
    """c^nu_{lam,mu} by listing psi ⊴ mu first, then matching each psi against nu + rho."""
    n, (lam, mu, nu) = _prepare(n, lam, mu, nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    K = _kostka_fn(kostka)
    rho = staircase(n)
    shifted_lam = add(lam, rho)
    shifted_nu = add(nu, rho)
    total = 0
    for psi in enumerate_dominated(mu, n):
        signed = signed_matchings(psi, shifted_lam, shifted_nu)
        if signed:
            total += signed * K(mu, psi)
    return total


def lr_steinberg(lam, mu, nu, n=None, cache=None):
    """c^nu_{lam,mu} as the double alternating sum of Kostant partition functions.

    Sums sign(s)·sign(t)·P(s(lam+rho) + t(mu+rho) - (nu + 2 rho)) over all
    pairs of permutations, i.e. (n!)^2 terms; ``n`` is capped at 6.
    """
    n, (lam, mu, nu) = _prepare(n, lam, mu, nu)
    if n > STEINBERG_MAX_N:
        raise SizeError(f"Steinberg sum needs (n!)^2 terms; n={n} exceeds {STEINBERG_MAX_N}")
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    rho = staircase(n)
    a = add(lam, rho)
    b = add(mu, rho)
    target = add(nu, add(rho, rho))
    if cache is None:
        cache = {}
    perms = list(signed_permutations(n))
    moved_b = [(tuple(b[p] for p in perm), sign) for perm, sign in perms]
    total = 0
    for perm, sign in perms:
        base = sub(tuple(a[p] for p in perm), target)
        for mb, sign_b in moved_b:
            total += sign * sign_b * kostant_partition(add(base, mb), cache)
    return total


def lr_oracle(lam, mu, nu, n=None):
    _prepare(n, lam, mu, nu)
    return lr_rule_count(nu, lam, mu)


LR_METHODS = {
    "signed": lr_signed_kostka,
    "matching": lr_matching,
    "steinberg": lr_steinberg,
    "oracle": lr_oracle,
}


def lr_coefficient(lam, mu, nu, n=None, method="matching", kostka="ssyt"):
    """Dispatch to one of LR_METHODS; ``kostka`` applies to signed and matching."""
    try:
        fn = LR_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(LR_METHODS)}") from None
    if method in ("signed", "matching"):
        return fn(lam, mu, nu, n, kostka=kostka)
    return fn(lam, mu, nu, n)


def schur_product_expand(lam, mu, n=None, kostka="ssyt"):
    """Expand S_lam · S_mu in the Schur basis.

    For every psi ⊴ mu and every distinct rearrangement r of psi, the vector
    lam + r + rho either has a repeated entry (the term vanishes) or sorts
    to a strictly decreasing vector with some sign; subtracting rho gives
    the partition receiving sign · K_{mu, psi}.

    Returns a dict from partition (length n) to nonzero coefficient.
    """
    n, (lam, mu) = _prepare(n, lam, mu)
    K = _kostka_fn(kostka)
    rho = staircase(n)
    shifted_lam = add(lam, rho)
    terms = {}
    for psi in enumerate_dominated(mu, n):
        mult = K(mu, psi)
        if not mult:
            continue
        for r in distinct_rearrangements(psi):
            s = sort_with_sign(add(shifted_lam, r))
            if s.degenerate:
                continue
            nu = sub(s.sorted, rho)
            terms[nu] = terms.get(nu, 0) + s.sign * mult
    return {nu: c for nu, c in terms.items() if c}


def sorted_expansion(expansion):
    """Items of a Schur expansion, descending lexicographic by partition."""
    return sorted(expansion.items(), reverse=True)


@dataclass(frozen=True)
class KingPair:
    sigma: tuple
    tau: tuple


def king_embedding(mu):
    """Suffix sums of mu: tau_i = mu_i + mu_{i+1} + ..., sigma_i = mu_{i+1} + ....

    For every lam, K_{lam, mu} = c^tau_{sigma, lam}: the skew shape tau/sigma
    is a disjoint union of rows of lengths mu_1, mu_2, ....
    """
    mu = as_partition(mu)
    tau = []
    running = 0
    for part in reversed(mu):
        running += part
        tau.append(running)
    tau.reverse()
    sigma = tau[1:] + [0] if tau else []
    return KingPair(tuple(sigma), tuple(tau))


def kostka_via_king(lam, mu):
    pair = king_embedding(mu)
    return lr_rule_count(pair.tau, pair.sigma, lam)
