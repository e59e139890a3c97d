"""Exit criteria. Each test prints one PASS/FAIL line with its runtime.

All comparisons are exact integer equality; each criterion also carries a
wall-clock limit.
"""

import time
from contextlib import contextmanager
from itertools import permutations

from lrkostka.lr_engine import (
    king_embedding,
    lr_matching,
    lr_signed_kostka,
    lr_steinberg,
    schur_product_expand,
    signed_kostka_terms,
)
from lrkostka.kostant import kostant_partition
from lrkostka.partitions import is_dominated, partitions_of
from lrkostka.symfunc import cauchy_truncated_check, dimension, multiply, schur_decompose, schur_polynomial
from lrkostka.tableaux import (
    construct_ssyt,
    dominance_filling,
    kostka_kostant,
    kostka_ssyt,
    lr_rule_count,
)
from lrkostka.verify import lr_sweep
from oracles import brute_kostant


@contextmanager
def criterion(capsys, label, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] {label} ({elapsed:.2f}s, limit {limit}s)")
    assert within, f"{label}: {elapsed:.2f}s exceeds {limit}s"


def compositions(total, n):
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def test_ac01_paper_kostka(capsys):
    with criterion(capsys, "AC1 K_(5,3,2),(4,3,3) = 2 via SSYT and Kostant", 1):
        assert kostka_ssyt((5, 3, 2), (4, 3, 3)) == 2
        assert kostka_kostant((5, 3, 2), (4, 3, 3), 3) == 2


def test_ac02_paper_lr(capsys):
    lam, mu, nu = (5, 3, 2), (4, 3, 3), (9, 6, 5)
    with criterion(capsys, "AC2 c^(9,6,5)_(5,3,2),(4,3,3) = 1 by four methods; six candidates", 1):
        assert lr_signed_kostka(lam, mu, nu, 3) == 1
        assert lr_matching(lam, mu, nu, 3) == 1
        assert lr_steinberg(lam, mu, nu, 3) == 1
        assert lr_rule_count(nu, lam, mu) == 1
        terms = signed_kostka_terms(lam, mu, nu, 3)
        assert [t.candidate for t in terms] == [
            (4, 3, 3), (5, 4, 1), (7, 3, 0), (9, 1, 0), (7, 5, -2), (9, 3, -2),
        ]
        assert [t.candidate for t in terms if t.dominated] == [(4, 3, 3)]


def test_ac03_four_way_sweep(capsys):
    with criterion(capsys, "AC3 four-way LR agreement, n=3, |nu| <= 10", 300):
        report = lr_sweep(10, 3)
        assert report.cases_run > 0
        assert report.mismatches == []


def test_ac04_theorem_expansion(capsys):
    n = 3
    with criterion(capsys, "AC4 product expansion = LR rule = polynomial decomposition; dimensions", 300):
        for total in range(9):
            for a in range(total + 1):
                for lam in partitions_of(a, n):
                    for mu in partitions_of(total - a, n):
                        expansion = schur_product_expand(lam, mu, n)
                        rule = {nu: lr_rule_count(nu, lam, mu) for nu in partitions_of(total, n)}
                        assert expansion == {k: v for k, v in rule.items() if v}
                        poly = multiply(schur_polynomial(lam, n), schur_polynomial(mu, n))
                        assert schur_decompose(poly) == expansion
                        assert sum(c * dimension(nu, n) for nu, c in expansion.items()) == (
                            dimension(lam, n) * dimension(mu, n)
                        )


def test_ac05_dominance_criterion(capsys):
    with criterion(capsys, "AC5 K > 0 iff dominated; constructive filling; (14,10,5,3,0)", 120):
        for m in range(9):
            parts = list(partitions_of(m, m or 1))
            for mu in parts:
                for xi in parts:
                    dominated = is_dominated(xi, mu)
                    assert (kostka_ssyt(mu, xi) > 0) == dominated
                    if dominated:
                        t = construct_ssyt(mu, xi)
                        assert t.is_semistandard()
                        assert t.content(len(xi)) == xi
        _, trace = dominance_filling((14, 11, 6, 5, 3), (9, 8, 8, 7, 7))
        assert trace[0] == (5, (14, 10, 5, 3, 0))


def test_ac06_kostka_kostant(capsys):
    with criterion(capsys, "AC6 Kostant alternating sum = SSYT count, |lam| <= 7, n <= 4", 120):
        for n in range(1, 5):
            cache = {}
            for m in range(8):
                for shape in partitions_of(m, n):
                    for content in compositions(m, n):
                        assert kostka_kostant(shape, content, n, cache=cache) == kostka_ssyt(shape, content)


def test_ac07_king_embedding(capsys):
    with criterion(capsys, "AC7 K_{lam,mu} = c^tau_{sigma,lam}, |lam| = |mu| <= 8", 120):
        for m in range(9):
            parts = list(partitions_of(m, m or 1))
            for mu in parts:
                pair = king_embedding(mu)
                for lam in parts:
                    assert kostka_ssyt(lam, mu) == lr_rule_count(pair.tau, pair.sigma, lam)
        pair = king_embedding((4, 3, 3))
        assert (pair.sigma, pair.tau) == ((6, 3, 0), (10, 6, 3))
        assert kostka_ssyt((5, 3, 2), (4, 3, 3)) == lr_rule_count((10, 6, 3), (6, 3, 0), (5, 3, 2)) == 2


def test_ac08_cauchy(capsys):
    with criterion(capsys, "AC8 truncated Cauchy identity, n in {1,2}, maxdeg <= 6", 60):
        for n in (1, 2):
            for maxdeg in range(7):
                assert cauchy_truncated_check(n, maxdeg)


def test_ac09_kostant_sanity(capsys):
    with criterion(capsys, "AC9 P(0)=1, P(1,0,-1)=2, P(2,0,-2)=3, P(k,0,-k)=k+1", 1):
        assert kostant_partition((0, 0, 0)) == 1 == brute_kostant((0, 0, 0))
        assert kostant_partition((1, 0, -1)) == 2 == brute_kostant((1, 0, -1))
        assert kostant_partition((2, 0, -2)) == 3 == brute_kostant((2, 0, -2))
        for k in range(11):
            assert kostant_partition((k, 0, -k)) == k + 1 == brute_kostant((k, 0, -k))


def test_ac10_weyl_symmetry(capsys):
    with criterion(capsys, "AC10 Kostka invariant under content permutations, |lam| <= 8, n = 3", 60):
        for m in range(9):
            for shape in partitions_of(m, 3):
                for content in compositions(m, 3):
                    values = {kostka_ssyt(shape, p) for p in permutations(content)}
                    assert len(values) == 1
