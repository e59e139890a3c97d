"""Exhaustive cross-method agreement sweeps."""

from dataclasses import dataclass, field

from .lr_engine import STEINBERG_MAX_N, lr_matching, lr_signed_kostka, lr_steinberg
from .partitions import partitions_of, strip
from .symfunc import compositions
from .tableaux import kostka_kostant, kostka_ssyt, lr_rule_count


@dataclass
class Mismatch:
    lam: tuple
    mu: tuple
    nu: tuple
    method: str
    value: int
    oracle_value: int

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "nu": list(self.nu),
            "method": self.method,
            "value": self.value,
            "oracle_value": self.oracle_value,
        }


@dataclass
class VerifyReport:
    cases_run: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def merge(self, other):
        self.cases_run += other.cases_run
        self.mismatches.extend(other.mismatches)
        return self

    def to_json(self):
        return {
            "cases_run": self.cases_run,
            "mismatches": [m.to_json() for m in self.mismatches],
            "ok": self.ok,
        }


def lr_triples(max_size, n):
    """All (lam, mu, nu) with at most n parts and |lam| + |mu| = |nu| <= max_size."""
    by_size = {s: list(partitions_of(s, n)) for s in range(max_size + 1)}
    for total in range(max_size + 1):
        for a in range(total + 1):
            for lam in by_size[a]:
                for mu in by_size[total - a]:
                    for nu in by_size[total]:
                        yield lam, mu, nu


def lr_sweep(max_size, n, methods=("signed", "matching", "steinberg")):
    """Compare each formula with the LR-rule count on every triple."""
    report = VerifyReport()
    cache = {}
    fns = {
        "signed": lambda l, m, v: lr_signed_kostka(l, m, v, n),
        "matching": lambda l, m, v: lr_matching(l, m, v, n),
        "steinberg": lambda l, m, v: lr_steinberg(l, m, v, n, cache=cache),
    }
    if n > STEINBERG_MAX_N:
        methods = tuple(m for m in methods if m != "steinberg")
    for lam, mu, nu in lr_triples(max_size, n):
        expected = lr_rule_count(nu, lam, mu)
        report.cases_run += 1
        for name in methods:
            got = fns[name](lam, mu, nu)
            if got != expected:
                report.mismatches.append(Mismatch(lam, mu, nu, name, got, expected))
    return report


def kostka_sweep(max_size, n):
    """Compare the Kostant alternating sum with SSYT counting for every shape
    with at most n parts and every length-n content of the same size."""
    report = VerifyReport()
    cache = {}
    for size in range(max_size + 1):
        for shape in partitions_of(size, n):
            for content in compositions(size, n):
                expected = kostka_ssyt(shape, content)
                got = kostka_kostant(shape, content, n, cache=cache)
                report.cases_run += 1
                if got != expected:
                    report.mismatches.append(
                        Mismatch(strip(shape), content, (), "kostka_kostant", got, expected)
                    )
    return report


def run_verify(max_size, n):
    return lr_sweep(max_size, n).merge(kostka_sweep(max_size, n))
