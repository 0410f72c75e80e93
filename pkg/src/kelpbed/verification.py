"""Seeded randomized checks of the product identities.

Random inputs come from numpy's Philox generator, a counter-based 64-bit
bit generator, seeded with the user's integer seed.  The same seed, trial
count, size bound and entry bound always produce the same inputs and hence
the same report.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import demazure, monge
from .biword import oracle_bound, total_kelps


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def random_biword_matrix(rng: np.random.Generator, n: int, max_entry: int) -> np.ndarray:
    return rng.integers(0, max_entry + 1, size=(n, n), dtype=np.int64)


def random_monge(rng: np.random.Generator, n: int, max_entry: int, offset: int = 0) -> np.ndarray:
    """``phi`` of a random biword matrix plus an optional random sum matrix.

    The sum matrix is the addition table of a random column vector and a
    random row vector with entries in ``0..offset``; adding it keeps the
    Monge property.
    """
    A = monge.phi(random_biword_matrix(rng, n, max_entry))
    if offset:
        u = rng.integers(0, offset + 1, size=(n + 1, 1), dtype=np.int64)
        v = rng.integers(0, offset + 1, size=(1, n + 1), dtype=np.int64)
        A = A + u + v
    return A


@dataclass
class Tally:
    passed: int = 0
    total: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, case=None):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(case)


CHECKS = ("isomorphism", "associativity", "closure", "monotone-product", "weight")


def verify(trials: int, n: int, max_entry: int, seed: int) -> dict[str, Tally]:
    """Run ``trials`` rounds of every check with sizes drawn uniformly from ``1..n``.

    * isomorphism: ``phi(star(X, Y))`` equals ``phi(X) (min,+) phi(Y)``;
    * associativity of ``star`` on a random triple;
    * closure: the min-plus product of two random Monge matrices is Monge,
      and that of two simple Monge matrices is simple Monge;
    * monotone-product: the fast product agrees with the cubic one;
    * weight: split-point formula against the matching oracle (skipped when
      either side exceeds the oracle bound).
    """
    rng = rng_from_seed(seed)
    report = {name: Tally() for name in CHECKS}
    bound = oracle_bound()
    for _ in range(trials):
        m = int(rng.integers(1, n + 1))
        X, Y, Z = (random_biword_matrix(rng, m, max_entry) for _ in range(3))
        PX, PY = monge.phi(X), monge.phi(Y)
        XY = demazure.star(X, Y)
        report["isomorphism"].record(
            np.array_equal(monge.phi(XY), monge.distance_product(PX, PY)), (X, Y))
        report["associativity"].record(
            np.array_equal(demazure.star(XY, Z), demazure.star(X, demazure.star(Y, Z))), (X, Y, Z))
        A = random_monge(rng, m, max_entry, offset=max_entry)
        B = random_monge(rng, m, max_entry, offset=max_entry)
        report["closure"].record(
            monge.is_monge(monge.distance_product(A, B))
            and monge.is_simple_monge(monge.distance_product(PX, PY)), (A, B))
        report["monotone-product"].record(
            np.array_equal(monge.distance_product_monge(PX, PY), monge.distance_product(PX, PY)), (X, Y))
        if total_kelps(X) <= bound and total_kelps(Y) <= bound:
            report["weight"].record(demazure.weight(X, Y) == demazure.weight_oracle(X, Y), (X, Y))
        else:
            report["weight"].skipped += 1
    return report


def format_report(report: dict[str, Tally]) -> str:
    lines = []
    for name, t in report.items():
        line = f"{name}: {t.passed}/{t.total} passed"
        if t.skipped:
            line += f" ({t.skipped} skipped above oracle bound)"
        lines.append(line)
    ok = all(t.passed == t.total for t in report.values())
    lines.append("all checks passed" if ok else "FAILURES detected")
    return "\n".join(lines) + "\n"
