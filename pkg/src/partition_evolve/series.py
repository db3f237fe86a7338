"""Exact truncated power series over Python integers, and the two
partition-counting coefficient streams built from them.

All arithmetic is modulo q^(N+1) for a fixed truncation degree N, with
arbitrary-precision integer coefficients throughout, so nothing ever
overflows or rounds.

Truncation lemma used below: modulo q^(N+1) the factor 1/(1-q^j) reduces
to 1 whenever j > N, and any summand carrying q^s vanishes whenever
s > N.  The infinite products and sums therefore reduce to finitely many
factors and terms without changing any coefficient up to degree N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import CheckResult, VerificationReport


@dataclass(frozen=True)
class Series:
    """A formal power series kept to degree ``truncation_degree`` inclusive."""

    truncation_degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.truncation_degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        if len(self.coeffs) != self.truncation_degree + 1:
            raise ValueError(
                f"expected {self.truncation_degree + 1} coefficients, "
                f"got {len(self.coeffs)}")

    @classmethod
    def one(cls, truncation_degree: int) -> "Series":
        return cls(truncation_degree, (1,) + (0,) * truncation_degree)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common degree; exact integers."""
    if a.truncation_degree != b.truncation_degree:
        raise ValueError(
            f"truncation degrees differ: {a.truncation_degree} "
            f"vs {b.truncation_degree}")
    n = a.truncation_degree
    # Schoolbook convolution; iterate the sparser operand on the outside.
    if sum(1 for c in b.coeffs if c) < sum(1 for c in a.coeffs if c):
        a, b = b, a
    out = [0] * (n + 1)
    b_coeffs = b.coeffs
    for i, a_i in enumerate(a.coeffs):
        if not a_i:
            continue
        for j in range(n - i + 1):
            b_j = b_coeffs[j]
            if b_j:
                out[i + j] += a_i * b_j
    return Series(n, tuple(out))


def geometric_factor(j: int, truncation_degree: int) -> Series:
    """1/(1-q^j) truncated: coefficient 1 at every multiple of j."""
    if j < 1:
        raise ValueError(f"factor index must be positive, got {j}")
    coeffs = [0] * (truncation_degree + 1)
    for degree in range(0, truncation_degree + 1, j):
        coeffs[degree] = 1
    return Series(truncation_degree, tuple(coeffs))


def euler_p_coeffs(n_max: int) -> list[int]:
    """P(0..n_max): partition counts from the product of all 1/(1-q^j).

    Factors with j > n_max are 1 modulo q^(n_max+1) and are skipped
    (truncation lemma above); the rest are multiplied into an accumulator
    in increasing j.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    acc = Series.one(n_max)
    for j in range(1, n_max + 1):
        acc = series_mul(acc, geometric_factor(j, n_max))
    return list(acc.coeffs)


def q_coeffs(n_max: int) -> list[int]:
    """Q(0..n_max): counts of partitions whose smallest part occurs once.

    Q's generating function is the sum over s >= 1 of q^s times the
    product of 1/(1-q^j) over j > s: the term for s counts partitions
    whose only or last part equals s with every other part strictly
    larger.  Summands with s > n_max vanish under truncation.  The
    products share their factors, so they are accumulated from s = n_max
    downward, one exact multiplication per step.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    total = [0] * (n_max + 1)
    suffix = Series.one(n_max)
    for s in range(n_max, 0, -1):
        # Here suffix == product of geometric_factor(j) for s < j <= n_max.
        for degree in range(n_max - s + 1):
            coeff = suffix.coeffs[degree]
            if coeff:
                total[s + degree] += coeff
        if s > 1:
            suffix = series_mul(suffix, geometric_factor(s, n_max))
    return total


def coefficient_rows(n_max: int) -> list[tuple[int, int, int]]:
    """(n, P(n), Q(n)) for n = 0..n_max, both streams computed here."""
    p = euler_p_coeffs(n_max)
    q = q_coeffs(n_max)
    return [(n, p[n], q[n]) for n in range(n_max + 1)]


def coefficient_csv(n_max: int) -> str:
    """The coefficient dump: CSV with header ``n,P,Q``, one row per degree.

    Counts are full decimal integers, never scientific notation.
    """
    lines = ["n,P,Q"]
    lines.extend(f"{n},{p},{q}" for n, p, q in coefficient_rows(n_max))
    return "\n".join(lines) + "\n"


def recurrence_violations(p_coeffs: list[int],
                          q_coeffs_: list[int]) -> list[tuple[int, int, int]]:
    """All n with P(n+1) != P(n) + Q(n), as (n, lhs, rhs) triples."""
    violations = []
    for n in range(len(p_coeffs) - 1):
        lhs = p_coeffs[n + 1]
        rhs = p_coeffs[n] + q_coeffs_[n]
        if lhs != rhs:
            violations.append((n, lhs, rhs))
    return violations


def check_recurrence(n_max: int) -> VerificationReport:
    """Verify P(n+1) = P(n) + Q(n) for all 0 <= n < n_max.

    Both sides come from independent series computations: P from the
    full product, Q from the tail-product sum.  Violations become
    failing checks, one per offending n.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    p = euler_p_coeffs(n_max)
    q = q_coeffs(n_max)
    scope = f"n=0..{n_max - 1}"
    violations = recurrence_violations(p, q)
    if not violations:
        return VerificationReport(
            (CheckResult("count-recurrence P(n+1)=P(n)+Q(n)", scope, True),))
    checks = tuple(
        CheckResult("count-recurrence P(n+1)=P(n)+Q(n)", scope, False,
                    f"n={n}: P(n+1)={lhs} but P(n)+Q(n)={rhs}")
        for n, lhs, rhs in violations)
    return VerificationReport(checks)
