"""Size accounting for keys and signatures, plus attack-surface combinatorics."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .poly import Poly

VARIABLE_BITS = 5  # every variable occurrence is charged 5 bits, even x32
MONOMIAL_BITS = 3  # per-monomial overhead (coefficient and separator)


@dataclass(frozen=True)
class SizeReport:
    variable_occurrences: int
    monomial_count: int
    bits: int

    @property
    def kilobytes(self) -> float:
        return self.bits / 8192.0


def measure(polys: Iterable[Poly]) -> SizeReport:
    """Bit cost of a collection of polynomials under the fixed charging rule."""
    occurrences = 0
    monomials = 0
    for p in polys:
        monomials += len(p.terms)
        for mask in p.terms:
            occurrences += mask.bit_count()
    bits = occurrences * VARIABLE_BITS + monomials * MONOMIAL_BITS
    return SizeReport(occurrences, monomials, bits)


def attack_dimension(nvars: int, max_degree: int) -> int:
    """Number of monomials of degree <= max_degree (combinations with repetition)."""
    if nvars < 1 or max_degree < 0:
        raise ValueError("need nvars >= 1 and max_degree >= 0")
    return math.comb(nvars + max_degree, max_degree)


@dataclass(frozen=True)
class AttackDimensionReport:
    """Both counts relevant to the linear-algebra attack surface.

    ``count_at_most`` is the dimension actually spanned by monomials of
    degree up to ``max_degree``; ``count_exact_degree`` counts only the top
    degree.  The two are sometimes conflated, so both are reported.
    """

    nvars: int
    max_degree: int
    count_at_most: int
    count_exact_degree: int

    @property
    def agree(self) -> bool:
        return self.count_at_most == self.count_exact_degree


def attack_dimension_report(nvars: int, max_degree: int) -> AttackDimensionReport:
    at_most = attack_dimension(nvars, max_degree)
    exact = math.comb(nvars + max_degree - 1, max_degree) if max_degree else 1
    return AttackDimensionReport(nvars, max_degree, at_most, exact)


def format_size_report(report: SizeReport, label: str) -> str:
    """Aligned-key text block."""
    rows = [
        (f"{label} variable occurrences", f"{report.variable_occurrences}"),
        (f"{label} monomials", f"{report.monomial_count}"),
        (f"{label} bits", f"{report.bits}"),
        (f"{label} kilobytes", f"{report.kilobytes:.2f}"),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def size_records(report: SizeReport, label: str) -> list[str]:
    """Machine-readable key=value lines."""
    return [
        f"{label}.variable_occurrences={report.variable_occurrences}",
        f"{label}.monomials={report.monomial_count}",
        f"{label}.bits={report.bits}",
        f"{label}.kilobytes={report.kilobytes:.4f}",
    ]
