"""Dlt, contact and essential m-valuations of the singularity.

The unrestricted contact locus decomposes over the exceptional m-divisors of
the minimal m-separating resolution, and each stratum is irreducible of
codimension m * nu/N = m + i(d - n).  Counting is purely arithmetic:

* the essential valuations are all floor(m/d) exceptional m-divisors;
* for d >= n the three families coincide;
* for d < n there are no dlt valuations and the only stratum of maximal
  dimension is the one of order 1, so E_{-1} carries the unique contact
  valuation as soon as m >= d.

The counts are meaningful for any n >= 2; the cohomology modules need
n >= 3 on top of this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .resolution import Divisor, exceptional_m_divisors, m_divisor, m_divisor_indices


def _validate(n: int, d: int, m: int) -> None:
    if n < 2:
        raise ValueError("n must be >= 2")
    if d < 1:
        raise ValueError("d must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")


def essential_valuations(n: int, d: int, m: int) -> tuple[Divisor, ...]:
    """All exceptional m-divisors, E_{-floor(m/d)} through E_{-1}."""
    _validate(n, d, m)
    return exceptional_m_divisors(n, d, m)


def contact_valuations(n: int, d: int, m: int) -> tuple[Divisor, ...]:
    """The m-divisors whose stratum closure is an irreducible component."""
    _validate(n, d, m)
    if d >= n:
        return exceptional_m_divisors(n, d, m)
    if m >= d:
        return (m_divisor(n, d, m, -1),)
    return ()


def dlt_valuations(n: int, d: int, m: int) -> tuple[Divisor, ...]:
    """Empty when d < n, where every exceptional divisor has log discrepancy
    exceeding its multiplicity; all exceptional m-divisors when d >= n."""
    _validate(n, d, m)
    if d >= n:
        return exceptional_m_divisors(n, d, m)
    return ()


def stratum_codimension(n: int, d: int, m: int, i: int) -> int:
    """Codimension m + i(d - n) of the order-(-i) stratum of the unrestricted
    contact locus, checked against m * nu_i / N_i."""
    _validate(n, d, m)
    if i not in m_divisor_indices(d, m) or i == 0:
        raise ValueError(f"index {i} outside [-{m // d}, -1]")
    div = m_divisor(n, d, m, i)
    codim = m + i * (d - n)
    if m * div.log_discrepancy != codim * div.multiplicity:
        raise AssertionError(f"codimension formulas disagree at i = {i}")
    return codim


@dataclass(frozen=True)
class ValuationReport:
    n: int
    d: int
    m: int
    essential: tuple[Divisor, ...]
    contact: tuple[Divisor, ...]
    dlt: tuple[Divisor, ...]
    codims: tuple[tuple[int, int], ...]  # (index i, codimension)

    def __post_init__(self) -> None:
        essential = set(div.pair for div in self.essential)
        contact = set(div.pair for div in self.contact)
        dlt = set(div.pair for div in self.dlt)
        if not (dlt <= contact <= essential):
            raise ValueError("valuation families must be nested")
        if len(self.essential) != self.m // self.d:
            raise ValueError("wrong number of essential valuations")

    def counts(self) -> tuple[int, int, int]:
        return len(self.dlt), len(self.contact), len(self.essential)

    def to_doc(self) -> dict:
        def docs(divs):
            return [div.to_doc() for div in divs]

        return {
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "essential": docs(self.essential),
            "contact": docs(self.contact),
            "dlt": docs(self.dlt),
            "codims": {str(i): c for i, c in self.codims},
        }

    @classmethod
    def from_doc(cls, doc: Mapping) -> "ValuationReport":
        def divs(rows):
            return tuple(Divisor.from_doc(row) for row in rows)

        return cls(
            int(doc["n"]),
            int(doc["d"]),
            int(doc["m"]),
            divs(doc["essential"]),
            divs(doc["contact"]),
            divs(doc["dlt"]),
            tuple(sorted((int(i), int(c)) for i, c in doc["codims"].items())),
        )


def valuation_report(n: int, d: int, m: int) -> ValuationReport:
    _validate(n, d, m)
    codims = tuple(
        (i, stratum_codimension(n, d, m, i))
        for i in m_divisor_indices(d, m)
        if i != 0
    )
    return ValuationReport(
        n, d, m,
        essential_valuations(n, d, m),
        contact_valuations(n, d, m),
        dlt_valuations(n, d, m),
        codims,
    )
