"""First pages of the two spectral sequences and the fixed-point verdict.

Both pages are indexed here by the m-divisor index i in [-floor(m/d), -1]
(column) and the total degree s.  The fixed-point page places the homology of
the cyclic cover of E_i at total degree s = n - 1 - k - 2i(d - n), already in
the corrected grading; the order page places the compactly supported
cohomology of the order-(-i) stratum at its own degree.  Both sequences
degenerate at the first page in scope, so no differential machinery exists:
a page is its own limit.  Matching the two pages column by column under the
duality translation is a computable check, and two arithmetic membership
conditions decide when the fixed-point Floer cohomology of the m-th monodromy
iterate is determined by the contact cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .contact import contact_cohomology, contact_euler, graded_pieces, piece_compact_cohomology
from .groups import FgAbGroup, GradedGroup
from .surface import cover_homology, milnor_number

PAGE_MCLEAN = "mclean"
PAGE_ORDER = "order"

COLOR_BLUE = "blue"
COLOR_ORANGE = "orange"
COLOR_YELLOW = "yellow"
COLOR_PINK = "pink"


def _validate(n: int, d: int, m: int) -> None:
    if n < 3:
        raise ValueError("n must be >= 3")
    if d < 2:
        raise ValueError("d must be >= 2")
    if m < 1:
        raise ValueError("m must be >= 1")


@dataclass(frozen=True)
class SpectralPage:
    """An E1 = Einfinity page: finitely many groups at (column, total degree).

    Columns are canonicalized to the m-divisor index i itself.  Any choice of
    ample divisor only reorders the genuine column positions monotonically
    and both sequences are degenerate, so nothing computed depends on the
    spacing.
    """

    kind: str
    n: int
    d: int
    m: int
    entries: tuple[tuple[tuple[int, int], FgAbGroup], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    def entry(self, column: int, degree: int) -> FgAbGroup:
        for (i, s), group in self.entries:
            if (i, s) == (column, degree):
                return group
        return FgAbGroup()

    def columns(self) -> tuple[int, ...]:
        return tuple(sorted({i for (i, _), _ in self.entries}))

    def column(self, i: int) -> dict[int, FgAbGroup]:
        return {s: group for (col, s), group in self.entries if col == i}

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "entries": [
                {"column": i, "degree": s, **group.to_doc()}
                for (i, s), group in self.entries
            ],
        }


def mclean_e1(n: int, d: int, m: int) -> SpectralPage:
    """First page of the fixed-point spectral sequence over the exceptional
    m-divisors (the strict transform never contributes)."""
    _validate(n, d, m)
    entries = []
    for i in range(-(m // d), 0):
        homology = cover_homology(n, d, i, m)
        for k, group in homology.entries:
            s = n - 1 - k - 2 * i * (d - n)
            entries.append(((i, s), group))
    return SpectralPage(PAGE_MCLEAN, n, d, m, tuple(entries))


def order_e1(n: int, d: int, m: int) -> SpectralPage:
    """First page of the order-filtration spectral sequence: column -rho
    holds the compactly supported cohomology of the order-rho stratum."""
    _validate(n, d, m)
    entries = []
    for piece in graded_pieces(n, d, m):
        profile = piece_compact_cohomology(piece, n, d)
        for s, group in profile.entries:
            entries.append(((-piece.rho, s), group))
    return SpectralPage(PAGE_ORDER, n, d, m, tuple(entries))


def comparison_shift(n: int, m: int) -> int:
    """Total-degree offset between the two pages: (n-1)(2m+1)."""
    return (n - 1) * (2 * m + 1)


def compare_pages(n: int, d: int, m: int) -> bool:
    """Whether the two first pages agree column by column up to the constant
    degree shift (n-1)(2m+1).

    The two sides are computed through independent routes (cover homology
    with the index arithmetic versus stratum cohomology with Thom shifts),
    so this checks all of the grading bookkeeping at once.
    """
    shift = comparison_shift(n, m)
    mclean = mclean_e1(n, d, m)
    order = order_e1(n, d, m)
    shifted = {(i, s + shift): group for (i, s), group in mclean.entries}
    return shifted == dict(order.entries)


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    violating_k: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.holds != (not self.violating_k):
            raise ValueError("holds flag inconsistent with witnesses")

    def to_doc(self) -> dict:
        return {"holds": self.holds, "violating_k": list(self.violating_k)}

    @classmethod
    def from_doc(cls, doc: Mapping) -> "ConditionReport":
        return cls(bool(doc["holds"]), tuple(int(k) for k in doc["violating_k"]))


def _k_range_max(d: int, m: int) -> int:
    # integers k with 1 <= k < m/d
    return (m - 1) // d


def _deg_forbidden(n: int) -> frozenset[int]:
    return frozenset({1, -1, n - 1, -(n - 1), n - 2, -(n - 2), 2 * n - 3, -(2 * n - 3)})


def _filt_forbidden(n: int) -> frozenset[int]:
    return frozenset({0, n - 2, -(n - 2), n - 1, -(n - 1)})


def _scan(n: int, d: int, forbidden: frozenset[int], offset: int, k_max: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, k_max + 1) if 2 * k * (d - n) + offset in forbidden)


def condition_degeneration(n: int, d: int, m: int) -> ConditionReport:
    """Membership scan deciding degeneration of the fixed-point sequence:
    2k(d-n) + 1 must avoid {+-1, +-(n-1), +-(n-2), +-(2n-3)} for every
    integer k in [1, m/d)."""
    violating = _scan(n, d, _deg_forbidden(n), 1, _k_range_max(d, m))
    return ConditionReport(not violating, violating)


def condition_filtration(n: int, d: int, m: int) -> ConditionReport:
    """Membership scan deciding single-column support per total degree:
    2k(d-n) must avoid {0, +-(n-2), +-(n-1)} for every integer k in
    [1, m/d)."""
    violating = _scan(n, d, _filt_forbidden(n), 0, _k_range_max(d, m))
    return ConditionReport(not violating, violating)


def floer_cohomology(n: int, d: int, m: int) -> Optional[GradedGroup]:
    """HF^.(phi^m, +) when the isomorphism theorem applies, else None.

    When both membership conditions hold, the Floer cohomology of the m-th
    monodromy iterate equals the contact cohomology shifted down by
    (n-1)(2m+1).  Outside that region nothing is claimed.
    """
    _validate(n, d, m)
    deg = condition_degeneration(n, d, m)
    filt = condition_filtration(n, d, m)
    if not (deg.holds and filt.holds):
        return None
    return contact_cohomology(n, d, m).shift(-comparison_shift(n, m))


@dataclass(frozen=True)
class PairClass:
    """Classification of (n, d) by which conditions can fail for some m."""

    color: str
    degeneration_violations: tuple[int, ...]
    filtration_violations: tuple[int, ...]

    def to_doc(self) -> dict:
        return {
            "color": self.color,
            "degeneration_violations": list(self.degeneration_violations),
            "filtration_violations": list(self.filtration_violations),
        }


def default_k_bound(n: int, d: int) -> int:
    """Smallest scan bound past which no new violation can appear.

    A violation needs |2k(d-n)| <= 2n-2, so k <= (n-1)/|d-n| when d != n;
    on the diagonal k = 1 already decides both conditions.
    """
    if d == n:
        return 1
    return max(1, (n - 1) // abs(d - n) + 1)


def classify_pair(n: int, d: int, k_bound: Optional[int] = None) -> PairClass:
    """Color of the pair (n, d): blue if both conditions hold for every m,
    orange/yellow if only the filtration/degeneration condition can fail,
    pink if both can."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if d < 2:
        raise ValueError("d must be >= 2")
    if k_bound is None:
        k_bound = default_k_bound(n, d)
    deg_ks = _scan(n, d, _deg_forbidden(n), 1, k_bound)
    filt_ks = _scan(n, d, _filt_forbidden(n), 0, k_bound)
    if deg_ks and filt_ks:
        color = COLOR_PINK
    elif deg_ks:
        color = COLOR_YELLOW
    elif filt_ks:
        color = COLOR_ORANGE
    else:
        color = COLOR_BLUE
    return PairClass(color, deg_ks, filt_ks)


def scatter_grid(n_range, d_range) -> list[tuple[int, int, PairClass]]:
    """classify_pair over a rectangular grid, row-major in (n, d)."""
    return [(n, d, classify_pair(n, d)) for n in n_range for d in d_range]


def lefschetz_number(n: int, d: int, m: int) -> int:
    """Lefschetz number of the m-th monodromy iterate.

    Computed as the compactly supported Euler characteristic of X_m and
    cross-checked against the closed form: 0 unless d | m, in which case
    1 + (-1)^(n-1) (d-1)^n.
    """
    chi = contact_euler(n, d, m)
    closed = 0 if m % d else 1 + (-1) ** (n - 1) * milnor_number(n, d)
    if chi != closed:
        raise AssertionError(f"Euler characteristic {chi} disagrees with closed form {closed}")
    return chi
