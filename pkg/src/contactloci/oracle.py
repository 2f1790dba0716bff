"""Brute-force verification layer over small prime fields.

Nothing here trusts the stratification theory.  Jets over F_p are enumerated
by solving the actual coefficient equations of f(gamma(t)) degree by degree:
the constraint newly finalized at depth k is brute-forced for k = 1 and is an
affine-linear equation in gamma_k for k >= 2 (a product of at least d factors
of positive t-order can contain the top coefficient at most once), so its
solution set is read off exactly and the search tree stays small.  The per
order counts are then compared with the predicted base-count times p^fiber
products, and a Jacobian-ideal rank computation provides an independent
Milnor number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import comb, gcd
from typing import Iterator, Mapping, Optional, Sequence

from .contact import BASE_MILNOR_FIBER, graded_pieces

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The enumeration would examine more candidate vectors than allowed."""


class NonSmoothReductionError(RuntimeError):
    """The initial form is singular over the chosen prime field."""


class NonIsolatedSingularityError(RuntimeError):
    """The Jacobian quotient does not vanish past the socle degree bound."""


@dataclass(frozen=True)
class SparseIntPoly:
    """Integer polynomial in nvars variables, as (exponent vector, coeff) terms."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        seen = set()
        for exps, coeff in self.terms:
            if len(exps) != self.nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            if coeff == 0:
                raise ValueError("zero coefficients must be dropped")
            if exps in seen:
                raise ValueError(f"duplicate exponent vector {exps}")
            seen.add(exps)
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    @classmethod
    def from_terms(cls, nvars: int, terms) -> "SparseIntPoly":
        acc: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms:
            exps = tuple(exps)
            acc[exps] = acc.get(exps, 0) + coeff
        return cls(nvars, tuple((e, c) for e, c in acc.items() if c))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def min_total_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no order")
        return min(sum(exps) for exps, _ in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(exps) for exps, _ in self.terms}
        return len(degrees) <= 1

    def initial_form(self) -> "SparseIntPoly":
        d = self.min_total_degree()
        return SparseIntPoly(self.nvars,
                             tuple(t for t in self.terms if sum(t[0]) == d))

    def partial(self, j: int) -> "SparseIntPoly":
        terms = []
        for exps, coeff in self.terms:
            if exps[j]:
                lowered = list(exps)
                lowered[j] -= 1
                terms.append((tuple(lowered), coeff * exps[j]))
        return SparseIntPoly.from_terms(self.nvars, terms)

    def evaluate_mod(self, point: Sequence[int], p: int) -> int:
        total = 0
        for exps, coeff in self.terms:
            v = coeff % p
            for x, e in zip(point, exps):
                if e:
                    v = v * pow(x, e, p) % p
                    if v == 0:
                        break
            total += v
        return total % p

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for exps, coeff in sorted(self.terms, key=lambda t: tuple(-e for e in t[0])):
            factors = [] if coeff == 1 and any(exps) else [str(coeff)]
            for j, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{j}")
                elif e > 1:
                    factors.append(f"x{j}^{e}")
            chunks.append("*".join(factors))
        return " + ".join(chunks)

    def to_doc(self) -> dict:
        return {"n": self.nvars,
                "terms": [{"exps": list(exps), "coeff": coeff} for exps, coeff in self.terms]}

    @classmethod
    def from_doc(cls, doc: Mapping) -> "SparseIntPoly":
        return cls(int(doc["n"]),
                   tuple((tuple(int(e) for e in t["exps"]), int(t["coeff"]))
                         for t in doc["terms"]))


_TERM_RE = re.compile(r"\s*(?:(\d+)\s*\*\s*)?x(\d+)(?:\s*\^\s*(\d+))?\s*")
_SEP_RE = re.compile(r"\s*([+-])")


def parse_poly(text: str, nvars: Optional[int] = None) -> SparseIntPoly:
    """Parse the inline grammar: term ("+"|"-") term ..., with
    term := [coeff "*"] var ("^" int)? over variables x0, x1, ...

    Anything outside the grammar is rejected.  The variable count is the
    largest index used plus one unless given explicitly.
    """
    terms = []
    pos = 0
    sign = 1
    max_index = -1
    while True:
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"expected a term at position {pos} of {text!r}")
        coeff = int(match.group(1)) if match.group(1) else 1
        index = int(match.group(2))
        exp = int(match.group(3)) if match.group(3) else 1
        max_index = max(max_index, index)
        terms.append((index, exp, sign * coeff))
        pos = match.end()
        if pos == len(text):
            break
        sep = _SEP_RE.match(text, pos)
        if not sep:
            raise ValueError(f"expected '+' or '-' at position {pos} of {text!r}")
        sign = 1 if sep.group(1) == "+" else -1
        pos = sep.end()
    width = nvars if nvars is not None else max_index + 1
    if max_index >= width:
        raise ValueError(f"variable x{max_index} exceeds the declared {width} variables")
    packed = []
    for index, exp, coeff in terms:
        exps = [0] * width
        exps[index] = exp
        packed.append((tuple(exps), coeff))
    poly = SparseIntPoly.from_terms(width, packed)
    if poly.is_zero:
        raise ValueError("polynomial cancels to zero")
    return poly


def _require_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


class _WorkCounter:
    def __init__(self, budget: int) -> None:
        self.budget = budget
        self.work = 0

    def charge(self, amount: int) -> None:
        self.work += amount
        if self.work > self.budget:
            raise BudgetExceededError(
                f"enumeration budget {self.budget} exceeded ({self.work} candidates)")


def _series_mul(a: list[int], b: list[int], trunc: int, p: int) -> list[int]:
    out = [0] * (trunc + 1)
    for i, ai in enumerate(a):
        if ai:
            top = min(len(b), trunc - i + 1)
            for j in range(top):
                if b[j]:
                    out[i + j] = (out[i + j] + ai * b[j]) % p
    return out


def _jet_coefficient(poly: SparseIntPoly, gammas: Sequence[Sequence[int]],
                     p: int, alpha: int) -> int:
    """Coefficient of t^alpha in poly(gamma(t)) mod p, for the jet
    gamma(t) = sum_k gammas[k-1] t^k with all higher coefficients zero."""
    trunc = alpha
    var_series: dict[int, list[int]] = {}
    power_cache: dict[tuple[int, int], list[int]] = {}

    def series_for(j: int) -> list[int]:
        if j not in var_series:
            s = [0] * (trunc + 1)
            for k, gamma in enumerate(gammas, start=1):
                if k <= trunc:
                    s[k] = gamma[j] % p
            var_series[j] = s
        return var_series[j]

    def power(j: int, e: int) -> list[int]:
        key = (j, e)
        if key not in power_cache:
            if e == 1:
                power_cache[key] = series_for(j)
            else:
                power_cache[key] = _series_mul(power(j, e - 1), series_for(j), trunc, p)
        return power_cache[key]

    total = 0
    for exps, coeff in poly.terms:
        if sum(exps) > alpha:
            continue  # order of the product exceeds alpha
        series = None
        for j, e in enumerate(exps):
            if e:
                factor = power(j, e)
                series = factor if series is None else _series_mul(series, factor, trunc, p)
        if series is None:
            value = 1 if alpha == 0 else 0
        else:
            value = series[alpha]
        total = (total + coeff * value) % p
    return total


def singular_point_mod_p(h: SparseIntPoly, p: int) -> Optional[tuple[int, ...]]:
    """A common zero of the partials of h on F_p^n minus the origin, if any."""
    partials = [h.partial(j) for j in range(h.nvars)]
    for point in product(range(p), repeat=h.nvars):
        if not any(point):
            continue
        if all(g.evaluate_mod(point, p) == 0 for g in partials):
            return point
    return None


def count_base(h: SparseIntPoly, p: int) -> tuple[int, int]:
    """Exact counts of {h = 0} minus the origin and of {h = 1} over F_p^n."""
    _require_prime(p)
    if not h.is_homogeneous() or h.is_zero or h.min_total_degree() < 1:
        raise ValueError("base counting expects a homogeneous form of positive degree")
    zeros = 0
    ones = 0
    for point in product(range(p), repeat=h.nvars):
        v = h.evaluate_mod(point, p)
        if v == 0:
            zeros += 1
        elif v == 1:
            ones += 1
    return zeros - 1, ones


@dataclass(frozen=True)
class JetCountReport:
    """Per-order jet counts over F_p next to the predicted bundle counts."""

    prime: int
    m: int
    total_count: int
    by_order: tuple[tuple[int, int], ...]
    cone_count: int
    milnor_count: int
    predicted_by_order: tuple[tuple[int, int], ...]

    @property
    def matches(self) -> bool:
        return dict(self.by_order) == dict(self.predicted_by_order)

    def to_doc(self) -> dict:
        return {
            "p": self.prime,
            "m": self.m,
            "total_count": self.total_count,
            "by_order": {str(rho): c for rho, c in self.by_order},
            "base_counts": {"cone": self.cone_count, "milnor": self.milnor_count},
            "predicted_by_order": {str(rho): c for rho, c in self.predicted_by_order},
        }

    @classmethod
    def from_doc(cls, doc: Mapping) -> "JetCountReport":
        return cls(
            int(doc["p"]),
            int(doc["m"]),
            int(doc["total_count"]),
            tuple(sorted((int(k), int(v)) for k, v in doc["by_order"].items())),
            int(doc["base_counts"]["cone"]),
            int(doc["base_counts"]["milnor"]),
            tuple(sorted((int(k), int(v)) for k, v in doc["predicted_by_order"].items())),
        )


def _iter_affine_solutions(lin: list[int], rhs: int, p: int) -> Iterator[tuple[int, ...]]:
    # all v with lin . v = rhs over F_p, assuming lin != 0
    n = len(lin)
    pivot = next(j for j, c in enumerate(lin) if c)
    inv = pow(lin[pivot], p - 2, p)
    others = [j for j in range(n) if j != pivot]
    for rest in product(range(p), repeat=n - 1):
        s = 0
        v = [0] * n
        for j, val in zip(others, rest):
            v[j] = val
            s += lin[j] * val
        v[pivot] = (rhs - s) * inv % p
        yield tuple(v)


def count_contact_jets(f: SparseIntPoly, m: int, p: int,
                       budget: int = DEFAULT_BUDGET) -> JetCountReport:
    """Count the m-jets gamma with gamma(0) = 0 and f(gamma) = t^m mod t^{m+1}
    over F_p, stratified by the order of gamma.

    The budget caps the number of candidate coefficient vectors the search
    may enumerate.  The reduction of the initial form must be smooth away
    from the origin, which is checked by brute force first.
    """
    _require_prime(p)
    if m < 1:
        raise ValueError("m must be >= 1")
    n = f.nvars
    d = f.min_total_degree()
    h = f.initial_form()
    pieces = graded_pieces(n, d, m)  # also validates n >= 3, d >= 2
    witness = singular_point_mod_p(h, p)
    if witness is not None:
        raise NonSmoothReductionError(
            f"initial form is singular at {witness} over F_{p}; pick another prime")
    cone_count, milnor_count = count_base(h, p)

    counter = _WorkCounter(budget)
    by_order: dict[int, int] = {}
    kstar = m - d + 1

    def record(rho: Optional[int], amount: int) -> None:
        if amount == 0:
            return
        if rho is None:
            raise AssertionError("counted jets of undetermined order")
        by_order[rho] = by_order.get(rho, 0) + amount

    def descend(prefix: list[tuple[int, ...]], rho: Optional[int]) -> None:
        k = len(prefix) + 1
        alpha = k + d - 1
        target = 1 % p if alpha == m else 0
        free_factor = p ** (n * (m - k))
        if k == 1:
            counter.charge(p ** n)
            for v in product(range(p), repeat=n):
                if _jet_coefficient(f, [v], p, alpha) != target:
                    continue
                v_rho = 1 if any(v) else None
                if k == kstar:
                    record(v_rho, free_factor)
                else:
                    descend([v], v_rho)
            return
        zero = tuple([0] * n)
        c0 = _jet_coefficient(f, prefix + [zero], p, alpha)
        lin = []
        for j in range(n):
            unit = [0] * n
            unit[j] = 1
            cj = _jet_coefficient(f, prefix + [tuple(unit)], p, alpha)
            lin.append((cj - c0) % p)
        rhs = (target - c0) % p
        has_linear_part = any(lin)
        if rho is None and has_linear_part:
            raise AssertionError("zero prefix cannot produce a linear constraint")
        if k == kstar:
            if has_linear_part:
                count = p ** (n - 1)
            elif rhs == 0:
                if rho is None:
                    raise AssertionError("order-ambiguous solutions at the last level")
                count = p ** n
            else:
                count = 0
            record(rho, count * free_factor)
            return
        if has_linear_part:
            counter.charge(p ** (n - 1))
            for v in _iter_affine_solutions(lin, rhs, p):
                descend(prefix + [v], rho if rho is not None else (k if any(v) else None))
        elif rhs == 0:
            counter.charge(p ** n)
            for v in product(range(p), repeat=n):
                descend(prefix + [v], rho if rho is not None else (k if any(v) else None))

    if m >= d:
        descend([], None)

    declared = {piece.rho: piece for piece in pieces}
    predicted = {
        rho: (milnor_count if piece.base_kind == BASE_MILNOR_FIBER else cone_count)
        * p ** piece.fiber_dim
        for rho, piece in declared.items()
    }
    for rho in declared:
        by_order.setdefault(rho, 0)
    return JetCountReport(
        prime=p,
        m=m,
        total_count=sum(by_order.values()),
        by_order=tuple(sorted(by_order.items())),
        cone_count=cone_count,
        milnor_count=milnor_count,
        predicted_by_order=tuple(sorted(predicted.items())),
    )


def verify_stratification(f: SparseIntPoly, m: int, p: int,
                          budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the enumerated per-order counts equal the predicted affine
    bundle counts, with no jets outside the declared order range."""
    return count_contact_jets(f, m, p, budget).matches


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree + 1):
        for rest in _monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _rank_sparse_int(rows: list[dict[int, int]]) -> int:
    """Rank over Q of integer rows given as {column: value} dicts."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                rank += 1
                break
            piv = pivots[col]
            a, b = row[col], piv[col]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            merged = {c: v * ma for c, v in row.items()}
            for c, v in piv.items():
                merged[c] = merged.get(c, 0) - v * mb
            row = {c: v for c, v in merged.items() if v}
            if row:
                shrink = 0
                for v in row.values():
                    shrink = gcd(shrink, abs(v))
                row = {c: v // shrink for c, v in row.items()}
    return rank


def milnor_number_oracle(h: SparseIntPoly, max_monomials: int = 20000) -> int:
    """Dimension of the Jacobian quotient of a homogeneous form, by exact
    linear algebra degree by degree.

    For an isolated singularity the quotient is supported in degrees up to
    n(d-2); a nonzero piece one degree past that bound proves the critical
    locus is positive-dimensional and raises NonIsolatedSingularityError.
    """
    if h.is_zero or not h.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous form")
    n = h.nvars
    d = h.min_total_degree()
    if d < 1:
        raise ValueError("expected positive degree")
    if d == 1:
        return 0  # the gradient is a nonzero constant vector
    partials = [h.partial(j) for j in range(n)]
    top = n * (d - 2)
    total = 0
    for degree in range(top + 2):
        if comb(degree + n - 1, n - 1) > max_monomials:
            raise BudgetExceededError(
                f"degree {degree} needs more than {max_monomials} monomials")
        monomials = _monomials(n, degree)
        index = {mon: i for i, mon in enumerate(monomials)}
        rows = []
        shift = degree - (d - 1)
        if shift >= 0:
            for factor in _monomials(n, shift):
                for g in partials:
                    row = {}
                    for exps, coeff in g.terms:
                        mon = tuple(a + b for a, b in zip(exps, factor))
                        row[index[mon]] = row.get(index[mon], 0) + coeff
                    rows.append(row)
        dim = len(monomials) - _rank_sparse_int(rows)
        if degree == top + 1:
            if dim != 0:
                raise NonIsolatedSingularityError(
                    f"Jacobian quotient has dimension {dim} in degree {degree}")
        else:
            total += dim
    return total
