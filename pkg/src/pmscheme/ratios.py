"""Part-merging transformations and the ratio laws they induce.

The closed-form merge constant is implemented verbatim and kept strictly apart
from the measured ratios; reports carry both and flag disagreement instead
of silently correcting either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompleteTable, SchemeError
from .partitions import Dominance, Partition, dominance_compare
from .spectra import (
    family_second_eig,
    family_threshold,
    phi_n11,
    valency,
)
from .symfunc import CATALOG_PREFIXES


@dataclass(frozen=True)
class MergeSpec:
    """A merge of two parts of mu, addressed by 1-based part indices."""

    mu: Partition
    i: int
    j: int

    def __post_init__(self):
        k = len(self.mu)
        if not (1 <= self.i <= k and 1 <= self.j <= k) or self.i == self.j:
            raise ValueError(f"part indices must be distinct and within {self.mu}")
        if self.part_i < 2 or self.part_j < 2:
            raise ValueError("merged parts must both be at least 2")

    @property
    def part_i(self) -> int:
        return self.mu.parts[self.i - 1]

    @property
    def part_j(self) -> int:
        return self.mu.parts[self.j - 1]

    @property
    def merged(self) -> Partition:
        parts = list(self.mu.parts)
        hi, lo = max(self.i, self.j) - 1, min(self.i, self.j) - 1
        parts.pop(hi)
        parts.pop(lo)
        parts.append(self.part_i + self.part_j)
        return Partition(sorted(parts, reverse=True))

    @property
    def n_i(self) -> int:
        return self.mu.parts.count(self.part_i)

    @property
    def n_j(self) -> int:
        return self.mu.parts.count(self.part_j)

    @property
    def m(self) -> int:
        return self.merged.parts.count(self.part_i + self.part_j)


def all_merges(mu: Partition) -> list[MergeSpec]:
    """One MergeSpec per unordered pair of part values >= 2 of mu."""
    out = []
    seen: set[tuple[int, int]] = set()
    k = len(mu)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            if mu.parts[i - 1] < 2 or mu.parts[j - 1] < 2:
                continue
            key = (mu.parts[i - 1], mu.parts[j - 1])
            if key in seen:
                continue  # same value pair merges identically
            seen.add(key)
            out.append(MergeSpec(mu, i, j))
    return out


def merge_constant(spec: MergeSpec) -> Fraction:
    """The closed-form merge constant, verbatim: n_i(n_i-1)mu_i/(2m) for
    equal parts and n_i n_j mu_i mu_j / (m(mu_i+mu_j)) otherwise.

    Measured valency ratios are exactly twice this value on every merge
    checked against enumeration; reports carry both numbers."""
    a, b = spec.part_i, spec.part_j
    if a == b:
        return Fraction(spec.n_i * (spec.n_i - 1) * a, 2 * spec.m)
    return Fraction(spec.n_i * spec.n_j * a * b, spec.m * (a + b))


def valency_ratio(spec: MergeSpec) -> Fraction:
    """Measured ratio of the merged valency to the original valency."""
    return Fraction(valency(spec.merged), valency(spec.mu))


def tau_ratio(spec: MergeSpec) -> Fraction | None:
    """Ratio of the [n-1,1]-eigenvalues across the merge.

    Requires mu to end with a part of size 1 (so the eigenvalue is anchored);
    None when the original eigenvalue vanishes.
    """
    if spec.mu.parts[-1] != 1:
        raise ValueError("tau ratio needs a trailing part of size 1 in mu")
    denom = phi_n11(spec.mu)
    if denom == 0:
        return None
    return Fraction(phi_n11(spec.merged), denom)


def merge_dominates(spec: MergeSpec) -> bool:
    return dominance_compare(spec.merged, spec.mu) in (
        Dominance.GREATER,
        Dominance.EQUAL,
    )


@dataclass(frozen=True)
class RatioReport:
    spec: MergeSpec
    gap_ratio: Fraction | None
    valency_ratio: Fraction
    tau_ratio: Fraction | None
    formula_constant: Fraction
    ratios_agree: bool
    matches_formula: bool

    @property
    def consistent(self) -> bool:
        return self.ratios_agree and self.matches_formula

    def summary(self) -> str:
        lines = [
            f"merge {self.spec.mu} -> {self.spec.merged} "
            f"(parts {self.spec.part_i} and {self.spec.part_j})",
            f"  valency ratio : {self.valency_ratio}",
            f"  tau ratio     : {self.tau_ratio if self.tau_ratio is not None else 'undefined'}",
            f"  gap ratio     : {self.gap_ratio if self.gap_ratio is not None else 'unavailable'}",
            f"  formula const : {self.formula_constant}",
            f"  consistent    : {self.consistent}",
        ]
        if not self.matches_formula:
            lines.append(
                "  NOTE: formula constant disagrees with the measured ratios"
                f" (factor {self.valency_ratio / self.formula_constant})"
            )
        return "\n".join(lines)


def _family_gap(mu: Partition) -> int | None:
    prefix = Partition([p for p in mu.parts if p > 1])
    if not prefix.parts or prefix not in CATALOG_PREFIXES:
        return None
    if mu.n < family_threshold(prefix):
        return None
    return family_second_eig(prefix, mu.n)[1]


def gap_ratio_report(spec: MergeSpec, table=None) -> RatioReport:
    """Bundle every ratio across a merge with a consistency verdict.

    Gaps come from a complete table when one is supplied, otherwise from the
    closed-form families when both endpoints are covered; the gap ratio is
    None when neither source applies.
    """
    from .tables import second_largest

    v_ratio = valency_ratio(spec)
    try:
        t_ratio = tau_ratio(spec)
    except ValueError:
        t_ratio = None
    g_ratio: Fraction | None = None
    if table is not None:
        try:
            g_old = valency(spec.mu) - second_largest(table, spec.mu)[0]
            g_new = valency(spec.merged) - second_largest(table, spec.merged)[0]
            g_ratio = Fraction(g_new, g_old)
        except IncompleteTable:
            g_ratio = None
    else:
        g_old = _family_gap(spec.mu)
        g_new = _family_gap(spec.merged)
        if g_old is not None and g_new is not None and g_old != 0:
            g_ratio = Fraction(g_new, g_old)
    cp = merge_constant(spec)
    present = [r for r in (g_ratio, v_ratio, t_ratio) if r is not None]
    ratios_agree = all(r == present[0] for r in present)
    return RatioReport(
        spec=spec,
        gap_ratio=g_ratio,
        valency_ratio=v_ratio,
        tau_ratio=t_ratio,
        formula_constant=cp,
        ratios_agree=ratios_agree,
        matches_formula=v_ratio == cp,
    )


def gaps_available(spec: MergeSpec, table=None) -> bool:
    report = gap_ratio_report(spec, table)
    return report.gap_ratio is not None


def require_gap_ratio(spec: MergeSpec, table=None) -> RatioReport:
    report = gap_ratio_report(spec, table)
    if report.gap_ratio is None:
        raise SchemeError(
            f"gaps unavailable for {spec.mu} -> {spec.merged}; "
            "supply a complete table or use a catalog family pair"
        )
    return report
