"""Instance representation for complete multipartite graphs K_{n_0,...,n_s}.

A graph is fully determined by its part sizes.  Sizes are stored as log2
magnitudes (the canonical representation, good up to n_i ~ 2^10000 and
beyond) with the true integers attached whenever they fit in a machine
word; the exact combinatorics layer requires the integer attachment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BadArgs, EmptyInstance, SizeTooSmall

LOG2_CONSISTENCY_TOL = 1e-12

# Largest size we keep as an exact integer ("fits in a machine word").
MAX_EXACT_SIZE = 2**63 - 1


@dataclass(frozen=True)
class GraphSpec:
    """Part sizes of K_{n_0,...,n_s}, sorted ascending.

    part_sizes_log2   log2 of each n_i, non-decreasing, each >= 1.
    part_sizes_exact  the integers n_i themselves, or None when some size
                      does not fit in a machine word or only magnitudes
                      were given.
    """

    part_sizes_log2: tuple[float, ...]
    part_sizes_exact: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.part_sizes_log2) < 2:
            raise EmptyInstance("need at least two parts")
        if any(v < 1.0 or not math.isfinite(v) for v in self.part_sizes_log2):
            raise SizeTooSmall("every part size must be >= 2 (log2 >= 1)")
        if any(a > b for a, b in zip(self.part_sizes_log2, self.part_sizes_log2[1:])):
            raise BadArgs("part_sizes_log2 must be non-decreasing")
        if self.part_sizes_exact is not None:
            if len(self.part_sizes_exact) != len(self.part_sizes_log2):
                raise BadArgs("exact sizes do not match log2 sizes in length")
            for n, lg in zip(self.part_sizes_exact, self.part_sizes_log2):
                if abs(math.log2(n) - lg) > LOG2_CONSISTENCY_TOL:
                    raise BadArgs(f"log2({n}) inconsistent with stored magnitude {lg}")

    @property
    def s(self) -> int:
        """Number of parts minus one."""
        return len(self.part_sizes_log2) - 1

    def to_json_dict(self) -> dict:
        return {
            "sizes_log2": list(self.part_sizes_log2),
            "sizes_exact": list(self.part_sizes_exact) if self.part_sizes_exact else None,
        }

    @staticmethod
    def from_json_dict(d: dict) -> "GraphSpec":
        exact = d.get("sizes_exact")
        return GraphSpec(
            tuple(float(v) for v in d["sizes_log2"]),
            tuple(int(n) for n in exact) if exact else None,
        )


@dataclass(frozen=True)
class Exponents:
    """k_i = log n_s / log n_i for 0 <= i <= s-1; each k_i >= 1."""

    k: tuple[float, ...]


@dataclass(frozen=True)
class AsymptoticDiagnostics:
    """Advisory check of the regime n_0 = (log n_s)^alpha with alpha large.

    alpha            log2(n_0) / log2(log2(n_s)); nan when undefined.
    alpha_threshold  2 * sqrt(log2(n_s) / log2(log2(n_s))); nan when undefined.
    regime_ok        alpha >= alpha_threshold (False on the undefined path).
    """

    alpha: float
    alpha_threshold: float
    regime_ok: bool


def make_spec(sizes: Sequence[int] | Sequence[float], *, log2: bool = False) -> GraphSpec:
    """Build a GraphSpec from integer part sizes, or from log2 magnitudes.

    Input order does not matter; sizes are sorted ascending.  Exact
    integers are retained when `log2` is False and every size fits in a
    machine word.
    """
    entries = list(sizes)
    if len(entries) < 2:
        raise EmptyInstance("need at least two parts")
    if log2:
        mags = sorted(float(v) for v in entries)
        if mags[0] < 1.0:
            raise SizeTooSmall("log2 magnitudes must be >= 1 (sizes >= 2)")
        return GraphSpec(tuple(mags))
    for n in entries:
        if not isinstance(n, int) or isinstance(n, bool):
            raise BadArgs("integer sizes expected; pass log2=True for magnitudes")
        if n < 2:
            raise SizeTooSmall(f"part size {n} < 2")
    exact = tuple(sorted(entries))
    mags = tuple(math.log2(n) for n in exact)
    if exact[-1] > MAX_EXACT_SIZE:
        return GraphSpec(mags)
    return GraphSpec(mags, exact)


def exponents(spec: GraphSpec) -> Exponents:
    """Size exponents k_i = log2(n_s) / log2(n_i), i < s (non-increasing)."""
    top = spec.part_sizes_log2[-1]
    return Exponents(tuple(top / v for v in spec.part_sizes_log2[:-1]))


def diagnostics(spec: GraphSpec) -> AsymptoticDiagnostics:
    """Evaluate the advisory size-regime diagnostic.

    When log2(n_s) <= 1 the inner logarithm is non-positive and alpha has
    no value; that degenerate path reports nan magnitudes and
    regime_ok=False rather than raising.
    """
    log2_ns = spec.part_sizes_log2[-1]
    if log2_ns <= 1.0:
        return AsymptoticDiagnostics(math.nan, math.nan, False)
    loglog = math.log2(log2_ns)
    alpha = spec.part_sizes_log2[0] / loglog
    threshold = 2.0 * math.sqrt(log2_ns / loglog)
    return AsymptoticDiagnostics(alpha, threshold, alpha >= threshold)
