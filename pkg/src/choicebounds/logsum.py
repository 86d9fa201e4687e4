"""Numerically stable log-domain summation helpers.

Both helpers accept -inf entries (terms that vanished exactly) and keep
sums exact in the fully symmetric cases that the tests rely on, which is
why they are hand-rolled instead of routed through an array library.
"""

from __future__ import annotations

import math
from typing import Iterable


def log_sum_exp(values: Iterable[float]) -> float:
    """Return ln(sum(exp(v))) without overflow; -inf for an empty/vanished sum."""
    vals = list(values)
    m = max(vals, default=-math.inf)
    if m == -math.inf:
        return -math.inf
    if m == math.inf:
        return math.inf
    return m + math.log(sum(math.exp(v - m) for v in vals))


def log2_sum_exp2(values: Iterable[float]) -> float:
    """Return log2(sum(2**v)) without overflow; -inf for an empty/vanished sum."""
    vals = list(values)
    m = max(vals, default=-math.inf)
    if m == -math.inf:
        return -math.inf
    if m == math.inf:
        return math.inf
    return m + math.log2(sum(2.0 ** (v - m) for v in vals))
