"""Characteristic equations whose roots govern the asymptotic choice number.

The bipartite growth constant is the unique root x0 in [1, inf) of

    x - 1 - x^((k-1)/k) = 0,          k = log n_1 / log n_0,

and the multipartite generalization (s+1 parts, slack eps >= 0) is

    (s + eps) * x - 1 - sum_{j<s} x^((k_j-1)/k_j) = 0.

Both left-hand sides increase strictly on [1, inf), so bisection on a
guaranteed bracket is exact and robust: the root lies in
[(s+1)/s, max(k_0, e+2)) when eps = 0, and in (1, max(k_0, e+2)) for
0 < eps < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadArgs, DomainError, NoSignChange

E_PLUS_2 = math.e + 2.0

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class RootProblem:
    """Parameters (k_0..k_{s-1}, eps) of one characteristic equation."""

    k: tuple[float, ...]
    epsilon: float = 0.0

    def __post_init__(self) -> None:
        if len(self.k) < 1:
            raise BadArgs("need at least one exponent k_j")
        if any(kj < 1.0 or not math.isfinite(kj) for kj in self.k):
            raise BadArgs("every k_j must be >= 1")
        if self.epsilon < 0.0 or not math.isfinite(self.epsilon):
            raise BadArgs("epsilon must be >= 0")

    @property
    def s(self) -> int:
        return len(self.k)


@dataclass(frozen=True)
class RootResult:
    x0: float
    residual: float
    bracket_low: float
    bracket_high: float
    iterations: int


def char_value(x: float, problem: RootProblem) -> float:
    """Evaluate (s+eps)*x - 1 - sum_j x^((k_j-1)/k_j) at x >= 1."""
    if x < 1.0:
        raise DomainError(f"characteristic function is defined on [1, inf), got {x}")
    total = (problem.s + problem.epsilon) * x - 1.0
    lx = math.log(x)
    for kj in problem.k:
        e = (kj - 1.0) / kj
        # e == 0 (k_j = 1) contributes exactly 1, no exp round-off
        total -= 1.0 if e == 0.0 else math.exp(e * lx)
    return total


def solve_x0(problem: RootProblem, tol: float = DEFAULT_TOL) -> RootResult:
    """Find the root of `char_value` in [1, inf) by bracketed bisection.

    Stops once |char_value(x0)| <= tol, or at floating-point bracket
    resolution, whichever comes first.  For eps >= 1 the function is
    already non-negative at x = 1 and no root above 1 exists.
    """
    if tol <= 0.0:
        raise BadArgs("tol must be positive")
    if problem.epsilon >= 1.0:
        raise DomainError("no root above 1 when epsilon >= 1")

    s = problem.s
    lo = (s + 1.0) / s if problem.epsilon == 0.0 else 1.0
    hi = max(max(problem.k), E_PLUS_2)

    f = lambda x: char_value(x, problem)

    flo = f(lo)
    if flo > 0.0:
        raise NoSignChange(f"f({lo}) = {flo} > 0 at bracket start")
    if flo == 0.0:
        return RootResult(lo, 0.0, lo, hi, 0)

    # The bracket upper end is guaranteed analytically; doubling is a guard.
    doublings = 0
    fhi = f(hi)
    while fhi < 0.0:
        hi *= 2.0
        doublings += 1
        if doublings > 200:
            raise NoSignChange("no sign change found while expanding bracket")
        fhi = f(hi)
    if fhi == 0.0:
        return RootResult(hi, 0.0, lo, hi, 0)

    bracket_low, bracket_high = lo, hi
    iterations = 0
    while True:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        iterations += 1
        fm = f(mid)
        if fm == 0.0 or abs(fm) <= tol:
            return RootResult(mid, fm, bracket_low, bracket_high, iterations)
        if fm < 0.0:
            lo = mid
        else:
            hi = mid

    # Bracket at float resolution; pick the endpoint with the smaller residual.
    flo, fhi = f(lo), f(hi)
    x0, residual = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
    if abs(residual) > tol:
        raise NoSignChange(f"residual {residual} above tol {tol} at bracket resolution")
    return RootResult(x0, residual, bracket_low, bracket_high, iterations)
