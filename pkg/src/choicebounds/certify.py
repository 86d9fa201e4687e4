"""Overflow-safe evaluation of the falling-factorial certificate inequality,
plus Monte Carlo validation of the probabilistic constructions behind it.

The lower-bound certificate for r-choosability is the union-bound condition

    sum_i 2^t * exp(-((t - l_i)_r / (t)_r) * n_i) <= 1

over the s+1 parts, where (a)_r = a*(a-1)*...*(a-r+1).  Part sizes can be
as large as 2^10000, so every term is kept in the natural-log domain with
an explicit -inf sentinel for terms that vanish; log2 magnitudes are
converted once through ln 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.random import Generator, Philox

from .core import GraphSpec
from .errors import BadArgs, BadProbabilities, ExactSizesRequired
from .logsum import log_sum_exp

LN2 = math.log(2.0)

# exp() argument above which the inner exponent has certainly driven the
# term to zero (double overflow threshold is ~709.78)
_EXP_OVERFLOW = 700.0

# Trials per derived RNG stream in the color-split experiment; fixed so
# results are independent of machine and batching choices.
SPLIT_BLOCK = 1024

_MAX_SEED = 2**64


@dataclass(frozen=True)
class StarTerms:
    """Per-part log quantities of the certificate left-hand side.

    log_ratio  ln((t - l_i)_r / (t)_r), each <= 0 (-inf when the ratio is 0).
    term_log   ln of the part's union-bound term, each <= t*ln 2.
    lhs_log    ln of the full left-hand side; certificate holds iff <= 0.
    """

    log_ratio: tuple[float, ...]
    term_log: tuple[float, ...]
    lhs_log: float


@dataclass(frozen=True)
class McReport:
    trials: int
    mean_bad_events: float
    std_error: float
    theoretical_expectation: float
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "mean_bad_events": self.mean_bad_events,
            "std_error": self.std_error,
            "theoretical_expectation": self.theoretical_expectation,
            "seed": self.seed,
        }


def falling_factorial_log_ratio(a: int, t: int, r: int) -> float:
    """ln((a)_r / (t)_r) = sum_{i<r} ln((a-i)/(t-i)); -inf when (a)_r = 0.

    This is the log-probability that a uniform r-subset of a t-set lands
    inside a fixed a-subset.
    """
    if not (isinstance(a, int) and isinstance(t, int) and isinstance(r, int)):
        raise BadArgs("a, t, r must be integers")
    if not (0 <= a <= t):
        raise BadArgs(f"need 0 <= a <= t, got a={a}, t={t}")
    if not (1 <= r <= t):
        raise BadArgs(f"need 1 <= r <= t, got r={r}, t={t}")
    if a < r:
        return -math.inf
    total = 0.0
    for i in range(r):
        total += math.log((a - i) / (t - i))
    return total


def star_lhs_log(spec: GraphSpec, r: int, t: int, l: Sequence[int]) -> StarTerms:
    """Evaluate the certificate left-hand side in the log domain.

    Each part contributes t*ln2 - ((t-l_i)_r/(t)_r) * n_i inside the log;
    when the subtrahend alone exceeds the overflow threshold the term is
    reported as -inf (it vanishes to far below any representable scale).
    """
    parts = len(spec.part_sizes_log2)
    li = list(l)
    if len(li) != parts:
        raise BadArgs(f"expected {parts} list-split entries, got {len(li)}")
    if any(not isinstance(v, int) for v in li):
        raise BadArgs("l entries must be integers")
    if any(v < 0 or v > t for v in li):
        raise BadArgs("every l_i must satisfy 0 <= l_i <= t")
    if sum(li) != t:
        raise BadArgs(f"sum(l) = {sum(li)} must equal t = {t}")
    if not (1 <= r <= t):
        raise BadArgs(f"need 1 <= r <= t, got r={r}, t={t}")

    t_ln2 = t * LN2
    log_ratios = []
    term_logs = []
    for lv, log2_n in zip(li, spec.part_sizes_log2):
        lr = falling_factorial_log_ratio(t - lv, t, r)
        log_ratios.append(lr)
        inner = lr + LN2 * log2_n
        if inner > _EXP_OVERFLOW:
            term_logs.append(-math.inf)
        else:
            # exp(-inf) == 0: a vanished ratio leaves the bare 2^t term
            term_logs.append(t_ln2 - math.exp(inner))
    return StarTerms(tuple(log_ratios), tuple(term_logs), log_sum_exp(term_logs))


def _require_exact_sizes(spec: GraphSpec) -> tuple[int, ...]:
    if spec.part_sizes_exact is None:
        raise ExactSizesRequired("operation needs exact integer part sizes")
    return spec.part_sizes_exact


def _check_seed(seed: int) -> int:
    if not isinstance(seed, int) or not (0 <= seed < _MAX_SEED):
        raise BadArgs("seed must be a 64-bit unsigned integer")
    return seed


def _stream(seed: int, index: int) -> Generator:
    """Derived RNG stream: index selects a disjoint Philox counter block."""
    return Generator(Philox(key=seed, counter=index << 128))


def sample_r_subsets(rng: Generator, count: int, universe: int, r: int) -> np.ndarray:
    """count uniform r-subsets of {0..universe-1} via vectorized partial shuffle.

    Returns an array of shape (count, r); entries within a row are distinct
    but unsorted.
    """
    arr = np.tile(np.arange(universe, dtype=np.int16), (count, 1))
    rows = np.arange(count)
    for pos in range(r):
        j = rng.integers(pos, universe, size=count)
        tmp = arr[rows, pos].copy()
        arr[rows, pos] = arr[rows, j]
        arr[rows, j] = tmp
    return arr[:, :r]


def mc_split_bad_events(
    spec: GraphSpec,
    r: int,
    p: Sequence[float],
    universe: int,
    trials: int,
    seed: int,
) -> McReport:
    """Simulate the random color-split construction and count bad events.

    Per trial: every vertex draws a uniform r-subset of {0..universe-1} as
    its list, every color independently joins class i with probability
    p_i, and a vertex is bad when its list misses its own part's class.
    The mean bad-event count is reported against the exact expectation
    sum_i n_i * (1 - p_i)^r.

    Trials are evaluated in fixed blocks of SPLIT_BLOCK, each block on its
    own counter-derived RNG stream, so results are reproducible and blocks
    are independent.
    """
    sizes = _require_exact_sizes(spec)
    _check_seed(seed)
    pv = [float(x) for x in p]
    if len(pv) != len(sizes):
        raise BadProbabilities(f"expected {len(sizes)} probabilities, got {len(pv)}")
    if any(x < 0.0 or x > 1.0 for x in pv) or abs(sum(pv) - 1.0) > 1e-9:
        raise BadProbabilities("p must be a distribution over the parts")
    if trials < 1:
        raise BadArgs("trials must be >= 1")
    if universe < r or r < 1:
        raise BadArgs("need 1 <= r <= universe")

    n_total = sum(sizes)
    part_of_vertex = np.repeat(np.arange(len(sizes)), sizes)
    cum_p = np.cumsum(pv)

    counts = np.empty(trials, dtype=np.int64)
    done = 0
    block_index = 0
    while done < trials:
        nb = min(SPLIT_BLOCK, trials - done)
        rng = _stream(seed, block_index)
        # class label of every color, one row per trial in the block
        labels = np.minimum(
            np.searchsorted(cum_p, rng.random((nb, universe)), side="right"),
            len(sizes) - 1,
        )
        lists = sample_r_subsets(rng, nb * n_total, universe, r)
        trial_of_row = np.repeat(np.arange(nb), n_total)
        list_labels = labels[trial_of_row[:, None], lists]
        own_part = np.tile(part_of_vertex, nb)[:, None]
        bad = ~(list_labels == own_part).any(axis=1)
        counts[done : done + nb] = bad.reshape(nb, n_total).sum(axis=1)
        done += nb
        block_index += 1

    mean = float(counts.mean())
    std_error = float(counts.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    theoretical = float(sum(n * (1.0 - pi) ** r for n, pi in zip(sizes, pv)))
    return McReport(trials, mean, std_error, theoretical, seed)


def mc_cover_failure(
    spec: GraphSpec,
    r: int,
    t: int,
    l: Sequence[int],
    trials: int,
    seed: int,
) -> McReport:
    """Sample adversarial list assignments and measure cover-witness failure.

    Each trial draws independent uniform r-lists from a t-color universe
    (its own counter-derived stream) and checks the per-part minimum-cover
    thresholds l_0..l_{s-1}, l_s + 1 exactly.  The failure frequency is
    reported against the union bound exp(star_lhs_log), which may exceed 1
    (a vacuous bound) at small sizes.
    """
    from .exact import ListAssignment, verify_lower_witness

    sizes = _require_exact_sizes(spec)
    _check_seed(seed)
    if trials < 1:
        raise BadArgs("trials must be >= 1")
    star = star_lhs_log(spec, r, t, list(l))  # validates r, t, l

    failures = np.empty(trials, dtype=np.int64)
    for trial in range(trials):
        rng = _stream(seed, trial)
        lists = _sample_lists(rng, sizes, r, t)
        ok = verify_lower_witness(ListAssignment(t, lists), list(l))
        failures[trial] = 0 if ok else 1

    mean = float(failures.mean())
    std_error = float(failures.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    theoretical = float(np.exp(star.lhs_log))
    return McReport(trials, mean, std_error, theoretical, seed)


def _sample_lists(
    rng: Generator, sizes: Sequence[int], r: int, t: int
) -> tuple[tuple[frozenset[int], ...], ...]:
    """Independent uniform r-subsets of {0..t-1}, grouped by part."""
    n_total = sum(sizes)
    flat = sample_r_subsets(rng, n_total, t, r)
    parts = []
    at = 0
    for n in sizes:
        parts.append(tuple(frozenset(int(c) for c in flat[i]) for i in range(at, at + n)))
        at += n
    return tuple(parts)
