"""Partial products in K_n, the level Markov chain, and Monte Carlo runs.

Running products of generator sequences are eventually constant; when every
letter that occurs keeps recurring, the constant value is the idempotent on
the occurring index set.  For iid random letters with distribution p, the
level of the running product is an absorbing Markov chain on {0, ..., n}
that either stays put or steps down by one, and the absorption time is a
sum of n independent geometric variables with success probabilities p_i.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from kiselman.core import Element, idempotent, multiply, unit, validate_word
from kiselman.level_metric import g, level_by_definition

RNG_ALGORITHM = "numpy PCG64, per-trial stream seeded by (master_seed, trial_index)"


def validate_probabilities(p, tol: float = 1e-12) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or len(p) < 2:
        raise ValueError("need a probability vector of length n >= 2")
    if (p < 0).any():
        raise ValueError("probabilities must be nonnegative")
    if abs(p.sum() - 1.0) > tol:
        raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
    return p


def require_positive(p: np.ndarray) -> None:
    if (p <= 0).any():
        raise ValueError(
            "every generator needs positive probability; otherwise the "
            "hitting time is not almost surely finite"
        )


@dataclass(frozen=True)
class SequenceSpec:
    """A generator-index sequence: ``preamble`` then ``cycle`` repeated
    forever, or an explicit finite ``prefix`` (no statement beyond it)."""

    rank: int
    preamble: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()
    prefix: tuple[int, ...] | None = None

    def __post_init__(self):
        validate_word(self.rank, self.preamble)
        validate_word(self.rank, self.cycle)
        if self.prefix is not None:
            validate_word(self.rank, self.prefix)
            if self.preamble or self.cycle:
                raise ValueError("give either a prefix or preamble/cycle, not both")
        elif not self.cycle:
            raise ValueError("periodic mode needs a nonempty cycle")

    @property
    def periodic(self) -> bool:
        return self.prefix is None

    def letters(self, horizon: int):
        if self.prefix is not None:
            yield from self.prefix[:horizon]
            return
        for j in range(horizon):
            if j < len(self.preamble):
                yield self.preamble[j]
            else:
                yield self.cycle[(j - len(self.preamble)) % len(self.cycle)]


@dataclass(frozen=True)
class ProductTrace:
    """Running products s_0 = e, s_1, ... with stabilization bookkeeping."""

    spec: SequenceSpec
    products: tuple[Element, ...]
    stabilized: bool
    stable_index: int | None  # first index from which the product never moves

    @property
    def value(self) -> Element:
        if not self.stabilized:
            raise ValueError("sequence not yet stable within the horizon")
        return self.products[self.stable_index]


def partial_products(spec: SequenceSpec, horizon: int = 10_000) -> ProductTrace:
    """Iterate s_j = s_{j-1} x_j and certify stabilization.

    A periodic sequence is certified stable once the product survives one
    full cycle unchanged past the preamble (each step multiplies by one
    cycle letter, so it is then constant forever).  Explicit prefixes can
    only report what was observed.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    products = [unit(spec.rank)]
    last_change = 0
    stabilized = False
    for j, i in enumerate(spec.letters(horizon), start=1):
        nxt = multiply(products[-1], idempotent(spec.rank, {i}))
        if nxt != products[-1]:
            last_change = j
        products.append(nxt)
        if spec.periodic:
            # stable once a full cycle passes unchanged after the preamble:
            # every subsequent factor then fixes the product
            cutoff = max(last_change, len(spec.preamble))
            if j - cutoff >= len(spec.cycle):
                stabilized = True
                break
    return ProductTrace(
        spec=spec,
        products=tuple(products),
        stabilized=stabilized,
        stable_index=last_change if stabilized else None,
    )


def eventual_value(spec: SequenceSpec) -> Element:
    """Closed-form eventual product for periodic sequences whose preamble
    letters all recur in the cycle: the idempotent on the occurring set."""
    if not spec.periodic:
        raise ValueError("eventual value needs a periodic spec")
    recurring = set(spec.cycle)
    occurring = recurring | set(spec.preamble)
    if occurring != recurring:
        raise ValueError(
            "preamble letters missing from the cycle; no closed form, "
            "iterate partial_products instead"
        )
    return idempotent(spec.rank, occurring)


@dataclass(frozen=True)
class TransitionMatrix:
    """The level chain on states 0..n: absorbing at 0, lower bidiagonal."""

    p: np.ndarray
    matrix: np.ndarray
    initial: np.ndarray

    @property
    def n(self) -> int:
        return len(self.p)


def transition_matrix(p) -> TransitionMatrix:
    p = validate_probabilities(p)
    n = len(p)
    mat = np.zeros((n + 1, n + 1))
    mat[0, 0] = 1.0
    for i in range(1, n + 1):
        mat[i, i - 1] = p[i - 1]
        mat[i, i] = 1.0 - p[i - 1]
    initial = np.zeros(n + 1)
    initial[n] = 1.0
    return TransitionMatrix(p=p, matrix=mat, initial=initial)


def chain_hitting_cdf(p, k_max: int) -> np.ndarray:
    """P(T <= k) for k = 0..k_max via powers of the level chain."""
    chain = transition_matrix(p)
    dist = chain.initial.copy()
    cdf = np.empty(k_max + 1)
    cdf[0] = dist[0]
    for k in range(1, k_max + 1):
        dist = dist @ chain.matrix
        cdf[k] = dist[0]
    return cdf


@dataclass(frozen=True)
class HittingTimePMF:
    """Exact distribution of the absorption time, truncated with tail mass."""

    p: np.ndarray
    probs: np.ndarray  # P(T = k) for k = 0..k_max
    tail_mass: float

    @property
    def k_max(self) -> int:
        return len(self.probs) - 1

    def cdf(self) -> np.ndarray:
        return np.cumsum(self.probs)

    def mean(self) -> float:
        """E[T], with the truncated tail restored exactly via the chain.

        sum_{k > K} k P(T=k) = pi Q^K [ (K+1)(I-Q)^{-1} + Q (I-Q)^{-2} ] r
        where Q is the transient block and r the absorption column.
        """
        head = float(np.arange(len(self.probs)) @ self.probs)
        chain = transition_matrix(self.p)
        n = chain.n
        q = chain.matrix[1:, 1:]
        r = chain.matrix[1:, 0]
        pi = chain.initial[1:]
        k = self.k_max
        inv = np.linalg.inv(np.eye(n) - q)
        qk = np.linalg.matrix_power(q, k)
        tail = float(pi @ qk @ ((k + 1) * inv + q @ (inv @ inv)) @ r)
        return head + tail


def exact_hitting_pmf(p, k_max: int | None = None, tail_bound: float = 1e-9) -> HittingTimePMF:
    """Convolve n geometric pmfs (success p_i, support k >= 1).

    With ``k_max=None``, the smallest truncation with tail mass below
    ``tail_bound`` is chosen.
    """
    p = validate_probabilities(p)
    require_positive(p)
    n = len(p)

    def convolve(k_cap: int) -> np.ndarray:
        pmf = np.zeros(k_cap + 1)
        pmf[0] = 1.0
        ks = np.arange(k_cap + 1, dtype=float)
        for pi in p:
            geo = np.zeros(k_cap + 1)
            geo[1:] = pi * (1.0 - pi) ** (ks[1:] - 1.0)
            pmf = np.convolve(pmf, geo)[: k_cap + 1]
        return pmf

    if k_max is None:
        k_max = n
        while True:
            probs = convolve(k_max)
            if 1.0 - probs.sum() < tail_bound:
                break
            k_max *= 2
        # shrink back to the smallest adequate truncation
        cum = np.cumsum(probs)
        k_max = int(np.searchsorted(cum, 1.0 - tail_bound) )
        probs = probs[: k_max + 1]
    else:
        probs = convolve(k_max)
    return HittingTimePMF(p=p, probs=probs, tail_mass=float(1.0 - probs.sum()))


@dataclass(frozen=True)
class SimulationReport:
    """Seeded Monte Carlo summary; serialization is byte-stable."""

    rank: int
    p: tuple[float, ...]
    trials: int
    seed: int
    mode: str
    rng: str
    histogram: dict  # hitting time -> count
    mean: float
    variance: float
    crosscheck_trials: int
    crosscheck_failures: int
    transition_counts: dict = field(default_factory=dict)  # state -> [stay, down]

    def to_json(self) -> str:
        payload = {
            "rank": self.rank,
            "p": list(self.p),
            "trials": self.trials,
            "seed": self.seed,
            "mode": self.mode,
            "rng": self.rng,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "mean": self.mean,
            "variance": self.variance,
            "crosscheck_trials": self.crosscheck_trials,
            "crosscheck_failures": self.crosscheck_failures,
            "transition_counts": {
                str(k): v for k, v in sorted(self.transition_counts.items())
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


class CrosscheckError(AssertionError):
    """The g-recursion level diverged from the level of the actual product."""


def simulate(
    n: int,
    p,
    trials: int,
    seed: int,
    mode: str = "full",
    step_budget: int = 1_000_000,
    crosscheck_stride: int | None = None,
) -> SimulationReport:
    """Run seeded iid-product trials and record hitting times of the zero.

    ``mode="level"`` tracks only the level via ``g``; ``mode="full"`` also
    multiplies out the product and asserts the levels agree.  For n >= 4
    the full crosscheck is sampled (default every 100th trial) since
    canonical words grow with n.  Reports are deterministic functions of
    (n, p, trials, seed, mode).
    """
    p = validate_probabilities(p)
    require_positive(p)
    if len(p) != n:
        raise ValueError(f"probability vector length {len(p)} != n = {n}")
    if trials < 1:
        raise ValueError("need at least one trial")
    if mode not in ("level", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if crosscheck_stride is None:
        crosscheck_stride = 1 if n <= 3 else 100

    cum = np.cumsum(p).tolist()
    histogram: dict[int, int] = {}
    transition_counts: dict[int, list[int]] = {i: [0, 0] for i in range(1, n + 1)}
    total = 0.0
    total_sq = 0.0
    crosscheck_trials = 0
    crosscheck_failures = 0
    e = unit(n)
    gens = [idempotent(n, {i}) for i in range(1, n + 1)]

    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        track_element = mode == "full" and trial % crosscheck_stride == 0
        lvl = n
        steps = 0
        prod = e
        block: list[float] = []
        while lvl > 0:
            if not block:
                block = rng.random(64).tolist()
                block.reverse()
            i = bisect_right(cum, block.pop()) + 1
            steps += 1
            if steps > step_budget:
                raise RuntimeError(
                    f"trial {trial} exceeded step budget {step_budget}; "
                    "check the probability vector"
                )
            nxt = g(lvl, i)
            transition_counts[lvl][0 if nxt == lvl else 1] += 1
            if track_element:
                prod = multiply(prod, gens[i - 1])
                if level_by_definition(prod) != nxt:
                    crosscheck_failures += 1
            lvl = nxt
        if track_element:
            crosscheck_trials += 1
            if prod.letters != tuple(range(n, 0, -1)):
                crosscheck_failures += 1
        histogram[steps] = histogram.get(steps, 0) + 1
        total += steps
        total_sq += steps * steps

    mean = total / trials
    variance = total_sq / trials - mean * mean
    report = SimulationReport(
        rank=n,
        p=tuple(float(v) for v in p),
        trials=trials,
        seed=seed,
        mode=mode,
        rng=RNG_ALGORITHM,
        histogram=histogram,
        mean=mean,
        variance=variance,
        crosscheck_trials=crosscheck_trials,
        crosscheck_failures=crosscheck_failures,
        transition_counts=transition_counts,
    )
    if crosscheck_failures:
        raise CrosscheckError(
            f"{crosscheck_failures} level/product mismatches; report: "
            f"{report.to_json()}"
        )
    return report


@dataclass(frozen=True)
class Verdict:
    passed: bool
    tv_distance: float
    tv_bound: float
    chi2_statistic: float
    chi2_pvalue: float
    pvalue_floor: float
    dof: int


def verify_distribution(
    report: SimulationReport,
    pmf: HittingTimePMF,
    tv_bound: float = 0.01,
    pvalue_floor: float = 1e-3,
) -> Verdict:
    """Compare an empirical hitting-time histogram against the exact pmf.

    Total-variation distance over the truncated support (tail pooled) plus
    a chi-square test over bins with expected count >= 5.
    """
    from scipy import stats

    if report.rank != len(pmf.p):
        raise ValueError("report and pmf disagree on n")
    trials = report.trials
    k_max = pmf.k_max
    empirical = np.zeros(k_max + 2)  # last slot pools the tail
    for k, count in report.histogram.items():
        empirical[min(int(k), k_max + 1)] += count
    empirical /= trials
    exact = np.append(pmf.probs, pmf.tail_mass)
    tv = 0.5 * float(np.abs(empirical - exact).sum())

    # chi-square: pool bins (from the right) until expected >= 5 each
    expected_counts = exact * trials
    observed_counts = empirical * trials
    obs_bins: list[float] = []
    exp_bins: list[float] = []
    acc_obs = acc_exp = 0.0
    for o, x in zip(observed_counts[::-1], expected_counts[::-1]):
        acc_obs += o
        acc_exp += x
        if acc_exp >= 5.0:
            obs_bins.append(acc_obs)
            exp_bins.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if not obs_bins:
        raise ValueError("insufficient trials for chi-square binning")
    obs_bins[-1] += acc_obs
    exp_bins[-1] += acc_exp
    obs_arr = np.array(obs_bins)
    exp_arr = np.array(exp_bins) * obs_arr.sum() / sum(exp_bins)
    chi2, pvalue = stats.chisquare(obs_arr, exp_arr)
    return Verdict(
        passed=bool(tv < tv_bound and pvalue > pvalue_floor),
        tv_distance=tv,
        tv_bound=tv_bound,
        chi2_statistic=float(chi2),
        chi2_pvalue=float(pvalue),
        pvalue_floor=pvalue_floor,
        dof=len(obs_bins) - 1,
    )


def sample_from_pmf(pmf: HittingTimePMF, trials: int, seed: int) -> SimulationReport:
    """Inverse-CDF sampler used as a self-consistency control for
    :func:`verify_distribution`."""
    rng = np.random.default_rng(seed)
    cdf = pmf.cdf()
    draws = np.searchsorted(cdf, rng.random(trials))
    histogram: dict[int, int] = {}
    for k in draws.tolist():
        histogram[k] = histogram.get(k, 0) + 1
    mean = float(draws.mean())
    return SimulationReport(
        rank=len(pmf.p),
        p=tuple(float(v) for v in pmf.p),
        trials=trials,
        seed=seed,
        mode="resample",
        rng=RNG_ALGORITHM,
        histogram=histogram,
        mean=mean,
        variance=float(draws.var()),
        crosscheck_trials=0,
        crosscheck_failures=0,
    )
