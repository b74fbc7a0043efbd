"""Certification of the approximation bounds on exact instances."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

from exchkit.core.constants import (
    BOUND_PASS_TOL,
    DEFAULT_SWEEP_C,
    DEFAULT_SWEEP_INSTANCES,
    DEFAULT_SWEEP_N,
    DEFAULT_SWEEP_R_MIN,
    MAX_FULL_CHAIN_N,
)
from exchkit.core.distances import tv_distance
from exchkit.core.errors import SizeGuardError
from exchkit.core.exchangeability import marginal
from exchkit.decomposition import mixture_marginal
from exchkit.extremal import (
    kn_identity_check,
    minor_cache,
    sampling_ratio_check,
    tv_urn_gap,
    uniform_ratio_lemma_check,
)
from exchkit.print import print_bound_report
from exchkit.utils import derive_seed, resolve_threads

from .formulas import bound_finite, bound_general
from .instances import Instance, random_instance


class BoundReport(NamedTuple):
    """Exact distance of one instance at one ``k`` against both bounds.

    Attributes
    ----------
    seed : int or None
        Instance seed.
    c, n, k : int
        Alphabet size, sequence length and number of leading coordinates.
    tv_exact : float
        Distance between ``P_k`` and the ``k``-marginal of the constructed
        weighted i.i.d. mixture.
    bound_general, bound_finite : float
        The two analytic bounds.
    prod_r_k, prod_r_n : float
        Prefix ratio products over ``k`` and ``n`` coordinates.
    pass_general, pass_finite : bool
        ``tv_exact <= bound + 1e-10``.
    urn_gap_max : float
        Largest urn-level distance over occupied urns; ``tv_exact`` never
        exceeds it.
    dominated : bool
        Slot-level domination held on every occupied urn.
    sampling_ratio_ok : bool
        The weighted-versus-uniform ratio comparison held on every occupied urn.
    kn_identity_ok : bool
        ``sum_z (nu_j / n_j) P_o(z) = k / n`` held on every occupied urn.
    lemma_ok : bool
        ``Q_o >= prod_j (1 - nu_j / n_j) P_o`` held on every occupied urn.
    """

    seed: int | None
    c: int
    n: int
    k: int
    tv_exact: float
    bound_general: float
    bound_finite: float
    prod_r_k: float
    prod_r_n: float
    pass_general: bool
    pass_finite: bool
    urn_gap_max: float
    dominated: bool
    sampling_ratio_ok: bool
    kn_identity_ok: bool
    lemma_ok: bool


BoundReport = print_bound_report(BoundReport)

REPORT_COLUMNS = [
    "seed",
    "c",
    "n",
    "k",
    "tv_exact",
    "bound_general",
    "bound_finite",
    "prod_r_k",
    "prod_r_n",
    "pass_general",
    "pass_finite",
]


def verify_instance(inst: Instance, ks: list[int] | None = None) -> list[BoundReport]:
    """Run the full certification chain of ``inst`` for every requested ``k``.

    Parameters
    ----------
    inst : Instance
        Instance with ``n <= 8``.
    ks : list of int, optional
        Values of ``k``; defaults to ``1..n``.

    Returns
    -------
    list of BoundReport
        One report per ``k``, in the order given.
    """
    if inst.n > MAX_FULL_CHAIN_N:
        raise SizeGuardError(f"Full-chain verification supports n <= {MAX_FULL_CHAIN_N}, got n = {inst.n}.")
    ks = list(range(1, inst.n + 1)) if ks is None else [int(k) for k in ks]
    for k in ks:
        if not 1 <= k <= inst.n:
            raise ValueError(f"k must be in 1..{inst.n}, got {k}.")

    lam = inst.lam
    mix = inst.mixture
    caches = {urn: minor_cache(lam, urn) for urn in mix.urns}
    reports = []
    for k in ks:
        p_k = marginal(inst.model, k)
        q_k = mixture_marginal(mix, lam, k)
        tv = tv_distance(p_k, q_k)
        gaps = [tv_urn_gap(lam, urn, k, caches[urn]) for urn in mix.urns]
        general = bound_general(inst.n, k, lam.ratios)
        finite = bound_finite(inst.c, inst.n, k, lam.ratios)
        reports.append(
            BoundReport(
                seed=inst.seed,
                c=inst.c,
                n=inst.n,
                k=k,
                tv_exact=tv,
                bound_general=general,
                bound_finite=finite,
                prod_r_k=lam.prod_ratios(k),
                prod_r_n=lam.prod_ratios(inst.n),
                pass_general=tv <= general + BOUND_PASS_TOL,
                pass_finite=tv <= finite + BOUND_PASS_TOL,
                urn_gap_max=max(g.tv_exact for g in gaps),
                dominated=all(g.dominated for g in gaps),
                sampling_ratio_ok=all(sampling_ratio_check(lam, urn, k, caches[urn]) for urn in mix.urns),
                kn_identity_ok=all(kn_identity_check(urn, k) for urn in mix.urns),
                lemma_ok=all(uniform_ratio_lemma_check(urn, k) for urn in mix.urns),
            )
        )
    return reports


def verify_general(inst: Instance, k: int) -> BoundReport:
    """Check the alphabet-free bound for ``inst`` at ``k``.

    The report carries both bounds; ``pass_general`` is the verdict for
    ``k(k-1)/(2n) (prod_{i<=k} r_i)^{-1}``, ``urn_gap_max`` localizes the
    worst urn and ``dominated`` records whether the slot-level domination
    step held. ``verify_finite`` returns the same report.
    """
    return verify_instance(inst, [k])[0]


def verify_finite(inst: Instance, k: int) -> BoundReport:
    """Check the finite-alphabet bound ``(ck/n) (prod_{i<=n} r_i)^{-2}`` for ``inst`` at ``k``.

    ``sampling_ratio_ok``, ``lemma_ok`` and ``kn_identity_ok`` record the intermediate
    inequalities and the identity the bound is assembled from. Both bounds are
    computed in one pass, so this is ``verify_general`` read through ``pass_finite``.
    """
    return verify_general(inst, k)


@dataclass
class SweepConfig:
    """Configuration of a seeded certification sweep.

    Instance ``i`` uses ``c = c_values[i % C]``,
    ``r_min = r_min_values[(i // C) % R]`` and
    ``n = n_range[0] + (i // (C R)) % (n_range[1] - n_range[0] + 1)``, and its
    seed is drawn from ``SeedSequence([seed, i])``.
    """

    seed: int = 0
    instances: int = DEFAULT_SWEEP_INSTANCES
    c_values: tuple[int, ...] = DEFAULT_SWEEP_C
    n_range: tuple[int, int] = DEFAULT_SWEEP_N
    r_min_values: tuple[float, ...] = DEFAULT_SWEEP_R_MIN
    k_values: tuple[int, ...] | None = None
    threads: int | None = None

    def __post_init__(self) -> None:
        """Validate the ranges."""
        if self.instances < 0:
            raise ValueError(f"instances must be nonnegative, got {self.instances}.")
        lo, hi = self.n_range
        if not 1 <= lo <= hi <= MAX_FULL_CHAIN_N:
            raise ValueError(f"n_range must satisfy 1 <= lo <= hi <= {MAX_FULL_CHAIN_N}, got {self.n_range}.")
        if not self.c_values or any(c < 1 for c in self.c_values):
            raise ValueError("c_values must be nonempty positive integers.")
        if not self.r_min_values or any(not 0 < r <= 1 for r in self.r_min_values):
            raise ValueError("r_min_values must lie in (0, 1].")

    def instance_params(self, index: int) -> tuple[int, int, int, float]:
        """Return ``(seed, c, n, r_min)`` of instance ``index``."""
        n_c, n_r = len(self.c_values), len(self.r_min_values)
        lo, hi = self.n_range
        c = self.c_values[index % n_c]
        r_min = self.r_min_values[(index // n_c) % n_r]
        n = lo + (index // (n_c * n_r)) % (hi - lo + 1)
        seed = int(derive_seed(self.seed, index).generate_state(1, dtype=np.uint64)[0])
        return seed, c, n, r_min

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {k: list(v) if isinstance(v, tuple) else v for k, v in self.__dict__.items()}


def _sweep_one(config: SweepConfig, index: int) -> list[BoundReport]:
    seed, c, n, r_min = config.instance_params(index)
    inst = random_instance(seed, c, n, r_min)
    ks = None if config.k_values is None else [k for k in config.k_values if k <= n]
    return verify_instance(inst, ks)


def run_sweep(config: SweepConfig | None = None) -> list[BoundReport]:
    """Verify every instance of a sweep and return all reports sorted by ``(seed, k)``.

    Instances run on a thread pool of ``config.threads`` workers (or
    ``EXCHKIT_THREADS``); seeds depend only on the master seed and the
    instance index, so the output does not depend on scheduling.
    """
    config = config if config is not None else SweepConfig()
    workers = resolve_threads(config.threads)
    indices = range(config.instances)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda i: _sweep_one(config, i), indices))
    else:
        batches = [_sweep_one(config, i) for i in indices]
    reports = [r for batch in batches for r in batch]
    return sorted(reports, key=lambda r: (r.seed, r.k))
