"""Extreme-point decomposition of weighted exchangeable laws."""

import math
from dataclasses import dataclass

import numpy as np

from exchkit.core.constants import DEFAULT_ATOL, DEFAULT_RTOL, MAX_ENUMERATION_N, PROB_SUM_TOL
from exchkit.core.errors import DecompositionMismatchError, NotWeightedExchangeableError, SizeGuardError
from exchkit.core.exchangeability import find_symmetry_violation
from exchkit.core.models import TupleDistribution, Urn, WeightProfile
from exchkit.extremal import urn_conditional, urn_weighted_iid
from exchkit.utils import isclose_symmetric, tuple_type_counts, weak_compositions


@dataclass(frozen=True)
class UrnMixture:
    """Weights ``w_U`` over distinct urns, in enumeration order.

    Attributes
    ----------
    atoms : tuple of (Urn, float)
        Urns with positive weight and their weights, summing to one.
    """

    atoms: tuple[tuple[Urn, float], ...]

    def __post_init__(self) -> None:
        """Validate the atoms."""
        atoms = tuple((urn, float(w)) for urn, w in self.atoms)
        if not atoms:
            raise ValueError("Mixture needs at least one atom.")
        urns = [urn for urn, _ in atoms]
        if len(set(urns)) != len(urns):
            raise ValueError("Mixture urns must be distinct.")
        if len({(u.n, u.c) for u in urns}) != 1:
            raise ValueError("All urns in a mixture must share n and c.")
        weights = [w for _, w in atoms]
        if any(w < 0 or not math.isfinite(w) for w in weights):
            raise ValueError("Mixture weights must be finite and nonnegative.")
        if abs(math.fsum(weights) - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"Mixture weights must sum to 1, got {math.fsum(weights)!r}.")
        object.__setattr__(self, "atoms", atoms)

    @property
    def urns(self) -> list[Urn]:
        """Urns of the atoms."""
        return [urn for urn, _ in self.atoms]

    @property
    def weights(self) -> np.ndarray:
        """Weights of the atoms."""
        return np.array([w for _, w in self.atoms])

    @property
    def n(self) -> int:
        """Urn size."""
        return self.atoms[0][0].n

    @property
    def c(self) -> int:
        """Alphabet size."""
        return self.atoms[0][0].c

    def weight_of(self, urn: Urn) -> float:
        """Weight of ``urn``, zero if it is not an atom."""
        for u, w in self.atoms:
            if u == urn:
                return w
        return 0.0

    def __len__(self) -> int:
        """Number of atoms."""
        return len(self.atoms)


def decompose(
    p: TupleDistribution,
    lam: WeightProfile,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> UrnMixture:
    """Write a weighted exchangeable law as a mixture of urn-conditional laws.

    The weight of an urn is the mass of its type class, and the law
    conditioned on the type class must be the urn-conditional law of that
    urn. Each conditional is recomputed and compared, so a successful call
    certifies the extreme point characterization for this input.

    Parameters
    ----------
    p : TupleDistribution
        Law over ``X^n`` that is ``lam``-exchangeable, ``n <= 12``.
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    rtol, atol : float
        Tolerances for the symmetry check and the conditional comparison.

    Returns
    -------
    UrnMixture
        Atoms for every urn with positive mass, in descending lexicographic
        order of the counts.
    """
    if lam.n != p.k or lam.c != p.c:
        raise ValueError(f"Profile (n, c) = ({lam.n}, {lam.c}) does not match the law's (k, c) = {p.shape}.")
    if p.k > MAX_ENUMERATION_N:
        raise SizeGuardError(f"n = {p.k} exceeds the exact enumeration limit of {MAX_ENUMERATION_N}.")
    violation = find_symmetry_violation(p, lam, rtol=rtol, atol=atol)
    if violation is not None:
        raise NotWeightedExchangeableError(
            f"Law is not weighted exchangeable: transposition ({violation.i} {violation.j}) "
            f"changes the de-tilted mass at {violation.point} from {violation.value!r} "
            f"to {violation.swapped_value!r}."
        )

    types = tuple_type_counts(p.c, p.k)
    atoms = []
    for counts in weak_compositions(p.k, p.c):
        in_class = np.all(types == np.asarray(counts), axis=1)
        mass = math.fsum(p.probs[in_class])
        if mass <= 0:
            continue
        urn = Urn(counts)
        observed = p.probs[in_class] / mass
        expected = urn_conditional(lam, urn, p.k).probs[in_class]
        close = isclose_symmetric(observed, expected, rtol=rtol, atol=atol)
        if not np.all(close):
            worst = int(np.argmax(np.abs(observed - expected)))
            raise DecompositionMismatchError(
                f"Conditional law on the type class of {urn!r} differs from its urn-conditional law: "
                f"{observed[worst]!r} vs {expected[worst]!r}."
            )
        atoms.append((urn, mass))

    total = math.fsum(w for _, w in atoms)
    return UrnMixture(tuple((urn, w / total) for urn, w in atoms))


def _mix_components(mix: UrnMixture, components: list[TupleDistribution]) -> TupleDistribution:
    stacked = np.vstack([law.probs for law in components])
    first = components[0]
    return TupleDistribution.from_weights(first.k, first.c, mix.weights @ stacked)


def reconstruct(mix: UrnMixture, lam: WeightProfile) -> TupleDistribution:
    """Mixture ``sum_U w_U P_{U,n}`` of the urn-conditional laws."""
    return _mix_components(mix, [urn_conditional(lam, urn, mix.n) for urn in mix.urns])


def mixture_marginal(mix: UrnMixture, lam: WeightProfile, k: int) -> TupleDistribution:
    """Mixture ``sum_U w_U Q_{U,k}`` of the weighted i.i.d. urn laws on ``X^k``."""
    return _mix_components(mix, [urn_weighted_iid(lam, urn, k) for urn in mix.urns])


def build_Q(p: TupleDistribution, lam: WeightProfile, mix: UrnMixture | None = None) -> TupleDistribution:
    """Mixture of weighted i.i.d. laws approximating ``p``.

    Every urn of the decomposition is replaced by independent draws with
    replacement from it, keeping the urn weights.

    Parameters
    ----------
    p : TupleDistribution
        Weighted exchangeable law over ``X^n``.
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    mix : UrnMixture, optional
        Precomputed ``decompose(p, lam)``.

    Returns
    -------
    TupleDistribution
        The approximant ``Q_n`` over ``X^n``.
    """
    mix = mix if mix is not None else decompose(p, lam)
    return mixture_marginal(mix, lam, p.k)
