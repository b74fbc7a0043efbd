"""Weighted exchangeable test instances."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from exchkit.core.exchangeability import build_model
from exchkit.core.models import SymmetricKernel, TupleDistribution, WeightProfile
from exchkit.decomposition import UrnMixture, build_Q, decompose
from exchkit.utils import tuple_type_counts


@dataclass(frozen=True, eq=False)
class Instance:
    """A weighted exchangeable law ``f_n ~ prod_i lambda_i(x_i) g(x)`` with its parameters.

    Attributes
    ----------
    c : int
        Alphabet size.
    n : int
        Sequence length.
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    g : SymmetricKernel
        Symmetric kernel on ``X^n``.
    seed : int or None
        Seed the instance was generated from, if any.
    """

    c: int
    n: int
    lam: WeightProfile
    g: SymmetricKernel
    seed: int | None = None

    def __post_init__(self) -> None:
        """Check that the parts agree in shape."""
        if self.lam.n != self.n or self.lam.c != self.c:
            raise ValueError(f"lambda has shape ({self.lam.n}, {self.lam.c}), expected ({self.n}, {self.c}).")
        if self.g.n != self.n or self.g.c != self.c:
            raise ValueError(f"g is defined on {self.g.c}**{self.g.n}, expected {self.c}**{self.n}.")

    @cached_property
    def model(self) -> TupleDistribution:
        """The law ``P_n``."""
        return build_model(self.lam, self.g)

    @cached_property
    def mixture(self) -> UrnMixture:
        """Extreme-point decomposition of ``P_n``."""
        return decompose(self.model, self.lam)

    @cached_property
    def approximant(self) -> TupleDistribution:
        """The weighted i.i.d. mixture ``Q_n`` built from the decomposition."""
        return build_Q(self.model, self.lam, self.mixture)


def symmetric_noise_kernel(rng: np.random.Generator, c: int, n: int, spread: float = 1.0) -> SymmetricKernel:
    """Kernel equal on each type class to the class mean of ``exp(U(-spread, spread))`` noise."""
    types = tuple_type_counts(c, n)
    _, inverse = np.unique(types, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    noise = np.exp(rng.uniform(-spread, spread, size=types.shape[0]))
    class_mean = np.bincount(inverse, weights=noise) / np.bincount(inverse)
    return SymmetricKernel(n=n, c=c, values=class_mean[inverse])


def random_instance(seed: int, c: int, n: int, r_min: float) -> Instance:
    """Draw a random weighted exchangeable instance.

    Each weight entry is log-uniform on ``[r_min, 1]`` and one entry per row
    is then set to 1, so every ratio is at least ``r_min`` and every row has
    maximum 1. With ``r_min = 1`` the weights are constant.

    Parameters
    ----------
    seed : int
        Seed for ``numpy.random.default_rng``.
    c : int
        Alphabet size.
    n : int
        Sequence length.
    r_min : float
        Smallest allowed ratio, in ``(0, 1]``.

    Returns
    -------
    Instance
        The instance; identical for identical arguments.
    """
    if not 0 < r_min <= 1:
        raise ValueError(f"r_min must lie in (0, 1], got {r_min}.")
    if c < 1 or n < 1:
        raise ValueError(f"c and n must be positive, got c={c}, n={n}.")
    rng = np.random.default_rng(seed)
    lam = np.exp(rng.uniform(np.log(r_min), 0.0, size=(n, c)))
    lam[np.arange(n), rng.integers(0, c, size=n)] = 1.0
    g = symmetric_noise_kernel(rng, c, n)
    return Instance(c=c, n=n, lam=WeightProfile(lam), g=g, seed=seed)
