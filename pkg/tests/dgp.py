"""Data generating processes for testing."""

import abc

import numpy as np

from exchkit import (
    SymmetricKernel,
    TupleDistribution,
    Urn,
    UrnMixture,
    WeightProfile,
    build_model,
    reconstruct,
    weak_compositions,
)


class BaseDGP(abc.ABC):
    """Base abstract class for all data generating processes."""

    def __init__(self, random_seed=42):
        """Initialize the data generating process.

        Parameters
        ----------
        random_seed : int, default=42
            Random seed for reproducibility.
        """
        self.random_seed = random_seed
        self.set_seed()

    @abc.abstractmethod
    def generate_data(self, *args, **kwargs):
        """Generate a law from the DGP.

        Returns
        -------
        dict
            Dictionary containing:
            - 'p': TupleDistribution with the generated law
            - 'lam': WeightProfile the law is weighted exchangeable for
            - Additional elements specific to the DGP
        """

    def set_seed(self, seed=None):
        """Set the random generator.

        Parameters
        ----------
        seed : int, optional
            If provided, sets a new seed. Otherwise, uses the one from initialization.
        """
        if seed is not None:
            self.random_seed = seed
        self.rng = np.random.default_rng(self.random_seed)


class TiltedKernelDGP(BaseDGP):
    """Random positive weights times a random symmetric kernel with unrestricted spread."""

    def __init__(self, c=2, n=3, r_min=0.3, random_seed=42):
        """Initialize the alphabet size, length and smallest ratio."""
        super().__init__(random_seed=random_seed)
        self.c = c
        self.n = n
        self.r_min = r_min

    def generate_data(self):
        """Draw ``lam`` log-uniform in ``[r_min, 1]`` and a kernel constant on type classes."""
        lam = WeightProfile(np.exp(self.rng.uniform(np.log(self.r_min), 0.0, size=(self.n, self.c))))
        counts = np.array(
            [np.bincount(row, minlength=self.c) for row in np.indices((self.c,) * self.n).reshape(self.n, -1).T]
        )
        _, inverse = np.unique(counts, axis=0, return_inverse=True)
        inverse = inverse.reshape(-1)
        class_values = self.rng.uniform(0.1, 5.0, size=inverse.max() + 1)
        g = SymmetricKernel(n=self.n, c=self.c, values=class_values[inverse])
        return {"p": build_model(lam, g), "lam": lam, "g": g}


class UrnMixtureDGP(BaseDGP):
    """Random Dirichlet weights over all urns, mixed through their urn-conditional laws."""

    def __init__(self, lam, random_seed=42):
        """Store the weight profile."""
        super().__init__(random_seed=random_seed)
        self.lam = lam

    def generate_data(self):
        """Draw mixture weights and reconstruct the law."""
        urns = [Urn(counts) for counts in weak_compositions(self.lam.n, self.lam.c)]
        weights = self.rng.dirichlet(np.ones(len(urns)))
        mix = UrnMixture(tuple(zip(urns, weights / weights.sum(), strict=True)))
        return {"p": reconstruct(mix, self.lam), "lam": self.lam, "mix": mix}


def running_profile():
    """Two binary weights: ``lambda_1`` constant and ``lambda_2 = (1, 2)``."""
    return WeightProfile(np.array([[1.0, 1.0], [1.0, 2.0]]))


def iid_bernoulli(n, prob=0.5):
    """I.i.d. Bernoulli law on ``{0, 1}^n`` in base-2 order."""
    ones = np.indices((2,) * n).reshape(n, -1).sum(axis=0)
    return TupleDistribution(k=n, c=2, probs=prob**ones * (1 - prob) ** (n - ones))
