"""Data models for finite alphabets, weights, kernels, urns and tuple laws."""

import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from exchkit.utils import check_dense_size, encode_tuple, isclose_symmetric, tuple_type_counts

from .constants import NEGATIVE_CLAMP_TOL, PROB_SUM_TOL
from .errors import NotWeightedExchangeableError


def _frozen_array(values: np.ndarray | list[float], dtype: type = float) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FiniteSpace:
    """Finite alphabet with points labeled ``0..c-1``."""

    c: int

    def __post_init__(self) -> None:
        """Validate the alphabet size."""
        if int(self.c) != self.c or self.c < 1:
            raise ValueError(f"Alphabet size must be a positive integer, got {self.c}.")

    @property
    def points(self) -> range:
        """Labels of the alphabet points."""
        return range(self.c)


@dataclass(frozen=True, eq=False)
class WeightFunction:
    """Strictly positive weight vector over the alphabet."""

    values: np.ndarray

    def __post_init__(self) -> None:
        """Validate positivity and freeze the values."""
        arr = _frozen_array(self.values)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("Weight function values must be a nonempty 1D vector.")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
            raise ValueError("Weight function values must be finite and strictly positive.")
        object.__setattr__(self, "values", arr)

    @property
    def c(self) -> int:
        """Alphabet size."""
        return int(self.values.size)

    @property
    def ratio(self) -> float:
        """Return ``min / max`` of the weights, a number in ``(0, 1]``."""
        return float(self.values.min() / self.values.max())


@dataclass(frozen=True, eq=False)
class WeightProfile:
    """Ordered weight functions ``lambda_1..lambda_n`` stored as an ``(n, c)`` matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        """Validate shape and positivity."""
        arr = _frozen_array(self.matrix)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("Weight profile must be a 2D array with at least one row and column.")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
            raise ValueError("Weight profile entries must be finite and strictly positive.")
        object.__setattr__(self, "matrix", arr)

    @classmethod
    def from_functions(cls, entries: list[WeightFunction]) -> "WeightProfile":
        """Stack weight functions into a profile."""
        if not entries:
            raise ValueError("Weight profile needs at least one weight function.")
        sizes = {w.c for w in entries}
        if len(sizes) != 1:
            raise ValueError("All weight functions must share the same alphabet size.")
        return cls(np.vstack([w.values for w in entries]))

    @classmethod
    def constant(cls, n: int, c: int) -> "WeightProfile":
        """Profile with every weight identically one (the exchangeable case)."""
        return cls(np.ones((n, c)))

    @property
    def n(self) -> int:
        """Number of weight functions."""
        return int(self.matrix.shape[0])

    @property
    def c(self) -> int:
        """Alphabet size."""
        return int(self.matrix.shape[1])

    @property
    def entries(self) -> list[WeightFunction]:
        """The individual weight functions."""
        return [WeightFunction(row) for row in self.matrix]

    @cached_property
    def ratios(self) -> np.ndarray:
        """Ratios ``r_i = min lambda_i / max lambda_i``."""
        return _frozen_array(self.matrix.min(axis=1) / self.matrix.max(axis=1))

    @cached_property
    def prefix_products(self) -> np.ndarray:
        """Prefix products ``prod_{i <= k} r_i`` for ``k = 1..n``."""
        return _frozen_array(np.cumprod(self.ratios))

    def prod_ratios(self, k: int) -> float:
        """Return ``prod_{i <= k} r_i``."""
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in 1..{self.n}, got {k}.")
        return float(self.prefix_products[k - 1])

    def head(self, k: int) -> "WeightProfile":
        """Profile of the first ``k`` weight functions."""
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in 1..{self.n}, got {k}.")
        return WeightProfile(self.matrix[:k])

    def tilt(self, k: int | None = None) -> np.ndarray:
        """Dense product ``prod_{i <= k} lambda_i(x_i)`` over ``X^k`` in base-c index order."""
        k = self.n if k is None else k
        check_dense_size(self.c, k)
        out = np.ones(1)
        for i in range(k):
            out = np.multiply.outer(out, self.matrix[i]).reshape(-1)
        return out

    def is_constant(self) -> bool:
        """Whether every weight function is constant over the alphabet."""
        return bool(np.all(self.ratios == 1.0))


@dataclass(frozen=True, eq=False)
class SymmetricKernel:
    """Dense positive permutation-symmetric function ``g`` on ``X^n``."""

    n: int
    c: int
    values: np.ndarray

    def __post_init__(self) -> None:
        """Validate size, positivity and symmetry."""
        check_dense_size(self.c, self.n)
        arr = _frozen_array(self.values).reshape(-1)
        if arr.size != self.c**self.n:
            raise ValueError(f"Kernel must have c**n = {self.c**self.n} entries, got {arr.size}.")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
            raise ValueError("Kernel entries must be finite and strictly positive.")
        cube = arr.reshape((self.c,) * self.n)
        for i in range(self.n - 1):
            swapped = np.swapaxes(cube, i, i + 1)
            if not np.all(isclose_symmetric(cube, swapped)):
                raise NotWeightedExchangeableError(
                    f"Kernel is not symmetric under the transposition ({i + 1} {i + 2})."
                )
        object.__setattr__(self, "values", arr)

    @classmethod
    def constant(cls, n: int, c: int) -> "SymmetricKernel":
        """The kernel identically equal to one."""
        return cls(n=n, c=c, values=np.ones(c**n))

    @classmethod
    def from_type_function(cls, n: int, c: int, type_values: dict[tuple[int, ...], float]) -> "SymmetricKernel":
        """Build a kernel from its value on each type (count vector)."""
        counts = tuple_type_counts(c, n)
        values = np.array([type_values[tuple(int(v) for v in row)] for row in counts], dtype=float)
        return cls(n=n, c=c, values=values)


@dataclass(frozen=True, eq=False)
class TupleDistribution:
    """Exact probability mass function over ``X^k`` stored densely in base-c order."""

    k: int
    c: int
    probs: np.ndarray

    def __post_init__(self) -> None:
        """Validate size, clamp float noise and check normalization."""
        cells = check_dense_size(self.c, self.k)
        arr = np.array(self.probs, dtype=float, copy=True).reshape(-1)
        if arr.size != cells:
            raise ValueError(f"Distribution must have c**k = {cells} entries, got {arr.size}.")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Probabilities must be finite.")
        if np.any(arr < -NEGATIVE_CLAMP_TOL):
            raise ValueError(f"Negative probability {arr.min():.3e} below -{NEGATIVE_CLAMP_TOL:g}.")
        if np.any(arr < 0):
            warnings.warn("Clamping tiny negative probabilities to zero.", UserWarning, stacklevel=3)
            arr = np.clip(arr, 0.0, None)
            arr = arr / arr.sum()
        total = arr.sum()
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"Probabilities must sum to 1 within {PROB_SUM_TOL:g}, got {total!r}.")
        arr.setflags(write=False)
        object.__setattr__(self, "probs", arr)

    @classmethod
    def from_weights(cls, k: int, c: int, weights: np.ndarray) -> "TupleDistribution":
        """Normalize nonnegative weights into a distribution."""
        w = np.array(weights, dtype=float).reshape(-1)
        w = np.where((w < 0) & (w >= -NEGATIVE_CLAMP_TOL), 0.0, w)
        total = w.sum()
        if not total > 0:
            raise ValueError("Weights must have positive total mass.")
        return cls(k=k, c=c, probs=w / total)

    @classmethod
    def point_mass(cls, point: tuple[int, ...], c: int) -> "TupleDistribution":
        """Distribution concentrated on a single tuple."""
        probs = np.zeros(c ** len(point))
        probs[encode_tuple(point, c)] = 1.0
        return cls(k=len(point), c=c, probs=probs)

    @classmethod
    def product(cls, factors: list[np.ndarray]) -> "TupleDistribution":
        """Product law of the given one-dimensional probability vectors."""
        if not factors:
            raise ValueError("Product needs at least one factor.")
        c = len(factors[0])
        out = np.ones(1)
        for f in factors:
            if len(f) != c:
                raise ValueError("All factors must share the alphabet size.")
            out = np.multiply.outer(out, np.asarray(f, dtype=float)).reshape(-1)
        return cls.from_weights(len(factors), c, out)

    @property
    def shape(self) -> tuple[int, int]:
        """``(k, c)``."""
        return (self.k, self.c)

    def as_array(self) -> np.ndarray:
        """View the probabilities as a ``(c,) * k`` array with ``x_1`` on axis 0."""
        return self.probs.reshape((self.c,) * self.k)

    def __getitem__(self, point: tuple[int, ...]) -> float:
        """Probability of a tuple."""
        return float(self.as_array()[tuple(point)])


@dataclass(frozen=True)
class Urn:
    """Multiset of ``n`` alphabet points given by the multiplicities ``counts``."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate counts."""
        counts = tuple(int(v) for v in self.counts)
        if not counts:
            raise ValueError("Urn needs at least one alphabet point.")
        if any(v < 0 for v in counts):
            raise ValueError("Urn counts must be nonnegative.")
        if sum(counts) < 1:
            raise ValueError("Urn must contain at least one point.")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_values(cls, values: list[int], c: int) -> "Urn":
        """Build an urn from its (possibly repeated) values."""
        counts = np.bincount(np.asarray(values, dtype=int), minlength=c)
        if counts.size != c:
            raise ValueError(f"Values must lie in 0..{c - 1}.")
        return cls(tuple(int(v) for v in counts))

    @property
    def n(self) -> int:
        """Number of slots."""
        return sum(self.counts)

    @property
    def c(self) -> int:
        """Alphabet size."""
        return len(self.counts)

    @property
    def slots(self) -> np.ndarray:
        """Slot values with multiplicity, grouped by value in ascending order."""
        return np.repeat(np.arange(self.c), self.counts)

    @property
    def empirical(self) -> np.ndarray:
        """Empirical measure ``counts / n``."""
        return np.asarray(self.counts, dtype=float) / self.n

    @property
    def occupied(self) -> list[int]:
        """Alphabet points with positive multiplicity."""
        return [v for v, m in enumerate(self.counts) if m > 0]

    def __repr__(self) -> str:
        """Compact representation."""
        return f"Urn{self.counts}"


def ratio(w: WeightFunction | np.ndarray | list[float]) -> float:
    """Return ``min(w) / max(w)`` for a strictly positive weight vector."""
    if not isinstance(w, WeightFunction):
        w = WeightFunction(np.asarray(w, dtype=float))
    return w.ratio
