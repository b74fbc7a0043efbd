"""Named families of weight ratio sequences on a binary alphabet."""

from dataclasses import dataclass

import numpy as np

from exchkit.core.constants import WeightFamily
from exchkit.core.models import WeightProfile


@dataclass(frozen=True)
class WeightSequenceSpec:
    """A family of ratios ``r_1, r_2, ...`` and its binary weights ``lambda_i = (1, r_i)``.

    Families
    --------
    ``constant``
        ``r_i = a``.
    ``geometric_defect``
        ``r_i = 1 - a q^i``.
    ``polynomial_defect``
        ``r_i = 1 - a i^{-p}``.
    ``geometric``
        ``r_i = a^i``.
    ``power``
        ``r_i = i^{-p}``; ``p = 1`` is the harmonic sequence.

    Attributes
    ----------
    family : WeightFamily
        Family name.
    a : float, default 1.0
        Scale parameter.
    q : float, default 0.5
        Geometric rate of ``geometric_defect``.
    p : float, default 1.0
        Exponent of ``polynomial_defect`` and ``power``.
    """

    family: WeightFamily
    a: float = 1.0
    q: float = 0.5
    p: float = 1.0

    def __post_init__(self) -> None:
        """Validate the parameters for the family."""
        family = WeightFamily(self.family)
        object.__setattr__(self, "family", family)
        if family in (WeightFamily.CONSTANT, WeightFamily.GEOMETRIC, WeightFamily.GEOMETRIC_DEFECT):
            if not 0 < self.a <= 1:
                raise ValueError(f"{family.value} needs 0 < a <= 1, got a={self.a}.")
        if family is WeightFamily.GEOMETRIC_DEFECT and not 0 < self.q < 1:
            raise ValueError(f"geometric_defect needs 0 < q < 1, got q={self.q}.")
        if family is WeightFamily.POLYNOMIAL_DEFECT and not 0 < self.a < 1:
            raise ValueError(f"polynomial_defect needs 0 < a < 1, got a={self.a}.")
        if family in (WeightFamily.POLYNOMIAL_DEFECT, WeightFamily.POWER) and self.p <= 0:
            raise ValueError(f"{family.value} needs p > 0, got p={self.p}.")

    @classmethod
    def from_params(cls, family: WeightFamily | str, params: dict[str, float] | None = None) -> "WeightSequenceSpec":
        """Build a spec from a family name and a parameter mapping."""
        params = dict(params or {})
        unknown = set(params) - {"a", "q", "p"}
        if unknown:
            raise ValueError(f"Unknown family parameters: {sorted(unknown)}.")
        return cls(WeightFamily(family), **params)

    def ratios(self, count: int) -> np.ndarray:
        """Return ``r_1..r_count``."""
        if count < 1:
            raise ValueError(f"count must be at least 1, got {count}.")
        i = np.arange(1, count + 1, dtype=float)
        match self.family:
            case WeightFamily.CONSTANT:
                return np.full(count, float(self.a))
            case WeightFamily.GEOMETRIC_DEFECT:
                return 1.0 - self.a * self.q**i
            case WeightFamily.POLYNOMIAL_DEFECT:
                return 1.0 - self.a * i ** (-self.p)
            case WeightFamily.GEOMETRIC:
                return np.exp(i * np.log(self.a))
            case WeightFamily.POWER:
                return i ** (-self.p)
        raise ValueError(f"Unknown weight family {self.family!r}.")

    def profile(self, n: int) -> WeightProfile:
        """Binary weight profile with ``lambda_i(0) = 1`` and ``lambda_i(1) = r_i``."""
        r = self.ratios(n)
        return WeightProfile(np.column_stack([np.ones(n), r]))
