"""Overflow-safe positive reals stored as mantissa and power-of-two scale."""

import math
from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class ScaledReal:
    """Nonnegative real ``mantissa * 2**log2_scale`` with ``mantissa`` in ``[1, 2)`` or zero.

    Products and ratios of permanents of ``n <= 24`` matrices can leave the
    double range; keeping the binary exponent separately makes them exact up
    to double rounding of the mantissa.
    """

    mantissa: float
    log2_scale: int = 0

    def __post_init__(self) -> None:
        """Normalize the mantissa into ``[1, 2)``."""
        m = float(self.mantissa)
        if not math.isfinite(m):
            raise ValueError(f"Mantissa must be finite, got {m!r}.")
        if m < 0:
            raise ValueError(f"ScaledReal holds nonnegative values only, got mantissa {m!r}.")
        if m == 0.0:
            object.__setattr__(self, "mantissa", 0.0)
            object.__setattr__(self, "log2_scale", 0)
            return
        frac, exp = math.frexp(m)
        object.__setattr__(self, "mantissa", 2.0 * frac)
        object.__setattr__(self, "log2_scale", int(self.log2_scale) + exp - 1)

    @classmethod
    def from_float(cls, value: float) -> "ScaledReal":
        """Wrap a nonnegative double."""
        return cls(value, 0)

    @classmethod
    def one(cls) -> "ScaledReal":
        """The value 1, the permanent of the empty matrix."""
        return cls(1.0, 0)

    @classmethod
    def zero(cls) -> "ScaledReal":
        """The value 0."""
        return cls(0.0, 0)

    def is_zero(self) -> bool:
        """Whether the value is exactly zero."""
        return self.mantissa == 0.0

    def to_float(self) -> float:
        """Convert to a double, returning ``inf`` on overflow."""
        try:
            return math.ldexp(self.mantissa, self.log2_scale)
        except OverflowError:
            return math.inf

    def log2(self) -> float:
        """Base-2 logarithm of the value."""
        if self.is_zero():
            return -math.inf
        return math.log2(self.mantissa) + self.log2_scale

    def __float__(self) -> float:
        """Same as :meth:`to_float`."""
        return self.to_float()

    def __mul__(self, other: "ScaledReal | float | int") -> "ScaledReal":
        """Multiply by another scaled value or a nonnegative number."""
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(float(other))
        return ScaledReal(self.mantissa * other.mantissa, self.log2_scale + other.log2_scale)

    __rmul__ = __mul__

    def __truediv__(self, other: "ScaledReal | float | int") -> "ScaledReal":
        """Divide by a nonzero scaled value or number."""
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(float(other))
        if other.is_zero():
            raise ZeroDivisionError("Division by a zero ScaledReal.")
        return ScaledReal(self.mantissa / other.mantissa, self.log2_scale - other.log2_scale)

    def __add__(self, other: "ScaledReal | float | int") -> "ScaledReal":
        """Add two nonnegative values."""
        if not isinstance(other, ScaledReal):
            other = ScaledReal.from_float(float(other))
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        hi, lo = (self, other) if self.log2_scale >= other.log2_scale else (other, self)
        shift = lo.log2_scale - hi.log2_scale
        return ScaledReal(hi.mantissa + math.ldexp(lo.mantissa, shift), hi.log2_scale)

    __radd__ = __add__

    def ratio(self, other: "ScaledReal") -> float:
        """Return ``self / other`` as a double."""
        return (self / other).to_float()

    def __lt__(self, other: object) -> bool:
        """Order by value."""
        if not isinstance(other, ScaledReal):
            if isinstance(other, int | float):
                other = ScaledReal.from_float(float(other))
            else:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.mantissa < other.mantissa
        if self.log2_scale != other.log2_scale:
            return self.log2_scale < other.log2_scale
        return self.mantissa < other.mantissa

    def __repr__(self) -> str:
        """Show mantissa, scale and the double value."""
        return f"ScaledReal({self.mantissa!r} * 2**{self.log2_scale}, ~{self.to_float():.6g})"
