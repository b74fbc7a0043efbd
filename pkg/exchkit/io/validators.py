"""Validation classes for instance payloads."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Protocol

from exchkit.core.constants import FORMAT_VERSION, MAX_DENSE_CELLS
from exchkit.core.errors import InstanceFormatError

REQUIRED_KEYS = ("c", "n", "lambda", "g")
OPTIONAL_KEYS = ("seed", "format_version")


@dataclass
class ValidationResult:
    """Result of payload validation."""

    is_valid: bool
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def raise_if_invalid(self) -> None:
        """Raise exception if validation failed."""
        if not self.is_valid:
            error_msg = "\n".join(self.errors)
            raise InstanceFormatError(f"Validation failed:\n{error_msg}")

    def print_warnings(self) -> None:
        """Emit all warnings."""
        import warnings

        for warning in self.warnings:
            warnings.warn(warning, UserWarning, stacklevel=2)


class PayloadValidator(Protocol):
    """Protocol for payload validators."""

    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Validate a decoded instance payload."""


class BaseValidator(ABC):
    """Base class for validators."""

    @abstractmethod
    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Validate a decoded instance payload."""

    @staticmethod
    def _create_result(errors: list[str] | None = None, warnings: list[str] | None = None) -> ValidationResult:
        """Create validation result."""
        errors = errors or []
        warnings = warnings or []
        return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_positive_number(value: Any) -> bool:
    return (
        isinstance(value, int | float)
        and not isinstance(value, bool)
        and math.isfinite(value)
        and value > 0
    )


class KeyValidator(BaseValidator):
    """Validates the top-level keys and the format version."""

    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Validate key presence and version."""
        errors = []
        warnings = []

        if not isinstance(payload, dict):
            return BaseValidator._create_result(["Instance payload must be a JSON object"], warnings)

        for key in REQUIRED_KEYS:
            if key not in payload:
                errors.append(f"Missing required field '{key}'")

        unknown = sorted(set(payload) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS))
        if unknown:
            warnings.append(f"Ignoring unknown fields: {', '.join(unknown)}")

        version = payload.get("format_version", FORMAT_VERSION)
        if version != FORMAT_VERSION:
            errors.append(f"format_version must be '{FORMAT_VERSION}', got {version!r}")

        return BaseValidator._create_result(errors, warnings)


class DimensionValidator(BaseValidator):
    """Validates ``c``, ``n``, the seed and the dense size guard."""

    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Validate sizes."""
        errors = []
        warnings = []

        c, n = payload.get("c"), payload.get("n")
        if not _is_int(c) or c < 1:
            errors.append(f"c must be a positive integer, got {c!r}")
        if not _is_int(n) or n < 1:
            errors.append(f"n must be a positive integer, got {n!r}")
        if not errors and c**n > MAX_DENSE_CELLS:
            errors.append(f"c**n = {c}**{n} exceeds the dense limit of {MAX_DENSE_CELLS} cells")

        seed = payload.get("seed")
        if seed is not None and (not _is_int(seed) or not 0 <= seed < 2**64):
            errors.append(f"seed must be an unsigned 64-bit integer, got {seed!r}")

        return BaseValidator._create_result(errors, warnings)


class WeightsValidator(BaseValidator):
    """Validates the ``lambda`` rows."""

    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Validate the weight rows."""
        errors = []
        warnings = []

        lam, c, n = payload.get("lambda"), payload.get("c"), payload.get("n")
        if not isinstance(lam, list):
            return BaseValidator._create_result(["lambda must be an array of arrays"], warnings)
        if _is_int(n) and len(lam) != n:
            errors.append(f"lambda must have n = {n} rows, got {len(lam)}")
        for i, row in enumerate(lam):
            if not isinstance(row, list) or (_is_int(c) and len(row) != c):
                errors.append(f"lambda[{i}] must be an array of c = {c} numbers")
            elif not all(_is_positive_number(v) for v in row):
                errors.append(f"lambda[{i}] entries must be finite positive numbers")

        return BaseValidator._create_result(errors, warnings)


class KernelValidator(BaseValidator):
    """Validates the dense ``g`` array."""

    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Validate the kernel values."""
        errors = []
        warnings = []

        g, c, n = payload.get("g"), payload.get("c"), payload.get("n")
        if not isinstance(g, list):
            return BaseValidator._create_result(["g must be an array of numbers"], warnings)
        if _is_int(c) and _is_int(n) and c >= 1 and n >= 1 and c**n <= MAX_DENSE_CELLS and len(g) != c**n:
            errors.append(f"g must have c**n = {c**n} entries, got {len(g)}")
        if not all(_is_positive_number(v) for v in g):
            errors.append("g entries must be finite positive numbers")

        return BaseValidator._create_result(errors, warnings)


class CompositeValidator(BaseValidator):
    """Combines multiple validators."""

    def __init__(self, validators: list[BaseValidator] | None = None):
        """Initialize with list of validators."""
        self.validators = validators or self._get_default_validators()

    @staticmethod
    def _get_default_validators() -> list[BaseValidator]:
        """Get default set of validators."""
        return [
            KeyValidator(),
            DimensionValidator(),
            WeightsValidator(),
            KernelValidator(),
        ]

    def validate(self, payload: dict[str, Any]) -> ValidationResult:
        """Run all validators and combine results."""
        all_errors = []
        all_warnings = []

        for validator in self.validators:
            result = validator.validate(payload)
            all_errors.extend(result.errors)
            all_warnings.extend(result.warnings)
            if isinstance(validator, KeyValidator) and result.errors:
                break

        return ValidationResult(is_valid=len(all_errors) == 0, errors=all_errors, warnings=all_warnings)
