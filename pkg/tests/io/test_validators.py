"""Tests for instance payload validators."""

import pytest

from exchkit import InstanceFormatError
from exchkit.io import (
    CompositeValidator,
    DimensionValidator,
    KernelValidator,
    KeyValidator,
    ValidationResult,
    WeightsValidator,
)


def _payload(**overrides):
    payload = {
        "format_version": "1",
        "c": 2,
        "n": 2,
        "lambda": [[1.0, 1.0], [1.0, 2.0]],
        "g": [1.0, 0.5, 0.5, 1.0],
        "seed": 7,
    }
    payload.update(overrides)
    return payload


def test_valid_payload():
    result = CompositeValidator().validate(_payload())
    assert result.is_valid
    assert result.errors == []
    assert result.warnings == []


def test_missing_keys_stop_validation():
    payload = _payload()
    del payload["g"]
    del payload["lambda"]

    result = CompositeValidator().validate(payload)

    assert not result.is_valid
    assert result.errors == ["Missing required field 'lambda'", "Missing required field 'g'"]


def test_non_object_payload():
    result = CompositeValidator().validate([1, 2, 3])
    assert not result.is_valid
    assert "JSON object" in result.errors[0]


def test_unknown_keys_warn():
    result = KeyValidator().validate(_payload(comment="hand written"))
    assert result.is_valid
    assert result.warnings == ["Ignoring unknown fields: comment"]


def test_format_version():
    result = KeyValidator().validate(_payload(format_version="2"))
    assert not result.is_valid
    assert "format_version" in result.errors[0]


@pytest.mark.parametrize(
    "overrides,fragment",
    [
        ({"c": 0}, "c must be a positive integer"),
        ({"c": 2.0}, "c must be a positive integer"),
        ({"n": True}, "n must be a positive integer"),
        ({"c": 2, "n": 25}, "dense limit"),
        ({"seed": -1}, "seed"),
        ({"seed": 2**64}, "seed"),
        ({"seed": "7"}, "seed"),
    ],
)
def test_dimension_errors(overrides, fragment):
    result = DimensionValidator().validate(_payload(**overrides))
    assert not result.is_valid
    assert any(fragment in e for e in result.errors)


def test_missing_seed_is_fine():
    payload = _payload()
    del payload["seed"]
    assert DimensionValidator().validate(payload).is_valid


@pytest.mark.parametrize(
    "lam,fragment",
    [
        ("not a list", "array of arrays"),
        ([[1.0, 1.0]], "n = 2 rows"),
        ([[1.0, 1.0], [1.0]], "lambda[1] must be an array of c = 2"),
        ([[1.0, 0.0], [1.0, 1.0]], "lambda[0] entries"),
        ([[1.0, -2.0], [1.0, 1.0]], "lambda[0] entries"),
        ([[1.0, 1.0], [1.0, "x"]], "lambda[1] entries"),
    ],
)
def test_weight_errors(lam, fragment):
    result = WeightsValidator().validate(_payload(**{"lambda": lam}))
    assert not result.is_valid
    assert any(fragment in e for e in result.errors)


@pytest.mark.parametrize(
    "g,fragment",
    [
        ({"a": 1}, "array of numbers"),
        ([1.0, 1.0, 1.0], "c**n = 4 entries"),
        ([1.0, 1.0, 0.0, 1.0], "finite positive"),
        ([1.0, 1.0, True, 1.0], "finite positive"),
    ],
)
def test_kernel_errors(g, fragment):
    result = KernelValidator().validate(_payload(g=g))
    assert not result.is_valid
    assert any(fragment in e for e in result.errors)


def test_composite_collects_all_errors():
    result = CompositeValidator().validate(_payload(c=3, g=[1.0]))
    assert not result.is_valid
    assert any("lambda[0]" in e for e in result.errors)
    assert any("c**n = 9" in e for e in result.errors)


def test_custom_validator_list():
    result = CompositeValidator([KernelValidator()]).validate(_payload(c="two"))
    assert result.is_valid


def test_raise_if_invalid():
    ValidationResult(is_valid=True).raise_if_invalid()
    with pytest.raises(InstanceFormatError, match="Validation failed:\nboom"):
        ValidationResult(is_valid=False, errors=["boom"]).raise_if_invalid()


def test_print_warnings():
    with pytest.warns(UserWarning, match="careful"):
        ValidationResult(is_valid=True, warnings=["careful"]).print_warnings()
