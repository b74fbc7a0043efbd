"""Instance files and payload validation."""

from .instance_json import (
    InstancePayload,
    dump_instance,
    instance_to_dict,
    load_instance,
    load_payload,
    parse_payload,
    write_instance,
)
from .validators import (
    BaseValidator,
    CompositeValidator,
    DimensionValidator,
    KernelValidator,
    KeyValidator,
    ValidationResult,
    WeightsValidator,
)

__all__ = [
    "BaseValidator",
    "CompositeValidator",
    "DimensionValidator",
    "InstancePayload",
    "KernelValidator",
    "KeyValidator",
    "ValidationResult",
    "WeightsValidator",
    "dump_instance",
    "instance_to_dict",
    "load_instance",
    "load_payload",
    "parse_payload",
    "write_instance",
]
