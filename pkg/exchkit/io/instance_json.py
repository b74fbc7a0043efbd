"""Reading and writing instance files."""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from exchkit.bounds import Instance
from exchkit.core.constants import FORMAT_VERSION
from exchkit.core.errors import InstanceFormatError
from exchkit.core.models import SymmetricKernel, TupleDistribution, WeightProfile

from .validators import CompositeValidator


@dataclass(frozen=True, eq=False)
class InstancePayload:
    """Validated contents of an instance file, before any symmetry check.

    Attributes
    ----------
    c : int
        Alphabet size.
    n : int
        Sequence length.
    lam : WeightProfile
        Weight rows.
    g : numpy.ndarray
        Kernel values in base-c order with ``x_1`` most significant.
    seed : int or None
        Generating seed, if recorded.
    """

    c: int
    n: int
    lam: WeightProfile
    g: np.ndarray
    seed: int | None = None

    def tilted_law(self) -> TupleDistribution:
        """Normalized ``prod_i lambda_i(x_i) g(x)``, whether or not ``g`` is symmetric."""
        return TupleDistribution.from_weights(self.n, self.c, self.lam.tilt() * self.g)

    def to_instance(self) -> Instance:
        """Build the instance; raises ``NotWeightedExchangeableError`` for an asymmetric ``g``."""
        kernel = SymmetricKernel(n=self.n, c=self.c, values=self.g)
        return Instance(c=self.c, n=self.n, lam=self.lam, g=kernel, seed=self.seed)


def instance_to_dict(inst: Instance) -> dict[str, Any]:
    """Instance as a JSON-ready mapping with a fixed key order."""
    payload: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "c": int(inst.c),
        "n": int(inst.n),
        "lambda": [[float(v) for v in row] for row in inst.lam.matrix],
        "g": [float(v) for v in inst.g.values],
    }
    if inst.seed is not None:
        payload["seed"] = int(inst.seed)
    return payload


def dump_instance(inst: Instance) -> str:
    """Serialize an instance.

    Floats are written with ``repr``, the shortest decimal that reads back
    to the same double, so reloading is bit-exact.
    """
    return json.dumps(instance_to_dict(inst), allow_nan=False) + "\n"


def write_instance(inst: Instance, path: str | Path) -> None:
    """Write an instance file."""
    Path(path).write_text(dump_instance(inst), encoding="utf-8")


def parse_payload(text: str) -> InstancePayload:
    """Decode and validate instance JSON text.

    Parameters
    ----------
    text : str
        JSON document.

    Returns
    -------
    InstancePayload
        The decoded arrays. The kernel is not checked for symmetry.

    Raises
    ------
    InstanceFormatError
        If the text is not valid JSON or fails schema validation.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"Instance file is not valid JSON: {exc}") from exc

    result = CompositeValidator().validate(raw)
    result.raise_if_invalid()
    result.print_warnings()

    return InstancePayload(
        c=raw["c"],
        n=raw["n"],
        lam=WeightProfile(np.asarray(raw["lambda"], dtype=float)),
        g=np.asarray(raw["g"], dtype=float),
        seed=raw.get("seed"),
    )


def load_payload(path: str | Path) -> InstancePayload:
    """Read and validate an instance file without the symmetry check."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceFormatError(f"Cannot read instance file {path}: {exc}") from exc
    return parse_payload(text)


def load_instance(path: str | Path) -> Instance:
    """Read an instance file into an :class:`~exchkit.bounds.Instance`."""
    return load_payload(path).to_instance()
