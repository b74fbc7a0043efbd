"""Command line interface."""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import TextIO

import numpy as np
import pandas as pd

from exchkit import __version__
from exchkit.asymptotics import WeightSequenceSpec, classify_weight_sequence, tv_decay_experiment
from exchkit.bounds import (
    REPORT_COLUMNS,
    SweepConfig,
    lp_project,
    projection_grid,
    random_instance,
    run_sweep,
    verify_instance,
)
from exchkit.core.constants import (
    DEFAULT_SWEEP_C,
    DEFAULT_SWEEP_INSTANCES,
    DEFAULT_SWEEP_N,
    DEFAULT_SWEEP_R_MIN,
    MAX_DECAY_N,
    ExitCode,
    LPSolver,
    WeightFamily,
)
from exchkit.core.distances import tv_distance
from exchkit.core.exchangeability import find_symmetry_violation, marginal
from exchkit.core.models import TupleDistribution, Urn
from exchkit.decomposition import mixture_marginal, sample_model
from exchkit.extremal import sample_urn_conditional, urn_conditional
from exchkit.io import dump_instance, load_instance, load_payload

logger = logging.getLogger(__name__)


def _open_out(out: str | None) -> TextIO:
    if out is None or out == "-":
        return sys.stdout
    return open(out, "w", encoding="utf-8", newline="")


def _write_frame(frame: pd.DataFrame, out: str | None) -> None:
    handle = _open_out(out)
    try:
        frame.to_csv(handle, index=False, lineterminator="\n")
    finally:
        if handle is not sys.stdout:
            handle.close()
    if out not in (None, "-"):
        logger.info("Wrote %d rows to %s", len(frame), out)


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)


def _parse_urn(text: str, c: int) -> Urn:
    try:
        counts = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--urn must be comma-separated integers, got {text!r}.") from exc
    if len(counts) != c:
        raise ValueError(f"--urn needs {c} counts, got {len(counts)}.")
    return Urn(counts)


def _parse_params(items: list[str] | None) -> dict[str, float]:
    params = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"--param expects name=value, got {item!r}.")
        params[key.strip()] = float(value)
    return params


def cmd_gen(args: argparse.Namespace) -> ExitCode:
    """Write a random instance file."""
    inst = random_instance(args.seed, args.c, args.n, args.r_min)
    _write_text(dump_instance(inst), args.out)
    return ExitCode.SUCCESS


def cmd_check(args: argparse.Namespace) -> ExitCode:
    """Test an instance file for weighted exchangeability."""
    payload = load_payload(args.instance)
    violation = find_symmetry_violation(payload.tilted_law(), payload.lam)
    if violation is None:
        print(f"{args.instance}: weighted exchangeable (c = {payload.c}, n = {payload.n})")
        return ExitCode.SUCCESS
    print(
        f"{args.instance}: not weighted exchangeable; transposition ({violation.i} {violation.j}) "
        f"maps x = {violation.point} from h = {violation.value:.6g} to h = {violation.swapped_value:.6g}"
    )
    return ExitCode.VERIFICATION_FAILURE


def cmd_verify(args: argparse.Namespace) -> ExitCode:
    """Certify the bounds on one instance file or a seeded sweep."""
    if args.instance is not None:
        inst = load_instance(args.instance)
        reports = verify_instance(inst, args.k)
    else:
        n_values = args.n or list(DEFAULT_SWEEP_N)
        if len(n_values) > 2:
            raise ValueError("--n takes one value or a range 'lo hi' for sweeps.")
        config = SweepConfig(
            seed=args.seed,
            instances=args.instances,
            c_values=tuple(args.c or DEFAULT_SWEEP_C),
            n_range=(n_values[0], n_values[-1]),
            r_min_values=tuple(args.r_min or DEFAULT_SWEEP_R_MIN),
            k_values=tuple(args.k) if args.k else None,
            threads=args.threads,
        )
        logger.info("Running sweep %s", config.to_dict())
        reports = run_sweep(config)

    frame = pd.DataFrame([r._asdict() for r in reports], columns=list(REPORT_COLUMNS))
    _write_frame(frame, args.out)

    failed_general = [r for r in reports if not r.pass_general]
    failed_finite = [r for r in reports if not r.pass_finite]
    logger.info(
        "%d rows: %d general-bound violations, %d finite-bound violations",
        len(reports),
        len(failed_general),
        len(failed_finite),
    )
    for r in failed_general:
        logger.debug("general bound exceeded at seed=%s n=%d k=%d dominated=%s", r.seed, r.n, r.k, r.dominated)
    for r in failed_finite:
        logger.debug(
            "finite bound exceeded at seed=%s n=%d k=%d sampling_ratio_ok=%s", r.seed, r.n, r.k, r.sampling_ratio_ok
        )
    if failed_general or failed_finite:
        return ExitCode.VERIFICATION_FAILURE
    return ExitCode.SUCCESS


def cmd_sample(args: argparse.Namespace) -> ExitCode:
    """Draw exact samples from an instance law or one of its urns."""
    inst = load_instance(args.instance)
    if args.urn is not None:
        urn = _parse_urn(args.urn, inst.c)
        draws = sample_urn_conditional(inst.lam, urn, args.seed, args.samples)
        exact = urn_conditional(inst.lam, urn, urn.n)
        logger.info("Sampling urn %s", urn)
    else:
        draws = sample_model(inst.mixture, inst.lam, args.samples, args.seed)
        exact = inst.model

    if args.out is not None:
        columns = [f"x{i + 1}" for i in range(inst.n)]
        _write_frame(pd.DataFrame(draws, columns=columns), args.out)

    codes = draws @ (inst.c ** np.arange(inst.n - 1, -1, -1, dtype=np.int64))
    _write_frame(frequency_table(codes, exact, args.samples), args.freq_out)
    return ExitCode.SUCCESS


def frequency_table(codes: np.ndarray, exact: TupleDistribution, n_samples: int) -> pd.DataFrame:
    """Observed counts against exact probabilities on the support of ``exact``."""
    support = np.flatnonzero(exact.probs > 0)
    observed = np.bincount(codes, minlength=exact.probs.size)[support] if codes.size else np.zeros(support.size)
    tuples = ["".join(str(v) for v in row) for row in np.array(np.unravel_index(support, (exact.c,) * exact.k)).T]
    return pd.DataFrame(
        {
            "tuple": tuples,
            "count": observed.astype(int),
            "frequency": observed / max(n_samples, 1),
            "probability": exact.probs[support],
        }
    )


def cmd_project(args: argparse.Namespace) -> ExitCode:
    """Project ``P_k`` onto weighted i.i.d. mixtures over a grid."""
    inst = load_instance(args.instance)
    k = args.k
    if not 1 <= k <= inst.n:
        raise ValueError(f"k must be in 1..{inst.n}, got {k}.")
    p_k = marginal(inst.model, k)
    grid = projection_grid(inst.c, args.grid, inst.mixture.urns)
    result = lp_project(p_k, inst.lam, grid, args.solver)
    constructed = tv_distance(p_k, mixture_marginal(inst.mixture, inst.lam, k))
    support = np.flatnonzero(result.mixture_weights > 1e-9)
    report = {
        "c": inst.c,
        "n": inst.n,
        "k": k,
        "solver": result.solver,
        "grid_size": int(grid.shape[0]),
        "lp_value": result.value,
        "tv_constructed": constructed,
        "atoms": [
            {"base": [float(v) for v in grid[m]], "weight": float(result.mixture_weights[m])} for m in support
        ],
    }
    _write_text(json.dumps(report, indent=2) + "\n", args.out)
    logger.info("LP distance %.6g against %.6g for the constructed mixture", result.value, constructed)
    return ExitCode.SUCCESS


def cmd_asymptotics(args: argparse.Namespace) -> ExitCode:
    """Write a decay curve for a named weight family."""
    spec = WeightSequenceSpec.from_params(args.family, _parse_params(args.param))
    k = args.k
    n_min = args.n_min if args.n_min is not None else max(k, 2)
    points = tv_decay_experiment(spec, k, list(range(n_min, args.n_max + 1)), tuple(args.mix))
    cls = classify_weight_sequence(spec)
    logger.info(
        "%s: sum(1 - r) = %.6g, sum r = %.6g, mixture representation %s, Bernoulli divergence %s",
        spec.family.value,
        cls.sum_one_minus_r,
        cls.sum_r,
        "holds" if cls.summable_defect else "not guaranteed",
        "holds" if cls.ratio_sum_diverges else "fails",
    )
    _write_frame(pd.DataFrame([p._asdict() for p in points]), args.out)
    return ExitCode.SUCCESS


def build_parser() -> argparse.ArgumentParser:
    """Build the ``exchkit`` argument parser."""
    parser = argparse.ArgumentParser(prog="exchkit", description="Finite weighted exchangeable sequences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log progress; repeat for debug output.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[[argparse.Namespace], ExitCode], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", default=None, help="Output path; standard output when omitted.")
        return p

    p = add("gen", cmd_gen, "Generate a random weighted exchangeable instance.")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r-min", type=float, default=0.5)

    p = add("check", cmd_check, "Check an instance file for weighted exchangeability.")
    p.add_argument("instance")

    p = add("verify", cmd_verify, "Certify the approximation bounds on an instance or a seeded sweep.")
    p.add_argument("instance", nargs="?", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=DEFAULT_SWEEP_INSTANCES)
    p.add_argument("--c", type=int, nargs="+", default=None)
    p.add_argument("--n", type=int, nargs="+", default=None, help="One value or a range 'lo hi'.")
    p.add_argument("--r-min", type=float, nargs="+", default=None)
    p.add_argument("--k", type=int, nargs="+", default=None)
    p.add_argument("--threads", type=int, default=None)

    p = add("sample", cmd_sample, "Draw exact samples from an instance law.")
    p.add_argument("instance")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--urn", default=None, help="Comma-separated counts of a single urn to sample.")
    p.add_argument("--freq-out", default=None, help="Frequency table path; standard output when omitted.")

    p = add("project", cmd_project, "Project P_k onto weighted i.i.d. mixtures over a grid.")
    p.add_argument("instance")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--grid", type=int, default=20, help="Grid resolution of the simplex.")
    p.add_argument("--solver", choices=[s.value for s in LPSolver], default=LPSolver.SIMPLEX.value)

    p = add("asymptotics", cmd_asymptotics, "Decay of the distance to weighted i.i.d. mixtures in n.")
    p.add_argument("--family", choices=[f.value for f in WeightFamily], required=True)
    p.add_argument("--param", action="append", default=None, help="Family parameter as name=value.")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=MAX_DECAY_N)
    p.add_argument("--mix", type=float, nargs=2, default=[1.0, 1.0], metavar=("ALPHA", "BETA"))

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(ExitCode.SUCCESS) if not exc.code else int(ExitCode.INPUT_ERROR)

    level = logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        return int(args.func(args))
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        return int(ExitCode.INPUT_ERROR)
