"""Print formatting for bound certification results."""

from typing import NamedTuple


def _fmt(value: float) -> str:
    return f"{value:.6g}" if value == value else "NaN"


def _verdict(ok: bool) -> str:
    return "pass" if ok else "FAIL"


def format_bound_report(result: NamedTuple) -> str:
    """Format a bound report as a fixed-width table."""
    headers = ["", "TV", "Bound", "Verdict"]
    rows = [
        ["General", _fmt(result.tv_exact), _fmt(result.bound_general), _verdict(result.pass_general)],
        ["Finite alphabet", _fmt(result.tv_exact), _fmt(result.bound_finite), _verdict(result.pass_finite)],
    ]

    col_padding = 2
    w = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    w[0] += 1
    for i in range(1, len(w)):
        w[i] += col_padding
    total_width = sum(w)

    lines = []
    lines.append("=" * total_width)
    lines.append(" Weighted de Finetti Bound Check")
    lines.append("=" * total_width)
    seed = "none" if result.seed is None else str(result.seed)
    lines.append(f" c = {result.c}, n = {result.n}, k = {result.k}, seed = {seed}")
    lines.append("")
    lines.append(f"{headers[0]:<{w[0]}}{headers[1]:>{w[1]}}{headers[2]:>{w[2]}}{headers[3]:>{w[3]}}")
    lines.append("-" * total_width)
    for label, tv, bound, verdict in rows:
        lines.append(f"{label:<{w[0]}}{tv:>{w[1]}}{bound:>{w[2]}}{verdict:>{w[3]}}")

    lines.append("")
    lines.append("-" * total_width)
    lines.append(" Ratio products:")
    lines.append(f"   prod r_i, i <= k: {_fmt(result.prod_r_k)}")
    lines.append(f"   prod r_i, i <= n: {_fmt(result.prod_r_n)}")
    lines.append("")
    lines.append(" Proof steps:")
    lines.append(f"   Largest urn-level TV: {_fmt(result.urn_gap_max)}")
    lines.append(f"   Slot-level domination: {_verdict(result.dominated)}")
    lines.append(f"   Weighted/uniform ratio comparison: {_verdict(result.sampling_ratio_ok)}")
    lines.append(f"   Uniform sampling lemma: {_verdict(result.lemma_ok)}")
    lines.append(f"   k/n identity: {_verdict(result.kn_identity_ok)}")

    if not (result.pass_general and result.pass_finite):
        lines.append("")
        lines.append("Warning: a bound is exceeded. Failed proof steps above locate the cause.")
    lines.append("=" * total_width)
    return "\n".join(lines)


def print_bound_report(result_class):
    """Add __repr__ and __str__ methods to a NamedTuple result class."""

    def __repr__(self):
        return format_bound_report(self)

    def __str__(self):
        return format_bound_report(self)

    result_class.__repr__ = __repr__
    result_class.__str__ = __str__

    return result_class
