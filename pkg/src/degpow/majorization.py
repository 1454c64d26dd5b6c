"""Weak majorization on non-negative integer tuples and p-th power norms.

Inputs may arrive unsorted (degree sequences usually do); every operation
normalizes to non-increasing order first.  All comparisons are exact integer
comparisons -- there is no tolerance anywhere.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence


def int_tuple(values: Sequence[int]) -> tuple[int, ...]:
    """Normalize to a non-increasing tuple of non-negative ints."""
    vals = tuple(sorted(values, reverse=True))
    if not vals:
        raise ValueError("tuple must have length >= 1")
    for v in vals:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"entries must be ints, got {v!r}")
        if v < 0:
            raise ValueError(f"entries must be >= 0, got {v}")
    return vals


def weakly_majorizes(y: Sequence[int], x: Sequence[int]) -> bool:
    """True iff y weakly majorizes x: every prefix sum of x is <= that of y."""
    xs, ys = int_tuple(x), int_tuple(y)
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    sx = sy = 0
    for a, b in zip(xs, ys):
        sx += a
        sy += b
        if sx > sy:
            return False
    return True


def majorizes(y: Sequence[int], x: Sequence[int]) -> bool:
    """True iff y majorizes x: weak majorization plus equal totals."""
    return weakly_majorizes(y, x) and sum(x) == sum(y)


def p_power_norm(x: Sequence[int], p: int) -> int:
    """Sum of p-th powers of the entries, exactly."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return sum(v**p for v in x)


class Prop1Verdict(Enum):
    HOLDS_STRICT = "holds_strict"
    HOLDS_EQUAL = "holds_equal"
    INAPPLICABLE = "inapplicable"
    VIOLATION = "violation"


def prop1_check(x: Sequence[int], y: Sequence[int], p: int) -> Prop1Verdict:
    """Check one instance of the norm-comparison law behind every bound here.

    If y weakly majorizes x with p > 1, the p-th power norm of x must not
    exceed that of y, with equality exactly when the tuples coincide.
    Returns INAPPLICABLE when the hypothesis fails; VIOLATION is reserved for
    a failed instance and must be unreachable.
    """
    if p <= 1:
        raise ValueError("p must be > 1")
    xs, ys = int_tuple(x), int_tuple(y)
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if not weakly_majorizes(ys, xs):
        return Prop1Verdict.INAPPLICABLE
    nx, ny = p_power_norm(xs, p), p_power_norm(ys, p)
    if nx < ny:
        return Prop1Verdict.HOLDS_STRICT
    if nx == ny and xs == ys:
        return Prop1Verdict.HOLDS_EQUAL
    return Prop1Verdict.VIOLATION
