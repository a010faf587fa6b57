"""Exact scalar arithmetic and partition helpers.

Masses are non-negative rationals.  We keep integers as plain ints and only
fall back to Fraction when a value is genuinely fractional, so small examples
stay readable and fast.
"""

from fractions import Fraction
from typing import Union

from .errors import ValidationError

Scalar = Union[int, Fraction]


def normalize(x) -> Scalar:
    """Coerce x to an int or a Fraction in lowest terms."""
    if isinstance(x, bool):
        raise ValidationError("booleans are not valid masses")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        return normalize(Fraction(x))
    raise ValidationError(f"not an exact scalar: {x!r}")


def parse_scalar(x) -> Scalar:
    """Parse a JSON-level scalar: an int, or a string like '3/4'."""
    if isinstance(x, bool) or isinstance(x, float):
        raise ValidationError(f"inexact scalar not allowed: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return normalize(Fraction(x))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad scalar string {x!r}") from exc
    raise ValidationError(f"bad scalar {x!r}")


def scalar_to_json(x: Scalar):
    x = normalize(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def is_integral(x: Scalar) -> bool:
    return isinstance(x, int) or x.denominator == 1


# -- partitions (weakly decreasing non-negative tuples) ----------------------

Partition = tuple


def is_partition(p) -> bool:
    seq = tuple(p)
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)) and (
        not seq or seq[-1] >= 0
    )


def check_partition(p, name: str = "partition") -> Partition:
    seq = tuple(normalize(x) for x in p)
    if not is_partition(seq):
        raise ValidationError(f"{name} is not weakly decreasing non-negative: {seq}")
    return seq


def partial_sums(seq) -> tuple:
    """(0, s1, s1+s2, ...) -- partial sums with a leading zero."""
    out = [0]
    for x in seq:
        out.append(out[-1] + x)
    return tuple(out)


def reverse(seq) -> tuple:
    return tuple(seq)[::-1]


def trim(p) -> Partition:
    """Drop trailing zeros, for comparing shapes of different widths."""
    seq = list(p)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)
