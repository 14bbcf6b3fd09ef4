"""
Membership in a cyclic subgroup <X> of B_n when exp(X) != 0.

If Y = X^c then exp(Y) = c exp(X), so there is exactly one candidate power.
The candidate is formed and checked against Y with the word problem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StrandMismatch, ZeroExponent
from .garside import compare
from .words import BraidWord, exp_sum, power

__all__ = ["GwpResult", "gwp", "gwp_divisibility_gate"]


@dataclass(frozen=True)
class GwpResult:
    """``power`` is the exponent c with X^c = Y, or None when Y is not a power of X."""

    power: int | None

    @property
    def is_power(self) -> bool:
        return self.power is not None

    def __str__(self) -> str:
        return f"power c={self.power}" if self.is_power else "not a power"


NOT_A_POWER = GwpResult(None)


def gwp_divisibility_gate(x: BraidWord, y: BraidWord) -> int | None:
    """The only possible exponent c, or None if exp(X) does not divide exp(Y)."""
    ex = exp_sum(x)
    if ex == 0:
        raise ZeroExponent("exp(X) = 0; the cyclic subgroup test needs a nonzero exponent sum")
    q, rem = divmod(exp_sum(y), ex)
    return q if rem == 0 else None


def gwp(x: BraidWord, y: BraidWord) -> GwpResult:
    """Decide whether ``y`` lies in the cyclic subgroup generated by ``x``."""
    if x.n != y.n:
        raise StrandMismatch(f"X lives in B_{x.n} and Y in B_{y.n}")
    c = gwp_divisibility_gate(x, y)
    if c is None:
        return NOT_A_POWER
    return GwpResult(c) if compare(power(x, c), y) else NOT_A_POWER
