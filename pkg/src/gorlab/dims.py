"""Homological dimension values with certificates.

A dimension is Finite(n), Infinite (always carrying a periodicity
certificate or an explicit convention flag), or AtLeast(n) when a budget
ran out.  Infinite-by-convention (dimensions of the zero module) is
flagged distinctly from a certified Infinite.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PeriodicityCertificate:
    """A repeated state in an iterated (co)syzygy orbit.

    ``states[preperiod]`` through ``states[preperiod + period - 1]`` repeat
    forever; states are engine-specific descriptions (module coordinates or
    dimension vectors).
    """

    operator: str           # e.g. "syzygy", "cosyzygy", "approximation-kernel"
    preperiod: int
    period: int
    states: tuple = ()
    iso: object = None       # witnessing isomorphism when produced generically

    def __str__(self):
        return "%s-periodic (preperiod %d, period %d)" % (
            self.operator, self.preperiod, self.period)


@dataclass(frozen=True)
class HomologicalDim:
    kind: str                              # "finite" | "infinite" | "atleast"
    value: int | None = None
    certificate: PeriodicityCertificate | None = None
    by_convention: bool = False
    bound_reason: str = ""

    @staticmethod
    def finite(n: int) -> "HomologicalDim":
        return HomologicalDim("finite", int(n))

    @staticmethod
    def infinite(cert: PeriodicityCertificate) -> "HomologicalDim":
        return HomologicalDim("infinite", None, cert)

    @staticmethod
    def infinite_by_convention(reason: str = "zero module") -> "HomologicalDim":
        return HomologicalDim("infinite", None, None, True, reason)

    @staticmethod
    def at_least(n: int, reason: str) -> "HomologicalDim":
        return HomologicalDim("atleast", int(n), None, False, reason)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def ge(self, n: int) -> bool:
        """Certainly >= n (AtLeast(m) counts when m >= n)."""
        if self.kind == "infinite":
            return True
        return self.value >= n

    def as_int(self) -> int:
        if self.kind != "finite":
            raise ValueError("not a finite dimension: %s" % (self,))
        return self.value

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "atleast":
            return ">=%d" % self.value
        if self.by_convention:
            return "inf(convention)"
        return "inf"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.kind == "finite" and self.value == other
        if isinstance(other, HomologicalDim):
            if self.kind != other.kind:
                return False
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.value))


def dim_max(values) -> HomologicalDim:
    """Max with Infinite dominating; AtLeast poisons to AtLeast."""
    best = HomologicalDim.finite(0)
    seen = False
    for v in values:
        seen = True
        if v.kind == "infinite":
            return v
        if v.kind == "atleast":
            if best.kind != "atleast" or v.value > best.value:
                best = v
        elif best.kind == "finite" and v.value > best.value:
            best = v
    if not seen:
        return HomologicalDim.finite(0)
    return best


def dim_min(values) -> HomologicalDim:
    """Min with Finite dominating Infinite."""
    vals = list(values)
    if not vals:
        raise ValueError("dim_min of empty collection")
    best = None
    for v in vals:
        if best is None:
            best = v
        elif v.kind == "finite" and (best.kind != "finite" or v.value < best.value):
            best = v
        elif v.kind == "atleast" and best.kind == "infinite":
            best = v
    return best
