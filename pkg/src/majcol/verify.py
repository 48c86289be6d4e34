"""Ground-truth checkers for majority colorings and fractional colorings.

Majority thresholds are evaluated with exact integer cross-multiplication:
a coloring satisfies the alpha-majority condition at v iff
b * |{w in N+(v) : c(w) = c(v)}| <= a * d+(v) for alpha = a/b.  Floating
point never enters these checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .digraph import Digraph
from .errors import PartialColoring

Coloring = Mapping[int, int]


@dataclass(frozen=True)
class MajorityParam:
    """Threshold alpha = a/b: at most alpha * d+(v) same-colored out-neighbors."""

    a: int
    b: int

    def __post_init__(self):
        if not (0 < self.a <= self.b):
            raise ValueError(f"need 0 < a <= b, got {self.a}/{self.b}")

    @staticmethod
    def parse(text: str) -> "MajorityParam":
        a, b = text.split("/")
        return MajorityParam(int(a), int(b))

    @staticmethod
    def half() -> "MajorityParam":
        return MajorityParam(1, 2)

    @staticmethod
    def one_over(k: int) -> "MajorityParam":
        return MajorityParam(1, k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.b)

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


HALF = MajorityParam(1, 2)


@dataclass(frozen=True)
class FractionalColoring:
    """Weighted family of vertex sets meant to be stable with coverage >= 1."""

    entries: tuple[tuple[frozenset[int], float], ...]

    @staticmethod
    def of(entries: Iterable[tuple[Iterable[int], float]]) -> "FractionalColoring":
        return FractionalColoring(
            tuple((frozenset(s), float(w)) for s, w in entries)
        )

    @property
    def total_weight(self) -> float:
        return sum(w for _, w in self.entries)

    def coverage(self, v: int) -> float:
        return sum(w for s, w in self.entries if v in s)


def verify_majority(d: Digraph, coloring: Coloring,
                    alpha: MajorityParam = HALF) -> list[int]:
    """Vertices violating the alpha-majority condition (empty list = valid)."""
    missing = [v for v in range(d.n) if v not in coloring]
    if missing:
        raise PartialColoring(f"uncolored vertices: {missing}")
    violating = []
    for v in range(d.n):
        cv = coloring[v]
        same = sum(1 for w in d.out(v) if coloring[w] == cv)
        if alpha.b * same > alpha.a * d.outdeg(v):
            violating.append(v)
    return violating


def is_popular(d: Digraph, s: Iterable[int], v: int) -> bool:
    """True iff v is in S and strictly more than half its out-neighbors are."""
    sset = s if isinstance(s, (set, frozenset)) else set(s)
    if v not in sset:
        return False
    inside = sum(1 for w in d.out(v) if w in sset)
    return 2 * inside > d.outdeg(v)


def is_stable(d: Digraph, s: Iterable[int]) -> bool:
    """True iff S contains no popular vertex."""
    sset = s if isinstance(s, (set, frozenset)) else set(s)
    return not any(is_popular(d, sset, v) for v in sset)


def verify_fractional(d: Digraph, fc: FractionalColoring,
                      tol: float = 1e-9) -> tuple[bool, Optional[tuple[str, object]]]:
    """Feasibility check: stable sets, non-negative weights, coverage >= 1.

    Returns (True, None) or (False, reason) where reason identifies the
    first failing weight, set, or vertex.
    """
    for s, w in fc.entries:
        if w < 0:
            return False, ("negative_weight", s)
        if not is_stable(d, s):
            return False, ("unstable_set", s)
    for v in range(d.n):
        if fc.coverage(v) < 1.0 - tol:
            return False, ("coverage", v)
    return True, None


def verify_fractional_exact(d: Digraph,
                            entries: Iterable[tuple[frozenset[int], Fraction]]
                            ) -> tuple[bool, Optional[tuple[str, object]]]:
    """Rational-arithmetic re-verification for exact weights."""
    entries = list(entries)
    for s, w in entries:
        if w < 0:
            return False, ("negative_weight", s)
        if not is_stable(d, s):
            return False, ("unstable_set", s)
    for v in range(d.n):
        cov = sum((w for s, w in entries if v in s), Fraction(0))
        if cov < 1:
            return False, ("coverage", v)
    return True, None
