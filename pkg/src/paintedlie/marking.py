"""The marking calculus on painted diagrams.

A marking pairs a color-preserving diagram automorphism with a rational
rotation number t_v in [0, 1) per node, standing for the unit-circle
scalar exp(2*pi*i*t_v).  Rational angles are exact and suffice because
only finite-order representatives matter; irrational angles are
unrepresentable by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .autgroup import DiagramAut, invert_perm
from .errors import DiagramMismatch, NotAdmissible, WrongCase
from .painted import PaintedDiagram

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Marking:
    """(automorphism, angles) on a fixed painted diagram."""

    diagram: PaintedDiagram
    aut: DiagramAut
    angles: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.aut.scheme != self.diagram.scheme:
            raise DiagramMismatch("automorphism lives on a different scheme")
        color = self.diagram.color
        for i, j in enumerate(self.aut.perm):
            if color[j] != color[i]:
                raise ValueError("automorphism does not preserve vertex colors")
        if len(self.angles) != self.diagram.scheme.n:
            raise ValueError("angle vector length does not match scheme")
        norm = tuple(Fraction(t) % 1 for t in self.angles)
        object.__setattr__(self, "angles", norm)

    def angle_of(self, node: int) -> Fraction:
        return self.angles[self.diagram.scheme.index(node)]

    @property
    def is_identity(self) -> bool:
        return self.aut.is_identity and all(t == 0 for t in self.angles)

    def to_dict(self) -> dict:
        return {
            "d": self.aut.image_ids(),
            "t": [str(t) for t in self.angles],
        }

    @staticmethod
    def from_dict(diagram: PaintedDiagram, data: dict) -> "Marking":
        scheme = diagram.scheme
        perm = tuple(scheme.index(v) for v in data["d"])
        angles = tuple(Fraction(s) for s in data["t"])
        return Marking(diagram, DiagramAut(scheme, perm), angles)


def make_marking(diagram: PaintedDiagram, perm_or_aut, angles) -> Marking:
    """Build a marking from a position permutation or DiagramAut and any
    rational-convertible angle sequence."""
    if isinstance(perm_or_aut, DiagramAut):
        aut = perm_or_aut
    else:
        aut = DiagramAut(diagram.scheme, tuple(perm_or_aut))
    return Marking(diagram, aut, tuple(Fraction(t) for t in angles))


def identity_marking(diagram: PaintedDiagram) -> Marking:
    return Marking(
        diagram,
        DiagramAut.identity(diagram.scheme),
        tuple(Fraction(0) for _ in range(diagram.scheme.n)),
    )


def compose(m1: Marking, m2: Marking) -> Marking:
    """Marking of the composite: permutations compose, and the angle at v
    adds the second angle pulled back through the first permutation."""
    if m1.diagram != m2.diagram:
        raise DiagramMismatch("markings live on different diagrams")
    d = m1.aut.compose(m2.aut)
    inv1 = invert_perm(m1.aut.perm)
    angles = tuple(
        (m1.angles[i] + m2.angles[inv1[i]]) % 1 for i in range(m1.diagram.scheme.n)
    )
    return Marking(m1.diagram, d, angles)


def invert(m: Marking) -> Marking:
    p = m.aut.perm
    angles = tuple((-m.angles[p[i]]) % 1 for i in range(m.diagram.scheme.n))
    return Marking(m.diagram, m.aut.inverse(), angles)


def invariant(m: Marking) -> Fraction:
    """sum of mark * angle over all nodes, mod 1 (the circle-valued product
    of the scalars raised to the marks)."""
    total = Fraction(0)
    for a, t in zip(m.diagram.marks.values, m.angles):
        total += a * t
    return total % 1


@dataclass(frozen=True)
class OuterClass:
    """Element of Aut(P) x Z_r: a color-preserving automorphism and, when
    r = 2, a sign."""

    aut: DiagramAut
    sign: int
    r: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.r == 1 and self.sign != 1:
            raise ValueError("sign must be trivial when r = 1")

    @property
    def is_identity(self) -> bool:
        return self.aut.is_identity and self.sign == 1

    def compose(self, other: "OuterClass") -> "OuterClass":
        return OuterClass(self.aut.compose(other.aut), self.sign * other.sign, self.r)


def outer_class(m: Marking) -> OuterClass:
    """Image of the marking in Aut(P) x Z_r.

    For r = 2 the invariant must land in {0, 1/2}; otherwise the marking
    does not represent an automorphism and NotAdmissible is raised.
    """
    r = m.diagram.r
    if r == 1:
        return OuterClass(m.aut, 1, 1)
    inv = invariant(m)
    if inv == 0:
        return OuterClass(m.aut, 1, 2)
    if inv == HALF:
        return OuterClass(m.aut, -1, 2)
    raise NotAdmissible(f"invariant {inv} is outside {{0, 1/2}} on an r = 2 diagram")


@dataclass(frozen=True)
class Classification:
    inner: bool
    outer_class: OuterClass

    def __str__(self) -> str:
        return "inner" if self.inner else "outer"


def classify_inner(m: Marking) -> Classification:
    """Inner exactly when the outer class is the identity of Aut(P) x Z_r."""
    cls = outer_class(m)
    return Classification(inner=cls.is_identity, outer_class=cls)


def marking_order(m: Marking) -> int:
    """Least n >= 1 with the n-fold self-composition equal to the identity
    marking: per orbit, orbit length times the denominator of the orbit
    angle sum; then the lcm over orbits."""
    order = 1
    for cycle in m.aut.cycles():
        total = sum((m.angle_of(v) for v in cycle), Fraction(0)) % 1
        local = len(cycle) * total.denominator
        order = order * local // gcd(order, local)
    return order


def is_admissible_equal_rank(m: Marking) -> bool:
    """On untwisted diagrams with trivial automorphism part, the marking
    represents an automorphism iff the invariant vanishes."""
    if m.diagram.r != 1:
        raise WrongCase("only defined on equal-rank (r = 1) diagrams")
    if not m.aut.is_identity:
        raise WrongCase("only defined for the trivial automorphism part")
    return invariant(m) == 0
