"""Outer automorphism groups of real simple and semisimple Lie algebras.

For a noncompact real form with painted diagram P the group is
Aut(P) x Z_r; for a compact form it is the symmetry group of the finite
Dynkin diagram; for a complex simple algebra regarded as real it is
Aut(D) x Z2 (the Z2 generated by conjugation with respect to a maximally
compact subalgebra).  Semisimple sums multiply the factor groups and
adjoin the permutations of isomorphic ideals, which never mix complex
ideals with real ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

from .autgroup import automorphisms
from .diagram_core import build_finite
from .errors import InvalidParameters, ParseError
from .painted import (
    CompactDiagram,
    PaintedDiagram,
    RealFormName,
    canonical_form,
    construct,
)


@dataclass(frozen=True)
class ComplexFactor:
    family: str
    rank: int
    aut_order: int


@dataclass(frozen=True)
class RealFactor:
    name: str
    aut_order: int
    theta_order: int


@dataclass(frozen=True)
class FactorBreakdown:
    """Order bookkeeping: order = prod(complex aut) * 2^m * prod(real aut)
    * 2^s * gamma_order."""

    complex: tuple[ComplexFactor, ...]
    real: tuple[RealFactor, ...]
    gamma_order: int

    @property
    def m(self) -> int:
        return len(self.complex)

    @property
    def s(self) -> int:
        return sum(1 for f in self.real if f.theta_order == 2)

    def predicted_order(self) -> int:
        order = self.gamma_order * 2 ** (self.m + self.s)
        for f in self.complex:
            order *= f.aut_order
        for f in self.real:
            order *= f.aut_order
        return order

    def to_dict(self) -> dict:
        return {
            "complex": [
                {"family": f.family, "rank": f.rank, "aut_order": f.aut_order}
                for f in self.complex
            ],
            "m": self.m,
            "real": [
                {"name": f.name, "aut_order": f.aut_order, "theta_order": f.theta_order}
                for f in self.real
            ],
            "s": self.s,
            "gamma_order": self.gamma_order,
        }

    @staticmethod
    def from_dict(data: dict) -> "FactorBreakdown":
        breakdown = FactorBreakdown(
            complex=tuple(
                ComplexFactor(str(f["family"]), int(f["rank"]), int(f["aut_order"]))
                for f in data["complex"]
            ),
            real=tuple(
                RealFactor(str(f["name"]), int(f["aut_order"]), int(f["theta_order"]))
                for f in data["real"]
            ),
            gamma_order=int(data["gamma_order"]),
        )
        if breakdown.m != int(data["m"]) or breakdown.s != int(data["s"]):
            raise ValueError("recorded m/s disagree with the factor lists")
        return breakdown


@dataclass(frozen=True)
class OuterGroupDesc:
    order: int
    label: str
    factors: FactorBreakdown

    def __post_init__(self) -> None:
        if self.factors.predicted_order() != self.order:
            raise ValueError("order disagrees with the factor breakdown")

    def to_dict(self) -> dict:
        return {"order": self.order, "label": self.label, "factors": self.factors.to_dict()}

    @staticmethod
    def from_dict(data: dict) -> "OuterGroupDesc":
        return OuterGroupDesc(
            order=int(data["order"]),
            label=str(data["label"]),
            factors=FactorBreakdown.from_dict(data["factors"]),
        )


def _label_product(parts: list[str]) -> str:
    nontrivial = [p for p in parts if p != "1"]
    return " × ".join(nontrivial) if nontrivial else "1"


def _diagram_aut(diagram) -> tuple[int, str]:
    if isinstance(diagram, CompactDiagram):
        group = automorphisms(diagram.scheme)
    else:
        group = automorphisms(diagram.scheme, diagram.color)
    return group.order, group.label


def outer_simple(name: RealFormName) -> OuterGroupDesc:
    """Out of one real simple Lie algebra given by its catalog name."""
    name = name.normalized()
    diagram = construct(name)
    aut_order, aut_label = _diagram_aut(diagram)
    r = diagram.r if isinstance(diagram, PaintedDiagram) else 1
    label = _label_product([aut_label] + (["Z2"] if r == 2 else []))
    breakdown = FactorBreakdown(
        complex=(),
        real=(RealFactor(str(name), aut_order, r),),
        gamma_order=1,
    )
    return OuterGroupDesc(order=aut_order * r, label=label, factors=breakdown)


def theta_class(name: RealFormName) -> str:
    """'order2' when the Cartan involution is outer (twisted diagram),
    'trivial' for compact and equal-rank forms."""
    name = name.normalized()
    diagram = construct(name)
    if isinstance(diagram, PaintedDiagram) and diagram.r == 2:
        return "order2"
    return "trivial"


def outer_complex_as_real(family: str, rank: int) -> OuterGroupDesc:
    """Out of a complex simple algebra regarded as real: Aut(diagram) x Z2."""
    scheme = build_finite(family, rank)
    group = automorphisms(scheme)
    breakdown = FactorBreakdown(
        complex=(ComplexFactor(family, rank, group.order),),
        real=(),
        gamma_order=1,
    )
    return OuterGroupDesc(
        order=group.order * 2,
        label=_label_product([group.label, "Z2"]),
        factors=breakdown,
    )


@dataclass(frozen=True)
class SemisimpleSpec:
    """A semisimple algebra: complex simple ideals plus real forms."""

    complex_factors: tuple[tuple[str, int], ...]
    real_factors: tuple[RealFormName, ...]

    def normalized(self) -> "SemisimpleSpec":
        return SemisimpleSpec(
            complex_factors=tuple(sorted(self.complex_factors)),
            real_factors=tuple(
                sorted((n.normalized() for n in self.real_factors), key=str)
            ),
        )


def _parse_complex_factor(token: str) -> tuple[str, int]:
    m = re.match(r"^([A-G])(\d+)\(C\)$", token)
    if m:
        return (m.group(1), int(m.group(2)))
    m = re.match(r"^(e6|e7|e8|f4|g2)\(C\)$", token)
    if m:
        base = m.group(1)
        return (base[0].upper(), int(base[1]))
    m = re.match(r"^(sl|so|sp)\((\d+),C\)$", token)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "sl":
            if n < 2:
                raise ParseError(f"{token}: sl(n,C) needs n >= 2")
            return ("A", n - 1)
        if kind == "sp":
            return ("C", n)
        if n % 2 == 1:
            return ("B", (n - 1) // 2)
        return ("D", n // 2)
    raise ParseError(f"cannot parse complex factor {token!r}")


def parse_spec(text: str) -> SemisimpleSpec:
    """Parse a sum like "sl(3,C) + su(2,1) + su(2,1)" into a SemisimpleSpec."""
    complex_factors: list[tuple[str, int]] = []
    real_factors: list[RealFormName] = []
    for raw in text.split("+"):
        token = raw.strip().replace(" ", "")
        if not token:
            raise ParseError("empty factor in semisimple spec")
        if token.endswith("(C)") or token.endswith(",C)"):
            complex_factors.append(_parse_complex_factor(token))
        else:
            real_factors.append(RealFormName.parse(token))
    if not complex_factors and not real_factors:
        raise ParseError("semisimple spec has no factors")
    return SemisimpleSpec(tuple(complex_factors), tuple(real_factors))


def _real_class_key(name: RealFormName) -> tuple:
    diagram = construct(name)
    if isinstance(diagram, CompactDiagram):
        return ("compact", diagram.scheme.series)
    canon = canonical_form(diagram)
    return ("painted", canon.series, canon.color, canon.r)


def outer_semisimple(spec: SemisimpleSpec) -> OuterGroupDesc:
    """Out of a semisimple sum.

    gamma_order multiplies k! over each isomorphism class of multiplicity
    k; complex classes and real classes are counted separately and never
    mixed.  The label reports each class as a wreath product
    (factor label) wr S_k.
    """
    spec = spec.normalized()
    complex_parts: list[tuple[tuple, str, int, ComplexFactor]] = []
    for family, rank in spec.complex_factors:
        try:
            desc = outer_complex_as_real(family, rank)
        except Exception as exc:
            raise InvalidParameters(f"invalid complex factor {family}{rank}: {exc}") from exc
        complex_parts.append(
            (("complex", family, rank), desc.label, desc.order, desc.factors.complex[0])
        )
    real_parts: list[tuple[tuple, str, int, RealFactor]] = []
    for name in spec.real_factors:
        desc = outer_simple(name)
        real_parts.append((_real_class_key(name), desc.label, desc.order, desc.factors.real[0]))

    gamma = 1
    label_parts: list[str] = []
    order = 1
    for parts in (complex_parts, real_parts):
        classes: dict[tuple, list[tuple[str, int]]] = {}
        class_order: list[tuple] = []
        for key, label, factor_order, _record in parts:
            if key not in classes:
                classes[key] = []
                class_order.append(key)
            classes[key].append((label, factor_order))
        for key in class_order:
            members = classes[key]
            k = len(members)
            label, factor_order = members[0]
            gamma *= factorial(k)
            order *= factor_order**k
            if k == 1:
                label_parts.append(label)
            elif label == "1":
                label_parts.append(f"S{k}")
            else:
                label_parts.append(f"({label}) wr S{k}")
    order *= gamma

    breakdown = FactorBreakdown(
        complex=tuple(rec for _, _, _, rec in complex_parts),
        real=tuple(rec for _, _, _, rec in real_parts),
        gamma_order=gamma,
    )
    return OuterGroupDesc(order=order, label=_label_product(label_parts), factors=breakdown)
