"""Painted diagrams and the catalog of real simple Lie algebras.

A painted diagram is an affine Cartan scheme whose nodes carry a
white/black coloring satisfying ``r * sum(black marks) = 2``, where r is
1 on untwisted schemes (equal-rank real forms) and 2 on twisted schemes.
White nodes form the diagram of the maximal compact part; black nodes are
the lowest weights of its complement.

Parameter legality is maintained explicitly so that distinct catalog
names always yield inequivalent paintings.  Low-rank coincidences are not
deduplicated silently: constructing a name outside the table raises
InvalidParameters with the catalog equivalent spelled out.  The table of
coincidences (catalog representative on the right):

    sl(2,R) = sp(1,R) = so(2,1)  -> su(1,1)
    sp(2,R)                      -> so(2,3)
    sp(1,1)                      -> so(4,1)
    so*(4)                       -> not simple
    so*(6)                       -> su(3,1)
    so*(8)                       -> so(2,6)
    so(2,4)                      -> su(2,2)
    so(1,5)                      -> sl(2,H)
    so(3,3)                      -> sl(4,R)
    so(1,3)                      -> sl(2,C) regarded as real (complex factor)
    so(2,2), so(1,1), so(1,2)... -> not simple / rank too small
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .autgroup import DiagramAut, automorphisms
from .diagram_core import (
    CartanScheme,
    Marks,
    build_affine,
    build_finite,
    check_finite_type,
    compute_marks,
)
from .errors import InvalidParameters, InvalidType, KacViolation, ParseError, Unrecognized

EXCEPTIONAL_INDICES = {
    "e6": (6, 2, -14, -26),
    "e7": (7, -5, -25),
    "e8": (8, -24),
    "f4": (4, -20),
    "g2": (2,),
}


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class PaintedDiagram:
    """Affine scheme + marks + coloring + the twist order r of the scheme."""

    scheme: CartanScheme
    marks: Marks
    color: tuple[str, ...]
    r: int

    def __post_init__(self) -> None:
        if self.scheme.kind != "affine":
            raise InvalidParameters("painted diagrams live on affine schemes")
        if self.marks.scheme != self.scheme:
            raise ValueError("marks belong to a different scheme")
        if len(self.color) != self.scheme.n:
            raise ValueError("color vector length does not match scheme")
        if any(c not in ("white", "black") for c in self.color):
            raise ValueError("colors must be 'white' or 'black'")
        if self.r not in (1, 2):
            raise InvalidParameters(f"r must be 1 or 2, got {self.r}")
        frt = self.scheme.family_rank_twist()
        if frt is not None and frt[2] != self.r:
            raise InvalidParameters(
                f"r = {self.r} does not match the twist order {frt[2]} of {self.scheme.series}"
            )
        total = sum(
            self.marks.values[i] for i in range(self.scheme.n) if self.color[i] == "black"
        )
        if self.r * total != 2:
            raise KacViolation(
                f"r * sum of black marks = {self.r} * {total} = {self.r * total}, expected 2"
            )

    @property
    def black_nodes(self) -> tuple[int, ...]:
        return tuple(
            sorted(v for v, c in zip(self.scheme.nodes, self.color) if c == "black")
        )

    @property
    def white_nodes(self) -> tuple[int, ...]:
        return tuple(
            sorted(v for v, c in zip(self.scheme.nodes, self.color) if c == "white")
        )

    def color_of(self, node: int) -> str:
        return self.color[self.scheme.index(node)]

    def color_bits(self) -> tuple[int, ...]:
        return tuple(1 if c == "black" else 0 for c in self.color)

    def to_dict(self) -> dict:
        data = self.scheme.to_dict()
        data["color"] = list(self.color)
        data["marks"] = list(self.marks.values)
        data["r"] = self.r
        return data

    @staticmethod
    def from_dict(data: dict) -> "PaintedDiagram":
        scheme = CartanScheme.from_dict(data)
        marks = compute_marks(scheme)
        if list(marks.values) != [int(v) for v in data["marks"]]:
            raise ValueError("recorded marks disagree with the scheme")
        return PaintedDiagram(
            scheme=scheme,
            marks=marks,
            color=tuple(str(c) for c in data["color"]),
            r=int(data["r"]),
        )


@dataclass(frozen=True)
class CompactDiagram:
    """All-white finite diagram of a compact real form."""

    scheme: CartanScheme

    def __post_init__(self) -> None:
        if self.scheme.kind != "finite":
            raise InvalidParameters("compact diagrams live on finite schemes")

    def to_dict(self) -> dict:
        return self.scheme.to_dict()


RealFormDiagram = CompactDiagram | PaintedDiagram


def paint(scheme: CartanScheme, marks: Marks | None, black_set, r: int) -> PaintedDiagram:
    """Validated painting of an affine scheme with the given black node ids."""
    if marks is None:
        marks = compute_marks(scheme)
    blacks = set(black_set)
    unknown = blacks - set(scheme.nodes)
    if unknown:
        raise InvalidParameters(f"black nodes {sorted(unknown)} are not in the scheme")
    color = tuple("black" if v in blacks else "white" for v in scheme.nodes)
    return PaintedDiagram(scheme=scheme, marks=marks, color=color, r=r)


# ---------------------------------------------------------------------------
# real form names


_NAME_PATTERNS = [
    (re.compile(r"^su\((\d+),(\d+)\)$"), lambda m: RealFormName("su", (int(m[1]), int(m[2])))),
    (re.compile(r"^so\((\d+),(\d+)\)$"), lambda m: RealFormName("so", (int(m[1]), int(m[2])))),
    (re.compile(r"^so\*\((\d+)\)$"), lambda m: RealFormName("sostar", (int(m[1]),))),
    (re.compile(r"^sp\((\d+),R\)$"), lambda m: RealFormName("spr", (int(m[1]),))),
    (re.compile(r"^sp\((\d+),(\d+)\)$"), lambda m: RealFormName("sp", (int(m[1]), int(m[2])))),
    (re.compile(r"^sl\((\d+),R\)$"), lambda m: RealFormName("slr", (int(m[1]),))),
    (re.compile(r"^sl\((\d+),H\)$"), lambda m: RealFormName("slh", (int(m[1]),))),
    (re.compile(r"^(e6|e7|e8|f4|g2)\((-?\d+)\)$"), lambda m: RealFormName(m[1], (int(m[2]),))),
    (
        re.compile(r"^compact\(([A-G])(\d+)\)$"),
        lambda m: RealFormName("compact", (m[1], int(m[2]))),
    ),
]


@dataclass(frozen=True)
class RealFormName:
    """A catalog name: classical families by signature, or Cartan labels.

    kinds: su(p,q), so(P,Q) by actual signature, so*(2n), sp(n,R), sp(p,q),
    sl(n,R), sl(p,H), e6/e7/e8/f4/g2 by index, compact(Xn).
    """

    kind: str
    params: tuple

    @staticmethod
    def parse(text: str) -> "RealFormName":
        cleaned = text.replace(" ", "")
        for pattern, make in _NAME_PATTERNS:
            m = pattern.match(cleaned)
            if m:
                return make(m)
        raise ParseError(f"cannot parse real form name {text!r}")

    def __str__(self) -> str:
        k, p = self.kind, self.params
        if k == "su":
            return f"su({p[0]},{p[1]})"
        if k == "so":
            return f"so({p[0]},{p[1]})"
        if k == "sostar":
            return f"so*({p[0]})"
        if k == "spr":
            return f"sp({p[0]},R)"
        if k == "sp":
            return f"sp({p[0]},{p[1]})"
        if k == "slr":
            return f"sl({p[0]},R)"
        if k == "slh":
            return f"sl({p[0]},H)"
        if k == "compact":
            return f"compact({p[0]}{p[1]})"
        return f"{k}({p[0]})"

    def normalized(self) -> "RealFormName":
        """Canonical parameter order for the symmetric families.

        su/sp print the larger part first; so prints the even part first
        and, for equal parities, the smaller part first.
        """
        k, p = self.kind, self.params
        if k in ("su", "sp") and p[0] < p[1]:
            return RealFormName(k, (p[1], p[0]))
        if k == "so":
            a, b = p
            if a % 2 == b % 2:
                if a > b:
                    return RealFormName(k, (b, a))
            elif a % 2 == 1:
                return RealFormName(k, (b, a))
        return self

    @property
    def is_compact(self) -> bool:
        return self.kind == "compact"

    def validate(self) -> None:
        """Raise InvalidParameters unless the (normalized) name is in the catalog."""
        name = self.normalized()
        k, p = name.kind, name.params
        if k == "su":
            if p[0] < 1 or p[1] < 1:
                raise InvalidParameters(f"{name}: both parts must be at least 1")
        elif k == "so":
            _validate_so(name)
        elif k == "sostar":
            (even,) = p
            if even % 2 != 0:
                raise InvalidParameters(f"{name}: argument must be even")
            if even == 4:
                raise InvalidParameters("so*(4) is not simple")
            if even == 6:
                raise InvalidParameters("so*(6) is isomorphic to su(3,1); use that name")
            if even == 8:
                raise InvalidParameters("so*(8) is isomorphic to so(2,6); use that name")
            if even < 10:
                raise InvalidParameters(f"{name}: argument must be at least 10")
        elif k == "spr":
            (n,) = p
            if n == 1:
                raise InvalidParameters("sp(1,R) is isomorphic to su(1,1); use that name")
            if n == 2:
                raise InvalidParameters("sp(2,R) is isomorphic to so(2,3); use that name")
            if n < 3:
                raise InvalidParameters(f"{name}: rank must be at least 3")
        elif k == "sp":
            if p[1] < 1:
                raise InvalidParameters(f"{name}: both parts must be at least 1")
            if p[0] + p[1] == 2:
                raise InvalidParameters("sp(1,1) is isomorphic to so(4,1); use that name")
            if p[0] + p[1] < 3:
                raise InvalidParameters(f"{name}: total rank must be at least 3")
        elif k == "slr":
            (n,) = p
            if n == 2:
                raise InvalidParameters("sl(2,R) is isomorphic to su(1,1); use that name")
            if n < 3:
                raise InvalidParameters(f"{name}: size must be at least 3")
        elif k == "slh":
            (n,) = p
            if n == 1:
                raise InvalidParameters("sl(1,H) is isomorphic to su(2); it is compact, use compact(A1)")
            if n < 2:
                raise InvalidParameters(f"{name}: size must be at least 2")
        elif k in EXCEPTIONAL_INDICES:
            if p[0] not in EXCEPTIONAL_INDICES[k]:
                allowed = ", ".join(str(v) for v in EXCEPTIONAL_INDICES[k])
                raise InvalidParameters(f"{name}: index must be one of {allowed}")
        elif k == "compact":
            try:
                check_finite_type(p[0], p[1])
            except InvalidType as exc:
                raise InvalidParameters(str(exc)) from exc
        else:
            raise InvalidParameters(f"unknown family {k!r}")

    def scheme_spec(self) -> tuple[str, int, int]:
        """(family, rank, twist) of the scheme carrying this noncompact form."""
        name = self.normalized()
        k, p = name.kind, name.params
        if k == "su":
            return ("A", p[0] + p[1] - 1, 1)
        if k == "so":
            a, b = p
            if a % 2 == 1 and b % 2 == 1:
                return ("D", (a + b) // 2, 2)
            if a % 2 == 0 and b % 2 == 0:
                return ("D", (a + b) // 2, 1)
            return ("B", (a + b - 1) // 2, 1)
        if k == "sostar":
            return ("D", p[0] // 2, 1)
        if k == "spr":
            return ("C", p[0], 1)
        if k == "sp":
            return ("C", p[0] + p[1], 1)
        if k == "slr":
            return ("A", p[0] - 1, 2)
        if k == "slh":
            return ("A", 2 * p[0] - 1, 2)
        if k in EXCEPTIONAL_INDICES:
            family = {"e6": "E", "e7": "E", "e8": "E", "f4": "F", "g2": "G"}[k]
            rank = int(k[1])
            twist = 2 if (k == "e6" and p[0] in (6, -26)) else 1
            return (family, rank, twist)
        raise InvalidParameters(f"{name} has no affine scheme (compact form)")


def _validate_so(name: RealFormName) -> None:
    # params are normalized: even part first, equal parities ascending
    a, b = name.params
    if a < 1 or b < 1:
        raise InvalidParameters(f"{name}: both parts must be at least 1")
    if a % 2 == 1 and b % 2 == 1:
        if (a, b) == (1, 3):
            raise InvalidParameters("so(1,3) is sl(2,C) regarded as real; use a complex factor")
        if (a, b) == (1, 5):
            raise InvalidParameters("so(1,5) is isomorphic to sl(2,H); use that name")
        if (a, b) == (3, 3):
            raise InvalidParameters("so(3,3) is isomorphic to sl(4,R); use that name")
        if a + b < 8:
            raise InvalidParameters(f"{name}: odd-odd signatures need total at least 8")
    elif a % 2 == 0 and b % 2 == 0:
        if (a, b) == (2, 2):
            raise InvalidParameters("so(2,2) is not simple")
        if (a, b) == (2, 4):
            raise InvalidParameters("so(2,4) is isomorphic to su(2,2); use that name")
        # remaining shapes, so(2, >=6) and so(>=4, >=4), are all legal
    else:
        if (a, b) == (2, 1):
            raise InvalidParameters("so(2,1) is isomorphic to su(1,1); use that name")


def _black_nodes(name: RealFormName) -> tuple[int, ...]:
    k, p = name.kind, name.params
    if k == "su":
        return (0, p[0])
    if k == "so":
        a, b = p
        if a % 2 == 1:  # both odd, a <= b
            return ((a - 1) // 2,)
        if b % 2 == 1:  # even-odd
            return (0, 1) if a == 2 else (a // 2,)
        return (0, 1) if a == 2 else (a // 2,)  # both even, a <= b
    if k == "sostar":
        return (0, p[0] // 2)
    if k == "spr":
        return (0, p[0])
    if k == "sp":
        return (p[0],)
    if k == "slr":
        n = p[0]
        if n % 2 == 1:
            return ((n - 1) // 2,)
        return (1,) if n == 4 else (n // 2,)
    if k == "slh":
        return (0,)
    table = {
        ("e6", 2): (2,),
        ("e6", -14): (0, 1),
        ("e6", 6): (4,),
        ("e6", -26): (0,),
        ("e7", 7): (2,),
        ("e7", -5): (1,),
        ("e7", -25): (0, 7),
        ("e8", 8): (1,),
        ("e8", -24): (8,),
        ("f4", 4): (1,),
        ("f4", -20): (4,),
        ("g2", 2): (2,),
    }
    return table[(k, p[0])]


def construct(name: RealFormName) -> RealFormDiagram:
    """The diagram of a real form: all-white finite for compact names,
    a validated painting otherwise."""
    name = name.normalized()
    name.validate()
    if name.is_compact:
        return CompactDiagram(build_finite(name.params[0], name.params[1]))
    family, rank, twist = name.scheme_spec()
    scheme = build_affine(family, rank, twist)
    return paint(scheme, compute_marks(scheme), _black_nodes(name), twist)


# ---------------------------------------------------------------------------
# equivalence and identification


@dataclass(frozen=True)
class CanonicalPainting:
    """Equality of canonical paintings is equivalence of the originals."""

    series: str
    cartan: tuple[tuple[int, ...], ...]
    color: tuple[int, ...]
    r: int
    relabeling: DiagramAut = field(compare=False)


def canonical_form(painting: PaintedDiagram) -> CanonicalPainting:
    """Lexicographically minimal color vector over automorphisms of the
    uncolored scheme; equal outputs characterize equivalent paintings."""
    bits = painting.color_bits()
    n = painting.scheme.n
    best = None
    best_aut = None
    for aut in automorphisms(painting.scheme).elements:
        candidate = tuple(bits[aut.perm[i]] for i in range(n))
        if best is None or (candidate, aut.perm) < (best, best_aut.perm):
            best = candidate
            best_aut = aut
    return CanonicalPainting(
        series=painting.scheme.series,
        cartan=painting.scheme.cartan,
        color=best,
        r=painting.r,
        relabeling=best_aut,
    )


def equivalent(p1: PaintedDiagram, p2: PaintedDiagram) -> bool:
    return canonical_form(p1) == canonical_form(p2)


def enumerate_paintings(scheme: CartanScheme, r: int) -> list[PaintedDiagram]:
    """All colorings with r * sum(black marks) = 2, one canonical
    representative per orbit of the uncolored automorphism group."""
    frt = scheme.family_rank_twist()
    if scheme.kind != "affine":
        raise InvalidParameters("painting enumeration needs an affine scheme")
    if frt is not None and frt[2] != r:
        raise InvalidParameters(f"r = {r} does not match the twist order of {scheme.series}")
    marks = compute_marks(scheme)
    mark1 = [v for v in scheme.nodes if marks.of(v) == 1]
    mark2 = [v for v in scheme.nodes if marks.of(v) == 2]
    black_sets: list[tuple[int, ...]] = []
    if r == 2:
        black_sets = [(v,) for v in mark1]
    else:
        black_sets = [(v,) for v in mark2]
        black_sets += [
            (mark1[i], mark1[j]) for i in range(len(mark1)) for j in range(i + 1, len(mark1))
        ]
    seen: dict[tuple[int, ...], PaintedDiagram] = {}
    for blacks in black_sets:
        painting = paint(scheme, marks, blacks, r)
        canon = canonical_form(painting)
        if canon.color not in seen:
            canonical_blacks = [scheme.nodes[i] for i, b in enumerate(canon.color) if b == 1]
            seen[canon.color] = paint(scheme, marks, canonical_blacks, r)
    return [seen[key] for key in sorted(seen)]


@lru_cache(maxsize=None)
def _catalog_canonicals(family: str, rank: int, twist: int):
    out = []
    for name in catalog_names_for_scheme(family, rank, twist):
        diagram = construct(name)
        out.append((name, canonical_form(diagram)))
    return tuple(out)


def identify(painting: PaintedDiagram) -> RealFormName:
    """The unique catalog name whose construction is equivalent to the input."""
    frt = painting.scheme.family_rank_twist()
    if frt is None:
        raise Unrecognized("scheme does not carry a catalog series label")
    target = canonical_form(painting)
    for name, canon in _catalog_canonicals(*frt):
        if canon == target:
            return name
    raise Unrecognized(f"no catalog real form matches this painting of {painting.scheme.series}")


def catalog_names_for_scheme(family: str, rank: int, twist: int) -> tuple[RealFormName, ...]:
    """All catalog names whose painting lives on the given affine scheme."""
    names: list[RealFormName] = []
    if twist == 1:
        if family == "A":
            n = rank + 1
            names = [RealFormName("su", (n - q, q)) for q in range(1, n // 2 + 1)]
        elif family == "B":
            names = [RealFormName("so", (2, 2 * rank - 1))]
            names += [RealFormName("so", (2 * p, 2 * (rank - p) + 1)) for p in range(2, rank + 1)]
        elif family == "C":
            names = [RealFormName("spr", (rank,))]
            names += [RealFormName("sp", (rank - q, q)) for q in range(1, rank // 2 + 1)]
        elif family == "D":
            names = [RealFormName("so", (2, 2 * (rank - 1)))]
            if rank >= 5:
                names.append(RealFormName("sostar", (2 * rank,)))
            names += [RealFormName("so", (2 * p, 2 * (rank - p))) for p in range(2, rank // 2 + 1)]
        elif family == "E" and rank == 6:
            names = [RealFormName("e6", (2,)), RealFormName("e6", (-14,))]
        elif family == "E" and rank == 7:
            names = [RealFormName("e7", (7,)), RealFormName("e7", (-5,)), RealFormName("e7", (-25,))]
        elif family == "E" and rank == 8:
            names = [RealFormName("e8", (8,)), RealFormName("e8", (-24,))]
        elif family == "F" and rank == 4:
            names = [RealFormName("f4", (4,)), RealFormName("f4", (-20,))]
        elif family == "G" and rank == 2:
            names = [RealFormName("g2", (2,))]
    elif twist == 2:
        if family == "A":
            if rank % 2 == 0:
                names = [RealFormName("slr", (rank + 1,))]
            else:
                p = (rank + 1) // 2
                names = [RealFormName("slh", (p,)), RealFormName("slr", (2 * p,))]
        elif family == "D":
            total = 2 * rank
            names = [
                RealFormName("so", (a, total - a)) for a in range(1, rank + 1) if a % 2 == 1
            ]
        elif family == "E" and rank == 6:
            names = [RealFormName("e6", (6,)), RealFormName("e6", (-26,))]
    legal = []
    for name in names:
        try:
            name.validate()
        except InvalidParameters:
            continue
        legal.append(name.normalized())
    return tuple(legal)


def catalog_schemes(max_rank: int) -> list[tuple[str, int, int]]:
    """All (family, rank, twist) with catalog entries up to the given rank."""
    out: list[tuple[str, int, int]] = []
    for rank in range(1, max_rank + 1):
        out.append(("A", rank, 1))
    for rank in range(2, max_rank + 1):
        out.append(("B", rank, 1))
    for rank in range(3, max_rank + 1):
        out.append(("C", rank, 1))
    for rank in range(4, max_rank + 1):
        out.append(("D", rank, 1))
    for rank in (6, 7, 8):
        if rank <= max_rank:
            out.append(("E", rank, 1))
    if max_rank >= 4:
        out.append(("F", 4, 1))
    if max_rank >= 2:
        out.append(("G", 2, 1))
    for rank in range(2, max_rank + 1):
        out.append(("A", rank, 2))
    for rank in range(4, max_rank + 1):
        out.append(("D", rank, 2))
    if max_rank >= 6:
        out.append(("E", 6, 2))
    return out


def all_catalog_names(max_rank: int) -> list[RealFormName]:
    """Every noncompact catalog name on schemes up to the given rank."""
    names: list[RealFormName] = []
    for family, rank, twist in catalog_schemes(max_rank):
        names.extend(catalog_names_for_scheme(family, rank, twist))
    return names
