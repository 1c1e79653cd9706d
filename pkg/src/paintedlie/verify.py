"""Acceptance checks runnable from the CLI and from the test suite.

Each check recomputes its expected values through an independent route
(hand-pinned tables, factorial scans, adjugate kernels, an explicit
permutation-group construction) and reports one pass/fail record.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .autgroup import automorphisms, brute_force_automorphisms, close_perms
from .diagram_core import build_finite, compute_marks
from .errors import LieDiagramError
from .marking import Marking, classify_inner, compose, make_marking, outer_class
from .outer import SemisimpleSpec, outer_complex_as_real, outer_semisimple, outer_simple
from .painted import (
    CompactDiagram,
    PaintedDiagram,
    RealFormName,
    all_catalog_names,
    canonical_form,
    catalog_names_for_scheme,
    catalog_schemes,
    construct,
    enumerate_paintings,
)

DEFAULT_SEED = 8128
DEFAULT_MAX_RANK = 8


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.criterion}: {self.name} ({self.seconds:.2f}s) {self.detail}"


def _timed(criterion: int, name: str, budget: float | None, body) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = body()
        passed = True
    except LieDiagramError as exc:
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    elapsed = time.perf_counter() - start
    if passed and budget is not None and elapsed > budget:
        passed = False
        detail = f"exceeded {budget:.0f}s budget"
    return CheckResult(criterion, name, passed, detail, elapsed)


# ---------------------------------------------------------------------------
# criterion 1: the su(p,q) rows of the published table


SU_TABLE = {
    (2, 1): (2, "Z2"),
    (3, 1): (2, "Z2"),
    (3, 2): (2, "Z2"),
    (5, 2): (2, "Z2"),
    (2, 2): (4, "Z2 × Z2"),
    (3, 3): (4, "Z2 × Z2"),
    (4, 4): (4, "Z2 × Z2"),
}


def check_su_table() -> CheckResult:
    def body() -> str:
        for (p, q), (order, label) in sorted(SU_TABLE.items()):
            desc = outer_simple(RealFormName("su", (p, q)))
            assert desc.order == order, f"su({p},{q}): order {desc.order} != {order}"
            assert desc.label == label, f"su({p},{q}): label {desc.label!r} != {label!r}"
        return f"{len(SU_TABLE)} rows match"

    return _timed(1, "su table reproduction", 1.0, body)


# ---------------------------------------------------------------------------
# criterion 2: defining color condition across the catalog


def check_kac_condition(max_rank: int = DEFAULT_MAX_RANK) -> CheckResult:
    def body() -> str:
        names = all_catalog_names(max_rank)
        for name in names:
            diagram = construct(name)
            assert isinstance(diagram, PaintedDiagram)
            total = sum(diagram.marks.of(v) for v in diagram.black_nodes)
            assert diagram.r * total == 2, f"{name}: r*sum = {diagram.r * total}"
        return f"{len(names)} catalog diagrams satisfy r*sum(black marks) = 2"

    return _timed(2, "Kac condition", 1.0, body)


# ---------------------------------------------------------------------------
# criterion 3: marks against an adjugate-column oracle


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def kernel_by_adjugate(matrix) -> tuple[int, ...]:
    """Kernel vector of a corank-1 integer matrix from a nonzero adjugate
    column: entry i of column j is (-1)**(i+j) det(delete row j, col i)."""
    n = len(matrix)
    for j in range(n):
        column = []
        for i in range(n):
            minor = [
                [Fraction(matrix[r][c]) for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            column.append((-1) ** (i + j) * _det_fraction(minor))
        if any(v != 0 for v in column):
            ints = [int(v) for v in column]
            g = 0
            for v in ints:
                g = gcd(g, v)
            ints = [v // g for v in ints]
            if ints[next(k for k, v in enumerate(ints) if v)] < 0:
                ints = [-v for v in ints]
            return tuple(ints)
    raise AssertionError("adjugate vanished; matrix corank exceeds 1")


def check_marks_oracle(max_rank: int = DEFAULT_MAX_RANK) -> CheckResult:
    def body() -> str:
        from .diagram_core import build_affine

        schemes = [build_affine(f, r, t) for f, r, t in catalog_schemes(max_rank)]
        for scheme in schemes:
            marks = compute_marks(scheme)
            for row in scheme.cartan:
                assert sum(a * v for a, v in zip(row, marks.values)) == 0, scheme.series
            g = 0
            for v in marks.values:
                g = gcd(g, v)
            assert g == 1, f"{scheme.series}: marks not primitive"
            assert all(v > 0 for v in marks.values), scheme.series
            assert marks.values == kernel_by_adjugate(scheme.cartan), (
                f"{scheme.series}: adjugate oracle disagrees"
            )
            if scheme.series.startswith("A") and scheme.series.endswith("(1)"):
                assert set(marks.values) == {1}, f"{scheme.series}: A-series marks not all 1"
        return f"{len(schemes)} affine schemes cross-checked"

    return _timed(3, "marks oracle", 1.0, body)


# ---------------------------------------------------------------------------
# criterion 4: backtracking equals the factorial scan


def check_automorphism_oracle(max_rank: int = DEFAULT_MAX_RANK) -> CheckResult:
    def body() -> str:
        checked = 0
        seen_schemes = set()
        for name in all_catalog_names(max_rank):
            diagram = construct(name)
            scheme = diagram.scheme
            if scheme.n > 9:
                continue
            fast = automorphisms(scheme, diagram.color)
            slow = brute_force_automorphisms(scheme, diagram.color)
            assert fast.element_perms() == slow.element_perms(), str(name)
            checked += 1
            if scheme not in seen_schemes:
                seen_schemes.add(scheme)
                assert (
                    automorphisms(scheme).element_perms()
                    == brute_force_automorphisms(scheme).element_perms()
                ), scheme.series
        return f"{checked} painted diagrams and {len(seen_schemes)} bare schemes agree"

    return _timed(4, "automorphism oracle equivalence", 10.0, body)


# ---------------------------------------------------------------------------
# criterion 5: painting enumeration is bijective with the catalog


def check_enumeration_bijection(max_rank: int = DEFAULT_MAX_RANK) -> CheckResult:
    def body() -> str:
        from .diagram_core import build_affine
        from .painted import identify

        pairs = 0
        counts = {}
        for family, rank, twist in catalog_schemes(max_rank):
            scheme = build_affine(family, rank, twist)
            names = catalog_names_for_scheme(family, rank, twist)
            classes = enumerate_paintings(scheme, twist)
            assert len(classes) == len(names), (
                f"{scheme.series}: {len(classes)} classes vs {len(names)} names"
            )
            assert {str(identify(c)) for c in classes} == {str(n) for n in names}, scheme.series
            counts[scheme.series] = len(classes)
            pairs += 1
        if "A3(1)" in counts:
            assert counts["A3(1)"] == 2, "affine A3 must have exactly 2 classes"
        if "E6(1)" in counts:
            assert counts["E6(1)"] == 2, "affine E6 must have exactly 2 classes"
        return f"{pairs} scheme/r pairs are bijective with the catalog"

    return _timed(5, "enumeration bijection", 5.0, body)


# ---------------------------------------------------------------------------
# criterion 6: the classifying map is a homomorphism


HOMOMORPHISM_FORMS = ("su(2,2)", "sp(2,2)", "sl(4,R)")


def random_marking(diagram: PaintedDiagram, auts, rng: random.Random) -> Marking:
    """Random marking with denominators dividing 12; on twisted diagrams the
    black angle is adjusted so the invariant lands in {0, 1/2}."""
    aut = auts[rng.randrange(len(auts))]
    n = diagram.scheme.n
    angles = [Fraction(rng.randrange(0, 12), 12) for _ in range(n)]
    if diagram.r == 2:
        target = Fraction(rng.randrange(0, 2), 2)
        black = diagram.scheme.index(diagram.black_nodes[0])
        rest = sum(
            diagram.marks.values[i] * angles[i] for i in range(n) if i != black
        )
        angles[black] = (target - rest) % 1
    return Marking(diagram, aut, tuple(angles))


def check_homomorphism(
    max_rank: int = DEFAULT_MAX_RANK, seed: int = DEFAULT_SEED, samples: int = 1000
) -> CheckResult:
    def body() -> str:
        rng = random.Random(seed)
        for text in HOMOMORPHISM_FORMS:
            diagram = construct(RealFormName.parse(text))
            auts = automorphisms(diagram.scheme, diagram.color).elements
            for _ in range(samples):
                m1 = random_marking(diagram, auts, rng)
                m2 = random_marking(diagram, auts, rng)
                lhs = outer_class(compose(m1, m2))
                rhs = outer_class(m1).compose(outer_class(m2))
                assert lhs.aut.perm == rhs.aut.perm and lhs.sign == rhs.sign, text
        constant = 0
        for name in all_catalog_names(max_rank):
            diagram = construct(name)
            for aut in automorphisms(diagram.scheme, diagram.color).elements:
                for v in diagram.scheme.nodes:
                    assert diagram.marks.of(aut.apply(v)) == diagram.marks.of(v), str(name)
                constant += 1
        return (
            f"{samples} pairs per form on {len(HOMOMORPHISM_FORMS)} forms; "
            f"marks constant on {constant} automorphisms"
        )

    return _timed(6, "homomorphism property", 10.0, body)


# ---------------------------------------------------------------------------
# criterion 7: inner/outer classification on a curated suite

# (name, partial node map, partial angle map, expected inner, expected sign)
# The sign column applies to twisted (r = 2) diagrams only.
CURATED_MARKINGS = [
    ("su(2,1)", {}, {}, True, None),
    ("su(2,1)", {}, {1: "1/4"}, True, None),
    ("su(2,1)", {}, {2: "1/4", 0: "3/4"}, True, None),
    ("su(2,1)", {2: 0, 0: 2}, {}, False, None),
    ("su(2,1)", {2: 0, 0: 2}, {1: "1/2", 2: "1/3", 0: "2/3"}, False, None),
    ("su(2,2)", {}, {}, True, None),
    ("su(2,2)", {}, {1: "1/6", 3: "5/6"}, True, None),
    ("su(2,2)", {1: 3, 3: 1}, {}, False, None),
    ("su(2,2)", {2: 0, 0: 2}, {}, False, None),
    ("su(2,2)", {1: 3, 3: 1, 2: 0, 0: 2}, {2: "1/2"}, False, None),
    ("su(4,1)", {}, {}, True, None),
    ("su(4,1)", {}, {4: "1/5", 0: "4/5"}, True, None),
    ("su(4,1)", {0: 4, 4: 0, 1: 3, 3: 1}, {}, False, None),
    ("so(2,7)", {}, {}, True, None),
    ("so(2,7)", {}, {0: "1/4", 1: "3/4"}, True, None),
    ("so(2,7)", {0: 1, 1: 0}, {}, False, None),
    ("so(4,3)", {}, {}, True, None),
    ("so(4,3)", {}, {2: "1/2"}, True, None),
    ("so(4,3)", {0: 1, 1: 0}, {3: "1/3"}, False, None),
    ("sp(2,1)", {}, {}, True, None),
    ("sp(2,1)", {}, {1: "1/2", 2: "1/4", 3: "1/6", 0: "5/6"}, True, None),
    ("sp(2,2)", {}, {}, True, None),
    ("sp(2,2)", {0: 4, 4: 0, 1: 3, 3: 1}, {}, False, None),
    ("so(4,4)", {}, {}, True, None),
    ("so(4,4)", {1: 3, 3: 1}, {}, False, None),
    ("so(4,4)", {1: 3, 3: 4, 4: 1}, {}, False, None),
    ("so(4,4)", {1: 3, 3: 4, 4: 0, 0: 1}, {2: "1/2"}, False, None),
    ("so(2,6)", {}, {}, True, None),
    ("so(2,6)", {3: 4, 4: 3}, {}, False, None),
    ("so(2,6)", {0: 1, 1: 0}, {}, False, None),
    ("g2(2)", {}, {}, True, None),
    ("g2(2)", {}, {1: "1/7", 2: "2/7", 0: "3/7"}, True, None),
    ("e7(-5)", {}, {}, True, None),
    ("e7(-5)", {}, {4: "1/5"}, True, None),
    ("f4(-20)", {}, {}, True, None),
    ("f4(-20)", {}, {1: "1/3", 4: "1/2"}, True, None),
    ("sl(3,R)", {}, {}, True, 1),
    ("sl(3,R)", {}, {1: "1/2"}, False, -1),
    ("sl(3,R)", {}, {0: "1/2"}, True, 1),
    ("sl(3,R)", {}, {0: "1/4"}, False, -1),
    ("sl(3,R)", {}, {0: "1/4", 1: "1/2"}, True, 1),
    ("sl(4,R)", {}, {}, True, 1),
    ("sl(4,R)", {}, {1: "1/2"}, False, -1),
    ("sl(4,R)", {0: 2, 2: 0}, {}, False, 1),
    ("sl(4,R)", {0: 2, 2: 0}, {1: "1/2"}, False, -1),
    ("sl(4,R)", {}, {0: "1/4", 2: "3/4"}, True, 1),
    ("sl(4,R)", {}, {0: "1/4", 2: "1/4"}, False, -1),
    ("sl(2,H)", {}, {0: "1/2"}, False, -1),
    ("so(1,7)", {}, {1: "1/2", 2: "1/2"}, True, 1),
    ("so(5,5)", {0: 4, 4: 0, 1: 3, 3: 1}, {2: "1/2"}, False, -1),
    ("e6(6)", {}, {1: "1/2"}, True, 1),
    ("e6(6)", {}, {2: "1/2"}, False, -1),
    ("e6(6)", {}, {3: "1/4"}, False, -1),
]


def curated_marking(row) -> tuple[Marking, bool, int | None]:
    text, node_map, angle_map, expect_inner, expect_sign = row
    diagram = construct(RealFormName.parse(text))
    scheme = diagram.scheme
    perm = [scheme.index(node_map.get(v, v)) for v in scheme.nodes]
    angles = [Fraction(angle_map.get(v, 0)) for v in scheme.nodes]
    return make_marking(diagram, tuple(perm), angles), expect_inner, expect_sign


def check_classification(rows=CURATED_MARKINGS) -> CheckResult:
    def body() -> str:
        for row in rows:
            m, expect_inner, expect_sign = curated_marking(row)
            result = classify_inner(m)
            assert result.inner == expect_inner, f"{row[0]} {row[1]} {row[2]}"
            rule = m.aut.is_identity and result.outer_class.sign == 1
            assert result.inner == rule, f"{row[0]}: rule mismatch"
            if expect_sign is not None:
                assert result.outer_class.sign == expect_sign, f"{row[0]} sign"
        return f"{len(rows)} curated markings classified correctly"

    return _timed(7, "classification predicates", None, body)


# ---------------------------------------------------------------------------
# criterion 8: semisimple orders against an explicit permutation group


def semisimple_oracle_order(spec: SemisimpleSpec) -> int:
    """Order of the outer group built concretely: permutations of the
    disjoint-union node set plus one 2-point coordinate per complex factor
    and per twisted real factor, closed under composition."""
    spec = spec.normalized()
    points: list[tuple] = []
    factor_data = []
    for idx, (family, rank) in enumerate(spec.complex_factors):
        scheme = build_finite(family, rank)
        tag = ("c", idx)
        nodes = [(tag, v) for v in scheme.nodes]
        aux = [(tag, "flip", 0), (tag, "flip", 1)]
        points += nodes + aux
        group = automorphisms(scheme)
        factor_data.append((("complex", family, rank), tag, scheme, group, True))
    for idx, name in enumerate(spec.real_factors):
        diagram = construct(name)
        tag = ("r", idx)
        scheme = diagram.scheme
        nodes = [(tag, v) for v in scheme.nodes]
        points += nodes
        if isinstance(diagram, CompactDiagram):
            group = automorphisms(scheme)
            has_aux = False
            key = ("compact", scheme.series)
        else:
            group = automorphisms(scheme, diagram.color)
            has_aux = diagram.r == 2
            canon = canonical_form(diagram)
            key = ("painted", canon.series, canon.color, canon.r)
        if has_aux:
            points += [(tag, "flip", 0), (tag, "flip", 1)]
        factor_data.append((key, tag, scheme, group, has_aux))

    index = {pt: k for k, pt in enumerate(points)}
    n = len(points)

    def perm_from_map(mapping: dict) -> tuple[int, ...]:
        return tuple(index[mapping.get(pt, pt)] for pt in points)

    generators: set[tuple[int, ...]] = set()
    for key, tag, scheme, group, has_aux in factor_data:
        for gen in group.generators:
            mapping = {(tag, v): (tag, gen.apply(v)) for v in scheme.nodes}
            generators.add(perm_from_map(mapping))
        if has_aux:
            generators.add(
                perm_from_map({(tag, "flip", 0): (tag, "flip", 1), (tag, "flip", 1): (tag, "flip", 0)})
            )
    for i in range(len(factor_data)):
        for j in range(i + 1, len(factor_data)):
            key_i, tag_i, scheme_i, _, aux_i = factor_data[i]
            key_j, tag_j, scheme_j, _, aux_j = factor_data[j]
            if key_i != key_j:
                continue
            mapping = {}
            for v in scheme_i.nodes:
                mapping[(tag_i, v)] = (tag_j, v)
                mapping[(tag_j, v)] = (tag_i, v)
            if aux_i:
                for b in (0, 1):
                    mapping[(tag_i, "flip", b)] = (tag_j, "flip", b)
                    mapping[(tag_j, "flip", b)] = (tag_i, "flip", b)
            generators.add(perm_from_map(mapping))
    if not generators:
        return 1
    return len(close_perms(generators))


def check_semisimple_orders() -> CheckResult:
    def body() -> str:
        desc = outer_complex_as_real("A", 2)
        assert desc.order == 4, f"sl(3,C): order {desc.order} != 4"
        su22 = RealFormName.parse("su(2,2)")
        spec = SemisimpleSpec((), (su22, su22))
        desc = outer_semisimple(spec)
        assert desc.order == 32, f"su(2,2)+su(2,2): order {desc.order} != 32"
        assert semisimple_oracle_order(spec) == 32, "oracle disagrees on su(2,2)+su(2,2)"
        spec = SemisimpleSpec((("A", 2),), (RealFormName.parse("su(3,1)"),))
        desc = outer_semisimple(spec)
        assert desc.order == 8, f"sl(3,C)+su(3,1): order {desc.order} != 8"
        assert desc.factors.gamma_order == 1, "gamma should not mix kinds"
        assert semisimple_oracle_order(spec) == 8, "oracle disagrees on sl(3,C)+su(3,1)"
        return "orders 4, 32, 8 confirmed; oracle closures match"

    return _timed(8, "semisimple orders", 2.0, body)


def run_all(max_rank: int = DEFAULT_MAX_RANK, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    return [
        check_su_table(),
        check_kac_condition(max_rank),
        check_marks_oracle(max_rank),
        check_automorphism_oracle(max_rank),
        check_enumeration_bijection(max_rank),
        check_homomorphism(max_rank, seed),
        check_classification(),
        check_semisimple_orders(),
    ]
