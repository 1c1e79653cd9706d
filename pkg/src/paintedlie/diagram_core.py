"""Finite and affine Cartan schemes as integer-labelled graphs.

Conventions, fixed here once and relied on everywhere else:

* Cartan integers follow ``entry(i, j) = <alpha_j, alpha_i^vee>``: every
  diagonal entry is 2, and the marks of an affine scheme span the *right*
  kernel, ``A . a = 0``.
* Node ids are the Bourbaki numbers 1..n for finite types.  An untwisted
  affinization keeps those ids and appends the extending node, with id 0,
  at the end of the node list.  Twisted schemes are numbered 0..l along
  the chain; in the twisted A-odd series the two fork nodes are 0 and 1.
* A multiple bond is stored as the asymmetric entry pair
  ``(entry(i, j), entry(j, i))``; there is no separate arrow attribute.

Marks are always computed from the matrix, never loaded from a table, so
published label tables serve only as an external cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidType, NotAffine, UnsupportedTwist

Matrix = tuple[tuple[int, ...], ...]

# (min rank, max rank); None means unbounded above.
FINITE_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Families that admit an order-2 twisted diagram, with their minimum rank.
TWISTED_MIN_RANK = {"A": 2, "D": 4, "E": 6}


def check_finite_type(family: str, rank: int) -> None:
    """Raise InvalidType unless (family, rank) is a valid finite type."""
    bounds = FINITE_RANK_RANGES.get(family)
    if bounds is None:
        raise InvalidType(f"unknown family {family!r}")
    lo, hi = bounds
    if rank < lo or (hi is not None and rank > hi):
        raise InvalidType(f"{family}{rank} is not a valid finite type")


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def integer_det(rows: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def right_kernel(matrix: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {x : A.x = 0}, by Gaussian elimination."""
    n = len(matrix)
    rows = [[Fraction(v) for v in row] for row in matrix]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for pr, pc in enumerate(pivots):
            vec[pc] = -rows[pr][fc]
        basis.append(tuple(vec))
    return basis


def _primitive_integer(vec: tuple[Fraction, ...]) -> tuple[int, ...]:
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    nonzero = next((v for v in ints if v != 0), 0)
    if nonzero < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def classify_matrix(matrix: Matrix) -> str:
    """Classify a generalized Cartan matrix as finite, affine, or other.

    finite:  nonsingular with all leading principal minors positive;
    affine:  corank exactly 1 with a strictly positive null vector;
    other:   anything else.
    """
    n = len(matrix)
    kernel = right_kernel(matrix)
    if not kernel:
        for k in range(1, n + 1):
            minor = [[matrix[i][j] for j in range(k)] for i in range(k)]
            if integer_det(minor) <= 0:
                return "other"
        return "finite"
    if len(kernel) == 1:
        vec = _primitive_integer(kernel[0])
        if all(v > 0 for v in vec):
            return "affine"
    return "other"


# ---------------------------------------------------------------------------
# schemes


@dataclass(frozen=True)
class CartanScheme:
    """An integer-labelled graph of simple roots.

    ``nodes`` fixes the storage order; ``cartan[i][j]`` is the Cartan
    integer between ``nodes[i]`` and ``nodes[j]``.  ``series`` records how
    the scheme was built (e.g. "A3", "A3(1)", "E6(2)"); it is "" for
    hand-built schemes.  Values are immutable after construction.
    """

    nodes: tuple[int, ...]
    cartan: Matrix
    kind: str
    series: str = ""

    def __post_init__(self) -> None:
        n = len(self.nodes)
        if len(set(self.nodes)) != n:
            raise ValueError("duplicate node ids")
        if len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise ValueError("cartan matrix shape does not match nodes")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError("diagonal Cartan entries must equal 2")
            for j in range(n):
                if i != j:
                    if self.cartan[i][j] > 0:
                        raise ValueError("off-diagonal Cartan entries must be <= 0")
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")
        kind = classify_matrix(self.cartan)
        if self.kind == "finite":
            if kind != "finite":
                raise InvalidType("matrix is not of finite type")
        elif self.kind == "affine":
            if kind != "affine":
                raise NotAffine("matrix is not of affine type")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def n(self) -> int:
        return len(self.nodes)

    def index(self, node: int) -> int:
        return self.nodes.index(node)

    def entry(self, i: int, j: int) -> int:
        """Cartan integer between node ids i and j."""
        return self.cartan[self.index(i)][self.index(j)]

    def bonds(self) -> list[tuple[int, int, int, int]]:
        """All bonds as (id_i, id_j, entry(i, j), entry(j, i)) with index(i) < index(j)."""
        out = []
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.cartan[a][b] != 0:
                    out.append((self.nodes[a], self.nodes[b], self.cartan[a][b], self.cartan[b][a]))
        return out

    def neighbors(self, node: int) -> tuple[int, ...]:
        i = self.index(node)
        return tuple(self.nodes[j] for j in range(self.n) if j != i and self.cartan[i][j] != 0)

    def family_rank_twist(self) -> tuple[str, int, int] | None:
        """Parse the series label; None when the scheme is hand-built."""
        s = self.series
        if not s:
            return None
        family = s[0]
        rest = s[1:]
        twist = 0
        if "(" in rest:
            rest, paren = rest.split("(", 1)
            twist = int(paren.rstrip(")"))
        return family, int(rest), twist

    def to_dict(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "cartan": [list(row) for row in self.cartan],
            "kind": self.kind,
            "series": self.series,
        }

    @staticmethod
    def from_dict(data: dict) -> "CartanScheme":
        return CartanScheme(
            nodes=tuple(int(v) for v in data["nodes"]),
            cartan=tuple(tuple(int(v) for v in row) for row in data["cartan"]),
            kind=str(data["kind"]),
            series=str(data.get("series", "")),
        )


@dataclass(frozen=True)
class Marks:
    """The primitive positive integer null vector of an affine scheme."""

    scheme: CartanScheme
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.scheme.n:
            raise ValueError("marks length does not match scheme")

    def of(self, node: int) -> int:
        return self.values[self.scheme.index(node)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.scheme.nodes, self.values))


# ---------------------------------------------------------------------------
# builders


def _bonds_to_matrix(nodes: tuple[int, ...], bonds: list[tuple[int, int, int, int]]) -> Matrix:
    idx = {v: k for k, v in enumerate(nodes)}
    n = len(nodes)
    m = [[0] * n for _ in range(n)]
    for k in range(n):
        m[k][k] = 2
    for i, j, aij, aji in bonds:
        m[idx[i]][idx[j]] = aij
        m[idx[j]][idx[i]] = aji
    return tuple(tuple(row) for row in m)


def _finite_bonds(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    chain = [(i, i + 1, -1, -1) for i in range(1, rank)]
    if family == "A":
        return chain
    if family == "B":
        chain[-1] = (rank - 1, rank, -1, -2)
        return chain
    if family == "C":
        chain[-1] = (rank - 1, rank, -2, -1)
        return chain
    if family == "D":
        bonds = [(i, i + 1, -1, -1) for i in range(1, rank - 1)]
        bonds.append((rank - 2, rank, -1, -1))
        return bonds
    if family == "E":
        bonds = [(1, 3, -1, -1), (2, 4, -1, -1)]
        bonds += [(i, i + 1, -1, -1) for i in range(3, rank)]
        return bonds
    if family == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    return [(1, 2, -3, -1)]


def build_finite(family: str, rank: int) -> CartanScheme:
    """Finite Cartan scheme in the Bourbaki node ordering."""
    check_finite_type(family, rank)
    nodes = tuple(range(1, rank + 1))
    matrix = _bonds_to_matrix(nodes, _finite_bonds(family, rank))
    return CartanScheme(nodes=nodes, cartan=matrix, kind="finite", series=f"{family}{rank}")


def _extension_bonds(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Bonds attaching the extending node 0 to the finite diagram."""
    if family == "A":
        if rank == 1:
            return [(0, 1, -2, -2)]
        return [(0, 1, -1, -1), (0, rank, -1, -1)]
    if family == "B":
        if rank == 2:
            return [(0, 2, -1, -2)]
        return [(0, 2, -1, -1)]
    if family == "C":
        return [(0, 1, -1, -2)]
    if family == "D":
        return [(0, 2, -1, -1)]
    if family == "E":
        attach = {6: 2, 7: 1, 8: 8}[rank]
        return [(0, attach, -1, -1)]
    if family == "F":
        return [(0, 1, -1, -1)]
    return [(0, 2, -1, -1)]


def _twisted_nodes_bonds(family: str, rank: int) -> tuple[tuple[int, ...], list]:
    if family == "A":
        if rank % 2 == 0:
            half = rank // 2
            if half == 1:
                return (0, 1), [(0, 1, -4, -1)]
            bonds = [(0, 1, -2, -1)]
            bonds += [(i, i + 1, -1, -1) for i in range(1, half - 1)]
            bonds.append((half - 1, half, -2, -1))
            return tuple(range(half + 1)), bonds
        half = (rank + 1) // 2
        if half == 2:
            return (0, 1, 2), [(0, 1, -2, -1), (1, 2, -1, -2)]
        bonds = [(0, 2, -1, -1), (1, 2, -1, -1)]
        bonds += [(i, i + 1, -1, -1) for i in range(2, half - 1)]
        bonds.append((half - 1, half, -2, -1))
        return tuple(range(half + 1)), bonds
    if family == "D":
        bonds = [(0, 1, -2, -1)]
        bonds += [(i, i + 1, -1, -1) for i in range(1, rank - 2)]
        bonds.append((rank - 2, rank - 1, -1, -2))
        return tuple(range(rank)), bonds
    # E6
    return (0, 1, 2, 3, 4), [
        (0, 1, -1, -1),
        (1, 2, -1, -1),
        (2, 3, -2, -1),
        (3, 4, -1, -1),
    ]


def build_affine(family: str, rank: int, twist: int) -> CartanScheme:
    """Affine scheme: untwisted extension (twist 1) or an order-2 twist.

    Supported twist-2 families: A (rank >= 2), D (rank >= 4) and E6.
    Order-3 twists are outside the catalog.
    """
    check_finite_type(family, rank)
    if twist == 1:
        finite = build_finite(family, rank)
        nodes = finite.nodes + (0,)
        bonds = _finite_bonds(family, rank) + _extension_bonds(family, rank)
        matrix = _bonds_to_matrix(nodes, bonds)
        return CartanScheme(nodes=nodes, cartan=matrix, kind="affine", series=f"{family}{rank}(1)")
    if twist == 2:
        min_rank = TWISTED_MIN_RANK.get(family)
        if min_rank is None or (family == "E" and rank != 6):
            raise UnsupportedTwist(f"{family}{rank} has no order-2 twisted diagram")
        if rank < min_rank:
            raise UnsupportedTwist(f"{family}{rank} has no order-2 twisted diagram")
        nodes, bonds = _twisted_nodes_bonds(family, rank)
        matrix = _bonds_to_matrix(nodes, bonds)
        return CartanScheme(nodes=nodes, cartan=matrix, kind="affine", series=f"{family}{rank}(2)")
    raise UnsupportedTwist(f"twist {twist} is not supported")


@lru_cache(maxsize=None)
def compute_marks(scheme: CartanScheme) -> Marks:
    """Unique primitive strictly positive null vector of an affine scheme."""
    kernel = right_kernel(scheme.cartan)
    if len(kernel) != 1:
        raise NotAffine(f"kernel dimension is {len(kernel)}, expected 1")
    vec = _primitive_integer(kernel[0])
    if any(v <= 0 for v in vec):
        raise NotAffine("null vector is not strictly positive")
    for row in scheme.cartan:
        if sum(a * v for a, v in zip(row, vec)) != 0:
            raise NotAffine("null vector check failed")
    return Marks(scheme=scheme, values=vec)


def is_affine_type(scheme: CartanScheme) -> bool:
    """True iff the matrix has corank 1 with a strictly positive null vector."""
    return classify_matrix(scheme.cartan) == "affine"


def induced_submatrix(scheme: CartanScheme, keep: tuple[int, ...]) -> tuple[tuple[int, ...], Matrix]:
    """Rows and columns of the Cartan matrix restricted to the given node ids."""
    kept = tuple(v for v in scheme.nodes if v in set(keep))
    idx = [scheme.index(v) for v in kept]
    matrix = tuple(tuple(scheme.cartan[i][j] for j in idx) for i in idx)
    return kept, matrix
