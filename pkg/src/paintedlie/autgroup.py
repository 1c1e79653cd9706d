"""Automorphism groups of (colored) diagrams and small-group identification.

All groups here are tiny, so they are stored as explicit element lists
rather than generator-only representations.  Permutations act on node
positions (indices into ``scheme.nodes``); node-id views are provided for
display and JSON.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .diagram_core import CartanScheme
from .errors import TooLarge

Perm = tuple[int, ...]

BRUTE_FORCE_MAX_NODES = 9


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose_perms(p: Perm, q: Perm) -> Perm:
    """p after q: i -> p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_cycles(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Cycle partition over positions, fixed points included."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cur = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cur.append(j)
            seen[j] = True
            j = p[j]
        cycles.append(tuple(cur))
    return tuple(cycles)


def perm_order(p: Perm) -> int:
    order = 1
    for cyc in perm_cycles(p):
        k = len(cyc)
        g = _gcd(order, k)
        order = order // g * k
    return order


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def close_perms(perms: set[Perm]) -> frozenset[Perm]:
    """Closure of a set of permutations under composition and inverse."""
    if not perms:
        return frozenset()
    n = len(next(iter(perms)))
    found = {identity_perm(n)} | set(perms) | {invert_perm(p) for p in perms}
    frontier = list(found)
    gens = list(found)
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = compose_perms(cur, g)
            if nxt not in found:
                found.add(nxt)
                frontier.append(nxt)
    return frozenset(found)


# ---------------------------------------------------------------------------
# diagram automorphisms


@dataclass(frozen=True)
class DiagramAut:
    """A Cartan-matrix-preserving vertex permutation of a fixed scheme."""

    scheme: CartanScheme
    perm: Perm

    def __post_init__(self) -> None:
        n = self.scheme.n
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm is not a permutation of the node positions")
        a = self.scheme.cartan
        p = self.perm
        for i in range(n):
            for j in range(n):
                if a[p[i]][p[j]] != a[i][j]:
                    raise ValueError("permutation does not preserve the Cartan matrix")

    @staticmethod
    def identity(scheme: CartanScheme) -> "DiagramAut":
        return DiagramAut(scheme, identity_perm(scheme.n))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.perm))

    def apply(self, node: int) -> int:
        """Image of a node id."""
        return self.scheme.nodes[self.perm[self.scheme.index(node)]]

    def compose(self, other: "DiagramAut") -> "DiagramAut":
        if self.scheme != other.scheme:
            raise ValueError("automorphisms live on different schemes")
        return DiagramAut(self.scheme, compose_perms(self.perm, other.perm))

    def inverse(self) -> "DiagramAut":
        return DiagramAut(self.scheme, invert_perm(self.perm))

    def order(self) -> int:
        return perm_order(self.perm)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle partition over node ids, each cycle starting at its least id."""
        out = []
        for cyc in perm_cycles(self.perm):
            ids = [self.scheme.nodes[i] for i in cyc]
            k = ids.index(min(ids))
            out.append(tuple(ids[k:] + ids[:k]))
        return tuple(sorted(out))

    def image_ids(self) -> list[int]:
        """Image node ids listed in scheme.nodes order (the JSON form)."""
        return [self.scheme.nodes[self.perm[i]] for i in range(self.scheme.n)]


def orbits(d: DiagramAut) -> tuple[tuple[int, ...], ...]:
    """Cycle partition of the permutation, as node ids."""
    return d.cycles()


@dataclass(frozen=True)
class PermGroup:
    """A finite group of diagram automorphisms, stored element-wise."""

    scheme: CartanScheme
    generators: tuple[DiagramAut, ...]
    elements: tuple[DiagramAut, ...]
    order: int
    label: str

    @staticmethod
    def from_perms(scheme: CartanScheme, perms: frozenset[Perm]) -> "PermGroup":
        n = scheme.n
        assert identity_perm(n) in perms, "group must contain the identity"
        for p in perms:
            assert invert_perm(p) in perms, "group must be closed under inverse"
            for q in perms:
                assert compose_perms(p, q) in perms, "group must be closed under composition"
        ordered = sorted(perms)
        gens = _greedy_generators(perms, n)
        label = identify_perm_set(perms, n)
        return PermGroup(
            scheme=scheme,
            generators=tuple(DiagramAut(scheme, p) for p in gens),
            elements=tuple(DiagramAut(scheme, p) for p in ordered),
            order=len(ordered),
            label=label,
        )

    def element_perms(self) -> frozenset[Perm]:
        return frozenset(e.perm for e in self.elements)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "label": self.label,
            "generators": [g.image_ids() for g in self.generators],
        }

    @staticmethod
    def from_dict(scheme: CartanScheme, data: dict) -> "PermGroup":
        perms = {identity_perm(scheme.n)}
        for images in data["generators"]:
            perm = tuple(scheme.index(v) for v in images)
            perms.add(perm)
        group = PermGroup.from_perms(scheme, close_perms(perms))
        if group.order != data["order"]:
            raise ValueError("generator closure does not match recorded order")
        return group


def _greedy_generators(perms: frozenset[Perm], n: int) -> list[Perm]:
    gens: list[Perm] = []
    have: frozenset[Perm] = frozenset({identity_perm(n)})
    for p in sorted(perms):
        if p not in have:
            gens.append(p)
            have = close_perms(set(gens))
        if len(have) == len(perms):
            break
    return gens


def _normalize_color(scheme: CartanScheme, color) -> tuple | None:
    if color is None:
        return None
    if isinstance(color, dict):
        return tuple(color[v] for v in scheme.nodes)
    color = tuple(color)
    if len(color) != scheme.n:
        raise ValueError("color vector length does not match scheme")
    return color


@lru_cache(maxsize=None)
def _automorphism_perms(scheme: CartanScheme, color: tuple | None) -> frozenset[Perm]:
    """Backtracking search with color and bond-signature pruning."""
    n = scheme.n
    a = scheme.cartan
    sigs = []
    for i in range(n):
        bond_profile = tuple(sorted((a[i][j], a[j][i]) for j in range(n) if j != i and a[i][j] != 0))
        sigs.append((None if color is None else color[i], bond_profile))
    candidates = [tuple(j for j in range(n) if sigs[j] == sigs[i]) for i in range(n)]

    found: list[Perm] = []
    images = [-1] * n
    used = [False] * n

    def extend(pos: int) -> None:
        if pos == n:
            found.append(tuple(images))
            return
        for cand in candidates[pos]:
            if used[cand]:
                continue
            row_ok = True
            for prev in range(pos):
                if a[cand][images[prev]] != a[pos][prev] or a[images[prev]][cand] != a[prev][pos]:
                    row_ok = False
                    break
            if row_ok:
                images[pos] = cand
                used[cand] = True
                extend(pos + 1)
                used[cand] = False
        images[pos] = -1

    extend(0)
    return frozenset(found)


def automorphisms(scheme: CartanScheme, color=None) -> PermGroup:
    """Full group of Cartan-matrix-preserving (and color-preserving) permutations."""
    color_t = _normalize_color(scheme, color)
    return PermGroup.from_perms(scheme, _automorphism_perms(scheme, color_t))


@lru_cache(maxsize=None)
def _brute_force_perms(scheme: CartanScheme) -> frozenset[Perm]:
    n = scheme.n
    a = scheme.cartan
    rng = range(n)
    # Degree mismatch already implies a matrix mismatch; checking it first
    # keeps the exhaustive scan of all n! permutations affordable.
    deg = tuple(sum(1 for j in rng if j != i and a[i][j] != 0) for i in rng)
    found = []
    for p in permutations(rng):
        ok = True
        for i in rng:
            if deg[p[i]] != deg[i]:
                ok = False
                break
        if not ok:
            continue
        for i in rng:
            ai = a[i]
            api = a[p[i]]
            for j in rng:
                if api[p[j]] != ai[j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(p)
    return frozenset(found)


def brute_force_automorphisms(scheme: CartanScheme, color=None) -> PermGroup:
    """Independent oracle: test all n! permutations (n <= 9)."""
    if scheme.n > BRUTE_FORCE_MAX_NODES:
        raise TooLarge(f"{scheme.n} nodes exceeds the brute-force bound {BRUTE_FORCE_MAX_NODES}")
    perms = _brute_force_perms(scheme)
    color_t = _normalize_color(scheme, color)
    if color_t is not None:
        perms = frozenset(
            p for p in perms if all(color_t[p[i]] == color_t[i] for i in range(scheme.n))
        )
    return PermGroup.from_perms(scheme, perms)


# ---------------------------------------------------------------------------
# structure identification


def identify_group(group: PermGroup) -> str:
    """Structure label from (order, abelian invariants, element orders)."""
    return identify_perm_set(group.element_perms(), group.scheme.n)


def identify_perm_set(perms: frozenset[Perm], n: int) -> str:
    order = len(perms)
    if order == 1:
        return "1"
    gens = _greedy_generators(perms, n)
    abelian = all(
        compose_perms(g, h) == compose_perms(h, g) for g, h in combinations(gens, 2)
    )
    if abelian:
        return _abelian_label(perms)
    hist = Counter(perm_order(p) for p in perms)
    if order == 6:
        return "S3"
    if order == 24 and hist == Counter({1: 1, 2: 9, 3: 8, 4: 6}):
        return "S4"
    dihedral = _dihedral_label(perms, order)
    if dihedral is not None:
        return dihedral
    split = _central_z2_split(perms, gens, n)
    if split is not None:
        return split
    orders = " ".join(f"{k}^{v}" for k, v in sorted(hist.items()))
    return f"nonabelian order {order} (element orders {orders})"


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _abelian_label(perms: frozenset[Perm]) -> str:
    order = len(perms)
    elem_orders = [perm_order(p) for p in perms]
    per_prime: dict[int, list[int]] = {}
    for p, mult in _factorize(order).items():
        # N(k) = number of elements killed by p^k; its p-valuation increments
        # count the cyclic factors of exponent >= k.
        counts = []
        prev_e = 0
        for k in range(1, mult + 1):
            nk = sum(1 for o in elem_orders if (p**k) % o == 0)
            e = 0
            while nk > 1:
                nk //= p
                e += 1
            counts.append(e - prev_e)
            prev_e = e
        parts = []
        for i in range(1, counts[0] + 1 if counts else 1):
            parts.append(sum(1 for c in counts if c >= i))
        per_prime[p] = sorted(parts, reverse=True)
    width = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(width):
        f = 1
        for p, parts in per_prime.items():
            if i < len(parts):
                f *= p ** parts[i]
        factors.append(f)
    return " × ".join(f"Z{f}" for f in sorted(factors))


def _dihedral_label(perms: frozenset[Perm], order: int) -> str | None:
    if order % 2 != 0 or order < 6:
        return None
    m = order // 2
    rotations = [p for p in perms if perm_order(p) == m]
    for x in rotations:
        cyc = {x}
        cur = x
        for _ in range(m - 1):
            cur = compose_perms(cur, x)
            cyc.add(cur)
        for y in perms:
            if y in cyc or perm_order(y) != 2:
                continue
            if compose_perms(compose_perms(y, x), y) == invert_perm(x):
                return "S3" if m == 3 else f"D{order}"
    return None


def _central_z2_split(perms: frozenset[Perm], gens: list[Perm], n: int) -> str | None:
    central = [
        z
        for z in perms
        if perm_order(z) == 2 and all(compose_perms(z, g) == compose_perms(g, z) for g in gens)
    ]
    if not central:
        return None
    seeds = {compose_perms(g, g) for g in perms}
    for g, h in combinations(gens, 2):
        seeds.add(
            compose_perms(compose_perms(g, h), compose_perms(invert_perm(g), invert_perm(h)))
        )
    sub = close_perms(seeds)
    if len(perms) // len(sub) < 2:
        return None
    coset_of: dict[Perm, frozenset[Perm]] = {}
    cosets: list[frozenset[Perm]] = []
    for p in sorted(perms):
        if p in coset_of:
            continue
        coset = frozenset(compose_perms(p, s) for s in sub)
        cosets.append(coset)
        for q in coset:
            coset_of[q] = coset
    ident = coset_of[identity_perm(n)]
    others = [c for c in cosets if c != ident]
    half = len(cosets) // 2
    for extra in combinations(others, half - 1):
        chosen = {ident, *extra}
        reps = [next(iter(sorted(c))) for c in chosen]
        if any(coset_of[compose_perms(a, b)] not in chosen for a in reps for b in reps):
            continue
        subgroup = frozenset(p for c in chosen for p in c)
        for z in central:
            if z not in subgroup:
                inner = identify_perm_set(subgroup, n)
                return f"{inner} × Z2"
    return None
