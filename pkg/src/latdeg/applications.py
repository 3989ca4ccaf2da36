"""End-to-end consumers of the degree machinery.

Two independent sources of rank-(s-1) homogeneous lattices, each with
its own elementary counting oracle:

* monomially parameterized projective sets over a prime field, where
  the lattice degree must equal the number of distinct points; and
* graph Laplacian row lattices, where the degree must equal the number
  of spanning trees (and the reduced-Laplacian determinant).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .errors import BudgetExceeded, Disconnected, FormatError, NonPrimeField
from .intmat import ZMatrix, _content_lines, determinant, integer_kernel
from .lattices import HomogeneousLattice

__all__ = [
    "ToricSetSpec",
    "build_toric_lattice",
    "enumerate_toric_set",
    "VanishingCheck",
    "check_vanishing_degree",
    "CiHypothesisCheck",
    "ci_hypothesis_check",
    "GraphSpec",
    "build_laplacian_lattice",
    "reduced_laplacian",
    "spanning_tree_count",
    "SandpileCheck",
    "check_sandpile_degree",
    "parse_toric_spec",
    "parse_graph",
    "POINT_BUDGET",
    "MAX_TREE_EDGES",
]

POINT_BUDGET = 1_000_000
MAX_TREE_EDGES = 24


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ToricSetSpec:
    """Prime field size q and exponent vectors defining a projective set.

    The set consists of the projective points whose coordinates are the
    monomials x^{v_1}, ..., x^{v_s} evaluated at parameters x_1..x_n
    ranging over the nonzero field elements.
    """

    q: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _is_prime(self.q):
            raise NonPrimeField(self.q)
        exps = tuple(tuple(int(e) for e in v) for v in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) < 1:
            raise ValueError("need at least one exponent vector")
        n = len(exps[0])
        if n < 1:
            raise ValueError("exponent vectors must have at least one entry")
        if any(len(v) != n for v in exps):
            raise ValueError("exponent vectors must all have the same length")
        if any(e < 0 for v in exps for e in v):
            raise ValueError("exponents must be nonnegative")

    @property
    def s(self) -> int:
        return len(self.exponents)

    @property
    def n(self) -> int:
        return len(self.exponents[0])


def build_toric_lattice(spec: ToricSetSpec) -> HomogeneousLattice:
    """The homogeneous lattice whose binomial ideal vanishes on the set.

    A vector c belongs to it iff its coordinates sum to zero and
    sum_i c_i v_i == 0 componentwise mod q-1.  Both conditions together
    are the integer left kernel of the stacked system
    [ones column | exponent matrix] over [zero column | (q-1) identity],
    projected to the first s coordinates; the projection is injective on
    that kernel, so a kernel basis maps to a generating set.  The result
    always has rank s-1 because (q-1)(e_i - e_s) satisfies both
    conditions for every i.
    """
    s, n, q = spec.s, spec.n, spec.q
    rows = [[1, *v] for v in spec.exponents]
    for j in range(n):
        row = [0] * (n + 1)
        row[1 + j] = q - 1
        rows.append(row)
    kernel = integer_kernel(ZMatrix.from_rows(rows))
    gens = [kernel.row(i)[:s] for i in range(kernel.rows)]
    return HomogeneousLattice.from_rows(gens, ambient_dim=s)


def _point(spec: ToricSetSpec, x: Sequence[int]) -> tuple[int, ...]:
    q = spec.q
    coords = [
        prod(pow(xj, vj, q) for xj, vj in zip(x, v)) % q for v in spec.exponents
    ]
    inv = pow(coords[0], q - 2, q)  # first coordinate is a unit
    return tuple(c * inv % q for c in coords)


def enumerate_toric_set(
    spec: ToricSetSpec, budget: int = POINT_BUDGET, workers: int = 1
) -> set[tuple[int, ...]]:
    """All distinct points of the set, normalized to first coordinate 1.

    Iterates the full parameter grid of size (q-1)^n, which must fit in
    ``budget``.  Points are deduplicated after dividing by the first
    coordinate, so members are s-tuples over [1, q-1] starting with 1.
    """
    q, n = spec.q, spec.n
    needed = (q - 1) ** n
    if needed > budget:
        raise BudgetExceeded(needed, budget, what="parameter grid size")
    units = range(1, q)
    if workers <= 1:
        return {_point(spec, x) for x in itertools.product(units, repeat=n)}
    # chunk the grid by first parameter; union of chunks == sequential set
    chunks = [list(units)[w::workers] for w in range(workers)]

    def run(first_values):
        return {
            _point(spec, (x1, *rest))
            for x1 in first_values
            for rest in itertools.product(units, repeat=n - 1)
        }

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run, chunks))
    merged: set[tuple[int, ...]] = set()
    for part in parts:
        merged |= part
    return merged


@dataclass(frozen=True)
class VanishingCheck:
    lattice_degree: int
    point_count: int
    agree: bool


def check_vanishing_degree(spec: ToricSetSpec, budget: int = POINT_BUDGET) -> VanishingCheck:
    """Compare lattice degree with the brute-force point count."""
    deg = build_toric_lattice(spec).degree()
    count = len(enumerate_toric_set(spec, budget=budget))
    return VanishingCheck(lattice_degree=deg, point_count=count, agree=deg == count)


@dataclass(frozen=True)
class CiHypothesisCheck:
    """Whether the complete-intersection criterion's hypotheses hold.

    When q-1 is prime, the exponent vectors are pairwise distinct mod
    q-1, and the torsion subgroup is (Z_{q-1})^(s-1), the vanishing
    ideal is a complete intersection iff it is generated by the pure
    power differences listed in ``predicted_generators``.
    """

    q_minus_1_prime: bool
    exponents_distinct_mod: bool
    torsion_is_power: bool
    corollary_applies: bool
    predicted_generators: str | None


def ci_hypothesis_check(spec: ToricSetSpec) -> CiHypothesisCheck:
    q1 = spec.q - 1
    s = spec.s
    prime = _is_prime(q1)
    distinct = all(
        any((vi[k] - vj[k]) % q1 != 0 for k in range(spec.n)) if q1 > 1 else False
        for vi, vj in itertools.combinations(spec.exponents, 2)
    )
    torsion = build_toric_lattice(spec).torsion_structure()
    is_power = list(torsion.cyclic_factors) == [q1] * (s - 1)
    applies = prime and distinct and is_power
    predicted = None
    if applies:
        predicted = ", ".join(f"t{i + 1}^{q1}-t{s}^{q1}" for i in range(s - 1))
    return CiHypothesisCheck(
        q_minus_1_prime=prime,
        exponents_distinct_mod=distinct,
        torsion_is_power=is_power,
        corollary_applies=applies,
        predicted_generators=predicted,
    )


@dataclass(frozen=True)
class GraphSpec:
    """Connected simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        s = self.vertex_count
        if s < 1:
            raise ValueError("graph needs at least one vertex")
        norm = []
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < s and 0 <= j < s):
                raise ValueError(f"edge ({i}, {j}) out of range for {s} vertices")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            e = (min(i, j), max(i, j))
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))
        parent = list(range(s))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in norm:
            parent[find(i)] = find(j)
        if len({find(v) for v in range(s)}) != 1:
            raise Disconnected(f"graph on {s} vertices is not connected")


def build_laplacian_lattice(g: GraphSpec) -> HomogeneousLattice:
    """Row lattice of the graph Laplacian (degree matrix minus adjacency).

    Rows sum to zero, and for a connected graph the rank is s-1, so the
    degree machinery applies; the torsion order is the spanning-tree
    count.
    """
    s = g.vertex_count
    lap = [[0] * s for _ in range(s)]
    for i, j in g.edges:
        lap[i][j] -= 1
        lap[j][i] -= 1
        lap[i][i] += 1
        lap[j][j] += 1
    return HomogeneousLattice.from_rows(lap, ambient_dim=s)


def reduced_laplacian(g: GraphSpec, drop_vertex: int | None = None) -> ZMatrix:
    """Laplacian with one vertex's row and column deleted (default: last)."""
    s = g.vertex_count
    if drop_vertex is None:
        drop_vertex = s - 1
    if not 0 <= drop_vertex < s:
        raise ValueError(f"vertex {drop_vertex} out of range")
    full = build_laplacian_lattice(g).generators.to_rows()
    keep = [v for v in range(s) if v != drop_vertex]
    return ZMatrix.from_rows([[full[i][j] for j in keep] for i in keep], cols=s - 1)


def spanning_tree_count(g: GraphSpec) -> int:
    """Exact spanning-tree count by enumerating edge subsets of size s-1.

    A subset of s-1 acyclic edges on s vertices is automatically a
    spanning tree, so a union-find cycle check suffices.
    """
    s = g.vertex_count
    if len(g.edges) > MAX_TREE_EDGES:
        raise BudgetExceeded(len(g.edges), MAX_TREE_EDGES, what="edge count")
    count = 0
    for subset in itertools.combinations(g.edges, s - 1):
        parent = list(range(s))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in subset:
            ri, rj = find(i), find(j)
            if ri == rj:
                break
            parent[ri] = rj
        else:
            count += 1
    return count


@dataclass(frozen=True)
class SandpileCheck:
    degree: int
    spanning_trees: int
    reduced_laplacian_det: int
    agree: bool


def check_sandpile_degree(g: GraphSpec) -> SandpileCheck:
    """Three independent routes to one number, compared."""
    deg = build_laplacian_lattice(g).degree()
    trees = spanning_tree_count(g)
    det = abs(determinant(reduced_laplacian(g)))
    return SandpileCheck(
        degree=deg,
        spanning_trees=trees,
        reduced_laplacian_det=det,
        agree=deg == trees == det,
    )


def parse_toric_spec(text: str) -> ToricSetSpec:
    """Parse the exponent file format: header "q n s", then s rows of n entries."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty exponent file")
    head = lines[0].split()
    if len(head) != 3:
        raise FormatError(f"header must be 'q n s', got {lines[0]!r}")
    try:
        q, n, s = (int(x) for x in head)
    except ValueError:
        raise FormatError(f"header must be three integers, got {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != s:
        raise FormatError(f"expected {s} exponent rows, got {len(body)}")
    vectors = []
    for k, line in enumerate(body):
        parts = line.split()
        if len(parts) != n:
            raise FormatError(f"exponent row {k + 1} has {len(parts)} entries, expected {n}")
        try:
            vectors.append(tuple(int(p) for p in parts))
        except ValueError:
            raise FormatError(f"exponent row {k + 1} contains a non-integer: {line!r}") from None
    return ToricSetSpec(q=q, exponents=tuple(vectors))


def parse_graph(text: str) -> GraphSpec:
    """Parse the graph file format: header "s", then one 1-indexed "i j" per line."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    try:
        s = int(lines[0])
    except ValueError:
        raise FormatError(f"header must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for k, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"edge line {k + 1} must be 'i j', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"edge line {k + 1} contains a non-integer: {line!r}") from None
        if not (1 <= i <= s and 1 <= j <= s):
            raise FormatError(f"edge ({i}, {j}) out of range for {s} vertices (1-indexed)")
        edges.append((i - 1, j - 1))
    try:
        return GraphSpec(vertex_count=s, edges=tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
