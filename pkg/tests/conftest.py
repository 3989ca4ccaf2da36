"""Shared helpers: independent oracles and random-input generators.

The oracles here deliberately avoid the library's elimination code so
that agreement means something: determinants by cofactor expansion,
invariant factors by gcds of minors, membership by bounded coefficient
search, spanning structure by hand.
"""

import itertools
from math import gcd

from latdeg import GraphSpec, HomogeneousLattice, ToricSetSpec, ZMatrix


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion (exponential, tiny inputs)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def minors_invariant_factors(a: ZMatrix):
    """Invariant factors via determinantal divisors.

    The gcd of all k x k minors is the k-th determinantal divisor D_k,
    and the k-th invariant factor is D_k / D_{k-1}.  Completely
    independent of any elimination order.
    """
    rows = a.to_rows()
    m, s = a.rows, a.cols
    previous = 1
    factors = []
    for k in range(1, min(m, s) + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(s), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, cofactor_det(sub))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return factors


def brute_force_contains(generator_rows, v, coeff_bound=6):
    """Membership by searching integer combinations with bounded coefficients."""
    m = len(generator_rows)
    if m == 0:
        return all(x == 0 for x in v)
    for coeffs in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=m):
        combo = [
            sum(c * row[k] for c, row in zip(coeffs, generator_rows))
            for k in range(len(v))
        ]
        if combo == list(v):
            return True
    return False


def random_int_matrix(rng, m, s, bound):
    return ZMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(s)] for _ in range(m)], cols=s
    )


def random_homogeneous_rows(rng, s, m, bound):
    rows = []
    while len(rows) < m:
        row = [rng.randint(-bound, bound) for _ in range(s)]
        if sum(row) == 0:
            rows.append(row)
    return rows


def random_corank1_lattice(rng, s, bound):
    """Random homogeneous lattice of rank s - 1 (rejection sampling)."""
    while True:
        lat = HomogeneousLattice.from_rows(
            random_homogeneous_rows(rng, s, s - 1, bound), ambient_dim=s
        )
        if lat.rank == s - 1:
            return lat


def random_unimodular(rng, n, ops=12):
    """Product of random elementary row operations applied to the identity."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 1:
            rows[i] = [-x for x in rows[i]]
        elif kind == 2 and i != j:
            c = rng.randint(-3, 3)
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return ZMatrix.from_rows(rows, cols=n)


def random_toric_spec(rng):
    q = rng.choice((2, 3, 5, 7))
    s = rng.randint(2, 4)
    n = rng.randint(1, 3)
    exps = tuple(tuple(rng.randint(0, 6) for _ in range(n)) for _ in range(s))
    return ToricSetSpec(q=q, exponents=exps)


def random_connected_graph(rng, max_vertices=7):
    """Connected simple graph: a random spanning tree plus extra edges."""
    s = rng.randint(2, max_vertices)
    edges = set()
    for v in range(1, s):
        u = rng.randrange(v)
        edges.add((u, v))
    all_pairs = [(i, j) for i in range(s) for j in range(i + 1, s)]
    for pair in all_pairs:
        if pair not in edges and rng.random() < 0.4:
            edges.add(pair)
    return GraphSpec(vertex_count=s, edges=tuple(sorted(edges)))


def is_strictly_increasing_then_constant(values):
    i = 0
    while i + 1 < len(values) and values[i] < values[i + 1]:
        i += 1
    return all(v == values[i] for v in values[i:])
