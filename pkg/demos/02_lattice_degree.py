"""Degree of a lattice ideal straight from the generator matrix.

For a homogeneous lattice of rank s-1 in Z^s, the degree of its binomial
ideal's quotient ring is the torsion order of Z^s modulo the lattice:
just multiply the invariant factors.  The same number falls out of a
simplex volume, and a rank-1 lattice shows why the rank condition is
not negotiable.
"""

from latdeg import HomogeneousLattice, RankMismatch

lat = HomogeneousLattice.from_rows([[18, -18, 0], [45, 0, -45], [0, 10, -10]])
print("generators:", lat.generators.to_rows())
print("rank:", lat.rank, "of ambient dimension", lat.ambient_dim)
print("degree:", lat.degree())

torsion = lat.torsion_structure()
print("torsion subgroup: cyclic factors", torsion.cyclic_factors, "order", torsion.order)
print("normalized volume of a basis simplex:", lat.normalized_volume())
print("counting function constant from degree", lat.regularity_upper_bound(), "at the latest")
print()

print("membership and element orders in the quotient:")
print("  (18,-18,0) in lattice:", lat.contains([18, -18, 0]))
print("  order of (1,0,-1):", lat.element_order([1, 0, -1]))
print("  order of (0,1,-1):", lat.element_order([0, 1, -1]))
print()

# the 13-digit case is equally instant
big = HomogeneousLattice.from_rows(
    [
        [1001, -500, -501, 0, 0],
        [0, 3500, -3500, 0, 0],
        [0, 0, 3200, -200, -3000],
        [5000, -1000, -1000, -1001, -1999],
    ]
)
print("degree of the 4x5 example:", big.degree())
print()

# rank 1 in Z^3: the quotient has two free factors and the formula is off
conic = HomogeneousLattice.from_rows([[-1, 2, -1]])
print("rank-1 lattice in Z^3: torsion order is", conic.torsion_structure().order)
try:
    conic.degree()
except RankMismatch as exc:
    print("degree() refuses:", exc)
