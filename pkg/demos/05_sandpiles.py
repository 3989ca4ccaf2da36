"""Sandpile groups: the degree of a graph's toppling ideal counts trees.

The Laplacian rows of a connected graph generate a homogeneous lattice
of rank s-1.  Its torsion group is the sandpile group, whose order is
the spanning-tree count, so three very different computations must land
on one number: invariant factors, edge-subset enumeration, and the
reduced-Laplacian determinant.
"""

from latdeg import (
    GraphSpec,
    build_laplacian_lattice,
    check_sandpile_degree,
    spanning_tree_count,
)

k4 = GraphSpec(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
print("complete graph K4:")
print("  Laplacian:", build_laplacian_lattice(k4).generators.to_rows())
print("  sandpile group:", build_laplacian_lattice(k4).torsion_structure().cyclic_factors)
print("  ", check_sandpile_degree(k4))
print()

c5 = GraphSpec(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0)))
print("5-cycle (drop any one edge to get a tree):")
print("  ", check_sandpile_degree(c5))
print()

path = GraphSpec(4, ((0, 1), (1, 2), (2, 3)))
print("a path is its own unique spanning tree:", spanning_tree_count(path))
print()

wheel = GraphSpec(5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)))
print("wheel on 5 vertices:")
print("  ", check_sandpile_degree(wheel))
