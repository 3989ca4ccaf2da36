"""Point counts of monomially parameterized projective sets over F_q.

The vanishing ideal of such a set is the binomial ideal of an explicit
homogeneous lattice of rank s-1, so the number of points is a product
of invariant factors.  Enumerating the points directly confirms it.
"""

from latdeg import (
    ToricSetSpec,
    build_toric_lattice,
    check_vanishing_degree,
    ci_hypothesis_check,
    enumerate_toric_set,
)

spec = ToricSetSpec(q=3, exponents=((1,), (2,)))
print("q=3, coordinates (x, x^2):")
print("  lattice generators:", build_toric_lattice(spec).generators.to_rows())
print("  points:", sorted(enumerate_toric_set(spec)))
print("  check:", check_vanishing_degree(spec))
print()

torus = ToricSetSpec(q=5, exponents=((1, 0, 0), (0, 1, 0), (0, 0, 1)))
print("projective torus over F_5 (expect 4^2 = 16 points):")
print("  check:", check_vanishing_degree(torus))
print()

small_torus = ToricSetSpec(q=3, exponents=((1, 0, 0), (0, 1, 0), (0, 0, 1)))
report = ci_hypothesis_check(small_torus)
print("complete-intersection screen for the torus over F_3:")
print("  q-1 prime:", report.q_minus_1_prime)
print("  exponents distinct mod q-1:", report.exponents_distinct_mod)
print("  torsion is (Z_{q-1})^(s-1):", report.torsion_is_power)
print("  criterion applies:", report.corollary_applies)
print("  the only possible CI generators:", report.predicted_generators)
