"""Scripts for cross-validating with external computer-algebra systems.

Nothing here shells out: the scripts are plain text for a human to paste
into Macaulay2 or Maple.  The Macaulay2 one drives the classical route
(saturate the binomial ideal of the generators, then ask for the
degree); the Maple one just recomputes the Smith form.
"""

from latdeg import HomogeneousLattice
from latdeg.cli import emit_cas_script

lat = HomogeneousLattice.from_rows([[18, -18, 0], [45, 0, -45], [0, 10, -10]])

print("--- Macaulay2 (expected output: degree 90) ---")
print(emit_cas_script(lat, "macaulay2"))

print("--- Maple (expected diagonal: 1, 90, 0) ---")
print(emit_cas_script(lat, "maple"))

# the degree formula itself, for comparison
print("latdeg says:", lat.degree())
