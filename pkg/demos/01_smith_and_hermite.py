"""Exact normal forms of integer matrices.

Walks through Smith and Hermite normal forms with their unimodular
transforms, plus determinants and integer kernels, on matrices small
enough to eyeball.
"""

from latdeg import (
    ZMatrix,
    determinant,
    hermite_normal_form,
    integer_kernel,
    mat_mul,
    smith_normal_form,
)

a = ZMatrix.from_rows([[18, -18, 0], [45, 0, -45], [0, 10, -10]])
print("A =", a.to_rows())

dec = smith_normal_form(a)
print("Smith diagonal:", dec.d.to_rows())
print("invariant factors:", dec.invariant_factors, " rank:", dec.rank)
print("U @ A @ V == D:", mat_mul(mat_mul(dec.u, a), dec.v) == dec.d)
print("det U =", determinant(dec.u), " det V =", determinant(dec.v))
print()

# entries grow well past 64 bits without any trouble
big = ZMatrix.from_rows(
    [
        [1001, -500, -501, 0, 0],
        [0, 3500, -3500, 0, 0],
        [0, 0, 3200, -200, -3000],
        [5000, -1000, -1000, -1001, -1999],
    ]
)
print("a 4x5 matrix with an 11-digit invariant factor:")
print("  factors:", smith_normal_form(big).invariant_factors)
print()

hf = hermite_normal_form(a)
print("Hermite form (canonical basis of the row lattice):")
for i in range(hf.rank):
    print("  ", list(hf.h.row(i)))
print("transform is unimodular:", abs(determinant(hf.transform)) == 1)
print()

ones = ZMatrix.from_rows([[1], [1], [1]])
print("integer kernel of the all-ones column:", integer_kernel(ones).to_rows())
