"""Homogeneous integer lattices and the quotient-group data derived from them.

A lattice here is the integer row span of a generator matrix in which
every row has coordinate sum zero.  The cached Smith decomposition of
the generators answers membership and element-order queries and yields
the torsion structure of the quotient group; for lattices of rank one
less than the ambient dimension it also gives the degree (the torsion
order), a simplex-volume reading of the same number, and an upper bound
for where the associated counting function goes constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotHomogeneous, RankMismatch
from .intmat import ZMatrix, determinant, hermite_normal_form, smith_normal_form

__all__ = ["HomogeneousLattice", "TorsionStructure", "lattice_from_generators"]


@dataclass(frozen=True)
class TorsionStructure:
    """Cyclic decomposition of the torsion subgroup of Z^s modulo the lattice.

    ``cyclic_factors`` are the invariant factors with the trivial 1s
    filtered out, each dividing the next; ``order`` is the product of
    all invariant factors; ``free_rank`` is ambient dimension minus
    lattice rank.
    """

    cyclic_factors: tuple[int, ...]
    order: int
    free_rank: int


class HomogeneousLattice:
    """Integer lattice in Z^s all of whose members have zero coordinate sum.

    Construction verifies homogeneity of every generator row (row sums
    are linear, so this covers the whole lattice) and eagerly computes
    the Smith decomposition of the generator matrix.  Instances are
    immutable and safe to share across threads.
    """

    __slots__ = ("generators", "ambient_dim", "decomposition", "rank")

    def __init__(self, generators: ZMatrix):
        for i in range(generators.rows):
            total = sum(generators.row(i))
            if total != 0:
                raise NotHomogeneous(i, total)
        self.generators = generators
        self.ambient_dim = generators.cols
        self.decomposition = smith_normal_form(generators)
        self.rank = self.decomposition.rank

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ambient_dim: int | None = None):
        return cls(ZMatrix.from_rows(rows, cols=ambient_dim))

    def __repr__(self) -> str:
        return (
            f"HomogeneousLattice(s={self.ambient_dim}, rank={self.rank}, "
            f"generators={self.generators.to_rows()!r})"
        )

    def smith_coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of ``v`` after the column transform of the decomposition.

        With ``w = v @ V``, the lattice consists exactly of the vectors
        whose first ``rank`` transformed coordinates are divisible by the
        matching invariant factors and whose remaining coordinates vanish.
        """
        s = self.ambient_dim
        if len(v) != s:
            raise DimensionMismatch(f"vector has length {len(v)}, expected {s}")
        vmat = self.decomposition.v
        cols = [vmat.column(j) for j in range(s)]
        return tuple(sum(int(v[i]) * col[i] for i in range(s)) for col in cols)

    def contains(self, v: Sequence[int]) -> bool:
        """True iff ``v`` lies in the integer row span of the generators."""
        w = self.smith_coordinates(v)
        factors = self.decomposition.invariant_factors
        r = self.rank
        if any(w[i] % factors[i] for i in range(r)):
            return False
        return not any(w[i] for i in range(r, self.ambient_dim))

    def element_order(self, v: Sequence[int]) -> int | None:
        """Smallest n >= 1 with n*v in the lattice, or None if no multiple is.

        Finite exactly when ``v`` lies in the rational span of the
        lattice; the order is then lcm over i of d_i / gcd(d_i, w_i) in
        Smith coordinates.
        """
        w = self.smith_coordinates(v)
        factors = self.decomposition.invariant_factors
        r = self.rank
        if any(w[i] for i in range(r, self.ambient_dim)):
            return None
        n = 1
        for i in range(r):
            n = lcm(n, factors[i] // gcd(factors[i], w[i]))
        return n

    def torsion_structure(self) -> TorsionStructure:
        factors = self.decomposition.invariant_factors
        return TorsionStructure(
            cyclic_factors=tuple(f for f in factors if f > 1),
            order=prod(factors),
            free_rank=self.ambient_dim - self.rank,
        )

    def is_torsion_free(self) -> bool:
        return all(f == 1 for f in self.decomposition.invariant_factors)

    def _require_corank_one(self) -> None:
        expected = self.ambient_dim - 1
        if self.rank != expected:
            raise RankMismatch(expected=expected, got=self.rank)

    def degree(self) -> int:
        """Product of the invariant factors, i.e. the torsion order.

        Only defined when the rank is ambient dimension minus one (the
        quotient then has exactly one free factor); for other ranks the
        formula is wrong, so this raises ``RankMismatch`` instead of
        returning a misleading number.
        """
        self._require_corank_one()
        return prod(self.decomposition.invariant_factors)

    def regularity_upper_bound(self) -> int:
        """A degree B from which the coset-counting function is constant.

        B = sum over i < s of (n_i - 1), plus 1, where n_i is the order
        of e_i - e_s in the quotient.  Not claimed minimal; the counting
        function equals :meth:`degree` from B on.
        """
        self._require_corank_one()
        s = self.ambient_dim
        total = 0
        for i in range(s - 1):
            v = [0] * s
            v[i] = 1
            v[s - 1] = -1
            n = self.element_order(v)
            assert n is not None  # guaranteed at rank s - 1
            total += n - 1
        return total + 1

    def normalized_volume(self) -> int:
        """(s-1)! times the relative volume of the basis simplex.

        Extracts a basis (nonzero Hermite-form rows of the generators),
        expresses each basis vector in the coordinates e_i - e_s (its
        first s-1 entries, valid because rows sum to zero), and returns
        the absolute determinant.  Equals :meth:`degree`; the two values
        travel through independent eliminations.
        """
        self._require_corank_one()
        hf = hermite_normal_form(self.generators)
        basis = [list(hf.h.row(i))[:-1] for i in range(hf.rank)]
        return abs(determinant(ZMatrix.from_rows(basis, cols=self.ambient_dim - 1)))


def lattice_from_generators(a: ZMatrix | Iterable[Sequence[int]]) -> HomogeneousLattice:
    """Build a lattice from a generator matrix, checking homogeneity."""
    if isinstance(a, ZMatrix):
        return HomogeneousLattice(a)
    return HomogeneousLattice.from_rows(list(a))
