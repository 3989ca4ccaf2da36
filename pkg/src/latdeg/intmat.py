"""Exact integer matrix algebra.

Everything here runs over Python's unbounded integers: Smith and Hermite
normal forms with unimodular transform tracking, fraction-free
determinants, and integer kernels.  No floating point, no fixed-width
arithmetic anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FormatError, NonSquare

__all__ = [
    "ZMatrix",
    "SmithDecomposition",
    "HermiteForm",
    "mat_mul",
    "determinant",
    "smith_normal_form",
    "hermite_normal_form",
    "integer_kernel",
    "parse_matrix",
    "format_matrix",
]


class ZMatrix:
    """Dense integer matrix, stored row-major, immutable by convention.

    Entries are plain Python ints, so magnitudes are unbounded.  Empty
    matrices (zero rows and/or columns) are allowed.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        data = tuple(int(x) for x in entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "ZMatrix":
        """Build from a sequence of rows; ``cols`` disambiguates the empty case."""
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"rows have {width} entries, expected {cols}")
            cols = width
        elif cols is None:
            cols = 0
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "ZMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ZMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        """Mutable row-of-lists copy (the working form for elimination)."""
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def transpose(self) -> "ZMatrix":
        return ZMatrix(
            self.cols, self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def __matmul__(self, other: "ZMatrix") -> "ZMatrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ZMatrix.from_rows({self.to_rows()!r})" if self.cols else \
            f"ZMatrix({self.rows}, {self.cols}, ())"


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular u, v and diagonal d with u @ a @ v == d.

    The diagonal of ``d`` is ``invariant_factors`` (each positive, each
    dividing the next) followed by zeros; ``rank`` counts the nonzero
    diagonal entries.
    """

    u: ZMatrix
    d: ZMatrix
    v: ZMatrix
    invariant_factors: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class HermiteForm:
    """Row-style upper echelon form with transform @ a == h.

    Pivots are positive, move strictly right row by row, and entries
    above each pivot are reduced into [0, pivot).  The nonzero rows of
    ``h`` are a basis of the row lattice of ``a``.
    """

    h: ZMatrix
    transform: ZMatrix
    rank: int


def mat_mul(a: ZMatrix, b: ZMatrix) -> ZMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    bc = b.cols
    brows = [b.row(i) for i in range(b.rows)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        acc = [0] * bc
        for k, aik in enumerate(arow):
            if aik:
                brow = brows[k]
                for j in range(bc):
                    acc[j] += aik * brow[j]
        out.extend(acc)
    return ZMatrix(a.rows, bc, out)


def determinant(a: ZMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if a.rows != a.cols:
        raise NonSquare(a.rows, a.cols)
    n = a.rows
    if n == 0:
        return 1
    mat = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if mat[i][k]), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, n):
            row_i = mat[i]
            row_k = mat[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                # Bareiss: this division is always exact
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * mat[n - 1][n - 1]


def smith_normal_form(a: ZMatrix) -> SmithDecomposition:
    """Smith normal form with transforms.

    Classical elimination: repeatedly move the entry of minimal absolute
    value in the working block to the pivot position, clear its row and
    column with integer row/column operations, and fold any block entry
    the pivot does not divide back into the pivot row so the diagonal
    comes out as a divisibility chain.  Invariant factors are normalized
    positive.  Deterministic for a given input.
    """
    m, s = a.rows, a.cols
    d = a.to_rows()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(s)] for i in range(s)]

    def swap_rows(i, j):
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):  # row i -= q * row j
        di, dj = d[i], d[j]
        for k in range(s):
            di[k] -= q * dj[k]
        ui, uj = u[i], u[j]
        for k in range(m):
            ui[k] -= q * uj[k]

    def col_sub(j, k, q):  # col j -= q * col k
        for row in d:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def min_pivot(t):
        best = None
        for i in range(t, m):
            row = d[i]
            for j in range(t, s):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    limit = min(m, s)
    t = 0
    while t < limit:
        best = min_pivot(t)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            dirty = False
            pivot = d[t][t]
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // pivot
                    if q:
                        row_sub(i, t, q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, s):
                if d[t][j]:
                    q = d[t][j] // pivot
                    if q:
                        col_sub(j, t, q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot appeared; re-pivot on it
                best = min_pivot(t)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            pivot = d[t][t]
            stray = None
            for i in range(t + 1, m):
                row = d[i]
                for j in range(t + 1, s):
                    if row[j] % pivot:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            # pull the non-multiple into the pivot row; the next sweep
            # replaces the pivot by a proper divisor of itself
            drow, dstray = d[t], d[stray]
            for k in range(s):
                drow[k] += dstray[k]
            urow, ustray = u[t], u[stray]
            for k in range(m):
                urow[k] += ustray[k]
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    factors = tuple(d[i][i] for i in range(limit) if d[i][i])
    return SmithDecomposition(
        u=ZMatrix.from_rows(u, cols=m),
        d=ZMatrix.from_rows(d, cols=s),
        v=ZMatrix.from_rows(v, cols=s),
        invariant_factors=factors,
        rank=len(factors),
    )


def hermite_normal_form(a: ZMatrix) -> HermiteForm:
    """Hermite normal form (row-style upper echelon) with transform.

    Only unimodular row operations are used, so the nonzero rows of the
    result are a basis of the row lattice of ``a`` and the returned
    canonical form is unique for a given row lattice.
    """
    m, s = a.rows, a.cols
    h = a.to_rows()
    t = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(i, j):
        if i != j:
            h[i], h[j] = h[j], h[i]
            t[i], t[j] = t[j], t[i]

    def row_sub(i, j, q):
        hi, hj = h[i], h[j]
        for k in range(s):
            hi[k] -= q * hj[k]
        ti, tj = t[i], t[j]
        for k in range(m):
            ti[k] -= q * tj[k]

    r = 0
    for j in range(s):
        if r == m:
            break
        pivoted = False
        while True:
            best = None
            for i in range(r, m):
                x = h[i][j]
                if x and (best is None or abs(x) < abs(h[best][j])):
                    best = i
            if best is None:
                break
            swap(r, best)
            pivot = h[r][j]
            clean = True
            for i in range(r + 1, m):
                if h[i][j]:
                    row_sub(i, r, h[i][j] // pivot)
                    if h[i][j]:
                        clean = False
            if clean:
                pivoted = True
                break
        if not pivoted:
            continue
        if h[r][j] < 0:
            h[r] = [-x for x in h[r]]
            t[r] = [-x for x in t[r]]
        pivot = h[r][j]
        for i in range(r):
            q = h[i][j] // pivot  # floor puts the entry into [0, pivot)
            if q:
                row_sub(i, r, q)
        r += 1

    return HermiteForm(
        h=ZMatrix.from_rows(h, cols=s),
        transform=ZMatrix.from_rows(t, cols=m),
        rank=r,
    )


def integer_kernel(a: ZMatrix) -> ZMatrix:
    """Basis of the integer left kernel ``{x : x @ a == 0}``.

    The rows of the result are a basis over the integers of the full
    kernel lattice (a direct summand of Z^rows, not just a rational
    basis), put into Hermite form for determinism.  Returns an empty
    matrix when the kernel is trivial.
    """
    hf = hermite_normal_form(a)
    raw = [hf.transform.row(i) for i in range(hf.rank, a.rows)]
    if not raw:
        return ZMatrix(0, a.rows, ())
    canon = hermite_normal_form(ZMatrix.from_rows(raw, cols=a.rows))
    return ZMatrix.from_rows([canon.h.row(i) for i in range(canon.rank)], cols=a.rows)


def _content_lines(text: str) -> list[str]:
    """Non-blank lines with comment lines (leading '#') removed."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_matrix(text: str) -> ZMatrix:
    """Parse the matrix text format.

    First content line is ``"rows cols"``; each following line holds one
    row of whitespace-separated integers.  Blank lines and lines whose
    first nonblank character is ``#`` are ignored.
    """
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'rows cols', got {lines[0]!r}")
    try:
        m, s = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"header must be two integers, got {lines[0]!r}") from None
    if m < 0 or s < 0:
        raise FormatError(f"dimensions must be nonnegative, got {m} {s}")
    body = lines[1:]
    expected = m if s > 0 else 0
    if len(body) != expected:
        raise FormatError(f"expected {expected} row lines, got {len(body)}")
    entries: list[int] = []
    for k, line in enumerate(body):
        parts = line.split()
        if len(parts) != s:
            raise FormatError(f"row {k + 1} has {len(parts)} entries, expected {s}")
        try:
            entries.extend(int(p) for p in parts)
        except ValueError:
            raise FormatError(f"row {k + 1} contains a non-integer entry: {line!r}") from None
    return ZMatrix(m, s, entries)


def format_matrix(a: ZMatrix) -> str:
    """Inverse of :func:`parse_matrix` (modulo comments and blank lines)."""
    lines = [f"{a.rows} {a.cols}"]
    if a.cols > 0:
        for i in range(a.rows):
            lines.append(" ".join(str(x) for x in a.row(i)))
    return "\n".join(lines) + "\n"
