"""Small dense matrices and row vectors over the exact rings.

Rows act on the right of matrices (v -> v*M); the transpose convention for
consumers that want column actions is handled by the word layer.  Determinants
use Laplace expansion and are intentionally capped at 6x6.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Elem, RingMismatchError, SizeGuardError


class ShapeError(ValueError):
    """Matrix/vector dimensions do not match."""


def _as_elems(ring, entries):
    return tuple(ring.elem(e) for e in entries)


@dataclass(frozen=True)
class RowVector:
    """A row vector with entries in a single ring."""

    ring: object
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_elems(self.ring, self.entries))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __add__(self, other):
        self._check(other)
        return RowVector(self.ring, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check(other)
        return RowVector(self.ring, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c):
        c = self.ring.elem(c)
        return RowVector(self.ring, tuple(c * a for a in self.entries))

    def dot(self, other):
        self._check(other)
        acc = self.ring.zero()
        for a, b in zip(self.entries, other.entries):
            acc = acc + a * b
        return acc

    def _check(self, other):
        if not isinstance(other, RowVector):
            raise TypeError("RowVector expected")
        if other.ring != self.ring:
            raise RingMismatchError("mixed rings in vector operation")
        if len(other) != len(self):
            raise ShapeError(f"length {len(other)} != {len(self)}")

    def is_zero(self):
        return all(a.is_zero() for a in self.entries)

    def payloads(self):
        return tuple(a.payload for a in self.entries)


def unit_row(ring, n, k=1):
    """The k-th standard basis row (1-based), defaulting to e1."""
    return RowVector(ring, tuple(ring.one() if i == k - 1 else ring.zero() for i in range(n)))


@dataclass(frozen=True)
class Matrix:
    """A dense rows x cols matrix over a single ring."""

    ring: object
    rows: int
    cols: int
    entries: tuple  # row-major tuple of Elem

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError("entry count does not match dimensions")
        object.__setattr__(self, "entries", _as_elems(self.ring, self.entries))

    @staticmethod
    def from_rows(ring, rows):
        rows = [list(r) for r in rows]
        if not rows:
            raise ShapeError("matrix needs at least one row")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise ShapeError("ragged rows")
        return Matrix(ring, len(rows), w, tuple(x for r in rows for x in r))

    def at(self, i, j):
        """Entry in row i, column j (1-based)."""
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i):
        base = (i - 1) * self.cols
        return RowVector(self.ring, self.entries[base : base + self.cols])

    def col(self, j):
        return tuple(self.entries[i * self.cols + (j - 1)] for i in range(self.rows))

    def transpose(self):
        ent = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return Matrix(self.ring, self.cols, self.rows, ent)

    def __add__(self, other):
        self._check(other, same_shape=True)
        return Matrix(
            self.ring, self.rows, self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        self._check(other, same_shape=True)
        return Matrix(
            self.ring, self.rows, self.cols,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.ring.zero()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i * self.cols + k] * other.entries[k * other.cols + j]
                out.append(acc)
        return Matrix(self.ring, self.rows, other.cols, tuple(out))

    def _check(self, other, same_shape=False):
        if not isinstance(other, Matrix):
            raise TypeError("Matrix expected")
        if other.ring != self.ring:
            raise RingMismatchError("mixed rings in matrix operation")
        if same_shape and (other.rows, other.cols) != (self.rows, self.cols):
            raise ShapeError("shape mismatch")

    def is_identity(self):
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.entries[i * self.cols + j]
                if i == j and not e.is_one():
                    return False
                if i != j and not e.is_zero():
                    return False
        return True


def identity(ring, n):
    ent = tuple(
        ring.one() if i == j else ring.zero() for i in range(n) for j in range(n)
    )
    return Matrix(ring, n, n, ent)


def elementary(ring, n, i, j, a):
    """Id + a*e_ij with 1-based indices i != j."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ShapeError(f"bad elementary position ({i},{j}) for n={n}")
    a = ring.elem(a)
    ent = []
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            if r == c:
                ent.append(ring.one())
            elif (r, c) == (i, j):
                ent.append(a)
            else:
                ent.append(ring.zero())
    return Matrix(ring, n, n, tuple(ent))


def mat_mul(a, b):
    return a @ b


def row_act(v, m):
    """v * M for a row vector v (right action)."""
    if not isinstance(v, RowVector):
        raise TypeError("RowVector expected")
    if v.ring != m.ring:
        raise RingMismatchError("mixed rings in row action")
    if len(v) != m.rows:
        raise ShapeError(f"row length {len(v)} != {m.rows}")
    out = []
    for j in range(m.cols):
        acc = v.ring.zero()
        for k in range(m.rows):
            acc = acc + v.entries[k] * m.entries[k * m.cols + j]
        out.append(acc)
    return RowVector(v.ring, tuple(out))


def mat_vec(m, col):
    """M * c for a column given as a tuple/RowVector of entries."""
    entries = col.entries if isinstance(col, RowVector) else tuple(m.ring.elem(c) for c in col)
    if len(entries) != m.cols:
        raise ShapeError(f"column length {len(entries)} != {m.cols}")
    out = []
    for i in range(m.rows):
        acc = m.ring.zero()
        for k in range(m.cols):
            acc = acc + m.entries[i * m.cols + k] * entries[k]
        out.append(acc)
    return RowVector(m.ring, tuple(out))


def det(m, size_cap=6):
    """Laplace-expansion determinant, capped at size_cap (default 6)."""
    if m.rows != m.cols:
        raise ShapeError("determinant of a non-square matrix")
    if m.rows > size_cap:
        raise SizeGuardError(f"determinant capped at {size_cap}x{size_cap}")
    n = m.rows
    grid = [[m.entries[i * n + j] for j in range(n)] for i in range(n)]

    def expand(rows, cols):
        if len(rows) == 1:
            return grid[rows[0]][cols[0]]
        acc = m.ring.zero()
        r = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            minor = expand(rest, cols[:idx] + cols[idx + 1 :])
            term = grid[r][c] * minor
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    return expand(tuple(range(n)), tuple(range(n)))


# -- JSON wire format ---------------------------------------------------------

def matrix_to_json(m):
    from .rings import elem_to_json

    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [elem_to_json(e) for e in m.entries],
    }


def matrix_from_json(ring, d):
    from .rings import elem_from_json

    if not isinstance(d, dict) or "rows" not in d or "cols" not in d or "entries" not in d:
        raise ValueError("matrix must be an object with rows/cols/entries")
    rows, cols = int(d["rows"]), int(d["cols"])
    entries = tuple(elem_from_json(ring, e) for e in d["entries"])
    return Matrix(ring, rows, cols, entries)


def row_to_json(v):
    from .rings import elem_to_json

    return [elem_to_json(e) for e in v.entries]


def row_from_json(ring, d):
    from .rings import elem_from_json

    if not isinstance(d, list):
        raise ValueError("row must be an array")
    return RowVector(ring, tuple(elem_from_json(ring, e) for e in d))
