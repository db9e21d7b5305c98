"""Dense linear algebra over GF(2) on bit-packed rows.

Vectors and matrices pack their bits into Python ints: bit ``i`` of the int
is coordinate ``i`` (0-based), so a row operation is a single XOR and a dot
product is a popcount. Gaussian elimination always picks the lowest-index
pivot (leftmost column, topmost row), so every result is deterministic.

Coordinates are 0-based everywhere in this module; 1-based qubit labels
exist only at I/O boundaries.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class BitVector:
    """Fixed-length GF(2) vector packed into a single int."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0) -> None:
        if n < 0:
            raise ValueError("length must be nonnegative")
        if bits < 0 or bits >> n:
            raise ValueError(f"bits 0b{bits:b} out of range for length {n}")
        self.n = n
        self.bits = bits

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n, 0)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> BitVector:
        bits = 0
        for i in support:
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def from_string(cls, s: str) -> BitVector:
        """Parse "1010101" with the leftmost character as coordinate 0."""
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        return cls(len(s), bits)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits ^ other.bits)

    def dot(self, other: BitVector) -> int:
        """GF(2) inner product (overlap parity)."""
        if self.n != other.n:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> list[int]:
        """Indices of nonzero coordinates, ascending, 0-based."""
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVector)
            and self.n == other.n
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"BitVector({self.n}, 0b{self.bits:0{max(self.n, 1)}b})"


class BitMatrix:
    """Dense GF(2) matrix stored as one packed int per row."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[int]) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("shape must be nonnegative")
        if len(data) != rows:
            raise ValueError("row count does not match data")
        for r in data:
            if r < 0 or r >> cols:
                raise ValueError("row bits out of range")
        self.rows = rows
        self.cols = cols
        self.data = list(data)

    @classmethod
    def from_rows(cls, cols: int, rows: Iterable[int | BitVector]) -> BitMatrix:
        data = [r.bits if isinstance(r, BitVector) else r for r in rows]
        return cls(len(data), cols, data)

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> BitMatrix:
        vecs = [BitVector.from_string(s) for s in strings]
        cols = vecs[0].n if vecs else 0
        return cls.from_rows(cols, vecs)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, [0] * rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def row_vectors(self) -> list[BitVector]:
        return [BitVector(self.cols, r) for r in self.data]

    def to_strings(self) -> list[str]:
        return [self.row(i).to01() for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self.data)))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def vstack(*mats: BitMatrix) -> BitMatrix:
    """Concatenate matrices vertically."""
    if not mats:
        raise ValueError("need at least one matrix")
    cols = mats[0].cols
    data: list[int] = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch")
        data.extend(m.data)
    return BitMatrix(len(data), cols, data)


def rank(M: BitMatrix) -> int:
    """GF(2) row rank by Gaussian elimination."""
    rows = [r for r in M.data if r]
    r = 0
    for col in range(M.cols):
        mask = 1 << col
        pivot = None
        for i in range(r, len(rows)):
            if rows[i] & mask:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        r += 1
        if r == len(rows):
            break
    return r


def mat_mul_t(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    """Return A @ B^T over GF(2). Requires A.cols == B.cols."""
    if A.cols != B.cols:
        raise ValueError(f"dimension mismatch: {A.cols} vs {B.cols}")
    data = []
    for a in A.data:
        row = 0
        for j, b in enumerate(B.data):
            if (a & b).bit_count() & 1:
                row |= 1 << j
        data.append(row)
    return BitMatrix(A.rows, B.rows, data)


def solve(A: BitMatrix, b: BitVector) -> BitVector | None:
    """Solve x^T A = b^T; x selects rows of A.

    Returns some solution when b lies in the row space of A, else None.
    A length mismatch between b and A's columns means b cannot lie in the
    row space, so None is returned rather than raising.
    """
    if b.n != A.cols:
        return None
    ncols = A.cols
    low_mask = (1 << ncols) - 1
    # Augment each row with a tracking bit recording which original rows
    # were combined into it; keep pivot rows fully reduced.
    pivots: list[tuple[int, int]] = []  # (pivot column, augmented row)
    for i in range(A.rows):
        cur = A.data[i] | (1 << (ncols + i))
        for col, prow in pivots:
            if (cur >> col) & 1:
                cur ^= prow
        low = cur & low_mask
        if low:
            col = (low & -low).bit_length() - 1
            mask = 1 << col
            pivots = [(c, p ^ cur if p & mask else p) for c, p in pivots]
            pivots.append((col, cur))
    acc = b.bits
    track = 0
    for col, prow in pivots:
        if (acc >> col) & 1:
            acc ^= prow & low_mask
            track ^= prow >> ncols
    if acc:
        return None
    return BitVector(A.rows, track)


def nullspace(A: BitMatrix) -> BitMatrix:
    """Basis of {v : A v^T = 0}, one row per free column, ascending."""
    # Reduced row echelon form.
    rows = [r for r in A.data if r]
    pivots: list[int] = []
    r = 0
    for col in range(A.cols):
        mask = 1 << col
        pivot = None
        for i in range(r, len(rows)):
            if rows[i] & mask:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            if (rows[i] >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(len(basis), A.cols, basis)
