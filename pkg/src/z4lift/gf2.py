"""Bit-packed linear algebra over GF(2) and binary-code predicates.

Rows are Python ints used as bitsets: bit ``j`` of a row is the entry in
column ``j`` (little-endian within the int).  At the lengths this package
targets (n <= 48) a whole row fits in one machine word, so XOR and
popcount do all the work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, NotDoublyEven, NotSelfDual


@dataclass(frozen=True)
class BitMatrix:
    """Dense binary matrix; ``rows[i]`` holds row i as a bitset over ``cols`` columns."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        if self.cols < 0:
            raise ValueError("cols must be >= 0")
        mask = (1 << self.cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.rows]

    @classmethod
    def from_lists(cls, rows: list[list[int]]) -> "BitMatrix":
        cols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            packed.append(sum((bit & 1) << j for j, bit in enumerate(row)))
        return cls(tuple(packed), cols)


def identity(m: int) -> BitMatrix:
    return BitMatrix(tuple(1 << i for i in range(m)), m)


def tilde_identity(m: int) -> BitMatrix:
    """The m x m block with all-ones first row and I_{m-1} in the lower right.

    Invertible over GF(2); its first column is the first standard basis
    vector.  Used as the right block of the standard generator form.
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    rows = [(1 << m) - 1] + [1 << i for i in range(1, m)]
    return BitMatrix(tuple(rows), m)


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row echelon form over GF(2).

    Returns the reduced matrix (same shape, zero rows at the bottom) and
    the strictly increasing tuple of pivot columns.  Row space is
    preserved.
    """
    work = list(m.rows)
    pivots = []
    r = 0
    for c in range(m.cols):
        bit = 1 << c
        pivot = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
    return BitMatrix(tuple(work), m.cols), tuple(pivots)


def rank(m: BitMatrix) -> int:
    return len(rref(m)[1])


def row_space_contains(m: BitMatrix, vec: int) -> bool:
    """Decide membership of a bit-packed vector in the row space of m."""
    reduced, pivots = rref(m)
    residual = vec
    for i, c in enumerate(pivots):
        if (residual >> c) & 1:
            residual ^= reduced.rows[i]
    return residual == 0


def row_spaces_equal(a: BitMatrix, b: BitMatrix) -> bool:
    if a.cols != b.cols:
        return False
    ra, pa = rref(a)
    rb, pb = rref(b)
    la = [r for r in ra.rows if r]
    lb = [r for r in rb.rows if r]
    return pa == pb and la == lb


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.nrows:
        raise ValueError("shape mismatch")
    out = []
    for r in a.rows:
        acc = 0
        x = r
        while x:
            i = (x & -x).bit_length() - 1
            acc ^= b.rows[i]
            x &= x - 1
        out.append(acc)
    return BitMatrix(tuple(out), b.cols)


def hstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    rows = tuple(ra | (rb << a.cols) for ra, rb in zip(a.rows, b.rows))
    return BitMatrix(rows, a.cols + b.cols)


@dataclass(frozen=True)
class BinaryCode:
    """Binary linear code given by a full-rank generator matrix (k x n)."""

    n: int
    k: int
    generator: BitMatrix

    def __post_init__(self):
        if not (0 <= self.k <= self.n):
            raise ValueError("need 0 <= k <= n")
        if self.generator.nrows != self.k or self.generator.cols != self.n:
            raise ValueError("generator shape disagrees with (n, k)")
        if rank(self.generator) != self.k:
            raise ValueError("generator rows are linearly dependent")

    @classmethod
    def from_rows(cls, n: int, rows: list[int]) -> "BinaryCode":
        return cls(n, len(rows), BitMatrix(tuple(rows), n))


def is_self_dual_binary(b: BinaryCode) -> bool:
    """True iff k = n/2 and the generator is self-orthogonal (G Gt = 0)."""
    if 2 * b.k != b.n:
        return False
    rows = b.generator.rows
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(b.k)
        for j in range(i, b.k)
    )


def is_doubly_even(b: BinaryCode) -> bool:
    """True iff every codeword weight is 0 mod 4.

    Generator criterion: all generator weights are 0 mod 4 and all pairwise
    inner products are even.  Equivalent to the all-codeword statement since
    wt(x+y) = wt(x) + wt(y) - 2 (x.y overlap).
    """
    rows = b.generator.rows
    if any(r.bit_count() % 4 for r in rows):
        return False
    return all(
        (rows[i] & rows[j]).bit_count() % 2 == 0
        for i in range(b.k)
        for j in range(i + 1, b.k)
    )


def contains_all_ones(b: BinaryCode) -> bool:
    return row_space_contains(b.generator, (1 << b.n) - 1)


def apply_permutation(b: BinaryCode, perm: tuple[int, ...]) -> BinaryCode:
    """Reorder coordinates: output column j carries input column perm[j]."""
    if sorted(perm) != list(range(b.n)):
        raise ValueError("not a permutation of the coordinates")
    rows = tuple(
        sum(((r >> perm[j]) & 1) << j for j in range(b.n)) for r in b.generator.rows
    )
    return BinaryCode(b.n, b.k, BitMatrix(rows, b.n))


def standard_form_g1(b: BinaryCode) -> tuple[tuple[int, ...], BitMatrix]:
    """Permute coordinates so the generator becomes (A1 | tilde_identity).

    Returns ``(perm, a1)`` where ``perm[j]`` is the input coordinate sitting
    at output position j and ``a1`` is the left block; the first row of
    ``a1`` is all-ones.  Works by finding an information set inside the
    right half (greedy left-to-right scan, swapping in the leftmost usable
    left-half column on failure), reducing to (A1' | I) and replacing the
    first row by the sum of all rows, which is the all-ones codeword.

    Raises NotSelfDual / NotDoublyEven when the preconditions fail.
    """
    if not is_self_dual_binary(b):
        raise NotSelfDual("standard form requires a self-dual code")
    if not is_doubly_even(b):
        raise NotDoublyEven("standard form requires a doubly even code")
    m = b.n // 2
    perm = list(range(b.n))
    work = list(b.generator.rows)

    def col_swap(c1: int, c2: int) -> None:
        for idx, row in enumerate(work):
            b1 = (row >> c1) & 1
            b2 = (row >> c2) & 1
            if b1 != b2:
                work[idx] = row ^ (1 << c1) ^ (1 << c2)
        perm[c1], perm[c2] = perm[c2], perm[c1]

    pivot_row_of = {}
    used_rows: set[int] = set()
    for c in range(m, b.n):
        bit = 1 << c
        pivot = next((i for i in range(m) if i not in used_rows and work[i] & bit), None)
        if pivot is None:
            # No pivot in this right-half column: swap in the leftmost
            # left-half column where some unused row has a one.  One always
            # exists (the unused rows are independent and already zero on
            # the processed columns).
            swap_col = next(
                c2
                for c2 in range(m)
                if any(work[i] & (1 << c2) for i in range(m) if i not in used_rows)
            )
            col_swap(c, swap_col)
            pivot = next(i for i in range(m) if i not in used_rows and work[i] & bit)
        for i in range(m):
            if i != pivot and work[i] & bit:
                work[i] ^= work[pivot]
        used_rows.add(pivot)
        pivot_row_of[c] = pivot

    # Reorder rows so the right block is exactly I_m, then fold in the
    # tilde block: row 0 becomes the sum of all rows (the all-ones word).
    ordered = [work[pivot_row_of[m + i]] for i in range(m)]
    total = 0
    for r in ordered:
        total ^= r
    ordered[0] = total

    left_mask = (1 << m) - 1
    a1 = BitMatrix(tuple(r & left_mask for r in ordered), m)
    assert a1.rows[0] == left_mask, "first row of A1 must be all-ones"
    return tuple(perm), a1


def g1_matrix(a1: BitMatrix) -> BitMatrix:
    """Reassemble the full generator (A1 | tilde_identity) from its left block."""
    return hstack(a1, tilde_identity(a1.cols))


def weight_distribution(b: BinaryCode, cap: int = 1 << 24) -> dict[int, int]:
    """Exact Hamming weight distribution by full codeword enumeration.

    Raises BudgetExceeded when 2**k > cap.
    """
    if 1 << b.k > cap:
        raise BudgetExceeded(f"2^{b.k} codewords exceed cap {cap}")
    from . import _kernels

    return _kernels.hamming_weight_distribution(list(b.generator.rows), b.k)
