"""Z4-code arithmetic: weights, duality predicates, residue and torsion codes.

Vectors over Z4 are stored as two bit planes (entry = lo + 2*hi), so
addition is three bitwise ops and the Euclidean weight is two popcounts:
odd entries contribute 1, entries equal to 2 contribute 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels, gf2
from .errors import BudgetExceeded, InvalidLength, LengthMismatch

DEFAULT_CAP = 1 << 24


@dataclass(frozen=True)
class Z4Vector:
    """Vector over Z4, packed 2 bits per coordinate (bit planes lo, hi)."""

    n: int
    lo: int
    hi: int

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.lo & ~mask or self.hi & ~mask or self.lo < 0 or self.hi < 0:
            raise ValueError("plane bits outside the coordinate range")

    @classmethod
    def from_entries(cls, entries) -> "Z4Vector":
        lo = hi = 0
        n = 0
        for e in entries:
            if not 0 <= e <= 3:
                raise ValueError("entries must lie in {0,1,2,3}")
            lo |= (e & 1) << n
            hi |= (e >> 1) << n
            n += 1
        return cls(n, lo, hi)

    def entry(self, j: int) -> int:
        return ((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1)

    def entries(self) -> tuple[int, ...]:
        return tuple(self.entry(j) for j in range(self.n))

    def add(self, other: "Z4Vector") -> "Z4Vector":
        if self.n != other.n:
            raise LengthMismatch("vector lengths differ")
        carry = self.lo & other.lo
        return Z4Vector(self.n, self.lo ^ other.lo, self.hi ^ other.hi ^ carry)

    def scale(self, s: int) -> "Z4Vector":
        s &= 3
        if s == 0:
            return Z4Vector(self.n, 0, 0)
        if s == 1:
            return self
        if s == 2:
            return Z4Vector(self.n, 0, self.lo)
        return Z4Vector(self.n, self.lo, self.hi ^ self.lo)

    def is_zero(self) -> bool:
        return self.lo == 0 and self.hi == 0


def euclidean_weight(x: Z4Vector) -> int:
    """n1(x) + 4*n2(x) + n3(x)."""
    return x.lo.bit_count() + 4 * (x.hi & ~x.lo).bit_count()


def z4_inner_product(x: Z4Vector, y: Z4Vector) -> int:
    """Standard inner product mod 4."""
    if x.n != y.n:
        raise LengthMismatch("vector lengths differ")
    s = (x.lo & y.lo).bit_count()
    s += 2 * ((x.lo & y.hi).bit_count() + (x.hi & y.lo).bit_count())
    return s % 4


@dataclass(frozen=True)
class Z4Code:
    """Z4-submodule of Z4^n given by generator rows (need not be independent)."""

    n: int
    rows: tuple[Z4Vector, ...]

    def __post_init__(self):
        for r in self.rows:
            if r.n != self.n:
                raise LengthMismatch("generator row length differs from n")

    @classmethod
    def from_entry_rows(cls, n: int, rows) -> "Z4Code":
        vecs = tuple(Z4Vector.from_entries(r) for r in rows)
        for v in vecs:
            if v.n != n:
                raise LengthMismatch("generator row length differs from n")
        return cls(n, vecs)

    @property
    def k(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class StandardFormData:
    """Outcome of Z4 row reduction: unit-pivot rows first, then order-2 rows."""

    n: int
    unit_rows: tuple[Z4Vector, ...]
    two_rows: tuple[Z4Vector, ...]
    unit_pivots: tuple[int, ...]
    two_pivots: tuple[int, ...]

    @property
    def k1(self) -> int:
        return len(self.unit_rows)

    @property
    def k2(self) -> int:
        return len(self.two_rows)

    @property
    def size(self) -> int:
        return (1 << (2 * self.k1)) << self.k2


@lru_cache(maxsize=256)
def standard_form_data(c: Z4Code) -> StandardFormData:
    """Row-reduce over Z4, pivoting on units first and twos second.

    The pivot discipline makes the 4^k1 2^k2 type well-defined: after the
    unit pass every unused row is even (even entries stay even under row
    subtraction), so the second pass is binary elimination on the doubled
    halves.
    """
    rows = [(v.lo, v.hi) for v in c.rows]
    used: list[int] = []
    unit_pivots: list[int] = []

    def addrow(a, b):
        carry = a[0] & b[0]
        return (a[0] ^ b[0], a[1] ^ b[1] ^ carry)

    def smul(s, r):
        if s == 0:
            return (0, 0)
        if s == 1:
            return r
        if s == 2:
            return (0, r[0])
        return (r[0], r[1] ^ r[0])

    for col in range(c.n):
        bit = 1 << col
        pivot = next(
            (i for i in range(len(rows)) if i not in used and rows[i][0] & bit), None
        )
        if pivot is None:
            continue
        row = rows[pivot]
        if row[1] & bit:  # entry 3: normalize with the unit 3
            row = smul(3, row)
            rows[pivot] = row
        for i in range(len(rows)):
            if i == pivot:
                continue
            e = ((rows[i][0] >> col) & 1) | (((rows[i][1] >> col) & 1) << 1)
            if e:
                rows[i] = addrow(rows[i], smul(4 - e, row))
        used.append(pivot)
        unit_pivots.append(col)

    remaining = [i for i in range(len(rows)) if i not in used]
    assert all(rows[i][0] == 0 for i in remaining), "unused rows must be even after the unit pass"
    two_used: list[int] = []
    two_pivots: list[int] = []
    for col in range(c.n):
        bit = 1 << col
        pivot = next((i for i in remaining if i not in two_used and rows[i][1] & bit), None)
        if pivot is None:
            continue
        for i in remaining:
            if i != pivot and rows[i][1] & bit:
                rows[i] = (0, rows[i][1] ^ rows[pivot][1])
        # Reduce unit rows to {0,1} at this pivot column as well.
        for i in used:
            if rows[i][1] & bit:
                rows[i] = addrow(rows[i], smul(1, rows[pivot]))
        two_used.append(pivot)
        two_pivots.append(col)

    unit_rows = tuple(Z4Vector(c.n, *rows[i]) for i in used)
    two_rows = tuple(Z4Vector(c.n, *rows[i]) for i in two_used)
    return StandardFormData(c.n, unit_rows, two_rows, tuple(unit_pivots), tuple(two_pivots))


def z4_standard_form(c: Z4Code) -> tuple[Z4Code, int, int]:
    """Equivalent generating set in standard form plus the type counts (k1, k2)."""
    sf = standard_form_data(c)
    return Z4Code(c.n, sf.unit_rows + sf.two_rows), sf.k1, sf.k2


def residue_code(c: Z4Code) -> gf2.BinaryCode:
    """The binary code spanned by the generator rows reduced mod 2."""
    mat = gf2.BitMatrix(tuple(v.lo for v in c.rows), c.n)
    reduced, pivots = gf2.rref(mat)
    basis = reduced.rows[: len(pivots)]
    return gf2.BinaryCode(c.n, len(pivots), gf2.BitMatrix(basis, c.n))


def torsion_code(c: Z4Code) -> gf2.BinaryCode:
    """The binary code {v : 2v in C}, read off the standard form."""
    sf = standard_form_data(c)
    rows = [v.lo for v in sf.unit_rows] + [v.hi for v in sf.two_rows]
    mat = gf2.BitMatrix(tuple(rows), c.n)
    reduced, pivots = gf2.rref(mat)
    return gf2.BinaryCode(c.n, len(pivots), gf2.BitMatrix(reduced.rows[: len(pivots)], c.n))


def is_self_dual_z4(c: Z4Code) -> bool:
    """True iff G Gt = 0 mod 4 and 2*k1 + k2 = n."""
    for i in range(len(c.rows)):
        for j in range(i, len(c.rows)):
            if z4_inner_product(c.rows[i], c.rows[j]) != 0:
                return False
    sf = standard_form_data(c)
    return 2 * sf.k1 + sf.k2 == c.n


def is_type_ii(c: Z4Code) -> bool:
    """Self-dual with every generator Euclidean weight divisible by 8.

    The generator criterion suffices: for pairwise orthogonal words,
    Euclidean weights add mod 8.
    """
    if not is_self_dual_z4(c):
        return False
    return all(euclidean_weight(r) % 8 == 0 for r in c.rows)


def min_euclidean_weight_bruteforce(c: Z4Code, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum Euclidean weight by enumerating the whole module."""
    sf = standard_form_data(c)
    if sf.size > cap:
        raise BudgetExceeded(f"{sf.size} codewords exceed cap {cap}; use the lattice route")
    if sf.size == 1:
        raise ValueError("the zero code has no nonzero codeword")
    gen4 = [(v.lo, v.hi) for v in sf.unit_rows]
    gen2 = [(v.lo, v.hi) for v in sf.two_rows]
    return _kernels.z4_min_euclidean_weight(gen4, gen2, c.n)


def euclidean_weight_distribution(c: Z4Code, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Exact Euclidean weight counts over all codewords (zero included)."""
    sf = standard_form_data(c)
    if sf.size > cap:
        raise BudgetExceeded(f"{sf.size} codewords exceed cap {cap}")
    gen4 = [(v.lo, v.hi) for v in sf.unit_rows]
    gen2 = [(v.lo, v.hi) for v in sf.two_rows]
    return _kernels.z4_euclidean_weight_distribution(gen4, gen2, c.n)


def euclidean_bound(n: int) -> int:
    """Upper bound 8*floor(n/24) + 8 on d_E of a Type II code of length n."""
    if n <= 0 or n % 8 != 0:
        raise InvalidLength("Type II codes exist only for lengths 0 mod 8")
    return 8 * (n // 24) + 8


def direct_sum(a: Z4Code, b: Z4Code) -> Z4Code:
    rows = [Z4Vector(a.n + b.n, v.lo, v.hi) for v in a.rows]
    rows += [Z4Vector(a.n + b.n, v.lo << a.n, v.hi << a.n) for v in b.rows]
    return Z4Code(a.n + b.n, tuple(rows))
