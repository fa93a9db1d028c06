"""Type II lifts of binary doubly even self-dual codes.

Given a generator in the standard form (A1 | T) with T the tilde block,
the Z4 matrix (A1 | T + 2*A2) generates a Type II code once the non-free
entries of the (0,1)-matrix A2 are chosen to repair two parities: the
pairwise inner products mod 4 (epsilon data) and the per-row Euclidean
weights mod 8 (mu data).  The entries of A2 above the diagonal in rows
2..m are free; row 1 is pinned to zero.  Candidate assignments of the
free bits are searched for codes whose Construction A4 lattice has no
vector of norm below the extremal target.
"""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import gf2, z4
from .errors import InconsistentSystem, NotDoublyEvenSelfDual
from .gf2 import BinaryCode, BitMatrix
from .z4 import Z4Code, Z4Vector


@dataclass(frozen=True)
class LiftTemplate:
    """Left block A1 of a standard-form generator, with its tilde companion."""

    m: int
    a1: BitMatrix

    def __post_init__(self):
        if self.a1.nrows != self.m or self.a1.cols != self.m:
            raise ValueError("A1 must be m x m")
        if self.a1.rows[0] != (1 << self.m) - 1:
            raise ValueError("first row of A1 must be all-ones")
        code = BinaryCode(2 * self.m, self.m, gf2.g1_matrix(self.a1))
        if not gf2.is_self_dual_binary(code):
            raise ValueError("(A1 | tilde) must generate a self-dual code")
        if not gf2.is_doubly_even(code):
            raise ValueError("(A1 | tilde) must generate a doubly even code")

    @property
    def tilde(self) -> BitMatrix:
        return gf2.tilde_identity(self.m)

    @property
    def binary_code(self) -> BinaryCode:
        return BinaryCode(2 * self.m, self.m, gf2.g1_matrix(self.a1))


def free_bit_count(m: int) -> int:
    return (m - 1) * (m - 2) // 2


@dataclass(frozen=True)
class FreeBits:
    """Assignment of the free above-diagonal entries of A2.

    Positions run row-major over 1-based pairs {(i, j) : 2 <= i < j <= m};
    the hex form reads them most-significant-bit first.
    """

    m: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < 1 << free_bit_count(self.m):
            raise ValueError("free-bit value out of range")

    @property
    def count(self) -> int:
        return free_bit_count(self.m)

    def _pos(self, i0: int, j0: int) -> int:
        # 0-based pair (i0, j0), 1 <= i0 < j0 <= m-1.
        before = sum(self.m - 1 - r for r in range(1, i0))
        return before + (j0 - i0 - 1)

    def get(self, i0: int, j0: int) -> int:
        if not 1 <= i0 < j0 <= self.m - 1:
            raise IndexError("not a free position")
        return (self.value >> (self.count - 1 - self._pos(i0, j0))) & 1

    def flipped_index(self, t: int) -> "FreeBits":
        if not 0 <= t < self.count:
            raise IndexError("bit index out of range")
        return FreeBits(self.m, self.value ^ (1 << (self.count - 1 - t)))

    def flipped(self, i0: int, j0: int) -> "FreeBits":
        return self.flipped_index(self._pos(i0, j0))

    def to_hex(self) -> str:
        digits = max(1, (self.count + 3) // 4)
        return format(self.value, f"0{digits}x")

    @classmethod
    def from_hex(cls, m: int, text: str) -> "FreeBits":
        return cls(m, int(text, 16))

    @classmethod
    def zero(cls, m: int) -> "FreeBits":
        return cls(m, 0)


@dataclass(frozen=True)
class LiftSystem:
    """Parity data forcing the non-free entries of A2.

    ``eps[i]`` packs epsilon_{ij} for j > i as a bitmask; ``mu`` packs the
    per-row weight parities.  Both are computed over the integers from the
    template, so they are exactly the obstructions the solved A2 cancels.
    """

    template: LiftTemplate
    eps: tuple[int, ...]
    mu: int

    @property
    def m(self) -> int:
        return self.template.m


def compute_lift_system(t: LiftTemplate) -> LiftSystem:
    m = t.m
    a_rows = t.a1.rows
    t_rows = t.tilde.rows
    eps = []
    for i in range(m):
        row = 0
        for j in range(i + 1, m):
            s = (a_rows[i] & a_rows[j]).bit_count() + (t_rows[i] & t_rows[j]).bit_count()
            if s % 2:
                raise NotDoublyEvenSelfDual("pairwise inner product is odd")
            row |= ((s % 4) // 2) << j
        eps.append(row)
    mu = 0
    for j in range(m):
        w = a_rows[j].bit_count() + t_rows[j].bit_count()
        if w % 4:
            raise NotDoublyEvenSelfDual("generator weight not divisible by 4")
        mu |= ((w % 8) // 4) << j
    return LiftSystem(t, tuple(eps), mu)


def solve_a2(s: LiftSystem, f: FreeBits) -> BitMatrix:
    """Fill the forced entries of A2 around the given free bits.

    Row 1 is zero.  For 2 <= i < j the free bit sits at (i, j) and the
    pairwise parity fixes (j, i); the diagonal comes from the row-1 pair
    parity combined with the row weight parity; column 1 repairs the row
    sum.  The assembled lift is re-verified, never assumed correct.
    """
    m = s.m
    if f.m != m:
        raise ValueError("free bits sized for a different template")
    rows = [0] * m
    for j in range(1, m):
        eps0j = (s.eps[0] >> j) & 1
        row = (eps0j ^ ((s.mu >> j) & 1)) << j  # diagonal entry
        for i in range(1, j):
            row |= (f.get(i, j) ^ ((s.eps[i] >> j) & 1)) << i
        for l in range(j + 1, m):
            row |= f.get(j, l) << l
        parity = (row.bit_count() + eps0j) % 2
        row |= parity  # column-1 entry fixes the row sum
        rows[j] = row
    a2 = BitMatrix(tuple(rows), m)

    code = assemble_lift(s.template, a2)
    if not z4.is_type_ii(code):
        raise InconsistentSystem("solved A2 failed Type II verification")
    return a2


def assemble_lift(t: LiftTemplate, a2: BitMatrix) -> Z4Code:
    """The Z4 code generated by (A1 | tilde + 2*A2)."""
    m = t.m
    t_rows = t.tilde.rows
    rows = []
    for i in range(m):
        lo = t.a1.rows[i] | (t_rows[i] << m)
        hi = a2.rows[i] << m
        rows.append(Z4Vector(2 * m, lo, hi))
    return Z4Code(2 * m, tuple(rows))


def build_template(b: BinaryCode) -> tuple[LiftTemplate, tuple[int, ...]]:
    """Standard-form template for b plus the coordinate permutation used."""
    perm, a1 = gf2.standard_form_g1(b)
    return LiftTemplate(b.n // 2, a1), perm


def lift(b: BinaryCode, f: FreeBits) -> tuple[Z4Code, tuple[int, ...]]:
    """Type II lift of b for the given free bits.

    Returns the Z4 code and the coordinate permutation chosen by the
    standard-form transform; the residue of the lift equals b permuted by
    it.
    """
    template, perm = build_template(b)
    system = compute_lift_system(template)
    a2 = solve_a2(system, f)
    return assemble_lift(template, a2), perm


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    max_candidates: int = 10_000
    time_limit: float | None = None
    backend: str = "svp"  # "svp" or "enum"
    threads: int = 1
    descent: bool = False
    enum_cap: int = z4.DEFAULT_CAP

    def __post_init__(self):
        if self.backend not in ("svp", "enum"):
            raise ValueError("backend must be 'svp' or 'enum'")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass
class SearchReport:
    outcome: str  # "found" or "exhausted"
    witness: FreeBits | None
    candidates: int
    elapsed: float
    backend: str
    seed: int
    min_norm: int | None = None
    d_e: int | None = None
    restarts: int = 0

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    @property
    def witness_hex(self) -> str | None:
        return self.witness.to_hex() if self.witness else None


def derive_free_bits(m: int, seed: int, index: int) -> FreeBits:
    """Candidate number ``index`` of the seeded uniform stream.

    SHA-256 of "seed:index" keeps the stream platform-stable and lets a
    worker pool address candidates out of order without changing results.
    """
    count = free_bit_count(m)
    nbytes = (count + 7) // 8 or 1
    material = b""
    block = 0
    while len(material) < nbytes:
        material += hashlib.sha256(f"{seed}:{index}:{block}".encode()).digest()
        block += 1
    value = int.from_bytes(material[:nbytes], "big") & ((1 << count) - 1)
    return FreeBits(m, value)


class _Evaluator:
    """Per-candidate evaluation shared by the random and descent searches."""

    def __init__(self, system: LiftSystem, backend: str, enum_cap: int):
        from . import lattice

        self.system = system
        self.backend = backend
        self.enum_cap = enum_cap
        self.n = 2 * system.m
        self.target = z4.euclidean_bound(self.n) // 4
        self._lattice = lattice

    def code_for(self, f: FreeBits) -> Z4Code:
        return assemble_lift(self.system.template, solve_a2(self.system, f))

    def cost(self, f: FreeBits) -> int:
        """Number of screened lattice vectors below the extremal target.

        Zero is a promise, not a proof; certify() gives the exact verdict.
        """
        if self.target == 2:
            return 0
        code = self.code_for(f)
        basis = self._lattice.construction_a4(code)
        count, _ = self._screen(basis, count_all=True)
        return count

    def is_extremal(self, f: FreeBits) -> tuple[bool, int | None, int | None]:
        """Exact verdict: (extremal, min_norm, d_e) for the configured backend."""
        code = self.code_for(f)
        if self.backend == "enum":
            d_e = z4.min_euclidean_weight_bruteforce(code, self.enum_cap)
            return d_e == 4 * self.target, None, d_e
        if self.target > 2:
            basis = self._lattice.construction_a4(code)
            found, _ = self._screen(basis, count_all=False)
            if found:
                return False, None, None  # exact witness below target
        ok = self._lattice.certify_extremal(code)
        return ok, (self.target if ok else None), None

    def _screen(self, basis, count_all: bool):
        from . import _kernels

        bound_q = 4 * (self.target - 2)
        rows = [list(r) for r in basis.doubled]
        return _kernels.screen_short_vectors(rows, bound_q, count_all)


def search_extremal(b: BinaryCode, cfg: SearchConfig) -> SearchReport:
    """Search free-bit assignments whose lift certifies extremal.

    Uniform seeded sampling by default; with ``cfg.descent`` a greedy
    first-improving bit-flip descent on the short-vector count runs from
    each sampled start.  Every evaluated assignment counts against
    ``max_candidates``.  Replaying the same (code, seed, budget) yields
    the identical report apart from timing.
    """
    if b.n not in (8, 16, 24, 32, 40):
        raise ValueError("search supports lengths 8, 16, 24, 32, 40")
    start = time.monotonic()
    template, _perm = build_template(b)
    system = compute_lift_system(template)
    ev = _Evaluator(system, cfg.backend, cfg.enum_cap)

    deadline = start + cfg.time_limit if cfg.time_limit else None

    def out_of_time() -> bool:
        return deadline is not None and time.monotonic() > deadline

    def report(outcome, witness, tried, min_norm=None, d_e=None, restarts=0):
        return SearchReport(
            outcome=outcome,
            witness=witness,
            candidates=tried,
            elapsed=time.monotonic() - start,
            backend=cfg.backend,
            seed=cfg.seed,
            min_norm=min_norm,
            d_e=d_e,
            restarts=restarts,
        )

    if cfg.descent and cfg.backend == "svp" and ev.target > 2:
        return _descent_search(b, cfg, ev, out_of_time, report)

    def evaluate(index: int):
        f = derive_free_bits(template.m, cfg.seed, index)
        ok, min_norm, d_e = ev.is_extremal(f)
        return index, f, ok, min_norm, d_e

    tried = 0
    if cfg.threads == 1:
        for index in range(cfg.max_candidates):
            if out_of_time():
                return report("exhausted", None, tried)
            index, f, ok, mn, de = evaluate(index)
            tried = index + 1
            if ok:
                return report("found", f, tried, mn, de)
        return report("exhausted", None, tried)

    # Chunked pool evaluation; the winner is the smallest successful index,
    # so the report matches a sequential run with the same seed.
    chunk = 4 * cfg.threads
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        base = 0
        while base < cfg.max_candidates:
            if out_of_time():
                return report("exhausted", None, base)
            indices = range(base, min(base + chunk, cfg.max_candidates))
            results = list(pool.map(evaluate, indices))
            successes = [r for r in results if r[2]]
            if successes:
                index, f, _ok, mn, de = min(successes, key=lambda r: r[0])
                return report("found", f, index + 1, mn, de)
            base += len(results)
    return report("exhausted", None, cfg.max_candidates)


def _descent_search(b, cfg, ev, out_of_time, report):
    """Greedy bit-flip descent on the short-vector count, with restarts."""
    m = b.n // 2
    nbits = free_bit_count(m)
    tried = 0
    restarts = 0
    while tried < cfg.max_candidates and not out_of_time():
        f = derive_free_bits(m, cfg.seed, restarts)
        cost = ev.cost(f)
        tried += 1
        while cost > 0 and tried < cfg.max_candidates and not out_of_time():
            improved = False
            for t in range(nbits):  # first improving flip, row-major order
                f2 = f.flipped_index(t)
                c2 = ev.cost(f2)
                tried += 1
                if c2 < cost:
                    f, cost = f2, c2
                    improved = True
                    break
                if tried >= cfg.max_candidates or out_of_time():
                    break
            if not improved:
                break
        if cost == 0:
            ok, min_norm, d_e = ev.is_extremal(f)
            if ok:
                return report("found", f, tried, min_norm, d_e, restarts)
        restarts += 1
    return report("exhausted", None, tried, restarts=restarts)
