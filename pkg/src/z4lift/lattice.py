"""Construction A4 lattices, exact LLL, and exact shortest-vector enumeration.

Everything on the certifying path runs in exact arithmetic: the basis is
kept in doubled coordinates (integer matrix D with lattice = (1/2) row
span), LLL is the all-integer variant carrying the Gram determinants d_i
and the scaled Gram-Schmidt coefficients lambda_ij = d_{j+1} mu_ij, and
the Schnorr-Euchner enumeration compares exact rationals built from the
same data.  Floating point appears nowhere here; the fast screening
kernels live in ``_kernels`` and their findings are always integer-verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import z4
from .errors import InvalidLength, NotTypeII, UnsupportedLength
from .z4 import Z4Code


@dataclass(frozen=True)
class LatticeBasis:
    """Basis in doubled coordinates: the lattice is (1/2) x (row span of D)."""

    n: int
    doubled: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.doubled) != self.n or any(len(r) != self.n for r in self.doubled):
            raise ValueError("doubled basis must be square n x n")


@dataclass(frozen=True)
class GramMatrix:
    """Quadrupled Gram matrix D Dt; the true Gram matrix is quadrupled/4."""

    quadrupled: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SvpResult:
    min_norm: Fraction | None  # true norm (quadrupled/4); None if nothing <= bound
    count: int | None  # vectors at the minimum, +-pairs counted as 2
    witness: tuple[int, ...] | None  # one minimal vector, doubled coordinates


def _idot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def construction_a4(c: Z4Code) -> LatticeBasis:
    """Basis of A4(c) = (1/2){x in Z^n : x mod 4 in c}.

    The standard form supplies a triangular system: lifted unit-pivot rows,
    lifted order-2 rows, and 4 e_j on the remaining coordinates, which has
    the right covolume 4^n / |c| by the pivot block structure.  For
    self-dual codes this makes the true Gram determinant 1 without further
    computation; for Type II codes the diagonal is checked even.
    """
    sf = z4.standard_form_data(c)
    rows: list[tuple[int, ...]] = []
    for v in sf.unit_rows + sf.two_rows:
        rows.append(v.entries())
    covered = set(sf.unit_pivots) | set(sf.two_pivots)
    for j in range(c.n):
        if j not in covered:
            rows.append(tuple(4 if t == j else 0 for t in range(c.n)))
    basis = LatticeBasis(c.n, tuple(rows))
    if z4.is_type_ii(c):
        # Even lattice: every doubled row norm is 0 mod 8.
        assert all(_idot(r, r) % 8 == 0 for r in basis.doubled)
    return basis


def gram(b: LatticeBasis) -> GramMatrix:
    rows = b.doubled
    q = tuple(tuple(_idot(r, s) for s in rows) for r in rows)
    assert all(q[i][j] == q[j][i] for i in range(b.n) for j in range(b.n))
    return GramMatrix(q)


def gram_determinant(b: LatticeBasis) -> int:
    """Exact determinant of the quadrupled Gram matrix."""
    _, d = _integral_gs([list(r) for r in b.doubled])
    return d[b.n]


def _integral_gs(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """All-integer Gram-Schmidt data (lambda, d) for integer basis rows.

    d[i] is the Gram determinant of the first i rows (d[0] = 1) and
    lambda[i][j] = d[j+1] mu_ij for j < i.  Every interior division is
    exact.  Raises on rank deficiency.
    """
    n = len(rows)
    lam = [[0] * n for _ in range(n)]
    d = [1] * (n + 1)
    for i in range(n):
        for j in range(i + 1):
            u = _idot(rows[i], rows[j])
            for k in range(j):
                u = (d[k + 1] * u - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise ValueError("basis rows are linearly dependent")
                d[i + 1] = u
    return lam, d


def lll(b: LatticeBasis, delta: Fraction = Fraction(99, 100)) -> LatticeBasis:
    """Exact integer LLL (de Weger variant) at the given delta.

    The output generates the same lattice (all row operations are
    unimodular) and satisfies size reduction |mu_ij| <= 1/2 and the Lovasz
    condition at delta, both checkable exactly from the integer data.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    p, q = delta.numerator, delta.denominator
    rows = [list(r) for r in b.doubled]
    n = len(rows)
    if n <= 1:
        return b
    lam = [[0] * n for _ in range(n)]
    d = [1] * (n + 1)

    def gs_row(i: int) -> None:
        for j in range(i + 1):
            u = _idot(rows[i], rows[j])
            for k in range(j):
                u = (d[k + 1] * u - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise ValueError("basis rows are linearly dependent")
                d[i + 1] = u

    def size_reduce(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            r = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            rk, rl = rows[k], rows[l]
            for t in range(n):
                rk[t] -= r * rl[t]
            for i in range(l):
                lam[k][i] -= r * lam[l][i]
            lam[k][l] -= r * d[l + 1]

    gs_row(0)
    k = 1
    kmax = 0
    while k < n:
        if k > kmax:
            kmax = k
            gs_row(k)
        size_reduce(k, k - 1)
        lk = lam[k][k - 1]
        if q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lk * lk:
            rows[k - 1], rows[k] = rows[k], rows[k - 1]
            for j in range(k - 1):
                lam[k - 1][j], lam[k][j] = lam[k][j], lam[k - 1][j]
            new_dk = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
            for i in range(k + 1, kmax + 1):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
                lam[i][k - 1] = (new_dk * t + lk * lam[i][k]) // d[k + 1]
            d[k] = new_dk
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return LatticeBasis(b.n, tuple(tuple(r) for r in rows))


def is_lll_reduced(b: LatticeBasis, delta: Fraction = Fraction(99, 100)) -> bool:
    """Exact check of size reduction and the Lovasz condition."""
    delta = Fraction(delta)
    p, q = delta.numerator, delta.denominator
    lam, d = _integral_gs([list(r) for r in b.doubled])
    n = b.n
    for i in range(n):
        for j in range(i):
            if 2 * abs(lam[i][j]) > d[j + 1]:
                return False
    for k in range(1, n):
        lk = lam[k][k - 1]
        if q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lk * lk:
            return False
    return True


def _enumerate(rows, bound_q: int, keep_ties: bool):
    """Exact Schnorr-Euchner enumeration below a quadrupled-norm bound.

    Returns (best_norm, counts_at_best, witness) over nonzero vectors with
    squared doubled norm <= bound_q, or (None, 0, None).  All pruning
    decisions compare exact rationals assembled from the integral GS data:
    the level-k term is (x d[k+1] + S)^2 / (d[k+1] d[k]) with S the integer
    sum of lambda[j][k] x_j over assigned j > k.  With ``keep_ties`` the
    enumeration visits every vector attaining the final minimum, so the
    returned count is exhaustive; otherwise the bound shrinks strictly.
    """
    n = len(rows)
    if bound_q < 1:
        return None, 0, None
    lam, d = _integral_gs(rows)

    x = [0] * n
    s_level = [0] * n
    base = [0] * n
    first_dir = [1] * n
    trial = [0] * n
    dead_plus = [False] * n
    dead_minus = [False] * n
    rho = [Fraction(0)] * (n + 1)

    best: int | None = None
    count = 0
    witness: tuple[int, ...] | None = None
    bound: Fraction | int = bound_q

    def descend(k: int) -> None:
        s = 0
        for j in range(k + 1, n):
            if x[j]:
                s += lam[j][k] * x[j]
        s_level[k] = s
        dd = d[k + 1]
        base[k] = (-2 * s + dd) // (2 * dd)
        first_dir[k] = 1 if s + base[k] * dd <= 0 else -1
        trial[k] = 0
        topzero = all(x[j] == 0 for j in range(k + 1, n))
        dead_minus[k] = topzero
        dead_plus[k] = False

    k = n - 1
    descend(k)
    while True:
        advanced = False
        while True:
            t = trial[k]
            trial[k] += 1
            mag = (t + 1) // 2
            sign = first_dir[k] if t % 2 == 1 else -first_dir[k]
            off = 0 if t == 0 else mag * sign
            if t > 0 and ((sign > 0 and dead_plus[k]) or (sign < 0 and dead_minus[k])):
                if dead_plus[k] and dead_minus[k]:
                    break
                continue
            xv = base[k] + off
            dd = d[k + 1]
            num = xv * dd + s_level[k]
            term = Fraction(num * num, dd * d[k])
            total = rho[k + 1] + term
            if total > bound:
                if t == 0:
                    dead_plus[k] = dead_minus[k] = True
                elif sign > 0:
                    dead_plus[k] = True
                else:
                    dead_minus[k] = True
                if dead_plus[k] and dead_minus[k]:
                    break
                continue
            x[k] = xv
            rho[k] = total
            advanced = True
            break
        if not advanced:
            k += 1
            if k >= n:
                break
            continue
        if k == 0:
            vec = [0] * len(rows[0])
            for j in range(n):
                if x[j]:
                    rj = rows[j]
                    for t2 in range(len(vec)):
                        vec[t2] += x[j] * rj[t2]
            nq = _idot(vec, vec)
            if nq != 0:
                assert rho[0] == nq, "partial norms must match the recomputed norm"
                if best is None or nq < best:
                    best = nq
                    count = 2
                    witness = tuple(vec)
                    bound = best if keep_ties else best - 1
                elif nq == best:
                    count += 2
        else:
            k -= 1
            descend(k)
    return best, count, witness


def shortest_vectors(b: LatticeBasis, bound, count: bool = False) -> SvpResult:
    """Exact minimum norm (and optionally the minimal-vector count) <= bound.

    ``bound`` is a true norm (quadrupled/4 scale).  The basis is LLL
    reduced internally first.  The reported witness always recomputes to
    the reported minimum; when nothing lies below the bound the result
    fields are None.
    """
    bound_q = int(Fraction(bound) * 4)
    reduced = lll(b)
    rows = [list(r) for r in reduced.doubled]
    best, found_count, witness = _enumerate(rows, bound_q, keep_ties=count)
    if best is None:
        return SvpResult(None, None, None)
    return SvpResult(Fraction(best, 4), found_count if count else None, witness)


def certify_extremal(c: Z4Code) -> bool:
    """Exact extremality certificate through the A4 lattice minimum norm.

    For lengths below 48 a Type II code is extremal iff the lattice
    minimum equals euclidean_bound(n)/4: the lattice is even, 2 e_i always
    realizes norm 4, and codewords of Euclidean weight below the bound are
    exactly the vectors of smaller norm.
    """
    if c.n >= 48:
        raise UnsupportedLength("2 e_i vectors mask d_E beyond 23; n >= 48 unsupported")
    if c.n % 8 != 0:
        raise InvalidLength("Type II codes need length 0 mod 8")
    if not z4.is_type_ii(c):
        raise NotTypeII("certificate defined for Type II codes only")
    target = z4.euclidean_bound(c.n) // 4
    basis = construction_a4(c)
    if target == 2:
        res = shortest_vectors(basis, 2)
        return res.min_norm == 2
    res = shortest_vectors(basis, target - 2)
    return res.min_norm is None


def min_norm(b: LatticeBasis, count: bool = False) -> SvpResult:
    """Exact lattice minimum, bootstrapped from the shortest basis row."""
    reduced = lll(b)
    start = min(_idot(r, r) for r in reduced.doubled)
    res = shortest_vectors(reduced, Fraction(start, 4), count=count)
    assert res.min_norm is not None
    return res
