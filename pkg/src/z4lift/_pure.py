"""Pure-Python kernels: enumeration and screening hot loops.

Mirror of the compiled extension (``_ext``).  Binary rows are int
bitsets; Z4 vectors are (lo, hi) bit-plane pairs with entry = lo + 2*hi.
The lattice screen uses floating point only to locate candidate short
vectors; every vector it reports has been re-verified with exact integer
arithmetic, and absence is never concluded here (callers escalate to the
exact enumeration in ``lattice``).
"""

from __future__ import annotations

BACKEND = "pure"

_ENUM_NODE_BUDGET = 4_000_000


def hamming_weight_distribution(rows: list[int], k: int) -> dict[int, int]:
    """Weight counts over all 2**k codewords, by Gray-code enumeration."""
    counts: dict[int, int] = {0: 1}
    cur = 0
    for step in range(1, 1 << k):
        cur ^= rows[(step & -step).bit_length() - 1]
        w = cur.bit_count()
        counts[w] = counts.get(w, 0) + 1
    return counts


def z4_min_euclidean_weight(
    gen4: list[tuple[int, int]], gen2: list[tuple[int, int]], stop_at: int = 0
) -> int:
    """Exact minimum Euclidean weight over all nonzero codewords.

    ``gen4``/``gen2`` are the order-4 and order-2 rows of a standard-form
    generating set (so digit tuples enumerate each codeword exactly once).
    ``stop_at`` > 0 allows early return once a weight <= stop_at is seen.
    """
    best = -1
    for _, lo, hi in _iter_nonzero(gen4, gen2):
        w = lo.bit_count() + 4 * (hi & ~lo).bit_count()
        if best < 0 or w < best:
            best = w
            if stop_at and best <= stop_at:
                break
    return best


def z4_euclidean_weight_distribution(
    gen4: list[tuple[int, int]], gen2: list[tuple[int, int]]
) -> dict[int, int]:
    """Euclidean weight counts over the whole module (zero word included)."""
    counts: dict[int, int] = {0: 1}
    for _, lo, hi in _iter_nonzero(gen4, gen2):
        w = lo.bit_count() + 4 * (hi & ~lo).bit_count()
        counts[w] = counts.get(w, 0) + 1
    return counts


def _iter_nonzero(gen4, gen2):
    """Odometer over Z4^k1 x Z2^k2, yielding every nonzero codeword once.

    A digit wrap adds its generator one extra time, completing the cycle
    (4x = 0 for order-4 rows, 2x = 0 for order-2 rows), so the running
    word never needs correction.
    """
    k1, k2 = len(gen4), len(gen2)
    d4 = [0] * k1
    d2 = [0] * k2
    lo = hi = 0
    total = (1 << (2 * k1)) << k2
    for step in range(1, total):
        i = 0
        while i < k1 and d4[i] == 3:
            d4[i] = 0
            glo, ghi = gen4[i]
            carry = lo & glo
            lo ^= glo
            hi ^= ghi ^ carry
            i += 1
        if i < k1:
            d4[i] += 1
            glo, ghi = gen4[i]
            carry = lo & glo
            lo ^= glo
            hi ^= ghi ^ carry
        else:
            j = 0
            while d2[j] == 1:
                d2[j] = 0
                glo, ghi = gen2[j]
                carry = lo & glo
                lo ^= glo
                hi ^= ghi ^ carry
                j += 1
            d2[j] = 1
            glo, ghi = gen2[j]
            carry = lo & glo
            lo ^= glo
            hi ^= ghi ^ carry
        yield step, lo, hi


def _idot(a: list[int], b: list[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _lll_float(rows: list[list[int]], delta: float = 0.99) -> bool:
    """In-place floating-point LLL on integer rows (screening only).

    Row operations use exact integer coefficients, so ``rows`` stays a
    basis of the same lattice whatever the float decisions do.  Returns
    False on numeric breakdown or iteration-cap trip; the basis is still
    valid then, just not necessarily reduced.
    """
    n = len(rows)
    if n <= 1:
        return True
    mu = [[0.0] * n for _ in range(n)]
    gs_norm = [0.0] * n

    def gs_row(i: int) -> bool:
        for j in range(i):
            s = float(_idot(rows[i], rows[j]))
            for t in range(j):
                s -= mu[j][t] * mu[i][t] * gs_norm[t]
            if gs_norm[j] <= 0.0:
                return False
            mu[i][j] = s / gs_norm[j]
        v = float(_idot(rows[i], rows[i]))
        for t in range(i):
            v -= mu[i][t] * mu[i][t] * gs_norm[t]
        gs_norm[i] = v
        return v > 0.0

    def size_reduce(k: int, l: int) -> None:
        q = round(mu[k][l])
        if q:
            if abs(q) > 1 << 40:  # runaway float state; give up quietly
                raise OverflowError
            rk, rl = rows[k], rows[l]
            for t in range(len(rk)):
                rk[t] -= q * rl[t]
            for t in range(l):
                mu[k][t] -= q * mu[l][t]
            mu[k][l] -= q

    if not gs_row(0):
        return False
    k = 1
    kmax = 0
    budget = 200 * n * n + 1000
    try:
        while k < n:
            budget -= 1
            if budget < 0:
                return False
            if k > kmax:
                kmax = k
                if not gs_row(k):
                    return False
            size_reduce(k, k - 1)
            if gs_norm[k] < (delta - mu[k][k - 1] ** 2) * gs_norm[k - 1]:
                rows[k - 1], rows[k] = rows[k], rows[k - 1]
                for j in range(k - 1):
                    mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
                m = mu[k][k - 1]
                b = gs_norm[k] + m * m * gs_norm[k - 1]
                if b <= 0.0:
                    return False
                mu[k][k - 1] = m * gs_norm[k - 1] / b
                gs_norm[k] = gs_norm[k - 1] * gs_norm[k] / b
                gs_norm[k - 1] = b
                for i in range(k + 1, kmax + 1):
                    t = mu[i][k]
                    mu[i][k] = mu[i][k - 1] - m * t
                    mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
                k = max(k - 1, 1)
            else:
                for l in range(k - 2, -1, -1):
                    size_reduce(k, l)
                k += 1
    except OverflowError:
        return False
    return True


def screen_short_vectors(
    rows: list[list[int]], bound_q: int, count_all: bool
) -> tuple[int, tuple[int, ...] | None]:
    """Search for lattice vectors with squared norm <= bound_q.

    Float LLL plus float Schnorr-Euchner locate candidates; each leaf is
    re-verified with exact integer arithmetic before it counts.  Returns
    (verified count with +-pairs counted as 2, one verified witness).
    With ``count_all`` false, returns on the first verified vector.  A
    count of zero is NOT a proof of absence.
    """
    n = len(rows)
    work = [list(r) for r in rows]
    _lll_float(work)

    mu = [[0.0] * n for _ in range(n)]
    gs_norm = [0.0] * n
    for i in range(n):
        for j in range(i):
            s = float(_idot(work[i], work[j]))
            for t in range(j):
                s -= mu[j][t] * mu[i][t] * gs_norm[t]
            if gs_norm[j] <= 0.0:
                return 0, None
            mu[i][j] = s / gs_norm[j]
        v = float(_idot(work[i], work[i]))
        for t in range(i):
            v -= mu[i][t] * mu[i][t] * gs_norm[t]
        gs_norm[i] = v
    if any(v <= 0.0 for v in gs_norm):
        return 0, None

    limit = bound_q + 0.25
    x = [0] * n
    center = [0.0] * n
    base = [0] * n
    rho = [0.0] * (n + 1)
    trial = [0] * n
    first_dir = [1] * n
    dead_plus = [False] * n
    dead_minus = [False] * n

    count = 0
    witness: tuple[int, ...] | None = None
    nodes = 0

    def descend(k: int) -> None:
        c = 0.0
        for j in range(k + 1, n):
            c -= x[j] * mu[j][k]
        center[k] = c
        trial[k] = 0
        base[k] = round(c)
        first_dir[k] = 1 if c >= base[k] else -1
        # Half-space: with all higher coordinates zero, mirror vectors are
        # redundant, so enumerate x_k >= 0 only.
        topzero = all(x[j] == 0 for j in range(k + 1, n))
        dead_minus[k] = topzero
        dead_plus[k] = False

    k = n - 1
    descend(k)
    while True:
        nodes += 1
        if nodes > _ENUM_NODE_BUDGET:
            break
        # Next offset at this level, skipping exhausted directions.
        advanced = False
        while trial[k] >= 0:
            t = trial[k]
            mag = (t + 1) // 2
            sign = first_dir[k] if t % 2 == 1 else -first_dir[k]
            if t == 0:
                off = 0
            else:
                off = mag * sign
            trial[k] += 1
            if t > 0 and ((sign > 0 and dead_plus[k]) or (sign < 0 and dead_minus[k])):
                continue
            xv = base[k] + off
            d = xv - center[k]
            term = d * d * gs_norm[k]
            if rho[k + 1] + term > limit:
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
            rho[k] = rho[k + 1] + term
            advanced = True
            break
        if not advanced:
            k += 1
            if k >= n:
                break
            continue
        if k == 0:
            vec = [0] * len(work[0])
            for j in range(n):
                xj = x[j]
                if xj:
                    wj = work[j]
                    for t in range(len(vec)):
                        vec[t] += xj * wj[t]
            nq = sum(v * v for v in vec)
            if 0 < nq <= bound_q:
                count += 2
                if witness is None or nq < sum(w * w for w in witness):
                    witness = tuple(vec)
                if not count_all:
                    return count, witness
        else:
            k -= 1
            descend(k)
    return count, witness
