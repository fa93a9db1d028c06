"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``Z4LIFT_PURE=1`` to force the fallback (used by the benchmark and by
tests that compare the two implementations).  The compiled kernels only
handle lengths that fit a 64-bit word; longer inputs fall through to the
pure versions transparently.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("Z4LIFT_PURE"):
    _impl = _pure
else:
    try:
        from . import _ext as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

_WORD = 64


def hamming_weight_distribution(rows: list[int], k: int, n: int | None = None) -> dict[int, int]:
    if _impl is not _pure and (n is None or n <= _WORD) and all(r < (1 << _WORD) for r in rows):
        return _impl.hamming_weight_distribution(rows, k)
    return _pure.hamming_weight_distribution(rows, k)


def z4_min_euclidean_weight(gen4, gen2, n: int, stop_at: int = 0) -> int:
    if _impl is not _pure and n <= _WORD:
        return _impl.z4_min_euclidean_weight(gen4, gen2, stop_at)
    return _pure.z4_min_euclidean_weight(gen4, gen2, stop_at)


def z4_euclidean_weight_distribution(gen4, gen2, n: int) -> dict[int, int]:
    if _impl is not _pure and n <= _WORD:
        return _impl.z4_euclidean_weight_distribution(gen4, gen2)
    return _pure.z4_euclidean_weight_distribution(gen4, gen2)


def screen_short_vectors(rows, bound_q: int, count_all: bool):
    if _impl is not _pure:
        try:
            return _impl.screen_short_vectors(rows, bound_q, count_all)
        except OverflowError:
            pass
    return _pure.screen_short_vectors(rows, bound_q, count_all)
