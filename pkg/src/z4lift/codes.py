"""Builtin binary doubly even self-dual codes used by the CLI and tests."""

from __future__ import annotations

import re

from . import gf2, z4
from .errors import UnknownName
from .gf2 import BinaryCode, BitMatrix


def _verified(code: BinaryCode) -> BinaryCode:
    assert gf2.is_self_dual_binary(code), "builtin must be self-dual"
    assert gf2.is_doubly_even(code), "builtin must be doubly even"
    assert gf2.contains_all_ones(code), "builtin must contain the all-ones word"
    return code


def hamming8e() -> BinaryCode:
    """Extended Hamming [8,4,4] code."""
    rows = [0b00001111, 0b00111100, 0b11110000, 0b01010101]
    return _verified(BinaryCode.from_rows(8, rows))


def binary_direct_sum(a: BinaryCode, b: BinaryCode) -> BinaryCode:
    rows = list(a.generator.rows) + [r << a.n for r in b.generator.rows]
    return BinaryCode(a.n + b.n, a.k + b.k, BitMatrix(tuple(rows), a.n + b.n))


def e8k(k: int) -> BinaryCode:
    """Direct sum of k copies of the extended Hamming code (length 8k)."""
    if k < 1:
        raise ValueError("need k >= 1")
    code = hamming8e()
    for _ in range(k - 1):
        code = binary_direct_sum(code, hamming8e())
    return _verified(code)


def dplus(n: int) -> BinaryCode:
    """The code d+_n: weight-4 staircase words plus the alternating glue word."""
    if n % 8 != 0 or n < 8:
        raise ValueError("d+_n needs length 0 mod 8")
    rows = [0b1111 << (2 * i) for i in range(n // 2 - 1)]
    rows.append(sum(1 << (2 * t) for t in range(n // 2)))
    return _verified(BinaryCode.from_rows(n, rows))


def golay24() -> BinaryCode:
    """Extended binary Golay [24,12,8] code via the length-23 cyclic code."""
    g = sum(1 << e for e in (0, 2, 4, 5, 6, 10, 11))  # x^11+x^10+x^6+x^5+x^4+x^2+1
    rows = []
    for i in range(12):
        row = g << i
        row |= (row.bit_count() & 1) << 23  # overall parity extension
        rows.append(row)
    return _verified(BinaryCode.from_rows(24, rows))


def builtin(name: str) -> BinaryCode:
    """Look up a builtin code by name (hamming8e, golay24, e8k{k}, dplus{n})."""
    if name == "hamming8e":
        return hamming8e()
    if name == "golay24":
        return golay24()
    m = re.fullmatch(r"e8k(\d+)", name)
    if m and 1 <= int(m.group(1)) <= 6:
        return e8k(int(m.group(1)))
    m = re.fullmatch(r"dplus(\d+)", name)
    if m and int(m.group(1)) % 8 == 0 and 8 <= int(m.group(1)) <= 48:
        return dplus(int(m.group(1)))
    raise UnknownName(f"no builtin code named {name!r}")


BUILTIN_NAMES = ("hamming8e", "golay24") + tuple(f"e8k{k}" for k in range(1, 6)) + tuple(
    f"dplus{n}" for n in range(8, 49, 8)
)


def distinguish_by_residue(a: z4.Z4Code, b: z4.Z4Code, cap: int = 1 << 24) -> str:
    """Compare residue weight distributions: "inequivalent" or "unknown".

    Distinct residue codes make the Z4 codes inequivalent; matching
    distributions prove nothing, so equivalence is never declared.
    """
    wa = gf2.weight_distribution(z4.residue_code(a), cap)
    wb = gf2.weight_distribution(z4.residue_code(b), cap)
    return "inequivalent" if wa != wb else "unknown"
