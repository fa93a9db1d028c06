"""Text formats: binary/Z4 generator files, basis dumps, result records.

Code files carry a "n k" header line followed by k digit rows; '#' starts
a comment and blank lines are skipped.  A Z4 file of exactly 20 bare
20-digit rows (no header) is accepted as the published square block M of
a length-40 generator (I_20 | M).  Basis dumps carry "n" then n rows of n
integers in doubled coordinates.  Result records are self-contained JSON
lines so concurrent appends stay parseable.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .errors import FormatError
from .gf2 import BinaryCode, BitMatrix
from .lattice import LatticeBasis
from .z4 import Z4Code, Z4Vector


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def save_binary(code: BinaryCode) -> str:
    out = [f"{code.n} {code.k}"]
    for r in code.generator.rows:
        out.append("".join(str((r >> j) & 1) for j in range(code.n)))
    return "\n".join(out) + "\n"


def load_binary(text: str) -> BinaryCode:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty binary code file")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("binary code file must start with 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError("header entries must be integers") from exc
    if len(lines) != 1 + k:
        raise FormatError(f"expected {k} generator rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        digits = "".join(line.split())
        if len(digits) != n or any(ch not in "01" for ch in digits):
            raise FormatError("generator rows must be n characters from {0,1}")
        rows.append(sum((ch == "1") << j for j, ch in enumerate(digits)))
    try:
        return BinaryCode(n, k, BitMatrix(tuple(rows), n))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def save_z4(code: Z4Code) -> str:
    out = [f"{code.n} {code.k}"]
    for v in code.rows:
        out.append("".join(str(v.entry(j)) for j in range(code.n)))
    return "\n".join(out) + "\n"


def load_z4(text: str) -> Z4Code:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty Z4 code file")
    head = lines[0].split()
    if _looks_like_square_block(lines):
        return _load_z4_square_block(lines)
    if len(head) != 2:
        raise FormatError("Z4 code file must start with 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError("header entries must be integers") from exc
    if len(lines) != 1 + k:
        raise FormatError(f"expected {k} generator rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        digits = "".join(line.split())
        if len(digits) != n or any(ch not in "0123" for ch in digits):
            raise FormatError("generator rows must be n characters from {0,1,2,3}")
        rows.append([int(ch) for ch in digits])
    return Z4Code.from_entry_rows(n, rows)


def _looks_like_square_block(lines: list[str]) -> bool:
    if len(lines) != 20:
        return False
    digits = ["".join(line.split()) for line in lines]
    return all(len(d) == 20 and set(d) <= set("0123") for d in digits)


def _load_z4_square_block(lines: list[str]) -> Z4Code:
    # Published-file import: 20 rows x 20 digits read as (I_20 | M).
    if len(lines) != 20:
        raise FormatError("square-block import expects exactly 20 rows")
    rows = []
    for i, line in enumerate(lines):
        digits = "".join(line.split())
        if len(digits) != 20 or any(ch not in "0123" for ch in digits):
            raise FormatError("square-block rows must be 20 characters from {0,1,2,3}")
        entries = [0] * 40
        entries[i] = 1
        for j, ch in enumerate(digits):
            entries[20 + j] = int(ch)
        rows.append(entries)
    return Z4Code.from_entry_rows(40, rows)


def save_basis(b: LatticeBasis) -> str:
    out = [str(b.n)]
    for row in b.doubled:
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def load_basis(text: str) -> LatticeBasis:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty basis file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError("basis file must start with the dimension") from exc
    if len(lines) != 1 + n:
        raise FormatError(f"expected {n} basis rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise FormatError("basis rows must hold n integers")
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise FormatError("basis entries must be integers") from exc
    return LatticeBasis(n, tuple(rows))


def detect_kind(text: str) -> str:
    """Classify file contents as 'binary', 'z4', or 'basis'."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty file")
    head = lines[0].split()
    if _looks_like_square_block(lines):
        return "z4"
    if len(head) == 1:
        return "basis"
    if len(head) == 2 and len(lines) > 1:
        body = "".join("".join(line.split()) for line in lines[1:])
        return "binary" if set(body) <= {"0", "1"} else "z4"
    raise FormatError("unrecognized file layout")


@dataclass(frozen=True)
class ResultRecord:
    """One line of the append-only search log."""

    code: str
    outcome: str
    witness: str | None
    certificate: str  # "svp" or "enum"
    min_norm: int | None
    d_e: int | None
    candidates: int
    elapsed_s: float
    seed: int
    version: str

    def to_json_line(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json_line(cls, line: str) -> "ResultRecord":
        try:
            data = json.loads(line)
            return cls(**data)
        except (json.JSONDecodeError, TypeError) as exc:
            raise FormatError(f"bad result record: {exc}") from exc
