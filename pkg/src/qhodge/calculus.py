"""Data of the 4D+ bicovariant calculus on quantum SU(2).

Left-invariant 1-forms are ordered (minus, plus, zero, z) and carry the
U(1) charges (-2, +2, 0, 0).  A tensor omega_a (x) omega_b has index 4*a + b;
degree-k tensors use base-4 big-endian indices.

Matrices are stored column-wise as ``{col: {row: value}}``: column ``c``
holds the image of basis vector ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .scalar import ONE, Q, ZERO, ScalarQ

LABELS = ("-", "+", "0", "z")
NAMES = ("minus", "plus", "zero", "z")
MINUS, PLUS, ZERO_, ZL = 0, 1, 2, 3
CHARGES = (-2, 2, 0, 0)
# omega_a^* = -omega_{STAR_LABEL[a]}
STAR_LABEL = (PLUS, MINUS, ZERO_, ZL)


@dataclass(frozen=True)
class Basis1:
    index: int

    @property
    def label(self) -> str:
        return LABELS[self.index]

    @property
    def charge(self) -> int:
        return CHARGES[self.index]

    def star(self) -> tuple[int, "Basis1"]:
        """(sign, label) with omega^* = sign * omega_label."""
        return -1, Basis1(STAR_LABEL[self.index])


BASIS = tuple(Basis1(a) for a in range(4))


def label_index(label: str) -> int:
    aliases = {"-": 0, "minus": 0, "m": 0, "+": 1, "plus": 1, "p": 1,
               "0": 2, "zero": 2, "z": 3}
    try:
        return aliases[label]
    except KeyError:
        raise ValueError(f"unknown basis label {label!r}") from None


def pair(a: str, b: str) -> int:
    return 4 * label_index(a) + label_index(b)


def word_index(word) -> int:
    """Index of omega_{w1} (x) ... (x) omega_{wk} for a sequence of labels or ints."""
    idx = 0
    for w in word:
        idx = 4 * idx + (w if isinstance(w, int) else label_index(w))
    return idx


def index_word(idx: int, k: int) -> tuple[int, ...]:
    digits = []
    for _ in range(k):
        idx, d = divmod(idx, 4)
        digits.append(d)
    return tuple(reversed(digits))


def tensor_charge(idx: int, k: int) -> int:
    return sum(CHARGES[d] for d in index_word(idx, k))


def _blocks(direction: str):
    q, qi = Q, Q ** -1
    d = (q - qi) ** 2
    e = q ** 2 - qi ** 2
    if direction == "+":
        return [
            (("--",), [[ONE]]),
            (("-0", "0-", "-z", "z-"), [
                [1 - q ** 2, ONE, ZERO, ZERO],
                [q ** 2, ZERO, ZERO, ZERO],
                [1 + q ** 2, ZERO, ZERO, ONE],
                [-1 - qi ** 2, ZERO, qi ** 2, 1 - qi ** 2],
            ]),
            (("z0", "0z", "zz", "-+", "+-"), [
                [-d, ONE, ZERO, -d, d],
                [ONE, ZERO, ZERO, ZERO, ZERO],
                [e, ZERO, ONE, e, -e],
                [-ONE, ZERO, ZERO, ZERO, ONE],
                [ONE, ZERO, ZERO, ONE, ZERO],
            ]),
            (("00",), [[ONE]]),
            (("+0", "0+", "+z", "z+"), [
                [1 - qi ** 2, ONE, ZERO, ZERO],
                [qi ** 2, ZERO, ZERO, ZERO],
                [-1 - qi ** 2, ZERO, ZERO, ONE],
                [1 + q ** 2, ZERO, q ** 2, 1 - q ** 2],
            ]),
            (("++",), [[ONE]]),
        ]
    if direction == "-":
        return [
            (("--",), [[ONE]]),
            (("-0", "0-", "-z", "z-"), [
                [ZERO, qi ** 2, ZERO, ZERO],
                [ONE, 1 - qi ** 2, ZERO, ZERO],
                [ZERO, 1 + q ** 2, 1 - q ** 2, q ** 2],
                [ZERO, -1 - qi ** 2, ONE, ZERO],
            ]),
            (("z0", "0z", "zz", "-+", "+-"), [
                [ZERO, ONE, ZERO, ZERO, ZERO],
                [ONE, -d, ZERO, -d, d],
                [ZERO, e, ONE, e, -e],
                [ZERO, -ONE, ZERO, ZERO, ONE],
                [ZERO, ONE, ZERO, ONE, ZERO],
            ]),
            (("00",), [[ONE]]),
            (("+0", "0+", "+z", "z+"), [
                [ZERO, q ** 2, ZERO, ZERO],
                [ONE, 1 - q ** 2, ZERO, ZERO],
                [ZERO, -1 - qi ** 2, 1 - qi ** 2, qi ** 2],
                [ZERO, 1 + q ** 2, ONE, ZERO],
            ]),
            (("++",), [[ONE]]),
        ]
    raise ValueError(f"direction must be '+' or '-', got {direction!r}")


def check_direction(direction: str) -> str:
    if direction in ("+", "plus", "p"):
        return "+"
    if direction in ("-", "minus", "m"):
        return "-"
    raise ValueError(f"direction must be '+' or '-', got {direction!r}")


@lru_cache(maxsize=None)
def braiding_columns(direction: str) -> tuple:
    """sigma^{+-} as a tuple of 16 sparse columns ``{row: value}``.

    Each block row ``r`` of the braiding tables lists sigma(v_r) in the block basis.
    """
    direction = check_direction(direction)
    cols = [dict() for _ in range(16)]
    for names, rows in _blocks(direction):
        idx = [pair(n[0], n[1]) for n in names]
        for r, row in enumerate(rows):
            for c, val in enumerate(row):
                if not val.is_zero():
                    cols[idx[r]][idx[c]] = val
    return tuple(cols)


def braiding_matrix(direction: str) -> list[list[ScalarQ]]:
    """Dense 16x16 matrix M with M[row][col]; column j is sigma(e_j)."""
    cols = braiding_columns(direction)
    dense = [[ZERO] * 16 for _ in range(16)]
    for c, col in enumerate(cols):
        for r, v in col.items():
            dense[r][c] = v
    return dense
