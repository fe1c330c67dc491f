"""Lazy (single-bit-flip) orderings of all m-bit words.

Bit positions count from the right: bit 0 is the least significant bit and
the coefficient of ``2**0`` in the word's integer value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_WIDTH = 30


def _check_width(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= MAX_WIDTH:
        raise ValueError(f"width must be an integer in [1, {MAX_WIDTH}], got {m!r}")


@dataclass(frozen=True, order=True)
class BitWord:
    """A word of ``width`` bits stored as a nonnegative integer."""

    value: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"negative width {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    def bit(self, k: int) -> int:
        return (self.value >> k) & 1

    def set_bits(self) -> tuple[int, ...]:
        """Positions of the 1 bits, ascending."""
        return tuple(k for k in range(self.width) if (self.value >> k) & 1)

    def popcount(self) -> int:
        return self.value.bit_count()

    @classmethod
    def parse(cls, text: str) -> BitWord:
        """Read a binary string written with bit 0 rightmost, e.g. ``"110"`` is 6."""
        return cls(int(text, 2) if text else 0, len(text))

    def __str__(self) -> str:
        return format(self.value, f"0{self.width}b") if self.width else ""


@dataclass(frozen=True)
class LazyOrdering:
    """Words ``codes[0..2**m-1]`` with ``flips[j-1]`` the bit flipped going into ``codes[j]``.

    Flips are stored 0-indexed, so ``flips[j - 1]`` is the 1-indexed ``s_j`` that
    turns ``codes[j - 1]`` into ``codes[j]``.
    """

    width: int
    flips: tuple[int, ...]
    codes: tuple[BitWord, ...]

    @classmethod
    def from_codes(cls, codes: Sequence[BitWord | int], width: int) -> LazyOrdering:
        """Wrap an externally supplied word sequence; flips are inferred from each step.

        A step that changes more than one bit is recorded by the position of its
        highest changed bit, which ``validate_lazy`` then rejects.
        """
        words = tuple(c if isinstance(c, BitWord) else BitWord(c, width) for c in codes)
        flips = tuple(
            (a.value ^ b.value).bit_length() - 1 for a, b in zip(words, words[1:])
        )
        return cls(width, flips, words)

    def __iter__(self) -> Iterator[BitWord]:
        return iter(self.codes)

    def __len__(self) -> int:
        return len(self.codes)


@dataclass
class _Node:
    label: int
    left: _Node | None = None
    right: _Node | None = None


def _build_tree(depth: int, bottom: int) -> _Node:
    node = _Node(depth)
    if depth < bottom:
        node.left = _build_tree(depth + 1, bottom)
        node.right = _build_tree(depth + 1, bottom)
    return node


def flip_sequence_by_tree(m: int) -> tuple[int, ...]:
    """Inorder labels of the full binary tree whose depth-d nodes carry label d.

    The tree has rows at depths 0 through m-1, so the root is 0 and the leaves
    are m-1. For m=3 this gives (2, 1, 2, 0, 2, 1, 2).
    """
    _check_width(m)
    root = _build_tree(0, m - 1)
    out: list[int] = []
    stack: list[_Node] = []
    node: _Node | None = root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        out.append(node.label)
        node = node.right
    return tuple(out)


def flip_sequence_closed_form(m: int) -> tuple[int, ...]:
    """Ruler-sequence form: element j (1-indexed) is ``m - 1 - v2(j)``."""
    _check_width(m)
    # (j & -j).bit_length() - 1 is the 2-adic valuation of j
    return tuple(m - (j & -j).bit_length() for j in range(1, 1 << m))


def lazy_ordering(m: int) -> LazyOrdering:
    flips = flip_sequence_closed_form(m)
    value = 0
    codes = [BitWord(0, m)]
    for s in flips:
        value ^= 1 << s
        codes.append(BitWord(value, m))
    return LazyOrdering(m, flips, tuple(codes))


def validate_lazy(ordering: LazyOrdering) -> bool:
    """True iff the ordering starts at zero, steps by single flips, covers every
    word exactly once and ends on a word with one set bit."""
    m = ordering.width
    codes = ordering.codes
    if m < 1 or len(codes) != 1 << m or len(ordering.flips) != len(codes) - 1:
        return False
    if any(c.width != m for c in codes):
        return False
    if codes[0].value != 0:
        return False
    if len({c.value for c in codes}) != len(codes):
        return False
    for prev, cur, s in zip(codes, codes[1:], ordering.flips):
        if not 0 <= s < m or prev.value ^ cur.value != 1 << s:
            return False
    return codes[-1].popcount() == 1
