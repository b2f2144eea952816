"""Combinatorics of the tree spanning one sector of the tilings.

Nodes are numbered breadth-first from 1 and carry their canonical Fibonacci
word as coordinate.  White nodes have three sons, black nodes two; the
leftmost son of any node is black.  All public operations work directly on
the word, in time linear in its length; ``generate_tree`` is the brute-force
reference the word algorithms are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from hypernav.fibonacci import fib, predecessor, validate_word


class NodeColor(Enum):
    BLACK = "black"
    WHITE = "white"


def color_of(word: str) -> NodeColor:
    """Color of a node: black exactly when the word ends in an odd run of zeros."""
    validate_word(word)
    trailing = len(word) - len(word.rstrip("0"))
    return NodeColor.BLACK if trailing % 2 == 1 else NodeColor.WHITE


def preferred_son(word: str) -> str:
    """The one son whose word is the parent's with '00' appended."""
    validate_word(word)
    return word + "00"


def sons(word: str) -> list[str]:
    """Son words in rank order (consecutive integers, leftmost first)."""
    if color_of(word) is NodeColor.BLACK:
        return [word + "00", word + "01"]
    return [predecessor(word + "00"), word + "00", word + "01"]


def parent(word: str) -> tuple[str, int] | None:
    """(parent word, son rank) of a node, or None for the sector root.

    The last two digits decide the case: '00' is the preferred son, '01' the
    last son, '10' the leftmost son of a white parent (word of the shape
    v 0 (10)^j, whose parent is v 1 0^(2j-2)).
    """
    validate_word(word)
    if len(word) == 1:
        return None
    tail = word[-2:]
    if tail == "00":
        par = word[:-2]
        return par, 1 if color_of(par) is NodeColor.BLACK else 2
    if tail == "01":
        par = word[:-2]
        return par, 2 if color_of(par) is NodeColor.BLACK else 3
    # tail "10": words of the shape v 0 (10)^t (t maximal, v possibly empty)
    # have parent v 1 0^(2t-2); maximality forces v to end in 0, keeping it canonical
    i = len(word)
    t = 0
    while i >= 2 and word[i - 1] == "0" and word[i - 2] == "1":
        i -= 2
        t += 1
    if i == 0:
        par = "1" + "0" * (2 * t - 2)
    else:
        par = word[: i - 1] + "1" + "0" * (2 * t - 2)
    return par, 1


def path_from_root(word: str) -> list[int]:
    """Son ranks leading from the sector root to the node.

    Runs the parent step in place on one digit buffer, tracking the trailing
    zero count, so the whole walk costs O(len(word)) rather than a fresh
    string per level.
    """
    validate_word(word)
    digits = list(word)
    end = len(digits)
    tz = 0
    while tz < end and digits[end - 1 - tz] == "0":
        tz += 1
    ranks: list[int] = []
    while end > 1:
        if digits[end - 1] == "1":  # tail "01": last son
            end -= 2
            tz = 0
            while tz < end and digits[end - 1 - tz] == "0":
                tz += 1
            ranks.append(2 if tz % 2 == 1 else 3)
        elif digits[end - 2] == "0":  # tail "00": preferred son
            end -= 2
            tz -= 2
            ranks.append(1 if tz % 2 == 1 else 2)
        else:  # tail "10": leftmost son of a white parent
            i = end
            while i >= 2 and digits[i - 1] == "0" and digits[i - 2] == "1":
                i -= 2
            if i == 0:  # word was (10)^t; parent 1 0^(2t-2) is one digit shorter
                end -= 1
                for j in range(1, end):
                    digits[j] = "0"
                tz = end - 1
            else:
                end -= 2
                digits[i - 1] = "1"
                for j in range(i, end):
                    digits[j] = "0"
                tz = end - i
            ranks.append(1)
    ranks.reverse()
    return ranks


def son_by_rank(word: str, rank: int) -> str:
    """Word of the rank-th son (1-based)."""
    color = color_of(word)
    arity = 2 if color is NodeColor.BLACK else 3
    if not 1 <= rank <= arity:
        raise ValueError(f"rank {rank} out of range for a {color.value} node")
    if color is NodeColor.BLACK:
        return word + "00" if rank == 1 else word + "01"
    if rank == 1:
        return predecessor(word + "00")
    return word + "00" if rank == 2 else word + "01"


@dataclass
class GenerativeTree:
    """Breadth-first materialization of the tree, for oracle tests.

    Node 1 is the white root; sons are numbered level by level, left to
    right: black -> [black, white], white -> [black, white, white].
    """

    max_level: int
    colors: list[NodeColor]  # index 0 unused
    son_lists: list[list[int]]
    parents: list[tuple[int, int]]  # (parent node, rank); (0, 0) for the root
    level_start: list[int]

    def level_nodes(self, level: int) -> range:
        return range(self.level_start[level], self.level_start[level + 1])

    @property
    def node_count(self) -> int:
        return self.level_start[self.max_level + 1] - 1


def generate_tree(max_level: int) -> GenerativeTree:
    """Materialize all levels up to ``max_level`` inclusive."""
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    total = fib(2 * max_level + 2) - 1
    colors: list[NodeColor] = [NodeColor.WHITE] * (total + 1)
    son_lists: list[list[int]] = [[] for _ in range(total + 1)]
    parents: list[tuple[int, int]] = [(0, 0)] * (total + 1)
    level_start = [1]
    for level in range(max_level + 1):
        level_start.append(fib(2 * level + 2))
    colors[1] = NodeColor.WHITE
    next_node = 2
    for level in range(max_level):
        for node in range(level_start[level], level_start[level + 1]):
            arity = 2 if colors[node] is NodeColor.BLACK else 3
            for rank in range(1, arity + 1):
                son = next_node
                next_node += 1
                colors[son] = NodeColor.BLACK if rank == 1 else NodeColor.WHITE
                son_lists[node].append(son)
                parents[son] = (node, rank)
    return GenerativeTree(max_level, colors, son_lists, parents, level_start)
