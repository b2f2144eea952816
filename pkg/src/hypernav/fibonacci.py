"""Fibonacci numeration: canonical bit words for positive integers.

The basis is the sequence f(0) = f(1) = 1, f(k) = f(k-1) + f(k-2).  A word
is a string of '0'/'1' digits, most significant first; the last digit has
weight f(1), the one before it f(2), and so on.  The canonical (greedy)
representation never contains two adjacent 1s and has no leading zero.

Words double as coordinates of nodes in the trees spanning the tilings:
level ``l`` of a tree holds the integers f(2l) .. f(2l+2)-1.
"""

from __future__ import annotations

from bisect import bisect_right

_fibs: list[int] = [1, 1]


def fib(k: int) -> int:
    """k-th Fibonacci number with f(0) = f(1) = 1.  Exact for any k >= 0."""
    if k < 0:
        raise ValueError("fib index must be >= 0")
    while len(_fibs) <= k:
        _fibs.append(_fibs[-1] + _fibs[-2])
    return _fibs[k]


def _fibs_through(k: int) -> list[int]:
    fib(k)
    return _fibs


def validate_word(word: str) -> None:
    """Raise ValueError unless ``word`` is a canonical Fibonacci word."""
    if not word:
        raise ValueError("empty word")
    if word.strip("01"):
        raise ValueError(f"word {word!r} has characters other than 0/1")
    if word[0] != "1":
        raise ValueError(f"word {word!r} has a leading zero")
    if "11" in word:
        raise ValueError(f"word {word!r} contains adjacent 1s")


def encode(n: int) -> str:
    """Greedy (longest) Fibonacci-basis word for n >= 1."""
    if n < 1:
        raise ValueError("only integers >= 1 have a word; the central tile has none")
    fibs = _fibs
    if fibs[-1] <= n:
        while fibs[-1] <= n:
            fibs.append(fibs[-1] + fibs[-2])
    # highest index k with fibs[k] <= n; digits run k, k-1, .., 1
    k = bisect_right(fibs, n) - 1
    out = []
    for i in range(k, 0, -1):
        f = fibs[i]
        if f <= n:
            n -= f
            out.append("1")
        else:
            out.append("0")
    return "".join(out)


def decode(word: str) -> int:
    """Integer value of a canonical word (last digit weighs f(1))."""
    validate_word(word)
    fibs = _fibs_through(len(word))
    bits = int(word, 2)
    total = 0
    while bits:
        low = bits & -bits
        total += fibs[low.bit_length()]
        bits ^= low
    return total


def level_bounds(level: int) -> tuple[int, int]:
    """(first, last) integers on tree level ``level``; the level holds f(2*level+1) nodes."""
    if level < 0:
        raise ValueError("level must be >= 0")
    return fib(2 * level), fib(2 * level + 2) - 1


def level_of(n: int) -> int:
    """Tree level of the integer n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    level = 0
    while fib(2 * level + 2) <= n:
        level += 1
    return level


def word_level(word: str) -> int:
    """Level of a canonical word without decoding it (words of level l have length 2l or 2l+1)."""
    return len(word) // 2


def is_level_min(word: str) -> bool:
    """True for the first word of its level: '1', '10', '1000', '100000', ..."""
    return word.count("1") == 1 and len(word) % 2 == 0 if len(word) > 1 else word == "1"


def is_level_max(word: str) -> bool:
    """True for the last word of its level: '1', '101', '10101', ..."""
    return len(word) % 2 == 1 and word[::2].count("0") == 0 and word[1::2].count("1") == 0


def level_min_word(level: int) -> str:
    return "1" + "0" * (2 * level - 1) if level > 0 else "1"


def level_max_word(level: int) -> str:
    return "1" + "01" * level


def successor(word: str) -> str:
    """Canonical word of decode(word) + 1."""
    validate_word(word)
    digits = [c == "1" for c in reversed(word)]  # index i holds weight f(i+1)
    if digits[0]:
        digits[0] = False
        k = 1  # f(1) + f(1) = f(2)
    else:
        k = 0  # just set f(1)
    # carry upward: the bit above the landing slot merges with it, f(i) + f(i+1) = f(i+2)
    while k + 1 < len(digits) and digits[k + 1]:
        digits[k + 1] = False
        k += 2
    if k >= len(digits):
        digits.extend([False] * (k + 1 - len(digits)))
    digits[k] = True
    while not digits[-1]:
        digits.pop()
    return "".join("1" if d else "0" for d in reversed(digits))


def predecessor(word: str) -> str:
    """Canonical word of decode(word) - 1; rejects '1' (value 1 has no predecessor word)."""
    validate_word(word)
    if word == "1":
        raise ValueError("1 has no predecessor word")
    digits = [c == "1" for c in reversed(word)]
    if digits[0]:
        digits[0] = False
    else:
        k = digits.index(True)
        # f(k+1) - 1 = f(k) + f(k-2) + f(k-4) + ... down to f(2) or f(1)
        digits[k] = False
        i = k - 1
        while i >= 0:
            digits[i] = True
            i -= 2
    while not digits[-1]:
        digits.pop()
    return "".join("1" if d else "0" for d in reversed(digits))
