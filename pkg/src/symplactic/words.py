"""Words over the alphabet 1 < 2 < ... < n < -n < ... < -1 and their crystal
structure via the i-signature rule.

A letter is a nonzero integer k with |k| <= n; negative means barred.  A word
is a tuple of letters.  Operators return None where undefined.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .rootdata import Coweight

Word = tuple[int, ...]


class Signature(NamedTuple):
    """Reduced i-signature of a word: (-)^minus (+)^plus with acting slots."""

    minus: int
    plus: int
    rightmost_minus: Optional[int]  # 0-based word position, None if minus == 0
    leftmost_plus: Optional[int]  # 0-based word position, None if plus == 0


def letter_rank(x: int, n: int) -> int:
    """Position of a letter in the alphabet order, 1-based."""
    validate_letter(x, n)
    return x if x > 0 else 2 * n + 1 + x


def validate_letter(x: int, n: int) -> None:
    if not isinstance(x, int) or x == 0 or abs(x) > n:
        raise ValueError(f"invalid letter {x!r} for rank {n}")


def validate_word(w: Word, n: int) -> None:
    for x in w:
        validate_letter(x, n)


def validate_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"operator index {i} out of range 1..{n}")


def parse_word(text: str) -> Word:
    """Parse a space-separated word such as "1 2 -2"; "" is the empty word."""
    parts = text.split()
    try:
        letters = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"cannot parse word {text!r}") from exc
    if any(x == 0 for x in letters):
        raise ValueError("0 is not a letter")
    return letters


def format_word(w: Word) -> str:
    return " ".join(str(x) for x in w)


def weight_of_word(w: Word, n: int) -> Coweight:
    """Sum of signed unit vectors, with barred letters counted negatively."""
    validate_word(w, n)
    coords = [0] * n
    for x in w:
        coords[abs(x) - 1] += 1 if x > 0 else -1
    return Coweight.integral(coords)


def _tag(x: int, i: int, n: int) -> int:
    """Signature tag of a letter: +1, -1 or 0 (neutral)."""
    if i == n:
        if x == n:
            return 1
        if x == -n:
            return -1
        return 0
    if x == i or x == -(i + 1):
        return 1
    if x == i + 1 or x == -i:
        return -1
    return 0


def signature(w: Word, i: int, n: int) -> Signature:
    """Reduce the i-signature by cancelling '+-' pairs across neutral letters."""
    validate_index(i, n)
    validate_word(w, n)
    plus_stack: list[int] = []
    minus_list: list[int] = []
    for pos, x in enumerate(w):
        t = _tag(x, i, n)
        if t > 0:
            plus_stack.append(pos)
        elif t < 0:
            if plus_stack:
                plus_stack.pop()
            else:
                minus_list.append(pos)
    return Signature(
        len(minus_list),
        len(plus_stack),
        minus_list[-1] if minus_list else None,
        plus_stack[0] if plus_stack else None,
    )


def epsilon_word(w: Word, i: int, n: int) -> int:
    return signature(w, i, n).minus


def phi_word(w: Word, i: int, n: int) -> int:
    return signature(w, i, n).plus


def f_word(w: Word, i: int, n: int) -> Optional[Word]:
    """Lowering operator: act at the leftmost surviving '+' of the i-signature.

    Changes i to i+1 and -(i+1) to -i; for i = n changes n to -n.
    """
    sig = signature(w, i, n)
    if sig.plus == 0:
        return None
    pos = sig.leftmost_plus
    x = w[pos]
    if i == n:
        y = -n
    elif x == i:
        y = i + 1
    else:  # x == -(i + 1)
        y = -i
    return w[:pos] + (y,) + w[pos + 1 :]


def e_word(w: Word, i: int, n: int) -> Optional[Word]:
    """Raising operator: act at the rightmost surviving '-' of the i-signature.

    Changes i+1 to i and -i to -(i+1); for i = n changes -n to n.
    """
    sig = signature(w, i, n)
    if sig.minus == 0:
        return None
    pos = sig.rightmost_minus
    x = w[pos]
    if i == n:
        y = n
    elif x == i + 1:
        y = i
    else:  # x == -i
        y = -(i + 1)
    return w[:pos] + (y,) + w[pos + 1 :]


def is_dominant_word(w: Word, n: int) -> bool:
    """True when every prefix weight lies in the closed dominant chamber."""
    validate_word(w, n)
    coords = [0] * n
    for x in w:
        coords[abs(x) - 1] += 1 if x > 0 else -1
        if coords[-1] < 0:
            return False
        if any(coords[k] < coords[k + 1] for k in range(n - 1)):
            return False
    return True


def raise_word(w: Word, n: int) -> tuple[Word, tuple[int, ...]]:
    """Greedily apply e at the smallest applicable index until none applies.

    Returns the dominant endpoint together with the index sequence in
    application order.
    """
    validate_word(w, n)
    path: list[int] = []
    cur = w
    while True:
        for i in range(1, n + 1):
            nxt = e_word(cur, i, n)
            if nxt is not None:
                cur = nxt
                path.append(i)
                break
        else:
            return cur, tuple(path)


def words_equivalent(w1: Word, w2: Word, n: int) -> bool:
    """Crystal equivalence, decided by raising both words in lockstep.

    At each step the greedy index of the first word is applied to both; the
    words are equivalent when both end dominant with the same weight.
    """
    validate_word(w1, n)
    validate_word(w2, n)
    a, b = w1, w2
    while True:
        for i in range(1, n + 1):
            na = e_word(a, i, n)
            if na is not None:
                nb = e_word(b, i, n)
                if nb is None:
                    return False
                a, b = na, nb
                break
        else:
            break
    return is_dominant_word(b, n) and weight_of_word(a, n) == weight_of_word(b, n)
