"""Symplectic keys: columns, LS and zero blocks, readable keys, word reading,
and the shape/coweight bookkeeping.

Blocks are stored in traversal order: a pair block keeps its right displayed
column first, and a key lists its rightmost displayed block first.  The ASCII
renderer is the only place display order appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .rootdata import Coweight, fundamental_coweight, is_dominant
from .words import Word, letter_rank, validate_letter

Column = tuple[int, ...]

LSWitness = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class Block:
    """A block of a symplectic key: a single box or a pair of equal-height
    columns.  Pair kinds: "ls", "zero", or "pair" for a syntactically valid
    pair that is neither (such keys exist but are not readable).

    For pairs, columns = (right displayed column, left displayed column).
    """

    kind: str  # "single" | "ls" | "zero" | "pair"
    columns: tuple[Column, ...]

    @property
    def height(self) -> int:
        return len(self.columns[0])

    def column_count(self) -> int:
        return len(self.columns)


@dataclass(frozen=True)
class ReadableKey:
    """A concatenation of readable blocks in traversal order."""

    blocks: tuple[Block, ...]


EMPTY_KEY = ReadableKey(())


def validate_column(col: Column, n: int) -> None:
    """Columns are strictly increasing top to bottom in the alphabet order."""
    if not col:
        raise ValueError("empty column")
    ranks = [letter_rank(x, n) for x in col]
    if any(ranks[t] >= ranks[t + 1] for t in range(len(ranks) - 1)):
        raise ValueError(f"column {col} is not strictly increasing")


def sorted_column(letters: Iterable[int], n: int) -> Column:
    return tuple(sorted(letters, key=lambda x: letter_rank(x, n)))


def compute_T(A, B, Z, n: int) -> Optional[tuple[int, ...]]:
    """Greedy companion set for Z below an LS pair, or None if none exists.

    Working down from the largest element of Z, each t is the largest free
    letter below both its z and the previously chosen t.
    """
    A, B, Z = set(A), set(B), set(Z)
    for s in (A, B, Z):
        if not all(isinstance(x, int) and 1 <= x <= n for x in s):
            raise ValueError(f"sets must consist of letters in 1..{n}")
    if (A & B) or (A & Z) or (B & Z):
        raise ValueError("A, B, Z must be pairwise disjoint")
    k = len(Z)
    if 2 * k + len(A) + len(B) > n:
        return None
    forbidden = A | B | Z
    zs = sorted(Z)
    ts: list[int] = [0] * k
    bound = n + 1
    for j in range(k - 1, -1, -1):
        bound = min(zs[j], bound)
        t = bound - 1
        while t >= 1 and t in forbidden:
            t -= 1
        if t < 1:
            return None
        ts[j] = t
        bound = t
    return tuple(ts)


def ls_witness(right: Column, left: Column, n: int) -> Optional[LSWitness]:
    """Decompose a column pair into (A, B, Z, T), or None if it is not LS."""
    validate_column(right, n)
    validate_column(left, n)
    if len(right) != len(left):
        return None
    ur = {x for x in right if x > 0}
    br = {-x for x in right if x < 0}
    ul = {x for x in left if x > 0}
    bl = {-x for x in left if x < 0}
    A = ur & ul
    Z = ur - A
    T = ul - A
    B = br & bl
    if br - B != T or bl - B != Z or len(T) != len(Z):
        return None
    if B & (A | Z | T):
        return None
    expected = compute_T(A, B, Z, n)
    if expected is None or tuple(sorted(T)) != expected:
        return None
    return (tuple(sorted(A)), tuple(sorted(B)), tuple(sorted(Z)), expected)


def zero_block_size(right: Column, left: Column, n: int) -> Optional[int]:
    """The k for which the pair is the zero block (1..k | -k..-1), else None."""
    validate_column(right, n)
    validate_column(left, n)
    k = len(right)
    if len(left) != k:
        return None
    if right == tuple(range(1, k + 1)) and left == tuple(range(-k, 0)):
        return k
    return None


def classify_pair(right: Column, left: Column, n: int):
    """("ls", witness), ("zero", k), or None for an unreadable pair."""
    k = zero_block_size(right, left, n)
    if k is not None:
        return ("zero", k)
    w = ls_witness(right, left, n)
    if w is not None:
        return ("ls", w)
    return None


def is_ls_block(block: Block, n: int) -> bool:
    """Single boxes are always LS; pairs must admit the A/B/Z/T structure."""
    if block.kind == "single":
        return True
    right, left = block.columns
    return ls_witness(right, left, n) is not None


def single_block(letter: int, n: int) -> Block:
    validate_letter(letter, n)
    return Block("single", ((letter,),))


def zero_block(k: int, n: int) -> Block:
    if not 1 <= k <= n:
        raise ValueError(f"zero block size {k} out of range 1..{n}")
    return Block("zero", (tuple(range(1, k + 1)), tuple(range(-k, 0))))


def pair_block(right: Column, left: Column, n: int) -> Block:
    """Build a classified pair block from two equal-height valid columns."""
    validate_column(right, n)
    validate_column(left, n)
    if len(right) != len(left):
        raise ValueError(f"columns {right} | {left} differ in height")
    verdict = classify_pair(right, left, n)
    kind = verdict[0] if verdict is not None else "pair"
    return Block(kind, (tuple(right), tuple(left)))


def is_readable_block(block: Block) -> bool:
    return block.kind in ("single", "ls", "zero")


def is_readable_key(key: ReadableKey) -> bool:
    """Whether every block is an LS block or a zero block."""
    return all(is_readable_block(b) for b in key.blocks)


def n_statistic(w: Word, m: int) -> int:
    """Count of letters x with x <= m or bar(m) <= x; equivalently |x| <= m."""
    return sum(1 for x in w if abs(x) <= m)


def _split_word_form(w: Word, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split into ascending unbarred then ascending barred parts, or raise."""
    r = 0
    while r < len(w) and w[r] > 0:
        r += 1
    unbarred, barred = w[:r], w[r:]
    for x in barred:
        validate_letter(x, n)
        if x > 0:
            raise ValueError(f"word {w} mixes unbarred letters into the barred part")
    for part in (unbarred, barred):
        ranks = [letter_rank(x, n) for x in part]
        if any(ranks[t] >= ranks[t + 1] for t in range(len(ranks) - 1)):
            raise ValueError(f"word {w} is not strictly increasing within its parts")
    for x in unbarred:
        validate_letter(x, n)
    return unbarred, barred


def is_admissible_word(w: Word, n: int) -> bool:
    """Whether N(w, m) <= m holds for all m <= n.

    The word must consist of strictly ascending unbarred letters followed by
    strictly ascending barred letters.
    """
    _split_word_form(w, n)
    return all(n_statistic(w, m) <= m for m in range(1, n + 1))


def block_from_admissible_word(w: Word, n: int) -> Optional[Block]:
    """Reconstruct the unique LS pair with the given word, or None.

    Returns None when the word is admissible of length 0 (no block) or when
    no LS block has this word.  Raises on words of the wrong form.
    """
    unbarred, barred = _split_word_form(w, n)
    if not w:
        return None
    U = set(unbarred)
    V = {-x for x in barred}
    Z = U & V
    A = U - Z
    B = V - Z
    T = compute_T(A, B, Z, n)
    if T is None:
        return None
    right = sorted_column(list(Z | A) + [-t for t in T] + [-b for b in B], n)
    left = sorted_column(list(set(T) | A) + [-z for z in Z] + [-b for b in B], n)
    return Block("ls", (right, left))


def word_of_block(block: Block) -> Word:
    """Unbarred entries of the right column, then barred entries of the left."""
    if block.kind == "single":
        return block.columns[0]
    right, left = block.columns
    return tuple(x for x in right if x > 0) + tuple(x for x in left if x < 0)


def word_of_key(key: ReadableKey) -> Word:
    """Concatenation of the block words in traversal order."""
    out: list[int] = []
    for block in key.blocks:
        out.extend(word_of_block(block))
    return tuple(out)


def shape_of_key(key: ReadableKey) -> tuple[int, ...]:
    """Column heights in traversal order."""
    heights: list[int] = []
    for block in key.blocks:
        heights.extend(len(c) for c in block.columns)
    return tuple(heights)


def coweight_of_shape(shape, n: int) -> Coweight:
    """Sum of fundamental coweights after grouping the shape into blocks.

    A height-1 column stands alone; larger heights must come in equal pairs.
    """
    total = Coweight.zero(n)
    i = 0
    shape = tuple(shape)
    while i < len(shape):
        h = shape[i]
        if not 1 <= h <= n:
            raise ValueError(f"column height {h} out of range 1..{n}")
        if h == 1:
            total = total + fundamental_coweight(1, n)
            i += 1
        else:
            if i + 1 >= len(shape) or shape[i + 1] != h:
                raise ValueError(f"shape {shape} does not group into readable blocks")
            total = total + fundamental_coweight(h, n)
            i += 2
    return total


def key_coweight(key: ReadableKey, n: int) -> Coweight:
    """The coweight attached to the shape of the key."""
    total = Coweight.zero(n)
    for block in key.blocks:
        total = total + fundamental_coweight(block.height if block.column_count() == 2 else 1, n)
    return total


def highest_ls_key(lam: Coweight, n: int) -> ReadableKey:
    """The dominant LS key of weight lam: per omega_l, a block with all
    columns equal to (1, ..., l), listed by increasing height."""
    if lam.rank != n:
        raise ValueError("rank mismatch")
    if not lam.is_integral() or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant integral coweight")
    coords = [d // 2 for d in lam.doubled]
    blocks: list[Block] = []
    for l in range(1, n + 1):
        mult = coords[l - 1] - (coords[l] if l < n else 0)
        for _ in range(mult):
            if l == 1:
                blocks.append(single_block(1, n))
            else:
                col = tuple(range(1, l + 1))
                blocks.append(Block("ls", (col, col)))
    return ReadableKey(tuple(blocks))


def validate_key(key: ReadableKey, n: int) -> None:
    for block in key.blocks:
        if block.kind == "single":
            if block.column_count() != 1 or block.height != 1:
                raise ValueError(f"malformed single block {block}")
            validate_letter(block.columns[0][0], n)
        elif block.kind in ("ls", "zero", "pair"):
            if block.column_count() != 2:
                raise ValueError(f"pair block {block} must have two columns")
            right, left = block.columns
            validate_column(right, n)
            validate_column(left, n)
            if len(right) != len(left):
                raise ValueError(f"pair block {block} has columns of unequal height")
            verdict = classify_pair(right, left, n)
            actual = verdict[0] if verdict is not None else "pair"
            if actual != block.kind:
                raise ValueError(f"block {block} fails its {block.kind} classification")
        else:
            raise ValueError(f"unknown block kind {block.kind!r}")


def key_to_json_obj(key: ReadableKey) -> dict:
    blocks = []
    for block in key.blocks:
        kind = "single" if block.kind == "single" else "pair"
        blocks.append({"kind": kind, "columns": [list(c) for c in block.columns]})
    return {"blocks": blocks}


def key_from_json_obj(obj, n: int) -> ReadableKey:
    if not isinstance(obj, dict) or "blocks" not in obj:
        raise ValueError("key JSON must be an object with a 'blocks' list")
    blocks: list[Block] = []
    for item in obj["blocks"]:
        kind = item.get("kind")
        cols = [tuple(c) for c in item.get("columns", [])]
        if kind == "single":
            if len(cols) != 1 or len(cols[0]) != 1:
                raise ValueError(f"single block must have one 1-letter column, got {cols}")
            blocks.append(single_block(cols[0][0], n))
        elif kind == "pair":
            if len(cols) != 2:
                raise ValueError(f"pair block must have two columns, got {cols}")
            blocks.append(pair_block(cols[0], cols[1], n))
        else:
            raise ValueError(f"unknown block kind {kind!r}")
    return ReadableKey(tuple(blocks))


def render_key(key: ReadableKey) -> str:
    """ASCII picture in display order: rightmost traversal block last,
    pair columns shown left column first, rows top-aligned."""
    display: list[Column] = []
    for block in reversed(key.blocks):
        display.extend(reversed(block.columns))
    if not display:
        return "(empty key)"
    height = max(len(c) for c in display)
    width = max(len(str(x)) for c in display for x in c)
    rows = []
    for r in range(height):
        cells = [str(c[r]).rjust(width) if r < len(c) else " " * width for c in display]
        rows.append(" ".join(cells).rstrip())
    return "\n".join(rows)


def rows_weakly_increasing(key: ReadableKey, n: int) -> bool:
    """Diagnostic: weakly increasing rows under top alignment, display order."""
    display: list[Column] = []
    for block in reversed(key.blocks):
        display.extend(reversed(block.columns))
    height = max((len(c) for c in display), default=0)
    for r in range(height):
        row = [c[r] for c in display if r < len(c)]
        ranks = [letter_rank(x, n) for x in row]
        if any(ranks[t] > ranks[t + 1] for t in range(len(ranks) - 1)):
            return False
    return True
