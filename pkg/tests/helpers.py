"""Shared oracles and enumeration helpers for the test suite.

The oracles are written independently of the library paths they check:
the dimension formula builds its own root list, and the word-equivalence
address is just the raising endpoint plus the greedy path.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from symplactic import (
    Coweight,
    ReadableKey,
    raise_word,
)
from symplactic.explorer import alphabet, enumerate_blocks


def weyl_dimension(lam_coords: tuple[int, ...], n: int) -> int:
    """Dimension of the irreducible Sp(2n) module with highest weight
    lam = sum lam_k eps_k, by the product formula over positive roots.

    Uses its own root list; the factor-of-two scaling on the short roots
    cancels in every ratio, so the type-B list works verbatim.
    """
    roots = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for sj in (-1, 1):
                roots.append([1 if k == i else sj if k == j else 0 for k in range(n)])
    rho = list(range(n, 0, -1))
    shifted = [l + r for l, r in zip(lam_coords, rho)]
    result = Fraction(1)
    for alpha in roots:
        num = sum(a * s for a, s in zip(alpha, shifted))
        den = sum(a * r for a, r in zip(alpha, rho))
        result *= Fraction(num, den)
    assert result.denominator == 1
    return int(result)


def all_words(n: int, length: int):
    """All words of exactly the given length over rank n."""
    return itertools.product(alphabet(n), repeat=length)


def words_up_to(n: int, max_len: int):
    for length in range(max_len + 1):
        yield from all_words(n, length)


@lru_cache(maxsize=None)
def word_address(w: tuple[int, ...], n: int):
    """Component address of a word: greedy raising path plus endpoint.

    Two words are crystal equivalent exactly when their addresses agree.
    """
    raised, path = raise_word(w, n)
    return (path, raised)


def all_columns(n: int, height: int):
    return itertools.combinations(alphabet(n), height)


def readable_block_pool(n: int):
    """All readable blocks of any template slot over rank n."""
    pool = list(enumerate_blocks("single", n))
    for height in range(1, n + 1):
        pool.extend(enumerate_blocks(("pair", height), n))
    return pool


def readable_keys_up_to_blocks(n: int, max_blocks: int):
    """All readable keys with at most max_blocks blocks (including the
    empty key)."""
    pool = readable_block_pool(n)
    out = [ReadableKey(())]
    for count in range(1, max_blocks + 1):
        for combo in itertools.product(pool, repeat=count):
            out.append(ReadableKey(combo))
    return out


def dot_halves(a: Coweight, b: Coweight) -> Fraction:
    return sum((x * y for x, y in zip(a.halves(), b.halves())), Fraction(0))
