"""The symplectic plactic monoid: relation instances, a bounded congruence
closure used as a testing oracle, the crystal-side equivalence decision, and
the canonical-LS-key normalizer.

Equivalence is decided on the crystal side; the rewriting closure exists only
for finite-scale cross-checks, since confluence of the rules is not assumed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalError
from .galleries import f_key
from .keys import ReadableKey, highest_ls_key, is_admissible_word
from .words import Word, letter_rank, raise_word, validate_word, weight_of_word, words_equivalent


@dataclass(frozen=True)
class RelationInstance:
    """One applicable rewrite: replace w[start:end] by the given segment."""

    rule: str  # R1a | R1b | R2a | R2b | R3 | R3rev
    start: int
    end: int
    replacement: Word


def apply_site(w: Word, site: RelationInstance) -> Word:
    return w[: site.start] + site.replacement + w[site.end :]


class ClosureResult(NamedTuple):
    words: tuple[Word, ...]
    complete: bool


def _le(x: int, y: int, n: int) -> bool:
    return letter_rank(x, n) <= letter_rank(y, n)


def _lt(x: int, y: int, n: int) -> bool:
    return letter_rank(x, n) < letter_rank(y, n)


def _r1a_ok(x: int, y: int, z: int, n: int) -> bool:
    # y x z == y z x  for x <= y < z, z != bar(x)
    return _le(x, y, n) and _lt(y, z, n) and z != -x


def _r1b_ok(x: int, y: int, z: int, n: int) -> bool:
    # x z y == z x y  for x < y <= z, z != bar(x)
    return _lt(x, y, n) and _le(y, z, n) and z != -x


def _r2_y_ok(x: int, y: int, n: int) -> bool:
    # 1 < x <= n and x <= y <= bar(x)
    return 1 < x <= n and letter_rank(x, n) <= letter_rank(y, n) <= letter_rank(-x, n)


def _window_sites(w: Word, n: int) -> list[RelationInstance]:
    sites: list[RelationInstance] = []
    for t in range(len(w) - 2):
        a, b, c = w[t], w[t + 1], w[t + 2]
        span = (t, t + 3)
        # R1a in both directions swaps the last two letters.
        if _r1a_ok(b, a, c, n) or _r1a_ok(c, a, b, n):
            sites.append(RelationInstance("R1a", *span, (a, c, b)))
        # R1b in both directions swaps the first two letters.
        if _r1b_ok(a, c, b, n) or _r1b_ok(b, c, a, n):
            sites.append(RelationInstance("R1b", *span, (b, a, c)))
        # R2a:  y bar(x-1) (x-1)  ==  y x bar(x)
        if c > 0 and b == -c and c + 1 <= n and _r2_y_ok(c + 1, a, n):
            x = c + 1
            sites.append(RelationInstance("R2a", *span, (a, x, -x)))
        if b > 0 and c == -b and _r2_y_ok(b, a, n):
            x = b
            sites.append(RelationInstance("R2a", *span, (a, -(x - 1), x - 1)))
        # R2b:  bar(x-1) (x-1) y  ==  x bar(x) y
        if b > 0 and a == -b and b + 1 <= n and _r2_y_ok(b + 1, c, n):
            x = b + 1
            sites.append(RelationInstance("R2b", *span, (x, -x, c)))
        if a > 0 and b == -a and _r2_y_ok(a, c, n):
            x = a
            sites.append(RelationInstance("R2b", *span, (-(x - 1), x - 1, c)))
    return sites


def _run_before(w: Word, p: int, z: int) -> int:
    """Length of the longest ascending unbarred run below z ending at p."""
    r = 0
    while p - r - 1 >= 0:
        t = p - r - 1
        if w[t] <= 0 or w[t] >= z:
            break
        if r > 0 and w[t] >= w[t + 1]:
            break
        r += 1
    return r


def _run_after(w: Word, p: int, z: int) -> int:
    """Length of the longest barred run with values below z starting at p,
    ascending in the alphabet order."""
    s = 0
    while p + s < len(w):
        t = p + s
        if w[t] >= 0 or -w[t] >= z:
            break
        if s > 0 and -w[t] >= -w[t - 1]:
            break
        s += 1
    return s


def _r3_sites(w: Word, n: int) -> list[RelationInstance]:
    sites: list[RelationInstance] = []
    # Contractions: remove an adjacent (z, bar z) dominating its context.
    for p in range(len(w) - 1):
        z = w[p]
        if z <= 0 or w[p + 1] != -z:
            continue
        rmax = _run_before(w, p, z)
        smax = _run_after(w, p + 2, z)
        for r in range(rmax + 1):
            for s in range(smax + 1):
                seg = w[p - r : p + 2 + s]
                if not is_admissible_word(seg, n):
                    sites.append(
                        RelationInstance("R3", p - r, p + 2 + s, seg[:r] + seg[r + 2 :])
                    )
    # Expansions: insert (z, bar z) so that the produced segment is not the
    # word of an LS block.
    for p in range(len(w) + 1):
        for z in range(1, n + 1):
            rmax = _run_before(w, p, z)
            smax = _run_after(w, p, z)
            for r in range(rmax + 1):
                for s in range(smax + 1):
                    seg = w[p - r : p] + (z, -z) + w[p : p + s]
                    if not is_admissible_word(seg, n):
                        sites.append(RelationInstance("R3rev", p - r, p + s, seg))
    return sites


def rewrite_sites(w: Word, n: int) -> list[RelationInstance]:
    """All applicable relation instances at all positions, deterministically
    ordered."""
    validate_word(w, n)
    sites = _window_sites(w, n) + _r3_sites(w, n)
    sites.sort(key=lambda s: (s.start, s.end, s.rule, s.replacement))
    return sites


def plactic_closure(w: Word, n: int, length_budget: int, step_budget: int) -> ClosureResult:
    """Breadth-first closure under all rewrite sites, pruning words longer
    than length_budget.  The complete flag is False when the step budget ran
    out with work remaining."""
    if length_budget <= 0 or step_budget <= 0:
        raise ValueError("budgets must be positive")
    validate_word(w, n)
    seen = {w}
    queue: deque[Word] = deque([w])
    steps = 0
    complete = True
    while queue:
        if steps >= step_budget:
            complete = False
            break
        cur = queue.popleft()
        steps += 1
        for site in rewrite_sites(cur, n):
            nxt = apply_site(cur, site)
            if len(nxt) <= length_budget and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return ClosureResult(tuple(sorted(seen, key=lambda v: (len(v), v))), complete)


def plactic_equivalent(w1: Word, w2: Word, n: int) -> bool:
    """Plactic congruence, decided through the crystal equivalence."""
    return words_equivalent(w1, w2, n)


def canonical_ls_key(w: Word, n: int) -> ReadableKey:
    """The unique LS key whose word is plactic equivalent to w.

    The greedy raising path of w is inverted on the dominant LS key of the
    raised weight.
    """
    raised, path = raise_word(w, n)
    key = highest_ls_key(weight_of_word(raised, n), n)
    for i in reversed(path):
        nxt = f_key(key, i, n)
        if nxt is None:
            raise InternalError(f"transported lowering operator f_{i} vanished")
        key = nxt
    return key
