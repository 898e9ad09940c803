"""Combinatorial one-skeleton galleries as vertex chains, the geometric root
operators, and conversions to and from words and readable keys.

A gallery stores its vertices only; every operator is piecewise affine and the
pieces agree at the cut indices, so edges are implicit.  The optional template
records how edges group into blocks ("single" = one edge, "pair" = two).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded, InternalError
from .keys import Block, ReadableKey, single_block, pair_block, sorted_column, validate_key
from .rootdata import Coweight, coroot_vec, is_dominant, pairing2, simple_root
from .words import Word, validate_index, validate_word


@dataclass(frozen=True)
class Gallery:
    vertices: tuple[Coweight, ...]
    template: Optional[tuple[str, ...]] = None

    @property
    def rank(self) -> int:
        return self.vertices[0].rank

    @property
    def steps(self) -> int:
        return len(self.vertices) - 1


def weight_of_gallery(g: Gallery) -> Coweight:
    return g.vertices[-1]


def gallery_of_word(w: Word, n: int) -> Gallery:
    """The gallery whose vertices are the prefix weights of the word."""
    validate_word(w, n)
    coords = [0] * n
    verts = [Coweight.zero(n)]
    for x in w:
        coords[abs(x) - 1] += 2 if x > 0 else -2
        verts.append(Coweight(tuple(coords)))
    return Gallery(tuple(verts), ("single",) * len(w))


def _column_step(col, n: int) -> tuple[int, ...]:
    """Doubled coordinates of half the signed sum of a column."""
    coords = [0] * n
    for x in col:
        coords[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(coords)


def gallery_of_key(key: ReadableKey, n: int) -> Gallery:
    """Concatenate block galleries: one edge per single box, two per pair,
    the pair midpoint sitting at half the right column's signed sum."""
    validate_key(key, n)
    verts = [Coweight.zero(n)]
    template: list[str] = []
    cur = verts[0]
    for block in key.blocks:
        if block.kind == "single":
            x = block.columns[0][0]
            step = [0] * n
            step[abs(x) - 1] = 2 if x > 0 else -2
            cur = cur + Coweight(tuple(step))
            verts.append(cur)
            template.append("single")
        else:
            right, left = block.columns
            cur = cur + Coweight(_column_step(right, n))
            verts.append(cur)
            cur = cur + Coweight(_column_step(left, n))
            verts.append(cur)
            template.append("pair")
    return Gallery(tuple(verts), tuple(template))


def _column_of_step(delta: Coweight, n: int):
    letters = []
    for k, d in enumerate(delta.doubled):
        if d == 1:
            letters.append(k + 1)
        elif d == -1:
            letters.append(-(k + 1))
        elif d != 0:
            raise ValueError(f"step {delta} is not of half-unit block form")
    if not letters:
        raise ValueError("degenerate block step")
    return sorted_column(letters, n)


def key_of_gallery(g: Gallery, n: int) -> ReadableKey:
    """Inverse of gallery_of_key for galleries carrying a template."""
    if g.template is None:
        raise ValueError("gallery has no block template")
    blocks: list[Block] = []
    pos = 0
    for kind in g.template:
        if kind == "single":
            delta = g.vertices[pos + 1] - g.vertices[pos]
            nz = [(k, d) for k, d in enumerate(delta.doubled) if d != 0]
            if len(nz) != 1 or abs(nz[0][1]) != 2:
                raise ValueError(f"step {delta} is not a signed unit edge")
            k, d = nz[0]
            blocks.append(single_block(k + 1 if d > 0 else -(k + 1), n))
            pos += 1
        elif kind == "pair":
            right = _column_of_step(g.vertices[pos + 1] - g.vertices[pos], n)
            left = _column_of_step(g.vertices[pos + 2] - g.vertices[pos + 1], n)
            blocks.append(pair_block(right, left, n))
            pos += 2
        else:
            raise ValueError(f"unknown template entry {kind!r}")
    if pos != g.steps:
        raise ValueError("template does not match the number of edges")
    return ReadableKey(tuple(blocks))


def _pairings2(g: Gallery, i: int, n: int) -> list[int]:
    alpha = simple_root(i, n)
    return [pairing2(alpha, v) for v in g.vertices]


def m_min(g: Gallery, i: int, n: int) -> int:
    """Minimal integer m with some vertex on the wall <alpha_i, x> = m.

    The start vertex 0 always supplies the value 0, so m <= 0.
    """
    validate_index(i, n)
    p2 = _pairings2(g, i, n)
    return min(p for p in p2 if p % 2 == 0) // 2


def f_gallery(g: Gallery, i: int, n: int) -> Optional[Gallery]:
    """Geometric lowering operator: reflect the stretch between the last
    visit to the minimal wall and the first rise one level above it, then
    translate the tail down by the coroot."""
    validate_index(i, n)
    alpha = simple_root(i, n)
    co = coroot_vec(alpha, n)
    p2 = _pairings2(g, i, n)
    m2 = min(p for p in p2 if p % 2 == 0)
    if p2[-1] < m2 + 2:
        return None
    j = max(t for t, p in enumerate(p2) if p == m2)
    try:
        r0 = next(t for t in range(j + 1, len(p2)) if p2[t] == m2 + 2)
    except StopIteration:
        raise InternalError(f"no vertex reaches level m+1 after index {j} for i={i}")
    new = []
    for t, v in enumerate(g.vertices):
        if t <= j:
            new.append(v)
        elif t < r0:
            factor = p2[t] - m2
            new.append(Coweight(tuple(d - factor * c for d, c in zip(v.doubled, co))))
        else:
            new.append(Coweight(tuple(d - 2 * c for d, c in zip(v.doubled, co))))
    return Gallery(tuple(new), g.template)


def e_gallery(g: Gallery, i: int, n: int) -> Optional[Gallery]:
    """Geometric raising operator, the mirror of f_gallery one level up."""
    validate_index(i, n)
    alpha = simple_root(i, n)
    co = coroot_vec(alpha, n)
    p2 = _pairings2(g, i, n)
    m2 = min(p for p in p2 if p % 2 == 0)
    if m2 == 0:
        return None
    r0 = next(t for t, p in enumerate(p2) if p == m2)
    j = None
    for t in range(r0 - 1, -1, -1):
        if p2[t] == m2 + 2:
            j = t
            break
    if j is None:
        raise InternalError(f"no vertex sits at level m+1 before index {r0} for i={i}")
    new = []
    for t, v in enumerate(g.vertices):
        if t <= j:
            new.append(v)
        elif t < r0:
            factor = p2[t] - (m2 + 2)
            new.append(Coweight(tuple(d - factor * c for d, c in zip(v.doubled, co))))
        else:
            new.append(Coweight(tuple(d + 2 * c for d, c in zip(v.doubled, co))))
    return Gallery(tuple(new), g.template)


def is_dominant_gallery(g: Gallery) -> bool:
    """All vertices in the closed dominant chamber (edges follow by convexity)."""
    return all(is_dominant(v) for v in g.vertices)


def raise_gallery(g: Gallery, n: int, budget: int = 10000) -> tuple[Gallery, tuple[int, ...]]:
    """Greedy raising at the smallest applicable index until none applies."""
    path: list[int] = []
    cur = g
    for _ in range(budget):
        for i in range(1, n + 1):
            if m_min(cur, i, n) <= -1:
                nxt = e_gallery(cur, i, n)
                cur = nxt
                path.append(i)
                break
        else:
            return cur, tuple(path)
    raise BudgetExceeded(f"raising did not terminate within {budget} steps")


def galleries_equivalent(g1: Gallery, g2: Gallery, n: int, budget: int = 10000) -> bool:
    """Lockstep raising with g1's greedy indices; both must end dominant with
    the same endpoint.  Galleries that cannot be raised to a dominant one are
    never reported equivalent."""
    a, b = g1, g2
    for _ in range(budget):
        for i in range(1, n + 1):
            if m_min(a, i, n) <= -1:
                if m_min(b, i, n) > -1:
                    return False
                a = e_gallery(a, i, n)
                b = e_gallery(b, i, n)
                break
        else:
            return (
                is_dominant_gallery(a)
                and is_dominant_gallery(b)
                and weight_of_gallery(a) == weight_of_gallery(b)
            )
    raise BudgetExceeded(f"raising did not terminate within {budget} steps")


def f_key(key: ReadableKey, i: int, n: int) -> Optional[ReadableKey]:
    """Lowering operator on keys, transported through the gallery model."""
    g = f_gallery(gallery_of_key(key, n), i, n)
    if g is None:
        return None
    return _key_back(g, n)


def e_key(key: ReadableKey, i: int, n: int) -> Optional[ReadableKey]:
    """Raising operator on keys, transported through the gallery model."""
    g = e_gallery(gallery_of_key(key, n), i, n)
    if g is None:
        return None
    return _key_back(g, n)


def _key_back(g: Gallery, n: int) -> ReadableKey:
    try:
        return key_of_gallery(g, n)
    except ValueError as exc:
        raise InternalError(f"operator image left the readable range: {exc}") from exc


def raise_key(key: ReadableKey, n: int) -> tuple[ReadableKey, tuple[int, ...]]:
    raised, path = raise_gallery(gallery_of_key(key, n), n)
    return _key_back(raised, n), path


def is_ls_key(key: ReadableKey, n: int) -> bool:
    """Membership in the crystal component of the dominant LS key of the
    key's shape, decided by raising."""
    from .keys import highest_ls_key, key_coweight

    raised, _ = raise_key(key, n)
    return raised == highest_ls_key(key_coweight(key, n), n)


def gallery_to_json_obj(g: Gallery) -> dict:
    return {
        "vertices": [list(v.doubled) for v in g.vertices],
        "template": list(g.template) if g.template is not None else None,
    }


def gallery_from_json_obj(obj, n: int) -> Gallery:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError("gallery JSON must be an object with a 'vertices' list")
    verts = tuple(Coweight.from_json_obj(v, n) for v in obj["vertices"])
    if not verts:
        raise ValueError("gallery needs at least its start vertex")
    if verts[0] != Coweight.zero(n):
        raise ValueError("gallery must start at the origin")
    if not verts[-1].is_integral():
        raise ValueError("gallery must end at an integral coweight")
    template = obj.get("template")
    if template is not None:
        template = tuple(template)
        edges = sum(1 if t == "single" else 2 for t in template)
        if any(t not in ("single", "pair") for t in template):
            raise ValueError("template entries must be 'single' or 'pair'")
        if edges != len(verts) - 1:
            raise ValueError("template does not match the number of edges")
    return Gallery(verts, template)
