"""Crystal graph generation, enumeration of readable keys per template,
dominant-word counts, and fiber queries."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InternalError
from .galleries import (
    Gallery,
    e_gallery,
    e_key,
    f_gallery,
    f_key,
    gallery_to_json_obj,
    weight_of_gallery,
)
from .keys import (
    Block,
    ReadableKey,
    compute_T,
    key_coweight,
    key_to_json_obj,
    single_block,
    sorted_column,
    zero_block,
)
from .rootdata import Coweight
from .words import (
    Word,
    e_word,
    f_word,
    format_word,
    is_dominant_word,
    weight_of_word,
)

Element = Union[Word, ReadableKey, Gallery]

# A template entry is "single" or ("pair", height).
TemplateEntry = Union[str, tuple[str, int]]


def alphabet(n: int) -> tuple[int, ...]:
    """All letters in alphabet order: 1, ..., n, -n, ..., -1."""
    return tuple(range(1, n + 1)) + tuple(range(-n, 0))


def serialize_element(elem: Element) -> str:
    if isinstance(elem, Gallery):
        return json.dumps(gallery_to_json_obj(elem), sort_keys=True, separators=(",", ":"))
    if isinstance(elem, ReadableKey):
        return json.dumps(key_to_json_obj(elem), sort_keys=True, separators=(",", ":"))
    return format_word(elem)


def apply_f(elem: Element, i: int, n: int):
    if isinstance(elem, Gallery):
        return f_gallery(elem, i, n)
    if isinstance(elem, ReadableKey):
        return f_key(elem, i, n)
    return f_word(elem, i, n)


def apply_e(elem: Element, i: int, n: int):
    if isinstance(elem, Gallery):
        return e_gallery(elem, i, n)
    if isinstance(elem, ReadableKey):
        return e_key(elem, i, n)
    return e_word(elem, i, n)


def weight_of_element(elem: Element, n: int) -> Coweight:
    if isinstance(elem, Gallery):
        return weight_of_gallery(elem)
    if isinstance(elem, ReadableKey):
        from .galleries import gallery_of_key

        return weight_of_gallery(gallery_of_key(elem, n))
    return weight_of_word(elem, n)


@dataclass(frozen=True)
class CrystalGraph:
    """A connected crystal component with serialized nodes in sorted order."""

    nodes: tuple[str, ...]
    weights: tuple[Coweight, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, index i)
    highest: int

    def size(self) -> int:
        return len(self.nodes)

    def to_json_obj(self) -> dict:
        return {
            "nodes": [
                {"element": s, "weight": list(w.doubled)}
                for s, w in zip(self.nodes, self.weights)
            ],
            "edges": [list(e) for e in self.edges],
            "highest": self.highest,
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  node [shape=box];"]
        for idx, (s, w) in enumerate(zip(self.nodes, self.weights)):
            label = s if s else "(empty)"
            lines.append(f'  n{idx} [label="{label}\\nwt {w}"];')
        for src, dst, i in self.edges:
            lines.append(f'  n{src} -> n{dst} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def generate_component(seed: Element, n: int) -> CrystalGraph:
    """Close the seed under all raising and lowering operators."""
    elements: dict[str, Element] = {serialize_element(seed): seed}
    frontier = [seed]
    f_images: dict[tuple[str, int], str] = {}
    while frontier:
        elem = frontier.pop()
        serial = serialize_element(elem)
        for i in range(1, n + 1):
            down = apply_f(elem, i, n)
            if down is not None:
                dserial = serialize_element(down)
                f_images[(serial, i)] = dserial
                if dserial not in elements:
                    elements[dserial] = down
                    frontier.append(down)
            up = apply_e(elem, i, n)
            if up is not None:
                userial = serialize_element(up)
                f_images[(userial, i)] = serial
                if userial not in elements:
                    elements[userial] = up
                    frontier.append(up)
    nodes = tuple(sorted(elements))
    index = {s: k for k, s in enumerate(nodes)}
    weights = tuple(weight_of_element(elements[s], n) for s in nodes)
    edges = tuple(
        sorted((index[src], index[dst], i) for (src, i), dst in f_images.items())
    )
    raising_targets = {(dst, i) for src, dst, i in edges}
    highest_nodes = [
        k
        for k, s in enumerate(nodes)
        if all((k, i) not in raising_targets for i in range(1, n + 1))
    ]
    if len(highest_nodes) != 1:
        raise InternalError(f"component has {len(highest_nodes)} highest nodes")
    return CrystalGraph(nodes, weights, edges, highest_nodes[0])


def weight_multiplicities(graph: CrystalGraph) -> dict[Coweight, int]:
    counts: dict[Coweight, int] = {}
    for w in graph.weights:
        counts[w] = counts.get(w, 0) + 1
    return counts


def count_dominant_words(length: int, n: int) -> dict[Coweight, int]:
    """Number of dominant words of the given length per endpoint weight."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    counts: dict[Coweight, int] = {}
    for letters in itertools.product(alphabet(n), repeat=length):
        if is_dominant_word(letters, n):
            w = weight_of_word(letters, n)
            counts[w] = counts.get(w, 0) + 1
    return counts


def enumerate_ls_pair_blocks(height: int, n: int) -> list[Block]:
    """All LS pair blocks of the given column height, by direct construction
    over disjoint (A, B, Z) with the companion set filled in greedily."""
    if not 1 <= height <= n:
        return []
    blocks: list[Block] = []
    letters = range(1, n + 1)
    for k in range(height // 2 + 1):
        rem = height - 2 * k
        for Z in itertools.combinations(letters, k):
            others = [x for x in letters if x not in Z]
            for support in itertools.combinations(others, rem):
                for picks in itertools.product((0, 1), repeat=rem):
                    A = {x for x, p in zip(support, picks) if p == 0}
                    B = {x for x, p in zip(support, picks) if p == 1}
                    T = compute_T(A, B, Z, n)
                    if T is None:
                        continue
                    right = sorted_column(
                        sorted(set(Z) | A) + [-t for t in T] + [-b for b in B], n
                    )
                    left = sorted_column(
                        sorted(set(T) | A) + [-z for z in Z] + [-b for b in B], n
                    )
                    blocks.append(Block("ls", (right, left)))
    blocks.sort(key=lambda b: b.columns)
    return blocks


def enumerate_blocks(entry: TemplateEntry, n: int) -> list[Block]:
    """All readable blocks fitting one template slot."""
    if entry == "single":
        return [single_block(x, n) for x in alphabet(n)]
    kind, height = entry
    if kind != "pair":
        raise ValueError(f"unknown template entry {entry!r}")
    blocks = enumerate_ls_pair_blocks(height, n)
    if 1 <= height <= n:
        blocks.append(zero_block(height, n))
    return blocks


def enumerate_readable_keys(template: Iterable[TemplateEntry], n: int) -> list[ReadableKey]:
    """All valid readable keys of the template, in deterministic order."""
    slot_choices = [enumerate_blocks(entry, n) for entry in template]
    return [ReadableKey(combo) for combo in itertools.product(*slot_choices)]


def fiber(template: Iterable[TemplateEntry], target: ReadableKey, n: int) -> list[ReadableKey]:
    """Keys of the template whose words are plactic equivalent to the
    target's word."""
    from .plactic import plactic_equivalent
    from .keys import word_of_key

    target_word = word_of_key(target)
    return [
        key
        for key in enumerate_readable_keys(template, n)
        if plactic_equivalent(word_of_key(key), target_word, n)
    ]


def parse_template(obj, n: int) -> tuple[TemplateEntry, ...]:
    """Parse a template from JSON: entries "single" or ["pair", height]."""
    entries: list[TemplateEntry] = []
    if not isinstance(obj, list):
        raise ValueError("template must be a JSON list")
    for item in obj:
        if item == "single":
            entries.append("single")
        elif isinstance(item, list) and len(item) == 2 and item[0] == "pair":
            height = item[1]
            if not isinstance(height, int) or not 1 <= height <= n:
                raise ValueError(f"pair height {height!r} out of range 1..{n}")
            entries.append(("pair", height))
        else:
            raise ValueError(f"unknown template entry {item!r}")
    return tuple(entries)


def highest_weight_of_component(seed: Element, n: int) -> Coweight:
    graph = generate_component(seed, n)
    return graph.weights[graph.highest]


def key_weight(key: ReadableKey, n: int) -> Coweight:
    return key_coweight(key, n)
