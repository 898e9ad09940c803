"""Load-bearing wall crossings per gallery step and the resulting cell
dimension, for comparison against the dimension bound <rho, lam + mu>."""

from __future__ import annotations

from .galleries import Gallery
from .rootdata import AffineRoot, pairing2, root_system


def load_bearing_roots(g: Gallery, step: int, n: int) -> tuple[AffineRoot, ...]:
    """Affine roots (alpha, m) whose wall contains the step's start vertex
    with the end vertex strictly on the positive side.

    Only integral levels index walls; half-integral pairings at block
    midpoints contribute nothing.
    """
    if not 0 <= step <= g.steps - 1:
        raise ValueError(f"step {step} out of range 0..{g.steps - 1}")
    start, end = g.vertices[step], g.vertices[step + 1]
    out = []
    for alpha in root_system(n).positive_roots:
        a = pairing2(alpha, start)
        if a % 2 == 0 and pairing2(alpha, end) > a:
            out.append(AffineRoot(alpha, a // 2))
    out.sort()
    return tuple(out)


def crossing_data(g: Gallery, n: int) -> tuple[tuple[AffineRoot, ...], ...]:
    """Per-step sets of load-bearing affine roots."""
    return tuple(load_bearing_roots(g, step, n) for step in range(g.steps))


def cell_dimension(g: Gallery, n: int) -> int:
    """Total number of load-bearing wall crossings over all steps."""
    return sum(len(walls) for walls in crossing_data(g, n))


def crossing_data_to_json_obj(data) -> list:
    return [
        [{"root": list(ar.root), "level": ar.level} for ar in walls] for walls in data
    ]
