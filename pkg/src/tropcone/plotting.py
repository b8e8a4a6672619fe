"""Planar pictures of cones in dimension 3, drawn in the chart ``(x2 - x1, x3 - x1)``."""
from __future__ import annotations

from typing import Sequence

from .cone import Cone
from .errors import PreconditionError
from .halfspace import HalfSpace
from .semiring import Point

# boundary ray between sectors i and j of a hyperplane, as a chart direction
RAY_DIRECTIONS = {
    frozenset({0, 1}): (0, -1),
    frozenset({0, 2}): (-1, 0),
    frozenset({1, 2}): (1, 1),
}


def chart(x: Sequence) -> tuple:
    return (x[1] - x[0], x[2] - x[0])


def tropical_segment(u: Sequence, v: Sequence) -> list:
    """Chart polyline of the tropical segment from ``v`` to ``u``.

    Points ``max(u + t, v)`` for increasing ``t``; the path only bends where
    ``t`` crosses some ``v_i - u_i``.
    """
    ts = sorted({vi - ui for ui, vi in zip(u, v)})
    pts = [chart(Point(max(ui + t, vi) for ui, vi in zip(u, v))) for t in ts]
    out = []
    for p in [chart(Point(v))] + pts + [chart(Point(u))]:
        if not out or out[-1] != p:
            out.append(p)
    return out


def boundary_rays(h: HalfSpace) -> list:
    """Rays of the hyperplane at the apex separating a sector of ``h`` from one outside."""
    return [
        {"from": chart(h.apex), "direction": d, "pair": sorted(pair)}
        for pair, d in RAY_DIRECTIONS.items()
        if len(pair & h.sectors) == 1
    ]


def plot_data(c: Cone, halfspaces: Sequence = ()) -> dict:
    if c.n != 3:
        raise PreconditionError(f"planar plots need dimension 3, got {c.n}")
    gens = c.generators
    segments = [tropical_segment(gens[r], gens[s]) for r in range(len(gens)) for s in range(r + 1, len(gens))]
    layers = {
        "generators": [chart(v) for v in gens],
        "cone_segments": segments,
        "apices": [],
        "halfspaces": [],
    }
    for h in halfspaces:
        if not isinstance(h, HalfSpace):
            raise PreconditionError("only non-degenerate half-spaces can be drawn")
        if h.n != 3:
            raise PreconditionError(f"half-space has dimension {h.n}")
        layers["apices"].append(chart(h.apex))
        layers["halfspaces"].append({"apex": chart(h.apex), "sectors": sorted(i + 1 for i in h.sectors), "rays": boundary_rays(h)})
    return layers


def render(layers: dict, path: str, title: str = "") -> None:
    """Draw plot data with matplotlib (Agg) into ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pts = [tuple(map(float, p)) for p in layers["generators"] + layers["apices"]]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    reach = 2 * span

    fig, ax = plt.subplots(figsize=(5, 5))
    for seg in layers["cone_segments"]:
        ax.plot([float(p[0]) for p in seg], [float(p[1]) for p in seg], color="0.3", lw=1.2)
    for k, h in enumerate(layers["halfspaces"]):
        color = f"C{k % 10}"
        for ray in h["rays"]:
            x0, y0 = map(float, ray["from"])
            dx, dy = ray["direction"]
            ax.plot([x0, x0 + reach * dx], [y0, y0 + reach * dy], color=color, lw=1)
        ax.plot(*map(float, h["apex"]), "o", color=color, ms=5)
    ax.plot(xs[: len(layers["generators"])], ys[: len(layers["generators"])], "ks", ms=5)
    ax.set_xlim(min(xs) - span / 2, max(xs) + span / 2)
    ax.set_ylim(min(ys) - span / 2, max(ys) + span / 2)
    ax.set_aspect("equal")
    ax.set_xlabel("x2 - x1")
    ax.set_ylabel("x3 - x1")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
