"""Report figures.  Uses the Agg backend so it runs headless."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .bruhat import BruhatGraph  # noqa: E402
from .export import element_label  # noqa: E402


def plot_census(records, path, title=None):
    """Interval size against region count, plus the (*) census per Coxeter length."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))
    good = [r for r in records if r.star]
    bad = [r for r in records if not r.star]
    ax1.scatter([r.interval_size for r in good], [r.nbc_count for r in good],
                s=14, c="tab:blue", label="#reg = #[e,w]", alpha=0.7)
    ax1.scatter([r.interval_size for r in bad], [r.nbc_count for r in bad],
                s=18, c="tab:red", marker="x", label="#reg < #[e,w]")
    top = max((r.interval_size for r in records), default=1)
    ax1.plot([1, top], [1, top], color="0.6", lw=0.8, ls="--")
    ax1.set_xlabel("|[e, w]|")
    ax1.set_ylabel("#NBC = #regions")
    ax1.legend(frameon=False, fontsize=8)

    lengths = sorted({r.length for r in records})
    yes = Counter(r.length for r in good)
    no = Counter(r.length for r in bad)
    ax2.bar(lengths, [yes[k] for k in lengths], color="tab:blue", label="(*) holds")
    ax2.bar(lengths, [no[k] for k in lengths], bottom=[yes[k] for k in lengths],
            color="tab:red", label="(*) fails")
    ax2.set_xlabel("Coxeter length")
    ax2.set_ylabel("elements")
    ax2.legend(frameon=False, fontsize=8)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_bruhat_graph(graph: BruhatGraph, path, title=None):
    """Layered drawing: covering edges straight, non-covering edges curved and dashed."""
    W = graph.system
    lengths = W.lengths
    layers: dict[int, list[int]] = {}
    for i in sorted(graph.interval.members, key=lambda i: (lengths[i], i)):
        layers.setdefault(lengths[i], []).append(i)
    width = max(len(v) for v in layers.values())
    pos = {}
    for lvl, row in layers.items():
        for k, i in enumerate(row):
            pos[i] = ((k + 0.5) * width / len(row), lvl)

    fig, ax = plt.subplots(figsize=(max(4, 1.1 * width), max(3, 1.2 * (len(layers) + 1))))
    for u, v, r in graph.edges:
        cover = graph.is_covering((u, v, r))
        arrow = FancyArrowPatch(
            pos[u], pos[v], arrowstyle="-|>", mutation_scale=8, shrinkA=9, shrinkB=9,
            connectionstyle="arc3" if cover else "arc3,rad=0.35",
            linestyle="-" if cover else "--", color="0.25" if cover else "tab:red", lw=0.8)
        ax.add_patch(arrow)
    for i, (x, y) in pos.items():
        ax.text(x, y, element_label(W, W.elements[i]), ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round,pad=0.2", fc="white", ec="0.7", lw=0.5))
    ax.set_xlim(-0.2, width + 0.2)
    ax.set_ylim(-0.6, max(layers) + 0.6)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
