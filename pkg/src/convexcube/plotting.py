"""Figures for the ``report`` command.

Only the Agg backend is used; figures go straight to files.
"""

from __future__ import annotations

import math
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .lattice import BOTTOM, level  # noqa: E402

_STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.titlesize": 10,
    "savefig.dpi": 150,
}
# PNG metadata carries the matplotlib version; drop it so reruns are stable
_NO_META = {"Software": None}


def _label(t) -> str:
    return "⟨∅⟩" if t is BOTTOM else ", ".join(t)


def plot_emergence_rates(entries, min_ratio, path) -> None:
    """Horizontal bars of emergence rate; infinite rates are capped and hatched."""
    finite = [float(e.rate) for e in entries if e.rate != math.inf]
    cap = max(finite + [float(min_ratio), 1.0]) * 1.25
    labels = [_label(e.tuple) for e in entries]
    values = [cap if e.rate == math.inf else float(e.rate) for e in entries]
    with plt.rc_context(_STYLE):
        height = max(2.0, 0.32 * len(entries) + 1.0)
        fig, ax = plt.subplots(figsize=(6.5, height))
        ys = range(len(entries))
        bars = ax.barh(ys, values, color="#4c72b0")
        for bar, e in zip(bars, entries):
            if e.rate == math.inf:
                bar.set_hatch("//")
                bar.set_facecolor("#dd8452")
                ax.text(bar.get_width(), bar.get_y() + bar.get_height() / 2, " ∞",
                        va="center", ha="left")
        ax.axvline(float(min_ratio), color="k", ls="--", lw=0.8, label=f"MinRatio = {min_ratio}")
        ax.axvline(1.0, color="0.6", ls=":", lw=0.8, label="rate = 1")
        ax.set_yticks(list(ys))
        ax.set_yticklabels(labels)
        ax.invert_yaxis()
        ax.set_xlim(0, cap * 1.08)
        ax.set_xlabel("emergence rate")
        ax.set_title("Emerging tuples")
        if entries:
            ax.legend(loc="lower right", frameon=False)
        fig.tight_layout()
        fig.savefig(path, metadata=_NO_META)
        plt.close(fig)


def plot_level_profile(space, solutions, border, path) -> None:
    """Solution tuples per lattice level against the handful kept in the borders."""
    arity = space.arity
    levels = list(range(arity + 1)) + [arity + 1]

    def lv(t):
        return arity + 1 if t is BOTTOM else level(t)

    sol = Counter(lv(t) for t in solutions)
    g = Counter(lv(t) for t in border.G)
    s = Counter(lv(t) for t in border.S)
    names = [str(k) for k in range(arity + 1)] + ["⟨∅⟩"]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5.5, 3.2))
        w = 0.27
        xs = range(len(levels))
        ax.bar([x - w for x in xs], [sol[k] for k in levels], w, label="cube tuples", color="0.7")
        ax.bar(list(xs), [g[k] for k in levels], w, label="G", color="#55a868")
        ax.bar([x + w for x in xs], [s[k] for k in levels], w, label="S", color="#c44e52")
        ax.set_xticks(list(xs))
        ax.set_xticklabels(names)
        ax.set_xlabel("concrete coordinates")
        ax.set_ylabel("tuples")
        ax.set_title(f"{len(solutions)} tuples, {len(border.G) + len(border.S)} border tuples")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, metadata=_NO_META)
        plt.close(fig)
