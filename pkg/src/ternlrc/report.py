"""Figures for the classification table and the oracle grid."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

CLASS_COLORS = {
    1: "#4c72b0",
    2: "#dd8452",
    3: "#55a868",
    4: "#c44e52",
    5: "#8172b3",
    6: "#937860",
    7: "#da8bc3",
    8: "#8c8c8c",
}


def plot_table(rows: Sequence[dict], path: str | Path) -> Path:
    """Scatter of the constructed codes in the (n, k) plane, labelled by distance."""
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    seen = set()
    for row in rows:
        cid = row["class_id"]
        label = f"class {cid}" if cid not in seen else None
        seen.add(cid)
        marker = "o" if row["matches"] and row["optimal"] else "x"
        ax.scatter(row["n"], row["k"], s=30 + 18 * row["d"], color=CLASS_COLORS[cid], marker=marker, label=label, alpha=0.8)
        ax.annotate(str(row["d"]), (row["n"], row["k"]), fontsize=7, ha="center", va="center")
    ax.set_xlabel("length n")
    ax.set_ylabel("dimension k")
    ax.set_title("Optimal ternary LRCs (marker label: d)")
    ax.legend(fontsize=8, loc="upper left")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_grid(rows: Sequence, path: str | Path) -> Path:
    """One panel per locality r: where optimal codes exist, and any oracle/classifier mismatch."""
    rs = sorted({row.r for row in rows})
    fig, axes = plt.subplots(1, len(rs), figsize=(3.2 * len(rs), 3.2), squeeze=False)
    for ax, r in zip(axes[0], rs):
        sub = [row for row in rows if row.r == r]
        for row in sub:
            if not row.agree:
                color, marker = "red", "X"
            elif row.oracle_found:
                color, marker = "tab:green", "o"
            else:
                color, marker = "lightgray", "s"
            ax.scatter(row.n, row.k, color=color, marker=marker, s=60)
        ax.set_title(f"r = {r}")
        ax.set_xlabel("n")
        ax.set_ylabel("k")
        ax.grid(alpha=0.3)
    fig.suptitle("exhaustive search vs. classification (green: exists, gray: none, red: mismatch)", fontsize=9)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
