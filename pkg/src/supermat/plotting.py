"""Heat-map rendering of realized matrices (optional matplotlib dependency)."""

from __future__ import annotations


def _to_float(c) -> float:
    return float(int(c)) if hasattr(c, "p") else float(c)


def spy_figure(dense, path: str, title: str = ""):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    values = [[_to_float(c) for c in row] for row in dense]
    fig, ax = plt.subplots(figsize=(4, 4))
    im = ax.imshow(values, cmap="coolwarm", interpolation="nearest")
    fig.colorbar(im, ax=ax, shrink=0.8)
    if title:
        ax.set_title(title, fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
