"""Matplotlib renderers for the report commands.

Figures are written next to the delimited text output; everything uses the
Agg backend so the CLI works headless.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_weight_enumerator(coeffs, path, title="Symbol weight distribution"):
    """Bar chart of codeword counts per symbol weight (log scale)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(coeffs)), coeffs, color="#4878d0")
    ax.set_yscale("symlog")
    ax.set_xlabel("symbol weight")
    ax.set_ylabel("codewords")
    ax.set_title(title)
    ax.set_xticks(range(len(coeffs)))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_tail(empirical, bounds, path, title="Residual match tail"):
    """Empirical Pr(M >= r) against the union bound, per threshold r."""
    rs = sorted(empirical)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(rs, [empirical[r] for r in rs], "o-", label="empirical")
    ax.plot(rs, [float(bounds[r]) for r in rs], "s--", label="union bound")
    ax.set_yscale("log")
    ax.set_xlabel("match count threshold r")
    ax.set_ylabel("Pr(M >= r)")
    ax.set_xticks(rs)
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
