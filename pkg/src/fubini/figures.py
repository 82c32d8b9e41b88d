"""Matplotlib rendering of Hasse diagrams, coefficient profiles, and
verification reports to image files."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_hasse_figure(P, path):
    "Layered drawing of the Hasse diagram, one layer per codimension."
    layers = {}
    for i, c in enumerate(P.codim):
        layers.setdefault(c, []).append(i)
    pos = {}
    for c, nodes in sorted(layers.items()):
        nodes.sort(key=lambda i: str(P.elements[i]))
        width = len(nodes)
        for t, i in enumerate(nodes):
            pos[i] = (t - (width - 1) / 2.0, c)
    fig, ax = plt.subplots(figsize=(max(6, len(P) * 0.35), max(4, (max(P.codim) + 1) * 0.9)))
    for (i, j) in P.hasse_edges():
        xi, yi = pos[i]
        xj, yj = pos[j]
        ax.plot([xi, xj], [yi, yj], color="0.6", lw=0.8, zorder=1)
    for i, (x, y) in pos.items():
        ax.text(x, y, str(P.elements[i]), ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round,pad=0.25", fc="white", ec="0.3"), zorder=2)
    ax.set_ylabel("codimension")
    ax.set_xticks([])
    ax.set_title("%s order on W(%d,%d)" % (P.kind, P.n, P.k))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_poincare_figure(poly, n, k, path):
    coeffs = list(poly.coeffs)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(coeffs)), coeffs, color="steelblue")
    ax.set_xlabel("codimension")
    ax.set_ylabel("number of cells")
    ax.set_title("Poincare coefficients, (n,k)=(%d,%d)" % (n, k))
    ax.set_xticks(range(len(coeffs)))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_verify_figure(results, path):
    "One bar per suite, colored by pass/finding/fail."
    colors = {"pass": "seagreen", "finding": "goldenrod", "fail": "firebrick"}
    names = [r.name for r in results]
    fig, ax = plt.subplots(figsize=(7, max(3, 0.45 * len(names))))
    ax.barh(range(len(names)), [1] * len(names),
            color=[colors[r.status] for r in results])
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.set_xticks([])
    ax.invert_yaxis()
    for i, r in enumerate(results):
        ax.text(0.5, i, r.status, ha="center", va="center", color="white")
    ax.set_title("verification suites")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
