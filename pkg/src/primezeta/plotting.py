"""Optional static SVG rendering of emitted CSV files (needs matplotlib)."""
import csv


def save_svg(csv_path, x, ys, logy=False, groupby=None):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    groups = {}
    for r in rows:
        groups.setdefault(r[groupby] if groupby else "", []).append(r)

    fig, ax = plt.subplots(figsize=(8, 5))
    for key, grp in groups.items():
        for y in ys:
            label = f"{y} ({groupby}={key})" if groupby else y
            ax.plot([float(r[x]) for r in grp], [float(r[y]) for r in grp], label=label, lw=0.8)
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(x)
    if len(groups) * len(ys) <= 12:
        ax.legend(fontsize=7)
    out = str(csv_path).rsplit(".", 1)[0] + ".svg"
    # fixed hash salt keeps the SVG byte-stable between runs
    matplotlib.rcParams["svg.hashsalt"] = "primezeta"
    fig.savefig(out, format="svg", metadata={"Date": None})
    plt.close(fig)
    return out
