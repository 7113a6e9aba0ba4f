"""Write the curve data of every N = 3 illustration figure to CSV.

    python3 scripts/export_figures.py --out figures/

One file per figure (fig_1a.csv, ...), in the same long format as
``reflectionless-lab figure``: curve, kind, x, re, im.
"""
import argparse
import csv
from pathlib import Path

from reflectionless_lab import figures
from reflectionless_lab.cli import fmt


def export(fig: str, out: Path) -> Path:
    path = out / f"fig_{fig}.csv"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["curve", "kind", "x", "re", "im"])
        for curve in figures.figure_curves(fig):
            x, y = figures.sample_curve(curve)
            w.writerows([curve.label, curve.kind, fmt(xi), fmt(yi.real), fmt(yi.imag)] for xi, yi in zip(x, y))
    return path


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--fig", nargs="*", default=sorted(figures.FIGURES))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for fig in args.fig:
        print(export(fig, out))


if __name__ == "__main__":
    main()
