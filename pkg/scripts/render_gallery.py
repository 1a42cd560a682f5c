#!/usr/bin/env python3
"""Render one decision SVG per 2-D shape family into an output directory.

Usage: python scripts/render_gallery.py [outdir] [--samples N] [--seed S]
"""

import argparse
import pathlib
import sys

from knee_mcdm import FrontSpec, generate, normalize, select_mmd
from knee_mcdm.svgplot import render_decision_svg

FAMILIES_2D = ("convex2d", "concave2d", "line2d", "disconnected2d", "table2like")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="gallery")
    parser.add_argument("--samples", type=int, default=60)
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for family in FAMILIES_2D:
        samples = 16 if family in ("table1", "table2like") else args.samples
        front = generate(FrontSpec(family=family, samples=samples, seed=args.seed))
        nf = normalize(front)
        decision = select_mmd(nf)
        path = outdir / f"{family}.svg"
        path.write_text(render_decision_svg(nf, decision), encoding="utf-8")
        print(
            f"{family:<16} winner={{{', '.join(decision.winner_ids)}}} "
            f"c_min={decision.c_min_mmd:.4f} -> {path}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
