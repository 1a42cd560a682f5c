#!/usr/bin/env python3
"""Cross-method agreement sweep over random and shape-family fronts.

Runs the distance rule, the weighted-sum rule, and the tournament (several
pairing seeds) over many generated fronts and reports agreement counts plus
the distribution of equivalence-class sizes.

Usage: python scripts/equivalence_sweep.py [--fronts N] [--seeds S1 S2 ...]
"""

import argparse
import sys
from collections import Counter

from knee_mcdm import (
    FrontSpec,
    build_classes,
    generate,
    normalize,
    random_nondominated_front,
    verify_equivalence,
)

SHAPES = ("convex2d", "concave2d", "line2d", "plane3d", "sphere3d", "disconnected2d")


def front_stream(count: int):
    for k in range(count):
        if k % 3 == 0:
            family = SHAPES[(k // 3) % len(SHAPES)]
            yield f"{family}[{k}]", generate(
                FrontSpec(family=family, samples=8 + k % 40, seed=k)
            )
        else:
            m, n = 2 + k % 63, 2 + k % 5
            yield f"sphere(M={m},N={n})[{k}]", random_nondominated_front(m, n, seed=k)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fronts", type=int, default=300)
    parser.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3, 4])
    args = parser.parse_args()

    failures = []
    class_counts = Counter()
    for label, front in front_stream(args.fronts):
        nf = normalize(front)
        report = verify_equivalence(nf, seeds=args.seeds)
        class_counts[len(build_classes(nf))] += 1
        if not report.passed:
            failures.append((label, report.issues))

    print(f"fronts checked: {args.fronts}")
    print(f"agreement failures: {len(failures)}")
    for label, issues in failures[:10]:
        print(f"  {label}: {'; '.join(issues)}")
    sizes = sorted(class_counts)
    print("class-count distribution (classes: fronts):")
    for size in sizes[:5]:
        print(f"  {size}: {class_counts[size]}")
    if len(sizes) > 5:
        print(f"  ... up to {sizes[-1]} classes")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
