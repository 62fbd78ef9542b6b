#!/usr/bin/env python3
"""Walk through parameter enumeration on both sides of the correspondence.

For a weakly decreasing integer weight we list the real-side classes (GL(1)
characters and GL(2) blocks) with their levels, the multisegment classes
with that support, and match the level-n classes through the level map.
"""

from glhecke.levelmap import gamma, verify_bijection_level_n
from glhecke.multisegments import central_character, enumerate_multisegments, segments_str
from glhecke.realparams import enumerate_real_params, factors_str
from glhecke.scalars import scalar_str


def show(lam):
    n = len(lam)
    print(f"weight {lam}")
    print(f"  real-side classes (any level):")
    for p in enumerate_real_params(lam, 0):
        print(f"    level {p.level}  {factors_str(p)}")
    print(f"  multisegment classes with support {lam}:")
    for ms in enumerate_multisegments(lam):
        cc = ",".join(scalar_str(c) for c in central_character(ms))
        print(f"    {segments_str(ms)}   central character ({cc})")
    print(f"  level-{n} classes through the level map:")
    for p in enumerate_real_params(lam, n):
        if p.level != n:
            continue
        print(f"    {factors_str(p)}  ->  {segments_str(gamma(p, n))}")
    report = verify_bijection_level_n(lam)
    print(
        f"  matched: {len(report.pairs) - len(report.off_support)}"
        f"  off-support: {len(report.off_support)}"
        f"  missing: {len(report.missing)}  collisions: {len(report.collisions)}"
    )
    print()


if __name__ == "__main__":
    show((1, 0))
    show((2, 1, 0))
    # a weight where one level-3 class maps out of the support block:
    # its image carries central character (2,1,0), not (2,0,0)
    show((2, 0, 0))
