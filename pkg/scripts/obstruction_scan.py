#!/usr/bin/env python3
"""Scan the frame-bundle reduction obstruction over a few specializations of q.

The formal run returns the obstruction polynomial itself; specializations show
where reduction data can exist.
"""

from fractions import Fraction

from pcomod.builtin import frame_bundle_obstruction


def main() -> int:
    formal = frame_bundle_obstruction("formal")
    print(f"formal parameter : obstruction polynomial {formal.obstruction!r}")
    for step in formal.steps:
        print(f"  - {step}")
    for q in ("cbrt1", 1, -1, 2, 3, Fraction(1, 2)):
        v = frame_bundle_obstruction(q)
        tag = "consistent" if v.consistent else "obstructed"
        extra = f" witness {v.witness}" if v.witness else ""
        print(f"q = {q!s:6} : {tag:10}{extra}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
