#!/usr/bin/env python3
"""Fixed-point tables e_d for promotion on shapes, with the rectangle check.

For rectangles the exact root-of-unity evaluation of the hook-length
q-polynomial is printed next to the brute-force count; for other shapes
only the empirical table is available.
"""

import argparse
import sys

from linext.io import parse_shape
from linext.posets import shape_poset
from linext.sieve import fixed_point_table, cyclic_sieving_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("shapes", nargs="+", help="e.g. shape:3,3 shifted:4,2")
    args = ap.parse_args()

    for spec in args.shapes:
        s = parse_shape(spec)
        rows = s.rows
        print(f"== {spec}")
        if not s.shifted and len(set(rows)) == 1:
            for row in cyclic_sieving_check(len(rows), rows[0]):
                mark = "ok" if row.ok else "MISMATCH"
                print(f"  d={row.d:3d}  e_d={row.fixed:6d}  "
                      f"F(zeta^d)={row.f_at_root:6d}  {mark}")
        else:
            for d, fixed in fixed_point_table(shape_poset(s)):
                print(f"  d={d:3d}  e_d={fixed:6d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
