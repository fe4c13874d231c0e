#!/usr/bin/env python3
"""Sweep every bundled identity verifier at desk scale and print a table.

Equivalent to `grothlab verify all --box 3x3 --n 2` plus the slower cases.
"""

import argparse
import time

from grothlab.shapes import enumerate_partitions_in_box
from grothlab.symfunc import verify_identity, verify_symmetry
from grothlab.vertex import BUNDLED_FAMILIES, check_ybe


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--box", default="3x3")
    ap.add_argument("--n", type=int, default=2)
    args = ap.parse_args()
    rows, cols = (int(a) for a in args.box.split("x"))

    cases = [
        ("cauchy m=3 l=2 n=2", lambda: verify_identity("cauchy", m=3, l=2, n=2).holds),
        ("littlewood m=4 l=3 n=2",
         lambda: verify_identity("littlewood", m=4, l=3, n=2).holds),
        ("coincidence m=3 l=3 n=2",
         lambda: verify_identity("coincidence", m=3, l=3, n=2).holds),
        ("finite_cauchy_schur m=l=n=2",
         lambda: verify_identity("finite_cauchy_schur", m=2, l=2, n=2).holds),
        ("cauchy_littlewood_box m=3 l=n=2",
         lambda: verify_identity("cauchy_littlewood_box", m=3, l=2, n=2).holds),
        ("bounded_cauchy_littlewood D=8",
         lambda: verify_identity("bounded_cauchy_littlewood", l=2, n=2).holds),
        ("fnr_dual la=221 n=3",
         lambda: verify_identity("fnr_dual", la=(2, 2, 1), n=3).holds),
        ("fnr_G mu=2210 n=4",
         lambda: verify_identity("fnr_G", la=(1,), m=4, k=2, n=4).holds),
    ]
    shapes = [la for la in enumerate_partitions_in_box(rows, cols) if la]
    for la in shapes:
        cases.append((f"branching {la}",
                      lambda la=la: verify_identity("branching", la=la, n=args.n).holds))
        cases.append((f"symmetry {la}",
                      lambda la=la: verify_symmetry(la, args.n).holds))
        cases.append((f"gen_coincidence {la}",
                      lambda la=la: verify_identity("generalized_coincidence",
                                                    nu=la, m=3, n=args.n).holds))
    for fam, (lfac, rfac) in sorted(BUNDLED_FAMILIES.items()):
        cases.append((f"ybe {fam}",
                      lambda lfac=lfac, rfac=rfac: check_ybe(lfac(), rfac()).ok))

    failures = 0
    for name, fn in cases:
        t0 = time.time()
        ok = fn()
        failures += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] {name}  ({time.time() - t0:.2f}s)")
    print(f"{len(cases) - failures}/{len(cases)} passed")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
