#!/usr/bin/env python3
"""Print the Gerstenhaber bracket tables of Lambda_q for all six regimes.

Each regime builds the twisted Koszul-type resolution, computes the
bracket of every ordered pair of distinguished cohomology generators,
and compares against the known value.  Exits nonzero on any mismatch.
"""

import sys
import time

from hhtwist.fields import (CyclotomicField, PrimeField, RationalField,
                            RationalFunctionField)
from hhtwist.qci import build_case, classify

CASES = [
    ("generic q over Q(q)", lambda: RationalFunctionField(), "q", 6),
    ("q = -1 over Q", lambda: RationalField(), "-1", 6),
    ("q a primitive 3rd root of unity", lambda: CyclotomicField(3), "q", 13),
    ("q = i (primitive 4th root)", lambda: CyclotomicField(4), "q", 9),
    ("q of order 3 over F_4", lambda: CyclotomicField(3, p=2), "q", 7),
    ("q = 1 over F_2", lambda: PrimeField(2), "1", 6),
    ("q = 1 over Q", lambda: RationalField(), "1", 6),
]


def main():
    bad = 0
    for label, mkfield, qexpr, n in CASES:
        field = mkfield()
        q = field.q() if qexpr == "q" else \
            (field.one() if qexpr == "1" else -field.one())
        t0 = time.time()
        b = build_case(classify(field, q), max_degree=n)
        rows = b.bracket_table()
        nonzero = [r for r in rows if r["expected"] != "0" or not r["match"]]
        fails = [r for r in rows if not r["match"]]
        print(f"=== {label} (case {b.case.key}, N = {n}, "
              f"{time.time() - t0:.1f}s) ===")
        for r in nonzero:
            flag = "" if r["match"] else f"  MISMATCH expected {r['expected']}"
            print(f"  [{r['f']}, {r['g']}] = {r['chain_level']}{flag}")
        print(f"  {len(rows)} pairs, {len(fails)} mismatches")
        bad += len(fails)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
