#!/usr/bin/env python3
"""Tabulate torsion behaviour of c * J_n for small monomials c.

For each n and each q-power prefactor q^k (k mod 4 matters, since {1}
divides q^4 - 1 up to a unit) report the class of q^k x1^a J_n and whether
the torsion coordinate survives the mod-{1} reduction.
"""
import argparse
import time

from skeinquot.generators import gen_J
from skeinquot.qlaurent import QLaurent, bracket
from skeinquot.quotient import classify, torsion_split
from skeinquot.ringcore import XPoly


def main():
    ap = argparse.ArgumentParser(description="torsion table for c * J_n")
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    t0 = time.perf_counter()
    print(f"{'n':>3} {'c':>16}  {'class':12} coords")
    for n in range(1, args.max_n + 1):
        for c in (QLaurent(1), QLaurent.monomial(1), QLaurent.monomial(4), bracket(1), QLaurent(2)):
            p = gen_J(n) * XPoly.lift(c)
            split = torsion_split(p)
            coords = {k: str(v) for k, v in split.torsion_coords.items()}
            print(f"{n:>3} {str(c):>16}  {str(classify(p)):12} {coords}")
    print(f"# {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
