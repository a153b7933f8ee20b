#!/usr/bin/env python3
"""Print zeta(r) zeta(s) as a sum of depth-two MZVs and check it numerically.

Each row gives r, s, the number of terms, the exact expansion and the
difference between the product and the evaluated expansion.
"""

import argparse

from shufflemzv.identities import euler_decomposition
from shufflemzv.numeric import eval_expansion, zeta_eval


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=5, help="largest r and s (default 5)")
    parser.add_argument("--tol", type=float, default=1e-8)
    args = parser.parse_args(argv)

    print("r\ts\tterms\tdifference\tbound\texpansion")
    for r in range(2, args.max + 1):
        for s in range(r, args.max + 1):
            z = euler_decomposition(r - 1, s - 1)
            a, b = zeta_eval((r,), args.tol), zeta_eval((s,), args.tol)
            rhs = eval_expansion(z, args.tol)
            bound = a.value * b.error_bound + b.value * a.error_bound + rhs.error_bound
            text = " + ".join(f"{c}*z({k})" for k, c in z.items())
            print(f"{r}\t{s}\t{len(z)}\t{a.value * b.value - rhs.value:+.2e}\t{bound:.1e}\t{text}")


if __name__ == "__main__":
    main()
