"""Print the coefficient vectors of |Gr(d,n)| as polynomials in q.

    python scripts/coefficient_table.py --max-n 10

The last column flags vectors that are palindromic and unimodal; neither
property is asserted anywhere, this is only for looking.
"""

import argparse

from grassfq.counting import coeff_poly


def unimodal(c):
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    return all(c[j] >= c[j + 1] for j in range(i, len(c) - 1))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    for n in range(args.max_n + 1):
        for d in range(n + 1):
            c = coeff_poly(n, d).coeffs
            flags = ("P" if c == c[::-1] else "-") + ("U" if unimodal(c) else "-")
            print(f"n={n:2d} d={d:2d}  {flags}  {' '.join(map(str, c))}")


if __name__ == "__main__":
    main()
