"""Compare MacMahon's product guess with brute-force counts of solid partitions.

    python scripts/macmahon_guess_d4.py --n 10 --threads 4
"""

import argparse
import time

from motivic_hilb.dtgen import macmahon_guess
from motivic_hilb.partitions import count_table


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--dim", type=int, default=4)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    counts = count_table(args.dim, args.n, threads=args.threads)
    elapsed = time.perf_counter() - start
    guess = macmahon_guess(args.dim, args.n)
    print(f"{'n':>3} {'enumeration':>12} {'guess':>12} {'difference':>11}")
    for n in range(args.n + 1):
        print(f"{n:>3} {counts[n]:>12} {guess[n]:>12} {guess[n] - counts[n]:>11}")
    first = next((n for n in range(args.n + 1) if guess[n] != counts[n]), None)
    print(f"first mismatch: {first}   (enumeration took {elapsed:.1f}s)")


if __name__ == "__main__":
    main()
