#!/usr/bin/env python3
"""Cross-check contains_monomial against the Groebner oracle on random ideals."""

import argparse
import time

from monocheck import contains_monomial, oracle_contains_monomial
from monocheck.errors import ResourceLimitError
from monocheck.randgen import IdealParams, random_ideal


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1000)
    ap.add_argument("--max-r", type=int, default=4)
    ap.add_argument("--max-s", type=int, default=3)
    ap.add_argument("--char", type=int, default=0)
    ap.add_argument("--timeout", type=float, default=60)
    ap.add_argument("--no-eager", action="store_true")
    args = ap.parse_args()

    agree = timeouts = 0
    start = time.perf_counter()
    for n in range(args.count):
        params = IdealParams(r=1 + n % args.max_r, s=1 + (n // args.max_r) % args.max_s,
                             characteristic=args.char)
        ring, gens = random_ideal(params, args.seed + n)
        try:
            got = contains_monomial(gens, ring, eager=not args.no_eager, timeout=args.timeout)
        except ResourceLimitError:
            timeouts += 1
            print(f"seed {args.seed + n}: timeout")
            continue
        want = oracle_contains_monomial(gens, ring)
        if got == want:
            agree += 1
        else:
            print(f"seed {args.seed + n}: got {got}, oracle {want}: {[str(f) for f in gens]}")
    elapsed = time.perf_counter() - start
    print(f"{agree}/{args.count} agree, {timeouts} timeouts, {elapsed:.1f}s")


if __name__ == "__main__":
    main()
