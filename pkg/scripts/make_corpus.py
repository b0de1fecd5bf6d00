#!/usr/bin/env python3
"""Write a seeded corpus of random .ideal files for the bench command."""

import argparse
from pathlib import Path

from monocheck.parser import IdealFile, print_ideal_file
from monocheck.randgen import IdealParams, random_ideal, torus_point_ideal


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", type=Path)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-r", type=int, default=3, help="number of variables")
    ap.add_argument("-s", type=int, default=2, help="number of generators")
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--coeff-bound", type=int, default=3)
    ap.add_argument("--density", type=int, default=4)
    ap.add_argument("--char", type=int, default=0)
    ap.add_argument("--torus-points", action="store_true",
                    help="generators vanish at a random torus point (answer false)")
    args = ap.parse_args()

    params = IdealParams(args.r, args.s, args.max_degree, args.coeff_bound, args.density, args.char)
    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(args.count):
        seed = args.seed + n
        if args.torus_points:
            ring, gens, _ = torus_point_ideal(params, seed)
        else:
            ring, gens = random_ideal(params, seed)
        text = f"# r={args.r} s={args.s} seed={seed}\n" + print_ideal_file(IdealFile(ring, gens))
        (args.out / f"r{args.r}_s{args.s}_{seed:05d}.ideal").write_text(text)
    print(f"wrote {args.count} files to {args.out}")


if __name__ == "__main__":
    main()
