"""Tabulate girth, i_cy, gamma_cy, ir_cy and the path structure for
subdivided double stars.

    python scripts/subdivision_table.py --max-n 4 --max-s 4
"""
import argparse

from cyclechain.families import subdivided_double_star
from cyclechain.solver import compute_all
from cyclechain.verifier import find_path_structure


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-s", type=int, default=3)
    args = ap.parse_args()
    print("n s girth i_cy gamma_cy ir_cy tight path")
    for n in range(1, args.max_n + 1):
        for s in range(args.max_s + 1):
            g = subdivided_double_star(n, s)
            r = compute_all(g)
            p, girth = r.values, r.invariants.girth
            tight = p["i_cy"] == p["gamma_cy"] == p["ir_cy"] == girth - 1
            path = find_path_structure(g, girth)
            print(n, s, girth, p["i_cy"], p["gamma_cy"], p["ir_cy"], tight, path)


if __name__ == "__main__":
    main()
