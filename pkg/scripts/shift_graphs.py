"""Tabulate order, chromatic number and sun content of shift graphs S(3..N)."""
from __future__ import annotations

import argparse
import time

from sunspots.coloring import chromatic_number, is_triangle_free
from sunspots.generators import shift_graph
from sunspots.structures import find_4_sunspot, find_t_sun, longest_hole_length


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=10)
    args = ap.parse_args()
    print(f"{'n':>3} {'|V|':>4} {'chi':>3} {'tri-free':>8} {'4-sunspot':>9} {'sun t>=5':>8} {'longest hole':>12}")
    for n in range(3, args.max + 1):
        start = time.perf_counter()
        G = shift_graph(n)
        k, _ = chromatic_number(G)
        sun = find_t_sun(G, 5)
        spot = find_4_sunspot(G)
        print(f"{n:>3} {G.n:>4} {k:>3} {str(is_triangle_free(G)):>8} {str(spot is not None):>9} "
              f"{str(sun is not None):>8} {longest_hole_length(G):>12}   ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
