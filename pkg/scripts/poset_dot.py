#!/usr/bin/env python3
"""Emit the bipartition closure-order Hasse diagram as DOT.

Pipe into graphviz, e.g. `python scripts/poset_dot.py --n 3 | dot -Tsvg`.
"""

import argparse

from exoticcone.bipartitions import emit_dot


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    args = parser.parse_args()
    print(emit_dot(args.n))


if __name__ == "__main__":
    main()
