#!/usr/bin/env python3
"""Render the bundled worked examples: Hasse diagram DOT plus the built table."""

import argparse
import sys

from latuni import construct, export_dot, render_table
from latuni.fixtures import FIXTURES


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("fixture", nargs="*", default=sorted(FIXTURES))
    parser.add_argument("--dot", action="store_true", help="also emit the DOT digraph")
    args = parser.parse_args(argv)
    for name in args.fixture:
        if name not in FIXTURES:
            parser.error(f"unknown fixture {name!r}")
        fx = FIXTURES[name]()
        print(f"== {name} (e = {fx.e}, family = {fx.family.value}) ==")
        if args.dot:
            sys.stdout.write(export_dot(fx.lattice))
        sys.stdout.write(render_table(construct(fx.spec())))
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
