#!/usr/bin/env python3
"""Exhaustive sweep: characteristic conditions vs actual uninorm validity.

For each bundled fixture lattice and each construction family, enumerate
every operator pair passing the structural hypotheses, build the table,
and compare validate_uninorm against check_characteristic.  A mismatch
would refute the if-and-only-if claim the library is built around.
"""

import argparse
import sys
import time

from latuni import Family, construct, join_tconorm, meet_tnorm, validate_uninorm
from latuni.fixtures import FIXTURES
from latuni.search import enumerate_admissible_pairs


def sweep(fixture_name, family, pool_cap=None):
    fx = FIXTURES[fixture_name]()
    if family.closure_based:
        boundary = join_tconorm(fx.lattice, fx.e)
    else:
        boundary = meet_tnorm(fx.lattice, fx.e)
    start = time.perf_counter()
    total = passed = mismatches = 0
    for spec, char_pass in enumerate_admissible_pairs(
        fx.lattice, fx.e, family, boundary, pool_cap=pool_cap
    ):
        total += 1
        valid = validate_uninorm(construct(spec)).ok
        passed += valid
        mismatches += valid != char_pass
    elapsed = time.perf_counter() - start
    print(
        f"{fixture_name:4s} {family.value:12s} pairs={total:6d} "
        f"uninorms={passed:6d} mismatches={mismatches} ({elapsed:.1f}s)"
    )
    return mismatches


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--fixture", choices=sorted(FIXTURES), action="append", default=None,
        help="restrict to one or more fixtures (default: all)",
    )
    parser.add_argument(
        "--family", choices=[f.value for f in Family], action="append", default=None,
        help="restrict to one or more families (default: all)",
    )
    parser.add_argument(
        "--pool-cap", type=int, default=None,
        help="cap the operator pool to its first N members",
    )
    args = parser.parse_args(argv)
    fixtures = args.fixture or sorted(FIXTURES)
    families = [Family(f) for f in args.family] if args.family else list(Family)

    bad = 0
    for name in fixtures:
        for family in families:
            bad += sweep(name, family, pool_cap=args.pool_cap)
    if bad:
        print(f"FAILED: {bad} mismatching pairs")
        return 1
    print("all sweeps clean: characteristic pass == uninorm validity")
    return 0


if __name__ == "__main__":
    sys.exit(main())
