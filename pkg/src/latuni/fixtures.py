"""Bundled worked-example lattices and operators.

Three 9-to-11 element lattices (l1, l2, l3) with their closure-operator
pairs and join-based boundary t-conorms, plus a handful of small standard
lattices used by the property suites.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binop import PartialBinOpTable, join_tconorm
from .construct import ConstructionSpec, Family
from .lattice import BoundedLattice, build_lattice
from .unary import CLOSURE, UnaryOpTable, validate_unary


@dataclass(frozen=True)
class Fixture:
    name: str
    lattice: BoundedLattice
    e: str
    cl1: UnaryOpTable
    cl2: UnaryOpTable
    tconorm: PartialBinOpTable
    family: Family

    def spec(self) -> ConstructionSpec:
        return ConstructionSpec(
            self.family, self.lattice, self.e, self.tconorm, self.cl1, self.cl2
        )


def l1_lattice() -> BoundedLattice:
    return build_lattice(
        ["0", "a", "b", "e", "m", "k", "s", "n", "j", "1"],
        [
            ("0", "m"), ("m", "k"), ("m", "s"), ("k", "n"), ("s", "n"),
            ("n", "j"), ("0", "a"), ("a", "b"), ("b", "e"), ("e", "j"),
            ("j", "1"),
        ],
        bottom="0",
        top="1",
    )


def l1() -> Fixture:
    lat = l1_lattice()
    cl1 = validate_unary(lat, CLOSURE, {
        "0": "0", "a": "b", "b": "b", "e": "e", "m": "k",
        "k": "k", "s": "n", "n": "n", "j": "j", "1": "1",
    })
    cl2 = validate_unary(lat, CLOSURE, {
        "0": "k", "a": "j", "b": "j", "e": "j", "m": "k",
        "k": "k", "s": "n", "n": "n", "j": "j", "1": "1",
    })
    return Fixture("l1", lat, "e", cl1, cl2, join_tconorm(lat, "e"), Family.CLO)


def l2_lattice() -> BoundedLattice:
    return build_lattice(
        ["0", "a", "e", "m", "k", "s", "n", "b", "1"],
        [
            ("0", "m"), ("m", "k"), ("m", "s"), ("k", "n"), ("s", "n"),
            ("n", "1"), ("0", "a"), ("a", "e"), ("e", "b"), ("b", "1"),
        ],
        bottom="0",
        top="1",
    )


def l2() -> Fixture:
    lat = l2_lattice()
    cl1 = validate_unary(lat, CLOSURE, {x: x for x in lat.elements})
    cl2 = validate_unary(lat, CLOSURE, {x: lat.join(x, "k") for x in lat.elements})
    return Fixture("l2", lat, "e", cl1, cl2, join_tconorm(lat, "e"), Family.CLO)


def l3_lattice() -> BoundedLattice:
    return build_lattice(
        ["0", "r", "a", "e", "l", "m", "n", "b", "c", "t", "1"],
        [
            ("0", "l"), ("0", "r"), ("l", "m"), ("m", "n"), ("n", "c"),
            ("r", "a"), ("a", "b"), ("b", "c"), ("c", "1"), ("a", "e"),
            ("e", "t"), ("t", "1"),
        ],
        bottom="0",
        top="1",
    )


def l3() -> Fixture:
    lat = l3_lattice()
    cl1 = validate_unary(lat, CLOSURE, {
        "0": "0", "r": "a", "a": "a", "e": "e", "l": "n", "m": "n",
        "n": "n", "b": "c", "c": "c", "t": "t", "1": "1",
    })
    cl2 = validate_unary(lat, CLOSURE, {
        "0": "a", "r": "a", "a": "a", "e": "e", "l": "c", "m": "c",
        "n": "c", "b": "c", "c": "c", "t": "t", "1": "1",
    })
    return Fixture("l3", lat, "e", cl1, cl2, join_tconorm(lat, "e"), Family.CLO_STRICT)


FIXTURES = {"l1": l1, "l2": l2, "l3": l3}


# -- small standard lattices -------------------------------------------------

def chain(n: int) -> BoundedLattice:
    """A chain c0 < c1 < ... < c(n-1)."""
    names = [f"c{i}" for i in range(n)]
    covers = [(names[i], names[i + 1]) for i in range(n - 1)]
    return build_lattice(names, covers, names[0], names[-1])


def diamond() -> BoundedLattice:
    """M2: two incomparable atoms between the bounds."""
    return build_lattice(
        ["0", "a", "b", "1"],
        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        "0",
        "1",
    )


def m3() -> BoundedLattice:
    """Three incomparable atoms between the bounds."""
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        "0",
        "1",
    )


def n5() -> BoundedLattice:
    """The pentagon: a < b on one side, c alone on the other."""
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        "0",
        "1",
    )


SMALL_LATTICES = {
    "chain3": lambda: chain(3),
    "chain4": lambda: chain(4),
    "chain5": lambda: chain(5),
    "m2": diamond,
    "m3": m3,
    "n5": n5,
}
