"""Closure and interior operator tables.

An operator is stored as an explicit total map and cannot exist
uncertified: :func:`validate_unary` is the only constructor, and it checks
the three defining axioms plus monotonicity before returning.  Witnesses
for a failed axiom come from the first violation in declared element
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AxiomViolation, MismatchedLattice, UnknownElement
from .lattice import BoundedLattice, IntervalSpec

CLOSURE = "closure"
INTERIOR = "interior"


@dataclass(frozen=True)
class UnaryOpTable:
    """A certified closure or interior operator on a finite lattice."""

    lattice: BoundedLattice
    kind: str
    mapping: dict = field(compare=False)

    def __call__(self, x) -> str:
        return self.mapping[x]

    def __eq__(self, other):
        return (
            isinstance(other, UnaryOpTable)
            and self.lattice == other.lattice
            and self.kind == other.kind
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.mapping.items()))))


def validate_unary(lat: BoundedLattice, kind: str, mapping) -> UnaryOpTable:
    """Certify a self-map as a closure or interior operator.

    Raises AxiomViolation naming the first violated axiom (CL1/CL2/CL3 or
    IN1/IN2/IN3, plus the derived monotonicity CL4/IN4) with witness
    elements.
    """
    if kind not in (CLOSURE, INTERIOR):
        raise ValueError(f"kind must be {CLOSURE!r} or {INTERIOR!r}, got {kind!r}")
    mapping = dict(mapping)
    for x in lat.elements:
        if x not in mapping:
            raise UnknownElement(x)
    for x, v in mapping.items():
        if x not in lat or v not in lat:
            raise UnknownElement(v if x in lat else x)
    if len(mapping) != len(lat.elements):
        extra = next(x for x in mapping if x not in lat)
        raise UnknownElement(extra)

    f = mapping.__getitem__
    if kind == CLOSURE:
        for x in lat.elements:
            if not lat.leq(x, f(x)):
                raise AxiomViolation("CL1", (x,))
        for x in lat.elements:
            for y in lat.elements:
                if f(lat.join(x, y)) != lat.join(f(x), f(y)):
                    raise AxiomViolation("CL2", (x, y))
        for x in lat.elements:
            if f(f(x)) != f(x):
                raise AxiomViolation("CL3", (x,))
        # CL4 follows from CL2; re-checked directly as a guard.
        for x in lat.elements:
            for y in lat.elements:
                if lat.leq(x, y) and not lat.leq(f(x), f(y)):
                    raise AxiomViolation("CL4", (x, y))
    else:
        for x in lat.elements:
            if not lat.leq(f(x), x):
                raise AxiomViolation("IN1", (x,))
        for x in lat.elements:
            for y in lat.elements:
                if f(lat.meet(x, y)) != lat.meet(f(x), f(y)):
                    raise AxiomViolation("IN2", (x, y))
        for x in lat.elements:
            if f(f(x)) != f(x):
                raise AxiomViolation("IN3", (x,))
        for x in lat.elements:
            for y in lat.elements:
                if lat.leq(x, y) and not lat.leq(f(x), f(y)):
                    raise AxiomViolation("IN4", (x, y))

    return UnaryOpTable(lat, kind, mapping)


def identity_operator(lat: BoundedLattice, kind: str) -> UnaryOpTable:
    return validate_unary(lat, kind, {x: x for x in lat.elements})


def pointwise_leq_on(op1: UnaryOpTable, op2: UnaryOpTable, region):
    """Is op1(x) <= op2(x) for every x in region?  Returns (flag, witnesses)."""
    if op1.lattice != op2.lattice:
        raise MismatchedLattice("operators live on different lattices")
    lat = op1.lattice
    region = set(region)
    witnesses = tuple(
        x for x in lat.elements if x in region and not lat.leq(op1(x), op2(x))
    )
    return not witnesses, witnesses


def range_avoids(op: UnaryOpTable, region, forbidden: IntervalSpec):
    """Does op map every element of region outside the forbidden interval?"""
    lat = op.lattice
    if forbidden.low not in lat or forbidden.high not in lat:
        raise MismatchedLattice("forbidden interval references a foreign element")
    banned = set(lat.interval(forbidden))
    region = set(region)
    witnesses = tuple(x for x in lat.elements if x in region and op(x) in banned)
    return not witnesses, witnesses


def dualize_operator(op: UnaryOpTable, dual_lat: BoundedLattice) -> UnaryOpTable:
    """View the same map on the dual lattice, with kind flipped.

    Re-validates; a failure here signals an internal bug, since closure
    axioms on a lattice are exactly interior axioms on its dual.
    """
    if dual_lat != op.lattice.dual():
        raise MismatchedLattice("argument is not the dual of the operator's lattice")
    flipped = INTERIOR if op.kind == CLOSURE else CLOSURE
    return validate_unary(dual_lat, flipped, op.mapping)
