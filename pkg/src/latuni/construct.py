"""Uninorm constructions from boundary operations and operator pairs.

Four families:

* ``clo2``        — t-conorm on [e,1] plus two comparable closure operators.
* ``int2``        — t-norm on [0,e] plus two comparable interior operators.
* ``clo2-strict`` — the closure variant with the top element annihilating.
* ``int2-strict`` — the interior variant with the bottom element annihilating.

``construct`` always builds the table, even when the characteristic
conditions fail: that is what lets the verifier exhibit the concrete
associativity counterexamples showing the conditions are necessary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .binop import (
    FullBinOpTable,
    PartialBinOpTable,
    TCONORM,
    TNORM,
    strictness_check,
)
from .errors import CaseNotCovered, HypothesesNotChecked, MismatchedLattice
from .lattice import BoundedLattice, IntervalSpec
from .unary import CLOSURE, INTERIOR, UnaryOpTable, pointwise_leq_on, range_avoids


class Family(str, enum.Enum):
    CLO = "clo2"
    INT = "int2"
    CLO_STRICT = "clo2-strict"
    INT_STRICT = "int2-strict"

    @property
    def closure_based(self) -> bool:
        return self in (Family.CLO, Family.CLO_STRICT)

    @property
    def strict(self) -> bool:
        return self in (Family.CLO_STRICT, Family.INT_STRICT)


class RegionLabel(enum.Enum):
    ZERO = "zero"
    LOW_OPEN = "low_open"        # ]0,e[
    E = "e"
    INC = "inc"                  # I_e
    HIGH_HALFOPEN = "high_halfopen"  # ]e,1]
    HIGH_OPEN = "high_open"      # ]e,1[
    TOP = "top"


@dataclass(frozen=True)
class ConstructionSpec:
    """Inputs of one construction: family, neutral element, boundary op, operator pair.

    ``op_low`` is consulted on ]0,e[ (closure families) or ]e,1[ (interior
    families); ``op_inc`` on the incomparability region I_e.
    """

    family: Family
    lattice: BoundedLattice
    e: str
    boundary: PartialBinOpTable
    op_low: UnaryOpTable
    op_inc: UnaryOpTable

    def __post_init__(self):
        lat = self.lattice
        if self.e not in lat:
            raise MismatchedLattice(f"neutral element {self.e!r} not in the lattice")
        if self.e in (lat.bottom, lat.top):
            raise ValueError("the neutral element must be strictly between the bounds")
        for op in (self.op_low, self.op_inc):
            if op.lattice != lat:
                raise MismatchedLattice("operator lattice differs from the spec lattice")
        if self.boundary.lattice != lat:
            raise MismatchedLattice("boundary operation lattice differs from the spec lattice")

    # Region shorthands, all in declared element order.
    @property
    def low_open(self):
        return self.lattice.interval(IntervalSpec(self.lattice.bottom, self.e, True, True))

    @property
    def high_halfopen(self):
        return self.lattice.interval(IntervalSpec(self.e, self.lattice.top, low_open=True))

    @property
    def high_open(self):
        return self.lattice.interval(IntervalSpec(self.e, self.lattice.top, True, True))

    @property
    def inc(self):
        return self.lattice.incomparables(self.e)

    @property
    def upper_closed(self):
        return self.lattice.interval(IntervalSpec(self.e, self.lattice.top))

    @property
    def lower_closed(self):
        return self.lattice.interval(IntervalSpec(self.lattice.bottom, self.e))


@dataclass
class ConditionRow:
    name: str
    statement: str
    passed: bool
    witnesses: tuple = ()
    vacuous: bool = False


@dataclass
class ConditionReport:
    rows: list
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def row(self, name: str) -> ConditionRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "rows": [
                {
                    "name": r.name,
                    "statement": r.statement,
                    "passed": r.passed,
                    "witnesses": list(r.witnesses),
                    "vacuous": r.vacuous,
                }
                for r in self.rows
            ],
            "notes": self.notes,
        }


def check_hypotheses(spec: ConstructionSpec) -> ConditionReport:
    """Structural preconditions of the spec's family; failures are data."""
    lat = spec.lattice
    rows = []
    if spec.family.closure_based:
        want_kind, want_role = CLOSURE, TCONORM
        want_domain = IntervalSpec(spec.e, lat.top)
        region = [x for x in lat.elements if x not in set(spec.upper_closed)]
        cmp_ok, cmp_wit = pointwise_leq_on(spec.op_low, spec.op_inc, region)
        cmp_stmt = "first operator below second outside the upper interval"
    else:
        want_kind, want_role = INTERIOR, TNORM
        want_domain = IntervalSpec(lat.bottom, spec.e)
        region = [x for x in lat.elements if x not in set(spec.lower_closed)]
        cmp_ok, cmp_wit = pointwise_leq_on(spec.op_inc, spec.op_low, region)
        cmp_stmt = "second operator below first outside the lower interval"

    kinds_ok = spec.op_low.kind == want_kind and spec.op_inc.kind == want_kind
    rows.append(
        ConditionRow(
            "operator_kinds",
            f"both operators are {want_kind} operators",
            kinds_ok,
            () if kinds_ok else (spec.op_low.kind, spec.op_inc.kind),
        )
    )
    dom_ok = spec.boundary.role == want_role and spec.boundary.domain == want_domain
    rows.append(
        ConditionRow(
            "boundary_domain",
            f"boundary operation is a {want_role} on the family's boundary interval",
            dom_ok,
            () if dom_ok else (spec.boundary.role,),
        )
    )
    rows.append(ConditionRow("comparability", cmp_stmt, cmp_ok, cmp_wit))
    return ConditionReport(rows)


def check_characteristic(spec: ConstructionSpec, *, hypotheses: ConditionReport | None = None) -> ConditionReport:
    """The family's if-and-only-if conditions for the built table to be a uninorm.

    For the strict families, when the relevant open interval is empty the
    operator values never enter the table, so no operator condition is
    characteristic there; the rows are still reported, marked vacuous, and
    the overall verdict passes.  The emptiness flag is recorded in notes.
    """
    hyp = hypotheses if hypotheses is not None else check_hypotheses(spec)
    if not hyp.passed:
        raise HypothesesNotChecked("construction hypotheses do not hold")
    lat = spec.lattice
    rows = []
    notes = {}

    if spec.family.closure_based:
        forbidden = IntervalSpec(spec.e, lat.top)
        op_low_region = spec.low_open
        stmt_low = "first operator avoids the upper interval on ]0,e["
        stmt_inc = "second operator avoids the upper interval on the incomparables of e"
        open_boundary = spec.high_open
    else:
        forbidden = IntervalSpec(lat.bottom, spec.e)
        op_low_region = spec.high_open
        stmt_low = "first operator avoids the lower interval on ]e,1["
        stmt_inc = "second operator avoids the lower interval on the incomparables of e"
        open_boundary = spec.low_open

    if spec.family.strict:
        # Strict constructions only consult the operators against the open
        # boundary interval; with it empty, no operator condition binds.
        interval_empty = not open_boundary
        notes["open_boundary_interval_empty"] = interval_empty
    else:
        interval_empty = False

    ok_low, wit_low = range_avoids(spec.op_low, op_low_region, forbidden)
    ok_inc, wit_inc = range_avoids(spec.op_inc, spec.inc, forbidden)
    if interval_empty:
        rows.append(ConditionRow("range_low", stmt_low, True, wit_low, vacuous=True))
        rows.append(ConditionRow("range_inc", stmt_inc, True, wit_inc, vacuous=True))
    else:
        rows.append(ConditionRow("range_low", stmt_low, ok_low, wit_low))
        rows.append(ConditionRow("range_inc", stmt_inc, ok_inc, wit_inc))

    if spec.family.strict:
        strict_ok, strict_wit = strictness_check(spec.boundary)
        name = "boundary_strict"
        if spec.family is Family.CLO_STRICT:
            stmt = "t-conorm stays below the top on the open interval"
        else:
            stmt = "t-norm stays above the bottom on the open interval"
        rows.append(
            ConditionRow(name, stmt, strict_ok, strict_wit, vacuous=not open_boundary)
        )
    return ConditionReport(rows, notes)


def region_of(spec: ConstructionSpec, x) -> RegionLabel:
    """The region of x in the family's case partition of the lattice."""
    lat = spec.lattice
    if x == spec.e:
        return RegionLabel.E
    if spec.family.strict:
        if x == lat.top:
            return RegionLabel.TOP
        if x == lat.bottom:
            return RegionLabel.ZERO
        if lat.incomparable(x, spec.e):
            return RegionLabel.INC
        if lat.lt(x, spec.e):
            return RegionLabel.LOW_OPEN
        return RegionLabel.HIGH_OPEN
    if spec.family is Family.CLO:
        if x == lat.bottom:
            return RegionLabel.ZERO
        if lat.incomparable(x, spec.e):
            return RegionLabel.INC
        if lat.lt(x, spec.e):
            return RegionLabel.LOW_OPEN
        return RegionLabel.HIGH_HALFOPEN
    # int2: the top is part of ]e,1[? no -- split off explicitly.
    if x == lat.top:
        return RegionLabel.TOP
    if x == lat.bottom:
        return RegionLabel.ZERO
    if lat.incomparable(x, spec.e):
        return RegionLabel.INC
    if lat.lt(x, spec.e):
        return RegionLabel.LOW_OPEN
    return RegionLabel.HIGH_OPEN


def _clo_cell(spec: ConstructionSpec, x, y, upper, low_open, inc, high_halfopen):
    lat = spec.lattice
    if x in upper and y in upper:
        return spec.boundary(x, y)
    if y == spec.e and (x in inc or x in low_open):
        return x
    if x == spec.e and (y in inc or y in low_open):
        return y
    if x in low_open and y in high_halfopen:
        return lat.meet(spec.op_low(x), lat.join(x, spec.e))
    if x in high_halfopen and y in low_open:
        return lat.meet(spec.op_low(y), lat.join(y, spec.e))
    if x in inc and y in high_halfopen:
        return lat.meet(spec.op_inc(x), lat.join(x, spec.e))
    if x in high_halfopen and y in inc:
        return lat.meet(spec.op_inc(y), lat.join(y, spec.e))
    return lat.bottom


def _int_cell(spec: ConstructionSpec, x, y, lower, high_open, inc, low_halfopen):
    lat = spec.lattice
    if x in lower and y in lower:
        return spec.boundary(x, y)
    if y == spec.e and (x in inc or x in high_open):
        return x
    if x == spec.e and (y in inc or y in high_open):
        return y
    if x in inc and y in low_halfopen:
        return lat.join(spec.op_inc(x), lat.meet(x, spec.e))
    if x in low_halfopen and y in inc:
        return lat.join(spec.op_inc(y), lat.meet(y, spec.e))
    if x in high_open and y in low_halfopen:
        return lat.join(spec.op_low(x), lat.meet(x, spec.e))
    if x in low_halfopen and y in high_open:
        return lat.join(spec.op_low(y), lat.meet(y, spec.e))
    return lat.top


def _clo_strict_cell(spec: ConstructionSpec, x, y, upper_halfopen, low_open, inc, high_open):
    lat = spec.lattice
    if x == lat.top or y == lat.top:
        return lat.top
    if x in upper_halfopen and y in upper_halfopen:
        return spec.boundary(x, y)
    if y == spec.e and x != spec.e and x not in high_open:
        return x
    if x == spec.e and y != spec.e and y not in high_open:
        return y
    if x in low_open and y in high_open:
        return lat.meet(spec.op_low(x), lat.join(x, spec.e))
    if x in high_open and y in low_open:
        return lat.meet(spec.op_low(y), lat.join(y, spec.e))
    if x in inc and y in high_open:
        return lat.meet(spec.op_inc(x), lat.join(x, spec.e))
    if x in high_open and y in inc:
        return lat.meet(spec.op_inc(y), lat.join(y, spec.e))
    return lat.bottom


def _int_strict_cell(spec: ConstructionSpec, x, y, lower_halfopen, high_open, inc, low_open):
    lat = spec.lattice
    if x == lat.bottom or y == lat.bottom:
        return lat.bottom
    if x in lower_halfopen and y in lower_halfopen:
        return spec.boundary(x, y)
    if y == spec.e and x != spec.e and x not in low_open:
        return x
    if x == spec.e and y != spec.e and y not in low_open:
        return y
    if x in high_open and y in low_open:
        return lat.join(spec.op_low(x), lat.meet(x, spec.e))
    if x in low_open and y in high_open:
        return lat.join(spec.op_low(y), lat.meet(y, spec.e))
    if x in inc and y in low_open:
        return lat.join(spec.op_inc(x), lat.meet(x, spec.e))
    if x in low_open and y in inc:
        return lat.join(spec.op_inc(y), lat.meet(y, spec.e))
    return lat.top


def construct(spec: ConstructionSpec) -> FullBinOpTable:
    """Build the family's full table cell by cell.

    Does not check the characteristic conditions: when they fail, the
    returned table fails validate_uninorm with the expected witnesses.
    """
    lat = spec.lattice
    e = spec.e
    low_open = set(spec.low_open)
    inc = set(spec.inc)
    table = {}

    if spec.family is Family.CLO:
        upper = set(spec.upper_closed)
        high_halfopen = set(spec.high_halfopen)
        for x in lat.elements:
            for y in lat.elements:
                table[x, y] = _clo_cell(spec, x, y, upper, low_open, inc, high_halfopen)
    elif spec.family is Family.INT:
        lower = set(spec.lower_closed)
        high_open = set(spec.high_open)
        low_halfopen = set(lat.interval(IntervalSpec(lat.bottom, e, high_open=True)))
        for x in lat.elements:
            for y in lat.elements:
                table[x, y] = _int_cell(spec, x, y, lower, high_open, inc, low_halfopen)
    elif spec.family is Family.CLO_STRICT:
        upper_halfopen = set(lat.interval(IntervalSpec(e, lat.top, high_open=True)))
        high_open = set(spec.high_open)
        for x in lat.elements:
            for y in lat.elements:
                table[x, y] = _clo_strict_cell(spec, x, y, upper_halfopen, low_open, inc, high_open)
    elif spec.family is Family.INT_STRICT:
        lower_halfopen = set(lat.interval(IntervalSpec(lat.bottom, e, low_open=True)))
        high_open = set(spec.high_open)
        for x in lat.elements:
            for y in lat.elements:
                table[x, y] = _int_strict_cell(spec, x, y, lower_halfopen, high_open, inc, low_open)
    else:
        raise CaseNotCovered(f"unknown family {spec.family!r}")

    for x in lat.elements:
        for y in lat.elements:
            if (x, y) not in table:
                raise CaseNotCovered(f"no case produced a value for ({x!r}, {y!r})")
    return FullBinOpTable(lat, table, neutral=e)


def reference_karacal_mesiar(lat: BoundedLattice, e: str, boundary: PartialBinOpTable, side: str) -> FullBinOpTable:
    """The classical identity-operator degenerate uninorms U_s and U_t.

    side "s": t-conorm on [e,1]; side "t": t-norm on [0,e].  These serve
    as independent oracles for the identity-operator collapse of the
    constructions.
    """
    if side not in ("s", "t"):
        raise ValueError("side must be 's' or 't'")
    upper = set(lat.interval(IntervalSpec(e, lat.top)))
    lower = set(lat.interval(IntervalSpec(lat.bottom, e)))
    inc = set(lat.incomparables(e))
    table = {}
    if side == "s":
        outside = inc | (lower - {e})
        for x in lat.elements:
            for y in lat.elements:
                if x in upper and y in upper:
                    table[x, y] = boundary(x, y)
                elif x in outside and y in upper:
                    table[x, y] = x
                elif x in upper and y in outside:
                    table[x, y] = y
                else:
                    table[x, y] = lat.bottom
    else:
        outside = inc | (upper - {e})
        for x in lat.elements:
            for y in lat.elements:
                if x in lower and y in lower:
                    table[x, y] = boundary(x, y)
                elif x in outside and y in lower:
                    table[x, y] = x
                elif x in lower and y in outside:
                    table[x, y] = y
                else:
                    table[x, y] = lat.top
    return FullBinOpTable(lat, table, neutral=e)


def _is_antichain(lat: BoundedLattice, xs) -> bool:
    xs = list(xs)
    return all(
        lat.incomparable(x, y) for i, x in enumerate(xs) for y in xs[i + 1 :]
    )


def structural_class_predicate(spec: ConstructionSpec) -> bool:
    """Lattice-shape side condition forcing the constructed uninorm into
    the matching boundary class.

    Non-strict families: the relevant open interval is empty, a singleton,
    or an antichain.  Strict families additionally require the same of the
    incomparability region.  Sufficient only, never necessary.
    """
    lat = spec.lattice
    side = spec.low_open if spec.family.closure_based else spec.high_open
    side_ok = len(side) <= 1 or _is_antichain(lat, side)
    if not spec.family.strict:
        return side_ok
    inc = spec.inc
    inc_ok = len(inc) <= 1 or _is_antichain(lat, inc)
    return side_ok and inc_ok
