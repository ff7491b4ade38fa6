"""Binary operation tables and their axiom checkers.

Partial tables (t-norms / t-conorms on a closed subinterval) are
certified at construction.  Full tables carry no algebraic guarantees:
:func:`validate_uninorm` produces an AxiomReport whose witnesses, when
present, refute the axiom on re-evaluation.  All scans run row-major over
declared element order so the first witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AxiomViolation,
    MismatchedLattice,
    NotAPartition,
    NotAUninorm,
    NotCommutative,
    OutOfDomainOutput,
    UnknownElement,
)
from .lattice import BoundedLattice, IntervalSpec

TNORM = "tnorm"
TCONORM = "tconorm"


@dataclass(frozen=True)
class PartialBinOpTable:
    """A certified t-norm or t-conorm on a closed subinterval."""

    lattice: BoundedLattice
    domain: IntervalSpec
    role: str
    table: dict = field(compare=False)

    @property
    def domain_elements(self) -> tuple[str, ...]:
        return self.lattice.interval(self.domain)

    def __call__(self, x, y) -> str:
        return self.table[x, y]

    def __eq__(self, other):
        return (
            isinstance(other, PartialBinOpTable)
            and self.lattice == other.lattice
            and self.domain == other.domain
            and self.role == other.role
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.domain, self.role, tuple(sorted(self.table.items()))))


@dataclass(frozen=True)
class FullBinOpTable:
    """A total binary operation on the lattice with a claimed neutral element."""

    lattice: BoundedLattice
    table: dict = field(compare=False)
    neutral: str = ""

    def __call__(self, x, y) -> str:
        return self.table[x, y]

    def __eq__(self, other):
        return (
            isinstance(other, FullBinOpTable)
            and self.lattice == other.lattice
            and self.table == other.table
            and self.neutral == other.neutral
        )

    def __hash__(self):
        return hash((self.neutral, tuple(sorted(self.table.items()))))


@dataclass
class AxiomCheck:
    ok: bool
    witness: tuple | None = None


@dataclass
class AxiomReport:
    commutative: AxiomCheck
    associative: AxiomCheck
    monotone: AxiomCheck
    neutral: AxiomCheck

    @property
    def ok(self) -> bool:
        return (
            self.commutative.ok
            and self.associative.ok
            and self.monotone.ok
            and self.neutral.ok
        )

    def as_dict(self) -> dict:
        return {
            name: {"ok": check.ok, "witness": check.witness}
            for name, check in (
                ("commutative", self.commutative),
                ("associative", self.associative),
                ("monotone", self.monotone),
                ("neutral", self.neutral),
            )
        }


CLASS_NAMES = (
    "u_min",
    "u_max",
    "u_min_star",
    "u_max_star",
    "u_min_r",
    "u_max_r",
    "u_min_1",
    "u_max_0",
)


@dataclass
class ClassFlag:
    member: bool
    witnesses: tuple = ()


@dataclass
class ClassMembership:
    """Membership flags for the eight uninorm classes.

    Each failed flag carries the full witness list ((x, y) -> value) in
    scan order; the first entry is the canonical witness.
    """

    flags: dict

    def __getitem__(self, name) -> ClassFlag:
        return self.flags[name]

    def as_dict(self) -> dict:
        return {
            name: {"member": flag.member, "witnesses": list(flag.witnesses)}
            for name, flag in self.flags.items()
        }


def _check_total(lat: BoundedLattice, elements, table):
    for x in elements:
        for y in elements:
            if (x, y) not in table:
                raise UnknownElement((x, y))
            v = table[x, y]
            if v not in lat:
                raise UnknownElement(v)


def validate_partial(lat: BoundedLattice, domain: IntervalSpec, role: str, table) -> PartialBinOpTable:
    """Certify a table as a t-norm or t-conorm on a closed interval."""
    if role not in (TNORM, TCONORM):
        raise ValueError(f"role must be {TNORM!r} or {TCONORM!r}")
    if domain.low_open or domain.high_open:
        raise ValueError("partial operation domains must be closed intervals")
    dom = lat.interval(domain)
    table = dict(table)
    _check_total(lat, dom, table)
    domset = set(dom)
    for x in dom:
        for y in dom:
            if table[x, y] not in domset:
                raise OutOfDomainOutput(x, y, table[x, y])

    neutral = domain.high if role == TNORM else domain.low
    for x in dom:
        if table[neutral, x] != x or table[x, neutral] != x:
            raise AxiomViolation("neutral", (x,))
    for x in dom:
        for y in dom:
            if table[x, y] != table[y, x]:
                raise AxiomViolation("commutative", (x, y))
    for x in dom:
        for y in dom:
            for z in dom:
                if table[x, table[y, z]] != table[table[x, y], z]:
                    raise AxiomViolation("associative", (x, y, z))
    for x in dom:
        for y in dom:
            if not lat.leq(x, y):
                continue
            for z in dom:
                if not lat.leq(table[x, z], table[y, z]):
                    raise AxiomViolation("monotone", (x, y, z))
    return PartialBinOpTable(lat, domain, role, table)


def join_tconorm(lat: BoundedLattice, low: str) -> PartialBinOpTable:
    """The t-conorm S(x, y) = x v y on [low, top]."""
    domain = IntervalSpec(low, lat.top)
    dom = lat.interval(domain)
    table = {(x, y): lat.join(x, y) for x in dom for y in dom}
    return validate_partial(lat, domain, TCONORM, table)


def meet_tnorm(lat: BoundedLattice, high: str) -> PartialBinOpTable:
    """The t-norm T(x, y) = x ^ y on [bottom, high]."""
    domain = IntervalSpec(lat.bottom, high)
    dom = lat.interval(domain)
    table = {(x, y): lat.meet(x, y) for x in dom for y in dom}
    return validate_partial(lat, domain, TNORM, table)


def validate_uninorm(candidate: FullBinOpTable) -> AxiomReport:
    """Exhaustively check the four uninorm axioms; failures are data."""
    lat = candidate.lattice
    els = lat.elements
    _check_total(lat, els, candidate.table)
    if candidate.neutral not in lat:
        raise UnknownElement(candidate.neutral)
    t = candidate.table

    neutral = AxiomCheck(True)
    e = candidate.neutral
    for x in els:
        if t[e, x] != x or t[x, e] != x:
            neutral = AxiomCheck(False, (x,))
            break

    commutative = AxiomCheck(True)
    for x in els:
        for y in els:
            if t[x, y] != t[y, x]:
                commutative = AxiomCheck(False, (x, y))
                break
        if not commutative.ok:
            break

    associative = AxiomCheck(True)
    for x in els:
        for y in els:
            for z in els:
                if t[x, t[y, z]] != t[t[x, y], z]:
                    associative = AxiomCheck(False, (x, y, z))
                    break
            if not associative.ok:
                break
        if not associative.ok:
            break

    # Monotonicity over comparable pairs only; the second argument is
    # covered through commutativity when the table is commutative, but we
    # scan both sides so the check stands alone.
    monotone = AxiomCheck(True)
    for x in els:
        for y in els:
            if not lat.leq(x, y) or x == y:
                continue
            for z in els:
                if not lat.leq(t[x, z], t[y, z]) or not lat.leq(t[z, x], t[z, y]):
                    monotone = AxiomCheck(False, (x, y, z))
                    break
            if not monotone.ok:
                break
        if not monotone.ok:
            break

    return AxiomReport(commutative, associative, monotone, neutral)


def associativity_witnesses(candidate: FullBinOpTable):
    """All associativity-violating triples, in scan order."""
    t = candidate.table
    els = candidate.lattice.elements
    return tuple(
        (x, y, z)
        for x in els
        for y in els
        for z in els
        if t[x, t[y, z]] != t[t[x, y], z]
    )


def check_associativity_partitioned(candidate: FullBinOpTable, blocks):
    """Associativity via the block case-analysis for commutative tables.

    blocks must partition the carrier.  Evaluates exactly the four case
    families (three distinct blocks; two-of-one; one-of-one twice on the
    right; all in one block); for a commutative table the result equals
    the full triple scan.
    """
    lat = candidate.lattice
    t = candidate.table
    blocks = [tuple(b) for b in blocks]
    flat = [x for b in blocks for x in b]
    if sorted(flat) != sorted(lat.elements) or len(flat) != len(set(flat)):
        raise NotAPartition("blocks do not partition the lattice")
    for x in lat.elements:
        for y in lat.elements:
            if t[x, y] != t[y, x]:
                raise NotCommutative(f"table not commutative at ({x!r}, {y!r})")

    def holds(x, y, z):
        return t[x, t[y, z]] == t[t[x, y], z]

    n = len(blocks)
    # (i): three distinct blocks, all argument placements.
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for x in blocks[i]:
                    for y in blocks[j]:
                        for z in blocks[k]:
                            if not (
                                holds(x, y, z)
                                and t[x, t[y, z]] == t[y, t[x, z]]
                            ):
                                return False, (x, y, z)
    # (ii): two from one block on the left, one from another.
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for x in blocks[i]:
                for y in blocks[i]:
                    for z in blocks[j]:
                        if not holds(x, y, z):
                            return False, (x, y, z)
    # (iii): one element, then two from another block.
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for x in blocks[i]:
                for y in blocks[j]:
                    for z in blocks[j]:
                        if not holds(x, y, z):
                            return False, (x, y, z)
    # (iv): all three in one block.
    for b in blocks:
        for x in b:
            for y in b:
                for z in b:
                    if not holds(x, y, z):
                        return False, (x, y, z)
    return True, None


def _forced_value_witnesses(candidate, xs, ys, expected):
    t = candidate.table
    out = []
    for x in xs:
        for y in ys:
            want = expected(x, y)
            if t[x, y] != want:
                out.append((x, y, t[x, y]))
    return tuple(out)


def classify(candidate: FullBinOpTable) -> ClassMembership:
    """Membership in the eight uninorm classes by direct evaluation.

    The candidate must pass validate_uninorm first.
    """
    report = validate_uninorm(candidate)
    if not report.ok:
        raise NotAUninorm("candidate fails the uninorm axioms")
    lat = candidate.lattice
    e = candidate.neutral
    above_half = lat.interval(IntervalSpec(e, lat.top, low_open=True))       # ]e,1]
    above_open = lat.interval(IntervalSpec(e, lat.top, low_open=True, high_open=True))
    below_half = lat.interval(IntervalSpec(lat.bottom, e, high_open=True))   # [0,e[
    below_open = lat.interval(IntervalSpec(lat.bottom, e, low_open=True, high_open=True))
    upper = set(lat.interval(IntervalSpec(e, lat.top)))
    lower = set(lat.interval(IntervalSpec(lat.bottom, e)))
    not_upper = tuple(x for x in lat.elements if x not in upper)  # L \ [e,1]
    not_lower = tuple(x for x in lat.elements if x not in lower)  # L \ [0,e]

    snd = lambda x, y: y
    fst = lambda x, y: x
    flags = {}
    flags["u_min"] = _forced_value_witnesses(candidate, above_half, not_upper, snd)
    flags["u_max"] = _forced_value_witnesses(candidate, below_half, not_lower, snd)
    flags["u_min_star"] = _forced_value_witnesses(candidate, above_half, below_half, snd)
    flags["u_max_star"] = _forced_value_witnesses(candidate, below_half, above_half, snd)
    flags["u_min_r"] = _forced_value_witnesses(candidate, above_half, not_upper, fst)
    flags["u_max_r"] = _forced_value_witnesses(candidate, below_half, not_lower, fst)
    flags["u_min_1"] = _forced_value_witnesses(
        candidate, above_open, not_upper, snd
    ) + _forced_value_witnesses(candidate, (lat.top,), not_upper, lambda x, y: lat.top)
    flags["u_max_0"] = _forced_value_witnesses(
        candidate, below_open, not_lower, snd
    ) + _forced_value_witnesses(candidate, (lat.bottom,), not_lower, lambda x, y: lat.bottom)

    return ClassMembership(
        {name: ClassFlag(not ws, ws) for name, ws in flags.items()}
    )


def strictness_check(partial: PartialBinOpTable):
    """For a t-conorm: S(x, y) != top on the open interior; dually for a t-norm.

    Returns (flag, witnesses).
    """
    lat = partial.lattice
    open_spec = IntervalSpec(partial.domain.low, partial.domain.high, True, True)
    interior = lat.interval(open_spec)
    bad = partial.domain.high if partial.role == TCONORM else partial.domain.low
    witnesses = tuple(
        (x, y) for x in interior for y in interior if partial(x, y) == bad
    )
    return not witnesses, witnesses


def restrict_to_interval(candidate: FullBinOpTable, domain: IntervalSpec, role: str) -> PartialBinOpTable:
    """Certify the restriction of a full table to a closed subinterval."""
    dom = candidate.lattice.interval(domain)
    table = {(x, y): candidate(x, y) for x in dom for y in dom}
    return validate_partial(candidate.lattice, domain, role, table)
