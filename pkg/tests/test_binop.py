import random

import pytest

from latuni import (
    FullBinOpTable,
    IntervalSpec,
    TCONORM,
    TNORM,
    check_associativity_partitioned,
    classify,
    construct,
    join_tconorm,
    meet_tnorm,
    strictness_check,
    validate_partial,
    validate_uninorm,
)
from latuni.binop import associativity_witnesses, restrict_to_interval
from latuni.errors import (
    AxiomViolation,
    NotAPartition,
    NotAUninorm,
    NotCommutative,
    OutOfDomainOutput,
)
from latuni.fixtures import chain, m3, n5
from reference_tables import L1_TABLE, L2_TABLE


def partition_around(lat, e):
    """{bottom} / ]bottom,e[ / {e} / incomparables / ]e,top]."""
    return [
        (lat.bottom,),
        lat.interval(IntervalSpec(lat.bottom, e, True, True)),
        (e,),
        lat.incomparables(e),
        lat.interval(IntervalSpec(e, lat.top, low_open=True)),
    ]


# -- partial tables ----------------------------------------------------------

def test_join_is_a_tconorm_on_upper_interval(fx_l1):
    s = fx_l1.tconorm
    assert s.role == TCONORM
    assert s("j", "1") == "1" and s("e", "j") == "j"


def test_meet_is_a_tnorm_on_lower_interval(fx_l1):
    lat = fx_l1.lattice
    t = meet_tnorm(lat, "e")
    assert t.role == TNORM
    assert t("a", "b") == "a" and t("e", "b") == "b"


def test_partial_rejects_out_of_domain_output(fx_l1):
    lat = fx_l1.lattice
    dom = lat.interval(IntervalSpec("e", "1"))
    table = {(x, y): lat.join(x, y) for x in dom for y in dom}
    table["j", "j"] = "m"
    with pytest.raises(OutOfDomainOutput):
        validate_partial(lat, IntervalSpec("e", "1"), TCONORM, table)


def test_partial_rejects_broken_axiom(fx_l1):
    lat = fx_l1.lattice
    dom = lat.interval(IntervalSpec("e", "1"))
    table = {(x, y): lat.join(x, y) for x in dom for y in dom}
    table["j", "1"] = "j"  # breaks commutativity against (1, j)
    with pytest.raises(AxiomViolation):
        validate_partial(lat, IntervalSpec("e", "1"), TCONORM, table)


def test_l3_tconorm_strict_below_top(fx_l3):
    ok, wit = strictness_check(fx_l3.tconorm)
    assert ok and wit == ()


def test_strictness_trivial_when_interior_empty():
    # ]c1,c2[ is empty, so no pair can violate strictness
    lat = chain(3)
    s = join_tconorm(lat, "c1")
    ok, _ = strictness_check(s)
    assert ok


def test_strictness_fails_on_collapsing_tconorm():
    lat = chain(4)  # c1 < c2 < c3 with e = c1
    dom = lat.interval(IntervalSpec("c1", "c3"))
    table = {(x, y): lat.join(x, y) for x in dom for y in dom}
    table["c2", "c2"] = "c3"
    s = validate_partial(lat, IntervalSpec("c1", "c3"), TCONORM, table)
    ok, wit = strictness_check(s)
    assert not ok and wit == (("c2", "c2"),)


# -- full tables -------------------------------------------------------------

def test_reference_table_passes_all_axioms(fx_l1):
    table = FullBinOpTable(fx_l1.lattice, dict(L1_TABLE), neutral="e")
    report = validate_uninorm(table)
    assert report.ok


def test_mutated_cell_is_detected(fx_l1):
    broken = dict(L1_TABLE)
    broken["a", "j"] = "j"
    broken["j", "a"] = "j"
    report = validate_uninorm(FullBinOpTable(fx_l1.lattice, broken, neutral="e"))
    assert not report.ok


def test_meet_is_a_uninorm_with_top_neutral(fx_l1):
    lat = fx_l1.lattice
    table = {(x, y): lat.meet(x, y) for x in lat.elements for y in lat.elements}
    report = validate_uninorm(FullBinOpTable(lat, table, neutral=lat.top))
    assert report.ok


def test_restriction_of_uninorm_is_tconorm(fx_l1):
    u = construct(fx_l1.spec())
    s = restrict_to_interval(u, IntervalSpec("e", "1"), TCONORM)
    assert s.role == TCONORM


# -- partitioned associativity ----------------------------------------------

def test_partitioned_matches_full_scan_on_reference(fx_l1):
    table = FullBinOpTable(fx_l1.lattice, dict(L1_TABLE), neutral="e")
    blocks = partition_around(fx_l1.lattice, "e")
    ok, wit = check_associativity_partitioned(table, blocks)
    assert ok and wit is None


def test_single_block_partition_equals_full_scan(fx_l2):
    table = FullBinOpTable(fx_l2.lattice, dict(L2_TABLE), neutral="e")
    ok, _ = check_associativity_partitioned(table, [fx_l2.lattice.elements])
    assert ok


def test_partitioned_detects_mutation(fx_l1):
    broken = dict(L1_TABLE)
    broken["a", "j"] = "j"
    broken["j", "a"] = "j"
    table = FullBinOpTable(fx_l1.lattice, broken, neutral="e")
    blocks = partition_around(fx_l1.lattice, "e")
    ok, wit = check_associativity_partitioned(table, blocks)
    full = associativity_witnesses(table)
    assert not ok
    assert bool(full)
    # the witness refutes either plain associativity or its exchange form,
    # which are equivalent up to commutativity
    x, y, z = wit
    t = broken
    assert t[x, t[y, z]] != t[t[x, y], z] or t[x, t[y, z]] != t[y, t[x, z]]


def test_partitioned_rejects_bad_partition(fx_l1):
    table = FullBinOpTable(fx_l1.lattice, dict(L1_TABLE), neutral="e")
    with pytest.raises(NotAPartition):
        check_associativity_partitioned(table, [("0", "a"), ("a", "b")])


def test_partitioned_rejects_noncommutative(fx_l1):
    broken = dict(L1_TABLE)
    broken["a", "j"] = "j"  # one-sided edit
    table = FullBinOpTable(fx_l1.lattice, broken, neutral="e")
    with pytest.raises(NotCommutative):
        check_associativity_partitioned(table, [fx_l1.lattice.elements])


def random_commutative_table(lat, rng):
    table = {}
    for i, x in enumerate(lat.elements):
        for y in lat.elements[i:]:
            v = rng.choice(lat.elements)
            table[x, y] = v
            table[y, x] = v
    return FullBinOpTable(lat, table, neutral=lat.elements[0])


@pytest.mark.parametrize("lattice_factory,e", [(m3, "a"), (n5, "b"), (lambda: chain(5), "c2")])
def test_partitioned_agrees_on_random_tables(lattice_factory, e):
    lat = lattice_factory()
    rng = random.Random(20240811)
    blocks = partition_around(lat, e)
    for _ in range(200):
        table = random_commutative_table(lat, rng)
        ok, _ = check_associativity_partitioned(table, blocks)
        assert ok == (not associativity_witnesses(table))


# -- classification ----------------------------------------------------------

def test_classify_reference_tables(fx_l1, fx_l2):
    m1 = classify(FullBinOpTable(fx_l1.lattice, dict(L1_TABLE), neutral="e"))
    assert not m1["u_min_star"].member
    assert m1["u_min_star"].witnesses[0] == ("j", "a", "b")
    assert not m1["u_min_1"].member

    m2 = classify(FullBinOpTable(fx_l2.lattice, dict(L2_TABLE), neutral="e"))
    assert m2["u_min_star"].member
    assert not m2["u_min"].member
    assert ("b", "s", "n") in m2["u_min"].witnesses
    assert not m2["u_max_r"].member
    assert ("a", "s", "0") in m2["u_max_r"].witnesses


def test_classify_meet_with_top_neutral_is_u_min(fx_l1):
    lat = fx_l1.lattice
    table = {(x, y): lat.meet(x, y) for x in lat.elements for y in lat.elements}
    membership = classify(FullBinOpTable(lat, table, neutral=lat.top))
    assert membership["u_min"].member  # vacuous: nothing lies above the neutral


def test_classify_rejects_non_uninorm(fx_l1):
    broken = dict(L1_TABLE)
    broken["a", "j"] = "j"
    broken["j", "a"] = "j"
    with pytest.raises(NotAUninorm):
        classify(FullBinOpTable(fx_l1.lattice, broken, neutral="e"))


def test_classify_flags_match_direct_reevaluation(fx_l1):
    lat = fx_l1.lattice
    u = FullBinOpTable(lat, dict(L1_TABLE), neutral="e")
    membership = classify(u)
    above = lat.interval(IntervalSpec("e", "1", low_open=True))
    below = lat.interval(IntervalSpec("0", "e", high_open=True))
    direct = all(u(x, y) == y for x in above for y in below)
    assert membership["u_min_star"].member == direct
    for name, flag in membership.flags.items():
        for x, y, v in flag.witnesses:
            assert u(x, y) == v
