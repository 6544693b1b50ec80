import pytest
from hypothesis import given, settings

from quivergrass.core import InstanceError, make_parahoric
from quivergrass.fixedpoints import (
    all_patterns,
    cell_parameter_count,
    energy,
    energy_table,
    enumerate_fixed_points,
    from_lvector,
    stratum_key,
    strata_partition,
    to_lvector,
    validate_pattern,
)

from conftest import instances

GR2 = make_parahoric(2, 1, 1, [1])        # one loop vertex, Gr_1(C^2)
FULL2 = make_parahoric(2, 1, 1, [1, 2])   # both vertices
LOOP22 = make_parahoric(2, 1, 2, [1])     # loop with omega = 2


def test_validate_pattern():
    assert validate_pattern(FULL2, ((1,), (2,))) is True
    assert validate_pattern(FULL2, ((1,), (1,))) is False
    P0 = make_parahoric(3, 0, 1, [1, 2])
    assert validate_pattern(P0, ((), ())) is True


def test_validate_pattern_rejects_malformed():
    with pytest.raises(InstanceError):
        validate_pattern(FULL2, ((1,),))
    with pytest.raises(InstanceError):
        validate_pattern(FULL2, ((1, 2), (2,)))
    with pytest.raises(InstanceError):
        validate_pattern(FULL2, ((3,), (2,)))


def test_all_patterns_examples():
    assert all_patterns(GR2) == (((1,),), ((2,),))
    assert all_patterns(FULL2) == (((1,), (2,)), ((2,), (1,)), ((2,), (2,)))
    assert all_patterns(LOOP22) == (((1, 3),), ((2, 4),), ((3, 4),))


def test_energy_examples():
    assert energy(FULL2, ((1,), (2,))) == 1
    assert energy(FULL2, ((2,), (2,))) == 0
    assert energy(LOOP22, ((1, 3),)) == 2
    assert energy(LOOP22, ((2, 4),)) == 1
    assert energy(LOOP22, ((3, 4),)) == 0


def test_lvector_examples():
    assert from_lvector(LOOP22, (2, 0)) == ((1, 3),)
    assert from_lvector(LOOP22, (0, 2)) == ((2, 4),)
    assert from_lvector(LOOP22, (1, 1)) == ((3, 4),)
    assert to_lvector(FULL2, ((2,), (2,))) == (1, 1)
    with pytest.raises(InstanceError):
        from_lvector(LOOP22, (2, 1))


def test_stratum_examples():
    # both fixed points of Gr_1(C^2) carry the same isomorphism class
    assert stratum_key(GR2, ((1,),)) == stratum_key(GR2, ((2,),)) == ((1, 1),)
    assert len(strata_partition(GR2)) == 1
    keys = {J: stratum_key(FULL2, J) for J in all_patterns(FULL2)}
    assert keys[((1,), (2,))] == ((2, 2),)
    assert keys[((2,), (1,))] == ((1, 2),)
    assert keys[((2,), (2,))] == ((1, 1), (2, 1))
    assert len(strata_partition(FULL2)) == 3
    P0 = make_parahoric(3, 0, 2, [2, 3])
    assert strata_partition(P0) == {(): (((), ()),)}


def test_cell_parameter_examples():
    assert cell_parameter_count(FULL2, ((1,), (2,))) == 1
    assert cell_parameter_count(LOOP22, ((1, 3),)) == 2
    assert cell_parameter_count(LOOP22, ((3, 4),)) == 0


@given(instances())
@settings(max_examples=60, deadline=None)
def test_lvector_round_trip(P):
    for ell, J in enumerate_fixed_points(P):
        assert to_lvector(P, J) == ell
        assert from_lvector(P, ell) == J


@given(instances())
@settings(max_examples=60, deadline=None)
def test_enumerated_patterns_valid_and_sorted(P):
    pats = all_patterns(P)
    assert list(pats) == sorted(pats)
    assert len(set(pats)) == len(pats)
    for J in pats:
        assert validate_pattern(P, J)


@given(instances())
@settings(max_examples=40, deadline=None)
def test_cell_parameters_equal_energy(P):
    for J, e in energy_table(P).items():
        assert cell_parameter_count(P, J) == e


@given(instances())
@settings(max_examples=40, deadline=None)
def test_strata_group_fixed_points(P):
    parts = strata_partition(P)
    pats = all_patterns(P)
    assert sorted(J for group in parts.values() for J in group) == sorted(pats)
    kw = P.k * P.omega
    for key in parts:
        # total tail length recovers the subrepresentation dimension
        assert sum(l for _, l in key) == kw * P.r
