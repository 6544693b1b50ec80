import pytest
from hypothesis import given, settings

from quivergrass.core import InstanceError, make_parahoric
from quivergrass.fixedpoints import (
    all_patterns,
    cell_parameter_count,
    chain_membership_counts,
    energy_table,
    to_lvector,
    validate_pattern,
)
from quivergrass.projections import (
    commutation_check,
    image_check,
    lift_pattern,
    project_pattern,
)

from conftest import nested_instances

GR2 = make_parahoric(2, 1, 1, [1])
FULL2 = make_parahoric(2, 1, 1, [1, 2])


def test_project_examples():
    assert project_pattern(FULL2, (1,), ((1,), (2,))) == ((1,),)
    assert project_pattern(FULL2, (1,), ((2,), (1,))) == ((2,),)
    assert project_pattern(FULL2, (1,), ((2,), (2,))) == ((2,),)
    assert project_pattern(FULL2, (1, 2), ((1,), (2,))) == ((1,), (2,))
    P0 = make_parahoric(2, 0, 1, [1, 2])
    assert project_pattern(P0, (2,), ((), ())) == ((),)
    with pytest.raises(InstanceError):
        project_pattern(GR2, (2,), ((1,),))


def test_lift_examples():
    assert lift_pattern(GR2, (1, 2), ((1,),)) == ((1,), (2,))
    assert lift_pattern(GR2, (1, 2), ((2,),)) == ((2,), (2,))
    assert lift_pattern(GR2, (1,), ((1,),)) == ((1,),)


def test_image_check_examples():
    assert image_check(FULL2, (1,))
    assert image_check(FULL2, (1, 2))
    assert image_check(make_parahoric(3, 2, 2, [1, 2, 3]), (1, 3))


def test_commutation_examples():
    assert commutation_check(make_parahoric(3, 1, 1, [1, 2, 3]), (1, 2))
    assert commutation_check(make_parahoric(4, 2, 1, [1, 2, 3, 4]), (2, 4))
    assert commutation_check(make_parahoric(4, 1, 1, [1, 2, 3, 4]), (3,))
    with pytest.raises(InstanceError):
        commutation_check(GR2, (1,))  # not the full instance
    with pytest.raises(InstanceError):
        commutation_check(FULL2, (1, 2))  # nothing left


@given(nested_instances())
@settings(max_examples=50, deadline=None)
def test_projection_properties(data):
    P, S2 = data
    Pp = P.restrict(S2)
    table_p = energy_table(Pp)
    table = energy_table(P)
    image = set()
    for J in all_patterns(P):
        proj = project_pattern(P, S2, J)
        image.add(proj)
        assert validate_pattern(Pp, proj)
        assert table_p[proj] <= table[J]
        assert cell_parameter_count(Pp, proj) <= cell_parameter_count(P, J)
        # tails project to tails: per-chain membership recount
        assert to_lvector(Pp, proj) == chain_membership_counts(Pp, proj)
    assert image == set(all_patterns(Pp))


@given(nested_instances())
@settings(max_examples=50, deadline=None)
def test_lift_is_a_section(data):
    P, S2 = data
    Pp = P.restrict(S2)
    for Jp in all_patterns(Pp):
        lifted = lift_pattern(Pp, P.S, Jp)
        assert validate_pattern(P, lifted)
        assert project_pattern(P, S2, lifted) == Jp
