import pytest
from hypothesis import given, settings

from quivergrass.core import make_parahoric
from quivergrass.fixedpoints import all_patterns
from quivergrass.oracle import (
    Arrow,
    BasisRep,
    BudgetExceededError,
    ambient_basis_rep,
    end_space_dim,
    enumerate_subreps,
    hom_space_dim,
    quotient_rep,
    subrep_index_sets,
    subrep_rep,
)

from conftest import instances


def test_enumerate_subreps_examples():
    P = make_parahoric(2, 1, 1, [1, 2])
    subs = enumerate_subreps(ambient_basis_rep(P), {1: 1, 2: 1})
    assert [subrep_index_sets(P, s) for s in subs] == [
        ((1,), (2,)),
        ((2,), (1,)),
        ((2,), (2,)),
    ]
    P = make_parahoric(2, 1, 2, [1])
    subs = enumerate_subreps(ambient_basis_rep(P), {1: 2})
    assert [subrep_index_sets(P, s) for s in subs] == [((1, 3),), ((2, 4),), ((3, 4),)]
    assert len(enumerate_subreps(ambient_basis_rep(P), {1: 0})) == 1


def test_budget_is_enforced():
    P = make_parahoric(4, 2, 2, [1, 2, 3, 4])
    with pytest.raises(BudgetExceededError):
        enumerate_subreps(ambient_basis_rep(P), {v: 4 for v in range(1, 5)}, budget=1000)


def test_end_space_examples():
    assert end_space_dim(ambient_basis_rep(make_parahoric(2, 1, 1, [1]))) == 4
    assert end_space_dim(ambient_basis_rep(make_parahoric(2, 1, 1, [1, 2]))) == 4


def test_hom_to_zero():
    M = BasisRep((1,), {1: (1, 2)}, (Arrow(1, 1, {}),))
    Z = BasisRep((1,), {1: ()}, (Arrow(1, 1, {}),))
    assert hom_space_dim(M, Z) == 0
    assert hom_space_dim(Z, M) == 0


def test_end_dim_is_basis_order_independent():
    P = make_parahoric(3, 1, 1, [1, 3])
    rep = ambient_basis_rep(P)
    relabel = {t: 10 - t for t in range(1, P.m + 1)}  # reverse the basis order
    shuffled = BasisRep(
        rep.vertices,
        {v: tuple(sorted(relabel[b] for b in rep.basis[v])) for v in rep.vertices},
        tuple(
            Arrow(a.source, a.target, {relabel[b]: relabel[c] for b, c in a.images.items()})
            for a in rep.arrows
        ),
    )
    assert end_space_dim(shuffled) == end_space_dim(rep) == 9


def test_sub_and_quotient_shapes():
    P = make_parahoric(2, 1, 1, [1, 2])
    rep = ambient_basis_rep(P)
    sub = {1: (2,), 2: (2,)}
    V = subrep_rep(rep, sub)
    Q = quotient_rep(rep, sub)
    assert V.dims() == {1: 1, 2: 1} and Q.dims() == {1: 1, 2: 1}
    # quotient maps vanish because the surviving images land in the subspace
    assert all(not a.images for a in Q.arrows)
    with pytest.raises(Exception):
        subrep_rep(rep, {1: (1,), 2: (1,)})  # not closed: 1 maps to 2


@given(instances(max_n=3, max_omega=2))
@settings(max_examples=30, deadline=None)
def test_oracle_matches_pattern_enumeration(P):
    rep = ambient_basis_rep(P)
    subs = enumerate_subreps(rep, {v: P.k * P.omega for v in rep.vertices})
    assert {subrep_index_sets(P, s) for s in subs} == set(all_patterns(P))
