from hypothesis import given, settings

from quivergrass.core import make_parahoric
from quivergrass.desing import (
    build_hat_ambient,
    canonical_point,
    hat_aut_dim_oracle,
    hat_dim_vector,
    hat_fixed_points,
    hat_point_tangent_dim,
    pattern_tangent_dim,
    point_subsets,
    project_hat,
    restrict_point,
)
from quivergrass.fixedpoints import enumerate_fixed_points
from quivergrass.geometry import aut_dim_oracle, component_image, irr_components
from quivergrass.momentgraph import cell_closure
from quivergrass.oracle import enumerate_subreps
from quivergrass.projections import project_pattern

from conftest import instances

GR2 = make_parahoric(2, 1, 1, [1])
FULL2 = make_parahoric(2, 1, 1, [1, 2])
LOOP22 = make_parahoric(2, 1, 2, [1])


def test_hat_ambient_dimensions():
    assert build_hat_ambient(FULL2).dims() == {(1, 1): 2, (2, 1): 2, (1, 2): 1, (2, 2): 1}
    assert build_hat_ambient(GR2).dims() == {(1, 1): 2}
    assert build_hat_ambient(LOOP22).dims() == {(1, 1): 4, (1, 2): 2}


def test_hat_arrow_counts():
    for P in [FULL2, LOOP22, make_parahoric(3, 1, 2, [1, 3])]:
        rep = build_hat_ambient(P)
        a = sum(1 for ar in rep.arrows if ar.target[1] == ar.source[1] + 1)
        b = sum(1 for ar in rep.arrows if ar.target[1] == ar.source[1] - 1)
        assert a == b == P.r * (P.L - 1)
        assert len(rep.arrows) == a + b
        # level-raising arrows surject onto the next level
        for ar in rep.arrows:
            if ar.target[1] == ar.source[1] + 1:
                assert set(ar.images.values()) == set(rep.basis[ar.target])


def test_hat_dim_vector_examples():
    assert hat_dim_vector(FULL2, (1,)) == {(1, 1): 1, (2, 1): 1, (1, 2): 1, (2, 2): 0}
    assert hat_dim_vector(FULL2, (2,)) == {(1, 1): 1, (2, 1): 1, (1, 2): 0, (2, 2): 1}
    assert hat_dim_vector(GR2, (1,)) == {(1, 1): 1}
    P0 = make_parahoric(2, 0, 1, [1, 2])
    assert set(hat_dim_vector(P0, ()).values()) == {0}


def test_hat_dims_weakly_decrease_along_levels():
    for P in [FULL2, LOOP22, make_parahoric(3, 2, 2, [1, 3])]:
        ambient = build_hat_ambient(P).dims()
        for comp in irr_components(P):
            dims = hat_dim_vector(P, comp.I)
            for i in range(1, P.r + 1):
                for j in range(1, P.L):
                    assert ambient[(i, j + 1)] <= ambient[(i, j)]
                    assert dims[(i, j + 1)] <= dims[(i, j)]


def test_hat_fixed_points_line():
    pts = hat_fixed_points(FULL2, (1,))
    assert len(pts) == 2
    images = {restrict_point(FULL2, p) for p in pts}
    assert images == {((1,), (2,)), ((2,), (2,))}
    assert images == set(cell_closure(FULL2, ((1,), (2,))))


def test_hat_fixed_points_gr2():
    pts = hat_fixed_points(GR2, (1,))
    assert len(pts) == 2
    assert {restrict_point(GR2, p) for p in pts} == {((1,),), ((2,),)}
    P0 = make_parahoric(2, 0, 1, [1])
    assert len(hat_fixed_points(P0, ())) == 1


def test_hat_points_match_subset_oracle():
    cases = [
        (FULL2, (1,)),
        (FULL2, (2,)),
        (LOOP22, (1,)),
        (GR2, (1,)),
        (make_parahoric(3, 1, 2, [1, 3]), (1,)),
        (make_parahoric(3, 1, 2, [1, 3]), (3,)),
        (make_parahoric(3, 2, 1, [1, 2, 3]), (2, 3)),
        (make_parahoric(3, 2, 2, [2]), (1, 2)),
    ]
    for P, I in cases:
        rep = build_hat_ambient(P)
        dims = hat_dim_vector(P, I)
        brute = enumerate_subreps(rep, dims)
        pts = hat_fixed_points(P, I)
        assert len(brute) == len(pts)
        assert {tuple(sorted(sub.items())) for sub in brute} == {
            tuple(sorted(point_subsets(P, p).items())) for p in pts
        }


def test_tangent_examples():
    for p in hat_fixed_points(FULL2, (1,)):
        assert hat_point_tangent_dim(FULL2, p) == 1
    assert pattern_tangent_dim(FULL2, ((2,), (2,))) == 2  # the singular point
    assert pattern_tangent_dim(FULL2, ((1,), (2,))) == 1
    P0 = make_parahoric(2, 0, 1, [1, 2])
    assert pattern_tangent_dim(P0, ((), ())) == 0


def test_hat_aut_examples():
    assert hat_aut_dim_oracle(FULL2) == aut_dim_oracle(FULL2) == 2 * 1 * 2
    assert hat_aut_dim_oracle(GR2) == aut_dim_oracle(GR2) == 4
    assert hat_aut_dim_oracle(LOOP22) == aut_dim_oracle(LOOP22)


def test_project_hat_examples():
    pts = hat_fixed_points(FULL2, (1,))
    pushed = {project_hat(FULL2, (1,), p) for p in pts}
    target = set(hat_fixed_points(GR2, component_image(FULL2, (1,), (1,))))
    assert pushed == target
    # identity when nothing is removed
    for p in pts:
        assert project_hat(FULL2, (1, 2), p) == p


def test_restrict_of_canonical_point_recovers_tails():
    for P in [FULL2, LOOP22, make_parahoric(3, 2, 1, [1, 3])]:
        for ell, J in enumerate_fixed_points(P):
            assert restrict_point(P, canonical_point(P, ell)) == J


@given(instances(max_n=3))
@settings(max_examples=25, deadline=None)
def test_desing_fixed_point_fibration(P):
    """Fixed points upstairs map exactly onto the fixed points of the
    component closure, smoothly, with the projection square commuting."""
    from itertools import combinations

    expected = P.omega * P.k * (P.n - P.k)
    assert hat_aut_dim_oracle(P) == aut_dim_oracle(P)
    for comp in irr_components(P):
        pts = hat_fixed_points(P, comp.I)
        closure = set(cell_closure(P, comp.top))
        assert {restrict_point(P, p) for p in pts} == closure
        for p in pts:
            assert hat_point_tangent_dim(P, p) == expected
        for size in range(1, P.r):
            for S2 in combinations(P.S, size):
                Pp = P.restrict(S2)
                for p in pts:
                    q = project_hat(P, S2, p)
                    assert restrict_point(Pp, q) == project_pattern(
                        P, S2, restrict_point(P, p)
                    )
