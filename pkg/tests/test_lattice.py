"""Path counting, enumeration, flips, disjoint systems, and the involution."""

import pytest

from lefpath.hilbert import flo, hilbert_m2_closed
from lefpath.lattice import (
    LatticePath,
    check_dvd_theorem,
    count_doubly_disjoint,
    count_paths,
    enumerate_paths,
    enumerate_systems,
    flip,
    involution_phi,
    is_upper,
    lgv_signed_sum,
    path_matrix,
    primitive_segments,
    reflect,
    vertex_sets,
)


def all_instances(max_m):
    for m in range(2, max_m + 1):
        for i in range(flo(3 * (m - 1)) + 1):
            yield m, i


# -- paths and counting ---------------------------------------------------------


def test_path_validation():
    p = LatticePath((0, 0), "EEN")
    assert p.end == (2, 1)
    assert p.vertices() == ((0, 0), (1, 0), (2, 0), (2, 1))
    with pytest.raises(ValueError):
        LatticePath((0, 0), "N")
    with pytest.raises(ValueError):
        LatticePath((0, 1), "")
    with pytest.raises(ValueError):
        LatticePath((0, 0), "X")


def test_count_examples():
    assert count_paths((0, 0), (8, 4)) == 275
    assert count_paths((1, 1), (7, 3)) == 20
    assert count_paths((0, 0), (2, 1)) == 2


def test_count_unreachable():
    assert count_paths((3, 3), (5, 1)) == 0
    assert count_paths((3, 3), (1, 1)) == 0
    assert count_paths((2, 2), (2, 2)) == 1


def test_count_rejects_bad_inputs():
    with pytest.raises(ValueError):
        count_paths((1, 0), (3, 2))
    with pytest.raises(ValueError):
        count_paths((0, 0), (1, 2))


def test_enumerate_examples():
    assert [p.steps for p in enumerate_paths((0, 0), (2, 1))] == ["EEN", "ENE"]
    assert [p.steps for p in enumerate_paths((0, 0), (0, 0))] == [""]
    assert len(enumerate_paths((1, 1), (7, 3))) == 20


def test_enumeration_matches_count_everywhere():
    for m, i in all_instances(5):
        vs = vertex_sets(m, i)
        for s in vs.sources:
            for t in vs.targets:
                assert len(enumerate_paths(s, t)) == count_paths(s, t)


def test_enumeration_is_sorted_and_unique():
    paths = [p.steps for p in enumerate_paths((0, 0), (6, 3))]
    assert paths == sorted(paths)
    assert len(set(paths)) == len(paths)


# -- vertex sets and path matrix ------------------------------------------------


def test_vertex_sets_examples():
    vs = vertex_sets(5, 3)
    assert vs.sources == ((0, 0), (1, 1))
    assert vs.targets == ((8, 4), (7, 3))
    vs = vertex_sets(5, 4)
    assert vs.sources == ((0, 0), (1, 1), (2, 2))
    assert vs.targets == ((8, 4), (7, 3), (6, 2))
    vs = vertex_sets(5, 6)
    assert vs.sources == ((1, 1), (2, 2), (3, 3))
    assert vs.targets == ((7, 3), (6, 2), (5, 1))


def test_vertex_sets_sizes_and_lines():
    for m, i in all_instances(8):
        vs = vertex_sets(m, i)
        assert len(vs) == hilbert_m2_closed(m, i)
        assert all(x == y for x, y in vs.sources)
        assert all(y == x - (m - 1) for x, y in vs.targets)


def test_vertex_sets_range_error():
    with pytest.raises(ValueError):
        vertex_sets(5, 7)


def test_path_matrix_examples():
    assert path_matrix(5, 3).rows == ((275, 75), (75, 20))
    assert path_matrix(5, 6).rows == ((20, 5, 1), (5, 1, 0), (1, 0, 0))
    assert path_matrix(4, 2).rows == ((48, 14), (14, 4))


# -- primitive segments and flips -----------------------------------------------


def test_primitive_segments_horizontal():
    # first shifted-diagonal touch is the endpoint itself
    path = LatticePath((1, 1), "EEEE")
    decomposition = primitive_segments(path, 5)
    assert decomposition.initial == path
    assert decomposition.segments == ()


def test_primitive_segments_strictly_above():
    # strictly above the shifted diagonal until the endpoint: initial only
    path = LatticePath((0, 0), "EE")
    decomposition = primitive_segments(path, 3)
    assert decomposition.initial == path and decomposition.segments == ()


def test_primitive_segments_needs_endpoint_on_line():
    with pytest.raises(ValueError):
        primitive_segments(LatticePath((0, 0), "ENENEENN"), 5)


def test_primitive_segments_with_lower_piece():
    path = LatticePath((0, 0), "EEEE" + "EEEENNNN")
    decomposition = primitive_segments(path, 5)
    assert decomposition.initial == LatticePath((0, 0), "EEEE")
    assert len(decomposition.segments) == 1
    piece, side = decomposition.segments[0]
    assert side == "lower"
    assert piece.start == (4, 0) and piece.end == (8, 4)


def test_flip_fixes_upper_paths():
    upper = LatticePath((0, 0), "ENENE")  # bounces along y = x - 1
    assert is_upper(upper, 2)
    assert flip(upper, 2) == upper


def test_flip_reflects_lower_segment():
    path = LatticePath((0, 0), "EEEEEEEENNNN")
    flipped = flip(path, 5)
    assert flipped == LatticePath((0, 0), "EEEENNNNEEEE")
    assert flipped.start == path.start and flipped.end == path.end
    assert is_upper(flipped, 5)


def test_flip_is_idempotent_and_fixes_exactly_uppers():
    for m, i in all_instances(4):
        vs = vertex_sets(m, i)
        for s in vs.sources:
            for t in vs.targets:
                for p in enumerate_paths(s, t):
                    once = flip(p, m)
                    assert is_upper(once, m)
                    assert flip(once, m) == once
                    assert (once == p) == is_upper(p, m)
                    assert once.start == p.start and once.end == p.end


def test_reflection_is_an_involution():
    for point in [(3, 0), (5, 2), (8, 4), (1, 1)]:
        assert reflect(reflect(point, 5), 5) == point


def test_double_reflection_restores_lower_segments():
    # un-reflecting the reflected pieces recovers the original path
    path = LatticePath((0, 0), "EEEEEEEENNNN")
    decomposition = primitive_segments(path, 5)
    flipped = flip(path, 5)
    redecomposed = primitive_segments(flipped, 5)
    assert redecomposed.initial == decomposition.initial
    for (orig, side), (new, _) in zip(
        decomposition.segments, redecomposed.segments
    ):
        if side == "lower":
            assert new.steps == orig.steps.translate(str.maketrans("NE", "EN"))


# -- systems ---------------------------------------------------------------------


def test_doubly_counts_match_worked_example():
    assert count_doubly_disjoint(5, 3) == 125
    assert count_doubly_disjoint(5, 4) == 0
    assert count_doubly_disjoint(5, 6) == 1


def test_unique_doubly_system_at_5_6():
    (system,) = list(enumerate_systems(5, 6, "doubly_vertex_disjoint"))
    # three horizontal paths at y = 1, 2, 3, pairing sources to reversed targets
    assert [p.start for p in system.paths] == [(1, 1), (2, 2), (3, 3)]
    assert [p.steps for p in system.paths] == ["EEEE", "EEEE", "EEEE"]
    assert system.permutation == (2, 1, 0)
    assert system.sign == -1


def test_lgv_examples():
    assert lgv_signed_sum(5, 3) == -125
    assert lgv_signed_sum(5, 4) == 0
    assert lgv_signed_sum(2, 0) == 2


def test_lgv_matches_determinant_exhaustively():
    for m, i in all_instances(5):
        det = path_matrix(m, i).det()
        assert lgv_signed_sum(m, i) == det


def test_doubly_systems_reverse_order():
    for m, i in all_instances(5):
        h = hilbert_m2_closed(m, i)
        reversal = tuple(reversed(range(h)))
        expected_sign = -1 if flo(h) % 2 else 1
        for system in enumerate_systems(m, i, "doubly_vertex_disjoint"):
            assert system.permutation == reversal
            assert system.sign == expected_sign


def test_dvd_theorem_exhaustively():
    for m, i in all_instances(5):
        verdict = check_dvd_theorem(m, i, "enumerate")
        assert verdict.count_matches_det
        assert verdict.det == verdict.predicted_sign * verdict.n_doubly or (
            verdict.det == 0 and verdict.n_doubly == 0
        )


def test_dvd_verdict_fields():
    v = check_dvd_theorem(5, 3, "enumerate")
    assert (v.det, v.predicted_sign, v.n_doubly) == (-125, -1, 125)
    assert v.count_matches_det and v.nonvanishing_rule_agrees
    v = check_dvd_theorem(5, 4, "enumerate")
    assert (v.det, v.n_doubly) == (0, 0)
    assert v.nonvanishing_rule_agrees
    v = check_dvd_theorem(5, 6, "enumerate")
    assert (v.det, v.n_doubly, v.count_matches_det) == (-1, 1, True)
    assert not v.nonvanishing_rule_agrees  # det != 0 yet 2*h = 6 > 5
    assert not v.in_rule_range


def test_det_only_mode():
    v = check_dvd_theorem(5, 3, "det_only")
    assert v.n_doubly is None and v.count_matches_det is None
    assert v.det == -125


def test_enumerate_systems_all_filter():
    # raw count is the permanent-style sum of products of path counts
    total = sum(1 for _ in enumerate_systems(3, 2, "all"))
    w = path_matrix(3, 2)
    assert total == w[0, 0] * w[1, 1] + w[0, 1] * w[1, 0]


def test_enumerate_systems_rejects_bad_filter():
    with pytest.raises(ValueError):
        list(enumerate_systems(3, 2, "bogus"))


# -- the involution ---------------------------------------------------------------


@pytest.mark.parametrize("m,i", [(4, 2), (5, 4)])
def test_involution_on_all_of_n(m, i):
    systems = list(enumerate_systems(m, i, "vertex_disjoint"))
    n_set = {s for s in systems if not s.is_doubly_vertex_disjoint()}
    assert sum(s.sign for s in n_set) == 0
    for system in n_set:
        image = involution_phi(system)
        assert image in n_set
        assert image.sign == -system.sign
        assert involution_phi(image) == system


def test_involution_rejects_doubly_disjoint():
    (system,) = list(enumerate_systems(5, 6, "doubly_vertex_disjoint"))
    with pytest.raises(ValueError):
        involution_phi(system)


def test_involution_rejects_non_disjoint():
    crossing = next(
        s for s in enumerate_systems(5, 4, "all") if not s.is_vertex_disjoint()
    )
    with pytest.raises(ValueError):
        involution_phi(crossing)


def test_multiplicity_view():
    from lefpath.lattice import doubly_multiplicity_view, is_upper

    view = doubly_multiplicity_view(5, 3)
    counts = [count for _, count in view]
    # each upper representative stands in for 2^(#flippable segments) systems
    assert sum(counts) == 125
    assert all(count & (count - 1) == 0 for count in counts)
    assert len(view) == 27  # enumeration-derived regression value
    for flipped_paths, _ in view:
        assert all(is_upper(p, 5) for p in flipped_paths)


def test_system_serialization():
    system = next(iter(enumerate_systems(5, 3, "doubly_vertex_disjoint")))
    payload = system.to_dict()
    assert payload["m"] == 5 and payload["i"] == 3
    assert len(payload["paths"]) == 2
    assert payload["sign"] in (-1, 1)
    assert all(set(p) == {"start", "steps"} for p in payload["paths"])
