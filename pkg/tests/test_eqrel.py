import pytest

from ramsey_spaces.domain.eqrel import (
    INFINITE_DEPTH,
    EqRelStream,
    FiniteEqRel,
    JoinSpec,
    StreamScanLimitError,
    bell_number,
    canonical_form,
    coarsen,
    coarsenings,
    depth,
    in_bracket,
    is_coarsening,
    leq_fin,
    relations_with_classes,
    restricted_growth_strings,
)


def test_canonical_form_uses_least_representatives() -> None:
    """任意のラベルが最小代表元の配列へ正規化される。"""
    assert canonical_form(["a", "b", "a"]).assign == (0, 1, 0)
    assert canonical_form({0: "x", 1: "x", 2: "y"}).assign == (0, 0, 2)


def test_canonical_form_rejects_partial_mapping() -> None:
    with pytest.raises(ValueError, match="全域"):
        canonical_form({0: "x", 2: "y"})


@pytest.mark.parametrize("assign", [(0, 0, 1), (1,), (0, 2, 2)])
def test_finite_eqrel_rejects_non_canonical_arrays(assign: tuple[int, ...]) -> None:
    with pytest.raises(ValueError, match="assign"):
        FiniteEqRel(assign)


def test_finite_eqrel_accessors() -> None:
    """代表元、クラス、制限が最小代表元の順で計算される。"""
    a = FiniteEqRel((0, 1, 0, 3))

    assert a.m == 4
    assert a.reps == (0, 1, 3)
    assert a.length == 3
    assert a.rep(2) == 3
    assert a.class_index(2) == 0
    assert a.classes() == ((0, 2), (1,), (3,))
    assert a.restrict(2).assign == (0, 1, 0)
    assert a.restrict(3) is a
    assert a.restrict(2).is_initial_segment_of(a)
    assert not FiniteEqRel((0, 0)).is_initial_segment_of(a)

    with pytest.raises(IndexError):
        a.rep(3)


def test_leq_fin_compares_coarseness_on_equal_domains() -> None:
    assert leq_fin(FiniteEqRel((0, 0, 0)), FiniteEqRel((0, 1, 0)))
    assert not leq_fin(FiniteEqRel((0, 1, 0)), FiniteEqRel((0, 0, 0)))
    assert not leq_fin(FiniteEqRel((0, 0)), FiniteEqRel((0, 1, 2)))


def test_restricted_growth_strings_in_lexicographic_order() -> None:
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0),
        (0, 0, 1),
        (0, 1, 0),
        (0, 1, 1),
        (0, 1, 2),
    ]
    assert list(restricted_growth_strings(0)) == [()]


def test_coarsenings_counted_by_bell_numbers() -> None:
    """恒等関係の粗化の個数は Bell 数に一致する。"""
    assert [bell_number(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    found = list(coarsenings(FiniteEqRel.identity(4)))
    assert len(found) == bell_number(4)
    assert len(set(found)) == len(found)
    assert all(leq_fin(a, FiniteEqRel.identity(4)) for a in found)


def test_relations_with_classes_counts_stirling_numbers() -> None:
    assert len(relations_with_classes(4, 2)) == 7
    assert all(a.length == 2 for a in relations_with_classes(4, 2))


def test_identity_stream_approximations() -> None:
    identity = EqRelStream.identity()

    assert identity.approx(0) == FiniteEqRel.empty()
    assert identity.approx(3).assign == (0, 1, 2)
    assert identity.reps(4) == (0, 1, 2, 3)

    with pytest.raises(ValueError, match="非負"):
        identity.approx(-1)


def test_coarsen_merges_classes_by_join_spec() -> None:
    """クラス2をクラス0へ併合すると代表元が1つずれる。"""
    coarse = coarsen(EqRelStream.identity(), JoinSpec({2: 0}))

    assert coarse.approx(3).assign == (0, 1, 0, 3)
    assert coarse.rep_index(4) == 3


def test_join_spec_rejects_forward_joins() -> None:
    with pytest.raises(ValueError, match="より前"):
        JoinSpec({1: 2})


def test_join_spec_tail_is_eventually_periodic() -> None:
    joins = JoinSpec(tail_from=2, tail_target=1, tail_period=2)

    assert joins.target(2) == 1
    assert joins.target(3) is None
    assert joins.target(4) == 1
    assert joins.distinguishing_bound() == 4


def test_scan_limit_stops_stream_without_new_classes() -> None:
    """代表元が有限個しかない関係は走査上限で打ち切られる。"""
    base = EqRelStream.identity()
    base.scan_limit = 50
    collapsed = coarsen(base, JoinSpec.all_from(2))

    assert collapsed.rep(1) == 1
    with pytest.raises(StreamScanLimitError):
        collapsed.rep(2)


def test_is_coarsening_reports_failing_level() -> None:
    identity = EqRelStream.identity()
    coarse = coarsen(identity, JoinSpec({2: 0}))

    assert is_coarsening(coarse, identity, 4)
    check = is_coarsening(identity, coarse, 3)
    assert not check
    assert check.failing_level == 2

    with pytest.raises(ValueError, match="probe_depth"):
        is_coarsening(coarse, identity, 0)


def test_depth_finds_matching_level() -> None:
    identity = EqRelStream.identity()
    coarse = coarsen(identity, JoinSpec({2: 0}))

    assert depth(FiniteEqRel.empty(), identity) == 0
    assert depth(FiniteEqRel((0, 0)), identity) == 2
    assert depth(FiniteEqRel((0, 0, 0)), coarse) == 2
    assert depth(FiniteEqRel((0, 1, 2)), coarse) == INFINITE_DEPTH
    assert depth(FiniteEqRel((0, 1)), coarse) == INFINITE_DEPTH


def test_in_bracket_checks_prefix_and_coarseness() -> None:
    identity = EqRelStream.identity()
    coarse = coarsen(identity, JoinSpec({2: 0}))

    assert in_bracket(FiniteEqRel((0, 1, 0)), identity, coarse, 4)
    assert not in_bracket(FiniteEqRel((0, 0)), identity, coarse, 4)
