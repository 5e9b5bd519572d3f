from dataclasses import dataclass

import pytest

from ramsey_spaces.domain.alternation import (
    AllBlocksConstraint,
    AlternationViolation,
    ClassConstraintViolation,
    ConstraintSeq,
    ConstructionError,
    DyadicPartition,
    GeqConstraint,
    Partition,
    PeriodicPartition,
    RelationSpace,
    canonical_finest,
    difference_violations,
    extend_greedily,
    extend_prefix,
    interval_violations,
    is_space_approximation,
    random_alternating,
    sigma,
    sigma_table,
    validate_alternating,
    validate_class_constraint,
)
from ramsey_spaces.domain.eqrel import EqRelStream, FiniteEqRel, StreamMetadata


@dataclass(frozen=True)
class _SameBlockConstraint(ConstraintSeq):
    """I_n = {n}。推移的だが、異なるブロックの元を併合できない。"""

    @property
    def spec(self) -> str:
        return "same"

    def contains(self, n: int, m: int) -> bool:
        return n == m


def _mod2_geq() -> RelationSpace:
    return RelationSpace(PeriodicPartition.mod(2), GeqConstraint())


@pytest.mark.parametrize(
    ("k", "expected"),
    [(0, 0), (2, 0), (4, 0), (1, 1), (3, 2), (11, 2), (19, 2), (15, 4)],
)
def test_sigma_is_two_adic_valuation_of_successor(k: int, expected: int) -> None:
    assert sigma(k) == expected


def test_sigma_rejects_negative_input() -> None:
    with pytest.raises(ValueError, match="非負"):
        sigma(-1)


def test_sigma_table_matches_scalar_sigma() -> None:
    assert sigma_table(8).tolist() == [0, 1, 0, 2, 0, 1, 0, 3]
    assert sigma_table(100).tolist() == [sigma(k) for k in range(100)]


def test_ruler_properties_hold_up_to_bound() -> None:
    """同じ値の出現の差と、区間内の出現の両方に反例がない。"""
    assert difference_violations(10, 2**15) == []
    assert interval_violations(10, 2**15) == []


def test_periodic_partition_ranks() -> None:
    partition = PeriodicPartition((0, 1, 1))

    assert partition.num_blocks == 2
    assert partition.spec == "periodic:0,1,1"
    assert [partition.classify(n) for n in range(6)] == [0, 1, 1, 0, 1, 1]
    assert partition.element_at(1, 3) == 5
    assert partition.within_rank(5) == 3
    assert PeriodicPartition.mod(2).spec == "mod:2"


def test_periodic_partition_requires_blocks_in_first_occurrence_order() -> None:
    with pytest.raises(ValueError, match="順に初めて"):
        PeriodicPartition((1, 0))
    with pytest.raises(ValueError, match="1以上"):
        PeriodicPartition.mod(0)


def test_dyadic_partition_ranks() -> None:
    partition = DyadicPartition()

    assert partition.num_blocks is None
    assert partition.element_at(1, 1) == 5
    assert partition.within_rank(5) == 1
    assert partition.classify(5) == 1


@pytest.mark.parametrize("partition", [PeriodicPartition.mod(2), DyadicPartition()])
def test_canonical_finest_is_identity_for_self_matching_partitions(partition: Partition) -> None:
    relation = canonical_finest(partition)

    assert relation.reps(8) == tuple(range(8))


def test_canonical_finest_for_periodic_partition_merges_into_first_class() -> None:
    relation = canonical_finest(PeriodicPartition((0, 1, 1)))

    assert relation.approx(4).assign == (0, 1, 0, 3, 4, 0)
    assert validate_alternating(relation, PeriodicPartition((0, 1, 1)), 8) is None


def test_validate_alternating_reports_misplaced_representative() -> None:
    space = _mod2_geq()
    relation = extend_prefix(
        FiniteEqRel((0, 0, 2)), EqRelStream.identity(), space, StreamMetadata("test")
    )

    assert validate_alternating(relation, space.partition, 2) == AlternationViolation(
        k=1, rep=2, expected_block=1, actual_block=0
    )


def test_validate_class_constraint_reports_lower_block_member() -> None:
    space = _mod2_geq()
    relation = extend_prefix(
        FiniteEqRel((0, 1, 1)), EqRelStream.identity(), space, StreamMetadata("test")
    )

    violation = validate_class_constraint(relation, space.partition, None, 2)
    assert violation == ClassConstraintViolation(element=2, rep=1, rep_block=1, element_block=0)
    assert violation.to_dict()["condition"] == "class-constraint"
    assert (
        validate_class_constraint(relation, space.partition, AllBlocksConstraint(), 2) is None
    )


def test_validators_require_positive_depth() -> None:
    relation = canonical_finest(PeriodicPartition.mod(2))

    with pytest.raises(ValueError, match="depth"):
        validate_alternating(relation, PeriodicPartition.mod(2), 0)


@pytest.mark.parametrize(
    ("assign", "expected"),
    [((0, 1, 0, 0), True), ((0, 1, 0), False), ((0, 1, 1, 0), False)],
)
def test_is_space_approximation(assign: tuple[int, ...], expected: bool) -> None:  # noqa: FBT001
    assert is_space_approximation(FiniteEqRel(assign), _mod2_geq()) is expected


def test_extend_prefix_raises_when_no_class_admits_element() -> None:
    """どのクラスにも入れない元は ConstructionError の証拠になる。"""
    space = RelationSpace(PeriodicPartition.mod(3), _SameBlockConstraint())
    relation = extend_prefix(
        FiniteEqRel((0, 0)), EqRelStream.identity(), space, StreamMetadata("test")
    )

    with pytest.raises(ConstructionError) as excinfo:
        relation.rep_of(2)
    assert excinfo.value.witness == 2


@pytest.mark.parametrize("partition", [PeriodicPartition.mod(2), DyadicPartition()])
@pytest.mark.parametrize("seed", [0, 1, 7])
def test_random_alternating_stays_in_space(partition: Partition, seed: int) -> None:
    space = RelationSpace(partition, GeqConstraint())
    relation = random_alternating(space, seed)

    assert validate_alternating(relation, partition, 8) is None
    assert validate_class_constraint(relation, partition, None, 8) is None


def test_random_alternating_is_reproducible() -> None:
    space = _mod2_geq()

    first = random_alternating(space, 42).approx(6)
    second = random_alternating(space, 42).approx(6)
    assert first == second


def test_extend_greedily_keeps_prefix() -> None:
    a = FiniteEqRel((0, 1, 0, 0))
    relation = extend_greedily(a, EqRelStream.identity(), _mod2_geq())

    assert relation.approx(2) == a
    assert validate_alternating(relation, PeriodicPartition.mod(2), 6) is None


def test_extend_greedily_rejects_incomparable_prefix() -> None:
    coarse = canonical_finest(PeriodicPartition((0, 1, 1)))

    with pytest.raises(ValueError, match="比較できません"):
        extend_greedily(FiniteEqRel((0, 1)), coarse, _mod2_geq())
