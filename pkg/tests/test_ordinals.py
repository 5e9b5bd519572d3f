from itertools import pairwise

import pytest

from ramsey_spaces.application.experiments import relation_corpus
from ramsey_spaces.data_formats.cnf_text import format_elem, parse_cnf, parse_elem
from ramsey_spaces.domain.alternation import (
    DyadicPartition,
    GeqConstraint,
    PeriodicPartition,
    RelationSpace,
    canonical_finest,
    extend_prefix,
)
from ramsey_spaces.domain.eqrel import EqRelStream, FiniteEqRel, StreamMetadata, is_coarsening
from ramsey_spaces.domain.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Cnf,
    FGeqConstraint,
    IdentityBijection,
    OmegaTimesBeta,
    OmegaTimesL,
    OrdinalArithmeticError,
    OrdinalElem,
    OrdinalEqRel,
    RigidPrefix,
    SwapBijection,
    TableBijection,
    TransferError,
    WeightOrderBijection,
    build_I,
    default_bijection,
    divide_by_omega,
    eqrel_to_rigid,
    format_cnf,
    is_ordinal_coarsening,
    ordinals_of_weight,
    phi,
    phi_inverse,
    project_k,
    representatives_preserved,
    rigid_to_eqrel,
    space_for,
    transfer,
    transfer_inverse,
    validate_ordinal_space,
    weight,
)

OMEGA_SQUARED = Cnf.power(2)


class _MergeTenIntoOne:
    """10 だけを 1 のクラスへ入れる関係。"""

    def rep_of(self, x: int) -> int:
        return 1 if x == 10 else x


class _OddIntoZero:
    """奇数を全て 0 のクラスへ入れる関係。"""

    def rep_of(self, x: int) -> int:
        return 0 if x % 2 else x


def _mod2_image(source: object) -> OrdinalEqRel:
    backing = EqRelStream(source, StreamMetadata("test"))  # type: ignore[arg-type]
    return OrdinalEqRel(backing, PeriodicPartition.mod(2), OmegaTimesL(2))


def test_cnf_arithmetic_is_ordinal_arithmetic() -> None:
    """順序数の和は左側の小さい項を吸収する。"""
    assert Cnf.of(1) + OMEGA == OMEGA
    assert OMEGA + 1 != OMEGA
    assert OMEGA * 2 == Cnf.power(1, 2)
    assert 2 * OMEGA == OMEGA
    assert OMEGA * OMEGA == OMEGA_SQUARED
    assert Cnf.of(3) < OMEGA < OMEGA_SQUARED
    assert OMEGA.is_limit
    assert not (OMEGA + 1).is_limit
    assert not ZERO.is_limit


def test_cnf_rejects_non_normal_terms() -> None:
    with pytest.raises(OrdinalArithmeticError):
        Cnf(((ZERO, 1), (ONE, 1)))
    with pytest.raises(OrdinalArithmeticError):
        Cnf(((ONE, 0),))
    with pytest.raises(OrdinalArithmeticError):
        Cnf.of(-1)


def test_divide_by_omega() -> None:
    assert divide_by_omega(OMEGA_SQUARED) == OMEGA
    assert divide_by_omega(parse_cnf("w^2*3 + w*5")) == parse_cnf("w*3 + 5")
    omega_to_omega = Cnf.power(OMEGA)
    assert divide_by_omega(omega_to_omega) == omega_to_omega


@pytest.mark.parametrize("text", ["w^2 + 1", "w*3", "7"])
def test_divide_by_omega_rejects_small_or_successor_ordinals(text: str) -> None:
    with pytest.raises(OrdinalArithmeticError):
        divide_by_omega(parse_cnf(text))


def test_cnf_text_format() -> None:
    alpha = parse_cnf("w^2*3 + w*5")

    assert format_cnf(alpha) == "w^2*3 + w*5"
    assert format_cnf(ZERO) == "0"
    assert format_cnf(Cnf.power(OMEGA + 1, 2)) == "w^{w + 1}*2"
    assert parse_cnf("w^{w + 1}*2") == Cnf.power(OMEGA + 1, 2)
    assert parse_cnf("ω^2") == OMEGA_SQUARED
    assert parse_cnf("1 + w") == OMEGA


@pytest.mark.parametrize("text", ["", "x", "w^", "3*2", "w*0", "w^{2"])
def test_parse_cnf_rejects_malformed_text(text: str) -> None:
    with pytest.raises(ValueError):  # noqa: PT011
        parse_cnf(text)


def test_ordinal_elem_text() -> None:
    elem = OrdinalElem(3, OMEGA)

    assert format_elem(elem) == "(3, w)"
    assert parse_elem("(3, w)") == elem
    with pytest.raises(ValueError, match="形"):
        parse_elem("3, w")


def test_weights_enumerate_finitely_many_ordinals() -> None:
    assert weight(OMEGA_SQUARED) == 3
    assert ordinals_of_weight(2) == (Cnf.of(2), OMEGA)
    assert ordinals_of_weight(3) == (
        Cnf.of(3),
        OMEGA + 1,
        OMEGA_SQUARED,
        Cnf.power(OMEGA),
    )


def test_weight_order_bijection() -> None:
    """ω² への全単射は重み、次に大きさの順で値を並べる。"""
    f = WeightOrderBijection(OMEGA_SQUARED)

    assert [f(n) for n in range(6)] == [ZERO, ONE, Cnf.of(2), OMEGA, Cnf.of(3), OMEGA + 1]
    assert f.inverse(OMEGA) == 3
    assert f.inverse(OMEGA + 1) == 5
    with pytest.raises(OrdinalArithmeticError):
        f.inverse(OMEGA_SQUARED)
    with pytest.raises(OrdinalArithmeticError):
        WeightOrderBijection(Cnf.of(5))


def test_default_bijection() -> None:
    assert isinstance(default_bijection(OMEGA), IdentityBijection)
    assert isinstance(default_bijection(OMEGA_SQUARED), WeightOrderBijection)
    assert IdentityBijection().inverse(Cnf.of(4)) == 4


def test_swap_and_table_bijections() -> None:
    swap = SwapBijection(IdentityBijection(), 1, 2)

    assert [swap(n) for n in range(4)] == [ZERO, Cnf.of(2), ONE, Cnf.of(3)]
    assert swap.inverse(ONE) == 2
    with pytest.raises(ValueError, match="f\\(0\\)=0"):
        SwapBijection(IdentityBijection(), 0, 1)

    table = TableBijection([0, OMEGA], OMEGA_SQUARED)
    assert [table(n) for n in range(4)] == [ZERO, OMEGA, ONE, Cnf.of(2)]
    assert table.inverse(Cnf.of(2)) == 3
    with pytest.raises(ValueError, match="f\\(0\\)=0"):
        TableBijection([1], OMEGA_SQUARED)


def test_phi_maps_blocks_to_copies() -> None:
    mod2 = PeriodicPartition.mod(2)
    target = OmegaTimesL(2)

    assert phi(5, mod2, target) == OrdinalElem(2, Cnf.of(1))
    assert phi(0, mod2, target) == OrdinalElem(0, ZERO)
    assert phi_inverse(OrdinalElem(2, Cnf.of(1)), mod2, target) == 5

    dyadic_target = OmegaTimesBeta(IdentityBijection())
    assert phi(3, DyadicPartition(), dyadic_target) == OrdinalElem(0, Cnf.of(2))
    assert dyadic_target.alpha == OMEGA_SQUARED


def test_build_i_follows_bijection_order() -> None:
    identity_i = build_I(IdentityBijection())
    assert identity_i.contains(2, 3)
    assert not identity_i.contains(3, 2)

    swapped = build_I(SwapBijection(IdentityBijection(), 1, 2))
    assert not swapped.contains(1, 2)
    assert swapped.contains(1, 3)
    assert swapped.contains(2, 1)


def test_space_for_selects_constraint_by_target() -> None:
    mod2 = PeriodicPartition.mod(2)

    assert space_for(mod2, OmegaTimesL(2)).constraint == GeqConstraint()
    dyadic_space = space_for(DyadicPartition(), OmegaTimesBeta(IdentityBijection()))
    assert isinstance(dyadic_space.constraint, FGeqConstraint)


def test_transfer_of_canonical_relation() -> None:
    relation = canonical_finest(PeriodicPartition.mod(2))

    image = transfer(relation, PeriodicPartition.mod(2), OmegaTimesL(2), 12)

    assert representatives_preserved(relation, image, 12)
    assert image.order_reps(3) == (
        OrdinalElem(0, ZERO),
        OrdinalElem(0, ONE),
        OrdinalElem(1, ZERO),
    )
    pulled_back = transfer_inverse(image)
    assert pulled_back.approx(6) == relation.approx(6)


def test_transfer_to_omega_times_beta() -> None:
    partition = DyadicPartition()
    target = OmegaTimesBeta(IdentityBijection())

    image = transfer(canonical_finest(partition), partition, target, 8)

    assert validate_ordinal_space(image, 8) is None


def test_transfer_rejects_partition_of_wrong_size() -> None:
    mod3 = PeriodicPartition.mod(3)
    with pytest.raises(ValueError, match="対応しません"):
        transfer(canonical_finest(mod3), mod3, OmegaTimesL(2))


def test_validate_ordinal_space_detects_standard_order_mismatch() -> None:
    """標準順序の最小元が ≼ の最小元と異なると条件 (b) が破れる。"""
    violation = validate_ordinal_space(_mod2_image(_MergeTenIntoOne()), 6)

    assert violation is not None
    assert violation.k == 1
    assert violation.condition == "b"
    assert violation.order_rep == OrdinalElem(0, ONE)


def test_transfer_rejects_representative_in_wrong_copy() -> None:
    space = RelationSpace(PeriodicPartition.mod(2), GeqConstraint())
    relation = extend_prefix(
        FiniteEqRel((0, 0, 2)), EqRelStream.identity(), space, StreamMetadata("test")
    )

    image = OrdinalEqRel(relation, PeriodicPartition.mod(2), OmegaTimesL(2))
    violation = validate_ordinal_space(image, 4)
    assert violation is not None
    assert (violation.k, violation.condition) == (1, "a")

    with pytest.raises(TransferError, match="omega\\*2"):
        transfer(relation, PeriodicPartition.mod(2), OmegaTimesL(2), 4)


def test_project_k_collapses_later_classes() -> None:
    mod2 = PeriodicPartition.mod(2)
    image = transfer(canonical_finest(mod2), mod2, OmegaTimesL(2), 4)

    projected = project_k(image, 2)

    classes = projected.classes_in(6)
    assert len(classes) == 2
    assert (OrdinalElem(0, ONE),) in classes
    assert len(projected.order_reps(2)) == 2
    assert is_ordinal_coarsening(projected, image, 6)
    assert not is_ordinal_coarsening(image, projected, 6)
    with pytest.raises(ValueError, match="k は1以上"):
        project_k(image, 0)


def test_rigid_prefix_round_trip() -> None:
    target = OmegaTimesL(2)
    rigid = RigidPrefix.identity(target, 10)

    relation = rigid_to_eqrel(rigid)

    assert eqrel_to_rigid(relation, 10, 4) == rigid
    assert rigid.image(OrdinalElem(1, ONE)) == OrdinalElem(1, ONE)


def test_rigid_prefix_requires_order_preserving_images() -> None:
    with pytest.raises(TransferError, match="剛な全射"):
        RigidPrefix(OmegaTimesL(2), (OrdinalElem(1, ZERO),))


def test_eqrel_to_rigid_requires_representatives_in_every_copy() -> None:
    with pytest.raises(TransferError, match="コピー"):
        eqrel_to_rigid(_mod2_image(_OddIntoZero()), 6, 4)


_CORPUS_TARGETS = [
    pytest.param(PeriodicPartition.mod(2), OmegaTimesL(2), id="omega*2"),
    pytest.param(PeriodicPartition.mod(3), OmegaTimesL(3), id="omega*3"),
    pytest.param(DyadicPartition(), OmegaTimesBeta(IdentityBijection()), id="omega^2"),
]


@pytest.mark.parametrize(("partition", "target"), _CORPUS_TARGETS)
def test_transfer_preserves_representatives_over_corpus(
    partition: PeriodicPartition | DyadicPartition, target: OmegaTimesL | OmegaTimesBeta
) -> None:
    """生成した 500 個の関係の全てで、φ(p_k(E)) = p_k(Φ(E)) が k < 12 で成り立つ。"""
    for relation in relation_corpus(space_for(partition, target), 500, 7):
        image = transfer(relation, partition, target, 12)
        assert representatives_preserved(relation, image, 12)


@pytest.mark.parametrize(("partition", "target"), _CORPUS_TARGETS)
def test_transfer_preserves_coarsening_order(
    partition: PeriodicPartition | DyadicPartition, target: OmegaTimesL | OmegaTimesBeta
) -> None:
    """E が E' の粗化であることと Φ(E) が Φ(E') の粗化であることは深さ 10 で一致する。

    ≼ の窓は ω の始切片と同じなので、窓の大きさは p_10(E) + 1 に取る。
    """
    corpus = list(relation_corpus(space_for(partition, target), 500, 11))
    images = [transfer(relation, partition, target, 10) for relation in corpus]
    toward_finest = [(i, 0) for i in range(1, len(corpus))]
    pairs = toward_finest + [(0, i) for i in range(1, len(corpus))]
    pairs += list(pairwise(range(len(corpus))))

    for i, j in pairs:
        expected = bool(is_coarsening(corpus[i], corpus[j], 10))
        size = corpus[i].approx(10).m + 1
        assert is_ordinal_coarsening(images[i], images[j], size) == expected
    assert all(is_coarsening(corpus[i], corpus[0], 10) for i, _ in toward_finest)


def test_rigid_round_trip_over_corpus() -> None:
    """200 個の関係で、深さ 20 の窓の上の剛な全射と関係の往復がどちらも恒等になる。"""
    partition = PeriodicPartition.mod(2)
    target = OmegaTimesL(2)
    for relation in relation_corpus(space_for(partition, target), 200, 3):
        image = transfer(relation, partition, target, 20)
        size = image.window_for(20)
        rigid = eqrel_to_rigid(image, size, 20)
        back = rigid_to_eqrel(rigid)

        assert back.classes_in(size) == image.classes_in(size)
        assert eqrel_to_rigid(back, size, 20) == rigid
