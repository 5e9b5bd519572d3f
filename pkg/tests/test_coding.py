import itertools

import pytest

from ramsey_spaces.domain.alternation import (
    AllBlocksConstraint,
    DyadicPartition,
    GeqConstraint,
    PeriodicPartition,
    RelationSpace,
    canonical_finest,
    validate_alternating,
    validate_class_constraint,
)
from ramsey_spaces.domain.coding import (
    CodingContext,
    CodingError,
    GradedCodingAlphabet,
    build_F,
    decode_word,
    encode_extension,
    end_extensions_within_reach,
    expand_certificate,
    flatten_letter,
    tilde_reduce,
    variable_offset,
)
from ramsey_spaces.domain.eqrel import EqRelStream, FiniteEqRel, JoinSpec, coarsen
from ramsey_spaces.domain.words import EMPTY_WORD, VARIABLE, Word

v = VARIABLE


def _ctx(n: int, l: int = 2, *, constrained: bool = False) -> CodingContext:  # noqa: E741
    constraint = GeqConstraint() if constrained else AllBlocksConstraint()
    return CodingContext(
        EqRelStream.identity(), RelationSpace(PeriodicPartition.mod(l), constraint), n
    )


def _dyadic_ctx(n: int) -> CodingContext:
    partition = DyadicPartition()
    return CodingContext(
        canonical_finest(partition), RelationSpace(partition, GeqConstraint()), n
    )


def test_encode_extension_packs_targets_into_letters() -> None:
    assert encode_extension(_ctx(1), FiniteEqRel((0, 1, 0, 1))) == Word(((0, 1),))


def test_decode_word_of_empty_word_is_one_class_extension() -> None:
    assert decode_word(_ctx(1), EMPTY_WORD).assign == (0, 1)


def test_decode_word_merges_representatives_by_coordinates() -> None:
    decoded = decode_word(_ctx(1), Word(((0, 0), (1, 0))))

    assert decoded.assign == (0, 1, 0, 0, 1, 0)


@pytest.mark.parametrize("n", [0, 1, 2])
@pytest.mark.parametrize("l", [1, 2, 3])
def test_unconstrained_coding_is_bijective(n: int, l: int) -> None:  # noqa: E741
    """制約のない空間では、語と端拡大が長さごとに一対一に対応する。"""
    ctx = _ctx(n, l)
    letters = ctx.alphabet.letters_at(0)

    for length in range(3):
        words = [Word(symbols) for symbols in itertools.product(letters, repeat=length)]
        decoded = {decode_word(ctx, word) for word in words}
        assert len(decoded) == (n + 1) ** (l * length)
        for word in words:
            assert encode_extension(ctx, decode_word(ctx, word)) == word


def test_encode_extension_rejects_non_extensions() -> None:
    ctx = _ctx(1)

    with pytest.raises(CodingError, match="端拡大"):
        encode_extension(ctx, FiniteEqRel((0, 1, 2)))
    with pytest.raises(CodingError, match="λ"):
        encode_extension(ctx, FiniteEqRel((0, 1, 0)))


def test_decode_word_rejects_foreign_letters() -> None:
    ctx = _ctx(1)

    with pytest.raises(CodingError, match="組"):
        decode_word(ctx, Word((1,)))
    with pytest.raises(CodingError, match="長さ"):
        decode_word(ctx, Word(((0, 1, 0),)))
    with pytest.raises(CodingError, match="変数"):
        decode_word(ctx, Word((v,)))


def test_decode_word_rejects_non_alternating_relation() -> None:
    """0 1 0 3 では p_2(E) = 3 が奇数のブロックにあり、mod:2 で交代的ではない。"""
    relation = coarsen(EqRelStream.identity(), JoinSpec({2: 0}))
    ctx = CodingContext(relation, RelationSpace(PeriodicPartition.mod(2), AllBlocksConstraint()), 1)

    with pytest.raises(CodingError, match="交代的ではありません"):
        decode_word(ctx, Word(((0, 0),)))


def test_context_requires_relation_approximation() -> None:
    relation = EqRelStream.identity()
    space = RelationSpace(PeriodicPartition.mod(2), GeqConstraint())

    assert CodingContext.for_approximation(FiniteEqRel((0, 1)), relation, space).n == 2
    with pytest.raises(CodingError, match="近似"):
        CodingContext.for_approximation(FiniteEqRel((0, 0)), relation, space)


@pytest.mark.parametrize(
    ("word", "expected"),
    [
        (Word(((1, 1),)), Word(((0, 1),))),
        (Word((v, (1, 1))), Word((v, (0, 1)))),
    ],
)
def test_tilde_reduce_sends_illegal_joins_to_first_class(word: Word, expected: Word) -> None:
    assert tilde_reduce(_ctx(1, constrained=True), word) == expected


def test_constrained_decode_uses_reduced_word() -> None:
    ctx = _ctx(1, constrained=True)

    assert decode_word(ctx, Word(((1, 1),))) == decode_word(ctx, Word(((0, 1),)))


def test_dyadic_arity_sequence() -> None:
    ctx = _dyadic_ctx(0)

    assert [ctx.t(i) for i in range(8)] == [4, 8, 64, 128, 512, 1024, 16384, 32768]
    assert [ctx.q(i) for i in range(3)] == [1, 0, 2]
    assert ctx.unit == 4
    assert ctx.m_factor(2) == 16
    assert isinstance(ctx.alphabet, GradedCodingAlphabet)
    assert ctx.alphabet.level_of_arity(64) == 2
    assert ctx.alphabet.level_of_arity(16) is None


def test_flatten_letter_splits_into_base_letters() -> None:
    flattened = flatten_letter((0,) * 8, _dyadic_ctx(0))

    assert flattened == Word(((0, 0, 0, 0), (0, 0, 0, 0)))


def test_flatten_letter_requires_infinite_partition() -> None:
    with pytest.raises(CodingError, match="無限分割"):
        flatten_letter((0, 0), _ctx(0))


def test_expand_certificate_places_variables_by_pattern() -> None:
    ctx = _ctx(0)

    expanded = expand_certificate(ctx, EMPTY_WORD, (Word((v,)), Word((v,))))

    assert expanded.u0 == EMPTY_WORD
    assert expanded.ys == (Word((v, 0)), Word((0, v)))
    assert expanded.reach == 4
    assert expanded.block_start(1) == 2
    assert variable_offset(ctx, 1, 2) == 1


def test_expand_certificate_flattens_base_letters() -> None:
    expanded = expand_certificate(_ctx(1), Word(((0, 1),)), (Word((v,)),))

    assert expanded.u0 == Word((0, 1))


def test_expand_certificate_requires_left_variable_words() -> None:
    with pytest.raises(CodingError, match="左変数語"):
        expand_certificate(_ctx(0), EMPTY_WORD, (Word(((0, 0), v)),))


def test_build_f_from_expanded_words() -> None:
    ctx = _ctx(0, constrained=True)

    relation_f = build_F(ctx, EMPTY_WORD, (Word((v, 0)), Word((0, v))))

    assert relation_f.approx(3).assign == (0, 1, 0, 0, 4)
    assert validate_alternating(relation_f, ctx.partition, 8) is None
    assert validate_class_constraint(relation_f, ctx.partition, None, 8) is None


def test_build_f_keeps_classes_of_a() -> None:
    ctx = _ctx(1, constrained=True)

    relation_f = build_F(ctx, EMPTY_WORD, (Word((v, 0)),))

    assert relation_f.prefix(4).assign == (0, 1, 2, 0)
    assert relation_f.approx(1) == ctx.a


def test_build_f_requires_variable_words() -> None:
    ctx = _ctx(0, constrained=True)

    with pytest.raises(CodingError, match="y_0"):
        build_F(ctx, EMPTY_WORD, ())
    with pytest.raises(CodingError, match="0..0"):
        build_F(ctx, EMPTY_WORD, (Word((v, 1)),))


def test_dyadic_repeated_variable_shares_offset() -> None:
    """n = 1 では t_0 = 2, t_1 = 16 で、x_1 の2つの v はどちらもブロック内の位置 5 に置かれる。"""
    partition = DyadicPartition()
    ctx = CodingContext(
        canonical_finest(partition), RelationSpace(partition, AllBlocksConstraint()), 1
    )
    xs = (Word((v, v)), Word((v, v)))

    expanded = expand_certificate(ctx, EMPTY_WORD, xs)
    relation_f = build_F(ctx, expanded.u0, expanded.ys)
    witnesses = list(end_extensions_within_reach(ctx, relation_f, EMPTY_WORD, xs, expanded))

    assert expanded.ys[0] == Word((v, 0, v, 0))
    assert [i for i, symbol in enumerate(expanded.ys[1]) if symbol is v] == [5, 21]
    assert validate_alternating(relation_f, partition, 6) is None
    assert relation_f.approx(4).reps == (0, 1, 2, 11)
    assert len(witnesses) == 5
    assert all(witness.consistent for witness in witnesses)
