import itertools

import pytest

from ramsey_spaces.domain.words import (
    EMPTY_WORD,
    VARIABLE,
    Counterexample,
    FiniteAlphabet,
    GradedAlphabet,
    HJCertificate,
    SearchExhausted,
    SearchHooks,
    TranslateTooLargeError,
    Word,
    compositions,
    concat,
    enumerate_semigroup,
    hj_line_search,
    iter_semigroup,
    letter_from_json,
    lv_hj_bounded_search,
    semigroup_size,
    substitute,
    verify_monochromatic,
)

v = VARIABLE


def _w(*symbols: object) -> Word:
    return Word(tuple(symbols))  # type: ignore[arg-type]


def _texts(words: object) -> set[str]:
    return {"".join(str(symbol) for symbol in word) for word in words}  # type: ignore[attr-defined]


def test_word_operations() -> None:
    x = _w(v, 0, v)

    assert x.is_variable()
    assert x.is_left_variable()
    assert x.variable_positions() == (0, 2)
    assert substitute(x, 1) == _w(1, 0, 1)
    assert concat(_w(0), x, EMPTY_WORD) == _w(0, v, 0, v)
    assert _w(0, 1).substitute(1) == _w(0, 1)
    assert not _w(0, v).is_left_variable()


def test_substitute_rejects_letter_outside_alphabet() -> None:
    with pytest.raises(ValueError, match="アルファベット"):
        _w(v).substitute(5, FiniteAlphabet.digits(2))


def test_alphabet_validation() -> None:
    with pytest.raises(ValueError, match="空"):
        FiniteAlphabet(())
    with pytest.raises(ValueError, match="重複"):
        FiniteAlphabet((0, 0))
    with pytest.raises(ValueError, match="⊆"):
        GradedAlphabet(((0, 1), (0,)))

    assert FiniteAlphabet.tuples(2, 2).letters == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert letter_from_json([1, 0]) == (1, 0)
    with pytest.raises(ValueError, match="文字"):
        letter_from_json(True)  # noqa: FBT003


def test_plain_semigroup_enumeration_order() -> None:
    """plain モードは増加添字列ごとに、文字の直積順で語を並べる。"""
    xs = (_w(v), _w(v, 0))
    alphabet = FiniteAlphabet.digits(2)

    words = list(iter_semigroup(xs, alphabet, "plain"))

    assert [_texts([word]).pop() for word in words] == [
        "0",
        "1",
        "00",
        "10",
        "000",
        "010",
        "100",
        "110",
    ]
    assert semigroup_size(xs, alphabet, "plain") == 8
    assert _texts(enumerate_semigroup(xs, alphabet, "plain")) == {
        "0",
        "1",
        "00",
        "10",
        "000",
        "010",
        "100",
        "110",
    }


def test_graded_semigroup_uses_leading_indices() -> None:
    xs = (_w(v), _w(v, 0))
    alphabet = FiniteAlphabet.digits(2)

    assert semigroup_size(xs, alphabet, "graded") == 6
    assert "00" not in _texts(iter_semigroup(xs, alphabet, "graded"))


def test_graded_alphabet_restricts_letters_by_position() -> None:
    alphabet = GradedAlphabet(((0,), (0, 1)))

    assert _texts(enumerate_semigroup((_w(v), _w(v)), alphabet, "graded")) == {
        "0",
        "00",
        "01",
    }
    with pytest.raises(ValueError, match="plain"):
        semigroup_size((_w(v),), alphabet, "plain")


def test_max_terms_limits_index_sets() -> None:
    xs = (_w(v), _w(v, 0))

    assert semigroup_size(xs, FiniteAlphabet.digits(2), "plain", max_terms=0) == 4


def test_verify_monochromatic_finds_counterexample() -> None:
    def first_letter(word: Word) -> int:
        return int(word[0])  # type: ignore[arg-type]

    counterexample = verify_monochromatic(
        EMPTY_WORD, (_w(v),), first_letter, FiniteAlphabet.digits(2), "plain", 5
    )

    assert counterexample == Counterexample(_w(1), 1, 0)


def test_verify_monochromatic_include_base_checks_w0() -> None:
    def by_length(word: Word) -> int:
        return min(len(word), 1)

    alphabet = FiniteAlphabet.digits(2)
    assert verify_monochromatic(EMPTY_WORD, (_w(v),), by_length, alphabet, "plain", 3) is None
    counterexample = verify_monochromatic(
        EMPTY_WORD, (_w(v),), by_length, alphabet, "plain", 3, include_base=True
    )
    assert counterexample is not None
    assert counterexample.expected_colour == 0


def test_verify_monochromatic_refuses_large_translates() -> None:
    with pytest.raises(TranslateTooLargeError):
        verify_monochromatic(
            EMPTY_WORD,
            (_w(v), _w(v, 0)),
            lambda _: 0,
            FiniteAlphabet.digits(2),
            "plain",
            10,
            limit=3,
        )


def test_hj_line_search() -> None:
    alphabet = FiniteAlphabet.digits(2)

    assert hj_line_search(alphabet, 1, lambda word: int(word[0])) is None  # type: ignore[arg-type]
    assert hj_line_search(alphabet, 2, lambda _: 0) == _w(v, v)


def test_hj_line_search_finds_line_for_every_two_colouring_of_square() -> None:
    """{0,1}^2 の全ての2色塗り分けに単色の組合せ直線がある。"""
    alphabet = FiniteAlphabet.digits(2)
    points = list(itertools.product(range(2), repeat=2))

    for colours in itertools.product(range(2), repeat=len(points)):
        table = dict(zip(points, colours, strict=True))
        line = hj_line_search(alphabet, 2, lambda word, t=table: t[tuple(word)])
        assert line is not None


def test_compositions_in_lexicographic_order() -> None:
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert list(compositions(2, 3)) == []
    assert list(compositions(0, 0)) == [()]


def test_bounded_search_finds_trivial_certificate_for_constant_colouring() -> None:
    result = lv_hj_bounded_search(FiniteAlphabet.digits(2), lambda _: 0, 1, 1)

    assert isinstance(result, HJCertificate)
    assert result.w0 == EMPTY_WORD
    assert result.xs == (_w(v),)
    assert result.candidates_tried == 1
    assert result.mode == "plain"
    assert result.size == 1


def _length_parity(word: Word) -> int:
    return len(word) % 2


@pytest.mark.parametrize(("budget", "tried"), [(2, 1), (3, 9)])
def test_bounded_search_reports_exhausted_budget(budget: int, tried: int) -> None:
    result = lv_hj_bounded_search(FiniteAlphabet.digits(2), _length_parity, 2, budget)

    assert result == SearchExhausted(
        k=2, len_budget=budget, candidates_tried=tried, largest_size=budget
    )


def test_bounded_search_finds_even_length_variable_words() -> None:
    """長さの偶奇で塗ると、偶数長の変数語の組が最初の証明書になる。"""
    result = lv_hj_bounded_search(FiniteAlphabet.digits(2), _length_parity, 2, 10)

    assert isinstance(result, HJCertificate)
    assert result.xs == (_w(v, v), _w(v, v))
    assert result.candidates_tried == 35
    assert result.colour == 0


def test_bounded_search_calls_hooks_and_validates_arguments() -> None:
    seen: list[int] = []
    hooks = SearchHooks(on_candidate=seen.append)

    lv_hj_bounded_search(FiniteAlphabet.digits(2), _length_parity, 2, 3, hooks=hooks)
    assert seen == list(range(1, 10))

    with pytest.raises(ValueError, match="k は1以上"):
        lv_hj_bounded_search(FiniteAlphabet.digits(2), _length_parity, 0, 3)
