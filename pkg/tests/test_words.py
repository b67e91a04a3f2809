import pytest
from hypothesis import given, strategies as st

from sierpinski_median import (
    EMPTY,
    EmptyWord,
    InvalidCharacter,
    TernaryWord,
    TooLong,
    build_pattern,
    format_word,
    parse_word,
    trailing_run,
)
from sierpinski_median.words import MAX_ORDER

words = st.text(alphabet="012", min_size=0, max_size=MAX_ORDER)


def test_parse_examples():
    w = parse_word("0122")
    assert w.length == 4
    assert w.digits == (0, 1, 2, 2)
    assert w.digit(1) == 2
    assert w.digit(4) == 0
    assert parse_word("") == EMPTY


def test_parse_rejects_bad_character_with_position():
    with pytest.raises(InvalidCharacter) as exc:
        parse_word("01a2")
    assert "'a'" in str(exc.value)
    assert "position 2" in str(exc.value)


def test_parse_rejects_long_words():
    with pytest.raises(TooLong):
        parse_word("0" * (MAX_ORDER + 1))


def test_trailing_run():
    assert trailing_run(parse_word("0122")) == (2, 2)
    assert trailing_run(parse_word("111")) == (1, 3)
    with pytest.raises(EmptyWord):
        trailing_run(EMPTY)


def test_build_pattern():
    assert str(build_pattern(parse_word("0"), 1, 2, 2)) == "0122"
    assert str(build_pattern(EMPTY, 2, 0, 0)) == "2"


def test_concat_prefix_suffix():
    w = parse_word("20112")
    assert str(w.prefix(2)) == "20"
    assert str(w.suffix(3)) == "112"
    assert w.prefix(2) + w.suffix(3) == w


def test_repr():
    assert repr(parse_word("012")) == "TernaryWord('012')"


@given(words)
def test_round_trip(text):
    assert format_word(parse_word(text)) == text


@given(words, words)
def test_order_is_length_then_lex(a, b):
    wa, wb = parse_word(a), parse_word(b)
    assert (wa < wb) == ((len(a), a) < (len(b), b))


@given(st.integers(0, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 3**n - 1))))
def test_index_round_trip(args):
    n, index = args
    w = TernaryWord.from_index(index, n)
    assert w.index == index
    assert int(str(w) or "0", 3) == index
