import pytest
from hypothesis import given, strategies as st

from shufflemzv.words import (
    EMPTY,
    BlockWord,
    Composition,
    X0,
    X1,
    composition_to_word,
    dual_word,
    format_word,
    from_blocks,
    is_admissible,
    parse_composition,
    parse_word,
    to_blocks,
    word_key,
    word_to_composition,
)

from conftest import words_up_to

words = st.lists(st.sampled_from([X0, X1]), max_size=14).map(tuple)
compositions = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(Composition)


@pytest.mark.parametrize("text, expected", [
    ("01", (2,)),
    ("1", (1,)),
    ("001101", (3, 1, 2)),
])
def test_word_to_composition(text, expected):
    assert word_to_composition(parse_word(text)) == expected
    assert composition_to_word(expected) == parse_word(text)


@pytest.mark.parametrize("text", ["", "10", "0", "0110"])
def test_word_to_composition_rejects(text):
    with pytest.raises(ValueError):
        word_to_composition(parse_word(text))


def test_composition_fields():
    c = Composition((3, 1, 2))
    assert (c.weight, c.depth, c.admissible) == (6, 3, True)
    assert not Composition((1, 2)).admissible
    assert str(c) == "3,1,2"
    assert parse_composition("3,1,2") == c
    with pytest.raises(ValueError):
        Composition(())
    with pytest.raises(ValueError):
        parse_composition("2,0")
    with pytest.raises(ValueError):
        parse_composition("2,x")


@pytest.mark.parametrize("text, admissible", [("01", True), ("10", False), ("", False), ("1", False), ("0", False)])
def test_is_admissible(text, admissible):
    assert is_admissible(parse_word(text)) is admissible


@pytest.mark.parametrize("text, blocks", [
    ("001", [(X0, 2), (X1, 1)]),
    ("", []),
    ("0101", [(X0, 1), (X1, 1), (X0, 1), (X1, 1)]),
])
def test_blocks(text, blocks):
    assert to_blocks(parse_word(text)) == tuple(blocks)
    assert from_blocks(blocks) == parse_word(text)


def test_from_blocks_rejects_adjacent_equal_letters():
    with pytest.raises(ValueError):
        from_blocks([(X0, 1), (X0, 2)])
    with pytest.raises(ValueError):
        BlockWord([(X1, 0)])


def test_block_round_trip_exhaustive():
    for w in words_up_to(12):
        b = to_blocks(w)
        assert from_blocks(b) == w
        assert all(b[i][0] != b[i + 1][0] for i in range(len(b) - 1))


@given(compositions)
def test_composition_round_trip(c):
    w = composition_to_word(c)
    assert word_to_composition(w) == c
    assert len(w) == c.weight
    assert w.count(X1) == c.depth


@given(words.filter(is_admissible))
def test_admissible_word_round_trip(w):
    c = word_to_composition(w)
    assert composition_to_word(c) == w
    assert c.admissible


def test_parse_and_format():
    assert parse_word("0011") == (X0, X0, X1, X1)
    assert format_word(parse_word("0110")) == "0110"
    assert parse_word("") == EMPTY
    with pytest.raises(ValueError):
        parse_word("012")


def test_canonical_order():
    ws = [parse_word(t) for t in ["1", "00", "0", "011", "10", ""]]
    assert [format_word(w) for w in sorted(ws, key=word_key)] == ["", "0", "1", "00", "10", "011"]


@given(words)
def test_duality_is_an_involution(w):
    assert dual_word(dual_word(w)) == w
    if is_admissible(w):
        assert is_admissible(dual_word(w))
