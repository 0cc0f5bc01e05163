import pytest

from plactic.core import (
    Identity,
    ParseError,
    count,
    evaluation,
    format_word,
    parse_identity,
    parse_word,
    substitute,
    words_up_to,
)


def test_parse_word_forms():
    assert parse_word("3613151265") == (3, 6, 1, 3, 1, 5, 1, 2, 6, 5)
    assert parse_word("3,6,13,1") == (3, 6, 13, 1)
    assert parse_word("") == ()
    assert parse_word("ε") == ()


@pytest.mark.parametrize("bad", ["1a", "0", "1,,2", "1,-3", "x"])
def test_parse_word_rejects(bad):
    with pytest.raises(ParseError):
        parse_word(bad)


def test_format_word():
    assert format_word((1, 12, 3)) == "1,12,3"
    assert format_word((1, 2, 3), compact=True) == "123"
    assert format_word((1, 12), compact=True) == "1,12"
    assert format_word(()) == ""


def test_evaluation_and_count():
    w = parse_word("3613151265")
    assert evaluation(w) == {1: 3, 2: 1, 3: 2, 5: 2, 6: 2}
    assert count(w, 1) == 3 and count(w, 4) == 0


def test_words_up_to_order():
    ws = list(words_up_to(2, 2))
    assert ws == [(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]
    assert list(words_up_to(2, 1, include_empty=False)) == [(1,), (2,)]
    assert len(list(words_up_to(3, 4))) == 1 + 3 + 9 + 27 + 81


def test_parse_identity_basic():
    ident = parse_identity("xyxy=yxxy")
    assert ident == Identity((1, 2, 1, 2), (2, 1, 1, 2))
    assert str(ident) == "xyxy=yxxy"
    assert ident.arity == 2 and not ident.trivial


def test_parse_identity_powers_and_renumbering():
    assert parse_identity("(xy)^2=(xy)yx") == Identity((1, 2, 1, 2), (1, 2, 2, 1))
    assert parse_identity("x^3=x") == Identity((1, 1, 1), (1,))
    # only y and z occur: renumbered to 1, 2
    assert parse_identity("zy=yz") == Identity((2, 1), (1, 2))
    assert parse_identity("x1 x2=x2 x1") == Identity((1, 2), (2, 1))


@pytest.mark.parametrize("bad", ["xy", "x=y=x", "(xy=yx", "xy)=yx", "^2x=x", "xa=ax"])
def test_parse_identity_rejects(bad):
    with pytest.raises(ParseError):
        parse_identity(bad)


def test_identity_requires_contiguous_variables():
    with pytest.raises(ValueError):
        Identity((1, 3), (3, 1))


def test_substitute():
    ident = parse_identity("xyxy=yxxy")
    assert substitute(ident, [(1,), (2, 3)]) == ((1, 2, 3, 1, 2, 3), (2, 3, 1, 1, 2, 3))
    assert substitute(ident, {1: (), 2: (2,)}) == ((2, 2), (2, 2))
    with pytest.raises(KeyError):
        substitute(ident, {1: (1,)})
    with pytest.raises(KeyError):
        substitute(ident, [(1,)])


def test_single_large_symbol_round_trips():
    assert format_word((12,)) == "12,"
    assert parse_word("12,") == (12,)
    assert parse_word(format_word((3,))) == (3,)
