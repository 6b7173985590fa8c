"""Bit-packed Boolean functions."""

import itertools

import pytest

from jagg.boolfn import (BoolFn, FnClass, all_tables, classify,
                         classify_on_relevant, compose, format_fn_spec,
                         parse_fn_spec, variable_mask)
from jagg.config import Config, BudgetError
from jagg.formula import parse

ALL2 = [BoolFn(2, t) for t in range(16)]


def points(n):
    return range(1 << n)


def test_variable_mask():
    assert variable_mask(0, 2) == 0b1010
    assert variable_mask(1, 2) == 0b1100
    assert variable_mask(0, 3) == 0b10101010
    assert variable_mask(2, 3) == 0b11110000
    for n in range(1, 6):
        for i in range(n):
            mask = variable_mask(i, n)
            for p in points(n):
                assert bool(mask >> p & 1) == bool(p >> i & 1)


def test_table_bit_convention():
    f = BoolFn.and_(2)
    assert f.table == 0b1000
    assert f.value(0b11) is True
    assert f.value(0b01) is False
    assert f(True, False) is False
    assert f(True, True) is True
    assert f.apply([True, True]) is True


def test_named_constructors():
    assert BoolFn.all_true(2).table == 0b1111
    assert BoolFn.all_false(3).table == 0
    assert BoolFn.constant(2, True) == BoolFn.all_true(2)
    assert BoolFn.or_(2).table == 0b1110
    assert BoolFn.xor(2).table == 0b0110
    assert BoolFn.nxor(2).table == 0b1001
    assert BoolFn.dictator(3, 1).table == 0b11001100
    assert BoolFn.anti_dictator(2, 0).table == 0b0101
    for p in points(3):
        bits = bin(p).count("1")
        assert BoolFn.xor(3).value(p) == (bits % 2 == 1)
        assert BoolFn.nxor(3).value(p) == (bits % 2 == 0)
        assert BoolFn.majority(3).value(p) == (bits >= 2)


def test_majority_tie_handling():
    assert BoolFn.majority(2) == BoolFn.or_(2)
    assert BoolFn.majority(2, ties=False) == BoolFn.and_(2)
    assert BoolFn.majority(3) == BoolFn.majority(3, ties=False)


def test_table_range_checked():
    with pytest.raises(ValueError):
        BoolFn(2, 16)
    with pytest.raises(ValueError):
        BoolFn(2, -1)
    with pytest.raises(ValueError):
        BoolFn(-1, 0)
    # nullary constants are legal: one point, one output bit
    assert BoolFn(0, 1).is_constant()
    with pytest.raises(ValueError):
        BoolFn(0, 2)


def test_from_formula():
    f = BoolFn.from_formula(parse("P & !Q"), ["P", "Q"])
    assert f(True, False) is True
    assert f(True, True) is False
    # symbol order decides input index
    g = BoolFn.from_formula(parse("P & !Q"), ["Q", "P"])
    assert g(False, True) is True
    # unused symbols produce irrelevant inputs
    h = BoolFn.from_formula(parse("P"), ["P", "Q"])
    assert h == BoolFn.dictator(2, 0)
    with pytest.raises(ValueError):
        BoolFn.from_formula(parse("P & Q"), ["P"])
    with pytest.raises(ValueError):
        BoolFn.from_formula(parse("P"), ["P", "P"])


def test_relevance_and_pivots():
    f = BoolFn.from_formula(parse("P"), ["P", "Q"])
    assert f.is_relevant(0) and not f.is_relevant(1)
    assert f.relevant_indices() == (0,)
    maj = BoolFn.majority(3)
    assert maj.relevant_indices() == (0, 1, 2)
    # pivotal at a specific point: index 0 at (T, T, F) for majority
    assert maj.is_pivotal(0, 0b011)
    assert not maj.is_pivotal(0, 0b111)
    assert BoolFn.all_true(2).relevant_indices() == ()


def test_flip_involution_and_fixed_points():
    for f in ALL2:
        assert f.flip().flip() == f
    assert BoolFn.and_(2).flip() == BoolFn.or_(2)
    assert BoolFn.xor(2).flip() == BoolFn.nxor(2)
    assert BoolFn.xor(3).flip() == BoolFn.xor(3)
    assert BoolFn.dictator(3, 2).flip() == BoolFn.dictator(3, 2)
    assert BoolFn.majority(3).flip() == BoolFn.majority(3)


def test_negate():
    assert BoolFn.and_(2).negate().table == 0b0111
    assert BoolFn.all_true(2).negate() == BoolFn.all_false(2)


def test_forceable_indices():
    assert BoolFn.and_(2).forceable_indices() == ((False, False), (False, False))
    assert BoolFn.or_(3).forceable_indices() == ((True, True),) * 3
    assert BoolFn.dictator(2, 0).forceable_indices() == ((False, False), None)
    assert BoolFn.majority(3).forceable_indices() == (None, None, None)


def test_is_forceful():
    assert BoolFn.and_(4).is_forceful()
    assert BoolFn.or_(2).is_forceful()
    assert not BoolFn.xor(2).is_forceful()
    assert not BoolFn.majority(3).is_forceful()
    assert not BoolFn.dictator(2, 0).is_forceful()
    # constants force trivially everywhere
    assert BoolFn.all_true(2).is_forceful()


def test_forceful_decomposition_named_shapes():
    d = BoolFn.or_(3).forceful_decomposition()
    assert (d.c0, d.signs) == (-1, (-1, -1, -1))
    d = BoolFn.and_(3).forceful_decomposition()
    assert (d.c0, d.signs) == (1, (1, 1, 1))
    d = BoolFn.from_formula(parse("!a & b"), ["a", "b"]).forceful_decomposition()
    assert (d.c0, d.signs) == (1, (-1, 1))


def test_forceful_decomposition_roundtrip_exhaustive():
    for n in (2, 3):
        for f in all_tables(n):
            if f.is_constant() or not f.is_forceful():
                continue
            d = f.forceful_decomposition()
            assert d.expand() == f


def test_forceful_decomposition_rejects():
    with pytest.raises(ValueError):
        BoolFn.all_true(2).forceful_decomposition()
    with pytest.raises(ValueError):
        BoolFn.xor(2).forceful_decomposition()
    with pytest.raises(ValueError):
        BoolFn.dictator(1, 0).forceful_decomposition()


def test_restrict_to_and_on_relevant():
    x3 = BoolFn.xor(3)
    assert x3.restrict_to((0, 2)) == BoolFn.xor(2)
    f = BoolFn.from_formula(parse("Q"), ["P", "Q", "R"])
    sub, idx = f.on_relevant()
    assert idx == (1,)
    assert sub == BoolFn.dictator(1, 0)
    g = BoolFn.all_false(2)
    sub, idx = g.on_relevant()
    assert idx == ()
    assert sub.n == 0 and sub.is_constant()


def test_is_symmetric():
    for f in (BoolFn.and_(3), BoolFn.or_(3), BoolFn.xor(3),
              BoolFn.majority(3), BoolFn.all_true(2)):
        assert f.is_symmetric()
    assert not BoolFn.dictator(2, 0).is_symmetric()
    assert not BoolFn.from_formula(parse("!a & b"), ["a", "b"]).is_symmetric()


def test_classify_named():
    assert classify(BoolFn.and_(3)) == FnClass("and")
    assert classify(BoolFn.or_(2)) == FnClass("or")
    assert classify(BoolFn.xor(4)) == FnClass("xor")
    assert classify(BoolFn.nxor(2)) == FnClass("nxor")
    assert classify(BoolFn.dictator(3, 2)) == FnClass("dictator", index=2)
    assert classify(BoolFn.anti_dictator(2, 1)) == FnClass("anti_dictator", index=1)
    assert classify(BoolFn.all_true(2)) == FnClass("constant", value=True)
    assert classify(BoolFn.majority(3)) == FnClass("other")
    # arity 1: identity is a dictator, negation an anti-dictator
    assert classify(BoolFn(1, 0b10)) == FnClass("dictator", index=0)
    assert classify(BoolFn(1, 0b01)) == FnClass("anti_dictator", index=0)


def test_classify_covers_every_table():
    # classification is total and matches the table it names
    rebuild = {
        "and": BoolFn.and_, "or": BoolFn.or_, "xor": BoolFn.xor,
        "nxor": BoolFn.nxor,
    }
    for n in (1, 2, 3):
        for f in all_tables(n):
            label = classify(f)
            if label.kind == "constant":
                assert f == BoolFn.constant(n, label.value)
            elif label.kind == "dictator":
                assert f == BoolFn.dictator(n, label.index)
            elif label.kind == "anti_dictator":
                assert f == BoolFn.anti_dictator(n, label.index)
            elif label.kind in rebuild:
                assert f == rebuild[label.kind](n)
            else:
                assert label.kind == "other"


def test_classify_on_relevant():
    f = BoolFn.from_formula(parse("P | R"), ["P", "Q", "R"])
    label, idx = classify_on_relevant(f)
    assert label == FnClass("or") and idx == (0, 2)


def test_fn_spec_roundtrip():
    for text in ("and:3", "or:2", "xor:4", "nxor:2", "const:2:T",
                 "dictator:3:1", "tt:2:8"):
        f = parse_fn_spec(text)
        assert parse_fn_spec(format_fn_spec(f)) == f
    assert format_fn_spec(BoolFn.and_(2)) == "tt:2:8"
    assert format_fn_spec(BoolFn(4, 1)) == "tt:4:0001"


def test_fn_spec_errors():
    for bad in ("", "bogus", "and", "and:0", "and:x", "const:2:maybe",
                "dictator:2:2", "dictator:2:-1", "tt:2:123", "tt:2:zz"):
        with pytest.raises(ValueError):
            parse_fn_spec(bad)


def test_arity_cap_enforced():
    small = Config(arity_cap=3)
    with pytest.raises(BudgetError):
        parse_fn_spec("and:4", config=small)
    assert parse_fn_spec("and:3", config=small).n == 3


def test_all_tables_counts():
    assert sum(1 for _ in all_tables(1)) == 4
    assert sum(1 for _ in all_tables(2)) == 16
    assert sum(1 for _ in all_tables(3)) == 256


def test_compose():
    # xor of two ANDs over a 3-cube (8 points): h(a, b, c) = (a & b) ^ (b & c)
    args = [BoolFn.from_formula(parse("a & b"), ["a", "b", "c"]).table,
            BoolFn.from_formula(parse("b & c"), ["a", "b", "c"]).table]
    table = compose(BoolFn.xor(2), args, 8)
    h = BoolFn(3, table)
    for p in points(3):
        a, b, c = (bool(p >> i & 1) for i in range(3))
        assert h.value(p) == ((a and b) != (b and c))
