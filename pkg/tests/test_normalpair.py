"""Commutation checks on matrices and exhaustive pair enumeration."""

import itertools

import pytest

from jagg.boolfn import BoolFn, format_fn_spec, parse_fn_spec
from jagg.config import BudgetError, Config
from jagg.normalpair import (check_normal_pair, classify_pair,
                             enumerate_normal_pairs)

IDENTITY = BoolFn(1, 0b10)
NEGATION = BoolFn(1, 0b01)


def brute_force_commutes(g, f):
    """Direct two-loop evaluation over every matrix, kept independent of the
    bit-parallel implementation."""
    m, n = g.n, f.n
    for bits in range(1 << (m * n)):
        rows = [[bool(bits >> (i * n + j) & 1) for j in range(n)]
                for i in range(m)]
        col_then_row = f.apply([g.apply([rows[i][j] for i in range(m)])
                                for j in range(n)])
        row_then_col = g.apply([f.apply(rows[i]) for i in range(m)])
        if col_then_row != row_then_col:
            return False
    return True


def test_check_matches_brute_force_at_2x2():
    for gt in range(16):
        for ft in range(16):
            g, f = BoolFn(2, gt), BoolFn(2, ft)
            report = check_normal_pair(g, f)
            by_hand = (not g.is_constant() and not f.is_constant()
                       and g.relevant_indices() == (0, 1)
                       and f.relevant_indices() == (0, 1)
                       and brute_force_commutes(g, f))
            assert report.is_normal == by_hand


def test_violation_precedence():
    or2, and2 = BoolFn.or_(2), BoolFn.and_(2)
    assert check_normal_pair(BoolFn.all_true(2), and2).violation.kind == "g_constant"
    assert check_normal_pair(or2, BoolFn.all_false(2)).violation.kind == "f_constant"
    lazy = BoolFn.dictator(2, 0)
    rep = check_normal_pair(lazy, and2)
    assert (rep.violation.kind, rep.violation.index) == ("g_irrelevant_index", 1)
    rep = check_normal_pair(or2, BoolFn.dictator(2, 1))
    assert (rep.violation.kind, rep.violation.index) == ("f_irrelevant_index", 0)
    rep = check_normal_pair(or2, and2)
    assert rep.violation.kind == "commutation"


def test_commutation_counterexample_is_sound():
    rep = check_normal_pair(BoolFn.or_(2), BoolFn.and_(2))
    assert not rep.is_normal
    rows = rep.counterexample
    g, f = BoolFn.or_(2), BoolFn.and_(2)
    col_then_row = f.apply([g.apply([rows[i][j] for i in range(2)])
                            for j in range(2)])
    row_then_col = g.apply([f.apply(rows[i]) for i in range(2)])
    assert col_then_row != row_then_col
    assert rep.column_then_row == col_then_row
    assert rep.row_then_column == row_then_col


def test_normal_report_has_no_counterexample():
    rep = check_normal_pair(BoolFn.xor(3), BoolFn.xor(2))
    assert rep.is_normal
    assert rep.violation is None
    assert rep.counterexample is None


def test_mixed_arity_pairs():
    assert check_normal_pair(BoolFn.and_(2), BoolFn.and_(3)).is_normal
    assert check_normal_pair(BoolFn.or_(3), BoolFn.or_(2)).is_normal
    assert not check_normal_pair(BoolFn.and_(2), BoolFn.or_(3)).is_normal
    assert check_normal_pair(BoolFn.nxor(2), BoolFn.xor(3)).is_normal
    assert check_normal_pair(BoolFn.xor(2), BoolFn.xor(3)).is_normal
    assert not check_normal_pair(BoolFn.nxor(2), BoolFn.nxor(3)).is_normal


def test_arity_one_edge_cases():
    # prepending the identity never breaks commutation
    for f in (BoolFn.and_(2), BoolFn.or_(3), BoolFn.xor(2), BoolFn.majority(3)):
        assert check_normal_pair(IDENTITY, f).is_normal
        assert check_normal_pair(f, IDENTITY).is_normal
    # negation commutes exactly with self-flip functions
    for f in (BoolFn.and_(2), BoolFn.or_(2), BoolFn.xor(2)):
        expect = f.flip() == f
        assert check_normal_pair(NEGATION, f).is_normal == expect
    assert check_normal_pair(NEGATION, BoolFn.xor(3)).is_normal
    assert check_normal_pair(NEGATION, BoolFn.majority(3)).is_normal


def test_arity_zero_rejected():
    with pytest.raises(ValueError):
        check_normal_pair(BoolFn(0, 1), BoolFn.and_(2))


def test_matrix_cap():
    tight = Config(matrix_cap=8)
    with pytest.raises(BudgetError):
        check_normal_pair(BoolFn.and_(3), BoolFn.and_(3), config=tight)
    assert check_normal_pair(BoolFn.and_(2), BoolFn.and_(3),
                             config=tight).is_normal


# expected enumerations, frozen from the brute-force sweep
PAIRS_2X2 = [("xor:2", "xor:2"), ("and:2", "and:2"),
             ("nxor:2", "nxor:2"), ("or:2", "or:2")]
PAIRS_2X3 = [("xor:2", "xor:3"), ("and:2", "and:3"),
             ("nxor:2", "xor:3"), ("or:2", "or:3")]
PAIRS_3X2 = [("and:3", "and:2"), ("xor:3", "xor:2"),
             ("xor:3", "nxor:2"), ("or:3", "or:2")]
PAIRS_3X3 = [("nxor:3", "nxor:3"), ("nxor:3", "xor:3"), ("and:3", "and:3"),
             ("xor:3", "nxor:3"), ("xor:3", "xor:3"), ("or:3", "or:3")]


def canon(pairs):
    return [(format_fn_spec(parse_fn_spec(a)), format_fn_spec(parse_fn_spec(b)))
            for a, b in pairs]


def test_enumerate_2x2():
    got = [(format_fn_spec(g), format_fn_spec(f))
           for g, f in enumerate_normal_pairs(2, 2)]
    assert sorted(got) == sorted(canon(PAIRS_2X2))


def test_enumerate_mixed_arities():
    for m, n, expected in ((2, 3, PAIRS_2X3), (3, 2, PAIRS_3X2)):
        got = [(format_fn_spec(g), format_fn_spec(f))
               for g, f in enumerate_normal_pairs(m, n)]
        assert sorted(got) == sorted(canon(expected))


def test_enumeration_is_sorted_by_tables():
    pairs = enumerate_normal_pairs(2, 3)
    keys = [(g.table, f.table) for g, f in pairs]
    assert keys == sorted(keys)


def test_enumeration_budget():
    tiny = Config(enumeration_budget=1 << 10)
    with pytest.raises(BudgetError):
        enumerate_normal_pairs(2, 2, config=tiny)
    with pytest.raises(ValueError):
        enumerate_normal_pairs(1, 2)


def test_classify_pair():
    assert classify_pair(BoolFn.and_(2), BoolFn.and_(3)) == "both-and"
    assert classify_pair(BoolFn.or_(3), BoolFn.or_(2)) == "both-or"
    assert classify_pair(BoolFn.xor(2), BoolFn.xor(2)) == "xor-family"
    assert classify_pair(BoolFn.nxor(2), BoolFn.xor(3)) == "xor-family"
    assert classify_pair(IDENTITY, BoolFn.and_(2)) == "trivial"
    assert classify_pair(BoolFn.or_(2), BoolFn.and_(2)) == "violation"


def test_every_enumerated_pair_lands_in_a_named_case():
    for m, n in ((2, 2), (2, 3), (3, 2)):
        for g, f in enumerate_normal_pairs(m, n):
            assert classify_pair(g, f) in ("both-and", "both-or", "xor-family")
