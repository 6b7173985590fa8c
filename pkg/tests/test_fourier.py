"""Exact dyadic spectra.

The expected coefficients come from the definition computed independently
with Fraction arithmetic, so the butterfly transform is tested against a
slower second implementation rather than against itself.
"""

import itertools
from fractions import Fraction

import pytest

from jagg.boolfn import BoolFn, all_tables, compose
from jagg.fourier import (Dyadic, ONE, ZERO, cell_subset_identity,
                          rectangle_identity, reconstruct, spectrum)


def oracle_coeff(f: BoolFn, subset: int) -> Fraction:
    """f-hat(subset) straight from the definition: average of sign(f) times
    the parity character, with T encoded as +1."""
    total = 0
    for p in range(1 << f.n):
        sign = 1 if f.value(p) else -1
        # the character is a product over subset of +1 for a T input and -1
        # for an F input, so its sign counts the F inputs inside subset
        falses = bin(subset).count("1") - bin(p & subset).count("1")
        character = -1 if falses & 1 else 1
        total += sign * character
    return Fraction(total, 1 << f.n)


def as_fraction(d: Dyadic) -> Fraction:
    return Fraction(d.num, 1 << d.exp)


# --- Dyadic -----------------------------------------------------------------

def test_dyadic_canonical():
    assert Dyadic.make(4, 2) == ONE
    assert Dyadic.make(6, 3) == Dyadic(3, 2)
    assert Dyadic.make(0, 5) == ZERO
    assert Dyadic.make(-8, 1) == Dyadic(-4, 0)
    with pytest.raises(ValueError):
        Dyadic(2, 1)  # non-canonical: even numerator with positive exponent
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_dyadic_arithmetic():
    a, b = Dyadic.make(3, 2), Dyadic.make(-1, 1)
    assert a + b == Dyadic(1, 2)
    assert a - b == Dyadic(5, 2)
    assert a * b == Dyadic(-3, 3)
    assert a ** 2 == Dyadic(9, 4)
    assert a ** 0 == ONE
    assert ZERO ** 0 == ONE
    assert a + 1 == Dyadic(7, 2)
    assert 2 * a == Dyadic(3, 1)
    assert 1 - b == Dyadic(3, 1)
    assert -b == Dyadic(1, 1)


def test_dyadic_comparisons_and_hash():
    a, b = Dyadic.make(3, 2), Dyadic.make(-1, 1)
    assert b < ZERO < a < ONE
    assert a <= a and a >= a
    assert ONE == 1 and hash(ONE) == hash(1)
    assert Dyadic.make(10, 1) == 5 and hash(Dyadic.make(10, 1)) == hash(5)
    assert float(a) == 0.75
    assert sorted([ONE, b, a, ZERO]) == [b, ZERO, a, ONE]


def test_dyadic_str():
    assert str(ONE) == "1"
    assert str(Dyadic.make(-3, 2)) == "-3/2^2"
    assert str(ZERO) == "0"
    assert str(Dyadic.make(4, 1)) == "2"


# --- spectra ----------------------------------------------------------------

def test_spectrum_matches_definition_exhaustive():
    for n in (1, 2, 3):
        for f in all_tables(n):
            sp = spectrum(f)
            for subset in range(1 << n):
                assert as_fraction(sp[subset]) == oracle_coeff(f, subset)


def test_closed_forms():
    for n in (1, 2, 3, 4):
        half = Fraction(1, 1 << (n - 1))
        sp = spectrum(BoolFn.and_(n))
        full = (1 << n) - 1
        # AND: 1/2^(n-1) on every nonempty subset, that minus 1 on the empty set
        for subset in range(1, 1 << n):
            assert as_fraction(sp[subset]) == half
        assert as_fraction(sp[0]) == half - 1
        # OR: sign alternates with subset size, 1 - 1/2^(n-1) on the empty set
        sp = spectrum(BoolFn.or_(n))
        for subset in range(1, 1 << n):
            size = bin(subset).count("1")
            assert as_fraction(sp[subset]) == (-1) ** (size + 1) * half
        assert as_fraction(sp[0]) == 1 - half
        # odd parity: one unit coefficient on the full set
        sp = spectrum(BoolFn.xor(n))
        assert sp[full] == (-1) ** (n + 1)
        assert sp.support() == (full,)
        # even parity is its negation
        sp = spectrum(BoolFn.nxor(n))
        assert sp[full] == (-1) ** n
        assert sp.support() == (full,)
        # constants and dictators
        assert spectrum(BoolFn.all_true(n)).support() == (0,)
        assert spectrum(BoolFn.all_true(n))[0] == ONE
        for i in range(n):
            sp = spectrum(BoolFn.dictator(n, i))
            assert sp.support() == (1 << i,)
            assert sp[1 << i] == ONE


def test_parseval_exhaustive():
    for n in (1, 2, 3):
        for f in all_tables(n):
            assert spectrum(f).parseval_sum() == 1


def test_coefficient_by_indices():
    sp = spectrum(BoolFn.and_(3))
    assert sp.coefficient([0, 2]) == sp[0b101]
    assert sp.coefficient([]) == sp[0]
    with pytest.raises(ValueError):
        sp.coefficient([3])


def test_reconstruct_roundtrip():
    for n in (1, 2, 3):
        for f in all_tables(n):
            assert reconstruct(spectrum(f)) == f


# --- composition identities -------------------------------------------------

def composite_tables(g: BoolFn, f: BoolFn):
    """Both orders of applying g to columns and f to rows of an m-by-n
    matrix of variables, as functions over the full matrix cube."""
    m, n = g.n, f.n
    width = 1 << (m * n)
    from jagg.boolfn import variable_mask
    cell = [[variable_mask(i * n + j, m * n) for j in range(n)] for i in range(m)]
    col_then_row = compose(
        f, [compose(g, [cell[i][j] for i in range(m)], width) for j in range(n)],
        width)
    row_then_col = compose(
        g, [compose(f, [cell[i][j] for j in range(n)], width) for i in range(m)],
        width)
    return BoolFn(m * n, col_then_row), BoolFn(m * n, row_then_col)


def test_cell_subset_identity_against_composite_spectra():
    pairs = [
        (BoolFn.and_(2), BoolFn.and_(2)),
        (BoolFn.or_(2), BoolFn.or_(3)),
        (BoolFn.xor(2), BoolFn.xor(2)),
        (BoolFn.nxor(2), BoolFn.xor(3)),
        (BoolFn.or_(2), BoolFn.and_(2)),   # not normal
        (BoolFn.majority(3), BoolFn.or_(2)),  # not normal
    ]
    for g, f in pairs:
        m, n = g.n, f.n
        cr, rc = composite_tables(g, f)
        sp_cr, sp_rc = spectrum(cr), spectrum(rc)
        for cells in range(1 << (m * n)):
            lhs, rhs = cell_subset_identity(g, f, cells)
            assert lhs == sp_cr[cells]
            assert rhs == sp_rc[cells]


def test_cell_subset_identity_accepts_pairs():
    g, f = BoolFn.and_(2), BoolFn.and_(2)
    by_mask = cell_subset_identity(g, f, 0b0110)
    by_pairs = cell_subset_identity(g, f, [(0, 1), (1, 0)])
    assert by_mask == by_pairs


def test_cell_subset_identity_on_normal_pairs():
    for g, f in ((BoolFn.and_(3), BoolFn.and_(3)),
                 (BoolFn.or_(2), BoolFn.or_(2)),
                 (BoolFn.xor(3), BoolFn.nxor(2))):
        for cells in range(1 << (g.n * f.n)):
            lhs, rhs = cell_subset_identity(g, f, cells)
            assert lhs == rhs


def test_cell_subset_identity_violated_for_or_and():
    g, f = BoolFn.or_(2), BoolFn.and_(2)
    bad = [cells for cells in range(16)
           if cell_subset_identity(g, f, cells)[0]
           != cell_subset_identity(g, f, cells)[1]]
    assert bad != []
    assert bad[0] == 0


def test_rectangle_identity():
    g, f = BoolFn.or_(2), BoolFn.or_(3)
    for rows in range(1, 1 << g.n):
        for cols in range(1, 1 << f.n):
            row_idx = [i for i in range(g.n) if rows >> i & 1]
            col_idx = [j for j in range(f.n) if cols >> j & 1]
            lhs, rhs = rectangle_identity(g, f, row_idx, col_idx)
            assert lhs == rhs
            # a full rectangle is the cell subset of its cell product
            mask = 0
            for i in row_idx:
                for j in col_idx:
                    mask |= 1 << (i * f.n + j)
            assert (lhs, rhs) == cell_subset_identity(g, f, mask)
    with pytest.raises(ValueError):
        rectangle_identity(g, f, [], [0])
