"""Commutation of an outer/inner function pair over all Boolean matrices.

A pair (g of arity m, f of arity n) is *normal* when applying g down every
column and then f across the results always equals applying f across every
row and then g down those results, with both functions non-constant and
using every input.  Matrices are encoded as m*n-bit integers, row-major:
bit i*n + j holds the cell in row i, column j.

The check evaluates both composites for all 2**(m*n) matrices at once: each
cell becomes a truth-table column over the matrix space, and functions are
applied through their minterm expansion (``boolfn.compose``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .boolfn import BoolFn, FnClass, classify, compose, variable_mask
from .config import DEFAULT, BudgetError, Config, charge


@dataclass(frozen=True)
class Violation:
    """Why a pair failed: 'commutation', '{g,f}_constant', or
    '{g,f}_irrelevant_index' with the offending 0-based index."""

    kind: str
    index: int | None = None

    def __str__(self) -> str:
        return self.kind if self.index is None else f"{self.kind}({self.index})"


@dataclass(frozen=True)
class NormalPairReport:
    """Outcome of a pair check; a commutation failure carries the first
    disagreeing matrix (in ascending encoding order) and both composite
    values on it."""

    g: BoolFn
    f: BoolFn
    is_normal: bool
    violation: Violation | None = None
    counterexample: tuple[tuple[bool, ...], ...] | None = None
    column_then_row: bool | None = None
    row_then_column: bool | None = None


def _matrix_rows(mask: int, m: int, n: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(bool(mask >> (i * n + j) & 1) for j in range(n))
                 for i in range(m))


def _composites(g: BoolFn, f: BoolFn) -> tuple[int, int]:
    """Truth tables over all matrices of the two composite evaluations."""
    m, n = g.n, f.n
    bits = m * n
    cell = [[variable_mask(i * n + j, bits) for j in range(n)] for i in range(m)]
    width = 1 << bits
    col_then_row = compose(
        f, [compose(g, [cell[i][j] for i in range(m)], width) for j in range(n)], width)
    row_then_col = compose(
        g, [compose(f, [cell[i][j] for j in range(n)], width) for i in range(m)], width)
    return col_then_row, row_then_col


def check_normal_pair(g: BoolFn, f: BoolFn, *, config: Config = DEFAULT) -> NormalPairReport:
    """Decide normality, reporting the first violated condition.

    Constant functions are reported before irrelevant indices (a constant has
    no relevant index at all), and structural defects before commutation.
    """
    m, n = g.n, f.n
    if m < 1 or n < 1:
        raise ValueError("both functions need arity >= 1")
    if m * n > config.matrix_cap:
        raise BudgetError(f"matrix size {m}x{n} exceeds the cap of "
                          f"{config.matrix_cap} cells")
    if g.is_constant():
        return NormalPairReport(g, f, False, Violation("g_constant"))
    if f.is_constant():
        return NormalPairReport(g, f, False, Violation("f_constant"))
    for i in range(m):
        if not g.is_relevant(i):
            return NormalPairReport(g, f, False, Violation("g_irrelevant_index", i))
    for j in range(n):
        if not f.is_relevant(j):
            return NormalPairReport(g, f, False, Violation("f_irrelevant_index", j))
    lhs, rhs = _composites(g, f)
    diff = lhs ^ rhs
    if diff == 0:
        return NormalPairReport(g, f, True)
    first = (diff & -diff).bit_length() - 1
    return NormalPairReport(
        g, f, False, Violation("commutation"), _matrix_rows(first, m, n),
        bool(lhs >> first & 1), bool(rhs >> first & 1))


def _all_relevant_candidates(arity: int) -> list[BoolFn]:
    """Non-constant functions of the given arity with every input relevant."""
    out = []
    for table in range(1 << (1 << arity)):
        f = BoolFn(arity, table)
        if f.is_constant():
            continue
        if all(f.is_relevant(i) for i in range(arity)):
            out.append(f)
    return out


def enumerate_normal_pairs(m: int, n: int, *, config: Config = DEFAULT,
                           ) -> list[tuple[BoolFn, BoolFn]]:
    """All normal pairs with the given arities, ascending by (g, f) table.

    Candidates are pruned to non-constant all-relevant functions first; each
    surviving pair is swept over all 2**(m*n) matrices.
    """
    if m < 2 or n < 2:
        raise ValueError("enumeration needs both arities >= 2")
    work = (1 << (1 << m)) * (1 << (1 << n)) * (1 << (m * n))
    charge(config, work, f"enumerating {m}x{n} pairs",
           "(m, n) with 2**(2**m + 2**n + m*n) within budget, e.g. up to (3, 3)")
    bits = m * n
    width = 1 << bits
    cell = [[variable_mask(i * n + j, bits) for j in range(n)] for i in range(m)]
    gs = _all_relevant_candidates(m)
    fs = _all_relevant_candidates(n)
    # column compositions depend only on g, row compositions only on f
    g_cols = {g.table: [compose(g, [cell[i][j] for i in range(m)], width)
                        for j in range(n)] for g in gs}
    f_rows = {f.table: [compose(f, [cell[i][j] for j in range(n)], width)
                        for i in range(m)] for f in fs}
    pairs = []
    for g in gs:
        cols = g_cols[g.table]
        for f in fs:
            if compose(f, cols, width) == compose(g, f_rows[f.table], width):
                pairs.append((g, f))
    return pairs


PAIR_CASES = ("both-and", "both-or", "xor-family", "trivial", "violation")


def classify_pair(g: BoolFn, f: BoolFn) -> str:
    """Case label for a normal pair.

    Non-trivial normal pairs always land in 'both-and', 'both-or', or
    'xor-family' (each member xor or nxor); 'trivial' covers arity-1 members.
    'violation' would mean a normal pair outside those shapes and is never
    produced by the enumeration.
    """
    if g.n == 1 or f.n == 1:
        return "trivial"
    cg, cf = classify(g), classify(f)
    if cg.kind == "and" and cf.kind == "and":
        return "both-and"
    if cg.kind == "or" and cf.kind == "or":
        return "both-or"
    if cg.kind in ("xor", "nxor") and cf.kind in ("xor", "nxor"):
        return "xor-family"
    return "violation"
