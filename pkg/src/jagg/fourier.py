"""Exact Fourier analysis of Boolean functions over the +/-1 domain.

Truth values are encoded T -> +1, F -> -1.  The coefficient of a subset R of
inputs is the average of f(x) * prod_{i in R} x_i over all points, always an
integer multiple of 2**-n; everything here is computed in exact dyadic
arithmetic, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolfn import BoolFn


@dataclass(frozen=True)
class Dyadic:
    """Exact rational num / 2**exp with num odd or zero (then exp == 0)."""

    num: int
    exp: int

    def __post_init__(self) -> None:
        if self.exp < 0:
            raise ValueError("exponent must be non-negative")
        if self.num == 0:
            if self.exp != 0:
                raise ValueError("zero must have exponent 0")
        elif self.num % 2 == 0 and self.exp > 0:
            raise ValueError(f"{self.num}/2**{self.exp} is not in lowest terms")

    @classmethod
    def make(cls, num: int, exp: int = 0) -> "Dyadic":
        """Canonicalise num / 2**exp."""
        if num == 0:
            return cls(0, 0)
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        return cls(num, exp)

    @staticmethod
    def _coerce(value: "Dyadic | int") -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return Dyadic.make(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "Dyadic | int") -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        exp = max(self.exp, o.exp)
        num = (self.num << (exp - self.exp)) + (o.num << (exp - o.exp))
        return Dyadic.make(num, exp)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other: "Dyadic | int") -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: int) -> "Dyadic":
        return Dyadic.make(other) + (-self)

    def __mul__(self, other: "Dyadic | int") -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Dyadic.make(self.num * o.num, self.exp + o.exp)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Dyadic":
        if k < 0:
            raise ValueError("negative powers are not dyadic in general")
        return Dyadic.make(self.num ** k, self.exp * k)

    def __bool__(self) -> bool:
        return self.num != 0

    def _scaled(self, exp: int) -> int:
        return self.num << (exp - self.exp)

    def __lt__(self, other: "Dyadic | int") -> bool:
        o = self._coerce(other)
        exp = max(self.exp, o.exp)
        return self._scaled(exp) < o._scaled(exp)

    def __le__(self, other: "Dyadic | int") -> bool:
        o = self._coerce(other)
        exp = max(self.exp, o.exp)
        return self._scaled(exp) <= o._scaled(exp)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Dyadic.make(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __hash__(self) -> int:
        # integers compare equal to exp-0 dyadics, so they must hash alike
        return hash(self.num) if self.exp == 0 else hash((self.num, self.exp))

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    def __str__(self) -> str:
        return str(self.num) if self.exp == 0 else f"{self.num}/2^{self.exp}"


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)


@dataclass(frozen=True)
class FourierSpectrum:
    """All 2**n coefficients of an arity-n function, indexed by subset bitmask."""

    n: int
    coeffs: tuple[Dyadic, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, subset: int) -> Dyadic:
        """Coefficient of the subset given as an n-bit index mask."""
        return self.coeffs[subset]

    def coefficient(self, subset: Iterable[int]) -> Dyadic:
        """Coefficient of the subset given as an iterable of input indices."""
        mask = 0
        for i in subset:
            if not 0 <= i < self.n:
                raise ValueError(f"index {i} out of range for arity {self.n}")
            mask |= 1 << i
        return self.coeffs[mask]

    def parseval_sum(self) -> Dyadic:
        """Sum of squared coefficients; exactly 1 for any Boolean function."""
        total = ZERO
        for c in self.coeffs:
            total = total + c * c
        return total

    def support(self) -> tuple[int, ...]:
        """Subset masks with non-zero coefficient, ascending."""
        return tuple(s for s, c in enumerate(self.coeffs) if c)


def spectrum(f: BoolFn) -> FourierSpectrum:
    """Exact spectrum via an in-place integer transform, O(n * 2**n)."""
    vals = [1 if f.table >> p & 1 else -1 for p in range(f.points)]
    step = 1
    while step < f.points:
        for base in range(0, f.points, step << 1):
            for k in range(base, base + step):
                lo, hi = vals[k], vals[k + step]   # input bit clear / set
                vals[k] = hi + lo                  # subset without this input
                vals[k + step] = hi - lo           # subset with this input
        step <<= 1
    return FourierSpectrum(f.n, tuple(Dyadic.make(v, f.n) for v in vals))


def reconstruct(spec: FourierSpectrum) -> BoolFn:
    """Inverse transform; errors if the coefficients are not a Boolean function."""
    exp = max((c.exp for c in spec.coeffs), default=0)
    vals = [c._scaled(exp) for c in spec.coeffs]
    npts = 1 << spec.n
    step = 1
    while step < npts:
        for base in range(0, npts, step << 1):
            for k in range(base, base + step):
                without, with_ = vals[k], vals[k + step]
                vals[k] = without - with_          # input bit clear -> x_i = -1
                vals[k + step] = without + with_   # input bit set   -> x_i = +1
        step <<= 1
    table = 0
    unit = 1 << exp
    for p, v in enumerate(vals):
        if v == unit:
            table |= 1 << p
        elif v != -unit:
            raise ValueError(f"coefficients do not describe a Boolean function "
                             f"(value {v}/2**{exp} at point {p})")
    return BoolFn(spec.n, table)


# --- composition-coefficient identities -------------------------------------

def _supersets(mask: int, universe: int) -> Iterable[int]:
    """All subsets of ``universe`` containing ``mask``."""
    free = universe & ~mask
    sub = 0
    while True:
        yield mask | sub
        if sub == free:
            return
        sub = (sub - free) & free


def cell_subset_identity(g: BoolFn, f: BoolFn,
                         cells: "int | Iterable[tuple[int, int]]",
                         ) -> tuple[Dyadic, Dyadic]:
    """Both sides of the coefficient identity for a set of matrix cells.

    For an m x n matrix of inputs (g down columns of height m, f across rows
    of width n) and a cell set U, the two composite evaluations have, as
    functions of the matrix entries, these coefficients on the monomial
    prod_{(i,j) in U} M_ij:

      column-then-row side:
        (sum over S' containing the column set of U of fhat(S') * ghat({})**extra)
        * prod over used columns j of ghat(rows of U in column j)
      row-then-column side: same with g and f, rows and columns, swapped.

    The pair is equal for every U exactly when (g, f) commute on all matrices.
    Cells are (row, col) pairs or a bitmask with bit i*n + j for cell (i, j).
    """
    m, n = g.n, f.n
    if isinstance(cells, int):
        umask = cells
        if not 0 <= umask < 1 << (m * n):
            raise ValueError(f"cell mask {umask:#x} out of range for {m}x{n}")
    else:
        umask = 0
        for (i, j) in cells:
            if not (0 <= i < m and 0 <= j < n):
                raise ValueError(f"cell ({i}, {j}) out of range for {m}x{n}")
            umask |= 1 << (i * n + j)

    ghat = spectrum(g)
    fhat = spectrum(f)
    col_rows = [0] * n   # per column j, mask of rows used by U
    row_cols = [0] * m   # per row i, mask of columns used by U
    for i in range(m):
        for j in range(n):
            if umask >> (i * n + j) & 1:
                col_rows[j] |= 1 << i
                row_cols[i] |= 1 << j
    s_mask = 0           # columns touched by U, as a subset of f's inputs
    for j in range(n):
        if col_rows[j]:
            s_mask |= 1 << j
    r_mask = 0           # rows touched by U, as a subset of g's inputs
    for i in range(m):
        if row_cols[i]:
            r_mask |= 1 << i

    def side(outer: FourierSpectrum, inner: FourierSpectrum, touched: int,
             used_masks: list[int], arity: int) -> Dyadic:
        total = ZERO
        for sup in _supersets(touched, (1 << arity) - 1):
            extra = (sup & ~touched).bit_count()
            total = total + outer[sup] * (inner[0] ** extra)
        prod = ONE
        for mask in used_masks:
            if mask:
                prod = prod * inner[mask]
        return total * prod

    lhs = side(fhat, ghat, s_mask, col_rows, n)
    rhs = side(ghat, fhat, r_mask, row_cols, m)
    return lhs, rhs


def rectangle_identity(g: BoolFn, f: BoolFn, rows: Iterable[int],
                       cols: Iterable[int]) -> tuple[Dyadic, Dyadic]:
    """Cell-subset identity specialised to a full rectangle R x S.

    ``rows`` are g-input indices, ``cols`` f-input indices; both non-empty.
    """
    rset = set(rows)
    cset = set(cols)
    if not rset or not cset:
        raise ValueError("rectangle needs non-empty row and column sets")
    return cell_subset_identity(g, f, [(i, j) for i in rset for j in cset])
