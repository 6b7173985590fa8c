"""Total Boolean functions as bit-packed truth tables.

A function of arity ``n`` stores its table in a single int of ``2**n`` bits:
bit ``p`` is the output on the input point whose i-th component (0-based) is
bit ``i`` of ``p``, so input 0 is the least significant bit of the point
index.  This keeps evaluation, cofactor tests, and whole-table sweeps as
integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import DEFAULT, BudgetError, Config
from .formula import And, Atom, Formula, Not, Or, Xor

Point = "int | Sequence[bool]"


def variable_mask(i: int, n: int) -> int:
    """Truth table (as an int over 2**n points) of the i-th input itself."""
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for arity {n}")
    npts = 1 << n
    block = 1 << i
    period = block << 1
    ones_at_periods = ((1 << npts) - 1) // ((1 << period) - 1)
    return (ones_at_periods * ((1 << block) - 1)) << block


def compose(f: "BoolFn", arg_tables: Sequence[int], width: int) -> int:
    """Truth table of ``f`` applied pointwise to ``width``-point argument tables.

    Each entry of ``arg_tables`` is a table over the same point set; the
    result has bit ``p`` set iff ``f`` maps the argument bits at ``p`` to T.
    """
    if len(arg_tables) != f.n:
        raise ValueError(f"expected {f.n} argument tables, got {len(arg_tables)}")
    full = (1 << width) - 1
    out = 0
    for minterm in range(1 << f.n):
        if not f.table >> minterm & 1:
            continue
        acc = full
        for i, arg in enumerate(arg_tables):
            acc &= arg if minterm >> i & 1 else full ^ arg
            if not acc:
                break
        out |= acc
    return out


@dataclass(frozen=True)
class BoolFn:
    """A Boolean function of arity ``n`` with its truth table packed in ``table``."""

    n: int
    table: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"arity must be non-negative, got {self.n}")
        if not 0 <= self.table < (1 << (1 << self.n)):
            raise ValueError(f"table {self.table:#x} out of range for arity {self.n}")

    # --- constructors -------------------------------------------------------

    @staticmethod
    def _check_arity(n: int, config: Config) -> None:
        if n > config.arity_cap:
            raise BudgetError(f"arity {n} exceeds the cap of {config.arity_cap}")

    @classmethod
    def all_true(cls, n: int, *, config: Config = DEFAULT) -> "BoolFn":
        cls._check_arity(n, config)
        return cls(n, (1 << (1 << n)) - 1)

    @classmethod
    def all_false(cls, n: int, *, config: Config = DEFAULT) -> "BoolFn":
        cls._check_arity(n, config)
        return cls(n, 0)

    @classmethod
    def constant(cls, n: int, value: bool, *, config: Config = DEFAULT) -> "BoolFn":
        return cls.all_true(n, config=config) if value else cls.all_false(n, config=config)

    @classmethod
    def and_(cls, n: int, *, config: Config = DEFAULT) -> "BoolFn":
        if n < 1:
            raise ValueError("and needs arity >= 1")
        cls._check_arity(n, config)
        return cls(n, 1 << ((1 << n) - 1))

    @classmethod
    def or_(cls, n: int, *, config: Config = DEFAULT) -> "BoolFn":
        if n < 1:
            raise ValueError("or needs arity >= 1")
        cls._check_arity(n, config)
        return cls(n, ((1 << (1 << n)) - 1) ^ 1)

    @classmethod
    def xor(cls, n: int, *, config: Config = DEFAULT) -> "BoolFn":
        """Odd parity: T iff an odd number of inputs are T."""
        if n < 1:
            raise ValueError("xor needs arity >= 1")
        cls._check_arity(n, config)
        table = 0
        for p in range(1 << n):
            if p.bit_count() % 2 == 1:
                table |= 1 << p
        return cls(n, table)

    @classmethod
    def nxor(cls, n: int, *, config: Config = DEFAULT) -> "BoolFn":
        """Even parity: the negation of xor."""
        x = cls.xor(n, config=config)
        return cls(n, x.table ^ ((1 << (1 << n)) - 1))

    @classmethod
    def dictator(cls, n: int, i: int, *, config: Config = DEFAULT) -> "BoolFn":
        """Projection onto input ``i`` (0-based)."""
        if n < 1:
            raise ValueError("dictator needs arity >= 1")
        cls._check_arity(n, config)
        return cls(n, variable_mask(i, n))

    @classmethod
    def anti_dictator(cls, n: int, i: int, *, config: Config = DEFAULT) -> "BoolFn":
        """Negated projection onto input ``i`` (0-based)."""
        d = cls.dictator(n, i, config=config)
        return cls(n, d.table ^ ((1 << (1 << n)) - 1))

    @classmethod
    def majority(cls, n: int, *, ties: bool = True, config: Config = DEFAULT) -> "BoolFn":
        """T iff more than half the inputs are T; ``ties`` decides an exact half."""
        if n < 1:
            raise ValueError("majority needs arity >= 1")
        cls._check_arity(n, config)
        table = 0
        for p in range(1 << n):
            double = 2 * p.bit_count()
            if double > n or (double == n and ties):
                table |= 1 << p
        return cls(n, table)

    @classmethod
    def from_formula(cls, phi: Formula, symbol_order: Sequence[str], *,
                     config: Config = DEFAULT) -> "BoolFn":
        """Truth table of ``phi`` with input i reading ``symbol_order[i]``.

        ``symbol_order`` may include extra symbols; those inputs are ignored
        by the result.  Missing or duplicated symbols are errors.
        """
        n = len(symbol_order)
        cls._check_arity(n, config)
        if len(set(symbol_order)) != n:
            raise ValueError("symbol_order contains duplicates")
        missing = set(phi.symbols()) - set(symbol_order)
        if missing:
            raise ValueError(f"symbols {sorted(missing)} not in symbol_order")
        masks = {s: variable_mask(i, n) for i, s in enumerate(symbol_order)}
        full = (1 << (1 << n)) - 1

        def fold(node: Formula) -> int:
            if isinstance(node, Atom):
                return masks[node.name]
            if isinstance(node, Not):
                return full ^ fold(node.child)
            acc = full if isinstance(node, And) else 0
            for child in node.args:  # type: ignore[attr-defined]
                bits = fold(child)
                if isinstance(node, And):
                    acc &= bits
                elif isinstance(node, Or):
                    acc |= bits
                else:
                    acc ^= bits
            return acc

        return cls(n, fold(phi))

    # --- evaluation ---------------------------------------------------------

    @property
    def points(self) -> int:
        return 1 << self.n

    @property
    def full(self) -> int:
        return (1 << self.points) - 1

    def value(self, point: int) -> bool:
        """Output at an input point given as an n-bit index."""
        if not 0 <= point < self.points:
            raise ValueError(f"point {point} out of range for arity {self.n}")
        return bool(self.table >> point & 1)

    def __call__(self, *inputs: bool) -> bool:
        if len(inputs) != self.n:
            raise ValueError(f"expected {self.n} inputs, got {len(inputs)}")
        point = 0
        for i, b in enumerate(inputs):
            if b:
                point |= 1 << i
        return self.value(point)

    def apply(self, inputs: Sequence[bool]) -> bool:
        return self(*inputs)

    # --- structure ----------------------------------------------------------

    def is_constant(self) -> bool:
        return self.table == 0 or self.table == self.full

    def is_pivotal(self, i: int, point: int) -> bool:
        """True iff flipping input ``i`` at ``point`` flips the output."""
        if not 0 <= i < self.n:
            raise ValueError(f"index {i} out of range for arity {self.n}")
        return self.value(point) != self.value(point ^ (1 << i))

    def is_relevant(self, i: int) -> bool:
        """True iff input ``i`` is pivotal at some point."""
        if not 0 <= i < self.n:
            raise ValueError(f"index {i} out of range for arity {self.n}")
        low = self.full ^ variable_mask(i, self.n)   # points with input i = F
        return (self.table & low) != (self.table >> (1 << i)) & low

    def relevant_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.is_relevant(i))

    def flip(self) -> "BoolFn":
        """The function s -> not f(not s_0, ..., not s_{n-1}); an involution."""
        rev = 0
        for p in range(self.points):
            if self.table >> p & 1:
                rev |= 1 << (self.points - 1 - p)
        return BoolFn(self.n, rev ^ self.full)

    def negate(self) -> "BoolFn":
        """Pointwise output negation."""
        return BoolFn(self.n, self.table ^ self.full)

    def forceable_indices(self) -> tuple[tuple[bool, bool] | None, ...]:
        """Per index, an (x, y) with "input i = x forces output y", else None.

        When both input values force (only constants), the x = F witness is
        reported.
        """
        out: list[tuple[bool, bool] | None] = []
        for i in range(self.n):
            high = variable_mask(i, self.n)
            low = self.full ^ high
            witness: tuple[bool, bool] | None = None
            if self.table & low == low:
                witness = (False, True)
            elif self.table & low == 0:
                witness = (False, False)
            elif self.table & high == high:
                witness = (True, True)
            elif self.table & high == 0:
                witness = (True, False)
            out.append(witness)
        return tuple(out)

    def is_forceful(self) -> bool:
        """True iff every input index has a forcing value."""
        return all(w is not None for w in self.forceable_indices())

    def forceful_decomposition(self) -> "ForcefulDecomposition":
        """Sign vector (c0, c1..cn) writing f as -c0 + c0/2**(n-1) * prod(1 + ci*ri).

        Such an f equals -c0 everywhere except the single point ri = ci where
        it equals c0.  Requires a non-constant forceful function of arity > 1.
        """
        if self.n <= 1:
            raise ValueError("decomposition needs arity > 1")
        if self.is_constant():
            raise ValueError("constant functions have no product decomposition")
        if not self.is_forceful():
            raise ValueError("function is not forceful")
        ones = self.table.bit_count()
        if ones == 1:
            exceptional = self.table.bit_length() - 1
            c0 = 1
        elif ones == self.points - 1:
            exceptional = (self.table ^ self.full).bit_length() - 1
            c0 = -1
        else:
            raise AssertionError("forceful non-constant table must have one minority point")
        signs = tuple(1 if exceptional >> i & 1 else -1 for i in range(self.n))
        return ForcefulDecomposition(self.n, c0, signs)

    def restrict_to(self, indices: Sequence[int]) -> "BoolFn":
        """Sub-function reading only ``indices`` (ascending), others fixed to F.

        Meaningful when the dropped indices are irrelevant; then the result
        is the function induced on the kept inputs.
        """
        idx = tuple(indices)
        if list(idx) != sorted(set(idx)):
            raise ValueError("indices must be strictly increasing")
        if idx and not 0 <= idx[0] <= idx[-1] < self.n:
            raise ValueError(f"indices {idx} out of range for arity {self.n}")
        k = len(idx)
        table = 0
        for q in range(1 << k):
            point = 0
            for j, i in enumerate(idx):
                if q >> j & 1:
                    point |= 1 << i
            if self.value(point):
                table |= 1 << q
        return BoolFn(k, table)

    def on_relevant(self) -> tuple["BoolFn", tuple[int, ...]]:
        """The function induced on its relevant inputs, with those indices."""
        rel = self.relevant_indices()
        return self.restrict_to(rel), rel

    def is_symmetric(self) -> bool:
        """True iff the output depends only on how many inputs are T."""
        by_count: dict[int, bool] = {}
        for p in range(self.points):
            c = p.bit_count()
            v = bool(self.table >> p & 1)
            if by_count.setdefault(c, v) != v:
                return False
        return True


@dataclass(frozen=True)
class ForcefulDecomposition:
    """Signs for the product form -c0 + c0/2**(n-1) * prod_i(1 + c_i*r_i)."""

    n: int
    c0: int
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.c0 not in (-1, 1) or any(c not in (-1, 1) for c in self.signs):
            raise ValueError("signs must be +1 or -1")
        if len(self.signs) != self.n:
            raise ValueError(f"expected {self.n} signs, got {len(self.signs)}")

    def expand(self) -> BoolFn:
        """Truth table obtained by evaluating the product form at every point."""
        table = 0
        for p in range(1 << self.n):
            prod = 1
            for i, c in enumerate(self.signs):
                r = 1 if p >> i & 1 else -1
                prod *= 1 + c * r
            # f(p) = -c0 + c0 * prod / 2**(n-1); prod is 0 or 2**n
            value = -self.c0 + self.c0 * prod // (1 << (self.n - 1))
            if value == 1:
                table |= 1 << p
            elif value != -1:
                raise AssertionError(f"product form gave non-sign value {value}")
        return BoolFn(self.n, table)


# --- classification ---------------------------------------------------------

CLASS_KINDS = ("constant", "dictator", "anti_dictator", "and", "or", "xor",
               "nxor", "other")


@dataclass(frozen=True)
class FnClass:
    """Shape label for a function: named family, projection, or other.

    ``index`` is set for dictator/anti_dictator, ``value`` for constant.
    At arity 1 the identity counts as a dictator, not as xor.
    """

    kind: str
    index: int | None = None
    value: bool | None = None

    def __post_init__(self) -> None:
        if self.kind not in CLASS_KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "constant":
            return f"constant({'T' if self.value else 'F'})"
        if self.kind in ("dictator", "anti_dictator"):
            return f"{self.kind}({self.index})"
        return self.kind


def classify(f: BoolFn) -> FnClass:
    """Label ``f`` against the named families, checked on the full table.

    Precedence: constant, dictator, anti-dictator, and, or, xor, nxor; a
    table matching none is "other".
    """
    if f.table == 0:
        return FnClass("constant", value=False)
    if f.table == f.full:
        return FnClass("constant", value=True)
    for i in range(f.n):
        if f.table == variable_mask(i, f.n):
            return FnClass("dictator", index=i)
    for i in range(f.n):
        if f.table == variable_mask(i, f.n) ^ f.full:
            return FnClass("anti_dictator", index=i)
    if f.n >= 1:
        if f.table == BoolFn.and_(f.n).table:
            return FnClass("and")
        if f.table == BoolFn.or_(f.n).table:
            return FnClass("or")
        if f.table == BoolFn.xor(f.n).table:
            return FnClass("xor")
        if f.table == BoolFn.nxor(f.n).table:
            return FnClass("nxor")
    return FnClass("other")


def classify_on_relevant(f: BoolFn) -> tuple[FnClass, tuple[int, ...]]:
    """Classify the function induced on the relevant inputs.

    Returns the label of the restriction and the relevant indices of ``f``;
    a dictator label refers to position 0/1/... within that index tuple.
    """
    sub, rel = f.on_relevant()
    return classify(sub), rel


# --- textual function specs -------------------------------------------------

_SPEC_RE = re.compile(r"(?P<kind>[a-z_]+):(?P<rest>.*)")


def parse_fn_spec(text: str, *, config: Config = DEFAULT) -> BoolFn:
    """Parse a function spec such as ``and:3``, ``const:2:T``, ``dictator:3:1``
    (0-based index), or ``tt:<n>:<hex>`` with the point-0 output in the least
    significant bit."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind in ("and", "or", "xor", "nxor") and len(parts) == 2:
            n = int(parts[1])
            maker = {"and": BoolFn.and_, "or": BoolFn.or_,
                     "xor": BoolFn.xor, "nxor": BoolFn.nxor}[kind]
            return maker(n, config=config)
        if kind == "const" and len(parts) == 3 and parts[2] in ("T", "F"):
            return BoolFn.constant(int(parts[1]), parts[2] == "T", config=config)
        if kind == "dictator" and len(parts) == 3:
            return BoolFn.dictator(int(parts[1]), int(parts[2]), config=config)
        if kind == "tt" and len(parts) == 3:
            n = int(parts[1])
            BoolFn._check_arity(n, config)
            return BoolFn(n, int(parts[2], 16))
    except (ValueError, BudgetError) as exc:
        if isinstance(exc, BudgetError):
            raise
        raise ValueError(f"bad function spec {text!r}: {exc}") from None
    raise ValueError(f"bad function spec {text!r}")


def format_fn_spec(f: BoolFn) -> str:
    """Canonical ``tt:<n>:<hex>`` spec for ``f`` (zero-padded, lowercase)."""
    digits = max(1, f.points // 4)
    return f"tt:{f.n}:{f.table:0{digits}x}"


def all_tables(n: int) -> Iterable[BoolFn]:
    """Every function of arity ``n``, in ascending table order."""
    for table in range(1 << (1 << n)):
        yield BoolFn(n, table)
