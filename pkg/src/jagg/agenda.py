"""Agendas: ordered bases of propositions and their fully rational judgments.

A basis lists distinct, non-degenerate formulas; the agenda it represents is
closed under negation implicitly (negations are handled by function flips
downstream, never stored).  Logical comparisons (duplicates, tautologies,
determination) are decided by truth tables over the agenda's symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolfn import BoolFn
from .config import DEFAULT, BudgetError, Config
from .formula import Atom, Formula, Not, parse


class AgendaError(ValueError):
    """A basis failed validation."""


class DuplicateProposition(AgendaError):
    """Two basis entries are logically equivalent."""


class NegationDuplicate(AgendaError):
    """Two basis entries are logical negations of each other."""


class DegenerateProposition(AgendaError):
    """A basis entry is a tautology or a contradiction."""


Judgment = tuple[bool, ...]


@dataclass(frozen=True)
class Agenda:
    """A validated ordered basis with its symbol universe.

    Build through :func:`build_agenda`; the constructor assumes valid input.
    ``tables[k]`` is the truth table of ``basis[k]`` over ``symbols`` (input
    i reads ``symbols[i]``, which are sorted).
    """

    basis: tuple[Formula, ...]
    symbols: tuple[str, ...]
    tables: tuple[BoolFn, ...]

    def __len__(self) -> int:
        return len(self.basis)

    def is_atomic(self, k: int) -> bool:
        """True iff basis entry k is an atom or a negated atom."""
        phi = self.basis[k]
        return isinstance(phi, Atom) or (isinstance(phi, Not)
                                         and isinstance(phi.child, Atom))

    def has_compound(self) -> bool:
        return any(not self.is_atomic(k) for k in range(len(self.basis)))

    def is_symbol_complete(self) -> bool:
        """True iff every symbol occurs as an atom or negated atom entry."""
        atomic = {entry.child.name if isinstance(entry, Not) else entry.name
                  for entry in self.basis if isinstance(entry, (Atom, Not))
                  and (isinstance(entry, Atom) or isinstance(entry.child, Atom))}
        return set(self.symbols) <= atomic

    def symbol_edges(self) -> tuple[tuple[int, int], ...]:
        """Pairs of basis positions sharing at least one symbol, ascending."""
        syms = [set(phi.symbols()) for phi in self.basis]
        return tuple((a, b) for a in range(len(syms)) for b in range(a + 1, len(syms))
                     if syms[a] & syms[b])

    def component_positions(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the shared-symbol graph, by first position."""
        size = len(self.basis)
        parent = list(range(size))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.symbol_edges():
            parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for k in range(size):
            groups.setdefault(find(k), []).append(k)
        return tuple(tuple(members) for _, members in
                     sorted(groups.items(), key=lambda kv: kv[1][0]))

    def is_symbol_connected(self) -> bool:
        return len(self.component_positions()) <= 1

    def components(self) -> tuple["Agenda", ...]:
        """Sub-agendas for each connected component, original order kept."""
        return tuple(build_agenda([self.basis[k] for k in members])
                     for members in self.component_positions())


def build_agenda(basis: Sequence[Formula | str], *, config: Config = DEFAULT) -> Agenda:
    """Validate a formula list into an Agenda.

    Rejects an empty basis, tautologies/contradictions, logically equivalent
    entries (even when syntactically different), and entries equivalent to
    another entry's negation.  Strings are parsed first.
    """
    formulas = tuple(parse(item) if isinstance(item, str) else item for item in basis)
    if not formulas:
        raise AgendaError("basis must not be empty")
    universe: set[str] = set()
    for phi in formulas:
        universe.update(phi.symbols())
    symbols = tuple(sorted(universe))
    if len(symbols) > config.arity_cap:
        raise BudgetError(f"{len(symbols)} symbols exceed the cap of {config.arity_cap}")
    tables = tuple(BoolFn.from_formula(phi, symbols, config=config) for phi in formulas)
    for k, t in enumerate(tables):
        if t.is_constant():
            kind = "tautology" if t.table else "contradiction"
            raise DegenerateProposition(f"basis[{k}] ({formulas[k]}) is a {kind}")
    for a in range(len(tables)):
        for b in range(a + 1, len(tables)):
            if tables[a] == tables[b]:
                raise DuplicateProposition(
                    f"basis[{b}] ({formulas[b]}) is equivalent to basis[{a}] "
                    f"({formulas[a]})")
            if tables[a].table ^ tables[b].table == tables[a].full:
                raise NegationDuplicate(
                    f"basis[{b}] ({formulas[b]}) is the negation of basis[{a}] "
                    f"({formulas[a]})")
    return Agenda(formulas, symbols, tables)


def closure(g: Formula | str, *, config: Config = DEFAULT) -> Agenda:
    """Agenda listing each symbol of a compound (sorted) and then the compound."""
    phi = parse(g) if isinstance(g, str) else g
    if isinstance(phi, Atom) or (isinstance(phi, Not) and isinstance(phi.child, Atom)):
        raise AgendaError("closure needs a compound formula")
    entries: list[Formula] = [Atom(s) for s in sorted(phi.symbols())]
    entries.append(phi)
    return build_agenda(entries, config=config)


def is_symbol_closed(g: Formula | str, agenda: Agenda) -> bool:
    """True iff every symbol of the compound ``g`` has an atomic entry in the
    agenda's basis (possibly negated)."""
    phi = parse(g) if isinstance(g, str) else g
    if isinstance(phi, Atom) or (isinstance(phi, Not) and isinstance(phi.child, Atom)):
        raise AgendaError("symbol-closedness is asked of compound formulas")
    atomic = {entry.child.name if isinstance(entry, Not) else entry.name
              for entry in agenda.basis if isinstance(entry, (Atom, Not))
              and (isinstance(entry, Atom) or isinstance(entry.child, Atom))}
    return set(phi.symbols()) <= atomic


@dataclass(frozen=True)
class RationalSet:
    """All distinct judgments induced by symbol assignments, sorted, each with
    one inducing assignment (the first in assignment order)."""

    agenda: Agenda
    judgments: tuple[Judgment, ...]
    witnesses: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.judgments)

    def __contains__(self, judgment: Judgment) -> bool:
        return tuple(judgment) in set(self.judgments)

    def witness_assignment(self, index: int) -> dict[str, bool]:
        return dict(zip(self.agenda.symbols, self.witnesses[index]))


def rational_judgments(agenda: Agenda) -> RationalSet:
    """Enumerate all 2**k symbol assignments and collect distinct judgments."""
    k = len(agenda.symbols)
    seen: dict[Judgment, tuple[bool, ...]] = {}
    for mask in range(1 << k):
        judgment = tuple(t.value(mask) for t in agenda.tables)
        if judgment not in seen:
            seen[judgment] = tuple(bool(mask >> i & 1) for i in range(k))
    ordered = sorted(seen)
    return RationalSet(agenda, tuple(ordered), tuple(seen[j] for j in ordered))


def cons(agenda: Agenda, positions: Iterable[int]) -> tuple[tuple[bool, ...], ...]:
    """Distinct restrictions of the rational judgments to the given basis
    positions (in the order given), sorted."""
    pos = tuple(positions)
    for p in pos:
        if not 0 <= p < len(agenda):
            raise ValueError(f"basis position {p} out of range")
    rs = rational_judgments(agenda)
    return tuple(sorted({tuple(j[p] for p in pos) for j in rs.judgments}))


def is_determined_by(agenda: Agenda, target: int, positions: Iterable[int]) -> bool:
    """True iff no two rational judgments agree on ``positions`` but differ
    on the ``target`` basis position."""
    pos = tuple(positions)
    if target in pos:
        raise ValueError("target must not be among the determining positions")
    if not 0 <= target < len(agenda):
        raise ValueError(f"basis position {target} out of range")
    for p in pos:
        if not 0 <= p < len(agenda):
            raise ValueError(f"basis position {p} out of range")
    rs = rational_judgments(agenda)
    values: dict[tuple[bool, ...], bool] = {}
    for j in rs.judgments:
        key = tuple(j[p] for p in pos)
        if values.setdefault(key, j[target]) != j[target]:
            return False
    return True


def load_agenda(text: str, *, config: Config = DEFAULT) -> Agenda:
    """Parse an agenda file: one formula per line, ``#`` comments, blank
    lines ignored."""
    entries: list[Formula] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            entries.append(parse(line))
        except ValueError as exc:
            raise AgendaError(f"line {lineno}: {exc}") from None
    return build_agenda(entries, config=config)
