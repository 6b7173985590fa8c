"""Judgment aggregation over propositional agendas, with exact Boolean
Fourier analysis, normal-pair commutation checks, and exhaustive
verification sweeps at desk scale."""

__version__ = "0.1.0"

from .config import Config, BudgetError, DEFAULT
from .formula import (Atom, Not, And, Or, Xor, Formula, ParseError, parse,
                      negate)
from .boolfn import (BoolFn, FnClass, ForcefulDecomposition, classify,
                     classify_on_relevant, compose, variable_mask,
                     parse_fn_spec, format_fn_spec, all_tables)
from .fourier import (Dyadic, FourierSpectrum, spectrum, reconstruct,
                      cell_subset_identity, rectangle_identity)
from .normalpair import (NormalPairReport, Violation, check_normal_pair,
                         enumerate_normal_pairs, classify_pair)
from .agenda import (Agenda, AgendaError, DuplicateProposition,
                     NegationDuplicate, DegenerateProposition, RationalSet,
                     build_agenda, closure, is_symbol_closed,
                     rational_judgments, cons, is_determined_by, load_agenda)
from .jar import (PiJar, JarVerdict, UniformSolution, uniform_jar, check_jar,
                  dependent_pair_relation, to_normal_form,
                  enumerate_uniform_rules, enumerate_independent_rules,
                  filter_axioms, restrict_jar, OLIGARCHY_KINDS)
from .verify import SUITES, run_suites, CheckResult, VerifyReport

__all__ = [
    "Config", "BudgetError", "DEFAULT",
    "Atom", "Not", "And", "Or", "Xor", "Formula", "ParseError", "parse",
    "negate",
    "BoolFn", "FnClass", "ForcefulDecomposition", "classify",
    "classify_on_relevant", "compose", "variable_mask", "parse_fn_spec",
    "format_fn_spec", "all_tables",
    "Dyadic", "FourierSpectrum", "spectrum", "reconstruct",
    "cell_subset_identity", "rectangle_identity",
    "NormalPairReport", "Violation", "check_normal_pair",
    "enumerate_normal_pairs", "classify_pair",
    "Agenda", "AgendaError", "DuplicateProposition", "NegationDuplicate",
    "DegenerateProposition", "RationalSet", "build_agenda", "closure",
    "is_symbol_closed", "rational_judgments", "cons", "is_determined_by",
    "load_agenda",
    "PiJar", "JarVerdict", "UniformSolution", "uniform_jar", "check_jar",
    "dependent_pair_relation", "to_normal_form", "enumerate_uniform_rules",
    "enumerate_independent_rules", "filter_axioms", "restrict_jar",
    "OLIGARCHY_KINDS",
    "SUITES", "run_suites", "CheckResult", "VerifyReport",
]
