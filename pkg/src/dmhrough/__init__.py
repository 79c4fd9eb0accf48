"""Fuzzy rough approximation operators over finite De Morgan Heyting algebras."""

from __future__ import annotations

from .approx import OperatorWord, apply_word, lower, lower_residuated, upper
from .catalog import EXAMPLE_IDS, reproduce
from .correspondence import OperatorLaw, law_holds, search_counterexample, sweep
from .crisp import CrispRelation, CrispSet, crisp_approx, crisp_property
from .errors import DmhError
from .fuzzy import FuzzyRelation, FuzzySet, Universe, all_relations, all_sets, singleton
from .lattice import DmhAlgebra, make_algebra, standard_algebra
from .reconstruction import (
    AxiomSpec,
    ExtensionalTable,
    SingletonGenerated,
    characterized_axiom_holds,
    extract_relation,
    represents_upper,
)
from .relations import PropertyKind, check_property

__all__ = [
    "AxiomSpec",
    "CrispRelation",
    "CrispSet",
    "DmhAlgebra",
    "DmhError",
    "EXAMPLE_IDS",
    "ExtensionalTable",
    "FuzzyRelation",
    "FuzzySet",
    "OperatorLaw",
    "OperatorWord",
    "PropertyKind",
    "SingletonGenerated",
    "Universe",
    "all_relations",
    "all_sets",
    "apply_word",
    "characterized_axiom_holds",
    "check_property",
    "crisp_approx",
    "crisp_property",
    "extract_relation",
    "law_holds",
    "lower",
    "lower_residuated",
    "make_algebra",
    "represents_upper",
    "reproduce",
    "search_counterexample",
    "standard_algebra",
    "sweep",
    "singleton",
    "upper",
]
