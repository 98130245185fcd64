"""Exact tools for extremal families in Kneser graphs."""

from .setcore import FamilyMember, GroundParams, binom, colex_rank, colex_unrank, enumerate_all
from .kneser import Family, InducedGraph, adjacent, degree_in_family, induce, read_family, write_family
from .pattern import PatternGraph, chromatic_number, contains_pattern, eta, parse_pattern_name, special_sets

__all__ = [
    "Family", "FamilyMember", "GroundParams", "InducedGraph", "PatternGraph",
    "adjacent", "binom", "chromatic_number", "colex_rank", "colex_unrank", "contains_pattern",
    "degree_in_family", "enumerate_all", "eta", "induce", "parse_pattern_name",
    "read_family", "special_sets", "write_family",
]
