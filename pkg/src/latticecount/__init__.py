"""Counting finite lattices by size, reducible elements, nullity and the
height of their basic block, with brute-force oracles to check the counts."""
from .canon import CanonicalForm, canonical_form, is_isomorphic
from .construct import AdjunctRep, adjunct, catalog, chain, realize
from .enumeration import classify, enumerate_adjunct_lattices, enumerate_all_lattices
from .formulas import FORMULAS, evaluate, partition_count
from .poset import NotALattice, Poset, PosetError
from .reduce import basic_block, identify_block
from .verify import verify

__version__ = "0.1.0"

__all__ = [
    "AdjunctRep", "CanonicalForm", "FORMULAS", "NotALattice", "Poset", "PosetError",
    "adjunct", "basic_block", "canonical_form", "catalog", "chain", "classify",
    "enumerate_adjunct_lattices", "enumerate_all_lattices", "evaluate", "identify_block",
    "is_isomorphic", "partition_count", "realize", "verify",
]
