"""All-pairs suffix-prefix overlaps for static, insert-only and fully dynamic string sets."""

from .ac import AcAutomaton, solve_static
from .dawg import DawgIndex, DynamicAPSP
from .errors import APSPError, DeadHandle, DuplicateString, EmptyString, UnknownId
from .model import OverlapLedger, OverlapRecord, StringRecord, StringStore
from .oracle import BACKEND, NaiveSet, apsp_naive, lspo_naive
from .stree import Add, Delete, FullyDynamicAPSP, SuffixTreeIndex

__all__ = [
    "APSPError", "AcAutomaton", "Add", "BACKEND", "DawgIndex", "DeadHandle", "Delete",
    "DuplicateString", "DynamicAPSP", "EmptyString", "FullyDynamicAPSP", "NaiveSet",
    "OverlapLedger", "OverlapRecord", "StringRecord", "StringStore", "SuffixTreeIndex",
    "UnknownId", "apsp_naive", "lspo_naive", "solve_static",
]
