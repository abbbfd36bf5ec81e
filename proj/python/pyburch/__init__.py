"""Burch ideals and rings over prime fields."""

from ._burch import (
    Algebra,
    ConsistencyError,
    Ideal,
    ParseError,
    PreconditionError,
    Ring,
    burch_ideal_test,
    burch_ring,
    c_invariant,
    choi_invariant,
    cube_zero_test,
    cut_down,
    enumerate_mprimary,
    fibre_burch,
    koszul_h1,
    lemma62_test,
    m_full,
    prop23_crosscheck,
    resolve,
    tor,
    weakly_m_full,
)

__all__ = [
    "Algebra",
    "ConsistencyError",
    "Ideal",
    "ParseError",
    "PreconditionError",
    "Ring",
    "burch_ideal_test",
    "burch_ring",
    "c_invariant",
    "choi_invariant",
    "cube_zero_test",
    "cut_down",
    "enumerate_mprimary",
    "fibre_burch",
    "koszul_h1",
    "lemma62_test",
    "m_full",
    "prop23_crosscheck",
    "resolve",
    "tor",
    "weakly_m_full",
]
