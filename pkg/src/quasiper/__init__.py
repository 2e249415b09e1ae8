"""Quasiperiodic words and the morphisms that produce them."""

from .classify import (
    Budget,
    FamilyReport,
    InvariantViolation,
    Verdict,
    candidate_quasiperiods,
    classify,
    strong_qp_finite,
    strong_qp_infinite,
    weak_qp_finite,
    weak_qp_infinite,
)
from .coverauto import FINITE, INFINITE, CoverAutomaton, accepts, build, to_dot
from .infwords import EventuallyPeriodicWord, is_q_quasiperiodic_inf, quasiperiod_inf
from .langops import ResourceLimitExceeded, enumerate_accepted, union_universal
from .morphism import Morphism, apply, code_violation, compose
from .words import Alphabet, Word, is_quasiperiodic, is_superprimitive, quasiperiod, quasiperiods

__version__ = "0.1.0"
