"""Relativized relation-type algebras: axioms, games, representations.

The package takes a finite atom structure, decides the REL axioms over
its complex algebra, and, when they hold, builds and verifies a
relativized set representation by playing a network-building game with
the builder's winning strategy.
"""

from .algebra import (
    AtomStructure,
    ConcreteUnit,
    Element,
    build_concrete,
    dump_structure,
    dump_unit,
    load_structure,
    load_structure_file,
    load_unit,
    load_unit_file,
)
from .atoms import AtomProfile, AtomProfiles, LemmaReport, profile_atoms, validate_lemmas
from .axioms import AxiomReport, check_axioms, recheck_witness
from .errors import (
    BudgetExceededError,
    ChainError,
    GameInvariantError,
    GameRefusedError,
    GuardError,
    ProfileError,
    RelgameError,
    StructureError,
)
from .game import AtomMove, PlayTrace, Scheduler, WitnessMove, run_game
from .networks import (
    NetworkViolation,
    PreNetwork,
    check_network,
    initial_network,
    network_from_json,
    network_to_dot,
    network_to_json,
    restrict,
    union_chain,
)
from .oracle import SearchResult, brute_force_representation, unit_catalog, validate_witness
from .represent import (
    Representation,
    RoundtripReport,
    VerificationReport,
    extract,
    find_isomorphism,
    roundtrip_check,
    verify,
    verify_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AtomStructure", "ConcreteUnit", "Element",
    "build_concrete", "load_structure", "load_structure_file",
    "dump_structure", "load_unit", "load_unit_file", "dump_unit",
    "AtomProfile", "AtomProfiles", "profile_atoms", "validate_lemmas", "LemmaReport",
    "AxiomReport", "check_axioms", "recheck_witness",
    "PreNetwork", "NetworkViolation", "check_network", "initial_network",
    "restrict", "union_chain", "network_to_json", "network_from_json", "network_to_dot",
    "AtomMove", "WitnessMove", "Scheduler", "PlayTrace", "run_game",
    "Representation", "VerificationReport", "extract", "verify", "verify_trace",
    "find_isomorphism", "RoundtripReport", "roundtrip_check",
    "SearchResult", "unit_catalog", "brute_force_representation", "validate_witness",
    "RelgameError", "StructureError", "BudgetExceededError", "ProfileError",
    "ChainError", "GameRefusedError", "GameInvariantError", "GuardError",
    "__version__",
]
