"""Exception types shared across the package."""


class RelgameError(Exception):
    """Base class for all package-specific errors."""


class StructureError(RelgameError):
    """Malformed structure, unit, network or move data."""


class BudgetExceededError(RelgameError):
    """Exhaustive axiom checking would exceed the configured budget.

    Callers should fall back to sampled mode.
    """


class ProfileError(RelgameError):
    """Existence or uniqueness of a start/end identity atom failed.

    Signals that the structure is not in REL despite whatever checks ran
    earlier (for example a sampled axiom check that missed a violation).
    """


class ChainError(RelgameError):
    """A list of pre-networks is not a containment chain."""


class GameRefusedError(RelgameError):
    """The game was asked to run on a structure that fails the axioms."""


class GameInvariantError(RelgameError):
    """A network built during play violated a network condition.

    The winning strategy guarantees this never happens on axiom-passing
    structures, so this error surfaces an implementation bug or a
    checker escape, not a user mistake.
    """


class GuardError(RelgameError):
    """A brute-force search bound guard was exceeded."""
