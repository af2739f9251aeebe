"""Equational checker for the relation-type axioms Ax 1 - Ax 9, Ax s, Ax r.

Every axiom is evaluated as one or more equational clauses over element
assignments of the complex algebra.  Exhaustive mode enumerates the full
assignment space of each clause (all elements for every free variable)
provided ``2^(3*|atoms|)`` stays within the configured budget; sampled
mode draws seeded random assignments instead.  Closed clauses (no free
variables) are always decided exactly, in both modes.

Ax s (``conv 1 = 1``) and Ax r (``1';1 = 1 = 1;1'``) are always
evaluated, but they count toward the overall verdict only when the
structure claims the corresponding H flag.

The reported counterexample of a failing clause is the first one in
canonical assignment order: lexicographic in the bitmask values of the
clause's free variables.  This is independent of evaluation schedule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import _kernels
from .algebra import AtomStructure, Element
from .errors import BudgetExceededError

__all__ = [
    "Clause",
    "CLAUSES",
    "AXIOM_ORDER",
    "ClauseResult",
    "AxiomReport",
    "check_axioms",
    "recheck_witness",
    "DEFAULT_BUDGET",
    "DEFAULT_SAMPLES",
]

DEFAULT_BUDGET = 2**24
DEFAULT_SAMPLES = 1024

AXIOM_ORDER = (
    "Ax1", "Ax2", "Ax3", "Ax4", "Ax5", "Ax6", "Ax7", "Ax8", "Ax9", "Axs", "Axr",
)


@dataclass(frozen=True)
class Clause:
    axiom: str
    name: str  # kernel/report key, e.g. "ax5/mod-left"
    arity: int


CLAUSES: tuple[Clause, ...] = (
    Clause("Ax1", "ax1/or-comm", 2),
    Clause("Ax1", "ax1/and-comm", 2),
    Clause("Ax1", "ax1/or-assoc", 3),
    Clause("Ax1", "ax1/and-assoc", 3),
    Clause("Ax1", "ax1/and-over-or", 3),
    Clause("Ax1", "ax1/or-over-and", 3),
    Clause("Ax1", "ax1/or-ident", 1),
    Clause("Ax1", "ax1/and-ident", 1),
    Clause("Ax1", "ax1/compl-join", 1),
    Clause("Ax1", "ax1/compl-meet", 1),
    Clause("Ax2", "ax2/conv-meet", 2),
    Clause("Ax3", "ax3/add-left", 3),
    Clause("Ax3", "ax3/add-right", 3),
    Clause("Ax4", "ax4/zero-right", 0),
    Clause("Ax4", "ax4/zero-left", 0),
    Clause("Ax5", "ax5/mod-left", 3),
    Clause("Ax5", "ax5/mod-right", 3),
    Clause("Ax6", "ax6/id-left", 1),
    Clause("Ax6", "ax6/id-right", 1),
    Clause("Ax7", "ax7/id-square", 0),
    Clause("Ax8", "ax8/conv-def", 0),
    Clause("Ax9", "ax9/assoc-id-left", 3),
    Clause("Ax9", "ax9/assoc-id-mid", 3),
    Clause("Ax9", "ax9/assoc-id-right", 3),
    Clause("Axs", "axs/conv-top", 0),
    Clause("Axr", "axr/refl-left", 0),
    Clause("Axr", "axr/refl-right", 0),
)

_BY_NAME = {c.name: c for c in CLAUSES}


def _scalar_eval(a: AtomStructure, name: str, x: int, y: int, z: int) -> bool:
    """Evaluate one clause on a single mask assignment.  True = holds."""
    comp = a.compose_mask
    conv = a.converse_mask
    one = (1 << a.n) - 1
    idm = a.identity_mask
    if name == "ax1/or-comm":
        return x | y == y | x
    if name == "ax1/and-comm":
        return x & y == y & x
    if name == "ax1/or-assoc":
        return (x | y) | z == x | (y | z)
    if name == "ax1/and-assoc":
        return (x & y) & z == x & (y & z)
    if name == "ax1/and-over-or":
        return x & (y | z) == (x & y) | (x & z)
    if name == "ax1/or-over-and":
        return x | (y & z) == (x | y) & (x | z)
    if name == "ax1/or-ident":
        return x | 0 == x
    if name == "ax1/and-ident":
        return x & one == x
    if name == "ax1/compl-join":
        return x | (one ^ x) == one
    if name == "ax1/compl-meet":
        return x & (one ^ x) == 0
    if name == "ax2/conv-meet":
        return conv(x & conv(y)) == conv(x) & y
    if name == "ax3/add-left":
        return comp(x | y, z) == comp(x, z) | comp(y, z)
    if name == "ax3/add-right":
        return comp(x, y | z) == comp(x, y) | comp(x, z)
    if name == "ax4/zero-right":
        return comp(one, 0) == 0
    if name == "ax4/zero-left":
        return comp(0, one) == 0
    if name == "ax5/mod-left":
        u = conv(x)
        return comp(u, y) & z == comp(u, y & comp(conv(u), z)) & z
    if name == "ax5/mod-right":
        v = conv(y)
        return comp(x, v) & z == comp(x & comp(z, conv(v)), v) & z
    if name == "ax6/id-left":
        return comp(idm, x) & (one ^ x) == 0
    if name == "ax6/id-right":
        return comp(x, idm) & (one ^ x) == 0
    if name == "ax7/id-square":
        return comp(idm, idm) == idm
    if name == "ax8/conv-def":
        nc1 = one ^ conv(one)
        return comp(nc1, nc1) & idm == 0
    if name == "ax9/assoc-id-left":
        w = x & idm
        return comp(comp(w, y), z) == comp(w, comp(y, z))
    if name == "ax9/assoc-id-mid":
        w = y & idm
        return comp(comp(x, w), z) == comp(x, comp(w, z))
    if name == "ax9/assoc-id-right":
        w = z & idm
        return comp(comp(x, y), w) == comp(x, comp(y, w))
    if name == "axs/conv-top":
        return conv(one) == one
    if name == "axr/refl-left":
        return comp(idm, one) == one
    if name == "axr/refl-right":
        return comp(one, idm) == one
    raise ValueError(f"unknown clause {name!r}")


@dataclass
class ClauseResult:
    axiom: str
    clause: str
    passed: bool
    # first counterexample, as mask values of the free variables (x, y, z
    # in clause order); None when the clause passed
    witness: tuple[int, ...] | None = None

    def witness_names(self, a: AtomStructure) -> dict[str, list[str]] | None:
        if self.witness is None:
            return None
        vars_ = "xyz"
        return {
            vars_[i]: list(Element(m, a.n).atom_names(a))
            for i, m in enumerate(self.witness)
        }


@dataclass
class AxiomReport:
    """Per-axiom verdicts plus the evaluation parameters that produced them."""

    structure_digest: str
    mode: str
    samples: int | None
    seed: int | None
    budget: int
    backend: str | None
    clause_results: list[ClauseResult]
    warnings: list[str] = field(default_factory=list)

    def clause(self, name: str) -> ClauseResult:
        for r in self.clause_results:
            if r.clause == name:
                return r
        raise KeyError(name)

    def axiom_passed(self, axiom: str) -> bool:
        return all(r.passed for r in self.clause_results if r.axiom == axiom)

    def axiom_counterexample(self, axiom: str) -> ClauseResult | None:
        for r in self.clause_results:
            if r.axiom == axiom and not r.passed:
                return r
        return None

    @property
    def verdicts(self) -> dict[str, bool]:
        return {ax: self.axiom_passed(ax) for ax in AXIOM_ORDER}

    def failing_axioms(self) -> list[str]:
        return [ax for ax in AXIOM_ORDER if not self.axiom_passed(ax)]

    def counted_axioms(self, h_flags: frozenset[str]) -> tuple[str, ...]:
        counted = ["Ax1", "Ax2", "Ax3", "Ax4", "Ax5", "Ax6", "Ax7", "Ax8", "Ax9"]
        if "s" in h_flags:
            counted.append("Axs")
        if "r" in h_flags:
            counted.append("Axr")
        return tuple(counted)

    def ok_for(self, h_flags: frozenset[str]) -> bool:
        return all(self.axiom_passed(ax) for ax in self.counted_axioms(h_flags))

    # filled by check_axioms so the report is self-contained
    h_flags: frozenset[str] = frozenset()

    @property
    def ok(self) -> bool:
        """All of Ax 1 - Ax 9 pass, plus Ax s / Ax r where claimed."""
        return self.ok_for(self.h_flags)

    def to_json(self, a: AtomStructure | None = None) -> dict:
        axioms = {}
        for ax in AXIOM_ORDER:
            entry: dict = {"passed": self.axiom_passed(ax)}
            entry["counted"] = ax in self.counted_axioms(self.h_flags)
            cex = self.axiom_counterexample(ax)
            if cex is not None:
                entry["counterexample"] = {
                    "clause": cex.clause,
                    "assignment": cex.witness_names(a) if a else list(cex.witness),
                }
            axioms[ax] = entry
        return {
            "schema": "relgame.axiom-report/1",
            "structure": self.structure_digest,
            "mode": self.mode,
            "samples": self.samples,
            "seed": self.seed,
            "budget": self.budget,
            "backend": self.backend,
            "ok": self.ok,
            "axioms": axioms,
            "warnings": list(self.warnings),
        }


def _exhaustive(a: AtomStructure, backend) -> list[ClauseResult]:
    tables = _kernels.build_tables(a)
    scanned = backend.scan(tables)
    results = []
    for c in CLAUSES:
        if c.arity == 0:
            holds = _scalar_eval(a, c.name, 0, 0, 0)
            results.append(ClauseResult(c.axiom, c.name, holds, None if holds else ()))
            continue
        witness = scanned[c.name]
        if witness is None:
            results.append(ClauseResult(c.axiom, c.name, True))
        else:
            results.append(ClauseResult(c.axiom, c.name, False, tuple(int(w) for w in witness)))
    return results


def _sampled(a: AtomStructure, samples: int, seed: int) -> list[ClauseResult]:
    rng = random.Random(seed)
    n = a.n
    found: dict[str, tuple[int, ...]] = {}
    open_clauses = [c for c in CLAUSES if c.arity > 0]
    for _ in range(samples):
        x = rng.getrandbits(n) if n else 0
        y = rng.getrandbits(n) if n else 0
        z = rng.getrandbits(n) if n else 0
        for c in open_clauses:
            if c.name in found:
                continue
            args = (x, y, z)[: c.arity] + (0,) * (3 - c.arity)
            if not _scalar_eval(a, c.name, *args):
                found[c.name] = (x, y, z)[: c.arity]
    results = []
    for c in CLAUSES:
        if c.arity == 0:
            holds = _scalar_eval(a, c.name, 0, 0, 0)
            results.append(ClauseResult(c.axiom, c.name, holds, None if holds else ()))
        elif c.name in found:
            results.append(ClauseResult(c.axiom, c.name, False, found[c.name]))
        else:
            results.append(ClauseResult(c.axiom, c.name, True))
    return results


def check_axioms(
    a: AtomStructure,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> AxiomReport:
    """Decide the axioms over the complex algebra of ``a``.

    ``mode`` is ``exhaustive``, ``sampled`` or ``auto`` (exhaustive when
    the assignment space fits the budget, else sampled).  Explicit
    exhaustive mode raises :class:`BudgetExceededError` when the space
    does not fit, signalling the caller to re-run sampled.
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    cost = 2 ** (3 * a.n)
    warnings: list[str] = []
    if mode == "auto":
        if cost <= budget and a.n <= _kernels.tables.MAX_TABLE_ATOMS:
            mode = "exhaustive"
        else:
            mode = "sampled"
            warnings.append(
                f"exhaustive checking needs {cost} evaluations "
                f"(budget {budget}); fell back to sampled mode"
            )
    if mode == "exhaustive":
        if cost > budget:
            raise BudgetExceededError(
                f"exhaustive mode needs {cost} evaluations, budget is {budget}"
            )
        mod = _kernels.get_backend(backend)
        results = _exhaustive(a, mod)
        return AxiomReport(
            structure_digest=a.digest(),
            mode="exhaustive",
            samples=None,
            seed=None,
            budget=budget,
            backend=mod.name,
            clause_results=results,
            warnings=warnings,
            h_flags=a.h_flags,
        )
    results = _sampled(a, samples, seed)
    return AxiomReport(
        structure_digest=a.digest(),
        mode="sampled",
        samples=samples,
        seed=seed,
        budget=budget,
        backend=None,
        clause_results=results,
        warnings=warnings,
        h_flags=a.h_flags,
    )


def recheck_witness(a: AtomStructure, result: ClauseResult) -> bool:
    """True when a recorded counterexample still evaluates to a violation."""
    if result.witness is None:
        return False
    args = tuple(result.witness) + (0,) * (3 - len(result.witness))
    return not _scalar_eval(a, result.clause, *args)
