"""Closedness verdicts for commutative semigroup descriptors.

Verdicts carry citations as stable tags so reports survive renumbering in
downstream docs: "Thm1.4" (the general commutative characterization),
"Thm1.7" (ideal/projective case), "Thm1.3" (groups), "Cor5.2"
(semilattices, subsuming "Thm1.2"), "Ex1.6" (the closed-semigroup /
non-closed-quotient precedent).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .descriptors import (Descriptor, Group, GroupSpec, OmegaChain,
                          PredicateProfile, Semilattice, SemilatticeSpec,
                          describe, evaluate)

CITE_MAIN = "Thm1.4"
CITE_PROJECTIVE = "Thm1.7"
CITE_GROUP = "Thm1.3"
CITE_SEMILATTICE = "Cor5.2"
CITE_PRECEDENT = "Ex1.6"

_THEOREM_TEXT = {
    CITE_MAIN: "Theorem 1.4",
    CITE_PROJECTIVE: "Theorem 1.7",
    CITE_GROUP: "Theorem 1.3",
    CITE_SEMILATTICE: "Corollary 5.2 (via Theorem 1.2)",
    CITE_PRECEDENT: "Example 1.6",
}

# profile attribute behind each condition name, plus the truth value that
# means "condition satisfied"
_CONDITIONS = {
    "periodic": ("periodic", True),
    "chain-finite": ("chain_finite", True),
    "subgroups-bounded": ("subgroups_bounded", True),
    "singleton-square": ("has_singleton_square", False),
    "almost-clifford": ("almost_clifford", True),
}

_C_ORDER = ("periodic", "chain-finite", "subgroups-bounded", "singleton-square")
_PROJECTIVE_ORDER = ("chain-finite", "almost-clifford", "subgroups-bounded")


@dataclass
class ClosednessVerdict:
    descriptor: Descriptor
    profile: PredicateProfile
    c_closed: bool
    ideally_closed: bool
    projectively_closed: bool
    failing_condition: Optional[tuple]  # (condition name, witness text)
    citation: str


def _condition_holds(profile, name):
    attr, good = _CONDITIONS[name]
    return getattr(profile, attr) is good


def _first_failing(profile, order):
    for name in order:
        if not _condition_holds(profile, name):
            attr, _ = _CONDITIONS[name]
            return (name, profile.witness[attr])
    return None


def _report_shape(d, profile, c_closed, ideally):
    if isinstance(d, Group):
        failing = None if c_closed else _first_failing(
            profile, ("subgroups-bounded",))
        return failing, CITE_GROUP
    if isinstance(d, Semilattice):
        failing = None if c_closed else _first_failing(profile, ("chain-finite",))
        return failing, CITE_SEMILATTICE
    if not c_closed:
        return _first_failing(profile, _C_ORDER), CITE_MAIN
    if not ideally:
        return _first_failing(profile, _PROJECTIVE_ORDER), CITE_PROJECTIVE
    return None, CITE_MAIN


def classify(d) -> ClosednessVerdict:
    """Full verdict from the general characterizations.

    C-closed iff periodic, chain-finite, subgroups bounded and no infinite
    subset with a singleton square; ideally = projectively closed iff
    chain-finite, almost Clifford and subgroups bounded.
    """
    if not isinstance(d, Descriptor):
        raise TypeError("classify expects a Descriptor")
    profile = evaluate(d)
    c_closed = (profile.periodic and profile.chain_finite
                and profile.subgroups_bounded
                and not profile.has_singleton_square)
    ideally = (profile.chain_finite and profile.almost_clifford
               and profile.subgroups_bounded)
    failing, citation = _report_shape(d, profile, c_closed, ideally)
    return ClosednessVerdict(d, profile, c_closed, ideally, ideally,
                             failing, citation)


def classify_group(spec: GroupSpec) -> ClosednessVerdict:
    """Group specialization: closed (in every sense) iff bounded.

    The boundedness test here reads the factors directly, independently of
    the profile formulas, so agreement with `classify` is a real check.
    """
    bounded = all(f.kind == "cyclic" for f in spec.factors)
    d = Group(spec)
    profile = evaluate(d)
    failing, citation = _report_shape(d, profile, bounded, bounded)
    return ClosednessVerdict(d, profile, bounded, bounded, bounded,
                             failing, citation)


def classify_semilattice(spec: SemilatticeSpec) -> ClosednessVerdict:
    """Semilattice specialization: all three verdicts equal chain-finiteness."""
    chain_finite = not isinstance(spec, OmegaChain)
    d = Semilattice(spec)
    profile = evaluate(d)
    failing, citation = _report_shape(d, profile, chain_finite, chain_finite)
    return ClosednessVerdict(d, profile, chain_finite, chain_finite,
                             chain_finite, failing, citation)


def _yesno(b):
    return "yes" if b else "no"


def explain(verdict: ClosednessVerdict) -> str:
    """Deterministic multi-line report for one verdict."""
    p = verdict.profile
    d = verdict.descriptor
    lines = ["input: %s" % describe(d)]
    if p.size is not None:
        lines.append("cardinality: finite (n=%d)" % p.size)
        lines.append("finite => all properties hold")
    else:
        lines.append("cardinality: countably infinite")
    lines.append("periodic: %s (%s)" % (_yesno(p.periodic), p.witness["periodic"]))
    lines.append("chain-finite: %s (%s)"
                 % (_yesno(p.chain_finite), p.witness["chain_finite"]))
    bounded = "%s (%s)" % (_yesno(p.subgroups_bounded),
                           p.witness["subgroups_bounded"])
    if p.subgroups_bounded and p.exponent is not None:
        bounded += " [exponent %d]" % p.exponent
    lines.append("subgroups bounded: %s" % bounded)
    lines.append("almost Clifford: %s (%s)"
                 % (_yesno(p.almost_clifford), p.witness["almost_clifford"]))
    lines.append("singleton square: %s (%s)"
                 % (_yesno(p.has_singleton_square),
                    p.witness["has_singleton_square"]))
    if isinstance(d, Group):
        c_cite = _THEOREM_TEXT[CITE_GROUP]
        q_cite = _THEOREM_TEXT[CITE_GROUP]
    elif isinstance(d, Semilattice):
        c_cite = _THEOREM_TEXT[CITE_SEMILATTICE]
        q_cite = _THEOREM_TEXT[CITE_SEMILATTICE]
    else:
        c_cite = _THEOREM_TEXT[CITE_MAIN]
        q_cite = _THEOREM_TEXT[CITE_PROJECTIVE]
    lines.append("C-closed: %s (%s)" % (_yesno(verdict.c_closed), c_cite))
    lines.append("ideally C-closed: %s (%s)"
                 % (_yesno(verdict.ideally_closed), q_cite))
    lines.append("projectively C-closed: %s (%s)"
                 % (_yesno(verdict.projectively_closed), q_cite))
    if verdict.failing_condition is not None:
        name, witness = verdict.failing_condition
        lines.append("failing condition: %s (%s)" % (name, witness))
    if verdict.c_closed and not verdict.ideally_closed:
        lines.append("note: matches the %s pattern: C-closed with a "
                     "quotient that is not C-closed"
                     % _THEOREM_TEXT[CITE_PRECEDENT])
    lines.append("citation: %s" % verdict.citation)
    return "\n".join(lines)


__all__ = [
    "CITE_GROUP", "CITE_MAIN", "CITE_PRECEDENT", "CITE_PROJECTIVE",
    "CITE_SEMILATTICE", "ClosednessVerdict", "classify", "classify_group",
    "classify_semilattice", "explain",
]
