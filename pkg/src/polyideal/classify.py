"""Primality verdicts for collections of cells, with checkable evidence.

Rules, applied in order:

1. the collection must be weakly connected, otherwise the verdict is Inconclusive;
2. simple collections are prime (their ideal is the toric ideal of the edge
   ring of a weakly chordal bipartite graph);
3. a weakly closed path is prime exactly when it has one of the four block
   configurations, and otherwise contains a zig-zag walk;
4. a zig-zag walk rules out primality;
5. anything left is only conjecturally prime.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import ToricReport, hole_toric_map, toric_equality_report
from .graph import build_graph, chordless_witness
from .grid import CellCollection, is_simple, is_weakly_connected
from .pathclass import (
    L_CONFIG,
    LADDER,
    WEAK_L,
    WEAK_LADDER,
    ConfigurationWitness,
    WeaklyClosedPathWitness,
    find_any_prime_configuration,
    marked_set_for_configuration,
    recognize_weakly_closed_path,
    verify_configuration,
    verify_weakly_closed_path,
)
from .zigzag import SearchInconclusive, ZigZagWalk, find_zigzag_walk, verify_zigzag_walk

PRIME = "Prime"
NOT_PRIME = "NotPrime"
CONJECTURALLY_PRIME = "ConjecturallyPrime"
INCONCLUSIVE = "Inconclusive"
STATUSES = (PRIME, NOT_PRIME, CONJECTURALLY_PRIME, INCONCLUSIVE)

RULE_NOT_WEAKLY_CONNECTED = "not-weakly-connected"
RULE_SIMPLE = "simple-collection"
RULE_L_CONFIG = "L-configuration"
RULE_WEAK_L = "weak-L-configuration"
RULE_LADDER = "ladder"
RULE_WEAK_LADDER = "weak-ladder"
CONFIG_RULES = {L_CONFIG: RULE_L_CONFIG, WEAK_L: RULE_WEAK_L, LADDER: RULE_LADDER, WEAK_LADDER: RULE_WEAK_LADDER}
RULE_WCP_NO_CONFIGURATION = "weakly-closed-path-no-configuration"
RULE_ZIGZAG = "zigzag-walk"
RULE_CONJECTURE = "no-zigzag-conjecture"
RULE_BUDGET = "search-budget"
RULE_ORACLE_FAILED = "oracle-disagreement"

CITATIONS = {
    RULE_NOT_WEAKLY_CONNECTED: "rules apply to weakly connected collections only",
    RULE_SIMPLE: "simple weakly connected collection: I_P is the toric ideal of the edge ring of G(P), hence prime",
    RULE_L_CONFIG: "weakly closed path with an L-configuration: I_P equals a hole-marked toric ideal, hence prime",
    RULE_WEAK_L: "weakly closed path with a weak L-configuration: I_P equals a hole-marked toric ideal, hence prime",
    RULE_LADDER: "weakly closed path with a ladder of at least three steps: I_P equals a hole-marked toric ideal, hence prime",
    RULE_WEAK_LADDER: "weakly closed path with a weak ladder: I_P equals a hole-marked toric ideal, hence prime",
    RULE_WCP_NO_CONFIGURATION: "weakly closed path without any of the four configurations contains a zig-zag walk, so I_P is not prime",
    RULE_ZIGZAG: "a zig-zag walk obstructs primality",
    RULE_CONJECTURE: "no zig-zag walk found; primality conjectured, not proved",
    RULE_BUDGET: "zig-zag search exhausted its node budget",
    RULE_ORACLE_FAILED: "configuration found but the degree-bounded toric check failed",
}

DEFAULT_ORACLE_DEGREE = 4


@dataclass
class Verdict:
    status: str
    rule: str
    evidence: object = None
    oracle: ToricReport | None = None
    reason: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def citation(self) -> str:
        return CITATIONS[self.rule]

    def to_dict(self) -> dict:
        ev = self.evidence
        if isinstance(ev, (ZigZagWalk, ConfigurationWitness, WeaklyClosedPathWitness)):
            ev_out = {"type": type(ev).__name__, **ev.to_dict()}
        elif isinstance(ev, dict) or ev is None:
            ev_out = ev
        else:
            ev_out = str(ev)
        out = {
            "status": self.status,
            "rule": self.rule,
            "citation": self.citation,
            "evidence": ev_out,
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle.to_dict()
        if self.reason:
            out["reason"] = self.reason
        for k, v in self.extras.items():
            out[k] = v.to_dict() if hasattr(v, "to_dict") else v
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)


def chordality_certificate(P: CellCollection) -> dict:
    G = build_graph(P)
    witness = chordless_witness(G)
    return {
        "type": "WeakChordality",
        "v_nodes": G.nv,
        "h_nodes": len(G.h_nodes),
        "edges": len(G.edges),
        "weakly_chordal": witness is None,
    }


def classify(P: CellCollection, budget: int | None = None, oracle_degree: int = DEFAULT_ORACLE_DEGREE) -> Verdict:
    """Deterministic verdict for ``P`` following the rule order above."""
    if not is_weakly_connected(P):
        return Verdict(INCONCLUSIVE, RULE_NOT_WEAKLY_CONNECTED,
                       reason="collection is not weakly connected")
    if is_simple(P):
        return Verdict(PRIME, RULE_SIMPLE, evidence=chordality_certificate(P))

    wcp = recognize_weakly_closed_path(P) if P.is_polyomino() else None
    if wcp is not None:
        config = find_any_prime_configuration(P)
        if config is not None:
            marked = marked_set_for_configuration(P, config)
            report = toric_equality_report(P, hole_toric_map(P, marked), oracle_degree)
            extras = {"path": wcp}
            if report.passed:
                return Verdict(PRIME, CONFIG_RULES[config.kind], evidence=config, oracle=report, extras=extras)
            return Verdict(INCONCLUSIVE, RULE_ORACLE_FAILED, evidence=config, oracle=report,
                           reason="toric check failed for the configuration recipe", extras=extras)
        walk = find_zigzag_walk(P, budget=budget)
        if isinstance(walk, ZigZagWalk):
            return Verdict(NOT_PRIME, RULE_WCP_NO_CONFIGURATION, evidence=walk, extras={"path": wcp})
        if isinstance(walk, SearchInconclusive):
            return Verdict(INCONCLUSIVE, RULE_BUDGET, reason=f"budget {walk.budget} exhausted")
        return Verdict(INCONCLUSIVE, RULE_WCP_NO_CONFIGURATION,
                       reason="no configuration and no zig-zag walk found", extras={"path": wcp})

    walk = find_zigzag_walk(P, budget=budget)
    if isinstance(walk, SearchInconclusive):
        return Verdict(INCONCLUSIVE, RULE_BUDGET, reason=f"budget {walk.budget} exhausted")
    if walk is not None:
        return Verdict(NOT_PRIME, RULE_ZIGZAG, evidence=walk)
    return Verdict(CONJECTURALLY_PRIME, RULE_CONJECTURE)


def consistency_audit(P: CellCollection, verdict: Verdict | None = None, budget: int | None = None) -> list[str]:
    """Cross-check the rules against each other on ``P``; an empty list means consistent.

    When ``verdict`` is given its evidence is replayed as well.
    """
    problems: list[str] = []
    weakly_connected = is_weakly_connected(P)
    simple = is_simple(P)
    walk = None

    def search():
        nonlocal walk
        if walk is None:
            walk = find_zigzag_walk(P, budget=budget)
        return walk

    if weakly_connected and simple:
        if chordless_witness(build_graph(P)) is not None:
            problems.append("simple collection with a graph that is not weakly chordal")
        w = search()
        if isinstance(w, ZigZagWalk):
            problems.append("simple collection with a zig-zag walk")

    if weakly_connected and P.is_polyomino():
        wcp = recognize_weakly_closed_path(P)
        if wcp is not None:
            if not verify_weakly_closed_path(P, wcp):
                problems.append("weakly closed path witness fails re-verification")
            if len(P.holes) != 1:
                problems.append(f"weakly closed path with {len(P.holes)} holes")
            config = find_any_prime_configuration(P)
            w = search()
            if config is not None:
                if not verify_configuration(P, config):
                    problems.append("configuration witness fails re-verification")
                if isinstance(w, ZigZagWalk):
                    problems.append("weakly closed path with a configuration and a zig-zag walk")
            elif w is None:
                problems.append("weakly closed path with no configuration and no zig-zag walk")

    if verdict is not None:
        problems.extend(_replay(P, verdict))
    return problems


def _replay(P: CellCollection, v: Verdict) -> list[str]:
    out = []
    ev = v.evidence
    if v.status == NOT_PRIME:
        if not isinstance(ev, ZigZagWalk) or not verify_zigzag_walk(P, ev):
            out.append("NotPrime verdict without a verified zig-zag walk")
    if v.status == PRIME:
        if v.rule == RULE_SIMPLE:
            if not (is_simple(P) and is_weakly_connected(P)):
                out.append("simple-collection rule applied to a non-simple collection")
        elif isinstance(ev, ConfigurationWitness):
            if not verify_configuration(P, ev):
                out.append("Prime verdict with a configuration that fails re-verification")
            if v.oracle is None or not v.oracle.passed:
                out.append("Prime verdict without a passing oracle report")
        else:
            out.append("Prime verdict without admissible evidence")
    return out
