"""One-pass edge filtering that keeps only edges lying in many r-cliques.

Edges whose r-clique participation is at most the threshold
tau = (1/2) C m^((alpha r - 2)/2) are discarded; the surviving edge set
induces the output graph.  When the input satisfies the density hypothesis
k_r >= C m^(alpha r / 2), the report verifies a family of guaranteed
inequalities on the output whose constants follow from the filtering
argument itself, so a failed flag always means an implementation bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bounds import lemma_constant
from .graphs import CliqueVector, Graph, count_cliques, edge_clique_participation

REL_SLACK = 1e-9  # absorbs float rounding of m**alpha in the flag checks


@dataclass(frozen=True)
class ExtractionParams:
    r: int
    alpha: float
    C: float

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("r must be >= 3")
        if not 2.0 / self.r < self.alpha <= 1.0:
            raise ValueError("alpha must lie in (2/r, 1]")
        if self.C <= 0:
            raise ValueError("C must be positive")


@dataclass
class GuaranteeCheck:
    applicable: bool
    passed: bool | None = None
    lhs: float | None = None
    rhs: float | None = None
    constant: float | None = None
    cases: list | None = None

    def to_json(self) -> dict:
        out = {"applicable": self.applicable, "passed": self.passed,
               "lhs": self.lhs, "rhs": self.rhs, "constant": self.constant}
        if self.cases is not None:
            out["cases"] = [c.to_json() if isinstance(c, GuaranteeCheck) else c
                            for c in self.cases]
        return out


@dataclass
class ExtractionReport:
    threshold: float
    e1_count: int
    e2_count: int
    n0: int
    cliques: CliqueVector
    hypothesis_met: bool
    guarantees: dict = field(default_factory=dict)

    def all_guarantees_pass(self) -> bool:
        return all(g.passed for g in self.guarantees.values() if g.applicable)

    def to_json(self) -> dict:
        return {
            "threshold": self.threshold,
            "e1Count": self.e1_count,
            "e2Count": self.e2_count,
            "n0": self.n0,
            "cliques": self.cliques.to_json(),
            "hypothesisMet": self.hypothesis_met,
            "guarantees": {k: v.to_json() for k, v in self.guarantees.items()},
        }


def _ge(lhs: float, rhs: float) -> bool:
    return lhs >= rhs * (1 - REL_SLACK)


def _le(lhs: float, rhs: float) -> bool:
    return lhs <= rhs * (1 + REL_SLACK)


def extract_dense(g: Graph, params: ExtractionParams):
    """Filter low-participation edges once and verify the output guarantees.

    Returns (subgraph, report).  The subgraph is induced by the surviving
    edge set and relabeled over its non-isolated vertices in sorted order.
    """
    m = g.m
    if m == 0:
        raise ValueError("input graph has no edges")
    r, alpha, C = params.r, params.alpha, params.C

    participation = edge_clique_participation(g, r)
    tau = 0.5 * C * m ** ((alpha * r - 2) / 2)
    kept = [e for e in g.edges() if participation[e] > tau]
    e2_count = len(kept)
    e1_count = m - e2_count

    verts = sorted({u for e in kept for u in e})
    relabel = {v: i for i, v in enumerate(verts)}
    out = Graph(len(verts), [(relabel[u], relabel[v]) for u, v in kept])
    n0 = out.n

    kr_input = count_cliques(g, r)[r]
    hypothesis_met = kr_input >= C * m ** (alpha * r / 2)
    cliques = count_cliques(out, r)

    c2r = lemma_constant(2, r)
    edge_const = (C / (2 * c2r)) ** (2 / r)
    c0 = 2.0 * (math.factorial(r - 2) * C / 2.0) ** (-1.0 / (r - 2))
    # exponent of n0 in the r-clique guarantee; the matching constant comes
    # from eliminating m between the two proved inequalities
    n0_exp = r * (r - 2) * alpha / ((2 - alpha) * r - 2)
    cr = (C / 2.0) * c0 ** (-n0_exp)

    guarantees: dict[str, GuaranteeCheck] = {}
    if not hypothesis_met:
        for key in ("a", "b", "c", "d", "e"):
            guarantees[key] = GuaranteeCheck(applicable=False)
    else:
        rhs_a = edge_const * m ** alpha
        guarantees["a"] = GuaranteeCheck(True, _ge(e2_count, rhs_a),
                                         float(e2_count), rhs_a, edge_const)
        rhs_b = (C / 2) * m ** (alpha * r / 2)
        guarantees["b"] = GuaranteeCheck(True, _ge(cliques[r], rhs_b),
                                         float(cliques[r]), rhs_b, C / 2)
        rhs_c = c0 * m ** (((2 - alpha) * r - 2) / (2 * (r - 2)))
        guarantees["c"] = GuaranteeCheck(True, _le(n0, rhs_c),
                                         float(n0), rhs_c, c0)
        cases = []
        all_pass = True
        for i in range(2, r + 1):
            ci = cr if i == r else (cr / lemma_constant(i, r)) ** (i / r)
            rhs_i = ci * n0 ** (i * (r - 2) * alpha / ((2 - alpha) * r - 2))
            ok = _ge(cliques[i], rhs_i)
            all_pass = all_pass and ok
            cases.append(GuaranteeCheck(True, ok, float(cliques[i]), rhs_i, ci))
        guarantees["d"] = GuaranteeCheck(True, all_pass, cases=cases)
        if alpha == 1.0:
            dense_const = edge_const / (c0 * c0)
            rhs_e = dense_const * n0 * n0
            guarantees["e"] = GuaranteeCheck(True, _ge(cliques[2], rhs_e),
                                             float(cliques[2]), rhs_e, dense_const)
        else:
            guarantees["e"] = GuaranteeCheck(applicable=False)

    report = ExtractionReport(tau, e1_count, e2_count, n0, cliques,
                              hypothesis_met, guarantees)
    return out, report
