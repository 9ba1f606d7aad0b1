"""Lower-bound witness generators: norm graphs over finite fields and a
random-graph deletion procedure, plus log-log scaling experiments."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bounds import ConditionError, cor14_kst, thm15_general
from .fields import field_make, is_prime
from .graphs import (Graph, Pattern, complete_multipartite, count_cliques,
                     gnp, is_free, iter_copies)

NORM_GRAPH_MAX_VERTICES = 50000
DELETION_MAX_N = 500
DELETION_MAX_R = 5


@dataclass(frozen=True)
class NormGraphParams:
    q: int
    s: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"q = {self.q} is not prime")
        if self.s < 2:
            raise ValueError("s must be >= 2")
        n = self.q ** (self.s - 1) * (self.q - 1)
        if n > NORM_GRAPH_MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds cap {NORM_GRAPH_MAX_VERTICES}")


def norm_graph(q: int, s: int) -> Graph:
    """Graph on GF(q^(s-1)) x GF(q)* with (A,a) ~ (B,b) iff N(A+B) = a*b.

    N is the field norm down to GF(q) (identity when s = 2).  Vertex (A, a)
    gets index A_idx*(q-1) + (a-1) where A_idx enumerates GF(q^(s-1)) in
    base-q counting order of coefficient vectors.
    """
    NormGraphParams(q, s)
    F = field_make(q, s - 1)
    ext = F.order
    n = ext * (q - 1)
    norm_of = [None] * ext
    for i in range(ext):
        a = F.from_index(i)
        if a != F.zero:
            norm_of[i] = F.norm_to_base(a)
    inv_mod_q = [0] + [pow(a, q - 2, q) for a in range(1, q)]
    edges = set()
    for ai in range(ext):
        A = F.from_index(ai)
        for bi in range(ext):
            s_idx = F.to_index(F.add(A, F.from_index(bi)))
            c = norm_of[s_idx]
            if c is None or c == 0:
                continue
            for a in range(1, q):
                b = c * inv_mod_q[a] % q
                i = ai * (q - 1) + (a - 1)
                j = bi * (q - 1) + (b - 1)
                if i < j:
                    edges.add((i, j))
                elif j < i:
                    edges.add((j, i))
    return Graph(n, sorted(edges))


# ---------------------------------------------------------------------------
# Deletion method
# ---------------------------------------------------------------------------

@dataclass
class DeletionRun:
    pattern_name: str
    u: int
    r: int
    n: int
    seed: int
    c: float
    p: float
    clamped: bool
    ku_before: int
    kr_before: int
    ku_after: int
    kr_after: int
    copies_found: int
    edges_deleted: int
    f_free: bool

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern_name, "u": self.u, "r": self.r,
            "n": self.n, "seed": self.seed, "c": self.c, "p": self.p,
            "clamped": self.clamped,
            "kuBefore": self.ku_before, "krBefore": self.kr_before,
            "kuAfter": self.ku_after, "krAfter": self.kr_after,
            "copiesFound": self.copies_found, "edgesDeleted": self.edges_deleted,
            "fFree": self.f_free,
        }


def deletion_method(f: Pattern, u: int, r: int, n: int, seed: int,
                    c: float = 1.0):
    """Sample G(n, p), then greedily delete the edge in the most surviving
    f-copies (lexicographic tie-break) until none remain.

    p = min(1, c * n^(-(v-2)/(e - r(r-1)/2))); the run refuses to start when
    the validity conditions on f fail.  Output is deterministic in
    (f, u, r, n, seed, c).
    """
    report = thm15_general(u, r, f)
    failed = report.failed_conditions()
    if failed:
        raise ConditionError(failed[0].text)
    if n > DELETION_MAX_N:
        raise ValueError(f"n exceeds cap {DELETION_MAX_N}")
    if r > DELETION_MAX_R:
        raise ValueError(f"r exceeds cap {DELETION_MAX_R}")

    exponent = Fraction(f.order - 2, f.size - r * (r - 1) // 2)
    p_raw = c * n ** (-float(exponent))
    p = min(1.0, p_raw)
    clamped = p_raw > 1.0
    g = gnp(n, p, seed)

    copies = iter_copies(f, g)
    edge_copy_ids: dict[tuple, set] = {}
    for cid, (_, es) in enumerate(copies):
        for e in es:
            edge_copy_ids.setdefault(e, set()).add(cid)
    live = {e: set(ids) for e, ids in edge_copy_ids.items()}
    deleted = []
    alive = set(range(len(copies)))
    while alive:
        target = max(live, key=lambda e: (len(live[e]), (-e[0], -e[1])))
        deleted.append(target)
        for cid in list(live[target]):
            alive.discard(cid)
            for e2 in copies[cid][1]:
                live[e2].discard(cid)
        del live[target]

    out = g.remove_edges(deleted)
    before = count_cliques(g, max(u, r))
    after = count_cliques(out, max(u, r))
    free = is_free(f, out)
    assert free, "deletion left a pattern copy intact"
    run = DeletionRun(f.name, u, r, n, seed, c, p, clamped,
                      before[u], before[r], after[u], after[r],
                      len(copies), len(deleted), free)
    return out, run


# ---------------------------------------------------------------------------
# Scaling experiments
# ---------------------------------------------------------------------------

TRIPARTITE_TRIANGLE_EXPONENT = Fraction(11, 9)


@dataclass
class ExperimentSpec:
    """A named instance family with target clique counts for a log-log fit."""

    family: str                      # norm_graph | tripartite | deletion
    u: int = 2
    r: int = 3
    q_list: list = field(default_factory=list)   # norm_graph
    s: int = 2                                   # norm_graph
    n_list: list = field(default_factory=list)   # tripartite / deletion
    pattern: str = ""                            # deletion
    seeds: list = field(default_factory=list)    # deletion
    c: float = 1.0                               # deletion

    @staticmethod
    def from_json(obj: dict) -> "ExperimentSpec":
        fam = obj.get("family")
        if fam not in ("norm_graph", "tripartite", "deletion"):
            raise ValueError(f"unknown experiment family {fam!r}")
        return ExperimentSpec(
            family=fam,
            u=int(obj.get("u", 2)),
            r=int(obj.get("r", 3)),
            q_list=[int(x) for x in obj.get("q", [])],
            s=int(obj.get("s", 2)),
            n_list=[int(x) for x in obj.get("n", [])],
            pattern=str(obj.get("pattern", "")),
            seeds=[int(x) for x in obj.get("seeds", [])],
            c=float(obj.get("c", 1.0)),
        )


@dataclass
class ExperimentRow:
    family: str
    param: str
    n: int
    m: int
    k2: int
    k3: int
    k4: int


@dataclass
class ExperimentResult:
    rows: list
    predicted_exponent: float
    fitted_slope: float

    def csv_rows(self):
        for row in self.rows:
            yield [row.family, row.param, row.n, row.m, row.k2, row.k3, row.k4,
                   repr(self.predicted_exponent), repr(self.fitted_slope)]


CSV_HEADER = ["family", "param", "n", "m", "k2", "k3", "k4",
              "predicted_exponent", "fitted_slope"]


def fit_loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(y) against log(x)."""
    if len(xs) < 3:
        raise ValueError("need at least 3 instances to fit a slope")
    if any(x <= 0 for x in xs) or any(y <= 0 for y in ys):
        raise ValueError("log-log fit needs positive counts")
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def _emit_row(spec, param: str, g: Graph) -> ExperimentRow:
    cv = count_cliques(g, 4)
    return ExperimentRow(spec.family, param, g.n, g.m, cv[2], cv[3], cv[4])


def tripartite_instance(n: int) -> Graph:
    """Complete tripartite graph with parts n, floor(sqrt(n)), floor(n^(1/3))."""
    b = math.isqrt(n)
    c = round(n ** (1 / 3))
    while c ** 3 > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return complete_multipartite([n, b, c])


def run_experiment(spec: ExperimentSpec) -> ExperimentResult:
    rows: list[ExperimentRow] = []
    if spec.family == "norm_graph":
        if len(spec.q_list) < 3:
            raise ValueError("need at least 3 instances to fit a slope")
        for q in spec.q_list:
            rows.append(_emit_row(spec, f"q={q}", norm_graph(q, spec.s)))
        predicted = cor14_kst(spec.r, spec.s).value
    elif spec.family == "tripartite":
        if len(spec.n_list) < 3:
            raise ValueError("need at least 3 instances to fit a slope")
        for n in spec.n_list:
            rows.append(_emit_row(spec, f"n={n}", tripartite_instance(n)))
        predicted = float(TRIPARTITE_TRIANGLE_EXPONENT)
    elif spec.family == "deletion":
        from .graphs import pattern as make_pattern
        f = make_pattern(spec.pattern)
        seeds = spec.seeds or [0]
        if len(spec.n_list) * len(seeds) < 3:
            raise ValueError("need at least 3 instances to fit a slope")
        for n in spec.n_list:
            for seed in seeds:
                g, _ = deletion_method(f, spec.u, spec.r, n, seed, spec.c)
                rows.append(_emit_row(spec, f"n={n};seed={seed}", g))
        predicted = thm15_general(spec.u, spec.r, f).value
    else:
        raise ValueError(f"unknown experiment family {spec.family!r}")

    counts = {2: [r.k2 for r in rows], 3: [r.k3 for r in rows],
              4: [r.k4 for r in rows]}
    slope = fit_loglog_slope(counts[spec.u], counts[spec.r])
    return ExperimentResult(rows, predicted, slope)
