"""Closed-form constants, exponents, and validity checks for clique-count bounds.

Every exponent with integral (or rational) inputs carries an exact Fraction
twin next to its float value, so tightness and identity checks never hinge
on float noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .graphs import Pattern, bits, chromatic_number

LEMMA_CONSTANT_MAX_R = 20


class ConditionError(ValueError):
    """A validity condition of a formula or procedure failed."""

    def __init__(self, condition: str, message: str | None = None):
        super().__init__(message or f"condition failed: {condition}")
        self.condition = condition


COND_EDGE_COUNT = "e > (r-1)/2*v + r(r-1)/2 - (r-1)"
COND_MADC = "madc < (2e-r(r-1))/(v-2)"


def _binom2(x: int) -> int:
    return x * (x - 1) // 2


@dataclass
class Condition:
    text: str
    passed: bool | None  # None: recorded hypothesis, not checkable here

    def to_json(self) -> dict:
        return {"text": self.text, "passed": self.passed}


@dataclass
class ExponentReport:
    formula_id: str
    params: dict
    value: float | bool | None
    value_rational: Fraction | None = None
    conditions: list = field(default_factory=list)
    tight: bool = False
    aux: dict = field(default_factory=dict)

    def failed_conditions(self) -> list:
        return [c for c in self.conditions if c.passed is False]

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return str(x)
            return x

        return {
            "formulaId": self.formula_id,
            "params": {k: enc(v) for k, v in self.params.items()},
            "value": self.value,
            "valueRational": str(self.value_rational) if self.value_rational is not None else None,
            "conditions": [c.to_json() for c in self.conditions],
            "tight": self.tight,
            "aux": {k: enc(v) for k, v in self.aux.items()},
        }


# ---------------------------------------------------------------------------
# Clique-count constants C(u, r)
# ---------------------------------------------------------------------------

def _check_ur(u: int, r: int) -> None:
    if not 1 <= u < r <= LEMMA_CONSTANT_MAX_R:
        raise ValueError(f"need 1 <= u < r <= {LEMMA_CONSTANT_MAX_R}, got ({u},{r})")


def lemma_constant(u: int, r: int) -> float:
    """C(u, r) = (u!)^(r/u) / r!: for every graph, k_r < C(u,r) * k_u^(r/u)."""
    _check_ur(u, r)
    return math.factorial(u) ** (r / u) / math.factorial(r)


@lru_cache(maxsize=None)
def lemma_constant_recursive(u: int, r: int) -> float:
    """Same constant via the base-and-step recursion instead of the closed form."""
    _check_ur(u, r)
    if (u, r) == (1, 2):
        return 0.5
    if r == u + 1:
        return u / (u + 1) * lemma_constant_recursive(u - 1, u) ** ((u - 1) / u)
    return lemma_constant_recursive(r - 1, r) * lemma_constant_recursive(u, r - 1) ** (r / (r - 1))


def clique_vector_obeys_bound(counts) -> bool:
    """Strict inequality k_r < C(u,r) k_u^(r/u) for every u < r with k_u > 0.

    counts[i] must hold k_i for 1 <= i <= len(counts)-1.
    """
    R = len(counts) - 1
    for u in range(1, R):
        if counts[u] <= 0:
            continue
        for r in range(u + 1, R + 1):
            if not counts[r] < lemma_constant(u, r) * counts[u] ** (r / u):
                return False
    return True


# ---------------------------------------------------------------------------
# Exponent formulas
# ---------------------------------------------------------------------------

def cor12_exponent(r: int, s):
    """(r-1)s / (r+s-2); exact when s is a Fraction or int."""
    if r < 3:
        raise ValueError("r must be >= 3")
    if not 1 < s <= r:
        raise ValueError("s must lie in (1, r]")
    return (r - 1) * s / (r + s - 2)


def thm13_f(alpha, beta):
    """1 + (beta-1)(1 - 1/alpha)."""
    if alpha <= 1:
        raise ValueError("alpha must be > 1")
    if beta < 1:
        raise ValueError("beta must be >= 1")
    return 1 + (beta - 1) * (1 - 1 / alpha)


def cor14_kst(r: int, s: int) -> ExponentReport:
    """Exponent (rs - r(r-1)/2) / (2s-1) for complete-bipartite forbidden graphs."""
    if r < 3:
        raise ValueError("r must be >= 3")
    if s < 2:
        raise ValueError("s must be >= 2")
    frac = Fraction(r * s - _binom2(r), 2 * s - 1)
    s_min = 2 if r == 3 else r
    tight = (r >= 4 and s >= 2 * r - 2) or (r == 3 and s >= 2)
    t_min = math.factorial(s - 1) + 1
    conditions = [
        Condition(f"upper bound requires s >= {s_min} (and t >= s)", s >= s_min),
        Condition(f"tightness requires t >= (s-1)!+1 = {t_min}", None),
    ]
    return ExponentReport("cor14_kst", {"r": r, "s": s}, float(frac), frac,
                          conditions, tight)


def thm15_general(u: int, r: int, f: Pattern) -> ExponentReport:
    """Lower-bound exponent of k_r in terms of k_u for graphs avoiding f.

    Failed conditions are reported, not raised; the exponent is still computed.
    """
    if not 2 <= u < r:
        raise ValueError("need r > u >= 2")
    v, e = f.order, f.size
    if v <= 2:
        raise ValueError("pattern must have more than 2 vertices")
    br, bu = _binom2(r), _binom2(u)
    num = r * e - br * v - r * br + 2 * br
    den = u * e - bu * v - u * br + 2 * bu
    frac = Fraction(num, den) if den != 0 else None
    c1 = 2 * e > (r - 1) * v + 2 * br - 2 * (r - 1)
    if e == 0:
        c2 = False
    else:
        c2 = f.max_avg_degree < Fraction(2 * e - r * (r - 1), v - 2)
    conditions = [Condition(COND_EDGE_COUNT, c1), Condition(COND_MADC, c2)]
    return ExponentReport("thm15_general",
                          {"u": u, "r": r, "pattern": f.name, "v": v, "e": e},
                          float(frac) if frac is not None else None,
                          frac, conditions, tight=False)


def thm41_kst_lower(u: int, r: int, s: int, t: int) -> ExponentReport:
    """thm15_general specialized to a complete bipartite forbidden graph."""
    if not 2 <= u < r:
        raise ValueError("need r > u >= 2")
    if not 1 <= s <= t:
        raise ValueError("need t >= s >= 1")
    num = 2 * r * s * t - r * (r - 1) * (s + t) - r * (r - 1) * (r - 2)
    den = 2 * u * s * t - u * (u - 1) * (s + t) - u * r * (r - 1) + 2 * u * (u - 1)
    frac = Fraction(num, den) if den != 0 else None
    s_min = max(_binom2(r), 2 * r - 2)
    conditions = [Condition(f"s >= max(r(r-1)/2, 2r-2) = {s_min}", s >= s_min)]
    return ExponentReport("thm41_kst_lower", {"u": u, "r": r, "s": s, "t": t},
                          float(frac) if frac is not None else None,
                          frac, conditions, tight=False)


def _validate_parts(r: int, sizes) -> list[int]:
    sizes = list(sizes)
    if r < 3:
        raise ValueError("r must be >= 3")
    if len(sizes) != r:
        raise ValueError(f"need exactly r = {r} part sizes")
    if any(x < 1 for x in sizes):
        raise ValueError("part sizes must be positive")
    if sizes != sorted(sizes):
        raise ValueError("part sizes must be non-decreasing")
    return sizes


def thm43_multipartite(r: int, sizes) -> ExponentReport:
    """o() exponent for complete multipartite forbidden graphs.

    With smallest part 1 the aux field also carries the sharper one-apex
    exponent (see remark42_one_part).
    """
    sizes = _validate_parts(r, sizes)
    prod = math.prod(sizes[: r - 1])
    s_eff = r - Fraction(1, prod)
    frac = (r - 1) * s_eff / (r + s_eff - 2)
    aux = {"s_effective": s_eff}
    if sizes[0] == 1:
        aux["improved"] = _one_part_exponent(r, sizes)
    report = ExponentReport("thm43_multipartite", {"r": r, "sizes": sizes},
                            float(frac), frac, [], tight=False, aux=aux)
    return report


def _one_part_exponent(r: int, sizes) -> Fraction:
    prod = math.prod(sizes[1: r - 1]) if r > 2 else 1
    return (r - Fraction(1, prod)) / 2


def remark42_one_part(r: int, sizes) -> ExponentReport:
    """Sharper exponent when the smallest part of the forbidden multipartite
    graph is a single vertex."""
    sizes = _validate_parts(r, sizes)
    cond = sizes[0] == 1
    conditions = [Condition("smallest part size is 1", cond)]
    frac = _one_part_exponent(r, sizes) if cond else None
    return ExponentReport("remark42_one_part", {"r": r, "sizes": sizes},
                          float(frac) if frac is not None else None,
                          frac, conditions, tight=False)


def cor44_tripartite_lower(s1: int, s2: int, s3: int) -> ExponentReport:
    """Triangle-count exponents for a complete tripartite forbidden graph:
    value is the lower-bound exponent (when valid), aux['upper'] the o() one."""
    if not 1 <= s1 <= s2 <= s3:
        raise ValueError("need 1 <= s1 <= s2 <= s3")
    upper = Fraction(3, 2) - Fraction(1, 8 * s1 * s2 - 2)
    sig = s1 + s2 + s3
    prd = s1 * s2 + s2 * s3 + s3 * s1
    applicable = Fraction(prd, sig) > Fraction(3, 2)
    conditions = [Condition("(s1*s2+s2*s3+s3*s1)/(s1+s2+s3) > 3/2", applicable)]
    lower = None
    if applicable:
        lower = Fraction(3, 2) - Fraction(3 * sig - 6, 4 * prd - 2 * sig - 8)
    return ExponentReport("cor44_tripartite_lower", {"s1": s1, "s2": s2, "s3": s3},
                          float(lower) if lower is not None else None,
                          lower, conditions, tight=False,
                          aux={"upper": upper})


def thm46_join_cycle(r: int, s: int, l: int) -> ExponentReport:
    """Exponent when the forbidden graph is a clique joined to a cycle."""
    if r < 3:
        raise ValueError("r must be >= 3")
    if s < 1:
        raise ValueError("s must be >= 1")
    if l < 4:
        raise ValueError("l must be >= 4")
    t = l // 2
    upper_case = (l % 2 == 0 and r >= s + 2) or (l % 2 == 1 and r >= s + 3)
    conditions = [Condition("l even and r >= s+2, or l odd and r >= s+3", upper_case)]
    if upper_case:
        frac = Fraction(s + 1, 2) + Fraction(1, 2 * t)
        tight = False
    else:
        frac = Fraction(r, 2)
        tight = True
    return ExponentReport("thm46_join_cycle", {"r": r, "s": s, "l": l},
                          float(frac), frac, conditions, tight)


def cor17_classifier(f: Pattern, t: int) -> bool:
    """True iff the t-clique count of f-free graphs can grow at the clique
    exponent t/2, which happens exactly when chi(f) > t."""
    if t < 2:
        raise ValueError("t must be >= 2")
    return chromatic_number(f.graph) > t


def phi_exponent(f: Pattern, rho):
    """min over subgraphs F0 of f with e(F0) > 0 of v(F0) - rho * e(F0).

    Exact when rho is rational; the subgraph-count functional of a random
    graph with p = n^-rho diverges iff this is non-negative.
    """
    if f.size == 0:
        raise ValueError("pattern has no edges")
    if rho < 0:
        raise ValueError("rho must be >= 0")
    g = f.graph
    best = None
    for mask in range(1, 1 << g.n):
        twice_e = sum((g.adj[v] & mask).bit_count() for v in bits(mask))
        if twice_e:
            val = mask.bit_count() - rho * (twice_e // 2)
            if best is None or val < best:
                best = val
    return best


FORMULAS = {
    "lemma21_constant": lemma_constant,
    "cor12": cor12_exponent,
    "thm13_f": thm13_f,
    "cor14_kst": cor14_kst,
    "thm15_general": thm15_general,
    "thm41_kst_lower": thm41_kst_lower,
    "thm43_multipartite": thm43_multipartite,
    "remark42_one_part": remark42_one_part,
    "cor44_tripartite_lower": cor44_tripartite_lower,
    "thm46_join_cycle": thm46_join_cycle,
    "cor17_classifier": cor17_classifier,
}
