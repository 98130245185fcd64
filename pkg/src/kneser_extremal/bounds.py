"""Closed-form bounds and thresholds.

Bounds are exact integers. Thresholds with real exponents are evaluated in
double precision and compared through their ceiling; they are sufficient
conditions, so rounding up never overstates what a theorem asserts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .pattern import PatternGraph, eta
from .setcore import binom


@dataclass(frozen=True)
class BoundReport:
    theorem: str
    params: dict
    bound: int
    threshold: Optional[float] = None
    threshold_met: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def threshold_ceil(self) -> Optional[int]:
        return None if self.threshold is None else math.ceil(self.threshold)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "bound": str(self.bound),
            "threshold": self.threshold_ceil,
            "threshold_raw": self.threshold,
            "threshold_met": self.threshold_met,
            "notes": list(self.notes),
        }


def _report(theorem, params, bound, threshold=None, notes=()):
    met = threshold is not None and params["n"] >= math.ceil(threshold)
    return BoundReport(theorem, params, bound, threshold, met, tuple(notes))


def ekr_bound(n: int, k: int) -> int:
    if n < 2 * k:
        raise ValueError(f"EKR bound is only asserted for n >= 2k (n={n}, k={k})")
    return binom(n - 1, k - 1)


def hm_m(n: int, k: int) -> int:
    """M = C(n-1,k-1) - C(n-k-1,k-1), defined for n > 2k."""
    if n <= 2 * k:
        raise ValueError(f"M is defined for n > 2k (n={n}, k={k})")
    return binom(n - 1, k - 1) - binom(n - k - 1, k - 1)


def hm_bound(n: int, k: int) -> int:
    return hm_m(n, k) + 1


def ekr_report(n: int, k: int) -> BoundReport:
    return _report("ekr", {"n": n, "k": k}, binom(n - 1, k - 1), 2 * k)


def hm_report(n: int, k: int) -> BoundReport:
    bound = binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1
    return _report("hm", {"n": n, "k": k}, bound, 2 * k + 1)


def m_report(n: int, k: int) -> BoundReport:
    bound = binom(n - 1, k - 1) - binom(n - k - 1, k - 1)
    notes = [f"k*C(n-2,k-2) = {k * binom(n - 2, k - 2)}"]
    return _report("M", {"n": n, "k": k}, bound, 2 * k + 1, notes)


def frankl_bound(n: int, k: int, s: int) -> BoundReport:
    if s < 1:
        raise ValueError("s must be positive")
    bound = binom(n, k) - binom(n - s, k)
    return _report("frankl", {"n": n, "k": k, "s": s}, bound, (2 * s + 1) * k - s)


def thm1_bound(n: int, k: int, g: PatternGraph) -> BoundReport:
    """C(n,k) - C(n-q+1,k) + eta - 1; the threshold N(G,k) is not explicit."""
    stats = eta(g)
    q = stats.q
    bound = binom(n, k) - binom(n - q + 1, k) + stats.eta - 1
    return _report(
        "thm1",
        {"n": n, "k": k, "pattern": str(g), "q": q, "eta": stats.eta},
        bound,
        None,
        ["threshold N(G,k) not explicit; bound asserted only for n large enough"],
    )


def thm2_threshold(k: int, s: int, t: int) -> float:
    a = 2 * (s * k * (k - 1) + t - 1)
    b = 2 ** (2 * s * (1 + 3 / (2 * k - 2))) * (t - 1) ** (1 / (k - 1)) * (k - 1)
    return 1 + max(a, b)


def thm2_bound_and_threshold(n: int, k: int, s: int, t: int) -> BoundReport:
    if k < 2 or not 1 <= s <= t:
        raise ValueError(f"need k >= 2 and 1 <= s <= t (k={k}, s={s}, t={t})")
    bound = binom(n - 1, k - 1) + s - 1
    return _report("thm2", {"n": n, "k": k, "s": s, "t": t}, bound, thm2_threshold(k, s, t))


def thm3_threshold(k: int, t: int) -> float:
    c = binom(2 * k - 1, k - 1)
    return 1.5 * k * (1 + (t - 1 + t / c) ** (1 / (k - 1)))


def thm3_containment_size(n: int, k: int, t: int) -> int:
    """Size from which every (1,t)-union intersecting family lies in a star."""
    return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + (t - 1) * binom(2 * k - 1, k - 1) + t


def thm3_bound_and_threshold(n: int, k: int, t: int) -> BoundReport:
    if k < 2 or t < 2:
        raise ValueError(f"need k >= 2 and t >= 2 (k={k}, t={t})")
    star = binom(n - 1, k - 1)
    return _report(
        "thm3",
        {"n": n, "k": k, "t": t},
        thm3_containment_size(n, k, t),
        thm3_threshold(k, t),
        [f"at or above the threshold the maximum is the star size {star}"],
    )


def kst_edge_bound(nv: int, s: int, t: int) -> float:
    """Edge bound for an nv-vertex K_{s,t}-free graph (explicit Kovari-Sos-Turan form)."""
    if not 1 <= s <= t or nv < 1:
        raise ValueError(f"need 1 <= s <= t and nv >= 1 (nv={nv}, s={s}, t={t})")
    return (0.5 + (s - 1) / nv ** (1 - 1 / s)) * (t - 1) ** (1 / s) * nv ** (2 - 1 / s)


def lemma1_lower(ell: int, k: int) -> int:
    """ceil(ell^2 / C(2k,k)): lower bound on edges of KG[A]."""
    r = binom(2 * k, k)
    return -(-ell * ell // r)


THEOREMS = ("ekr", "hm", "M", "frankl", "thm1", "thm2", "thm3", "kst", "lemma1")
