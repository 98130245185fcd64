"""Exact K_{s+1}-free optima against the constellation bound C(n,k) - C(n-s,k).

Runs branch and bound for each (n, k, s) in the grid, enumerating all optima
when asked, and prints one JSON line per instance. Instances below the
threshold (2s+1)k - s are included on purpose: there the optimum may exceed
the bound (for example n=6, k=2, s=2 gives 10 > 9).
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from kneser_extremal.bounds import frankl_bound
from kneser_extremal.pattern import complete
from kneser_extremal.search import is_constellation, max_pattern_free
from kneser_extremal.setcore import GroundParams


@dataclass
class Config:
    max_n: int = 8
    ks: tuple = (2,)
    ss: tuple = (1, 2)
    enumerate_all: bool = False


def run(cfg: Config):
    for k in cfg.ks:
        for s in cfg.ss:
            for n in range(2 * k, cfg.max_n + 1):
                rep = frankl_bound(n, k, s)
                t0 = time.perf_counter()
                cert = max_pattern_free(GroundParams(n, k), complete(s + 1), enumerate_all=cfg.enumerate_all)
                row = {
                    "n": n, "k": k, "s": s,
                    "optimum": cert.optimum, "bound": rep.bound,
                    "threshold": rep.threshold_ceil, "threshold_met": rep.threshold_met,
                    "nodes": cert.nodes_explored, "seconds": round(time.perf_counter() - t0, 3),
                }
                if cert.all_extrema is not None:
                    row["optima"] = cert.extrema_count
                    row["all_constellations"] = all(is_constellation(f, s) for f in cert.all_extrema)
                print(json.dumps(row), flush=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--k", type=int, nargs="+", default=list(Config.ks))
    ap.add_argument("--s", type=int, nargs="+", default=list(Config.ss))
    ap.add_argument("--enumerate-all", action="store_true")
    a = ap.parse_args()
    cfg = Config(a.max_n, tuple(a.k), tuple(a.s), a.enumerate_all)
    print(json.dumps({"config": asdict(cfg)}))
    run(cfg)


if __name__ == "__main__":
    main()
