"""Random-family sweep of the edge lower bound |E| >= ceil(ell^2 / C(2k,k)) and the peeling certificates.

Reports, per (n, k), the number of families, violations of either check, and
the tightest observed ratio |E| * C(2k,k) / ell^2.
"""

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass, field

from kneser_extremal.families import ell
from kneser_extremal.kneser import Family, induce
from kneser_extremal.peel import peel_decompose, verify_transcript
from kneser_extremal.setcore import GroundParams, binom


@dataclass
class Config:
    params: list = field(default_factory=lambda: [(7, 2), (8, 2), (9, 3)])
    families: int = 1000
    seed: int = 0
    peel: bool = True


def sample(rng, params):
    full = Family.full(params).members
    return Family(params, tuple(sorted(rng.sample(full, rng.randint(1, len(full))))))


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    for n, k in cfg.params:
        p = GroundParams(n, k)
        r = binom(2 * k, k)
        edge_viol = peel_viol = 0
        tightest = None
        t0 = time.perf_counter()
        for _ in range(cfg.families):
            f = sample(rng, p)
            e = induce(f).edge_count
            l_ = ell(f).ell
            if e * r < l_ * l_:
                edge_viol += 1
            if l_:
                ratio = e * r / (l_ * l_)
                tightest = ratio if tightest is None else min(tightest, ratio)
            if cfg.peel and not verify_transcript(peel_decompose(f), f)[0]:
                peel_viol += 1
        print(json.dumps({
            "n": n, "k": k, "families": cfg.families,
            "edge_violations": edge_viol, "peel_violations": peel_viol,
            "tightest_ratio": tightest, "seconds": round(time.perf_counter() - t0, 2),
        }), flush=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nk", nargs="+", default=["7,2", "8,2", "9,3"], help="pairs like 7,2")
    ap.add_argument("--families", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-peel", action="store_true")
    a = ap.parse_args()
    cfg = Config([tuple(map(int, x.split(","))) for x in a.nk], a.families, a.seed, not a.no_peel)
    print(json.dumps({"config": asdict(cfg)}))
    run(cfg)


if __name__ == "__main__":
    main()
