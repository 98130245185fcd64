"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 the computation ran but the
checked property is false.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import bounds as B
from .constructions import constellation, hilton_milner, star, star_plus, thm1_extremal
from .families import (
    ell,
    find_disjoint_pair,
    is_star,
    union_violation,
)
from .kneser import FormatError, format_family, induce, parse_family, read_family, write_family
from .pattern import contains_pattern, load_pattern
from .peel import TranscriptError, peel_decompose, transcript_from_json, verify_transcript
from .search import InstanceTooLarge, exhaustive_oracle, max_intersecting_nontrivial, max_pattern_free
from .setcore import GroundParams

EXIT_OK, EXIT_USAGE, EXIT_FALSE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    args: argparse.Namespace

    @property
    def json(self) -> bool:
        return bool(getattr(self.args, "json", False))


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("KNESER_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kneser-extremal", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=_default_threads())
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        return sp

    b = common(sub.add_parser("bounds", help="evaluate a closed-form bound"))
    b.add_argument("--theorem", required=True, choices=B.THEOREMS)
    for name in ("n", "k", "s", "t", "nv", "ell"):
        b.add_argument(f"--{name}", type=int)
    b.add_argument("--pattern")

    c = common(sub.add_parser("construct", help="write a named extremal family"))
    c.add_argument("--kind", required=True, choices=["star", "constellation", "hilton-milner", "star-plus", "thm1"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--i", type=int, default=1, help="star center")
    c.add_argument("--L", help="comma-separated element set")
    c.add_argument("--extras", help="semicolon-separated members, e.g. '2 3;4 5'")
    c.add_argument("--pattern")
    c.add_argument("-o", "--out")

    ch = common(sub.add_parser("check", help="check a family property"))
    ch.add_argument("--family", required=True)
    ch.add_argument("--property", required=True,
                    choices=["intersecting", "star", "nontrivial", "union-intersecting", "pattern-free"])
    ch.add_argument("--s", type=int, default=1)
    ch.add_argument("--t", type=int, default=1)
    ch.add_argument("--pattern")

    e = common(sub.add_parser("ell", help="exact distance from intersecting"))
    e.add_argument("--family", required=True)

    pe = common(sub.add_parser("peel", help="peeling transcript"))
    pe.add_argument("--family", required=True)
    pe.add_argument("-o", "--out")

    v = common(sub.add_parser("verify", help="verify a peeling transcript"))
    v.add_argument("--family", required=True)
    v.add_argument("--transcript", required=True)
    v.add_argument("--exact-round-ell", action="store_true")

    for name, helptext in (("search", "branch-and-bound search"), ("oracle", "exhaustive oracle")):
        s = common(sub.add_parser(name, help=helptext))
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--k", type=int, required=True)
        s.add_argument("--pattern", default="K2")
        s.add_argument("--nontrivial", action="store_true", help="largest intersecting family in no star")
        s.add_argument("--host", help="restrict to the members of this family file")
        s.add_argument("--out-dir", help="write the witness (and all optima) as family files")
        if name == "search":
            s.add_argument("--enumerate-all", action="store_true")
            s.add_argument("--mode", choices=["branch_and_bound", "exhaustive_oracle"], default="branch_and_bound")
    return p


# -- helpers ------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--{', --'.join(missing)} required for this theorem")


def _emit(cfg: RunConfig, doc: dict, lines: list[str]):
    if cfg.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(lines))


def _parse_L(text: Optional[str]) -> list[int]:
    if not text:
        raise UsageError("--L is required")
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad --L {text!r}") from None


def _parse_extras(params: GroundParams, text: Optional[str]):
    if not text:
        return []
    body = "\n".join([f"{params.n} {params.k}", *text.split(";")])
    return list(parse_family(body).members)


# -- subcommands --------------------------------------------------------------

def cmd_bounds(cfg: RunConfig) -> int:
    a = cfg.args
    th = a.theorem
    if th == "kst":
        _need(a, "nv", "s", "t")
        val = B.kst_edge_bound(a.nv, a.s, a.t)
        doc = {"theorem": "kst", "params": {"nv": a.nv, "s": a.s, "t": a.t}, "bound": repr(val),
               "threshold": None, "threshold_met": None}
        _emit(cfg, doc, ["theorem: kst", f"bound: {val!r}"])
        return EXIT_OK
    if th == "lemma1":
        _need(a, "ell", "k")
        val = B.lemma1_lower(a.ell, a.k)
        doc = {"theorem": "lemma1", "params": {"ell": a.ell, "k": a.k}, "bound": str(val),
               "threshold": None, "threshold_met": None}
        _emit(cfg, doc, ["theorem: lemma1", f"bound: {val}"])
        return EXIT_OK
    _need(a, "n", "k")
    if th == "ekr":
        rep = B.ekr_report(a.n, a.k)
    elif th == "hm":
        rep = B.hm_report(a.n, a.k)
    elif th == "M":
        rep = B.m_report(a.n, a.k)
    elif th == "frankl":
        _need(a, "s")
        rep = B.frankl_bound(a.n, a.k, a.s)
    elif th == "thm1":
        _need(a, "pattern")
        rep = B.thm1_bound(a.n, a.k, load_pattern(a.pattern))
    elif th == "thm2":
        _need(a, "s", "t")
        rep = B.thm2_bound_and_threshold(a.n, a.k, a.s, a.t)
    else:
        _need(a, "t")
        rep = B.thm3_bound_and_threshold(a.n, a.k, a.t)
    doc = rep.to_json()
    lines = [f"theorem: {rep.theorem}",
             "params: " + " ".join(f"{k}={v}" for k, v in rep.params.items()),
             f"bound: {rep.bound}",
             f"threshold: {rep.threshold_ceil} (raw {rep.threshold})",
             f"threshold_met: {rep.threshold_met}"]
    lines += [f"note: {x}" for x in rep.notes]
    _emit(cfg, doc, lines)
    if rep.threshold is not None and not rep.threshold_met:
        print(f"warning: n={a.n} is below the threshold {rep.threshold_ceil}; "
              "the theorem does not assert this bound here", file=sys.stderr)
    return EXIT_OK


def cmd_construct(cfg: RunConfig) -> int:
    a = cfg.args
    params = GroundParams(a.n, a.k)
    checks: dict = {}
    if a.kind == "star":
        fam = star(params, a.i)
    elif a.kind == "constellation":
        fam = constellation(params, _parse_L(a.L))
    elif a.kind == "hilton-milner":
        fam = hilton_milner(params)
        checks["star_center"] = is_star(fam)
    elif a.kind == "star-plus":
        fam = star_plus(params, a.i, _parse_extras(params, a.extras))
    else:
        if not a.pattern:
            raise UsageError("--pattern is required for thm1")
        L = _parse_L(a.L) if a.L else []
        fam, rep = thm1_extremal(params, L, _parse_extras(params, a.extras), load_pattern(a.pattern))
        checks["special_free"] = rep.valid
    checks["intersecting"] = find_disjoint_pair(fam) is None
    if a.out:
        write_family(fam, a.out)
    doc = {"kind": a.kind, "n": a.n, "k": a.k, "size": len(fam), "checks": checks}
    if a.out:
        doc["out"] = a.out
        _emit(cfg, doc, [f"kind: {a.kind}", f"size: {len(fam)}", f"written: {a.out}"]
              + [f"{k}: {v}" for k, v in checks.items()])
    elif cfg.json:
        doc["members"] = fam.to_sets()
        _emit(cfg, doc, [])
    else:
        sys.stdout.write(format_family(fam))
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    a = cfg.args
    fam = read_family(a.family)
    prop = a.property
    witness = None
    detail: dict = {}
    if prop == "intersecting":
        w = find_disjoint_pair(fam)
        ok = w is None
        witness = None if ok else [fam[w.left[0]].elements, fam[w.right[0]].elements]
    elif prop == "star":
        c = is_star(fam)
        ok = c is not None
        detail["center"] = c
    elif prop == "nontrivial":
        ok = find_disjoint_pair(fam) is None and is_star(fam) is None
    elif prop == "union-intersecting":
        if not 1 <= a.s <= a.t:
            raise UsageError("need 1 <= s <= t")
        w = union_violation(fam, a.s, a.t)
        ok = w is None
        if w:
            witness = [[fam[i].elements for i in w.left], [fam[i].elements for i in w.right]]
        detail.update(s=a.s, t=a.t)
    else:
        if not a.pattern:
            raise UsageError("--pattern is required for pattern-free")
        g = load_pattern(a.pattern)
        emb = contains_pattern(induce(fam), g)
        ok = emb is None
        if emb:
            witness = [fam[i].elements for i in emb]
        detail["pattern"] = str(g)
    doc = {"property": prop, "holds": ok, "size": len(fam), "witness": witness, **detail}
    lines = [f"property: {prop}", f"holds: {ok}", f"size: {len(fam)}"]
    lines += [f"{k}: {v}" for k, v in detail.items()]
    if witness is not None:
        lines.append(f"witness: {witness}")
    _emit(cfg, doc, lines)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_ell(cfg: RunConfig) -> int:
    fam = read_family(cfg.args.family)
    rep = ell(fam)
    g = induce(fam)
    doc = {"size": rep.size, "alpha": rep.alpha, "ell": rep.ell,
           "astar": list(rep.astar_indices), "star_center": rep.witness_star_center,
           "edges": g.edge_count, "lemma1_lower": B.lemma1_lower(rep.ell, fam.params.k)}
    _emit(cfg, doc, [f"{k}: {v}" for k, v in doc.items()])
    return EXIT_OK


def cmd_peel(cfg: RunConfig) -> int:
    a = cfg.args
    fam = read_family(a.family)
    tr = peel_decompose(fam)
    doc = tr.to_json()
    if a.out:
        Path(a.out).write_text(json.dumps(doc, sort_keys=True) + "\n")
    if cfg.json and not a.out:
        print(json.dumps(doc, sort_keys=True))
    else:
        summary = {"p": tr.p, "max_m": max((r.m for r in tr.rounds), default=0),
                   "degree_sum": sum(r.degree for r in tr.rounds), "residual_size": len(tr.residual)}
        if cfg.json:
            print(json.dumps({**summary, "out": a.out}, sort_keys=True))
        else:
            print("\n".join(f"{k}: {v}" for k, v in summary.items()))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    a = cfg.args
    fam = read_family(a.family)
    try:
        doc = json.loads(Path(a.transcript).read_text())
        tr = transcript_from_json(doc, fam)
    except (TranscriptError, KeyError, TypeError, json.JSONDecodeError) as exc:
        ok, why = False, f"malformed transcript: {exc}"
    else:
        ok, why = verify_transcript(tr, fam, exact_round_ell=a.exact_round_ell)
    _emit(cfg, {"valid": ok, "failed_check": why}, [f"valid: {ok}"] + ([f"failed_check: {why}"] if why else []))
    return EXIT_OK if ok else EXIT_FALSE


def _write_certificate_files(cert, out_dir: Optional[str]):
    if not out_dir:
        return
    d = Path(out_dir)
    d.mkdir(parents=True, exist_ok=True)
    write_family(cert.witness, d / "witness.txt")
    for i, f in enumerate(cert.all_extrema or []):
        write_family(f, d / f"optimum_{i:05d}.txt")
    (d / "certificate.json").write_text(json.dumps(cert.to_json(), sort_keys=True) + "\n")


def cmd_search(cfg: RunConfig) -> int:
    a = cfg.args
    params = GroundParams(a.n, a.k)
    host = read_family(a.host) if a.host else None
    if host is not None and host.params != params:
        raise UsageError("host family has different n, k")
    oracle = cfg.subcommand == "oracle" or getattr(a, "mode", "") == "exhaustive_oracle"
    if a.nontrivial:
        cert = max_intersecting_nontrivial(params, "exhaustive_oracle" if oracle else "branch_and_bound", host)
    else:
        g = load_pattern(a.pattern)
        if oracle:
            cert = exhaustive_oracle(params, g, host=host)
        else:
            cert = max_pattern_free(params, g, enumerate_all=a.enumerate_all, host=host, threads=a.threads)
    _write_certificate_files(cert, a.out_dir)
    doc = cert.to_json()
    lines = [f"pattern: {cert.pattern}", f"mode: {cert.mode}", f"optimum: {cert.optimum}",
             f"witness: {cert.witness.to_sets()}", f"nodes_explored: {cert.nodes_explored}"]
    if cert.all_extrema is not None:
        lines.append(f"extrema_count: {len(cert.all_extrema)}" + (" (overflow)" if cert.extrema_overflow else ""))
    _emit(cfg, doc, lines)
    return EXIT_OK


COMMANDS = {
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "check": cmd_check,
    "ell": cmd_ell,
    "peel": cmd_peel,
    "verify": cmd_verify,
    "search": cmd_search,
    "oracle": cmd_search,
}


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(args.subcommand, args)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (UsageError, InstanceTooLarge, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main():
    sys.exit(run())
