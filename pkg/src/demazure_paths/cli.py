"""Command-line front end.

Exit codes: 0 when the computation succeeds and every checked claim holds,
1 when a claim is computed to be false, 2 on usage errors (including an
exceeded element cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import chars, demazure
from .crystal import TensorWord, element_cap, enumerate_closure, reduce, signature, tensor_e, tensor_f
from .energy_paths import energy_table
from .errors import BudgetExceeded, CrystalError, TruncationExhausted
from .symtensor import BoxElem, SymTensorCrystal, parse_letters, perfect_check

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    l: Optional[int] = None
    lam: Optional[tuple] = None
    k: Optional[int] = None
    L: Optional[int] = None
    kappa_max: int = 4
    depth: Optional[int] = None
    fmt: str = "json"
    cap: Optional[int] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        lam = None
        if getattr(args, "lam", None):
            try:
                lam = tuple(int(t) for t in args.lam.split(","))
            except ValueError:
                raise UsageError(f"--lambda must be a comma list of integers, got {args.lam!r}")
        n, l = getattr(args, "n", None), getattr(args, "l", None)
        if lam is not None:
            if any(m < 0 for m in lam):
                raise UsageError("--lambda must be dominant (nonnegative entries)")
            if n is None:
                n = len(lam)
            elif n != len(lam):
                raise UsageError(f"--lambda has {len(lam)} entries but --n is {n}")
            if l is None:
                l = sum(lam)
            elif l != sum(lam):
                raise UsageError(f"--lambda has level {sum(lam)} but --l is {l}")
        if n is not None and n < 2:
            raise UsageError("--n must be at least 2")
        if l is not None and l < 1:
            raise UsageError("--l must be at least 1")
        cfg = cls(args.command, n, l, lam, getattr(args, "k", None), getattr(args, "L", None),
                  getattr(args, "kappa_max", 4), getattr(args, "depth", None),
                  getattr(args, "format", "json"), element_cap(getattr(args, "cap", None)))
        return cfg

    def need(self, *names):
        missing = [nm for nm in names if getattr(self, nm) is None]
        if missing:
            flags = {"lam": "--lambda", "L": "--L"}
            raise UsageError("missing " + ", ".join(flags.get(m, "--" + m) for m in missing))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _emit(out, text):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


# ----------------------------------------------------------------------
# commands


def cmd_graph(cfg: RunConfig, args, out) -> int:
    cfg.need("n", "l")
    B = SymTensorCrystal(cfg.n, cfg.l)
    if args.tensor:
        nodes = list(enumerate_closure(list(B.words(2))[:1], range(cfg.n), cap=cfg.cap))
        label = lambda w: "|".join("".join(map(str, b.x)) for b in w.factors)
        to_json = lambda w: [list(b.x) for b in w.factors]
    else:
        nodes = list(B.elements)
        if len(nodes) > cfg.cap:
            raise BudgetExceeded(f"{len(nodes)} elements exceed cap {cfg.cap}")
        label = lambda b: "".join(map(str, b.x))
        to_json = lambda b: list(b.x)
    edges = []
    for v in nodes:
        for i in range(cfg.n):
            w = v.f(i)
            if w is not None:
                edges.append((v, w, i))
    if cfg.fmt == "dot":
        lines = ["digraph crystal {", "  rankdir=LR;"]
        for v in nodes:
            lines.append(f'  "{label(v)}";')
        for v, w, i in edges:
            lines.append(f'  "{label(v)}" -> "{label(w)}" [label="{i}"];')
        lines.append("}")
        _emit(out, "\n".join(lines))
    elif cfg.fmt == "text":
        _emit(out, "\n".join(f"{label(v)} -{i}-> {label(w)}" for v, w, i in edges))
    else:
        _emit(out, _dump({"n": cfg.n, "l": cfg.l, "tensor": bool(args.tensor),
                          "nodes": [to_json(v) for v in nodes],
                          "edges": [{"from": to_json(v), "to": to_json(w), "i": i}
                                    for v, w, i in edges]}))
    return EXIT_OK


def _parse_factor(tok: str, n: int, l: int) -> BoxElem:
    if "," in tok:
        x = tuple(int(t) for t in tok.strip("[]()").split(","))
        if len(x) != n:
            raise UsageError(f"factor {tok!r} needs {n} coordinates")
        return BoxElem(x, l)
    if n == 2 and tok.isdigit():
        b = parse_letters(tok, 2)
        if b.l != l:
            raise UsageError(f"factor {tok!r} has level {b.l}, expected {l}")
        return b
    raise UsageError(f"cannot parse factor {tok!r}; use comma form like 1,1")


def cmd_act(cfg: RunConfig, args, out) -> int:
    cfg.need("n", "l")
    facs = tuple(_parse_factor(t, cfg.n, cfg.l) for t in args.word)
    head = cfg.lam
    w = TensorWord(facs, head)
    i = args.i
    sig = signature(w, i)
    red = reduce(sig)
    try:
        f = tensor_f(w, i)
        f_json = None if f is None else f.to_json()
        f_note = None
    except TruncationExhausted:
        f_json, f_note = None, "truncation too short"
    e = tensor_e(w, i)
    res = {
        "i": i,
        "signature": sig.groups(),
        "reduced": [str(s) for s in red],
        "e": None if e is None else e.to_json(),
        "f": f_json,
    }
    if f_note:
        res["f_note"] = f_note
    _emit(out, _dump(res))
    return EXIT_OK


def _rt(cfg: RunConfig, kappa=None):
    rt = demazure.ReflectionTable.sl_n(cfg.n)
    if kappa is None:
        kappa = demazure.mixing_index(cfg.lam, rt, cfg.kappa_max)
        if kappa is None:
            raise UsageError(f"no mixing index <= {cfg.kappa_max}; raise --kappa-max")
    return rt.with_kappa(kappa)


def cmd_demazure(cfg: RunConfig, args, out) -> int:
    cfg.need("lam", "k")
    rt = demazure.ReflectionTable.sl_n(cfg.n)
    S = demazure.demazure_recursive(cfg.lam, rt, cfg.k, depth=cfg.depth, cap=cfg.cap)
    if cfg.fmt == "text":
        _emit(out, "\n".join(str(w) for w in S.elems))
    else:
        _emit(out, _dump(S.to_json()))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args, out) -> int:
    cfg.need("lam", "k")
    rt = _rt(cfg, args.kappa)
    T = demazure.Towers(cfg.lam, rt, cap=cfg.cap)
    results = [demazure.compare_theorem(cfg.lam, rt, k, towers=T, cap=cfg.cap)
               for k in range(0, cfg.k + 1)]
    ok = all(r.equal for r in results)
    _emit(out, _dump({"theorem": "tensor-product-structure",
                      "params": {"lambda": list(cfg.lam), "n": cfg.n, "kappa": rt.kappa},
                      "status": "pass" if ok else "fail",
                      "results": [r.to_json() for r in results]}))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_character(cfg: RunConfig, args, out) -> int:
    cfg.need("lam", "k")
    rt = _rt(cfg, args.kappa)
    S = demazure.demazure_recursive(cfg.lam, rt, cfg.k, cap=cfg.cap)
    cl = chars.clch(S)
    fact = chars.clch_factorized(cfg.lam, rt, cfg.k)
    full = chars.ch_full(S, energy_table(cfg.n, cfg.l))
    ok = cl == fact and chars.collapse_delta(full) == cl
    _emit(out, _dump({"params": {"lambda": list(cfg.lam), "k": cfg.k, "kappa": rt.kappa},
                      "status": "pass" if ok else "fail",
                      "size": len(S),
                      "classical": cl.to_json(),
                      "full": full.to_json(),
                      "key_layout": "Lambda_0..Lambda_{n-1} coefficients, then delta"}))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_kostka(cfg: RunConfig, args, out) -> int:
    cfg.need("n", "l", "L")
    E = energy_table(cfg.n, cfg.l)
    mus = [tuple(int(t) for t in args.mu.split(","))] if args.mu else \
        list(chars.partitions(cfg.l * cfg.L, cfg.n))
    counts = chars.highest_word_counts(cfg.n, cfg.l, cfg.L)
    rows = []
    ok = True
    for mu in mus:
        a = chars.kostka_1dsum(mu, cfg.n, cfg.l, cfg.L, E)
        b = chars.kostka_charge(mu, (cfg.l,) * cfg.L)
        agree = a == b and a(1) == counts.get(tuple(p for p in mu if p), 0)
        ok &= agree
        rows.append({"mu": list(mu), "one_d_sum": str(a), "charge": str(b), "agree": agree})
    if cfg.fmt == "text":
        _emit(out, "\n".join(f"K_{r['mu']}(q) = {r['charge']}" for r in rows))
    else:
        _emit(out, _dump({"params": {"n": cfg.n, "l": cfg.l, "L": cfg.L},
                          "status": "pass" if ok else "fail", "kostka": rows}))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_kirillov(cfg: RunConfig, args, out) -> int:
    cfg.need("n", "l", "L")
    if cfg.L % cfg.n:
        raise UsageError(f"--L must be divisible by --n (got L={cfg.L}, n={cfg.n})")
    rep = chars.kirillov_check(cfg.n, cfg.l, cfg.L, kostka=args.route)
    _emit(out, _dump(rep.to_json()))
    return EXIT_OK if rep.passed else EXIT_FALSE


def cmd_check(cfg: RunConfig, args, out) -> int:
    cfg.need("n", "l")
    reports = []
    if args.perfect or not args.assumptions:
        reports.append(perfect_check(cfg.n, cfg.l).to_json())
    if args.assumptions or not args.perfect:
        cfg.need("lam")
        rt = demazure.ReflectionTable.sl_n(cfg.n)
        kappa = demazure.mixing_index(cfg.lam, rt, cfg.kappa_max)
        if kappa is None:
            reports.append(demazure.check_II(cfg.lam, rt, cfg.kappa_max))
        else:
            rep = demazure.check_II(cfg.lam, rt, kappa)
            rep["kappa"] = kappa
            reports.append(rep)
        reports.append(demazure.check_III(cfg.lam, rt))
        reports.append(demazure.check_IV(cfg.lam, rt, args.k_max))
    ok = all(r["status"] in ("pass", "certified") for r in reports)
    summary = {"status": "pass" if ok else "fail", "reports": reports}
    if args.assumptions or not args.perfect:
        summary["kappa"] = kappa
    if cfg.fmt == "text":
        lines = [f"{r['assumption']}: {r['status']}" for r in reports]
        if "kappa" in summary:
            lines.append(f"kappa = {summary['kappa']}")
        _emit(out, "\n".join(lines))
    else:
        _emit(out, _dump(summary))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_energy(cfg: RunConfig, args, out) -> int:
    cfg.need("n", "l")
    _emit(out, _dump(energy_table(cfg.n, cfg.l).to_json()))
    return EXIT_OK


COMMANDS = {
    "graph": cmd_graph,
    "act": cmd_act,
    "demazure": cmd_demazure,
    "verify": cmd_verify,
    "character": cmd_character,
    "kostka": cmd_kostka,
    "kirillov": cmd_kirillov,
    "check": cmd_check,
    "energy": cmd_energy,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of nodes of affine sl_n")
    common.add_argument("--l", type=int, help="level of B^l")
    common.add_argument("--lambda", dest="lam", metavar="M0,...,M{n-1}",
                        help="dominant weight as Lambda coefficients")
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--cap", type=int, help="element cap (default $DEMAZURE_CAP or 10^6)")
    common.add_argument("--kappa-max", type=int, default=4)

    p = argparse.ArgumentParser(prog="demazure-paths",
                                description="Demazure crystals on paths of the symmetric tensor crystal B^l.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", parents=[common], help="crystal graph of B^l or B^l (x) B^l")
    g.add_argument("--tensor", action="store_true")

    a = sub.add_parser("act", parents=[common], help="signature rule on one word")
    a.add_argument("--word", nargs="+", required=True,
                   help="factors left to right, e.g. 11 01 00 (n=2) or 1,0,0")
    a.add_argument("--i", type=int, required=True)

    d = sub.add_parser("demazure", parents=[common], help="B_{w^(k)}(lambda) by recursion")
    d.add_argument("--k", type=int)
    d.add_argument("--depth", type=int)

    for name, helptext in (("verify", "recursive set equals the tensor form, k' = 0..k"),
                           ("character", "classical and full characters")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--k", type=int)
        s.add_argument("--kappa", type=int, help="mixing index (default: least passing)")

    k = sub.add_parser("kostka", parents=[common], help="Kostka-Foulkes polynomials, two routes")
    k.add_argument("--L", type=int)
    k.add_argument("--mu", help="one partition, comma separated")

    kr = sub.add_parser("kirillov", parents=[common], help="Kirillov's character identity")
    kr.add_argument("--L", type=int)
    kr.add_argument("--route", choices=("charge", "1dsum"), default="charge")

    c = sub.add_parser("check", parents=[common], help="perfectness and assumptions II-IV")
    c.add_argument("--assumptions", action="store_true")
    c.add_argument("--perfect", action="store_true")
    c.add_argument("--k-max", type=int, default=12)

    sub.add_parser("energy", parents=[common], help="export the energy table")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](cfg, args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"element cap exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CrystalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
