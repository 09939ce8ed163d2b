"""Command-line front end.

    qelectric tableaux count --level 1 --length 3 --shape 1
    qelectric fock act --charge 0 --epsilon 1 --i 0 --partition ""
    qelectric klr gdim --charges d1 --src d1,d1+1 --tgt d1,d1+1
    qelectric verify hecke --window 4

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  Output depends only on the arguments, so repeated runs are
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import checks, fock, klr, tableaux
from .charges import ChargeVector, GenericityError, Residue, parse_charges, parse_residue
from .partitions import make_multipartition, make_partition

WORKERS_ENV = "QELECTRIC_WORKERS"


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    """Validated options shared by all subcommands."""

    epsilon: int = 1
    charges: ChargeVector | None = None
    level: int = 1
    window: int = 4
    fmt: str = "json"
    seed: int | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        if args.epsilon not in (1, -1):
            raise UsageError("--epsilon must be 1 or -1")
        charges = None
        text = getattr(args, "charges", None)
        if text is not None:
            try:
                charges = parse_charges(text)
            except GenericityError as exc:
                raise UsageError(f"charges are not generic: {exc}") from None
            except ValueError as exc:
                raise UsageError(f"bad --charges {text!r}: {exc}") from None
        level = getattr(args, "level", None)
        if level is None:
            level = charges.level if charges is not None else 1
        if level < 1:
            raise UsageError("--level must be positive")
        if charges is not None and charges.level != level:
            raise UsageError(f"--level {level} does not match {charges.level} charges")
        window = getattr(args, "window", 4)
        if window is not None and window < 1:
            raise UsageError("--window must be positive")
        return cls(args.epsilon, charges, level, window, args.format, getattr(args, "seed", None))

    def charge_vector(self) -> ChargeVector:
        return self.charges if self.charges is not None else ChargeVector.symbolic(self.level)


# -- parsing helpers --------------------------------------------------------------

def parse_shape(text: str, level: int):
    """``"2,1"`` at level 1, ``"2,1|1"`` at level 2; empty components are allowed."""
    comps = text.split("|") if text else [""] * level
    if len(comps) != level:
        raise UsageError(f"shape {text!r} has {len(comps)} components, expected {level}")
    try:
        return make_multipartition([[int(x) for x in c.split(",") if x.strip()] for c in comps])
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}: {exc}") from None


def parse_partition(text: str):
    try:
        return make_partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def parse_word(text: str) -> list[Residue]:
    try:
        return [parse_residue(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad residue list {text!r}: {exc}") from None


def _residue(text: str) -> Residue:
    try:
        return parse_residue(text)
    except ValueError as exc:
        raise UsageError(f"bad residue {text!r}: {exc}") from None


# -- output -------------------------------------------------------------------------

def emit(out, fmt: str, payload, rows: Sequence[Sequence] | None = None, header: Sequence[str] = (),
         text: str | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows or [])
        out.write(buf.getvalue())
    else:
        out.write((text if text is not None else json.dumps(payload)) + "\n")


def _vector_rows(v):
    rows = []
    for t in v.to_json()["terms"]:
        key = t.get("partition", t.get("multipartition"))
        rows.append((json.dumps(key), t["text"]))
    return rows


def _emit_vector(out, cfg: RunConfig, v) -> None:
    rows = _vector_rows(v)
    text = "\n".join(f"{c}  {k}" for k, c in rows) or "0"
    emit(out, cfg.fmt, v.to_json(), rows, ("partition", "coeff"), text)


# -- tableaux -------------------------------------------------------------------------

def cmd_tableaux(args, cfg: RunConfig, out) -> int:
    if args.length < 0:
        raise UsageError("--length must be non-negative")
    if args.action == "dims":
        total = tableaux.sum_of_squares(args.length, cfg.level)
        payload = {"level": cfg.level, "length": args.length, "sum_of_squares": total}
        emit(out, cfg.fmt, payload, [(cfg.level, args.length, total)], ("level", "length", "sum_of_squares"), str(total))
        return 0
    if args.shape is None:
        raise UsageError(f"tableaux {args.action} needs --shape")
    lam = parse_shape(args.shape, cfg.level)
    if args.action == "count":
        n = tableaux.count(args.length, lam)
        payload = {"level": cfg.level, "length": args.length, "shape": [list(c) for c in lam], "count": n}
        emit(out, cfg.fmt, payload, [(args.length, args.shape, n)], ("length", "shape", "count"), str(n))
        return 0
    ts = tableaux.enumerate_tableaux(args.length, lam)
    payload = {"shape": [list(c) for c in lam], "tableaux": [t.to_json() for t in ts]}
    rows = [(k, " ".join(t._fmt(s) for s in t.steps)) for k, t in enumerate(ts)]
    emit(out, cfg.fmt, payload, rows, ("index", "steps"), "\n".join(r[1] for r in rows))
    return 0


# -- fock -----------------------------------------------------------------------------

def _single_charge(args) -> Residue:
    text = args.charge if args.charge is not None else (args.charges or "0")
    cv = parse_charges(text)
    if cv.level != 1:
        raise UsageError("this fock subcommand works at level 1; use multi-act for several charges")
    return cv[1]


def cmd_fock(args, cfg: RunConfig, out) -> int:
    if args.action == "multi-act":
        cv = cfg.charge_vector()
        lam = parse_shape(args.partition, cv.level)
        v = fock.MultiFockVector.basis(lam, cv, cfg.epsilon)
        if args.word is None and args.i is None:
            raise UsageError("fock multi-act needs --i or --word")
        word = parse_word(args.word) if args.word is not None else [_residue(args.i)]
        _emit_vector(out, cfg, fock.multi_act_word(v, word))
        return 0
    delta = _single_charge(args)
    lam = parse_partition(args.partition)
    if args.action in ("act", "word"):
        if args.action == "act":
            if args.i is None:
                raise UsageError("fock act needs --i")
            word = [_residue(args.i)]
        else:
            if args.word is None:
                raise UsageError("fock word needs --word")
            word = parse_word(args.word)
        v = fock.FockVector.basis(lam, delta, cfg.epsilon, args.dual)
        try:
            _emit_vector(out, cfg, fock.act_word(v, word))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return 0
    if args.action == "bar":
        _emit_vector(out, cfg, fock.bar_fock(lam, delta, cfg.epsilon, args.dual))
        return 0
    if args.action == "tau":
        _emit_vector(out, cfg, fock.tau_fock(lam, delta, cfg.epsilon))
        return 0
    # pair: (v^lam . word, v_other) next to (v^lam, v_other . sigma(word))
    other = parse_partition(args.other or "")
    word = parse_word(args.word or "")
    w = fock.FockVector.basis(lam, delta, cfg.epsilon, dual=True)
    v = fock.FockVector.basis(other, delta, cfg.epsilon)
    c, sw = fock.sigma_word(word, cfg.epsilon)
    lhs = fock.pairing(fock.act_word(w, word), v)
    rhs = fock.pairing(w, fock.act_word(v, sw)) * c
    payload = {"lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}
    emit(out, cfg.fmt, payload, [(str(lhs), str(rhs), lhs == rhs)], ("lhs", "rhs", "equal"),
         f"{lhs}\n{rhs}")
    return 0 if lhs == rhs else 1


# -- klr ------------------------------------------------------------------------------

def cmd_klr(args, cfg: RunConfig, out) -> int:
    cv = cfg.charge_vector()
    if args.action == "gdim":
        src, tgt = parse_word(args.src or ""), parse_word(args.tgt or "")
        p = klr.graded_hom_dim(src, tgt, cv, cfg.epsilon)
        payload = {"src": [str(x) for x in src], "tgt": [str(x) for x in tgt], "gdim": str(p),
                   "terms": [{"exp": e, "c": int(c)} for e, c in p.terms]}
        emit(out, cfg.fmt, payload, [(e, int(c)) for e, c in p.terms], ("exp", "coeff"), str(p))
        return 0
    if args.action == "act":
        if args.i is None:
            raise UsageError("klr act needs --i")
        lam = parse_shape(args.partition or "", cv.level)
        res = klr.eklr_act(lam, _residue(args.i), cv, cfg.epsilon)
        payload = {"shape": [list(c) for c in lam], "i": args.i,
                   "standards": [{"shape": [list(c) for c in mu], "shift": d} for mu, d in res]}
        rows = [(json.dumps([list(c) for c in mu]), d) for mu, d in res]
        emit(out, cfg.fmt, payload, rows, ("shape", "shift"), "\n".join(f"<{d}> {m}" for m, d in rows) or "0")
        return 0
    rep = klr.relations_gdim_check(cv, cfg.epsilon, bound=args.bound)
    return _emit_reports(out, cfg, [rep])


# -- verify -----------------------------------------------------------------------------

def _run_check(name: str, kwargs: dict):
    return checks.CHECKS[name](**kwargs)


def _check_kwargs(name: str, args, cfg: RunConfig) -> dict:
    fn = checks.CHECKS[name]
    params = inspect.signature(fn).parameters
    kw = {}
    if "window" in params and args.window is not None:
        kw["window"] = args.window
    if "seed" in params and cfg.seed is not None:
        kw["seed"] = cfg.seed
    if "cases" in params and args.cases is not None:
        kw["cases"] = args.cases
    if "bound" in params and args.bound is not None:
        kw["bound"] = args.bound
    if "epsilons" in params and args.epsilon_given:
        kw["epsilons"] = (cfg.epsilon,)
    return kw


def _emit_reports(out, cfg: RunConfig, reports) -> int:
    ok = all(r.passed for r in reports)
    data = [r.to_json() for r in reports]
    rows = [(d["suite"], "pass" if d["passed"] else "FAIL", d["checks"], d["statement"]) for d in data]
    lines = []
    for d in data:
        lines.append(f"# {d['statement']}")
        lines.append(f"{d['suite']}: {'PASS' if d['passed'] else 'FAIL'} ({d['checks']} checks)")
        lines.extend(f"  failure: {f}" for f in d["failures"][:10])
    payload = data[0] if len(data) == 1 else {"passed": ok, "reports": data}
    emit(out, cfg.fmt, payload, rows, ("suite", "result", "checks", "statement"), "\n".join(lines))
    return 0 if ok else 1


def cmd_verify(args, cfg: RunConfig, out) -> int:
    names = list(checks.CHECKS) if args.suite == "all" else [args.suite]
    jobs = [(n, _check_kwargs(n, args, cfg)) for n in names]
    workers = _workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_run_check, *zip(*jobs)))
    else:
        reports = [_run_check(n, kw) for n, kw in jobs]
    return _emit_reports(out, cfg, reports)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--epsilon", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)

    p = argparse.ArgumentParser(prog="qelectric", description="q-electric algebras, Fock spaces and KLR degrees")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tableaux", parents=[common], help="enumerate up-down-tableaux")
    t.add_argument("action", choices=("count", "list", "dims"))
    t.add_argument("--level", type=int, default=1)
    t.add_argument("--length", type=int, required=True)
    t.add_argument("--shape", default=None, help='e.g. "2,1" or "2,1|1"')

    f = sub.add_parser("fock", parents=[common], help="Fock space actions")
    f.add_argument("action", choices=("act", "word", "bar", "tau", "pair", "multi-act"))
    f.add_argument("--charge", default=None)
    f.add_argument("--charges", default=None)
    f.add_argument("--i", default=None)
    f.add_argument("--word", default=None)
    f.add_argument("--partition", default="")
    f.add_argument("--other", default=None)
    f.add_argument("--dual", action="store_true")

    k = sub.add_parser("klr", parents=[common], help="graded dimensions and standard filtrations")
    k.add_argument("action", choices=("gdim", "act", "verify-relations"))
    k.add_argument("--charges", default=None)
    k.add_argument("--level", type=int, default=None)
    k.add_argument("--src", default=None)
    k.add_argument("--tgt", default=None)
    k.add_argument("--i", default=None)
    k.add_argument("--partition", default=None)
    k.add_argument("--bound", type=int, default=5)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(checks.CHECKS) + ["all"])
    v.add_argument("--window", type=int, default=None)
    v.add_argument("--cases", type=int, default=None)
    v.add_argument("--bound", type=int, default=None)
    return p


_DEFAULT_FORMAT = {"tableaux": "text", "fock": "json", "klr": "json", "verify": "text"}
_COMMANDS = {"tableaux": cmd_tableaux, "fock": cmd_fock, "klr": cmd_klr, "verify": cmd_verify}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.epsilon_given = args.epsilon is not None
    if args.epsilon is None:
        args.epsilon = 1
    if args.format is None:
        args.format = _DEFAULT_FORMAT[args.command]
    if args.command == "fock" and args.action == "multi-act":
        args.charges = args.charges or args.charge or "d1,d2"
    try:
        cfg = RunConfig.from_args(args)
        return _COMMANDS[args.command](args, cfg, out)
    except (UsageError, ValueError) as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        err.write(parser.format_usage())
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
