"""Command-line front end.

Every command prints JSON records, one per line (``--human`` for plain
text). Exit codes: 0 success, 1 usage or input error, 2 verify found
discrepancies, 3 witness undecided, 4 witness proved every realization
connected.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from multiprocessing import Pool
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .classifier import classify, cross_check
from .enumeration import DEFAULT_LIMIT, LimitExceeded, count_labeled, enumerate_labeled, enumerate_nonisomorphic
from .graph import Graph, bicyclic_core, degree_sequence, is_connected
from .sequence import (
    NotGraphicError,
    SequenceParseError,
    havel_hakimi_realize,
    is_graphic,
    iter_sequences,
    parse_sequence,
    render_sequence,
)
from .switching import (
    PreconditionError,
    SwitchError,
    apply_switch,
    bowtie_normalize,
    girth_reduce_to_3,
    move,
    sandglass_to_theta,
    theta_normalize,
)
from .witness import WitnessUndecided, disconnected_witness

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISCREPANCY = 2
EXIT_UNDECIDED = 3
EXIT_NO_WITNESS = 4

SUM_OFFSET = {"tree": -2, "unicyclic": 0, "bicyclic": 2}
MIN_N = {"tree": 2, "unicyclic": 3, "bicyclic": 4}


class UsageError(Exception):
    pass


class Reporter:
    def __init__(self, args):
        self.human = args.human
        self.timing = not args.no_timing
        self.out = Path(args.out) if args.out else None
        self.t0 = time.perf_counter()

    def record(self, rec: dict, text: Optional[str] = None) -> None:
        if self.human:
            if text is not None:
                print(text)
        else:
            print(json.dumps(rec, sort_keys=False), flush=True)

    def finish(self, command: str, inp, result: dict, code: int, text: Optional[str] = None) -> int:
        rec = {"command": command, "input": inp, "result": result, "exit_code": code}
        if self.timing:
            rec["elapsed_s"] = round(time.perf_counter() - self.t0, 3)
        self.record(rec, text)
        return code

    def write(self, name: str, content: str) -> Optional[str]:
        if self.out is None:
            return None
        self.out.mkdir(parents=True, exist_ok=True)
        path = self.out / name
        path.write_text(content)
        return str(path)


def _graph_result(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _parse(text: str):
    try:
        return parse_sequence(text)
    except SequenceParseError as exc:
        raise UsageError(str(exc)) from exc


# --- commands -------------------------------------------------------------------

def cmd_classify(args, rep: Reporter) -> int:
    D = _parse(args.sequence)
    cls, verdict = classify(D, args.cls)
    result = {"sequence": render_sequence(D), "class": cls, **verdict.as_record()}
    text = f"{render_sequence(D)}: {'forcibly ' + cls if verdict.decision else 'no'}"
    if verdict.decision:
        text += f" [{verdict.family} {verdict.params}]"
    else:
        text += f" ({verdict.reason})"
    return rep.finish("classify", args.sequence, result, EXIT_OK, text)


def cmd_realize(args, rep: Reporter) -> int:
    D = _parse(args.sequence)
    try:
        g = havel_hakimi_realize(D)
    except NotGraphicError as exc:
        raise UsageError(str(exc)) from exc
    result = _graph_result(g)
    path = rep.write("realization.edgelist", g.to_edgelist())
    if path:
        result["path"] = path
    return rep.finish("realize", args.sequence, result, EXIT_OK, g.to_edgelist().rstrip())


def cmd_enumerate(args, rep: Reporter) -> int:
    D = _parse(args.sequence)
    if args.mode == "labeled" and args.emit == "count":
        n = count_labeled(D, args.limit)
        return rep.finish("enumerate", args.sequence, {"mode": args.mode, "count": n}, EXIT_OK, str(n))
    stream = enumerate_labeled(D, args.limit) if args.mode == "labeled" else enumerate_nonisomorphic(D, args.limit)
    for i, g in enumerate(stream):
        if args.emit == "edgelist":
            rec = {"index": i, **_graph_result(g)}
            path = rep.write(f"graph-{i:06d}.edgelist", g.to_edgelist())
            if path:
                rec["path"] = path
            rep.record(rec, f"# graph {i}\n{g.to_edgelist().rstrip()}")
    return rep.finish("enumerate", args.sequence, {"mode": args.mode, "count": stream.count}, EXIT_OK, str(stream.count))


def _check_one(job):
    D, cls, limit = job
    return cross_check(D, cls, limit)


def cmd_verify(args, rep: Reporter) -> int:
    cls = args.cls
    if args.max_n > args.limit:
        raise UsageError(f"--max-n {args.max_n} exceeds --limit {args.limit}")
    lo = MIN_N[cls] if args.min_n is None else args.min_n
    totals = {"checked": 0, "positives": 0, "agreements": 0, "discrepancies": 0}
    all_pos: list[str] = []
    bad: list[dict] = []
    pool = Pool(args.workers) if args.workers > 1 else None
    try:
        for n in range(lo, args.max_n + 1):
            seqs = [D for D in iter_sequences(n, 2 * n + SUM_OFFSET[cls]) if is_graphic(D)]
            jobs = [(D, cls, args.limit) for D in seqs]
            results = pool.imap(_check_one, jobs, chunksize=8) if pool else map(_check_one, jobs)
            tally = {"checked": 0, "positives": 0, "agreements": 0, "discrepancies": 0}
            positives = []
            for res in results:
                tally["checked"] += 1
                if res.verdict.decision:
                    tally["positives"] += 1
                    positives.append(render_sequence(res.sequence))
                if res.agree:
                    tally["agreements"] += 1
                else:
                    tally["discrepancies"] += 1
                    bad.append(res.as_record())
            for k in totals:
                totals[k] += tally[k]
            all_pos += positives
            rep.record(
                {"n": n, **tally, "positive_sequences": positives},
                f"n={n:2d} checked={tally['checked']:5d} positives={tally['positives']:3d} "
                f"discrepancies={tally['discrepancies']}  {' '.join(positives)}",
            )
    finally:
        if pool:
            pool.close()
            pool.join()
    for rec in bad:
        rep.record({"discrepancy": rec}, f"DISCREPANCY {json.dumps(rec)}")
    rep.write(f"verify-{cls}-positives.txt", "".join(p + "\n" for p in all_pos))
    if bad:
        rep.write(f"verify-{cls}-discrepancies.jsonl", "".join(json.dumps(r) + "\n" for r in bad))
    code = EXIT_DISCREPANCY if bad else EXIT_OK
    verdict = "discrepancy" if bad else "confirmed"
    result = {"class": cls, "min_n": lo, "max_n": args.max_n, **totals, "status": verdict}
    return rep.finish(
        "verify", {"class": cls, "max_n": args.max_n}, result, code,
        f"{cls}: {totals['checked']} checked, {totals['agreements']} agree, "
        f"{totals['discrepancies']} discrepancies -> {verdict}",
    )


def cmd_witness(args, rep: Reporter) -> int:
    D = _parse(args.sequence)
    try:
        w = disconnected_witness(D, args.limit)
    except NotGraphicError as exc:
        raise UsageError(str(exc)) from exc
    except WitnessUndecided as exc:
        return rep.finish("witness", args.sequence, {"status": "undecided", "reason": str(exc)}, EXIT_UNDECIDED, "undecided")
    if w is None:
        return rep.finish("witness", args.sequence, {"status": "none"}, EXIT_NO_WITNESS, "none: every realization is connected")
    result = {"status": "found", "method": w.method, "components": w.components, **_graph_result(w.graph)}
    path = rep.write("witness.edgelist", w.graph.to_edgelist())
    if path:
        result["path"] = path
    return rep.finish("witness", args.sequence, result, EXIT_OK, f"# method {w.method}\n{w.graph.to_edgelist().rstrip()}")


def _edges(spec: str) -> list[tuple[int, int]]:
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            u, v = tok.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise UsageError(f"bad edge {tok!r}; expected u-v") from None
    return out


def cmd_transform(args, rep: Reporter) -> int:
    try:
        g = Graph.from_edgelist(Path(args.graph).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph: {exc}") from exc
    try:
        if args.op == "switch":
            if not args.remove or not args.add:
                raise UsageError("switch needs --remove and --add")
            h = apply_switch(g, move(_edges(args.remove), _edges(args.add)))
        elif args.op == "girth3":
            h = girth_reduce_to_3(g)
        else:
            op = {"sandglass-theta": sandglass_to_theta, "bowtie-norm": bowtie_normalize, "theta-norm": theta_normalize}[args.op]
            h = op(g, bicyclic_core(g))
    except (SwitchError, PreconditionError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"{args.op}: {exc}") from exc
    result = {"op": args.op, "connected": is_connected(h), "degree_sequence": render_sequence(degree_sequence(h)), **_graph_result(h)}
    try:
        core = bicyclic_core(h)
        result["core"] = {"kind": core.kind, "params": list(core.params)}
    except ValueError:
        pass
    path = rep.write("transform.edgelist", h.to_edgelist())
    if path:
        result["path"] = path
    return rep.finish("transform", {"op": args.op, "graph": args.graph}, result, EXIT_OK, h.to_edgelist().rstrip())


# --- parser ---------------------------------------------------------------------

def _globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--limit", type=int, default=d(DEFAULT_LIMIT), help="enumeration vertex cap")
    p.add_argument("--workers", type=int, default=d(1), help="processes for verify")
    p.add_argument("--human", action="store_true", default=d(False), help="plain-text output")
    p.add_argument("--out", default=d(None), help="directory for output files")
    p.add_argument("--no-timing", action="store_true", default=d(False), help="omit elapsed time from reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcibly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    _globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="closed-form verdict for a sequence")
    p.add_argument("sequence")
    p.add_argument("--class", dest="cls", choices=["auto", "tree", "unicyclic", "bicyclic"], default="auto")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("realize", parents=[common], help="Havel-Hakimi realization")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("enumerate", parents=[common], help="all realizations")
    p.add_argument("sequence")
    p.add_argument("--mode", choices=["labeled", "noniso"], default="labeled")
    p.add_argument("--emit", choices=["edgelist", "count"], default="count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="sweep classifier against the oracle")
    p.add_argument("--class", dest="cls", choices=["tree", "unicyclic", "bicyclic"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", parents=[common], help="disconnected realization")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("transform", parents=[common], help="apply a switch or normalizing transform")
    p.add_argument("--op", choices=["sandglass-theta", "bowtie-norm", "theta-norm", "girth3", "switch"], required=True)
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--remove", help="edges u-v,x-y")
    p.add_argument("--add", help="edges u-x,v-y")
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "enumerate" and args.mode == "noniso":
        args.mode = "nonisomorphic"
    rep = Reporter(args)
    try:
        return args.func(args, rep)
    except (UsageError, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
