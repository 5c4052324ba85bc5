"""Command-line front end.

``apsp run`` reads strings or an ``ADD``/``DEL``/``SNAPSHOT`` op stream and
prints overlaps as tab-separated ``OVL i j len`` lines.  ``apsp bench``
times random workloads and writes CSV.

Exit codes: 0 ok, 2 parse/config error, 3 engine/oracle mismatch,
4 duplicate string or unknown id.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from .ac import AcAutomaton
from .dawg import DynamicAPSP
from .errors import DuplicateString, EmptyString, UnknownId
from .model import OverlapRecord, StringStore
from .oracle import NaiveSet, apsp_pairs
from .stree import FullyDynamicAPSP

EXIT_OK, EXIT_PARSE, EXIT_MISMATCH, EXIT_ENGINE = 0, 2, 3, 4

MODES = ("static", "dawg", "stree", "verify")


class ParseError(Exception):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class RunConfig:
    mode: str = "static"
    min_len: int = 0
    include_self: bool = True
    emit_zero: bool = True
    input_format: str = "lines"
    stats: bool = False
    seed: int = 0
    engine: str = "stree"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.min_len < 0:
            raise ValueError("min_len must be >= 0")


@dataclass(frozen=True)
class Op:
    kind: str  # ADD, DEL or SNAPSHOT
    lineno: int
    content: str | None = None
    id: int | None = None


def parse_ops(lines: Iterable[str]) -> list[Op]:
    ops = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "SNAPSHOT" and len(tokens) == 1:
            ops.append(Op("SNAPSHOT", lineno))
        elif head == "ADD" and len(tokens) == 2:
            ops.append(Op("ADD", lineno, content=tokens[1]))
        elif head == "DEL" and len(tokens) == 2:
            try:
                sid = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"DEL needs an integer id, got {tokens[1]!r}") from None
            ops.append(Op("DEL", lineno, id=sid))
        elif len(tokens) == 1 and head not in ("ADD", "DEL"):
            ops.append(Op("ADD", lineno, content=head))
        else:
            raise ParseError(lineno, f"cannot parse {line!r}")
    return ops


def parse_fasta(lines: Iterable[str]) -> list[Op]:
    ops = []
    header_line = None
    seq: list[str] = []

    def flush():
        if header_line is None:
            return
        if not seq:
            raise ParseError(header_line, "empty FASTA record")
        ops.append(Op("ADD", header_line, content="".join(seq).upper()))

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            flush()
            header_line, seq = lineno, []
        elif header_line is None:
            raise ParseError(lineno, "sequence data before the first FASTA header")
        else:
            seq.append(line)
    flush()
    return ops


def format_record(rec) -> str:
    i, j, n = rec
    return f"OVL\t{i}\t{j}\t{n}"


class Runner:
    def __init__(self, config: RunConfig, out: TextIO, err: TextIO,
                 engine_factory: Callable | None = None):
        self.config = config
        self.out = out
        self.err = err
        self.engine_factory = engine_factory

    def keep(self, rec) -> bool:
        i, j, n = rec
        if not self.config.include_self and i == j:
            return False
        if not self.config.emit_zero and n == 0:
            return False
        return True

    def emit(self, records) -> None:
        write = self.out.write
        for rec in records:
            if self.keep(rec):
                write(format_record(rec) + "\n")

    def fail(self, code: int, lineno: int | None, msg: str) -> int:
        where = f"line {lineno}: " if lineno is not None else ""
        self.err.write(f"error: {where}{msg}\n")
        return code

    def make_engine(self, kind: str):
        if self.engine_factory is not None:
            return self.engine_factory(self.config)
        if kind == "dawg":
            return DynamicAPSP(self.config.min_len)
        return FullyDynamicAPSP(self.config.min_len)

    # -- modes -------------------------------------------------------------

    def run_static(self, ops: list[Op]) -> int:
        store = StringStore()
        for op in ops:
            if op.kind == "DEL":
                return self.fail(EXIT_PARSE, op.lineno, "DEL is not allowed in static mode")
            if op.kind == "ADD":
                try:
                    store.register_string(op.content)
                except (DuplicateString, EmptyString) as exc:
                    return self.fail(EXIT_ENGINE, op.lineno, str(exc))
        ac = AcAutomaton(store.alive().items())
        records = []
        for sid in sorted(ac.terminal_of):
            records.extend(ac.query(sid, self.config.min_len))
        self.emit(sorted(records))
        if self.config.stats:
            self.out.write(f"# nodes={ac.size} edges={ac.size - 1} visits={ac.ctrie.visits}\n")
        return EXIT_OK

    def run_dynamic(self, ops: list[Op]) -> int:
        engine = self.make_engine(self.config.mode)
        for op in ops:
            try:
                if op.kind == "ADD":
                    sid, F, B = engine.insert_and_report(op.content)
                    self.out.write(f"ID\t{sid}\n")
                    self.emit(sorted(F, key=lambda r: r[1]))
                    self.emit(sorted((r for r in B if r[0] != sid), key=lambda r: r[0]))
                elif op.kind == "DEL":
                    if not hasattr(engine, "delete"):
                        return self.fail(EXIT_PARSE, op.lineno, f"{self.config.mode} mode does not support DEL")
                    engine.delete(op.id)
                    self.out.write(f"DEL-OK\t{op.id}\n")
                else:
                    self.emit(sorted(engine.ledger.ledger_snapshot()))
            except (DuplicateString, UnknownId, EmptyString) as exc:
                return self.fail(EXIT_ENGINE, op.lineno, str(exc))
        if self.config.stats:
            s = engine.stats()
            self.out.write(f"# nodes={s['nodes']} edges={s['edges']} visits={s['visits']}\n")
        return EXIT_OK

    def run_verify(self, ops: list[Op]) -> int:
        engine = self.make_engine(self.config.engine)
        naive = NaiveSet()
        ell = self.config.min_len
        for op in ops:
            try:
                if op.kind == "ADD":
                    sid, F, B = engine.insert_and_report(op.content)
                    naive.add(sid, op.content)
                    self.out.write(f"ID\t{sid}\n")
                    bad = self.diff(_as_pairs(F | B), _as_pairs(naive.forward(sid, ell) | naive.backward(sid, ell)))
                elif op.kind == "DEL":
                    if not hasattr(engine, "delete"):
                        return self.fail(EXIT_PARSE, op.lineno, f"{self.config.engine} engine does not support DEL")
                    engine.delete(op.id)
                    naive.remove(op.id)
                    self.out.write(f"DEL-OK\t{op.id}\n")
                    bad = self.diff(engine.ledger.pairs(), apsp_pairs(naive, ell))
                else:
                    bad = self.diff(engine.ledger.pairs(), apsp_pairs(naive, ell))
            except (DuplicateString, UnknownId, EmptyString) as exc:
                return self.fail(EXIT_ENGINE, op.lineno, str(exc))
            if bad:
                self.out.write(bad + "\n")
                return self.fail(EXIT_MISMATCH, op.lineno, "engine disagrees with the oracle")
        self.out.write(f"VERIFIED\t{len(ops)}\n")
        return EXIT_OK

    @staticmethod
    def diff(got: dict, want: dict) -> str | None:
        if got == want:
            return None
        for key in sorted(got.keys() | want.keys()):
            a, b = got.get(key), want.get(key)
            if a != b:
                a = "none" if a is None else a
                b = "none" if b is None else b
                return f"MISMATCH\t{key[0]}\t{key[1]}\tengine={a}\toracle={b}"
        return None


def _as_pairs(records) -> dict[tuple[int, int], int]:
    return {(i, j): n for i, j, n in records}


def run(config: RunConfig, lines: Iterable[str], out: TextIO | None = None,
        err: TextIO | None = None, engine_factory: Callable | None = None) -> int:
    runner = Runner(config, out or sys.stdout, err or sys.stderr, engine_factory)
    try:
        ops = parse_fasta(lines) if config.input_format == "fasta" else parse_ops(lines)
    except ParseError as exc:
        return runner.fail(EXIT_PARSE, exc.lineno, str(exc).split(": ", 1)[1])
    if config.mode == "static":
        return runner.run_static(ops)
    if config.mode == "verify":
        return runner.run_verify(ops)
    return runner.run_dynamic(ops)


# -- benchmarking --------------------------------------------------------------

ALPHABET = "ACGT" + "".join(chr(c) for c in range(ord("a"), ord("z") + 1))


def random_strings(k: int, length: int, sigma: int, seed: int) -> list[str]:
    """``k`` distinct random strings; the same seed gives the same list."""
    if not 1 <= sigma <= len(ALPHABET):
        raise ValueError(f"sigma must be in 1..{len(ALPHABET)}")
    letters = ALPHABET[:sigma]
    rng = random.Random(seed)
    seen: set[str] = set()
    out = []
    attempts = 0
    while len(out) < k:
        s = "".join(rng.choices(letters, k=length))
        attempts += 1
        if s not in seen:
            seen.add(s)
            out.append(s)
        elif attempts > 100 * k:
            raise ValueError("cannot draw that many distinct strings")
    return out


def bench(mode: str, k: int, length: int, sigma: int, seed: int, out: TextIO) -> dict:
    strings = random_strings(k, length, sigma, seed)
    write = out.write
    write("op,index,id,length,seconds,visits,nodes,edges\n")
    total_visits = 0
    t_start = time.perf_counter()
    if mode == "static":
        t0 = time.perf_counter()
        ac = AcAutomaton(list(enumerate(strings, start=1)))
        write(f"BUILD,0,,{sum(map(len, strings))},{time.perf_counter() - t0:.6f},0,{ac.size},{ac.size - 1}\n")
        for idx, sid in enumerate(sorted(ac.terminal_of), start=1):
            t0 = time.perf_counter()
            ac.query(sid, 0)
            dt = time.perf_counter() - t0
            total_visits += ac.last_visits
            write(f"QUERY,{idx},{sid},{len(strings[sid - 1])},{dt:.6f},{ac.last_visits},{ac.size},{ac.size - 1}\n")
    elif mode in ("dawg", "stree"):
        engine = DynamicAPSP() if mode == "dawg" else FullyDynamicAPSP()
        for idx, s in enumerate(strings, start=1):
            before = engine.stats()["visits"]
            t0 = time.perf_counter()
            sid, _, _ = engine.insert_and_report(s)
            dt = time.perf_counter() - t0
            st = engine.stats()
            visits = st["visits"] - before
            total_visits += visits
            write(f"ADD,{idx},{sid},{len(s)},{dt:.6f},{visits},{st['nodes']},{st['edges']}\n")
        if mode == "stree":
            rng = random.Random(seed)
            victims = rng.sample(range(1, k + 1), k // 2)
            for idx, sid in enumerate(victims, start=k + 1):
                t0 = time.perf_counter()
                engine.delete(sid)
                dt = time.perf_counter() - t0
                st = engine.stats()
                write(f"DEL,{idx},{sid},{length},{dt:.6f},0,{st['nodes']},{st['edges']}\n")
    else:
        raise ValueError(f"bench does not support mode {mode!r}")
    total = time.perf_counter() - t_start
    n = sum(map(len, strings))
    write(f"# mode={mode} k={k} n={n} sigma={sigma} seed={seed} "
          f"total_seconds={total:.6f} total_visits={total_visits}\n")
    return {"total_seconds": total, "total_visits": total_visits, "n": n, "k": k}


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apsp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="compute overlaps for a string set or op stream")
    r.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    r.add_argument("--mode", choices=MODES, default="static")
    r.add_argument("--engine", choices=("dawg", "stree"), default="stree",
                   help="dynamic engine checked by --mode verify")
    r.add_argument("--min-len", type=int, default=0)
    r.add_argument("--include-self", action=argparse.BooleanOptionalAction, default=True)
    r.add_argument("--emit-zero", action=argparse.BooleanOptionalAction, default=True)
    r.add_argument("--format", dest="input_format", choices=("lines", "fasta"), default="lines")
    r.add_argument("--stats", action="store_true")
    r.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("bench", help="time a random workload, CSV to stdout")
    b.add_argument("--mode", choices=("static", "dawg", "stree"), default="dawg")
    b.add_argument("--k", type=int, default=1000)
    b.add_argument("--length", type=int, default=100)
    b.add_argument("--sigma", type=int, default=4)
    b.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "bench":
        bench(args.mode, args.k, args.length, args.sigma, args.seed, sys.stdout)
        return EXIT_OK
    if args.min_len < 0:
        sys.stderr.write("error: --min-len must be >= 0\n")
        return EXIT_PARSE
    config = RunConfig(
        mode=args.mode, min_len=args.min_len, include_self=args.include_self,
        emit_zero=args.emit_zero, input_format=args.input_format, stats=args.stats,
        seed=args.seed, engine=args.engine,
    )
    if args.input == "-":
        return run(config, sys.stdin)
    with open(args.input) as fh:
        return run(config, fh)


if __name__ == "__main__":
    sys.exit(main())
