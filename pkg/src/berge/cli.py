"""Command line surface: generators, spectrum/hamiltonicity reports, extraction, sweeps."""

from __future__ import annotations

import argparse
import random
import sys
from typing import Callable, Sequence

from .constructions import construction1, construction2, construction3, construction4, tight_cycle
from .constructive import extract_all
from .core import BergeError, Hypergraph, degree_threshold, from_text, to_text
from .oracle import (
    BudgetExceeded,
    find_hamiltonian_frame,
    spectrum,
    validate_berge_cycle,
    witness_str,
)
from .sampling import random_hypergraph_with_min_degree


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())


def _parse_lengths(spec: str, n: int) -> list[int]:
    out: list[int] = []
    for part in spec.split(","):
        part = part.strip().replace("n", str(n))
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _parse_r_rule(spec: str) -> Callable[[int], int]:
    spec = spec.strip()
    if spec.startswith("half"):
        off = int(spec[4:]) if len(spec) > 4 else 0
        return lambda n: (n - 1) // 2 + off
    value = int(spec)
    return lambda n: value


def cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "c1":
        H = construction1(args.n, args.r, bridge=args.bridge)
    elif kind == "c2":
        H = construction2(args.n, args.r, extra=args.extra)
    elif kind == "c3":
        H = construction3(args.n, args.r)
    elif kind == "c4":
        H = construction4(args.k, args.r)
    else:
        H = tight_cycle(args.n, args.r)
    _emit(to_text(H), args.out)
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    H = _load(args.file)
    lo = args.lo if args.lo is not None else 2
    hi = args.hi if args.hi is not None else H.n
    report = spectrum(H, lo, hi, cap=args.cap)
    _emit(report.serialize(), args.out)
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    H = _load(args.file)
    try:
        frame = find_hamiltonian_frame(H, cap=args.cap)
    except BudgetExceeded:
        sys.stderr.write("UNKNOWN: hamiltonicity search exceeded the node cap\n")
        return 2
    if frame is None:
        sys.stderr.write("input has no hamiltonian Berge cycle\n")
        return 2
    lengths = _parse_lengths(args.lengths, H.n)
    trace = extract_all(frame, lengths, allow_fallback=args.allow_fallback, cap=args.cap)
    lines = []
    for rec in trace.records:
        mapped = frame.map_out(rec.cycle)
        bad = validate_berge_cycle(H, mapped)
        if bad:
            raise BergeError(f"internal: witness failed revalidation: {bad}")
        lines.append(f"{rec.length} BRANCH {rec.branch} WITNESS {witness_str(mapped)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    H = _load(args.file)
    try:
        frame = find_hamiltonian_frame(H, cap=args.cap)
    except BudgetExceeded:
        _emit("UNKNOWN\n", args.out)
        return 0
    if frame is None:
        _emit("NOT_HAMILTONIAN\n", args.out)
        return 0
    witness = frame.map_out(frame.cycle())
    _emit(f"HAMILTONIAN {witness_str(witness)}\n", args.out)
    return 0


def _sweep_seed_instance(n: int, r: int) -> Hypergraph | None:
    # sharpness witnesses: the two-clique split below half, edge removal above
    try:
        if r <= (n - 1) // 2:
            return construction1(n, r)
        return construction3(n, r)
    except BergeError:
        return None


def cmd_sweep(args: argparse.Namespace) -> int:
    ns = _parse_range(args.n)
    rule = _parse_r_rule(args.r)
    offsets = [int(tok) for tok in args.offsets.split(",")] if args.offsets else [0]
    rows = ["n\tr\toffset\tsamples\tfrac_hamiltonian\tfrac_pancyclic\tfrac_unknown\tmean_nodes"]
    for n in ns:
        r = rule(n)
        if not 3 <= r < n:
            raise BergeError(f"sweep cell n={n} resolves to invalid r={r}")
        threshold = degree_threshold(n, r)
        for off in offsets:
            target = threshold + off
            ham = pan = unk = 0
            nodes_total = 0
            for idx in range(args.samples):
                if idx == 0 and off < 0:
                    seeded = _sweep_seed_instance(n, r)
                else:
                    seeded = None
                if seeded is not None:
                    H = seeded
                else:
                    rng = random.Random(f"sweep:{args.seed}:{n}:{r}:{off}:{idx}")
                    H = random_hypergraph_with_min_degree(n, r, max(target, 1), rng)
                report = spectrum(H, 2, H.n, cap=args.cap)
                nodes_total += report.nodes
                if report.unknown:
                    unk += 1
                if n in report.present:
                    ham += 1
                if report.is_pancyclic:
                    pan += 1
            if args.samples:
                rows.append(
                    f"{n}\t{r}\t{off}\t{args.samples}"
                    f"\t{ham / args.samples:.3f}\t{pan / args.samples:.3f}"
                    f"\t{unk / args.samples:.3f}\t{nodes_total / args.samples:.1f}"
                )
    _emit("\n".join(rows) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berge",
        description="Berge cycles in uniform hypergraphs: generate, decide, extract, sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a named construction in the text format")
    gen.add_argument("kind", choices=["c1", "c2", "c3", "c4", "tight-cycle"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--r", type=int, required=True)
    gen.add_argument("--k", type=int)
    gen.add_argument("--bridge", action="store_true")
    gen.add_argument("--extra", action="store_true")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    spec = sub.add_parser("spectrum", help="classify every cycle length in a range")
    spec.add_argument("file")
    spec.add_argument("--lo", type=int)
    spec.add_argument("--hi", type=int)
    spec.add_argument("--cap", type=int)
    spec.add_argument("--out")
    spec.set_defaults(func=cmd_spectrum)

    ext = sub.add_parser("extract", help="constructively extract cycles of given lengths")
    ext.add_argument("file")
    ext.add_argument("--lengths", default="2..n")
    ext.add_argument("--allow-fallback", action="store_true")
    ext.add_argument("--cap", type=int)
    ext.add_argument("--out")
    ext.set_defaults(func=cmd_extract)

    chk = sub.add_parser("check", help="decide hamiltonicity only")
    chk.add_argument("file")
    chk.add_argument("--cap", type=int)
    chk.add_argument("--out")
    chk.set_defaults(func=cmd_check)

    swp = sub.add_parser("sweep", help="sample instances around the degree threshold")
    swp.add_argument("--n", required=True, help="vertex counts, e.g. 8 or 8..12")
    swp.add_argument("--r", required=True, help="uniformity rule: an integer, half, half-1, half+1")
    swp.add_argument("--offsets", default="0", help="comma-separated offsets from the threshold")
    swp.add_argument("--samples", type=int, default=3)
    swp.add_argument("--seed", type=int, default=0)
    swp.add_argument("--cap", type=int)
    swp.add_argument("--out")
    swp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BergeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
