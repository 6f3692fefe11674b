"""The ``bto`` command line interface.

One subcommand per library operation, stable text output for scripting.
Exit codes: 0 for success or a positive answer, 1 when the mathematics
answers "no" (invalid, incoherent, disconnected, certificate rejected),
2 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import hashlib
import math
import os
import sys
from pathlib import Path

from . import arrangement, baues, coherence, flips, omatroid
from .core import (
    DisjointPair,
    ParseError,
    TermOrder,
    format_subset,
    parse_order,
    parse_subset,
    serialize_order,
    validate,
)
from .enumeration import count_orders, enumerate_orders


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_order(path: str) -> TermOrder:
    return parse_order(_read(path))


def _load_levels(path: str):
    """Total or partial order file; totals come back as one-level-per-set."""
    text = _read(path)
    try:
        return baues.parse_partial(text)
    except ParseError:
        return baues.PartialTermOrder.from_total(parse_order(text))


def _parse_pair(text: str, n: int) -> DisjointPair:
    if "<" not in text:
        raise UsageError(f"pair must be written LHS<RHS, got {text!r}")
    left_text, right_text = text.split("<", 1)
    left = parse_subset(left_text, n)
    right = parse_subset(right_text, n)
    if left == 0 or right == 0:
        raise UsageError("both sides of a flip pair must be nonempty")
    return DisjointPair(left, right)


def _format_pair(pair: DisjointPair) -> str:
    return f"{format_subset(pair.left)} < {format_subset(pair.right)}"


def _print_certificate(cert: coherence.Certificate) -> None:
    for pair, mult in zip(cert.pairs, cert.multiplicities):
        print(f"pair: {_format_pair(pair)} x{mult}")


def _parse_certificate(text: str, n: int) -> coherence.Certificate:
    pairs = []
    mults = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("pair:"):
            line = line[len("pair:"):].strip()
        try:
            body, mult_text = line.rsplit("x", 1)
            left_text, right_text = body.split("<", 1)
            pairs.append(
                DisjointPair(
                    parse_subset(left_text, n, lineno),
                    parse_subset(right_text, n, lineno),
                )
            )
            mults.append(int(mult_text))
        except (ValueError, ParseError) as exc:
            raise UsageError(f"bad certificate line {lineno}: {exc}") from None
    if not pairs:
        raise UsageError("empty certificate file")
    return coherence.Certificate(pairs=tuple(pairs), multiplicities=tuple(mults))


def _weight_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"weights must be a comma list of integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    if args.partial:
        try:
            _ = baues.parse_partial(_read(args.file))
        except ParseError as exc:
            print(f"invalid: {exc}")
            return 1
        print("valid")
        return 0
    order = _load_order(args.file)
    report = validate(order)
    if report:
        print("valid")
        return 0
    a, b, g = report.violations[0]
    print(
        f"invalid: {format_subset(a)} < {format_subset(b)} but adding "
        f"{format_subset(g)} reverses the comparison"
    )
    return 1


def _cmd_enumerate(args) -> int:
    n = args.n
    mode = "all" if args.all_labelings else "canonical"
    if args.count_only:
        if args.coherent_only:
            classes = sum(
                1
                for o in enumerate_orders(n, mode="canonical")
                if coherence.is_coherent(o)
            )
            total = classes * math.factorial(n)
        else:
            result = count_orders(n)
            classes, total = result.class_count, result.total_count
        print(f"classes={classes} total={total}")
        return 0
    orders = enumerate_orders(n, mode=mode)
    if args.coherent_only:
        orders = (o for o in orders if coherence.is_coherent(o))
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise UsageError(f"cannot create {args.out}: {exc.strerror}") from None
        count = 0
        for order in orders:
            text = serialize_order(order)
            name = hashlib.sha256(text.encode()).hexdigest()[:16]
            (out / f"{name}.bto").write_text(text)
            count += 1
        print(f"wrote {count} orders to {args.out}")
        return 0
    first = True
    for order in orders:
        if not first:
            print()
        sys.stdout.write(serialize_order(order))
        first = False
    return 0


def _cmd_coherence(args) -> int:
    order = _load_order(args.file)
    weights = coherence.find_weight(order)
    if weights is not None:
        print(f"coherent w=({','.join(str(v) for v in weights)})")
        return 0
    print("incoherent")
    _print_certificate(coherence.noncoherence_certificate(order))
    return 1


def _cmd_realize(args) -> int:
    weights = _weight_list(args.w)
    if any(v <= 0 for v in weights):
        raise UsageError("weights must be positive")
    try:
        order = coherence.order_from_weight(weights, len(weights))
    except coherence.TieError as exc:
        print(f"tie: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(serialize_order(order))
    return 0


def _cmd_flips(args) -> int:
    order = _load_order(args.file)
    flippable = set(flips.flippable_pairs(order))
    primitive = flips.primitive_pairs(order)
    print(f"primitive={len(primitive)} flippable={len(flippable)}")
    for pair in primitive:
        mark = " *" if pair in flippable else ""
        print(f"{_format_pair(pair)}{mark}")
    return 0


def _cmd_flip(args) -> int:
    order = _load_order(args.file)
    pair = _parse_pair(args.pair, order.n)
    try:
        flipped = flips.flip(order, pair)
    except flips.FlipError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    sys.stdout.write(serialize_order(flipped))
    return 0


def _cmd_flipgraph(args) -> int:
    mode = "labeled" if args.all_labelings else "canonical"
    graph = flips.flip_graph(args.n, mode=mode)
    edges = sum(len(adj) for adj in graph.adjacency) // 2
    print(f"vertices={len(graph.vertices)} edges={edges}")
    if args.degree_histogram:
        for degree, count in graph.degree_histogram().items():
            print(f"degree {degree}: {count}")
    if args.check_connected:
        connected = graph.is_connected()
        print(f"connected: {'yes' if connected else 'no'}")
        return 0 if connected else 1
    return 0


def _cmd_charpoly(args) -> int:
    poly = arrangement.char_poly(args.n)
    print(f"{poly} = {poly.factored_str()}")
    return 0


def _cmd_regions(args) -> int:
    print(f"regions={arrangement.region_count(args.n)}")
    return 0


def _sign_string(vec) -> str:
    return "".join({1: "+", -1: "-", 0: "0"}[v] for v in vec)


def _cmd_localize(args) -> int:
    order = _load_levels(args.file)
    mu = omatroid.mu_from_order(order)
    if not args.check:
        # one line per canonical sign vector (first nonzero entry +)
        for vec in omatroid.sign_vectors(order.n):
            if next(v for v in vec if v) < 0:
                continue
            print(f"{_sign_string(vec)} {_sign_string((mu(vec),))}")
        return 0
    loc = omatroid.check_localization(mu)
    print(f"localization: {'yes' if loc else 'no'}")
    if not loc:
        x, y, e = loc.witness
        print(
            f"witness: {_sign_string(x)}, {_sign_string(y)} have no eliminator at root {e}"
        )
    rep = omatroid.check_mu_conditions(mu)
    if rep:
        print("mu-conditions: ok")
    else:
        print(f"mu-conditions: fails-{rep.failed_condition}")
        print("witness: " + ", ".join(_sign_string(v) for v in rep.witness))
    return 0 if loc and rep else 1


def _cmd_baues(args) -> int:
    if args.coherent_above:
        order = _load_order(args.file)
        only_trivial = baues.coherent_above_only_trivial(order)
        print(f"coherent-above-only-trivial: {'yes' if only_trivial else 'no'}")
        if not only_trivial:
            for coarse in baues.coherent_coarsenings_nontrivial(order):
                print(f"coarsening levels={coarse.num_levels}")
        return 0 if only_trivial else 1
    order = _load_levels(args.file)
    coherent = baues.is_coherent_partial(order)
    print(f"levels={order.num_levels} coherent={'yes' if coherent else 'no'}")
    return 0 if coherent else 1


def _cmd_certify(args) -> int:
    order = _load_order(args.file)
    cert = _parse_certificate(_read(args.cert), order.n)
    check = coherence.verify_certificate(order, cert)
    if check:
        print("certificate: valid")
        return 0
    print(f"certificate: invalid ({check.reason})")
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bto", description="Boolean term order toolkit"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads (answers are thread-count independent)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an order file")
    p.add_argument("file")
    p.add_argument("--partial", action="store_true", help="treat input as a partial order")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("enumerate", help="enumerate orders on [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coherent-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--all-labelings", action="store_true")
    p.add_argument("--out", help="write one order file per order into DIR")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("coherence", help="decide coherence, print weight or certificate")
    p.add_argument("file")
    p.set_defaults(func=_cmd_coherence)

    p = sub.add_parser("realize", help="order induced by a weight vector")
    p.add_argument("--w", required=True, help="comma list of positive integers")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("flips", help="list primitive and flippable pairs")
    p.add_argument("file")
    p.set_defaults(func=_cmd_flips)

    p = sub.add_parser("flip", help="flip an order across a pair")
    p.add_argument("file")
    p.add_argument("--pair", required=True, help='pair like "4<1,2"')
    p.set_defaults(func=_cmd_flip)

    p = sub.add_parser("flipgraph", help="build the flip graph on [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-connected", action="store_true")
    p.add_argument("--degree-histogram", action="store_true")
    p.add_argument("--all-labelings", action="store_true")
    p.set_defaults(func=_cmd_flipgraph)

    p = sub.add_parser("charpoly", help="characteristic polynomial of the arrangement")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("regions", help="number of regions of the arrangement")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_regions)

    p = sub.add_parser("localize", help="cocircuit signature of an order")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="run localization and mu checks")
    p.set_defaults(func=_cmd_localize)

    p = sub.add_parser("baues", help="partial orders and the refinement poset")
    p.add_argument("file")
    p.add_argument(
        "--coherent-above",
        action="store_true",
        help="is the trivial partition the only coherent coarsening?",
    )
    p.set_defaults(func=_cmd_baues)

    p = sub.add_parser("certify", help="verify a noncoherence certificate")
    p.add_argument("file")
    p.add_argument("--cert", required=True, help="certificate file")
    p.add_argument("--verify", action="store_true", help="accepted for symmetry; always on")
    p.set_defaults(func=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
