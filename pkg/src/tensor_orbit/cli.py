"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 size beyond a configured budget,
3 two independent computations disagreed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Sequence

from . import _accel
from .errors import BudgetExceeded, CrossCheckError

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_CROSSCHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _half(tensors: int) -> int:
    if tensors < 2 or tensors % 2:
        raise UsageError("--tensors must be a positive even number")
    return tensors // 2


def _emit_sequence(pairs, fmt: str, meta: dict) -> str:
    if fmt == "oeis":
        return "\n".join(f"{n} {v}" for n, v in pairs)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for n, v in pairs:
            w.writerow([n, str(v)])
        return buf.getvalue().rstrip("\n")
    return json.dumps({**meta, "values": [{"n": n, "value": str(v)} for n, v in pairs]}, indent=2)


def _split_tuple(text: str) -> list[str]:
    """Split 'a,b,c' on commas outside square brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _parse_tuple(text: str, rank: int, degree: int | None):
    from .perm import parse_permutation
    items = _split_tuple(text)
    if len(items) != rank:
        raise UsageError(f"expected {rank} permutations, got {len(items)}")
    if degree is None:
        # infer from bracket notation, else from the largest point mentioned
        sizes = []
        for it in items:
            nums = [int(x) for x in it.replace("[", " ").replace("]", " ").replace("(", " ")
                    .replace(")", " ").replace(",", " ").split()]
            sizes.append(len(nums) if it.startswith("[") else max(nums, default=1))
        degree = max(sizes)
    try:
        return [parse_permutation(it, degree) for it in items]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# --- subcommands --------------------------------------------------------------


def cmd_count(args) -> int:
    from .counting import _method, count_connected, count_invariants
    n = _half(args.tensors)
    if args.connected:
        print(count_connected(args.rank, n))
        return EXIT_OK
    value = _method(args.method)(args.rank, n)
    if args.method != "coset":
        ref = count_invariants(args.rank, n)
        if ref != value:
            raise CrossCheckError(f"{args.method} gives {value}; class formula gives {ref}")
    print(value)
    return EXIT_OK


def cmd_sequence(args) -> int:
    from .counting import sequence
    pairs = sequence(args.rank, args.max_n, method=args.method, connected=args.connected)
    print(_emit_sequence(pairs, args.format, {"rank": args.rank, "method": args.method,
                                              "connected": args.connected}))
    return EXIT_OK


def cmd_connected(args) -> int:
    from .counting import connected_sequence
    pairs = list(enumerate(connected_sequence(args.rank, args.max_n), start=1))
    print(_emit_sequence(pairs, args.format, {"rank": args.rank, "connected": True}))
    return EXIT_OK


def cmd_kronecker_table(args) -> int:
    import itertools
    from .characters import kronecker_k
    from .partitions import even_partitions_of, partitions_of
    parts = even_partitions_of(args.size) if args.even else list(partitions_of(args.size))
    rows = []
    for combo in itertools.combinations_with_replacement(parts, args.rank):
        c = kronecker_k(combo)
        if c or args.all:
            rows.append((combo, c))
    if args.format == "json":
        print(json.dumps([{"irreps": [list(R) for R in combo], "value": str(c)} for combo, c in rows], indent=2))
    else:
        for combo, c in rows:
            print(" ".join(str(list(R)).replace(" ", "") for R in combo), c)
    return EXIT_OK


def cmd_character_table(args) -> int:
    from .characters import character_table
    irreps, classes, table = character_table(args.size)
    if args.format == "json":
        print(json.dumps({"classes": [list(p) for p in classes],
                          "rows": {str(list(R)).replace(" ", ""): [str(x) for x in row]
                                   for R, row in zip(irreps, table)}}, indent=2))
        return EXIT_OK
    names = [str(list(R)).replace(" ", "") for R in irreps]
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["irrep"] + [str(list(p)).replace(" ", "") for p in classes])
        for name, row in zip(names, table):
            w.writerow([name] + row)
        return EXIT_OK
    width = max(len(x) for x in names)
    print(" " * width, *(str(list(p)).replace(" ", "") for p in classes))
    for name, row in zip(names, table):
        print(name.ljust(width), *row)
    return EXIT_OK


def cmd_algebra_check(args) -> int:
    from .algebra import structure_report
    n = _half(args.tensors)
    report = structure_report(args.rank, n, samples=args.samples, seed=args.seed)
    print(json.dumps(report, indent=2))
    ok = report["closure_all_zero"] and report["associativity_all_equal"] and report["gram_off_diagonal_zero"]
    return EXIT_OK if ok else EXIT_CROSSCHECK


def cmd_correlator(args) -> int:
    from .correlators import Observable, correlator_1pt, correlator_2pt
    sigmas = _parse_tuple(args.sigma, args.rank, args.degree)
    A = Observable(sigmas)
    if args.one_point:
        poly = correlator_1pt(A)
    else:
        if args.tau is None:
            raise UsageError("--tau is required for a two-point correlator")
        B = Observable(_parse_tuple(args.tau, args.rank, A.degree))
        poly = correlator_2pt(A, B)
    print(poly)
    if args.at is not None:
        print(poly(args.at))
    return EXIT_OK


def cmd_symplectic_k4(args) -> int:
    from .symplectic import coefficient, format_poly, k4_invariant, parse_monomial
    poly = k4_invariant(args.n)
    if args.coeff:
        try:
            mono = parse_monomial(args.coeff)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        c = coefficient(poly, mono)
        print(format_poly(c) if isinstance(c, dict) else c)
        return EXIT_OK
    print(f"terms {len(poly)}")
    print("nonzero" if poly else "zero")
    return EXIT_OK


def selftest_checks(quick: bool = False):
    """Yield (name, ok) for every cross-method equality."""
    from .bruteforce import burnside_count, orbit_count
    from .characters import count_invariants_kronecker, count_invariants_squares
    from .correlators import (Observable, correlator_1pt, correlator_1pt_oracle, correlator_2pt,
                              correlator_2pt_oracle)
    from .counting import count_invariants, count_read
    from .perm import Permutation, perm_table

    nmax = 5 if quick else 8
    for d in (3, 4, 5):
        yield f"read = class formula, d={d}, n<={nmax}", all(count_read(d, n) == count_invariants(d, n) for n in range(1, nmax + 1))
    for d, top in ((3, 4 if quick else 6), (4, 3 if quick else 4)):
        yield f"kronecker = class formula, d={d}, n<={top}", all(
            count_invariants_kronecker(d, n) == count_invariants(d, n) for n in range(1, top + 1))
    top = 4 if quick else 6
    yield f"squares = class formula, d=3, n<={top}", all(count_invariants_squares(n) == count_invariants(3, n) for n in range(1, top + 1))
    for d in (3, 4):
        yield f"orbits = burnside = class formula, d={d}, 2n<=4", all(
            orbit_count(d, n) == burnside_count(d, n) == count_invariants(d, n) for n in (1, 2))
    S2 = [Permutation.from_array0(r) for r in perm_table(2)]
    S4 = [Permutation.from_array0(r) for r in perm_table(4)]
    rng = random.Random(7)
    ok = True
    cases = [([a, b, c], [x, y, z]) for a in S2 for b in S2 for c in S2 for x in S2 for y in S2 for z in S2]
    cases += [([rng.choice(S4) for _ in range(3)], [rng.choice(S4) for _ in range(3)]) for _ in range(5 if quick else 20)]
    for s, t in cases:
        A, B = Observable(s), Observable(t)
        p, q = correlator_2pt(A, B), correlator_1pt(A)
        for N in (2, 3):
            ok &= p(N) == correlator_2pt_oracle(A, B, N) and q(N) == correlator_1pt_oracle(A, N)
    yield "correlators = index-sum oracles, d=3", ok


def cmd_selftest(args) -> int:
    failed = 0
    for name, ok in selftest_checks(args.quick):
        print(("PASS " if ok else "FAIL ") + name)
        failed += not ok
    return EXIT_CROSSCHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from .counting import METHODS
    p = _Parser(prog="tensor-orbit", description="Count and evaluate O(N) tensor invariants.")
    p.add_argument("--threads", type=int, default=None, help="cap kernel threads")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="number of invariants of 2n rank-d tensors")
    c.add_argument("--rank", type=int, required=True)
    c.add_argument("--tensors", type=int, required=True)
    c.add_argument("--method", choices=METHODS, default="coset")
    c.add_argument("--connected", action="store_true")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("sequence", help="counts for n = 1..max-n")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--format", choices=("oeis", "json", "csv"), default="oeis")
    s.add_argument("--method", choices=METHODS, default="coset")
    s.add_argument("--connected", action="store_true")
    s.set_defaults(func=cmd_sequence)

    cn = sub.add_parser("connected", help="connected counts for n = 1..max-n")
    cn.add_argument("--rank", type=int, required=True)
    cn.add_argument("--max-n", type=int, required=True)
    cn.add_argument("--format", choices=("oeis", "json", "csv"), default="oeis")
    cn.set_defaults(func=cmd_connected)

    k = sub.add_parser("kronecker-table", help="Kronecker coefficients of S_m")
    k.add_argument("--size", type=int, required=True)
    k.add_argument("--rank", type=int, default=3, help="number of irreps per coefficient")
    k.add_argument("--even", action="store_true", help="only even partitions")
    k.add_argument("--all", action="store_true", help="also list zero coefficients")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_kronecker_table)

    ch = sub.add_parser("character-table", help="character table of S_m")
    ch.add_argument("--size", type=int, required=True)
    ch.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ch.set_defaults(func=cmd_character_table)

    a = sub.add_parser("algebra-check", help="JSON report on the invariant algebra")
    a.add_argument("--rank", type=int, required=True)
    a.add_argument("--tensors", type=int, required=True)
    a.add_argument("--samples", type=int, default=20)
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_algebra_check)

    co = sub.add_parser("correlator", help="Gaussian correlator as a polynomial in N")
    co.add_argument("--rank", type=int, required=True)
    co.add_argument("--sigma", required=True, help='e.g. "(1 2)(3 4),(1 3),()" or "[2,1,4,3],..."')
    co.add_argument("--tau")
    co.add_argument("--degree", type=int, help="number of points (inferred if omitted)")
    co.add_argument("--one-point", action="store_true")
    co.add_argument("--at", type=int, help="also evaluate at this N")
    co.set_defaults(func=cmd_correlator)

    sy = sub.add_parser("symplectic-k4", help="K4 invariant with symplectic edges")
    sy.add_argument("--n", type=int, default=2, help="half the tensor dimension")
    sy.add_argument("--coeff", help="monomial such as T_000,T_032,T_212,T_220")
    sy.set_defaults(func=cmd_symplectic_k4)

    st = sub.add_parser("selftest", help="run the cross-method equalities")
    st.add_argument("--quick", action="store_true")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads is not None:
            if args.threads < 1:
                raise UsageError("--threads must be >= 1")
            _accel.set_threads(args.threads)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
