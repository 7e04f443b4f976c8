"""``qwave``: command-line front end.

Every subcommand builds one output document
``{"command", "params", "results", "exact"}``.  Rationals are emitted as
"p/q" strings and polynomials as ascending coefficient arrays.  ``--format
text`` prints the same results in a human-readable form.

Exit codes: 0 success, 1 an exact identity failed, 2 usage or precondition
error.
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from fractions import Fraction

from .degnum import deg_series
from .grsum import gamma_top_fast, sigma_table, sigma_table_sieved
from .oracle import p_dp, verify_reconstruction
from .qpartial import decompose, gamma_table, rademacher_link, rademacher_top
from .verify import run_checks
from .waves import InconsistencyError, partition_via_waves, wave_eval

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2

BENCH_SIZES = {
    "sigma": (8, 16, 32, 64, 128, 256),
    "decompose": (4, 6, 8, 10, 12),
    "partition": (1000, 10000),
}
BENCH_PARTITION_N = 12


class UsageError(Exception):
    pass


def rat(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def poly_json(p) -> list:
    return [rat(c) for c in p.coeffs] if p.coeffs else ["0"]


def _guard(args, name: str, value: int):
    if value < 1:
        raise UsageError(f"{name} must be positive")
    if value > args.max_N and not args.force:
        raise UsageError(f"{name}={value} exceeds --max-N {args.max_N}; pass --force to run anyway")


# -- commands -----------------------------------------------------------------
# each returns (params, results, text_lines, exit_code)


def cmd_decompose(args):
    N = args.N
    _guard(args, "N", N)
    d = decompose(N)
    report = verify_reconstruction(d)
    table = gamma_table(d)
    g = {f"{k},{l}": poly_json(p) for (k, l), p in sorted(d.terms.items())}
    gamma = {f"{h},{k},{l}": rat(v) for (h, k, l), v in sorted(table.entries.items()) if v}
    results = {"g": g, "gamma": gamma, "reconstruction": report.ok}
    lines = [f"F_{N}(x) = sum of g_kl(x) / (1 - x^k)^l"]
    lines += [f"  g[{k},{l}] = {p}" for (k, l), p in sorted(d.terms.items())]
    lines.append(f"reconstruction: {'ok' if report.ok else f'FAILED ({report.stage} at x^{report.witness})'}")
    return {"N": N}, results, lines, EXIT_OK if report.ok else EXIT_INCONSISTENT


def cmd_sigma(args):
    k = args.k
    if k < 1:
        raise UsageError("k must be positive")
    rows = sigma_table(k).rows()
    width = max(len(str(v)) for r in rows for v in r)
    lines = [f"sigma_{k}(t; j), rows t = 0..{k - 1}, columns j = 0..{k - 1}"]
    lines += [" ".join(str(v).rjust(width) for v in r) for r in rows]
    return {"k": k}, {"sigma": rows}, lines, EXIT_OK


def cmd_gamma(args):
    j, k, N = args.j, args.k, args.N
    _guard(args, "N", N)
    if not 1 <= k <= N or not 0 <= j < k:
        raise UsageError("need 1 <= k <= N and 0 <= j < k")
    L = N // k
    level = L if args.level is None else args.level
    if not 1 <= level <= L:
        raise UsageError(f"level must be in 1..{L}")
    value = gamma_top_fast(j, k, N) if level == L else gamma_table(N)[(j, k, level)]
    params = {"j": j, "k": k, "N": N, "l": level}
    return params, {"gamma": rat(value)}, [rat(value)], EXIT_OK


def cmd_wave(args):
    k, n, N = args.k, args.n, args.N
    _guard(args, "N", N)
    if not 1 <= k <= N or n < 0:
        raise UsageError("need 1 <= k <= N and n >= 0")
    value = wave_eval(k, n, N, gamma_table(N))
    return {"k": k, "n": n, "N": N}, {"wave": rat(value)}, [rat(value)], EXIT_OK


def cmd_partition(args):
    n, N = args.n, args.max_part
    _guard(args, "max-part", N)
    if n < 0:
        raise UsageError("n must be nonnegative")
    value = partition_via_waves(n, N)
    check = p_dp(N, n)[n]
    if value != check:
        raise InconsistencyError(f"waves give {value}, dynamic programming gives {check}")
    return {"n": n, "N": N}, {"partitions": value}, [str(value)], EXIT_OK


def cmd_degnum(args):
    try:
        s = deg_series(args.kind, args.center, args.m, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    coeffs = [rat(c) for c in s.coeffs]
    basis = "(1-x)" if args.center == 1 else "(1+x)"
    params = {"kind": args.kind, "m": args.m, "order": args.order, "center": args.center}
    lines = [f"coefficients in powers of {basis}:"] + [f"  [{i}] {c}" for i, c in enumerate(coeffs)]
    return params, {"coeffs": coeffs, "basis": basis}, lines, EXIT_OK


def cmd_rademacher(args):
    h, k, N = args.h, args.k, args.N
    _guard(args, "N", N)
    try:
        top = rademacher_top(h, k, N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lhs, rhs = rademacher_link(h, k, N)
    if lhs != rhs:
        raise InconsistencyError(f"g_{{k,L}}(xi) != C (-k/xi)^L for h={h}, k={k}, N={N}")
    results = {
        # coordinates in the power basis 1, x, x^2, ... of Q[x]/Phi_k
        "value": [rat(c) for c in top.value.coords],
        "basis": f"Q[x]/Phi_{k}, x = exp(2 pi i/{k}), xi = x^{h}",
        "level": top.level,
        "approx": {"re": top.approx[0], "im": top.approx[1]},
        "link_holds": True,
    }
    lines = [
        f"C[{h},{k},{top.level}] = {top.value}   (xi = x^{h}, x = exp(2 pi i/{k}))",
        f"  ~ {top.approx[0]} + {top.approx[1]} i   (display only)",
    ]
    return {"h": h, "k": k, "N": N}, results, lines, EXIT_OK


def cmd_verify(args):
    N_max = args.N_max
    _guard(args, "N_max", N_max)
    checks = run_checks(N_max)
    names = list(dict.fromkeys(c.name for c in checks))
    matrix = {str(N): {} for N in range(1, N_max + 1)}
    first = None
    for c in checks:
        matrix[str(c.N)][c.name] = c.ok
        if not c.ok and first is None:
            first = c
    ok = first is None
    results = {"ok": ok, "checks": names, "matrix": matrix}
    if first is not None:
        results["first_failure"] = {"check": first.name, "N": first.N, "witness": first.witness}
    width = max(len(n) for n in names)
    lines = [" " * width + " " + " ".join(f"{N:>3}" for N in range(1, N_max + 1))]
    for name in names:
        cells = " ".join(f"{'ok' if matrix[str(N)].get(name, True) else 'X':>3}" for N in range(1, N_max + 1))
        lines.append(f"{name:<{width}} {cells}")
    if first is not None:
        lines.append(f"first failure: {first.name} at N={first.N}: {first.witness}")
    return {"N_max": N_max}, results, lines, EXIT_OK if ok else EXIT_INCONSISTENT


def _median_millis(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(times)


def bench_rows(suite: str, repeats: int = 5, sizes=None) -> list:
    if suite not in BENCH_SIZES:
        raise UsageError(f"unknown bench suite {suite!r}")
    if repeats < 1:
        raise UsageError("repeats must be positive")
    sizes = BENCH_SIZES[suite] if sizes is None else sizes
    rows = []
    for size in sizes:
        if suite == "sigma":
            methods = {"recurrence": lambda: sigma_table(size), "sieved": lambda: sigma_table_sieved(size)}
        elif suite == "decompose":
            methods = {"decompose": lambda: decompose(size)}
        else:
            N = BENCH_PARTITION_N
            table = gamma_table(N)
            methods = {
                "dp": lambda: p_dp(N, size)[size],
                "waves": lambda: partition_via_waves(size, N, table),
            }
        for method, fn in methods.items():
            rows.append({"method": method, "size": size, "millis": round(_median_millis(fn, repeats), 3)})
    return rows


def cmd_bench(args):
    rows = bench_rows(args.suite, args.repeats)
    lines = [f"{'method':<12} {'size':>7} {'millis':>12}"]
    lines += [f"{r['method']:<12} {r['size']:>7} {r['millis']:>12.3f}" for r in rows]
    params = {"suite": args.suite, "repeats": args.repeats}
    if args.suite == "partition":
        params["N"] = BENCH_PARTITION_N
    # timings are measurements, not exact results
    return params, {"rows": rows}, lines, EXIT_OK


# -- parser -------------------------------------------------------------------


def _global_flags(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "text"), default=d("text"))
    parser.add_argument("--max-N", dest="max_N", type=int, default=d(30),
                        help="refuse N above this bound (default 30)")
    parser.add_argument("--force", action="store_true", default=d(False),
                        help="ignore --max-N; may be slow, never unsafe")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwave", description="Exact q-partial fractions of 1/prod(1 - x^k).")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("decompose", cmd_decompose, "g_kl table, Gamma table and reconstruction status")
    p.add_argument("N", type=int)
    p = add("sigma", cmd_sigma, "k x k table of Gaussian-Ramanujan sums")
    p.add_argument("k", type=int)
    p = add("gamma", cmd_gamma, "one coefficient Gamma_{j,k,l}(N), top level by default")
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--level", type=int, default=None)
    p = add("wave", cmd_wave, "Sylvester wave W_k(n; N)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("N", type=int)
    p = add("partition", cmd_partition, "p_N(n) as a sum of waves")
    p.add_argument("n", type=int)
    p.add_argument("--max-part", dest="max_part", type=int, required=True)
    p = add("degnum", cmd_degnum, "degenerate Bernoulli/Euler Taylor coefficients")
    p.add_argument("kind", choices=("bernoulli", "euler"))
    p.add_argument("m", type=int)
    p.add_argument("order", type=int)
    p.add_argument("--center", type=int, choices=(1, -1), default=1)
    p = add("rademacher", cmd_rademacher, "top classical coefficient C_{h,k,N//k} in Q(zeta_k)")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    p.add_argument("N", type=int)
    p = add("verify", cmd_verify, "cross-validation matrix for N = 1..N_max")
    p.add_argument("N_max", type=int)
    p = add("bench", cmd_bench, "median wall-clock timings")
    p.add_argument("suite", choices=tuple(BENCH_SIZES))
    p.add_argument("--repeats", type=int, default=5)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params, results, lines, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"qwave {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"qwave {args.command}: inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.format == "json":
        doc = {
            "command": args.command,
            "params": {key: str(v) for key, v in params.items()},
            "results": results,
            "exact": args.command != "bench",
        }
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))
    if code == EXIT_INCONSISTENT and args.command == "verify":
        first = results["first_failure"]
        print(f"first failure: {first['check']} at N={first['N']}: {first['witness']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
