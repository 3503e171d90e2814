"""Command-line entry point.

Every subcommand is a thin adapter over the library: parse flags, read the
plain-text inputs, call one library function, print.  Output is
deterministic byte-for-byte for identical inputs and seeds.  Exit codes:
0 success, 1 domain error (error class name on stderr), 2 usage error.
"""

import argparse
import os
import sys

from . import analysis, cyclotomic, fileio, residual, sparse, spectral, trace_transform
from .errors import CodecError, OrderNotDividing, WrongOrder


def _read(path):
    with open(path) as fh:
        return fh.read()


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tower(args):
    return fileio.load_field_config(args.field)


def _partition(tower, n):
    return cyclotomic.enumerate_classes(n, tower.q)


def _omega(tower, args):
    n = args.n
    if (tower.Q - 1) % n != 0:
        raise OrderNotDividing(f"n={n} does not divide Q-1={tower.Q - 1}")
    exp = getattr(args, "omega_exp", None)
    if exp is None:
        return tower.element_of_order(n)
    omega = tower.pow(tower.alpha, exp)
    if omega.value == 0 or tower.element_order(omega) != n:
        raise WrongOrder(f"alpha^{exp} does not have order {n}")
    return omega


def cmd_field_info(args):
    t = _tower(args)
    lines = [
        f"p={t.p}",
        f"a={t.a}",
        f"q={t.q}",
        f"m={t.m}",
        f"Q={t.Q}",
        f"k_modulus={','.join(str(c) for c in t.k_modulus)}",
        f"l_modulus={','.join(str(c) for c in t.l_modulus)}",
        f"alpha={t.alpha.value}",
        f"dlog_table={'present' if t.has_dlog else 'absent'}",
    ]
    _emit("".join(ln + "\n" for ln in lines), args.out)
    return 0


def cmd_classes(args):
    part = cyclotomic.enumerate_classes(args.n, args.q)
    lines = [
        f"{c.leader}:{c.length}:{','.join(str(i) for i in c.members)}"
        for c in part.classes
    ]
    lines.append(f"kappa={part.kappa}")
    _emit("".join(ln + "\n" for ln in lines), args.out)
    return 0


def cmd_dft(args, inverse=False):
    t = _tower(args)
    omega = _omega(t, args)
    v = fileio.read_vector(t, _read(args.infile))
    if len(v) != args.n:
        raise CodecError(f"expected {args.n} lines, got {len(v)}")
    out = (spectral.idft if inverse else spectral.dft)(t, v, omega)
    _emit(fileio.write_vector(out), args.out)
    return 0


def cmd_encode(args):
    t = _tower(args)
    part = _partition(t, args.n)
    V = fileio.read_vector(t, _read(args.infile))
    osv = spectral.encode_seeds(t, V, part)
    _emit(fileio.write_seeds(osv), args.out)
    return 0


def cmd_decode(args):
    t = _tower(args)
    part = _partition(t, args.n)
    osv = fileio.read_seeds(t, part, _read(args.infile))
    V = spectral.decode_seeds(t, osv)
    _emit(fileio.write_vector(V), args.out)
    return 0


def cmd_trace_dft(args):
    t = _tower(args)
    part = _partition(t, args.n)
    omega = _omega(t, args)
    osv = fileio.read_seeds(t, part, _read(args.seeds))
    tables = trace_transform.build_trace_tables(t, part, omega)
    F = trace_transform.trace_dft(t, osv, tables)
    _emit(fileio.write_base_vector(F), args.out)
    return 0


def cmd_residual_encode(args):
    t = _tower(args)
    part = _partition(t, args.n)
    g = fileio.read_vector(t, _read(args.infile))
    pkg = residual.encode_residual(t, part, g, budget=args.budget)
    _emit(fileio.write_package(pkg), args.out)
    return 0


def cmd_residual_decode(args):
    t = _tower(args)
    part = _partition(t, args.n)
    pkg = fileio.read_package(t, part, _read(args.infile))
    g = residual.decode_residual(t, pkg)
    _emit(fileio.write_vector(g), args.out)
    return 0


def cmd_analyze(args):
    t = _tower(args)
    part = _partition(t, args.n)
    counts = cyclotomic.exact_length_counts(args.n, t.q)
    coeffs = analysis.weight_enumerator(part, t.q)
    radius = analysis.global_covering_radius(part, t.m)
    lines = [f"n={args.n}", f"q={t.q}", f"kappa={part.kappa}"]
    for e in sorted(counts):
        a_e, b_e = counts[e]
        lines.append(f"B_{e}={b_e}")
    lines.append("weight_enumerator=" + ",".join(str(c) for c in coeffs))
    lines.append(f"covering_radius={radius}")
    _emit("".join(ln + "\n" for ln in lines), args.out)
    if args.plot_dir:
        os.makedirs(args.plot_dir, exist_ok=True)
        from . import plots

        plots.plot_weight_enumerator(
            coeffs,
            os.path.join(args.plot_dir, f"weights_q{t.q}_n{args.n}.png"),
            title=f"Weight distribution, q={t.q}, n={args.n}",
        )
    return 0


def cmd_bounds(args):
    t = _tower(args)
    n, s = args.n, args.s
    lhs, rhs, holds = analysis.universal_bound_check(n, t.q, t.m, s)
    count, bits = analysis.residual_count(n, t.Q, s)
    lines = [
        f"n={n}",
        f"s={s}",
        f"universal_lhs={lhs}",
        f"universal_rhs={rhs}",
        f"universal_holds={str(holds).lower()}",
        f"residual_count={count}",
        f"residual_bits={bits}",
    ]
    if args.delta is not None:
        e_lhs, e_rhs, sat = analysis.entropy_bound_check(args.delta, t.q, t.m, n)
        lines += [
            f"entropy_lhs={e_lhs:.9f}",
            f"entropy_rhs={e_rhs:.9f}",
            f"entropy_satisfied={str(sat).lower()}",
        ]
    _emit("".join(ln + "\n" for ln in lines), args.out)
    return 0


def cmd_prony(args):
    t = _tower(args)
    omega = _omega(t, args)
    h = fileio.read_vector(t, _read(args.infile))
    model = sparse.prony_recover(t, h, args.T, omega)
    text = fileio.write_sparse_model(model)
    support = sum(1 for x in h if x.value != 0)
    backend = (
        "sparse"
        if sparse.prefer_sparse(model.T, support, t.q, t.m, args.n)
        else "list"
    )
    text += f"# backend={backend}\n" if args.out is None else ""
    _emit(text, args.out)
    if args.out is not None:
        sys.stdout.write(f"backend={backend}\n")
    return 0


def cmd_mc_tail(args):
    t = _tower(args)
    emp = analysis.tail_bound_montecarlo(t, args.ell, args.trials, args.seed)
    bounds = {
        r: analysis.tail_bound(args.ell, t.m, t.q, r)[1] for r in sorted(emp)
    }
    lines = [f"ell={args.ell}", f"trials={args.trials}", f"seed={args.seed}"]
    for r in sorted(emp):
        lines.append(f"r={r} empirical={emp[r]:.6f} bound={float(bounds[r]):.6f}")
    _emit("".join(ln + "\n" for ln in lines), args.out)
    if args.plot_dir:
        os.makedirs(args.plot_dir, exist_ok=True)
        from . import plots

        plots.plot_tail(
            emp,
            bounds,
            os.path.join(args.plot_dir, f"tail_ell{args.ell}.png"),
            title=f"Tail, ell={args.ell}, q={t.q}, m={t.m}",
        )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gfcodec",
        description="Orbit-seed spectral codec and residual coding toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        return p

    p = add("field-info", cmd_field_info, help="print tower parameters")
    p.add_argument("--field", required=True)

    p = add("classes", cmd_classes, help="list q-cyclotomic classes mod n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    for name, inverse in (("dft", False), ("idft", True)):
        p = add(name, (lambda inv: lambda a: cmd_dft(a, inverse=inv))(inverse))
        p.add_argument("--field", required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--omega-exp", type=int, default=None)
        p.add_argument("--in", dest="infile", required=True)

    p = add("encode", cmd_encode, help="orbit-seed encode a consistent spectrum")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)

    p = add("decode", cmd_decode, help="expand orbit seeds to the full spectrum")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)

    p = add("trace-dft", cmd_trace_dft, help="trace-table transform of seeds")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--omega-exp", type=int, default=None)
    p.add_argument("--seeds", required=True)

    p = add("residual-encode", cmd_residual_encode)
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--budget", type=int, default=None)

    p = add("residual-decode", cmd_residual_decode)
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)

    p = add("analyze", cmd_analyze, help="class counts, weight enumerator, radius")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--plot-dir", default=None)

    p = add("bounds", cmd_bounds, help="universal/entropy/residual-count report")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--delta", type=float, default=None)

    p = add("prony", cmd_prony, help="recover a sparse residual model")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--omega-exp", type=int, default=None)
    p.add_argument("--in", dest="infile", required=True)

    p = add("mc-tail", cmd_mc_tail, help="Monte Carlo tail vs union bound")
    p.add_argument("--field", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--plot-dir", default=None)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CodecError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
