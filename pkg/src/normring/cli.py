"""Command-line front end.

Exit codes: 0 success, 1 error, 2 violation found by ``audit supermult``,
64 usage error.
"""

import argparse
import os
import sys
from fractions import Fraction

from sympy import factorint

from . import catalog
from .audit import AuditConfig, construct_counterexample, dedekind_test, supermult_sample, theorem11_audit
from .errors import NormringError
from .field import Order, equation_order, field_create, lattice_product
from .formats import (
    dumps,
    ideal_to_doc,
    load_ideal,
    load_order_document,
    order_to_doc,
    save_csv,
    save_report,
)
from .ideal import colon_ideal, ideal_generate, multiplier_ring, unit_ideal
from .lattice import HnfLattice, lattice_index
from .local import conductor, find_extension_generator, g_global, primes_above
from .normalization import normalize

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 64

DEFAULT_SEED = 0
DEFAULT_TRIALS = 200
DEFAULT_H = 10
DEFAULT_P_BOUND = 50


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _rationals(text):
    try:
        return [Fraction(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational list {text!r}") from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _default_seed():
    env = os.environ.get("NORMRING_SEED")
    return int(env) if env else DEFAULT_SEED


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _normalization(doc):
    return doc.normalization if doc.normalization is not None else normalize(doc.order)


def _fmt_factor(n):
    sign = "-" if n < 0 else ""
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factorint(abs(n)).items())]
    return sign + (" * ".join(parts) or "1")


def _fmt_lattice(lat):
    rows = "; ".join(" ".join(str(x) for x in r) for r in lat.basis)
    return f"[{rows}] / {lat.den}"


# --- order ----------------------------------------------------------------


def cmd_order_create(args):
    K = field_create(args.poly, assume_irreducible=args.assume_irreducible)
    if args.basis:
        rows = [_rationals(r) for r in args.basis.split(";")]
        R = Order.from_lattice(K, HnfLattice.from_fractions(rows))
    else:
        R = equation_order(K)
    if args.suborder_index:
        c, _, base = args.suborder_index.partition("@")
        base = base or "alpha"
        if base == "alpha":
            over = equation_order(K)
        elif base == "maximal":
            over = normalize(equation_order(K))
        else:
            raise UsageError(f"unknown base {base!r} in --suborder-index (use alpha or maximal)")
        R = over.suborder(int(c))
    Rt = normalize(R) if args.with_normalization else None
    _emit(dumps(order_to_doc(R, Rt)), args.output)
    return EXIT_OK


def cmd_order_info(args):
    doc = load_order_document(args.order)
    R = doc.order
    Rt = _normalization(doc)
    K = R.field
    idx = lattice_index(Rt.lattice, R.lattice)
    lines = [
        f"poly: {list(K.coeffs)}",
        f"degree: {K.degree}",
        f"certificate: {K.certificate}",
        f"basis: {_fmt_lattice(R.lattice)}",
        f"disc: {R.disc} = {_fmt_factor(R.disc)}",
        f"normalization: {_fmt_lattice(Rt.lattice)}",
        f"index in normalization: {idx}",
        f"conductor: {_fmt_lattice(conductor(R, Rt).lattice)}",
    ]
    G = g_global(R, Rt)
    gmap = ", ".join(f"m{k}: {v}" for k, v in sorted(G.per_prime.items()))
    lines.append(f"g map: {{{gmap}}}")
    if G.exact:
        lines.append(f"g: {G.max_local}")
    else:
        lines.append(f"g: <= {G.bound} (Dedekind at every prime)")
    if doc.recanonicalized:
        lines.append("note: input basis was not canonical and has been re-canonicalized")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# --- ideal ----------------------------------------------------------------


def cmd_ideal_make(args):
    doc = load_order_document(args.order)
    R = doc.order
    gens = [R.field.elem(_rationals(g)) for g in args.gens.split(";")]
    _write_ideal(ideal_generate(R, gens), args.output)
    return EXIT_OK


def _write_ideal(I, path):
    _emit(dumps(ideal_to_doc(I)), path)


def cmd_ideal_norm(args):
    I = load_ideal(args.ideal)
    print(I.norm)
    return EXIT_OK


def cmd_ideal_mul(args):
    _write_ideal(load_ideal(args.a) * load_ideal(args.b), args.output)
    return EXIT_OK


def cmd_ideal_colon(args):
    _write_ideal(colon_ideal(load_ideal(args.a), load_ideal(args.b)), args.output)
    return EXIT_OK


def cmd_ideal_multring(args):
    S = multiplier_ring(load_ideal(args.ideal))
    _emit(dumps(order_to_doc(S)), args.output)
    return EXIT_OK


# --- audit ----------------------------------------------------------------


def _config(args):
    seed = args.seed if args.seed is not None else _default_seed()
    return AuditConfig(
        trials=args.trials, seed=seed, H=args.H, probes=not args.no_probes, workers=args.workers
    )


def cmd_audit_supermult(args):
    doc = load_order_document(args.order)
    cfg = _config(args)
    Rt = _normalization(doc) if cfg.probes else None
    report = supermult_sample(doc.order, cfg, Rt)
    if args.output:
        save_report(report, args.output)
    if args.csv:
        save_csv(report, args.csv)
    print(f"pairs checked: {report.pairs_checked}")
    print(f"verdict: {report.verdict}")
    for v in report.violations[: args.show]:
        print(
            f"violation ({v.source}): N(I)={v.norm_I} N(J)={v.norm_J} N(I)N(J)={v.norm_I * v.norm_J} > N(IJ)={v.norm_IJ}"
        )
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_audit_dedekind(args):
    doc = load_order_document(args.order)
    report = dedekind_test(doc.order, args.p_bound)
    if args.output:
        save_report(report, args.output)
    for r in report.failures:
        print(f"fail at m{r['label']}: N(m^2)={r['N(m^2)']} > N(m)^2={r['N(m)'] ** 2}")
    print(f"verdict: {report.verdict}")
    return EXIT_OK


def cmd_audit_theorem11(args):
    doc = load_order_document(args.order)
    report = theorem11_audit(doc.order, _normalization(doc), _config(args))
    if args.output:
        save_report(report, args.output)
    print(f"g map: {dict(sorted(report.g.per_prime.items()))}")
    print(f"branch: {report.branch}")
    if report.counterexample is not None:
        ce = report.counterexample
        print(f"[I:R']={ce.index_I} [J:R']={ce.index_J} [IJ:R']={ce.index_IJ} > {ce.index_I * ce.index_J}")
    print(f"verdict: {report.verdict}")
    return EXIT_OK


# --- reproduction harness ---------------------------------------------------


def _rows_intro():
    R = catalog.z2i()
    I = ideal_generate(R, [2, [0, 2]])
    return [("Z[2i]: N(I), I=(2,2i)", 2, I.norm), ("Z[2i]: N(I^2)", 8, (I * I).norm)]


def _rows_degree4(p, R=None):
    if R is None:
        R, I, J, M = catalog.degree4_ideals(p)
    else:
        a = R.field.gen
        I = ideal_generate(R, [p, p * a])
        J = ideal_generate(R, [p, p * a * a])
        M = ideal_generate(R, [p, p * a, p * a**2, p * a**3])
    tag = f"Z+{p}Z[a], p={p}"
    return [
        (f"{tag}: N(I)", p**3, I.norm),
        (f"{tag}: N(J)", p**3, J.norm),
        (f"{tag}: N(M)", p, M.norm),
        (f"{tag}: N(IJ)", p**5, (I * J).norm),
        (f"{tag}: N(IM)", p**5, (I * M).norm),
    ]


def _rows_lenstra():
    O3 = catalog.o3()
    J = catalog.lenstra_ideal()
    JO = lattice_product(O3.field, J.lattice, O3.lattice)
    x = find_extension_generator(J, O3, 2)
    return [
        ("Z+2O3: J O3 == O3", True, JO == O3.lattice),
        ("Z+2O3: generator of J O3 inside J", "NotFound", "NotFound" if x is None else repr(x)),
    ]


def _rows_final():
    R4, Rt = catalog.r4(), catalog.quartic_maximal()
    (m,) = primes_above(R4, 2)
    colon = colon_ideal(unit_ideal(R4), m.ideal)
    ce = construct_counterexample(R4, m, Rt)
    G = g_global(catalog.r2(), Rt)
    return [
        ("R4: [(R4:m):R4]", 2, lattice_index(colon.lattice, R4.lattice)),
        ("R4 + m Rt: [IJ:R'] > [I:R'][J:R']", "8 > 4", f"{ce.index_IJ} > {ce.index_I * ce.index_J}"),
        ("Z+2Z[a]: g", 4, G.max_local),
    ]


def reproduce_paper(primes=(2, 3, 5), order_path=None, out=None):
    """Run the fixed example table; returns ``(rows, exit_code)``."""
    out = out or sys.stdout
    rows = _rows_intro()
    for p in primes:
        R = None
        if order_path and p == 2:
            R = load_order_document(order_path).order
        rows += _rows_degree4(p, R)
    rows += _rows_lenstra()
    rows += _rows_final()
    width = max(len(r[0]) for r in rows)
    ok = True
    for name, expected, computed in rows:
        match = str(expected) == str(computed)
        ok &= match
        status = "PASS" if match else "FAIL"
        line = f"{status}  {name:<{width}}  expected {expected}  computed {computed}"
        out.write(line + "\n")
    return rows, (EXIT_OK if ok else EXIT_ERROR)


def cmd_reproduce_paper(args):
    _, code = reproduce_paper(tuple(args.primes), args.order)
    return code


# --- parser ---------------------------------------------------------------


def build_parser():
    parser = _Parser(prog="normring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    order = sub.add_parser("order").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = order.add_parser("create", help="write an order file")
    p.add_argument("--poly", type=_ints, required=True, help="coefficients, constant term first")
    p.add_argument("--basis", help="rows separated by ';', rational entries separated by ','")
    p.add_argument("--suborder-index", help="c@alpha builds Z + c Z[a]; c@maximal uses the maximal order")
    p.add_argument("--assume-irreducible", action="store_true")
    p.add_argument("--with-normalization", action="store_true", help="embed the computed normalization")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_order_create)
    p = order.add_parser("info", help="discriminant, conductor and generator counts")
    p.add_argument("order")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_order_info)

    ideal = sub.add_parser("ideal").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = ideal.add_parser("make")
    p.add_argument("order")
    p.add_argument("--gens", required=True, help="generators separated by ';', coordinates by ','")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ideal_make)
    p = ideal.add_parser("norm")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_ideal_norm)
    for name, func in (("mul", cmd_ideal_mul), ("colon", cmd_ideal_colon)):
        p = ideal.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)
    p = ideal.add_parser("multring")
    p.add_argument("ideal")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ideal_multring)

    audit = sub.add_parser("audit").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, func in (("supermult", cmd_audit_supermult), ("theorem11", cmd_audit_theorem11)):
        p = audit.add_parser(name)
        p.add_argument("order")
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--seed", type=int, default=None, help="defaults to $NORMRING_SEED or 0")
        p.add_argument("--H", type=_positive, default=DEFAULT_H, help="coordinate bound")
        p.add_argument("--no-probes", action="store_true")
        p.add_argument("--workers", type=_positive, default=1)
        p.add_argument("-o", "--output")
        if name == "supermult":
            p.add_argument("--csv")
            p.add_argument("--show", type=int, default=3, help="violations to print")
        p.set_defaults(func=func)
    p = audit.add_parser("dedekind")
    p.add_argument("order")
    p.add_argument("--p-bound", type=int, default=DEFAULT_P_BOUND)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_audit_dedekind)

    rep = sub.add_parser("reproduce").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = rep.add_parser("paper", help="rerun the worked examples")
    p.add_argument("--primes", type=_ints, default=[2, 3, 5])
    p.add_argument("--order", help="order file to use in place of Z + 2Z[a]")
    p.set_defaults(func=cmd_reproduce_paper)
    return parser


def cli_main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (NormringError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
