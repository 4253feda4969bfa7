"""Command line surface: one subcommand per library operation plus verification sweeps.

Exit codes: 0 success, 1 a verification counterexample or internal check
tripped, 2 invalid input.  Stdout is deterministic for a given argv;
timing chatter goes to stderr.
"""

import argparse
import json
import sys

from . import characters, discriminants, forms, genus, symbols, sweeps
from .characters import InternalCheckError, QuadraticCharacter

DEFAULT_MAX_FACTOR_BITS = 30  # ~10^9, desk scale for trial division
DEFAULT_MAX_SWEEP_BOUND = 100_000


def _int_arg(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")


def _sign_list(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        values = tuple(int(part, 10) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of signs: {text!r}")
    return values


def _guard_size(n: int, bits: int, what: str) -> int:
    if abs(n).bit_length() > bits:
        raise ValueError(
            f"|{what}| = {abs(n)} exceeds the {bits}-bit guard; pass --max-factor-bits to raise it"
        )
    return n


def _structure_name(divisors) -> str:
    if not divisors:
        return "trivial"
    return " x ".join(f"C{v}" for v in divisors)


def _character_from_args(args) -> QuadraticCharacter:
    m = _guard_size(args.m, args.max_factor_bits, "m")
    if m <= 0:
        raise ValueError("modulus must be positive")
    return QuadraticCharacter(m, args.values)


def _fmt_sign(v: int) -> str:
    return f"{v:+d}" if v else " 0"


# ---------------------------------------------------------------- handlers


def _cmd_is_fundamental(args):
    n = _guard_size(args.n, args.max_factor_bits, "n")
    if n == 0:
        raise ValueError("0 is not a discriminant")
    ok = discriminants.is_fundamental(n)
    return {"n": n}, {"fundamental": ok}, [str(ok).lower()]


def _cmd_disc_of_sqrt(args):
    a = _guard_size(args.a, args.max_factor_bits, "a")
    d = discriminants.disc_of_sqrt(a)
    return {"a": a}, {"discriminant": d}, [str(d)]


def _cmd_disc_mul(args):
    d1 = _guard_size(args.d1, args.max_factor_bits, "d1")
    d2 = _guard_size(args.d2, args.max_factor_bits, "d2")
    d = discriminants.disc_mul(d1, d2)
    return {"d1": d1, "d2": d2}, {"discriminant": d}, [str(d)]


def _cmd_factor(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    fac = discriminants.factor_prime_discriminants(d)
    text = [
        f"{d} = " + (" * ".join(str(f) for f in fac.factors) if fac.factors else "1"),
        f"r = {fac.r}, t = {fac.t}",
    ]
    return {"d": d}, {"factors": list(fac.factors), "r": fac.r, "t": fac.t}, text


def _cmd_kronecker(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    v = symbols.kronecker(d, args.n)
    return {"d": d, "n": args.n}, {"value": v}, [str(v)]


def _cmd_splitting(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    p = _guard_size(args.p, args.max_factor_bits, "p")
    s = symbols.splitting_type(d, p)
    return {"d": d, "p": p}, {"type": s.value}, [s.value]


def _cmd_char_table(args):
    m = _guard_size(args.m, args.max_factor_bits, "m")
    if m <= 0:
        raise ValueError("modulus must be positive")
    gens = characters.unit_group_generators(m)
    rows = []
    for chi in characters.all_quadratic_characters(m):
        core = characters.primitive_core(chi)
        disc = characters.dirichlet_to_kronecker(core)
        rows.append(
            {
                "signs": list(chi.signs),
                "conductor": characters.conductor(chi),
                "discriminant": disc,
                "values": [characters.char_value(chi, n) for n in range(1, m + 1)],
            }
        )
    text = [f"quadratic characters mod {m}; generators {list(gens)}"]
    header = "n:".ljust(16) + " ".join(f"{n:>2d}" for n in range(1, m + 1))
    text.append(header)
    for row in rows:
        label = "principal" if row["discriminant"] == 1 else f"chi({row['discriminant']})"
        text.append(
            f"{label:<10s} N={row['conductor']:<3d} "
            + " ".join(_fmt_sign(v) for v in row["values"])
        )
    return {"m": m}, {"generators": list(gens), "characters": rows}, text


def _cmd_conductor(args):
    chi = _character_from_args(args)
    n = characters.conductor(chi)
    return (
        {"m": chi.modulus, "values": list(chi.signs)},
        {"conductor": n, "primitive": n == chi.modulus},
        [str(n)],
    )


def _cmd_to_kronecker(args):
    chi = _character_from_args(args)
    d = characters.dirichlet_to_kronecker(chi)
    return {"m": chi.modulus, "values": list(chi.signs)}, {"discriminant": d}, [str(d)]


def _cmd_to_dirichlet(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    chi = characters.kronecker_to_dirichlet(d)
    gens = characters.unit_group_generators(chi.modulus)
    result = {
        "modulus": chi.modulus,
        "generators": list(gens),
        "values": list(chi.signs),
        "conductor": characters.conductor(chi),
    }
    text = [
        f"character mod {chi.modulus}, conductor {result['conductor']}",
        "generators: " + (" ".join(str(g) for g in gens) if gens else "(none)"),
        "values:     " + (" ".join(f"{s:+d}" for s in chi.signs) if chi.signs else "(none)"),
    ]
    return {"d": d}, result, text


def _cmd_class_group(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    group = forms.narrow_class_group(d)
    divisors = group.elementary_divisors
    result = {
        "order": group.order,
        "elementary_divisors": list(divisors),
        "classes": [[f.a, f.b, f.c] for f in group.elements],
    }
    text = [
        f"discriminant {d}: h+ = {group.order}, structure {_structure_name(divisors)}",
        "classes: " + " ".join(repr(f) for f in group.elements),
    ]
    return {"d": d}, result, text


def _cmd_genus_field(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    gf = genus.genus_field(d)
    result = {
        "strict_prime_discriminants": list(gf.strict_generators),
        "strict_radicands": list(gf.strict_radicands),
        "ordinary_radicands": list(gf.ordinary_radicands),
        "strict_degree": gf.strict_degree,
    }
    text = [
        "strict genus field: sqrt of " + " ".join(str(f) for f in gf.strict_radicands)
        + f"  (prime discriminants {list(gf.strict_generators)})",
        "ordinary genus field: sqrt of " + " ".join(str(r) for r in gf.ordinary_radicands),
    ]
    return {"d": d}, result, text


def _cmd_genus_chars(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    group = forms.narrow_class_group(d)
    factors = discriminants.factor_prime_discriminants(d).factors
    rows = []
    for f in group.elements:
        vec = genus.genus_character_vector(d, f)
        rows.append({"form": [f.a, f.b, f.c], "values": list(vec)})
    text = [f"discriminant {d}: h+ = {group.order}, genus characters at {list(factors)}"]
    for f, row in zip(group.elements, rows):
        text.append(f"{f!r}: " + " ".join(f"{v:+d}" for v in row["values"]))
    return {"d": d}, {"prime_discriminants": list(factors), "rows": rows}, text


def _cmd_odd_class(args):
    m = _guard_size(args.m, args.max_factor_bits, "m")
    ok = genus.odd_class_number(m)
    return {"m": m}, {"odd": ok}, [str(ok).lower()]


def _cmd_quartic_splittings(args):
    d = _guard_size(args.d, args.max_factor_bits, "d")
    pairs = genus.quartic_splitting_factorizations(d)
    result = {
        "pairs": [[s.d1, s.d2] for s in pairs],
        "count_with_trivial": len(pairs) + 1,
    }
    if pairs:
        text = [f"{s.d1} * {s.d2}" for s in pairs]
    else:
        text = ["(none)"]
    return {"d": d}, result, text


def _cmd_verify(args):
    if args.bound < 1:
        raise ValueError("--bound must be a positive integer")
    if args.bound > args.max_bound:
        raise ValueError(
            f"--bound {args.bound} exceeds the guard {args.max_bound}; pass --max-bound to raise it"
        )
    if args.jobs < 1:
        raise ValueError("--jobs must be a positive integer")
    runner = sweeps.SWEEPS[args.kind]
    result = runner(args.bound, jobs=args.jobs)
    payload = {
        "kind": args.kind,
        "bound": args.bound,
        "checked": result.checked,
        "failures": result.failures,
    }
    text = list(result.failures)
    text.append(
        f"verify {args.kind}: checked {result.checked} items, {len(result.failures)} failures"
    )
    print(f"elapsed {result.elapsed:.2f}s", file=sys.stderr)
    inputs = {"kind": args.kind, "bound": args.bound}
    return inputs, payload, text


_HANDLERS = {
    "is-fundamental": _cmd_is_fundamental,
    "disc-of-sqrt": _cmd_disc_of_sqrt,
    "disc-mul": _cmd_disc_mul,
    "factor": _cmd_factor,
    "kronecker": _cmd_kronecker,
    "splitting": _cmd_splitting,
    "char-table": _cmd_char_table,
    "conductor": _cmd_conductor,
    "to-kronecker": _cmd_to_kronecker,
    "to-dirichlet": _cmd_to_dirichlet,
    "class-group": _cmd_class_group,
    "genus-field": _cmd_genus_field,
    "genus-chars": _cmd_genus_chars,
    "odd-class": _cmd_odd_class,
    "quartic-splittings": _cmd_quartic_splittings,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record on stdout")
    common.add_argument(
        "--max-factor-bits",
        type=int,
        default=DEFAULT_MAX_FACTOR_BITS,
        metavar="B",
        help=f"size guard for factored inputs (default {DEFAULT_MAX_FACTOR_BITS} bits)",
    )
    common.add_argument(
        "--jobs", type=int, default=1, metavar="J", help="worker processes for sweeps"
    )

    parser = argparse.ArgumentParser(
        prog="quadgenus",
        description="exact genus theory of quadratic fields: discriminants, symbols, "
        "characters, class groups",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_text, configure):
        p = sub.add_parser(name, parents=[common], help=help_text)
        configure(p)
        return p

    add("is-fundamental", "test whether n is 1 or a fundamental discriminant",
        lambda p: p.add_argument("n", type=_int_arg))
    add("disc-of-sqrt", "discriminant of the field generated by sqrt(a)",
        lambda p: p.add_argument("a", type=_int_arg))
    add("disc-mul", "product of two discriminants in the discriminant group",
        lambda p: (p.add_argument("d1", type=_int_arg), p.add_argument("d2", type=_int_arg)))
    add("factor", "factor a discriminant into prime discriminants",
        lambda p: p.add_argument("d", type=_int_arg))
    add("kronecker", "Kronecker symbol (d/n)",
        lambda p: (p.add_argument("d", type=_int_arg), p.add_argument("n", type=_int_arg)))
    add("splitting", "splitting of the prime p in the field of discriminant d",
        lambda p: (p.add_argument("d", type=_int_arg), p.add_argument("p", type=_int_arg)))
    add("char-table", "all quadratic characters mod m with values on 1..m",
        lambda p: p.add_argument("m", type=_int_arg))

    def character_args(p):
        p.add_argument("m", type=_int_arg)
        p.add_argument(
            "values", type=_sign_list, nargs="?", default=(),
            help="comma-separated +1/-1 values on the canonical generators; "
            "put -- before a list that starts with -1",
        )

    add("conductor", "conductor of the character given by generator values", character_args)
    add("to-kronecker", "discriminant whose Kronecker symbol matches a primitive character",
        character_args)
    add("to-dirichlet", "Dirichlet character attached to the Kronecker symbol of d",
        lambda p: p.add_argument("d", type=_int_arg))
    add("class-group", "narrow class group of a fundamental discriminant",
        lambda p: p.add_argument("d", type=_int_arg))
    add("genus-field", "strict and ordinary genus fields of d",
        lambda p: p.add_argument("d", type=_int_arg))
    add("genus-chars", "genus character table on the narrow class group of d",
        lambda p: p.add_argument("d", type=_int_arg))
    add("odd-class", "does the field generated by sqrt(m) have odd class number",
        lambda p: p.add_argument("m", type=_int_arg))
    add("quartic-splittings", "coprime splittings of d attesting cyclic quartic extensions",
        lambda p: p.add_argument("d", type=_int_arg))

    def verify_args(p):
        p.add_argument("kind", choices=sorted(sweeps.SWEEPS))
        p.add_argument("--bound", type=_int_arg, required=True)
        p.add_argument(
            "--max-bound", type=int, default=DEFAULT_MAX_SWEEP_BOUND,
            help=f"guard on --bound (default {DEFAULT_MAX_SWEEP_BOUND})",
        )

    add("verify", "sweep a theorem over all discriminants up to a bound", verify_args)
    return parser


def _emit(args, command: str, inputs: dict, result: dict, status: str, stream) -> None:
    if getattr(args, "json", False):
        record = {"command": command, "inputs": inputs, "result": result, "status": status}
        print(json.dumps(record, sort_keys=True, separators=(",", ":")), file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handler = _HANDLERS[args.command]
    try:
        inputs, result, text = handler(args)
    except ValueError as exc:
        if getattr(args, "json", False):
            _emit(args, args.command, {}, {"error": str(exc)}, "invalid-input", sys.stdout)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        if getattr(args, "json", False):
            _emit(args, args.command, {}, {"error": str(exc)}, "internal-check-failed", sys.stdout)
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _emit(args, args.command, inputs, result, "ok", sys.stdout)
    else:
        for line in text:
            print(line)
    if args.command == "verify" and result["failures"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
