"""Command-line front end.

Exit codes: 0 success, 1 a theorem check failed, 2 usage or parse error,
3 a size cap was exceeded for a single-target command.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import endo, localization as loc, purity, spectrum, suite, zint
from .ideals import all_ideals, generate_ideal, radical
from .rings import (CapExceeded, DEFAULT_MAX_SIZE, RingError, build_ring, idempotents_set,
                    nilradical_set, parse_spec, units_set)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _names(R, elements) -> list[str]:
    return [R.names[a] for a in sorted(elements)]


def analyze(spec_text: str, max_size: int = DEFAULT_MAX_SIZE) -> dict:
    R = build_ring(parse_spec(spec_text), max_size)
    spec = spectrum.compute_spectrum(R)
    ideals = []
    for I in all_ideals(R):
        v = purity.purity_verdict(I)
        ideals.append({"members": list(I.elements), "label": I.label(), "pure": v.pure,
                       "npure": v.is_npure, "stronglyPiRegular": v.strongly_pi_regular,
                       "radical": list(radical(I).elements)})
    return {
        "ring": spec_text, "size": R.size, "elements": list(R.names),
        "units": _names(R, units_set(R)), "idempotents": _names(R, idempotents_set(R)),
        "nilradical": _names(R, nilradical_set(R)), "jacobson": _names(R, spec.jacobson.members),
        "ideals": ideals,
        "primes": [list(P.elements) for P in spec.primes],
        "maximals": [list(P.elements) for P in spec.maximals],
        "minimals": [list(P.elements) for P in spec.minimals],
        "reduced": spectrum.is_reduced(R), "zeroDimensional": spectrum.is_zero_dimensional(R),
        "gelfand": spectrum.is_gelfand(R), "mp": spectrum.is_mp_ring(R),
        "mid": list(spectrum.is_mid_ring(R)),
    }


def localize(spec_text: str, gens: list[int], max_size: int = DEFAULT_MAX_SIZE) -> dict:
    R = build_ring(parse_spec(spec_text), max_size)
    _check_gens(R, gens)
    I = generate_ideal(R, gens)
    S = loc.one_plus_ideal(I)
    L = loc.localize(S)
    t3 = loc.check_theorem_iii(I)
    t4 = loc.check_theorem_iv(I)
    return {
        "ring": spec_text, "ideal": list(I.elements), "multiplicativeSet": sorted(S.members),
        "kernel": list(L.kernel.elements), "quotientSize": L.quotient.size,
        "quotientPrimes": len(spectrum.compute_spectrum(L.quotient).primes),
        "imageOfIdealIsZero": L.image(I).is_zero,
        "pure": purity.is_pure(I), "npure": purity.is_npure(I),
        "theoremIII": {"status": t3.status, **t3.details},
        "theoremIV": {"status": t4.status, **t4.details},
    }


def endomorphisms(spec_text: str, gens: list[int], power: int, max_size: int = DEFAULT_MAX_SIZE,
                  max_carrier: int = endo.DEFAULT_MAX_CARRIER,
                  max_gens: int = endo.DEFAULT_MAX_GENS) -> dict:
    R = build_ring(parse_spec(spec_text), max_size)
    _check_gens(R, gens)
    I = generate_ideal(R, gens)
    try:
        M = endo.module_of_ideal_power(I, power, max_carrier, max_gens)
    except endo.CapSkip as exc:
        raise CapExceeded(str(exc)) from None
    maps = endo.all_endomorphisms(M)
    return {
        "ring": spec_text, "ideal": list(I.elements), "power": power,
        "carrier": list(M.carrier), "generators": list(M.gens),
        "count": len(maps), "commutative": endo.endo_ring_is_commutative(M, maps),
        "maps": [dict(zip(map(str, M.carrier), row)) for row in maps.tolist()],
    }


def zint_query(query: str, n: int) -> dict:
    if query == "purity":
        pure, npure = zint.z_purity(zint.ZIdeal(n))
        return {"n": n, "pure": pure, "npure": npure}
    if query == "spec-localized":
        ex = zint.localized_example(n)
        return {"n": n, "primes": ex.primes, "quotientIsField": ex.quotient_is_field,
                "localizationIsField": ex.localization_is_field, "flag": ex.flag}
    if query == "radical":
        f = zint.z_radical_kernel_facts(n)
        return {"n": n, "radical": f.radical, "kernel": f.kernel, "criterionIV": f.criterion_iv}
    raise UsageError(f"unknown zint query {query!r}")


def _check_gens(R, gens):
    bad = [g for g in gens if not 0 <= g < R.size]
    if bad:
        raise UsageError(f"generator(s) {bad} out of range for a ring of size {R.size}")


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict) and key != "maps":
            lines.append(f"{pad}{key}:")
            lines.append(_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(pad + "  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="npure", description="Ideal calculus of finite commutative rings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, default_size):
        p.add_argument("--max-ring-size", type=int, default=default_size)
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out")

    p = sub.add_parser("analyze", help="summary of one ring")
    p.add_argument("spec")
    common(p, DEFAULT_MAX_SIZE)

    p = sub.add_parser("localize", help="localization at 1 + I")
    p.add_argument("spec")
    p.add_argument("--ideal", type=_int_list, required=True)
    common(p, DEFAULT_MAX_SIZE)

    p = sub.add_parser("endo", help="endomorphism ring of an ideal power")
    p.add_argument("spec")
    p.add_argument("--ideal", type=_int_list, required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--max-endo-carrier", type=int, default=endo.DEFAULT_MAX_CARRIER)
    p.add_argument("--max-gens", type=int, default=endo.DEFAULT_MAX_GENS)
    common(p, DEFAULT_MAX_SIZE)

    p = sub.add_parser("zint", help="symbolic facts about ideals of Z")
    p.add_argument("query", choices=("purity", "spec-localized", "radical"))
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the theorem suite over the generated corpus")
    common(p, 64)
    p.add_argument("--max-endo-carrier", type=int, default=endo.DEFAULT_MAX_CARRIER)
    p.add_argument("--max-gens", type=int, default=endo.DEFAULT_MAX_GENS)
    p.add_argument("--checks", type=lambda s: tuple(t for t in s.split(",") if t))
    p.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "analyze":
            result = analyze(args.spec, args.max_ring_size)
        elif args.command == "localize":
            result = localize(args.spec, args.ideal, args.max_ring_size)
        elif args.command == "endo":
            if args.power < 1:
                raise UsageError("--power must be at least 1")
            result = endomorphisms(args.spec, args.ideal, args.power, args.max_ring_size,
                                   args.max_endo_carrier, args.max_gens)
        else:
            result = zint_query(args.query, args.n)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RingError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(json.dumps(result, indent=1) if args.format == "json" else _text(result), args.out)
    return EXIT_OK


def _verify(args) -> int:
    if args.max_ring_size < 2:
        print("error: --max-ring-size must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if args.checks:
        unknown = [c for c in args.checks if c not in suite.CHECK_IDS]
        if unknown:
            print(f"error: unknown check id(s) {unknown}", file=sys.stderr)
            return EXIT_USAGE
    config = suite.SuiteConfig(max_ring_size=args.max_ring_size,
                               max_endo_carrier=args.max_endo_carrier, max_gens=args.max_gens,
                               checks=args.checks, jobs=max(1, args.jobs))
    report = suite.run_suite(suite.build_corpus(args.max_ring_size), config)
    if args.format == "json":
        _emit(suite.dumps(report), args.out)
    else:
        _emit(suite.summary_table(report), args.out)
    print(suite.summary_table(report) if args.format == "json" else "", file=sys.stderr, end="")
    return EXIT_FAIL if report["totals"]["fail"] else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
