"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; the lines are printed together in the
terminal summary (see conftest.py).
"""
import json
import time

import pytest

from npure import cli, endo, localization as loc, purity, spectrum, suite, zint
from npure.ideals import all_ideals, generate_ideal
from npure.rings import build_ring, elem_pow, quotient

LINES: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    LINES[number] = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    assert ok, LINES[number]


def by_check(report, *ids):
    return [c for c in report["checks"] if c["checkId"] in ids]


def failures(report, *ids):
    return [c for c in by_check(report, *ids) if c["status"] == "fail"]


@pytest.fixture(scope="session")
def report64():
    return suite.run_suite(suite.build_corpus(64), suite.SuiteConfig(max_ring_size=64))


@pytest.fixture(scope="session")
def report32():
    checks = ("ThmIII", "ThmIV", "PropIII", "LemII", "ThmV-endo", "LemVIIb-endo")
    return suite.run_suite(suite.build_corpus(32), suite.SuiteConfig(max_ring_size=32, checks=checks))


def test_01_example_finite_half():
    t0 = time.perf_counter()
    R = build_ring("zmod:12")
    p, q = generate_ideal(R, [2]), generate_ideal(R, [3])
    L = loc.localize(loc.one_plus_ideal(p))
    Rp, _ = quotient(R, [2])
    got = (purity.is_pure(q), purity.is_pure(p), purity.is_npure(p), sorted(L.kernel.members),
           len(spectrum.compute_spectrum(L.quotient).primes), not L.image(p).is_zero,
           Rp.size, len(all_ideals(Rp)))
    elapsed = time.perf_counter() - t0
    want = (True, False, True, [0, 4, 8], 1, True, 2, 2)
    record(1, "Z/12 localization example", got == want and elapsed < 1, f"{elapsed:.3f}s")


def test_02_example_integer_half():
    t0 = time.perf_counter()
    bad = []
    for p in zint.primes_upto(50):
        for e in (1, 2, 3):
            ex = zint.localized_example(p ** e)
            oracle = zint.brute_force_spec_localized(p ** e, max(p, 50))
            flag_ok = (ex.flag == "quotient is a field, localization is not") == (e == 1)
            if ex.primes != [0, p] or oracle != ex.primes or not flag_ok:
                bad.append(p ** e)
    elapsed = time.perf_counter() - t0
    record(2, "spectrum of Z localized at 1 + p^e Z", not bad and elapsed < 1,
           f"{elapsed:.3f}s, bad={bad}")


def test_03_five_criteria_agree(report64, corpus64):
    disagreements = [(str(spec), I.elements) for spec, R in corpus64 for I in all_ideals(R)
                     if len(set(purity.purity_verdict(I).npure)) != 1]
    checks = by_check(report64, "T2.6")
    ideals = report64["corpus"]["idealCount"]
    ok = not disagreements and not failures(report64, "T2.6") and len(checks) == ideals
    record(3, "five N-purity criteria agree at cap 64", ok,
           f"{ideals} ideals, {len(disagreements)} disagreements")


def test_04_localization_biconditionals(report32, corpus32):
    bad = []
    for _, R in corpus32:
        for I in all_ideals(R):
            npure, pure = purity.is_npure(I), purity.is_pure(I)
            if any(v != npure for v in loc.check_theorem_iii(I).details.values()):
                bad.append(("III", I))
            if any(v != pure for v in loc.check_theorem_iv(I).details.values()):
                bad.append(("IV", I))
    fails = failures(report32, "ThmIII", "ThmIV")
    record(4, "localization criteria iff (N-)purity at cap 32", not bad and not fails,
           f"{len(by_check(report32, 'ThmIII', 'ThmIV'))} verdicts")


def test_05_kernel_intersections(report64):
    ids = ("PropII", "CorIV", "ThmII", "LemIII", "PropIV", "LemIV", "LemV", "LemVI")
    fails = failures(report64, *ids)
    present = {c["checkId"] for c in by_check(report64, *ids)}
    record(5, "kernel-intersection results at cap 64", not fails and present == set(ids),
           f"{len(by_check(report64, *ids))} verdicts, {len(fails)} failures")


def test_06_transfer(report32):
    fails = failures(report32, "PropIII", "LemII")
    n_hom = len(by_check(report32, "LemII"))
    record(6, "transfer along J and homomorphisms at cap 32", not fails and n_hom > 0,
           f"{len(by_check(report32, 'PropIII'))} PropIII, {n_hom} LemII verdicts")


def test_07_witnesses(report64, corpus64):
    count = 0
    for _, R in corpus64:
        for I in all_ideals(R):
            if purity.is_npure(I):
                n, b = purity.uniform_exponent_witness(I)
                assert all(R.times(elem_pow(R, a, n), R.minus(R.one, b)) == R.zero for a in I)
                a = purity.principal_radical_witness(I)
                assert a in I
                count += 1
    R = build_ring("zmod:12")
    I = generate_ideal(R, [2])
    n, b = purity.uniform_exponent_witness(I)
    scan_ok = all(R.times(elem_pow(R, a, n), R.minus(R.one, b)) == R.zero for a in I)
    ok = ((n, b) <= (2, 4) and scan_ok and b in I
          and not failures(report64, "LemVIIa", "PropVI"))
    record(7, "uniform exponent and principal radical witnesses", ok,
           f"{count} N-pure ideals, Z/12 (2) -> (n={n}, b={b})")


def test_08_endomorphisms(report32):
    fails = failures(report32, "ThmV-endo", "LemVIIb-endo")
    skipped = [c["subject"] for c in by_check(report32, "ThmV-endo", "LemVIIb-endo")
               if c["status"] == "skipped"]
    frac = report32["totals"]["endoSkipFraction"]
    R = build_ring("zmod:12")
    sizes, comm = [], []
    for g in (3, 4):
        M = endo.module_of_ideal_power(generate_ideal(R, [g]), 1)
        maps = endo.all_endomorphisms(M)
        sizes.append(len(maps))
        comm.append(endo.endo_ring_is_commutative(M, maps))
    ok = not fails and frac <= 0.05 and sizes == [4, 3] and all(comm)
    record(8, "commutative endomorphism rings at cap 32", ok,
           f"skip fraction {frac:.3f}, skipped={skipped}, |End|={sizes}")


def test_09_structure(report64, corpus64):
    bad = [str(spec) for spec, R in corpus64
           if any(purity.is_npure(I) != purity.is_strongly_pi_regular(I) for I in all_ideals(R))]
    fails = failures(report64, "Struct", "PropV")
    record(9, "zero-dimensional structure at cap 64", not bad and not fails,
           f"{report64['corpus']['ringCount']} rings")


def test_10_determinism(tmp_path, capsys):
    outs = []
    for k in range(2):
        dest = tmp_path / f"run{k}.json"
        assert cli.main(["verify", "--max-ring-size", "16", "--format", "json", "--out", str(dest)]) == 0
        outs.append(suite.dumps(suite.strip_timing(json.loads(dest.read_text()))).encode())
    capsys.readouterr()
    record(10, "verify reports identical modulo timing", outs[0] == outs[1])
