"""Corpus generation and the theorem-verification harness."""
from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from . import endo, localization as loc, purity, spectrum
from .ideals import Ideal, all_ideals, radical
from .rings import (FiniteRing, PolyQuot, Product, Quotient, RingSpec, Zmod, build_ring,
                    crt_map, identity_hom, nilradical_set, parse_spec, product_projections,
                    quotient)
from .verdict import FAIL, PASS, SKIPPED, STATUSES, VACUOUS, Verdict, subject, verdict
from . import zint

CHECK_IDS = (
    "T2.6", "PropII", "CorI", "ThmII", "ThmIII", "ThmIV", "CorII", "CorIII", "CorIV",
    "LemII", "LemIII", "PropIV", "LemIV", "LemV", "LemVI", "PropIII", "PropV", "PropVI",
    "LemVIIa", "ThmV-endo", "LemVIIb-endo", "Struct", "Mid", "ExampleI",
)


@dataclass(frozen=True)
class SuiteConfig:
    max_ring_size: int = 64
    max_endo_carrier: int = endo.DEFAULT_MAX_CARRIER
    max_gens: int = endo.DEFAULT_MAX_GENS
    checks: tuple | None = None
    jobs: int = 1

    def wants(self, check_id: str) -> bool:
        return self.checks is None or check_id in self.checks

    def echo(self) -> dict:
        out = asdict(self)
        out["checks"] = list(self.checks) if self.checks is not None else None
        out.pop("jobs")
        return out


# --------------------------------------------------------------------------
# Corpus
# --------------------------------------------------------------------------


def _monic_polys(p: int, degree: int) -> list[tuple]:
    out = []
    for i in range(p ** degree):
        low = [(i // p ** k) % p for k in range(degree)]
        out.append(tuple(low) + (1,))
    return out


def base_specs(cap: int) -> list[RingSpec]:
    specs: list[RingSpec] = [Zmod(n) for n in range(2, cap + 1)]
    for p in (2, 3):
        for d in (2, 3):
            if p ** d <= cap:
                specs.extend(PolyQuot(p, f) for f in _monic_polys(p, d))
    for m in range(2, cap + 1):
        for k in range(m, cap // m + 1):
            specs.append(Product(Zmod(m), Zmod(k)))
    return specs


def _table_key(R: FiniteRing) -> tuple:
    return (R.size, R.zero, R.one, R.add.tobytes(), R.mul.tobytes())


def corpus_rings(cap: int) -> list[tuple[RingSpec, FiniteRing]]:
    """Deterministic corpus of (spec, ring), deduplicated by identical tables."""
    if cap < 2:
        raise ValueError("corpus size cap must be at least 2")
    seen: set = set()
    out: list = []

    def admit(spec, R):
        key = _table_key(R)
        if key not in seen:
            seen.add(key)
            out.append((spec, R))

    bases = []
    for spec in base_specs(cap):
        R = build_ring(spec, cap)
        bases.append((spec, R))
        admit(spec, R)
    for spec, R in bases:
        for I in all_ideals(R):
            if I.is_zero:
                continue
            Q, _ = quotient(R, I.gens)
            admit(Quotient(spec, I.gens), Q)
    return out


def build_corpus(cap: int) -> list[RingSpec]:
    return [spec for spec, _ in corpus_rings(cap)]


# --------------------------------------------------------------------------
# Checks per ring
# --------------------------------------------------------------------------


def _guard(check_id: str, subj: str, fn: Callable, *args) -> list[Verdict]:
    """Run one check, timing it; exceptions become failing verdicts."""
    t0 = time.perf_counter()
    try:
        res = fn(*args)
    except Exception as exc:  # report, never crash the run
        res = Verdict(check_id, subj, FAIL, {"error": f"{type(exc).__name__}: {exc}"})
    ms = (time.perf_counter() - t0) * 1000
    res = res if isinstance(res, list) else [res]
    return [v.timed(ms / len(res)) for v in res]


def check_structure(R: FiniteRing) -> Verdict:
    spec = spectrum.compute_spectrum(R)
    fails = []
    primes, maxs, mins = set(spec.primes), set(spec.maximals), set(spec.minimals)
    if not primes == maxs == mins:
        fails.append({"primes": len(primes), "maximals": len(maxs), "minimals": len(mins)})
    if not spectrum.is_zero_dimensional(R):
        fails.append({"zeroDimensional": False})
    if not (spectrum.is_gelfand(R) and spectrum.is_mp_ring(R)):
        fails.append({"gelfand": spectrum.is_gelfand(R), "mp": spectrum.is_mp_ring(R)})
    if not nilradical_set(R) <= spec.jacobson.members:
        fails.append({"nilInJacobson": False})
    for P in spec.primes:
        if spectrum.lambda_set(P) != [P]:
            fails.append({"lambda": list(P.elements)})
    if not loc.smoke_units(R):
        fails.append({"localizationSmoke": False})
    return verdict("Struct", subject(R), fails)


def check_mid(R: FiniteRing) -> Verdict:
    pair = spectrum.is_mid_ring(R)
    fails = [] if pair[0] == pair[1] else [{"byAnnihilators": pair[0], "byKernels": pair[1]}]
    return verdict("Mid", subject(R), fails, details={"mid": list(pair)})


def canonical_homs(spec: RingSpec, R: FiniteRing):
    """Identity, every quotient projection, product projections, CRT splittings."""
    homs = [identity_hom(R)]
    for K in all_ideals(R):
        if K.is_zero:
            continue
        _, proj = quotient(R, K.gens)
        proj.label = f"R->R/{list(K.elements)}"
        homs.append(proj)
    if isinstance(spec, Product):
        A = build_ring(spec.left, R.size)
        B = build_ring(spec.right, R.size)
        homs.extend(product_projections(R, A, B))
    if isinstance(spec, Zmod):
        n = spec.n
        for m in range(2, n):
            k, r = divmod(n, m)
            if r == 0 and 2 <= m <= k and math.gcd(m, k) == 1:
                h = crt_map(n, m, k)
                # rebind to this ring object so ideals match
                homs.append(type(h)(R, h.codomain, h.map, label=f"crt {m}x{k}"))
    return homs


def check_lemma_ii_hom(phi, ideals: list[Ideal]) -> Verdict:
    """Lemma II for one hom, over every N-pure ideal of its domain."""
    results = [purity.check_lemma_ii(phi, I) for I in ideals]
    fails = [v.witness | {"ideal": v.subject} for v in results if v.status == FAIL]
    applicable = any(v.status == PASS for v in results)
    subj = subject(phi.domain, extra=f"hom={phi.label}")
    return verdict("LemII", subj, fails, applicable=applicable)


def check_corollary_ii_all(I: Ideal, ideals: list[Ideal]) -> Verdict:
    rad = radical(I)
    partners = [J for J in ideals if radical(J) == rad]
    results = [loc.check_corollary_ii(I, J) for J in partners]
    fails = [v.witness for v in results if v.status == FAIL]
    return verdict("CorII", subject(I.ring, I), fails,
                   applicable=any(v.status == PASS for v in results),
                   details={"partners": len(partners)})


def run_ring(spec_text: str, config: SuiteConfig) -> list[Verdict]:
    """Every requested check on one ring, in a fixed order."""
    spec = parse_spec(spec_text)
    R = build_ring(spec, max(config.max_ring_size, 1))
    ideals = all_ideals(R)
    out: list[Verdict] = []
    subj_r = subject(R)
    want = config.wants

    if want("Struct"):
        out += _guard("Struct", subj_r, check_structure, R)
    if want("Mid"):
        out += _guard("Mid", subj_r, check_mid, R)
    if want("LemVI"):
        out += _guard("LemVI", subj_r, purity.check_lemma_vi, R)
    if want("PropV"):
        out += _guard("PropV", subj_r, purity.check_proposition_v, R)
    if want("LemIII") or want("PropIV") or want("LemIV"):
        res = _guard("LemIII", subj_r, loc.check_gelfand_kernels, R)
        out += [v for v in res if want(v.check_id)]

    per_ideal = [
        ("T2.6", purity.check_characterizations),
        ("LemV", purity.check_lemma_v),
        ("CorIV", purity.check_corollary_iv),
        ("PropIII", purity.check_proposition_iii),
        ("PropVI", purity.check_proposition_vi),
        ("LemVIIa", purity.check_uniform_exponent),
        ("PropII", loc.check_proposition_ii),
        ("CorI", loc.check_corollary_i),
        ("ThmII", loc.check_theorem_ii),
        ("ThmIII", loc.check_theorem_iii),
        ("ThmIV", loc.check_theorem_iv),
        ("CorIII", loc.check_corollary_iii),
    ]
    for I in ideals:
        subj_i = subject(R, I)
        for check_id, fn in per_ideal:
            if want(check_id):
                out += _guard(check_id, subj_i, fn, I)
        if want("CorII"):
            out += _guard("CorII", subj_i, check_corollary_ii_all, I, ideals)
        if want("ThmV-endo"):
            out += _guard("ThmV-endo", subj_i, endo.check_pure_endo, I,
                          config.max_endo_carrier, config.max_gens)
        if want("LemVIIb-endo"):
            out += _guard("LemVIIb-endo", subj_i, endo.check_principal_endo, I,
                          config.max_endo_carrier, config.max_gens)

    if want("LemII"):
        for phi in canonical_homs(spec, R):
            out += _guard("LemII", subject(R, extra=f"hom={phi.label}"),
                          check_lemma_ii_hom, phi, ideals)
    return out


# --------------------------------------------------------------------------
# Example I
# --------------------------------------------------------------------------


def example_i_facts() -> dict:
    """The finite (Z/12) and symbolic (Z) halves of the worked example."""
    from .ideals import generate_ideal
    R = build_ring(Zmod(12))
    p = generate_ideal(R, [2])
    q = generate_ideal(R, [3])
    L = loc.localize(loc.one_plus_ideal(p))
    Rp, _ = quotient(R, p.gens)
    finite = {
        "qPure": purity.is_pure(q),
        "pPure": purity.is_pure(p),
        "pNPure": purity.is_npure(p),
        "kernel": sorted(L.kernel.members),
        "quotientPrimes": len(spectrum.compute_spectrum(L.quotient).primes),
        "imageOfPNonzero": not L.image(p).is_zero,
        "residueFieldSize": Rp.size,
        "residueIsField": len(all_ideals(Rp)) == 2,
    }
    integer = []
    for pr in zint.primes_upto(50):
        for e in (1, 2, 3):
            ex = zint.localized_example(pr ** e)
            oracle = zint.brute_force_spec_localized(pr ** e, max(pr, 50))
            integer.append({"n": pr ** e, "p": pr, "e": e, "primes": ex.primes,
                            "oracle": oracle, "flag": ex.flag})
    return {"finite": finite, "integer": integer}


def check_example_i() -> Verdict:
    facts = example_i_facts()
    f = facts["finite"]
    expected = {"qPure": True, "pPure": False, "pNPure": True, "kernel": [0, 4, 8],
                "quotientPrimes": 1, "imageOfPNonzero": True, "residueFieldSize": 2,
                "residueIsField": True}
    fails = [{"fact": k, "got": f[k], "want": v} for k, v in expected.items() if f[k] != v]
    for row in facts["integer"]:
        want_flag = "quotient is a field, localization is not" if row["e"] == 1 else ""
        if row["primes"] != [0, row["p"]] or row["oracle"] != row["primes"] or row["flag"] != want_flag:
            fails.append(row)
    return verdict("ExampleI", "zmod:12 and Z", fails)


# --------------------------------------------------------------------------
# Report
# --------------------------------------------------------------------------


def _run_ring_text(args) -> list[dict]:
    spec_text, config = args
    return [v.to_json() for v in run_ring(spec_text, config)]


def run_suite(corpus: Iterable[RingSpec], config: SuiteConfig = SuiteConfig()) -> dict:
    """Run every applicable check on every ring and assemble the JSON report."""
    specs = [str(s) for s in corpus]
    jobs = [(s, config) for s in specs]
    if config.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            per_ring = list(pool.map(_run_ring_text, jobs, chunksize=1))
    else:
        per_ring = [_run_ring_text(j) for j in jobs]
    checks = [c for ring_checks in per_ring for c in ring_checks]
    if specs and config.wants("ExampleI"):
        checks += [v.to_json() for v in _guard("ExampleI", "zmod:12 and Z", check_example_i)]

    ideal_count = sum(len(all_ideals(build_ring(parse_spec(s), max(config.max_ring_size, 1))))
                      for s in specs)
    by_check: dict = {}
    totals = {s: 0 for s in STATUSES}
    for c in checks:
        totals[c["status"]] += 1
        by_check.setdefault(c["checkId"], {s: 0 for s in STATUSES})[c["status"]] += 1
    endo_ids = ("ThmV-endo", "LemVIIb-endo")
    attempted = sum(by_check.get(i, {}).get(PASS, 0) + by_check.get(i, {}).get(FAIL, 0)
                    + by_check.get(i, {}).get(SKIPPED, 0) for i in endo_ids)
    skipped = sum(by_check.get(i, {}).get(SKIPPED, 0) for i in endo_ids)
    return {
        "config": config.echo(),
        "corpus": {"ringCount": len(specs), "idealCount": ideal_count, "rings": specs},
        "checks": checks,
        "totals": {
            "instances": len(checks),
            **totals,
            "byCheck": dict(sorted(by_check.items())),
            "endoSkipFraction": (skipped / attempted) if attempted else 0.0,
            "failures": [c for c in checks if c["status"] == FAIL],
        },
    }


def strip_timing(report: dict) -> dict:
    out = json.loads(json.dumps(report))
    for c in out["checks"]:
        c.pop("elapsedMs", None)
    for c in out["totals"]["failures"]:
        c.pop("elapsedMs", None)
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True, default=_json_default)


def _json_default(obj):
    import numpy as np
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    raise TypeError(f"not serializable: {type(obj).__name__}")


def summary_table(report: dict) -> str:
    rows = [f"{'check':<14}{'pass':>8}{'fail':>8}{'skipped':>9}{'vacuous':>9}"]
    for cid, t in report["totals"]["byCheck"].items():
        rows.append(f"{cid:<14}{t[PASS]:>8}{t[FAIL]:>8}{t[SKIPPED]:>9}{t[VACUOUS]:>9}")
    tot = report["totals"]
    rows.append(f"{'total':<14}{tot[PASS]:>8}{tot[FAIL]:>8}{tot[SKIPPED]:>9}{tot[VACUOUS]:>9}")
    corpus = report["corpus"]
    rows.append(f"rings: {corpus['ringCount']}  ideals: {corpus['idealCount']}")
    return "\n".join(rows)
