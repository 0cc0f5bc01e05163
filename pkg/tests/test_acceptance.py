"""Acceptance criteria, one test per criterion (two for criterion 6).

Each test records a PASS/FAIL line; pytest prints them in an "acceptance criteria"
section at the end of the run. ``python tests/test_acceptance.py`` runs just this file.
"""

import subprocess
import sys
import time
from pathlib import Path

import numpy as np

from conftest import ACCEPTANCE, FIXTURE_WORD, symbols_of
from plactic import properties as props
from plactic.bst import canopy, complementary, psylv, psylvsharp
from plactic.core import parse_identity
from plactic.identities import SearchBounds, canonical_identity, check_identity, enumerate_candidates, shortest_identity_search
from plactic.monoid import ALL_MONOIDS, MonoidId, equivalent, psymbol

ROOT = Path(__file__).resolve().parents[1]


def record(key, ok, detail):
    ACCEPTANCE[key] = (bool(ok), detail)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
    return ok


def classes(*texts):
    return {canonical_identity(parse_identity(t)) for t in texts}


# -- 1 -----------------------------------------------------------------------------

EXPECTED_OBJECTS = {
    "plac": ("rows", ((1, 1, 1, 2, 5), (3, 3, 5, 6), (6,))),
    "hypo": ("rows", ((1, 1, 1, 2), (3, 3, 5, 5), (6, 6))),
    "sylv": ("text", "5(2(1(1(1,.),.),5(3(3,.),.)),6(6,.))"),
    "sylvsharp": ("text", "3(1(.,1(.,1(.,2))),6(3(.,5(.,5)),6))"),
    "stal": ("columns", ((3, 2), (1, 3), (2, 1), (6, 2), (5, 2))),
    "taig": ("text", "5^2(2^1(1^3,3^2),6^2)"),
    "lps": ("columns", ((1, 3), (1, 3, 6), (1, 5), (2,), (5, 6))),
    "rps": ("columns", ((1, 1, 1, 3), (2, 3, 6), (5, 5), (6,))),
}


def test_criterion_1_fixtures():
    t0 = time.perf_counter()
    bad = []
    for m, (attr, want) in EXPECTED_OBJECTS.items():
        obj = psymbol(m, FIXTURE_WORD)
        got = obj.to_text() if attr == "text" else getattr(obj, attr)
        if got != want:
            bad.append(m)
    pair = psymbol("baxt", FIXTURE_WORD)
    if pair.left_tree.to_text() != EXPECTED_OBJECTS["sylvsharp"][1] or pair.right_tree.to_text() != EXPECTED_OBJECTS["sylv"][1]:
        bad.append("baxt")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    record("1", ok, f"P-symbols of 3613151265 for all nine monoids ({elapsed:.3f}s; mismatches: {bad or 'none'})")
    assert ok


# -- 2 -----------------------------------------------------------------------------

HYPO4 = classes(
    "xyxy=xyyx", "xyxy=yxxy", "xyxy=yxyx", "xyyx=yxxy", "xyyx=yxyx", "yxxy=yxyx", "xxyx=xyxx"
)
TABLE = {
    # monoid: (max length searched, {length: expected survivor classes})
    "hypo": (4, {4: HYPO4}),
    "sylv": (4, {4: classes("xyxy=yxxy")}),
    "sylvsharp": (4, {4: classes("yxyx=yxxy")}),
    "stal": (3, {3: classes("xyx=yxx")}),
    "taig": (3, {3: classes("xyx=yxx")}),
    "baxt": (6, {6: classes("yxxyxy=yxyxxy", "xyxyxy=xyyxxy")}),
    "plac": (4, {}),
    "lps": (4, {}),
    "rps": (4, {}),
}
ESCALATED = SearchBounds(4, 5)


def test_criterion_2_table():
    bounds = SearchBounds(3, 4, True)
    failures, notes, slowest = [], [], 0.0
    for m, (max_len, expected) in TABLE.items():
        t0 = time.perf_counter()
        res = shortest_identity_search(m, max_len, bounds)
        for n in range(1, max_len + 1):
            got = set(res.survivors[n])
            spurious = got - expected.get(n, set())
            if spurious:
                # escalate before declaring failure
                again = {i for i in spurious if not check_identity(m, i, ESCALATED).found}
                notes.append(f"{m}: {len(spurious) - len(again)} escalated refutations")
                got = (got - spurious) | again
            if got != expected.get(n, set()):
                failures.append(f"{m} length {n}: {sorted(map(str, got))}")
            if len(res.refuted[n]) + len(res.survivors[n]) != len(enumerate_candidates(n)):
                failures.append(f"{m} length {n}: candidates unaccounted for")
            if any(not cx.found for _, cx in res.refuted[n]):
                failures.append(f"{m} length {n}: refutation without witness")
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        if dt >= 60:
            failures.append(f"{m} took {dt:.1f}s")
    ok = not failures
    detail = f"shortest-identity table at (3,4,ε), slowest monoid {slowest:.2f}s"
    if notes:
        detail += "; " + "; ".join(notes)
    if failures:
        detail += "; " + "; ".join(failures)
    record("2", ok, detail)
    assert ok, failures


# -- 3 -----------------------------------------------------------------------------


def test_criterion_3_refutations():
    checks = [
        not equivalent("hypo", (1, 1, 2), (1, 2, 1)),
        not equivalent("hypo", (1, 1, 2), (2, 1, 1)),
        not equivalent("hypo", (2, 1, 2), (1, 2, 2)),
        not equivalent("sylv", (1, 2, 2, 2), (2, 1, 2, 2)),
        psylv((1, 2, 2, 2)).key() != psylv((2, 1, 2, 2)).key(),
    ]
    for text in ("xxy=xyx", "xxy=yxx"):
        lhs, rhs = [tuple(1 if c == "x" else 2 for c in side) for side in text.split("=")]
        checks.append(not equivalent("taig", lhs, rhs))
        v = check_identity("taig", parse_identity(text), SearchBounds(2, 1))
        checks.append(v.found and v.assignment == {"x": (1,), "y": (2,)})
    ok = all(checks)
    record("3", ok, f"{sum(checks)}/{len(checks)} published refutation instances reproduced")
    assert ok


# -- 4 -----------------------------------------------------------------------------


def _suites(bounds):
    yield "sylv left-cancellative", props.check_left_cancellative("sylv", bounds)
    yield "sylv# right-cancellative", props.check_right_cancellative("sylvsharp", bounds)
    for m in ("sylv", "sylvsharp", "baxt"):
        yield f"{m} sameeval", props.check_sameeval_lemma(m, bounds=bounds)
    for m in ALL_MONOIDS:
        yield f"{m} evaluation", props.check_evaluation_invariance(m, bounds)
        yield f"{m} congruence", props.check_congruence(m, bounds)
    for finer, coarser in (("sylv", "hypo"), ("stal", "taig"), ("baxt", "sylv"), ("baxt", "sylvsharp")):
        yield f"{finer}->{coarser}", props.check_refinement(finer, coarser, bounds)


def test_criterion_4_lemma_suites():
    failures, slowest, count = [], 0.0, 0
    for bounds in (SearchBounds(2, 3), SearchBounds(3, 3)):
        it = _suites(bounds)
        while True:
            t0 = time.perf_counter()
            try:
                name, verdict = next(it)
            except StopIteration:
                break
            dt = time.perf_counter() - t0
            slowest = max(slowest, dt)
            count += 1
            if verdict.found or dt >= 120:
                failures.append(f"{name} at rank {bounds.rank}")
    ok = not failures
    record("4", ok, f"{count - len(failures)}/{count} structural suites pass, slowest {slowest:.3f}s"
           + (f"; failed: {failures}" if failures else ""))
    assert ok


# -- 5 -----------------------------------------------------------------------------


def test_criterion_5_lps_freeness():
    t0 = time.perf_counter()
    v = props.check_free_submonoid("lps", [(2, 1), (1,)], 8)
    dt = time.perf_counter() - t0
    ok = not v.found and v.substitutions_tested == 511 and dt < 10
    record("5", ok, f"{v.substitutions_tested} block products of {{21, 1}} pairwise inequivalent in lps ({dt:.2f}s)")
    assert ok


# -- 6 -----------------------------------------------------------------------------


def test_criterion_6a_rps_rank_identities():
    t0 = time.perf_counter()
    results = {n: props.check_rps_rank_identity(n, SearchBounds(n, 3)) for n in (1, 2, 3)}
    dt = time.perf_counter() - t0
    ok = all(not v.found for v in results.values()) and dt < 60
    record("6a", ok, f"(xy)^(n+1) = (xy)^n yx unrefuted in rps at rank n for n = 1, 2, 3 ({dt:.2f}s)")
    assert ok


def test_criterion_6b_rps_shorter_variant_refuted():
    v = props.check_rps_rank_identity(2, SearchBounds(2, 3), exponent=1)
    ok = v.found
    record("6b", ok, "(xy)^2 = (xy)yx refuted in rps at rank 2, maxlen 3: "
           + ("witness " + str(v.assignment) if ok else f"no counterexample among {v.substitutions_tested}"))
    assert ok, "no counterexample to (xy)^2 = (xy)yx in rps at rank 2"


# -- 7 -----------------------------------------------------------------------------


def test_criterion_7_plactic():
    t0 = time.perf_counter()
    rank2 = props.check_plactic_adian("plac2", SearchBounds(2, 3))
    rank3 = props.check_plactic_adian("plac3", SearchBounds(3, 3))
    pq = props.check_plac3_pq_identity(SearchBounds(3, 2))
    dt = time.perf_counter() - t0
    sound = rank3.found and not equivalent("plac", rank3.lhs_word, rank3.rhs_word)
    ok = not rank2.found and sound and not pq.found and dt < 300
    record("7", ok, f"Adian unrefuted at rank 2, refuted at rank 3 by {rank3.assignment if rank3.found else None}, "
           f"pqppq = pqqpq unrefuted at rank 3 ({dt:.2f}s)")
    assert ok


# -- 8 -----------------------------------------------------------------------------


def test_criterion_8_fuzz():
    rng = np.random.default_rng(20240607)
    n_words = 10_000
    t0 = time.perf_counter()
    failures = []
    for m in ALL_MONOIDS:
        lengths = rng.integers(0, 21, size=n_words)
        ranks = rng.integers(1, 9, size=n_words)
        for n, r in zip(lengths, ranks):
            w = tuple(int(a) for a in rng.integers(1, r + 1, size=n))
            obj = psymbol(m, w)
            if not obj.is_valid() or symbols_of(obj) != sorted(w):
                failures.append((m.value, w))
                break
            if m is MonoidId.BAXT and not complementary(canopy(psylvsharp(w)), canopy(psylv(w))):
                failures.append((m.value, w))
                break
    dt = time.perf_counter() - t0
    ok = not failures and dt < 60
    record("8", ok, f"{n_words} random words per object type: invariants, canopies, evaluations ({dt:.1f}s)"
           + (f"; first failure {failures[0]}" if failures else ""))
    assert ok


# -- 9 -----------------------------------------------------------------------------


def _batch_run(manifest):
    cmd = [sys.executable, "-m", "plactic", "batch", str(manifest), "--format", "structured", "--jobs", "2"]
    return subprocess.run(cmd, capture_output=True, cwd=ROOT, check=False).stdout


def test_criterion_9_determinism():
    manifest = ROOT / "manifests" / "acceptance.txt"
    first = _batch_run(manifest)
    second = _batch_run(manifest)
    ok = bool(first) and first == second
    record("9", ok, f"two batch runs of {manifest.name}: {len(first)} bytes, identical={first == second}")
    assert ok


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s"]))
