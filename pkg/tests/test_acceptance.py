"""The fourteen acceptance criteria, each run as one or more named suites.

Every suite compares exact Scalars or integers.  Each criterion prints one
line "criterion N: PASS|FAIL ..." (visible under ``pytest -s`` or
``python3 tests/test_acceptance.py``) and asserts both the outcome and the
runtime limit.
"""

import sys
import time

import pytest

from perhall.suites import Options, reset_caches, run_suite

MINUTE = 60.0

# criterion -> (suites, runtime limit in seconds, description)
CRITERIA = {
    1: (["classical"], 1 * MINUTE, "classical Hall numbers, aut orders, Riedtmann-Peng"),
    2: (["green"], 5 * MINUTE, "Green's formula"),
    3: (["euler"], 1 * MINUTE, "hom - ext equals the Euler form"),
    4: (["closed-forms"], 10 * MINUTE, "closed-form derived Hall numbers against cone counts"),
    5: (["toen-rp"], 10 * MINUTE, "Toen symmetry and derived Riedtmann-Peng"),
    6: (["assoc-ext"], 10 * MINUTE, "associativity of the periodic extended algebra, m = 1, 2, 3"),
    7: (["assoc-odd", "assoc-odd-even-m"], 10 * MINUTE, "odd-periodic associativity, m = 2 counterexample"),
    8: (["triple-sums"], 5 * MINUTE, "the two triple sums agree for m = 3"),
    9: (["hom-split"], 10 * MINUTE, "periodic morphism counts split over cyclic sequences"),
    10: (["odd-counts"], 10 * MINUTE, "odd-periodic structure constants equal counted calH"),
    11: (["periodic-hom"], 5 * MINUTE, "periodic Hom counts as products of Hom and Ext"),
    12: (["straighten"], 10 * MINUTE, "straightening round trip, degree drop, full rank"),
    13: (["bridgeland", "low-period"], 10 * MINUTE, "presentation relations, low-period facts"),
    14: (["determinism"], 1 * MINUTE, "byte-identical tables"),
}


def run_criterion(n: int):
    suites, limit, text = CRITERIA[n]
    reset_caches()
    start = time.perf_counter()
    reports = [run_suite(s, Options()) for s in suites]
    elapsed = time.perf_counter() - start
    ok = all(r.ok for r in reports) and elapsed < limit
    detail = "; ".join(f"{r.suite} {r.instances} instances {r.failures} failures" for r in reports)
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({text}; {detail}; {elapsed:.1f}s of {limit:.0f}s)"
    return ok, reports, elapsed, limit, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, reports, elapsed, limit, line = run_criterion(n)
    with capsys.disabled():
        print("\n" + line)
    for r in reports:
        assert r.instances > 0, r.suite
        assert r.ok, r.to_json()
    assert elapsed < limit


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for *_, line in results:
        print(line)
    sys.exit(0 if all(r[0] for r in results) else 1)
