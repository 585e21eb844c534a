"""One check per acceptance criterion, each backed by a named ``verify`` suite."""

import time

import pytest

from retractive.suites import run_suite

CRITERIA = [
    (1, "presheaf equivalence round trips", "presheaf-roundtrip"),
    (2, "simplex category is the Grothendieck construction", "grothendieck"),
    (3, "cells represent fibres, abelian cells represent values", "yoneda"),
    (4, "homotopy orbits of free actions and of BZ/2", "hocolim"),
    (5, "linearisation adjunction and tensor compatibility", "linearisation"),
    (6, "pullback and collapse squares", "dagger"),
    (7, "(C, T) adjunction and counit homology isomorphism", "ct-adjunction"),
    (8, "pi1 from the loop group matches H1", "pi1"),
    (9, "loop group identities and twisted bundles", "loop-group"),
    (10, "finiteness certificates and cell counts", "finiteness"),
    (11, "Smith form and Moore complex agreement", "homological-core"),
]
LIMIT_SECONDS = 60
LINES: list[str] = []


@pytest.mark.parametrize("number,title,suite", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(number, title, suite):
    start = time.perf_counter()
    results = run_suite(suite)
    elapsed = time.perf_counter() - start
    failed = [r for r in results if not r.ok]
    ok = results and not failed and elapsed < LIMIT_SECONDS
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number:2d} [{suite}] {title}: "
            f"{len(results) - len(failed)}/{len(results)} properties, {elapsed:.1f}s")
    LINES.append(line)
    print(line)
    assert results, "suite produced no properties"
    assert not failed, "\n".join(r.line() for r in failed)
    assert elapsed < LIMIT_SECONDS, f"suite took {elapsed:.1f}s"
