"""Acceptance criteria 1 to 11, each run as a seeded verification suite at zero tolerance.

Every criterion prints one ``criterion N: PASS|FAIL`` line.  Under pytest
the lines are collected and repeated in the terminal summary; running this
file directly prints them and exits non-zero if any criterion fails.
"""

import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from dct.suites import run_suite

SEED = 0

# (number, description, suite, trials, complexes)
CRITERIA = [
    (1, "d∘d = 0, 100 cochains per grade regime per complex", "d2", 100, None),
    (2, "de Rham class equals the image of the characteristic class, 100 cocycles per complex",
     "square", 100, None),
    (3, "flat, topological and lattice-change sequences are constructively exact, 50 per sequence per complex",
     "exactness", 50, None),
    (4, "on RP2 the flat-then-class composite is minus the Bockstein and hits the Z/2 generator",
     "bockstein", 20, ("RP2_6",)),
    (5, "H^k(Q) classes with integral periods match Hom(H_k, Z) in every degree of every bundled complex",
     "lemma28", 20, None),
    (6, "trivialize succeeds exactly when the class vanishes, exhaustive box plus 100 random per complex",
     "obstruction", 100, None),
    (7, "torsor axioms and equivariant projections, 100 pairs per complex, plus Aut(x) on S1",
     "torsor", 100, None),
    (8, "Hodge decomposition on 100 cochains and the right inverse on 50 lifts per complex",
     "hodge", 100, None),
    (9, "Leibniz identity for 100 random pairs on the torus", "leibniz", 100, None),
    (10, "Stokes and the projection cube for 50 cochains on S1xS1 and pt x S1", "stokes", 50, None),
    (11, "degree-2 section reports on a 20-element orbit and the pushforward holonomy 1/3",
     "degree2", 20, None),
]


def evaluate(number, description, suite, trials, complexes):
    start = time.perf_counter()
    result = run_suite(suite, trials, SEED, complexes)
    elapsed = time.perf_counter() - start
    verdict = "PASS" if result.passed else "FAIL"
    line = (f"criterion {number}: {verdict}  {description} "
            f"[{suite}, {result.checks} checks, {len(result.failures)} failed, {elapsed:.1f}s]")
    return result, line


@pytest.mark.parametrize("number, description, suite, trials, complexes", CRITERIA,
                         ids=[f"criterion-{c[0]}-{c[2]}" for c in CRITERIA])
def test_criterion(number, description, suite, trials, complexes):
    result, line = evaluate(number, description, suite, trials, complexes)
    print(line)
    ACCEPTANCE_LINES.append(line)
    first = result.failures[0] if result.failures else None
    assert result.passed, f"{line}\nfirst failure: {first}"
    assert result.checks > 0


if __name__ == "__main__":
    ok = True
    for criterion in CRITERIA:
        result, line = evaluate(*criterion)
        print(line, flush=True)
        ok &= result.passed
    sys.exit(0 if ok else 1)
