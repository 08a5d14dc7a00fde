"""The nine acceptance criteria, each with its time budget.

Each test appends one row to the acceptance table printed at the end of the
pytest run (see conftest.py) and prints its own PASS/FAIL line.
"""

import io
import math
import time
from contextlib import redirect_stdout

import pytest

from vermahowe import cli
from vermahowe.braid import braid_relations_report, inverse_report, yang_baxter_report
from vermahowe.gtbasis import (
    casimir_check,
    det_consistency_check,
    infbraid_relations_check,
    patterns,
    random_det_monomials,
)
from vermahowe.lkb import lkb_basis, simplicity_report
from vermahowe.braid import Partition
from vermahowe.qgroup import (
    certified_hw_dimension,
    commuting_actions_report,
    duality_dimension_check,
    verify_kernel,
)
from vermahowe.scalar import SymbolicClassical, SymbolicQuantum
from vermahowe.verma import random_monomials


def _distinct(draws, count):
    seen = list(dict.fromkeys(draws))
    assert len(seen) >= count
    return seen[:count]


def _record(log, name, ok, secs, limit, detail=""):
    ok = ok and (limit is None or secs < limit)
    budget = "" if limit is None else f" (budget {limit:.0f}s)"
    print(f"{'PASS' if ok else 'FAIL'}: {name} in {secs:.1f}s{budget} {detail}")
    log.append((name, ok, secs, detail + budget))
    return ok


def test_1_lkb_ranks(acceptance_log):
    t = time.perf_counter()
    bad = []
    for n in range(2, 7):
        K = SymbolicQuantum(n)
        for l in range(5):
            space = lkb_basis(n, l, None, K)
            verify_kernel(space.basis, K)
            want = math.comb(n + l - 2, l)
            # independent basis is a lower bound; a numeric kernel caps it
            if space.dim != want or certified_hw_dimension(n, l, K, seed=n * 7 + l) != want:
                bad.append((n, l, space.dim))
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "1 LKB ranks", not bad, secs, 120, f"mismatches={bad}")


def test_2_braid_relations_yang_baxter(acceptance_log):
    t = time.perf_counter()
    K = SymbolicQuantum(3)
    reps = [braid_relations_report(3, 2, K), yang_baxter_report(2, K), inverse_report(3, SymbolicQuantum(2))]
    secs = time.perf_counter() - t
    checked = sum(r.checked for r in reps)
    assert _record(acceptance_log, "2 colored braid relations / Yang-Baxter / inverse",
                   all(r.ok for r in reps), secs, 300, f"checked={checked}")


def test_3_commuting_actions(acceptance_log):
    t = time.perf_counter()
    ok, checked = True, 0
    for n in (2, 3, 4):
        sample = _distinct(random_monomials(2024 + n, n, 400), 200)
        for K in (SymbolicQuantum(n), SymbolicClassical(n)):
            rep = commuting_actions_report(n, sample, K)
            ok = ok and rep.ok
            checked += rep.checked
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "3 commuting actions", ok, secs, None, f"checked={checked}")


@pytest.mark.slow
def test_4_casimir_eigenvalues(acceptance_log):
    t = time.perf_counter()
    bad, count = [], 0
    for n in (2, 3, 4):
        K = SymbolicClassical(n)
        for p in patterns(n, 3, 2):
            for res in casimir_check(p, K):
                count += 1
                if not res.ok:
                    bad.append((str(p), res.k))
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "4 Casimir eigenvalues", not bad, secs, 600,
                   f"checked={count} failures={len(bad)}")


def test_5_duality_dimensions(acceptance_log):
    t = time.perf_counter()
    ok = True
    for n in range(2, 7):
        rep = duality_dimension_check(n, 6, SymbolicQuantum(n), seed=n, l_max=4)
        ok = ok and rep.ok and len(rep.identity_rows) == 7 and len(rep.kernel_rows) == 5
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "5 duality dimension identities", ok, secs, None)


def test_6_infinitesimal_braids(acceptance_log):
    t = time.perf_counter()
    ok, checked = True, 0
    for n in (2, 3, 4):
        rep = infbraid_relations_check(n, _distinct(random_monomials(77 + n, n, 400), 200), SymbolicClassical(n))
        ok = ok and rep.ok
        checked += rep.checked
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "6 infinitesimal braid suite", ok, secs, None, f"checked={checked}")


def test_7_simplicity(acceptance_log):
    t = time.perf_counter()
    cases = [(2, 1, None), (3, 1, None), (3, 2, None), (4, 2, None), (3, 2, Partition.full(3))]
    results = {}
    for n, l, S in cases:
        rep = simplicity_report(n, l, S, trials=3, seed=2025)
        results[(n, l, str(rep.partition))] = [tr.commutant for tr in rep.trials]
    secs = time.perf_counter() - t
    ok = all(v == [1, 1, 1] for v in results.values())
    assert _record(acceptance_log, "7 simplicity certificates", ok, secs, 600, str(results))


def test_8_determinant_basis(acceptance_log):
    t = time.perf_counter()
    ok, count = True, 0
    for n in (2, 3, 4):
        samples = _distinct(random_det_monomials(500 + n, n, 400, rmax=4, lmax=3), 100)
        count += len(samples)
        ok = ok and det_consistency_check(samples, SymbolicClassical(n)).ok
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "8 determinant basis consistency", ok, secs, None,
                   f"distinct samples={count}")


CLI_RUNS = [
    ["verify", "braid-relations", "--n", "3", "--l", "2"],
    ["verify", "braid-relations", "--n", "4", "--l", "1", "--colors", "1,2,2,1", "--mode", "specialized"],
    ["verify", "yang-baxter"],
    ["verify", "commuting-actions", "--samples", "30"],
    ["verify", "commuting-actions", "--n", "3", "--samples", "20", "--field", "quantum", "--mode", "specialized"],
    ["verify", "casimir", "--c-max", "2", "--r-max", "1"],
    ["verify", "infbraid", "--samples", "30"],
    ["verify", "duality", "--t-max", "4", "--l-max", "3"],
    ["simplicity", "--n", "3", "--l", "2", "--trials", "3"],
    ["simplicity", "--n", "4", "--l", "2", "--partition", "[1,2][3,4]", "--trials", "2"],
    ["matrix", "--n", "3", "--l", "2", "--word", "s1 s1 s2 s2", "--mode", "specialized"],
    ["dim", "--n", "5"],
]


def _run_cli(argv, path):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.run(argv + ["--output", str(path)])
    return code, buf.getvalue().encode(), path.read_bytes()


def test_9_cli_reproducibility(acceptance_log, tmp_path):
    t = time.perf_counter()
    bad = []
    for i, argv in enumerate(CLI_RUNS):
        argv = argv + ["--seed", str(40 + i)]
        first = _run_cli(argv, tmp_path / f"a{i}.json")
        second = _run_cli(argv, tmp_path / f"b{i}.json")
        if first != second or first[0] != 0:
            bad.append(" ".join(argv))
    secs = time.perf_counter() - t
    assert _record(acceptance_log, "9 CLI reproducibility", not bad, secs, None,
                   f"runs={len(CLI_RUNS)} differing={bad}")
