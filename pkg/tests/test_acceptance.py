"""One test per acceptance criterion.

Each test records a PASS/FAIL line that the terminal summary prints.  All
checks are exact; the only tolerances are the wall-clock limits of
criterion 1 (10 s for n <= 4, 60 s for n = 5).
"""

import random
import time
from contextlib import contextmanager

import pytest

from conftest import FIXTURES, spaces_up_to
from topsep import catalog as cat
from topsep import verify as V
from topsep.classify import classify, t_kappa_xi
from topsep.cli import run
from topsep.core import from_preorder
from topsep.dsl import emit_space, load_space, parse_space
from topsep.enumeration import count_topologies, enumerate_topologies, preorders_by_brute_force

SMALL_LIMIT_S = 10.0
N5_LIMIT_S = 60.0
CATALOG_SAMPLES = 200
CATALOG_AXIOM_SAMPLES = 1000
SEED = 0

RESULTS: dict[str, tuple[bool, str, str]] = {}


@contextmanager
def criterion(key, title):
    info = {"detail": ""}
    try:
        yield info
    except BaseException:
        RESULTS[key] = (False, title, info["detail"] or "assertion failed")
        raise
    RESULTS[key] = (True, title, info["detail"])


def suite(name, max_n=4):
    entry = V.run_suite(name, max_n)
    assert entry.passed, entry.witness
    return entry


def test_c01_enumeration_counts():
    with criterion("1", "labelled counts 1,1,4,29,355 match the preorder oracle, n<=4 under 10 s") as info:
        start = time.perf_counter()
        counts = [count_topologies(n) for n in range(5)]
        elapsed = time.perf_counter() - start
        oracle = [
            len({frozenset(from_preorder(n, r).opens) for r in preorders_by_brute_force(n)})
            for n in range(5)
        ]
        info["detail"] = f"counts={counts}, oracle={oracle}, {elapsed:.2f}s"
        assert counts == [1, 1, 4, 29, 355] == oracle
        assert elapsed < SMALL_LIMIT_S


@pytest.mark.slow
def test_c01b_five_points():
    with criterion("1b", "n=5 gives 6942 labelled topologies under 60 s") as info:
        start = time.perf_counter()
        count = count_topologies(5)
        elapsed = time.perf_counter() - start
        info["detail"] = f"count={count}, {elapsed:.2f}s"
        assert count == 6942 and elapsed < N5_LIMIT_S


def test_c02_delta_topology_is_semi_regularization():
    with criterion("2", "tau_delta equals the semi-regularization on all 355 spaces with n=4") as info:
        spaces = list(enumerate_topologies(4))
        e = V._run("delta-semi-regularization", "n=4", V.delta_is_semi_regularization(spaces))
        info["detail"] = f"{e.checked}/{len(spaces)} spaces"
        assert e.passed and e.checked == 355, e.witness


def test_c03_locally_dense_subspaces():
    with criterion("3", "both subspace identities on every locally dense subset, n<=4") as info:
        e = suite("locally-dense-traces")
        info["detail"] = f"{e.checked} (space, subset) pairs"


def test_c04_tkx_equivalences():
    with criterion("4", "equivalences (i)-(vii) with kappa = n on every space n<=4") as info:
        checked = 0
        for s in spaces_up_to(4):
            for part, axiom, kappa, xi in V.TKX_TABLE:
                k = s.n if kappa == "all" else kappa
                assert classify(s, axiom) == t_kappa_xi(s, k, xi), (part, s)
                checked += 1
        info["detail"] = f"{checked} checks"


def test_c05_implication_diagram():
    with criterion("5", "no counterexample to any diagram edge for n<=4 or in the catalog") as info:
        e = suite("implication-diagram")
        info["detail"] = f"{e.checked} edge checks over {len(V.DIAGRAM_EDGES)} edges"


def test_c06_propositions():
    with criterion("6", "anti-compact, semi-regular, first-countable and T_third/T_quarter statements, n<=4") as info:
        names = ("anti-compact-kd", "semi-regular-kd-kc", "first-countable", "t-third-placement")
        entries = [suite(n) for n in names]
        info["detail"] = ", ".join(f"{n}={e.checked}" for n, e in zip(names, entries))


def test_c07_t_third_characterization():
    with criterion("7", "separation characterization on all 2^n subsets (n<=4) and 200 sets per family") as info:
        e = suite("t-third-characterization")
        rng = random.Random(SEED)
        for name in cat.FAMILY_NAMES:
            sw = cat.characterization_sweep(cat.DescribedSpace(name), CATALOG_SAMPLES, rng)
            assert sw.ok and sw.checked >= CATALOG_SAMPLES, (name, sw.failures[:1])
        info["detail"] = f"{e.checked} finite subsets, {CATALOG_SAMPLES} sets x {len(cat.FAMILY_NAMES)} families"


def test_c08_kd_permanence():
    with criterion("8", "kd passes to locally dense subspaces (n<=4) and sums (pairs n<=3)") as info:
        e = suite("kd-permanence")
        info["detail"] = f"{e.checked} checks"


def test_c09_maps_into_kd():
    with criterion("9", "continuous maps into kd spaces are super-closed and perfect, |X|,|Y|<=3") as info:
        e = suite("perfect-maps")
        info["detail"] = f"{e.checked} map checks"


def test_c10_catalog_examples():
    with criterion("10", "catalog verdicts match the stated examples") as info:
        lines = [(name, line) for name in cat.FAMILY_NAMES for line in cat.check_family(name)]
        bad = [(n, l.label, l.expected, l.got) for n, l in lines if not l.ok]
        info["detail"] = f"{len(lines) - len(bad)}/{len(lines)} verdict lines"
        assert not bad, bad


def test_c11_closure_axioms():
    with criterion("11", "closure axioms for all 7 operators, every subset n<=4 and 1000 catalog sets") as info:
        e = suite("closure-axioms")
        rng = random.Random(SEED)
        for name in cat.FAMILY_NAMES:
            sw = cat.closure_axiom_sweep(cat.DescribedSpace(name), CATALOG_AXIOM_SAMPLES, rng)
            assert sw.ok and sw.checked == CATALOG_AXIOM_SAMPLES, (name, sw.failures[:1])
        info["detail"] = f"{e.checked} (space, operator) pairs, {CATALOG_AXIOM_SAMPLES} sets x {len(cat.FAMILY_NAMES)} families"


def test_c12_cli(capsys):
    with criterion("12", "round trip on the corpus, verify-paper --max-n 4 exits 0, corrupted fixtures exit nonzero") as info:
        valid = [p for p in sorted(FIXTURES.glob("*.space")) if not p.name.startswith("corrupted")]
        for p in valid:
            doc = load_space(str(p))
            assert parse_space(emit_space(doc)) == doc, p.name
        status = run(["verify-paper", "--max-n", "4"])
        corrupted = {p.name: run(["classify", str(p)]) for p in sorted(FIXTURES.glob("corrupted*.space"))}
        capsys.readouterr()
        info["detail"] = f"{len(valid)} documents, verify-paper={status}, corrupted={sorted(corrupted.values())}"
        assert status == 0
        assert corrupted and all(code != 0 for code in corrupted.values())
