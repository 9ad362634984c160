"""Acceptance suite: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; the whole suite policy is zero tolerance on boolean flags.
"""

import time

import numpy as np
import pytest

import ringlab as rl
from ringlab import structure
from ringlab.decompositions import DIAGRAM_EDGES, ELEMENT_PREDICATES
from ringlab.verify import (
    CATALOG,
    VerifyContext,
    axiom_suite,
    check_catalog_entry,
    run_all,
    run_check,
)


def _announce(criterion: str, detail: str = "") -> None:
    print(f"ACCEPTANCE {criterion}: PASS {detail}".rstrip())


def test_criterion_01_example_matrix_reproduces_quickly():
    t0 = time.monotonic()
    ctx = VerifyContext()
    asserted = [e for e in CATALOG if e.expected]
    assert len(asserted) == 11
    for entry in asserted:
        result = check_catalog_entry(ctx, entry)
        assert result.status == "pass", (entry.id, result.details)
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"example matrix took {elapsed:.1f}s"
    _announce("criterion-01", f"eleven flag pairs in {elapsed:.1f}s")


def test_criterion_02_matrix_field_scan():
    t0 = time.monotonic()
    result = run_check("L-2.33")
    assert result.status == "pass", result.details
    elapsed = time.monotonic() - t0
    assert elapsed < 300.0, f"field scan took {elapsed:.1f}s"
    _announce("criterion-02", f"q-scan plus 3x3 cases in {elapsed:.1f}s")


def test_criterion_03_structure_theorem_equivalence():
    assert len(CATALOG) >= 25
    result = run_check("T-2.36")
    assert result.status == "pass", result.details
    assert sum(1 for d in result.details if d.startswith("ok")) == len(CATALOG)
    _announce("criterion-03", f"four-clause criterion on {len(CATALOG)} rings")


def test_criterion_04_construction_invariance():
    for cid in ("C-2.11", "C-2.13"):
        result = run_check(cid)
        assert result.status == "pass", (cid, result.details)
    _announce("criterion-04", "extension and truncation invariance incl. 4x4 frame")


def test_criterion_05_product_laws():
    for cid in ("P-2.19", "P-2.21"):
        result = run_check(cid)
        assert result.status == "pass", (cid, result.details)
    _announce("criterion-05", "product implication and triple biconditional")


def test_criterion_06_triangular_law():
    result = run_check("P-2.25")
    assert result.status == "pass", result.details
    ctx = VerifyContext()
    assert ctx.gwnc("T(3,Z(2))") is True
    assert ctx.gwnc("T(3,Z(4))") is True
    assert ctx.gwnc("T(3,Z(3))") is False
    _announce("criterion-06", "T(3,-) positives and negative")


def test_criterion_07_group_ring_suite():
    for cid in ("L-3.2", "T-3.6", "L-3.1"):
        result = run_check(cid)
        assert result.status == "pass", (cid, result.details)
    _announce("criterion-07", "group-ring positives, negative, and implication")


def test_criterion_08_property_and_oracle_suites():
    checked = axiom_suite()
    assert len(checked) >= 20
    for cid in ("L-2.2", "L-2.27", "L-2.28", "L-2.29", "C-2.30"):
        result = run_check(cid)
        assert result.status == "pass", (cid, result.details)

    ctx = VerifyContext()
    for entry in CATALOG:
        ring = ctx.ring(entry.expression)
        flags = rl.classify(ring).flags
        for src, dst in DIAGRAM_EDGES:
            assert not flags[src] or flags[dst], (entry.expression, src, dst)

    # witness validity assertion pass
    witness_rings = [e.expression for e in CATALOG if ctx.ring(e.expression).card <= 300]
    assert witness_rings
    for expr in witness_rings:
        ring = ctx.ring(expr)
        for kind, predicate in ELEMENT_PREDICATES.items():
            for a in ring.elements():
                ok, w = predicate(ring, a)
                if ok:
                    rl.validate_witness(ring, a, kind, w)

    # radical definition cross-check, one- versus two-sided quasi-regularity
    for entry in CATALOG:
        ring = ctx.ring(entry.expression)
        if ring.card > 2000:
            continue
        jac = rl.jacobson(ring)
        umask = structure.ring_data(ring).unit_mask
        ar = np.arange(ring.card, dtype=np.int64)
        for x in jac:
            for r in range(ring.card):
                vals = ring.sub_vec(ring.one, ring.mul_vec(int(ring.mul(r, x)), ar))
                assert umask[vals].all(), (entry.expression, x, r)
    _announce(
        "criterion-08",
        f"axioms on {len(checked)} rings, diagram edges, witnesses, radical cross-check",
    )


def test_criterion_09_fingerprint_sanity():
    assert rl.wedderburn_fingerprint(rl.mod_j(rl.zmod(6))).blocks == ((1, 2), (1, 3))
    assert rl.wedderburn_fingerprint(rl.matrix_ring(2, rl.zmod(3))).blocks == ((2, 3),)
    rg = rl.build("GR(Z(2),C(3))")
    assert rl.wedderburn_fingerprint(rl.mod_j(rg)).blocks == ((1, 2), (1, 4))
    ctx = VerifyContext()
    for entry in CATALOG:
        quotient = ctx.adopt(structure.mod_j(ctx.ring(entry.expression)))
        fp = rl.wedderburn_fingerprint(quotient)
        assert fp.card() == quotient.card, entry.expression
    _announce("criterion-09", f"named fingerprints plus block-card law on {len(CATALOG)} rings")


def _suite_signature(threads: int, memo_threshold: int):
    summary = run_all(memo_threshold=memo_threshold, threads=threads)
    return [(r.id, r.status, tuple(r.details)) for r in summary.results]


def test_criterion_10_determinism():
    base = _suite_signature(threads=1, memo_threshold=2048)
    assert all(status != "fail" for _, status, _ in base)
    threaded = _suite_signature(threads=4, memo_threshold=2048)
    tableless = _suite_signature(threads=1, memo_threshold=0)
    assert threaded == base, "outcomes changed with 4 worker threads"
    assert tableless == base, "outcomes changed without operation tables"
    _announce("criterion-10", f"{len(base)} checks identical across workers and memo thresholds")
