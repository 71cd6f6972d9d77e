"""Acceptance gate: the standard verification profile must come back
clean, criterion by criterion, within its runtime budgets, and a repeat
run must be byte-identical modulo timing."""

import json
import time

import pytest

from koshzeta.verify import run_all, clear_caches


@pytest.fixture(scope="module")
def report():
    clear_caches()
    rep = run_all("standard")
    return rep


def _family(rep, *prefixes):
    return [c for c in rep.checks
            if any(c.id.startswith(p) for p in prefixes)]


def _require(rep, label, prefixes, budget_s=None):
    checks = _family(rep, *prefixes)
    assert checks, f"{label}: no checks ran"
    bad = [(c.id, c.params, c.status, c.abs_residual, c.rel_residual, c.note)
           for c in checks if c.status != "pass"]
    took = sum(c.ms for c in checks) / 1000.0
    assert not bad, f"{label}: {bad}"
    if budget_s is not None:
        assert took <= budget_s, f"{label}: took {took:.1f}s > {budget_s}s"
    print(f"{label}: PASS ({len(checks)} checks, {took:.1f}s)")


def test_c1_root_spectrum(report):
    _require(report, "C1 root spectrum", ["roots/"], budget_s=5)


def test_c2_bracket_routes(report):
    _require(report, "C2 bracket kernel routes",
             ["bracket/", "expkernel/"], budget_s=120)


def test_c3_euler_type_values(report):
    _require(report, "C3 even-argument Bernoulli link",
             ["euler-type/"], budget_s=600)


def test_c4_transformation(report):
    _require(report, "C4 modular-type transformation",
             ["transform/modular-type"], budget_s=1800)


def test_c5_limit_degenerations(report):
    _require(report, "C5 classical degenerations", ["limits/"])


def test_c6_classical_closed_forms(report):
    _require(report, "C6 classical closed forms", ["closedform/"],
             budget_s=60)


def test_c7_polynomial_relations(report):
    _require(report, "C7 polynomial functional equations", ["rampoly/"],
             budget_s=300)


def test_c8_eisenstein(report):
    _require(report, "C8 Eisenstein relations", ["eisenstein/"],
             budget_s=1800)


def test_c9_log_case(report):
    _require(report, "C9 logarithmic case", ["logcase/"])


def test_companion_families(report):
    _require(report, "companion transformation statements",
             ["transform/symmetric", "transform/even-order",
              "transform/order-minus-one", "transform/coefficient-sum"])
    _require(report, "Bernoulli route triangle", ["bernoulli1/",
                                                  "bernoulli2/"])
    _require(report, "dual-route sums", ["dualroute/"])


def _normalized(rep):
    doc = json.loads(rep.to_json())
    for c in doc["checks"]:
        c["ms"] = 0.0
    doc["summary"]["wall_ms"] = 0.0
    return json.dumps(doc, sort_keys=True).encode()


def test_c10_determinism(report):
    blob1 = _normalized(report)
    clear_caches()
    rep2 = run_all("standard")
    blob2 = _normalized(rep2)
    assert blob1 == blob2, "repeat run differs beyond timing"
    print("C10 determinism: PASS (byte-identical modulo timing)")
