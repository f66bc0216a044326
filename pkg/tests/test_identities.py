import csv
import io
import json
import math

import pytest

from hzeta import DomainError
from hzeta import identities as ident
from hzeta.special_functions import riemann_zeta


def test_registry_size():
    assert len(ident.REGISTRY) >= 30
    for spec in ident.REGISTRY.values():
        assert spec.grid
        assert spec.reference


def test_lemma1_example(ctx):
    r = ident.run_identity("LEMMA1", {"n": 3}, ctx)
    assert r.status == "pass"
    assert abs(r.rhs_value - (-23 / 45)) < 1e-15
    assert abs(r.lhs_value - r.rhs_value) < 1e-12


def test_cor2_m1(ctx):
    r = ident.run_identity("COR2", {"m": 1}, ctx)
    assert r.status == "pass"
    assert abs(r.lhs_value - 1.75 * riemann_zeta(3)) < 1e-13


def test_cor3_m2(ctx):
    r = ident.run_identity("COR3", {"m": 2}, ctx)
    assert r.status == "pass"
    assert abs(r.lhs_value - r.rhs_value) < 1e-12


def test_unknown_identity():
    with pytest.raises(KeyError):
        ident.run_identity("NOPE")


@pytest.mark.parametrize("identity_id, params", [
    ("LEMMA1", {"n": 0}),
    ("LEMMA1", {"n": 1.5}),
    ("LEMMA1", {}),
    ("COR2-REWRITE", {"m": 1}),
])
def test_bad_params(identity_id, params):
    with pytest.raises(DomainError):
        ident.run_identity(identity_id, params)


def test_status_rule(ctx):
    r = ident.run_identity("COR2", {"m": 2}, ctx, tol=0.0)
    assert r.status == ("pass" if r.abs_err == 0 or r.rel_err == 0 else "fail")
    r = ident.run_identity("COR2", {"m": 2}, ctx, tol=1e-30)
    assert r.status == ("pass" if r.abs_err <= 1e-30 or r.rel_err <= 1e-30 else "fail")
    assert r.tol == 1e-30


def test_filters(ctx):
    res = ident.run_suite("RESIDUE*", ctx)
    assert len(res.reports) == 3
    assert {r.id for r in res.reports} == {"RESIDUE"}
    cor = ident.run_suite("COR*", ctx)
    assert {r.id for r in cor.reports} == {"COR1", "COR2", "COR2-REWRITE", "COR3", "COR2-COR3-ROUNDTRIP"}
    both = ident.run_suite("COR2,RESIDUE", ctx)
    assert both.families == 2
    assert ident.run_suite("ZZZ*", ctx).reports == []


def test_full_suite_passes(ctx):
    res = ident.run_suite(None, ctx, jobs=4)
    failed = [(r.id, r.params, r.abs_err) for r in res.reports if r.status != "pass"]
    assert failed == []
    assert res.ok
    assert res.families == len(ident.REGISTRY)
    assert res.summary_line().endswith("failures: 0, skipped: 0")


def test_determinism_across_jobs(ctx):
    a = ident.run_suite("LEMMA1,COR*,G-PATHS,TRIVIAL-ZERO", ctx, jobs=1)
    b = ident.run_suite("LEMMA1,COR*,G-PATHS,TRIVIAL-ZERO", ctx, jobs=4)
    assert [r.comparable() for r in a.reports] == [r.comparable() for r in b.reports]


def test_json_round_trip(ctx):
    res = ident.run_suite("LEMMA1,EXPZ,RESIDUE", ctx)
    text = ident.reports_to_json(res.reports, {"failures": res.failed})
    doc = json.loads(text)
    assert doc["summary"] == {"failures": 0}
    back = ident.reports_from_json(text)
    assert [r.comparable() for r in back] == [r.comparable() for r in res.reports]
    assert any(isinstance(r.lhs_value, complex) for r in back)


def test_csv_output(ctx):
    res = ident.run_suite("COR2", ctx)
    text = ident.reports_to_csv(res.reports)
    assert text.startswith(",".join(ident.CSV_COLUMNS) + "\r\n")
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == len(res.reports) + 1
    assert all(row[6] == "pass" for row in rows[1:])
    assert math.isclose(float(rows[1][2]), res.reports[0].lhs_value, rel_tol=1e-15)


def test_accuracy_error_becomes_failure(ctx, monkeypatch):
    from hzeta import AccuracyError

    spec = ident.get_identity("LEMMA1")

    def boom(p, c):
        raise AccuracyError("no convergence")

    monkeypatch.setitem(ident.REGISTRY, "LEMMA1", ident.IdentitySpec(
        spec.id, spec.reference, spec.parameter_domain, boom, spec.grid, spec.default_tol,
        spec.method_notes, spec.validate,
    ))
    r = ident.run_identity("LEMMA1", {"n": 1}, ctx)
    assert r.status == "fail"
    assert "no convergence" in r.method_notes
