import ast
import json
from pathlib import Path

import numpy as np
import pytest

import quatrange.oracle as oracle
from quatrange.oracle import (
    check_certificate_soundness,
    check_prop_chi,
    check_real_bild,
    check_remark_disk,
    local_search,
    remark_witnesses,
    run_suite,
)
from quatrange.quaternion import Quaternion


def test_oracle_does_not_import_shapes():
    tree = ast.parse(Path(oracle.__file__).read_text())
    modules = {n.module for n in ast.walk(tree) if isinstance(n, ast.ImportFrom)}
    modules |= {a.name for n in ast.walk(tree) if isinstance(n, ast.Import) for a in n.names}
    assert not any(m and "shapes" in m for m in modules)


def test_remark_witnesses_exact():
    w1, w2 = remark_witnesses()
    assert abs(w1 - Quaternion(0, 2)) <= 1e-12
    assert abs(w2) <= 1e-12


def test_remark_disk_passes():
    r = check_remark_disk(20_000, seed=1)
    assert r.passed, r.checks
    assert "NotCertified" in r.notes


def test_prop_chi_examples(rng):
    for a in (np.diag([1j, 2j]), np.eye(2), rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))):
        r = check_prop_chi(a, count=20_000, seed=2)
        assert r.passed, r.checks


def test_real_bild_examples(rng):
    for a in (np.diag([1.0, 3.0]), np.array([[0.0, 1.0], [0.0, 0.0]]), rng.standard_normal((4, 4))):
        r = check_real_bild(a, count=20_000, seed=3)
        assert r.passed, r.checks
    with pytest.raises(ValueError):
        check_real_bild(np.diag([1j, 1]))


def test_soundness_skips_uncertified(rng):
    batch = [np.array([[0.0, 1.0], [0.0, 0.0]]), rng.standard_normal((3, 3)), np.diag([1j, 2j])]
    r = check_certificate_soundness(batch, count=20_000, seed=4)
    assert r.passed, r.checks
    assert "skipped" in r.notes and "2i" in r.notes


def test_checks_detect_wrong_region(monkeypatch):
    # a region that is too small must fail containment, one too large must fail attainment
    import quatrange.oracle as o

    real_boundary = o.boundary

    def shrunk(A, m=720, max_error=None):
        approx = real_boundary(A, m, max_error)
        region = type(approx.region)(approx.region.kind, 0.9 * approx.region.vertices, approx.region.tol)
        return type(approx)(region, approx.angles, approx.max_support_error)

    def grown(A, m=720, max_error=None):
        approx = real_boundary(A, m, max_error)
        region = type(approx.region)(approx.region.kind, 1.1 * approx.region.vertices, approx.region.tol)
        return type(approx)(region, approx.angles, approx.max_support_error)

    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    monkeypatch.setattr(o, "boundary", shrunk)
    r = check_real_bild(a, count=5000, seed=0)
    assert not r.passed and r.checks[0].name == "containment" and not r.checks[0].passed
    monkeypatch.setattr(o, "boundary", grown)
    r = check_real_bild(a, count=5000, seed=0)
    assert not r.passed and not r.checks[1].passed and r.checks[0].passed


def test_local_search_finds_top_eigenvalue(rng):
    h = rng.standard_normal((5, 5))
    h = h + h.T
    x, best = local_search(lambda idx, X: -np.einsum("...i,ij,...j->...", X, h, X), rng.standard_normal((1, 5)), rng)
    assert -best[0] == pytest.approx(np.linalg.eigvalsh(h)[-1], abs=1e-6)


def test_reports_deterministic_and_serialisable():
    a = run_suite("remark", seed=5, count=5000)
    b = run_suite("remark", seed=5, count=5000)
    assert [r.to_dict() for r in a] == [r.to_dict() for r in b]
    d = a[0].to_dict()
    assert "runtime" not in d and "runtime" in a[0].to_dict(timings=True)
    assert d["passed"] == all(c["passed"] for c in d["checks"])
    json.dumps(d)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
