import pytest

from hydroentropy import verify as vf
from hydroentropy.config import RunConfig


@pytest.fixture(scope="module")
def fast_reports():
    return vf.run_verification("fast")


def test_fast_scope_passes(fast_reports):
    failed = [r for r in fast_reports if not r.passed]
    assert not failed, failed[:5]


def test_fast_scope_covers_every_suite(fast_reports):
    prefixes = {r.item.split(":", 1)[0] for r in fast_reports}
    assert {"energy", "fisher", "moment", "circular", "shannon-routes", "golden", "bound"} <= prefixes


def test_fast_scope_limits(fast_reports):
    energies = [r.item for r in fast_reports if r.item.startswith("energy:")]
    assert all(r.split("@rc=")[1] in ("0.5", "1.0", "5.0") for r in energies)
    assert len(energies) == 3 * (3 + 2 + 1)


def test_known_bad_cells_are_skipped():
    items = {r.item for r in vf.golden_angular()}
    assert "golden:angular:T_ang_alpha:l=2" not in items
    assert "golden:angular:T_ang_alpha:l=6" in items
    assert len(items) == 60 - 7


def test_crashed_suite_is_a_failure(monkeypatch):
    def boom(matrix, config):
        raise RuntimeError("kaput")

    monkeypatch.setitem(vf.SUITES, "energy", boom)
    (rep,) = vf.run_verification("fast", RunConfig(), suites=["energy"])
    assert not rep.passed and "kaput" in rep.item


def test_perturbed_tolerance_fails():
    reports = vf.run_verification("fast", RunConfig(tol=1e-2), suites=["moment"])
    assert any(not r.passed for r in reports)
