import math

import numpy as np
import pytest

from hydroentropy import hydrogenic as hy
from hydroentropy import oracle as orc
from hydroentropy.errors import ConvergenceError, DomainError


def test_dense_grid_polynomial():
    assert orc.dense_grid_integrate(lambda x: x * x, 0.0, 1.0) == pytest.approx(1 / 3, abs=1e-12)


def test_dense_grid_breaks_keep_kinks_on_nodes():
    got = orc.dense_grid_integrate(lambda x: np.abs(x - 0.3), 0.0, 1.0, breaks=(0.3,))
    assert got == pytest.approx(0.5 * (0.3**2 + 0.7**2), abs=1e-12)


def test_dense_grid_1s_norm():
    got = orc.dense_grid_integrate(lambda r: 4.0 * np.exp(-2 * r) * r * r, 0.0, 40.0)
    assert got == pytest.approx(1.0, abs=1e-12)


def test_dense_grid_matches_quadrature_moment():
    from hydroentropy import measures as me

    amp_r, _ = hy.free_amplitudes(1, 0)
    dense = orc.dense_grid_integrate(lambda r: (4.0 * np.exp(-2 * r)) ** 0.6 * r * r, 0.0, 60.0)
    assert me.entropic_moment_radial(amp_r, 0.6) == pytest.approx(dense, rel=1e-9)


def test_dense_grid_needs_many_points():
    with pytest.raises(DomainError):
        orc.dense_grid_integrate(lambda x: x, 0.0, 1.0, points=1000)


def test_fd_energies_infinite_well():
    # Z = 0, l = 0: particle in a sphere, E_k = k^2 pi^2 / (2 r_c^2)
    levels = orc.fd_matrix_energies(0, 0.0, 1.0)
    assert len(levels) == 5
    for k, e in enumerate(levels, 1):
        assert e == pytest.approx(k * k * math.pi**2 / 2, rel=1e-7)


def test_fd_energies_free_limit():
    e1, e2 = orc.fd_matrix_energies(0, 1.0, 40.0, count=2)
    assert e1 == pytest.approx(-0.5, rel=1e-6)
    assert e2 == pytest.approx(-0.125, rel=1e-6)


def test_fd_matches_shooting_small_box():
    e_fd = orc.fd_matrix_energies(0, 1.0, 0.1, count=1)[0]
    e = hy.cha_energy(1, 0, 1.0, 0.1).energy
    assert e == pytest.approx(e_fd, rel=1e-7)


def test_fd_validation():
    with pytest.raises(DomainError):
        orc.fd_matrix_energies(0, 1.0, 1.0, mesh=100)
    with pytest.raises(DomainError):
        orc.fd_matrix_energies(0, 1.0, -1.0)


def test_gradient_fisher_free_1s():
    got = orc.fisher_gradient_form(lambda r: 4.0 * np.exp(-2 * r), 0, 40.0)
    assert got == pytest.approx(4.0, rel=1e-6)


def test_gradient_fisher_free_2p():
    # I_rho = 4 <p^2> - 2 |m| (2l+1) <r^-2> with m = 0: 4 * 1/4
    got = orc.fisher_gradient_form(lambda r: r * r * np.exp(-r) / 24.0, 1, 80.0)
    assert got == pytest.approx(1.0, rel=1e-6)


def test_gradient_fisher_confined_1s():
    amp = hy.cha_radial_r(hy.cha_energy(1, 0, 1.0, 1.0))
    got = orc.fisher_gradient_form(amp.density, 0, 1.0)
    assert got == pytest.approx(40.58509174, rel=1e-4)


def test_gradient_fisher_handles_a_node():
    amp = hy.cha_radial_r(hy.cha_energy(2, 0, 1.0, 5.0))
    assert amp.node_count == 1
    got = orc.fisher_gradient_form(amp.density, 0, 5.0)
    assert got == pytest.approx(6.144128803, rel=1e-4)


def test_gradient_fisher_coarse_grid_detected():
    with pytest.raises(ConvergenceError):
        orc.fisher_gradient_form(lambda r: 4.0 * np.exp(-2 * r), 0, 40.0, step=2.0)


def test_gradient_fisher_validation():
    with pytest.raises(DomainError):
        orc.fisher_gradient_form(lambda r: r, 0, 0.0)


def test_report_compare_semantics():
    ok = orc.CrosscheckReport.compare("x", 1.0 + 1e-10, 1.0, 1e-9)
    assert ok.passed and ok.abs_dev == pytest.approx(1e-10)
    assert ok.rel_dev == pytest.approx(1e-10)
    bad = orc.CrosscheckReport.compare("x", 1.1, 1.0, 1e-9)
    assert not bad.passed
    floor = orc.CrosscheckReport.compare("x", 1e-12, 0.0, 1e-9, abs_floor=1e-11)
    assert floor.passed and math.isinf(floor.rel_dev)
    assert not orc.CrosscheckReport.compare("x", math.nan, 1.0, 1.0).passed
