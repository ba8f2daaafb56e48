import math

import numpy as np
import pytest

import aqfock


def test_catalan_moments_at_zero_deformation():
    space = aqfock.InvolutiveSpace("identity", 1)
    params = aqfock.DeformParams(0.0, 0.0)
    x = np.array([1.0 + 0j])
    moments = [aqfock.vacuum_moment([x] * k, params, space).real for k in range(0, 9, 2)]
    assert moments == pytest.approx([1, 1, 2, 5, 14], abs=1e-12)


def test_three_routes_agree_on_fourth_moment():
    alpha, q = 0.3, 0.4
    space = aqfock.InvolutiveSpace("identity", 2)
    params = aqfock.DeformParams(alpha, q)
    x = np.array([1.0 + 0j, 0.0])
    expected = (1 + alpha) * (2 + alpha + q + alpha * q + alpha * q * q)
    op = aqfock.vacuum_moment([x] * 4, params, space).real
    colored, uncolored = aqfock.moment_pair_sum([x] * 4, params, space)
    jac = aqfock.jacobi_moments(alpha, q, 1.0, 4)[4]
    assert op == pytest.approx(expected, abs=1e-12)
    assert colored == pytest.approx(expected, abs=1e-12)
    assert uncolored == pytest.approx(expected, abs=1e-12)
    assert jac == pytest.approx(expected, abs=1e-12)


def test_p_operator_factorization_and_hermitian():
    space = aqfock.InvolutiveSpace("swap:1-2", 2)
    params = aqfock.DeformParams(-0.5, 0.5)
    rec = aqfock.p_operator(3, params, space)
    direct = aqfock.p_operator_direct(3, params, space)
    assert np.max(np.abs(rec - direct)) < 1e-12
    assert np.max(np.abs(rec - rec.conj().T)) < 1e-12
    assert np.linalg.eigvalsh(rec).min() > 1e-10


def test_density_integrates_to_one():
    m = aqfock.quadrature_moments(0.7, -0.7, 4)
    jac = aqfock.jacobi_moments(0.7, -0.7, 1.0, 4)
    assert m[0] == pytest.approx(1.0, abs=1e-7)
    assert m[4] == pytest.approx(jac[4], abs=1e-6)
    assert aqfock.density(0.0, 0.0, 0.0) == pytest.approx(1 / math.pi, abs=1e-14)


def test_length_stats_and_group_order():
    assert aqfock.length_stats([-1, 2]) == (1, 0)
    assert aqfock.length_stats([2, 1]) == (0, 1)
    assert aqfock.group_order(3) == 48
    assert len(aqfock.pair_partitions(6)) == 15


def test_norm_case_three():
    space = aqfock.InvolutiveSpace("identity", 1)
    params = aqfock.DeformParams(0.3, 0.5)
    x = np.array([1.0 + 0j])
    bounds = aqfock.norm_bounds(x, params, space)
    assert bounds["case"] == 3
    assert aqfock.creation_norm(x, 40, params, space) == pytest.approx(1 / math.sqrt(0.5), abs=1e-4)


def test_trace_defect_witness():
    td = aqfock.trace_defect(aqfock.DeformParams(0.5, 0.0), 1, 1)
    assert td["measured"] == pytest.approx(0.0, abs=1e-12)
    assert td["witness"] == pytest.approx(td["unit_formula"], abs=1e-12)


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        aqfock.DeformParams(0.5, 1.5)
    with pytest.raises(ValueError):
        aqfock.InvolutiveSpace("swap:1-3", 2)
    with pytest.raises(ValueError):
        aqfock.density(0.0, 0.5, 1.0)


def test_group_suite_passes():
    rows = aqfock.verify("group")
    assert rows and all(r["passed"] for r in rows)
