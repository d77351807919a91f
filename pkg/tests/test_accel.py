"""Both backends of the hot kernels must agree; the env flag must select them."""

import os
import subprocess
import sys

import numpy as np

from jacktorus import _accel


def test_phase_matrix_sum_backends_agree():
    rng = np.random.default_rng(0)
    gammas = rng.integers(-4, 5, size=(30, 4))
    mats = rng.normal(size=(30, 3, 3)) + 1j * rng.normal(size=(30, 3, 3))
    theta = rng.uniform(-np.pi, np.pi, 4)
    a = _accel.phase_matrix_sum(gammas, mats, theta)
    b = _accel.phase_matrix_sum_np(gammas, mats, theta)
    assert np.max(np.abs(a - b)) < 1e-12


def test_phase_sum_backends_agree():
    rng = np.random.default_rng(1)
    gammas = rng.integers(-6, 7, size=(50, 3))
    theta = rng.uniform(-np.pi, np.pi, 3)
    assert abs(_accel.phase_sum(gammas, theta) - _accel.phase_sum_np(gammas, theta)) < 1e-11


def test_jacobi_backends_agree():
    rng = np.random.default_rng(2)
    a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    h = (a + a.conj().T) / 2
    assert np.max(np.abs(_accel.jacobi_eigvals(h) - _accel.jacobi_eigvals_np(h))) < 1e-11


def test_rk4_backends_agree():
    rng = np.random.default_rng(3)
    theta0 = rng.uniform(0, 2, 3)
    theta1 = theta0 + rng.uniform(0.1, 0.3, 3)
    mats = rng.normal(size=(3, 2, 2)).astype(np.complex128)
    pi = np.array([0, 0, 1])
    pj = np.array([1, 2, 2])
    a = _accel.rk4_transport(theta0, theta1, 200, 0.25, 0.0, mats, pi, pj)
    b = _accel.rk4_transport_np(theta0, theta1, 200, 0.25, 0.0, mats, pi, pj)
    assert np.max(np.abs(a - b)) < 1e-12


def test_env_flag_forces_numpy_path():
    env = dict(os.environ, JACKTORUS_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from jacktorus import _accel; print(_accel.HAS_NUMBA)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "False"


def test_flag_off_reports_numba_when_available():
    env = {k: v for k, v in os.environ.items() if k != "JACKTORUS_DISABLE_NUMBA"}
    out = subprocess.run(
        [sys.executable, "-c", "from jacktorus import _accel; print(_accel.HAS_NUMBA)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    try:
        import numba  # noqa: F401

        assert out.stdout.strip() == "True"
    except ImportError:
        assert out.stdout.strip() == "False"
