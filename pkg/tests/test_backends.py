"""Compiled and fallback kernels must agree with each other and with the oracles."""
import subprocess
import sys

import numpy as np
import pytest

from conftest import eta_zeta_oracle, sieve
from primezeta import _backend, _pykernels


def test_literal_range(kernels):
    got = kernels.lambda_range(0, 1500, False)
    assert got.dtype == np.int8
    assert np.array_equal(got.astype(bool), sieve(1500))


def test_optimized_range(kernels):
    got = kernels.lambda_range(0, 60000, True)
    assert np.array_equal(got.astype(bool), sieve(60000))


def test_empty_range(kernels):
    assert kernels.lambda_range(10, 9, True).size == 0


@pytest.mark.parametrize("u", [0.0, 1.0, 2.0, 2.5, 97.0, 99.0, 7919.0])
def test_scalar_entry_points(kernels, u):
    assert kernels.lambda_literal(u) == kernels.lambda_optimized(u)


@pytest.mark.parametrize("compensated", [False, True])
def test_eta_sums(kernels, compensated):
    sig = np.array([0.2, 0.5, 0.8])
    tau = np.array([3.0, 14.1, -27.5])
    w = np.where(np.arange(1, 301) % 2 == 1, 1.0, -1.0)
    re, im = kernels.eta_sums(sig, tau, w, compensated)
    for k in range(3):
        s = complex(sig[k], tau[k])
        ref = eta_zeta_oracle(sig[k], tau[k], 300) * (1 - 2 ** (1 - s))
        assert abs(complex(re[k], im[k]) - ref) < 1e-12


def test_backends_agree_on_eta_sums():
    rng = np.random.default_rng(7)
    sig = rng.uniform(0.05, 0.95, 200)
    tau = rng.uniform(-50, 50, 200)
    w = rng.choice([-1.0, 0.0, 1.0], 500)
    ref = _pykernels.eta_sums(sig, tau, w, False)
    for name in _backend.BACKENDS:
        re, im = _backend.get(name).eta_sums(sig, tau, w, False)
        assert np.allclose(re, ref[0], atol=1e-12) and np.allclose(im, ref[1], atol=1e-12)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.get("fortran")


def test_env_forces_fallback():
    code = "import primezeta; print(primezeta.KERNELS)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"PRIMEZETA_KERNELS": "python", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"
