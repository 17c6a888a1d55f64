"""Cross-checks between the compiled kernels and the pure-Python fallback."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from imocheck import _kernel_py as pure
from imocheck.errors import OrbitOverflowError

cy = pytest.importorskip("imocheck._kernel_cy")

U64_MAX = (1 << 64) - 1


def test_backend_constants_match():
    assert cy.ORBIT_CEILING == pure.ORBIT_CEILING == (1 << 64) - (1 << 33)


@given(st.integers(0, U64_MAX))
def test_isqrt_agrees(x):
    assert cy.isqrt(x) == pure.isqrt(x)


def test_isqrt_boundaries():
    for x in (0, 1, 2, 3, 4, 15, 16, U64_MAX, (1 << 32) ** 2 - 1, pure.ORBIT_CEILING):
        assert cy.isqrt(x) == pure.isqrt(x)
        s = cy.isqrt(x)
        assert s * s <= x
        assert (s + 1) * (s + 1) > x


@given(st.integers(2, 10**9), st.integers(0, 300))
def test_orbit_fill_agrees(a0, k):
    assert cy.orbit_fill(a0, k) == pure.orbit_fill(a0, k)


@given(st.integers(2, 10**9), st.integers(0, 5000))
def test_confirm_agrees(start, nsteps):
    assert cy.confirm_plus3_run(start, nsteps) == pure.confirm_plus3_run(start, nsteps)


def test_confirm_finds_first_square():
    # 13, 16: square at offset 1
    assert cy.confirm_plus3_run(13, 10) == pure.confirm_plus3_run(13, 10) == 1
    # 16 itself is a square
    assert cy.confirm_plus3_run(16, 10) == pure.confirm_plus3_run(16, 10) == 0
    # residue-2 progressions never hit a square
    assert cy.confirm_plus3_run(2, 10**6) == pure.confirm_plus3_run(2, 10**6) == -1
    assert cy.confirm_plus3_run(5, 0) == pure.confirm_plus3_run(5, 0) == -1


def test_confirm_overflow_raises_on_both():
    near = pure.ORBIT_CEILING - 10
    for kernel in (cy, pure):
        with pytest.raises(OrbitOverflowError):
            kernel.confirm_plus3_run(near, 100)
        with pytest.raises(OrbitOverflowError):
            kernel.orbit_fill(pure.ORBIT_CEILING - 1, 2)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 5), (2, 2), (2, 3), (3, 3), (4, 2)])
def test_enum_tilings_agree_exactly(a, b):
    assert cy.enum_tilings(a, b) == pure.enum_tilings(a, b)


def test_backend_env_override():
    env = dict(os.environ, IMOCHECK_BACKEND="pure")
    out = subprocess.run(
        [sys.executable, "-c", "from imocheck.backend import BACKEND_NAME; print(BACKEND_NAME)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"
    env["IMOCHECK_BACKEND"] = "bogus"
    out = subprocess.run(
        [sys.executable, "-c", "import imocheck.backend"],
        capture_output=True, text=True, env=env)
    assert out.returncode != 0
    assert "IMOCHECK_BACKEND" in out.stderr
