import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import polar
from scipy.spatial.transform import Rotation

from fracmech import motion as mo
from fracmech.errors import SingularMatrixError
from fracmech.frac_core import Fn1D
from fracmech.kinematics import (
    NonlocalHorizon,
    OrderField,
    classical_F,
    frac_F_material,
    material_displacement_gradient,
    small_strain_1d,
)
from fracmech.strains import (
    StrainFamily,
    cauchy_green,
    euler_almansi,
    green_lagrange,
    polar_decompose,
    small_strain_tensor,
    strain_pair,
    strain_pair_from_gradient,
)
from fracmech.tensor import MATERIAL, SPATIAL, Tensor2

import oracles

BETA = 0.2
X0 = np.array([0.8, 0.1, -0.2])
D = np.diag([1 + BETA, 1.0, 1.0])


def _rotation(seed=0):
    return Rotation.random(random_state=seed).as_matrix()


def test_green_lagrange_examples():
    assert green_lagrange(np.eye(3)).allclose(np.zeros((3, 3)))
    E = green_lagrange(classical_F(mo.linear_stretch(BETA), X0))
    assert E.legs == (MATERIAL, MATERIAL)
    assert E.allclose(0.5 * np.diag([(1 + BETA) ** 2 - 1, 0, 0]), atol=1e-15)
    M = oracles.M_EXAMPLE
    FX = frac_F_material(mo.linear_stretch(BETA), X0, 0.0, OrderField.uniform(0.5),
                         NonlocalHorizon.uniform(0.9, 0.1, 0.5), 1000)
    expected = 0.5 * np.diag([(M * (1 + BETA)) ** 2 - 1, M ** 2 - 1, M ** 2 - 1])
    assert green_lagrange(FX).allclose(expected, atol=1e-6)


def test_euler_almansi_examples():
    assert euler_almansi(np.eye(3)).allclose(np.zeros((3, 3)))
    e = euler_almansi(Tensor2(D))
    assert e.legs == (SPATIAL, SPATIAL)
    Finv = np.linalg.inv(D)
    assert e.allclose(0.5 * (np.eye(3) - Finv.T @ Finv), atol=1e-15)
    assert e[0, 0] == pytest.approx(0.5 * (1 - (1 + BETA) ** -2), abs=1e-15)
    with pytest.raises(SingularMatrixError):
        euler_almansi(np.diag([1.0, 0.0, 1.0]))


def test_euler_almansi_alpha_one():
    m = mo.exponential_stretch()
    FX = frac_F_material(m, X0, 0.0, OrderField.uniform(1.0), NonlocalHorizon.symmetric(0.2), 10)
    assert euler_almansi(FX).allclose(euler_almansi(classical_F(m, X0)).array, atol=1e-15)


@pytest.mark.parametrize("family", list(StrainFamily))
def test_identity_motion_zero_strains(family):
    pair = strain_pair(family, mo.identity(), X0, OrderField.uniform(0.4),
                       NonlocalHorizon.symmetric(0.3), 50)
    assert pair.E.allclose(np.zeros((3, 3)), atol=1e-12)
    assert pair.e.allclose(np.zeros((3, 3)), atol=1e-12)


@pytest.mark.parametrize("family", list(StrainFamily))
def test_alpha_one_families_coincide(family):
    m = mo.exponential_stretch()
    ref = strain_pair(StrainFamily.CLASSICAL, m, X0)
    pair = strain_pair(family, m, X0, OrderField.uniform(1.0), NonlocalHorizon.uniform(0.3, 0.1), 20)
    assert pair.E.allclose(ref.E.array, atol=1e-8)
    assert pair.e.allclose(ref.e.array, atol=1e-8)
    assert pair.E.legs == (MATERIAL, MATERIAL) and pair.e.legs == (SPATIAL, SPATIAL)


def test_example1_frac_material_pair():
    pair = strain_pair("frac_material", mo.linear_stretch(BETA), X0, OrderField.uniform(0.5),
                       NonlocalHorizon.uniform(0.9, 0.1, 0.5), 1000)
    M = oracles.M_EXAMPLE
    assert pair.E[1, 1] == pytest.approx(0.5 * (M ** 2 - 1), abs=1e-6)
    assert pair.E[2, 2] == pytest.approx(pair.E[1, 1], abs=1e-12)
    assert pair.E[0, 0] == pytest.approx(0.5 * ((M * 1.2) ** 2 - 1), abs=1e-6)


def test_spatial_family_uses_inverse_gradient():
    Fx = Tensor2(np.diag([0.5, 1.0, 2.0]), (MATERIAL, SPATIAL))
    pair = strain_pair_from_gradient("frac_spatial", Fx)
    np.testing.assert_allclose(np.diag(pair.E.array), 0.5 * (np.array([4.0, 1.0, 0.25]) - 1))
    np.testing.assert_allclose(np.diag(pair.e.array), 0.5 * (1 - np.array([0.25, 1.0, 4.0])))


def test_strain_pair_requires_ingredients():
    with pytest.raises(TypeError):
        strain_pair(StrainFamily.FRAC_MATERIAL, mo.identity(), X0)


def test_cauchy_green():
    C, b = cauchy_green(np.eye(3))
    assert C.allclose(np.eye(3)) and b.allclose(np.eye(3))
    C, b = cauchy_green(Tensor2(D))
    assert C.allclose(D @ D) and b.allclose(D @ D)
    R = _rotation(1)
    C, b = cauchy_green(R)
    assert C.allclose(np.eye(3), atol=1e-14) and b.allclose(np.eye(3), atol=1e-14)
    assert C.legs == (MATERIAL, MATERIAL) and b.legs == (SPATIAL, SPATIAL)


def test_polar_trivial():
    R, U, V = polar_decompose(np.eye(3))
    assert R.allclose(np.eye(3)) and U.allclose(np.eye(3)) and V.allclose(np.eye(3))
    F = np.diag([2.0, 1.0, 1.0])
    R, U, V = polar_decompose(F)
    assert R.allclose(np.eye(3)) and U.allclose(F) and V.allclose(F)


@pytest.mark.parametrize("seed", range(10))
def test_polar_recovers_known_factors(seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(3, 3))
    U_true = A @ A.T + 0.5 * np.eye(3)
    R_true = _rotation(seed)
    R, U, V = polar_decompose(R_true @ U_true)
    np.testing.assert_allclose(R.array, R_true, atol=1e-8)
    np.testing.assert_allclose(U.array, U_true, atol=1e-8)
    np.testing.assert_allclose(R.array.T @ R.array, np.eye(3), atol=1e-10)
    np.testing.assert_allclose((V @ R).array, R_true @ U_true, atol=1e-8)
    R_ref, U_ref = polar(R_true @ U_true)
    np.testing.assert_allclose(R.array, R_ref, atol=1e-10)
    assert np.all(np.linalg.eigvalsh(U.array) > 0) and np.all(np.linalg.eigvalsh(V.array) > 0)
    # polar consistency: E = (U^2 - I)/2
    np.testing.assert_allclose(green_lagrange(R_true @ U_true).array,
                               0.5 * (U.array @ U.array - np.eye(3)), atol=1e-8)


def test_polar_rejects_reflection():
    with pytest.raises(SingularMatrixError):
        polar_decompose(np.diag([-1.0, 1.0, 1.0]))


def test_small_strain_tensor():
    skew = np.array([[0, 1.0, -2], [-1, 0, 3], [2, -3, 0]])
    assert small_strain_tensor(skew).allclose(np.zeros((3, 3)))
    sym = skew + skew.T + np.diag([1.0, 2, 3])
    assert small_strain_tensor(sym).allclose(sym)


def test_small_strain_1d_embedding():
    # symmetric horizon: the identity part of the motion contributes M - 1 = 0
    eps, alpha, lL, lR = 1e-3, 0.6, 0.2, 0.2
    u = lambda X: eps * np.stack([np.sin(X[..., 0]), 0 * X[..., 0], 0 * X[..., 0]], axis=-1)
    motion = mo.perturbed_identity(lambda X: u(X) / eps, eps)
    grad = material_displacement_gradient(motion, X0, orders=OrderField.uniform(alpha),
                                          horizon=NonlocalHorizon.uniform(lL, lR), m=200)
    eps_t = small_strain_tensor(grad)
    one_d = small_strain_1d(Fn1D(lambda x: eps * np.sin(x)), X0[0], alpha, lL, lR, m=200)
    assert eps_t[0, 0] == pytest.approx(one_d, abs=1e-9)


def test_small_strain_limit_is_quadratic():
    alpha, horizon = 0.5, NonlocalHorizon.symmetric(0.2)
    u = lambda X: np.stack([np.sin(X[..., 0]), X[..., 0] * X[..., 1], np.cos(X[..., 2])], axis=-1)
    gaps = []
    for eps in (1e-3, 1e-4):
        motion = mo.perturbed_identity(u, eps)
        FX = frac_F_material(motion, X0, 0.0, OrderField.uniform(alpha), horizon, 100)
        E = green_lagrange(FX)
        lin = small_strain_tensor(FX.array - np.eye(3))
        gaps.append(np.max(np.abs(E.array - lin.array)))
    # the gap is (grad u)^T grad u / 2, so it falls by eps ratio squared
    assert gaps[1] < gaps[0] / 50
    assert gaps[1] < 1e-7


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-0.5, 0.5), min_size=9, max_size=9))
def test_strains_symmetric_and_psd(entries):
    F = np.eye(3) + np.reshape(entries, (3, 3))
    if np.linalg.det(F) <= 0.05:
        return
    for family in StrainFamily:
        pair = strain_pair_from_gradient(family, Tensor2(F))
        for T in (pair.E, pair.e):
            assert np.array_equal(T.array, T.array.T)
    C, b = cauchy_green(F)
    assert np.min(np.linalg.eigvalsh(C.array)) >= -1e-12
    assert np.min(np.linalg.eigvalsh(b.array)) >= -1e-12


def test_ell_ladder_symmetric():
    m = mo.exponential_stretch()
    xs = np.linspace(0.5, 1.5, 21)
    for alpha in (0.3, 0.6, 0.9):
        devs = []
        for ell in (0.5, 0.05, 0.005):
            h = NonlocalHorizon.symmetric(ell)
            devs.append(max(
                abs(strain_pair("frac_material", m, (x, 0, 0), OrderField.uniform(alpha), h, 100).E[0, 0]
                    - 0.5 * (np.exp(2 * x) - 1)) for x in xs))
        assert devs[0] > devs[1] > devs[2]
