"""NumPy implementations of the hot numerical kernels.

This module mirrors the compiled extension ``covosc._core`` function for
function and is selected by ``covosc._backend`` when the extension is
missing or disabled (``COVOSC_BACKEND=python``).  Everything here is
vectorised NumPy; the compiled core exists because the fused C loops avoid
the large temporaries and win on the grid-evaluation paths.
"""

from __future__ import annotations

import numpy as np

_SQRT2 = float(np.sqrt(2.0))
_INV_SQRT_PI = 1.0 / float(np.sqrt(np.pi))


def psi_grid(eta: float, z: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Squeezed ground-state wave function sampled on the tensor grid z x t."""
    z = np.asarray(z, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    u = (z[:, None] + t[None, :]) / _SQRT2
    v = (z[:, None] - t[None, :]) / _SQRT2
    em = np.exp(-2.0 * eta)
    ep = np.exp(2.0 * eta)
    return _INV_SQRT_PI * np.exp(-0.5 * (em * u * u + ep * v * v))


def _t_window(eta: float, t_points: int, n_sigma: float):
    """Trapezoid nodes/weights for the moving time-separation window.

    At fixed (z, z') the integrand of the reduced kernel is a Gaussian in t
    of standard deviation 1/sqrt(2 cosh 2eta); the window is sized in units
    of that sigma and shifted to the analytic centre by the callers.
    """
    sigma = 1.0 / np.sqrt(2.0 * np.cosh(2.0 * eta))
    x = np.linspace(-n_sigma * sigma, n_sigma * sigma, t_points)
    w = np.full(t_points, x[1] - x[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return x, w


def marginal_values(eta: float, z: np.ndarray, t_points: int = 129,
                    n_sigma: float = 8.6) -> np.ndarray:
    """Integrate |psi_eta(z, t)|^2 over t at each grid z.

    The t-integrand is a Gaussian centred at z tanh 2eta, so the quadrature
    window tracks that centre and the accuracy is uniform in eta.
    """
    z = np.asarray(z, dtype=np.float64)
    x, w = _t_window(eta, t_points, n_sigma)
    tt = (z * np.tanh(2.0 * eta))[:, None] + x[None, :]
    u = (z[:, None] + tt) / _SQRT2
    v = (z[:, None] - tt) / _SQRT2
    em = np.exp(-2.0 * eta)
    ep = np.exp(2.0 * eta)
    vals = np.exp(-(em * u * u + ep * v * v)) / np.pi
    return vals @ w


def kernel_matrix(eta: float, z: np.ndarray, t_points: int = 129,
                  n_sigma: float = 8.6) -> np.ndarray:
    """Reduced density kernel K(z, z') = int psi(z, t) psi(z', t) dt.

    Row-chunked to keep the (n, t_points) temporaries small; the result is
    symmetrised exactly.
    """
    z = np.asarray(z, dtype=np.float64)
    n = z.size
    x, w = _t_window(eta, t_points, n_sigma)
    half_tanh = 0.5 * np.tanh(2.0 * eta)
    em = np.exp(-2.0 * eta)
    ep = np.exp(2.0 * eta)
    out = np.empty((n, n))
    for i in range(n):
        tt = (half_tanh * (z[i] + z))[:, None] + x[None, :]
        ui = (z[i] + tt) / _SQRT2
        vi = (z[i] - tt) / _SQRT2
        uj = (z[:, None] + tt) / _SQRT2
        vj = (z[:, None] - tt) / _SQRT2
        q = 0.5 * (em * (ui * ui + uj * uj) + ep * (vi * vi + vj * vj))
        out[i] = (np.exp(-q) / np.pi) @ w
    return 0.5 * (out + out.T)


def _trapezoid_weights(axis: np.ndarray) -> np.ndarray:
    w = np.full(axis.size, axis[1] - axis[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def dft2(field: np.ndarray, z: np.ndarray, t: np.ndarray,
         qz: np.ndarray, q0: np.ndarray, sign_z: int, sign_t: int) -> np.ndarray:
    """Continuous 2-D Fourier transform by trapezoid quadrature.

    Returns (1/2pi) * integral field(z,t) exp(i sign_z qz z + i sign_t q0 t)
    sampled on qz x q0.  Separable, so it reduces to two complex
    matrix products.
    """
    field = np.asarray(field, dtype=np.float64)
    z = np.asarray(z, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    qz = np.asarray(qz, dtype=np.float64)
    q0 = np.asarray(q0, dtype=np.float64)
    wz = _trapezoid_weights(z)
    wt = _trapezoid_weights(t)
    ez = np.exp(1j * sign_z * np.outer(qz, z))
    et = np.exp(1j * sign_t * np.outer(q0, t))
    inner = ez @ (wz[:, None] * field)
    return (inner @ (et * wt[None, :]).T) / (2.0 * np.pi)


def hermite_matrix(nmax: int, x: np.ndarray) -> np.ndarray:
    """Orthonormal Hermite functions h_0..h_nmax on x, by stable recurrence.

    h_0 = pi^(-1/4) exp(-x^2/2), h_{n+1} = sqrt(2/(n+1)) x h_n
    - sqrt(n/(n+1)) h_{n-1}; the recurrence acts on the normalised
    functions directly so no factorials or raw polynomial values appear.
    """
    x = np.asarray(x, dtype=np.float64)
    out = np.empty((nmax + 1, x.size))
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if nmax >= 1:
        out[1] = _SQRT2 * x * out[0]
    for n in range(1, nmax):
        out[n + 1] = (np.sqrt(2.0 / (n + 1)) * x * out[n]
                      - np.sqrt(n / (n + 1.0)) * out[n - 1])
    return out


def schmidt_project(field: np.ndarray, hz: np.ndarray, ht: np.ndarray,
                    wz: np.ndarray, wt: np.ndarray) -> np.ndarray:
    """Project a sampled two-variable function onto the Hermite basis.

    C[m, n] = sum_ij wz_i wt_j hz[m, i] field[i, j] ht[n, j].
    """
    field = np.asarray(field, dtype=np.float64)
    return (hz * wz[None, :]) @ field @ (ht * wt[None, :]).T


def jacobi_eigh(a: np.ndarray, max_sweeps: int = 50):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues descending, eigenvector columns, sweeps used), or
    raises RuntimeError when the off-diagonal norm has not collapsed after
    ``max_sweeps`` sweeps.  Deterministic: fixed (row-cyclic) rotation
    order, no pivot search.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    tol = 1e-14 * scale
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        off = np.sqrt(np.sum(a * a) - np.sum(np.diag(a) ** 2))
        if off <= tol:
            break
        # Loose threshold on early sweeps speeds convergence (NR-style).
        thresh = 0.2 * off / n if sweeps < 4 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError(f"jacobi_eigh: no convergence after {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w)[::-1]
    return w[order], v[:, order], sweeps
