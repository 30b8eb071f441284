"""Hot numerical kernels: correlation tensors, simplex descent, pair measures.

Every function here is compiled with numba's ``@njit`` when numba is
importable.  Setting ``TRIQUBIT_NO_NUMBA=1`` in the environment (or running
without numba installed) selects the pure-NumPy/Python fallback: the same
source executes uncompiled, producing the same results more slowly.  See
``benchmarks/bench_kernels.py`` for a timing comparison of the two paths.

Amplitude layout everywhere: index ``b1 b2 b3`` with qubit 1 most significant.
"""

import os

import numpy as np

NUMBA_ENABLED = os.environ.get("TRIQUBIT_NO_NUMBA", "") != "1"
if NUMBA_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:
    def njit(*args, **kwargs):  # noqa: D103 - decorator stand-in
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


_PAULI = np.zeros((3, 2, 2), dtype=np.complex128)
_PAULI[0, 0, 1] = 1.0
_PAULI[0, 1, 0] = 1.0
_PAULI[1, 0, 1] = -1.0j
_PAULI[1, 1, 0] = 1.0j
_PAULI[2, 0, 0] = 1.0
_PAULI[2, 1, 1] = -1.0


# ---------------------------------------------------------------------------
# Mermin expectation via the 3x3x3 correlation tensor
# ---------------------------------------------------------------------------

@njit(cache=True)
def correlation_tensor(amps):
    """T[i,j,k] = <psi| sigma_i x sigma_j x sigma_k |psi> (real)."""
    psi = amps.reshape(2, 2, 2)
    a = np.empty((3, 2, 2, 2), dtype=np.complex128)
    for i in range(3):
        for b1 in range(2):
            for b2 in range(2):
                for b3 in range(2):
                    a[i, b1, b2, b3] = (
                        _PAULI[i, b1, 0] * psi[0, b2, b3]
                        + _PAULI[i, b1, 1] * psi[1, b2, b3]
                    )
    ab = np.empty((3, 3, 2, 2, 2), dtype=np.complex128)
    for i in range(3):
        for j in range(3):
            for b1 in range(2):
                for b2 in range(2):
                    for b3 in range(2):
                        ab[i, j, b1, b2, b3] = (
                            _PAULI[j, b2, 0] * a[i, b1, 0, b3]
                            + _PAULI[j, b2, 1] * a[i, b1, 1, b3]
                        )
    t = np.empty((3, 3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                acc = 0.0 + 0.0j
                for b1 in range(2):
                    for b2 in range(2):
                        for b3 in range(2):
                            val = (
                                _PAULI[k, b3, 0] * ab[i, j, b1, b2, 0]
                                + _PAULI[k, b3, 1] * ab[i, j, b1, b2, 1]
                            )
                            acc += np.conj(psi[b1, b2, b3]) * val
                t[i, j, k] = acc.real
    return t


@njit(cache=True)
def _trilinear(t, u, v, w):
    acc = 0.0
    for i in range(3):
        for j in range(3):
            uv = u[i] * v[j]
            for k in range(3):
                acc += t[i, j, k] * uv * w[k]
    return acc


@njit(cache=True)
def settings_from_angles(x):
    """Six unit vectors (a1,a2,a3,b1,b2,b3) from 12 polar/azimuthal angles."""
    v = np.empty((6, 3))
    for i in range(6):
        th = x[2 * i]
        ph = x[2 * i + 1]
        st = np.sin(th)
        v[i, 0] = st * np.cos(ph)
        v[i, 1] = st * np.sin(ph)
        v[i, 2] = np.cos(th)
    return v


@njit(cache=True)
def mermin_from_tensor(t, vecs):
    """Signed Mermin expectation for settings rows (a1,a2,a3,b1,b2,b3)."""
    return (
        _trilinear(t, vecs[0], vecs[1], vecs[2])
        - _trilinear(t, vecs[0], vecs[4], vecs[5])
        - _trilinear(t, vecs[3], vecs[1], vecs[5])
        - _trilinear(t, vecs[3], vecs[4], vecs[2])
    )


@njit(cache=True)
def _neg_abs_mermin(t, x):
    return -abs(mermin_from_tensor(t, settings_from_angles(x)))


@njit(cache=True)
def nelder_mead_mermin(t, x0, max_iter, ftol, step):
    """Simplex descent on -|<B>| over 12 setting angles."""
    n = x0.shape[0]
    m = n + 1
    simplex = np.empty((m, n))
    fvals = np.empty(m)
    for i in range(m):
        for j in range(n):
            simplex[i, j] = x0[j]
        if i > 0:
            simplex[i, i - 1] += step
        fvals[i] = _neg_abs_mermin(t, simplex[i])
    for _ in range(max_iter):
        order = np.argsort(fvals)
        simplex = simplex[order]
        fvals = fvals[order]
        if fvals[m - 1] - fvals[0] < ftol:
            break
        centroid = np.zeros(n)
        for i in range(m - 1):
            centroid += simplex[i]
        centroid /= m - 1
        worst = simplex[m - 1]
        refl = centroid + (centroid - worst)
        f_refl = _neg_abs_mermin(t, refl)
        if f_refl < fvals[0]:
            expd = centroid + 2.0 * (centroid - worst)
            f_expd = _neg_abs_mermin(t, expd)
            if f_expd < f_refl:
                simplex[m - 1] = expd
                fvals[m - 1] = f_expd
            else:
                simplex[m - 1] = refl
                fvals[m - 1] = f_refl
        elif f_refl < fvals[m - 2]:
            simplex[m - 1] = refl
            fvals[m - 1] = f_refl
        else:
            if f_refl < fvals[m - 1]:
                contr = centroid + 0.5 * (refl - centroid)
                bar = f_refl
            else:
                contr = centroid + 0.5 * (worst - centroid)
                bar = fvals[m - 1]
            f_contr = _neg_abs_mermin(t, contr)
            if f_contr < bar:
                simplex[m - 1] = contr
                fvals[m - 1] = f_contr
            else:
                for i in range(1, m):
                    simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0])
                    fvals[i] = _neg_abs_mermin(t, simplex[i])
    best = np.argmin(fvals)
    return simplex[best].copy(), fvals[best]


@njit(cache=True)
def optimize_mermin_multistart(t, starts, max_iter, ftol, step):
    """Best |<B>| over all restart starting points; returns (angles, value)."""
    best_f = np.inf
    best_x = np.zeros(starts.shape[1])
    for r in range(starts.shape[0]):
        x, f = nelder_mead_mermin(t, starts[r], max_iter, ftol, step)
        if f < best_f:
            best_f = f
            best_x = x
    return best_x, -best_f


# ---------------------------------------------------------------------------
# Pair concurrences / CoAs straight from the pure state
# ---------------------------------------------------------------------------
#
# For a pair of qubits, split the state into the two conditional 4-vectors
# T_a indexed by the remaining qubit.  With Y = sigma_y x sigma_y, the 2x2
# complex symmetric matrix tau_ab = T_a^T Y T_b has singular values equal to
# the square roots of the nonzero eigenvalues of rho rho~, so
# C = s1 - s2 and C^a = s1 + s2 with no rank-4 eigenproblem involved.

@njit(cache=True)
def _pair_from_vectors(t0, t1):
    """(concurrence, coa, det_gram) for conditional 4-vectors t0, t1."""
    # x^T Y y = -x0 y3 - x3 y0 + x1 y2 + x2 y1
    t00 = -2.0 * t0[0] * t0[3] + 2.0 * t0[1] * t0[2]
    t11 = -2.0 * t1[0] * t1[3] + 2.0 * t1[1] * t1[2]
    t01 = -t0[0] * t1[3] - t0[3] * t1[0] + t0[1] * t1[2] + t0[2] * t1[1]
    # s1 >= s2: singular values of the symmetric 2x2 [[t00, t01], [t01, t11]]
    h00 = (t00.real ** 2 + t00.imag ** 2) + (t01.real ** 2 + t01.imag ** 2)
    h11 = (t11.real ** 2 + t11.imag ** 2) + (t01.real ** 2 + t01.imag ** 2)
    h01 = np.conj(t00) * t01 + np.conj(t01) * t11
    avg = 0.5 * (h00 + h11)
    rad = np.sqrt(
        0.25 * (h00 - h11) ** 2 + h01.real ** 2 + h01.imag ** 2
    )
    e1 = avg + rad
    e2 = avg - rad
    if e1 < 0.0:
        e1 = 0.0
    if e2 < 0.0:
        e2 = 0.0
    s1 = np.sqrt(e1)
    s2 = np.sqrt(e2)
    n0 = 0.0
    n1 = 0.0
    ip = 0.0 + 0.0j
    for m in range(4):
        n0 += t0[m].real ** 2 + t0[m].imag ** 2
        n1 += t1[m].real ** 2 + t1[m].imag ** 2
        ip += np.conj(t0[m]) * t1[m]
    det = n0 * n1 - (ip.real ** 2 + ip.imag ** 2)
    if det < 0.0:
        det = 0.0
    return s1 - s2, s1 + s2, det


@njit(cache=True)
def pure_state_measures(amps):
    """(c_bip, c_pair, coa_pair) with bipartitions (1,2,3) and pairs
    (12, 23, 31)."""
    psi = amps.reshape(2, 2, 2)
    c_bip = np.empty(3)
    c_pair = np.empty(3)
    coa_pair = np.empty(3)
    t0 = np.empty(4, dtype=np.complex128)
    t1 = np.empty(4, dtype=np.complex128)
    for cond in range(3):
        for hi in range(2):
            for lo in range(2):
                m = 2 * hi + lo
                if cond == 0:      # condition qubit 1, keep (2,3)
                    t0[m] = psi[0, hi, lo]
                    t1[m] = psi[1, hi, lo]
                elif cond == 1:    # condition qubit 2, keep (1,3)
                    t0[m] = psi[hi, 0, lo]
                    t1[m] = psi[hi, 1, lo]
                else:              # condition qubit 3, keep (1,2)
                    t0[m] = psi[hi, lo, 0]
                    t1[m] = psi[hi, lo, 1]
        c, ca, det = _pair_from_vectors(t0, t1)
        c_bip[cond] = 2.0 * np.sqrt(det)
        pair = (1, 2, 0)[cond]    # complementary pair index in (12, 23, 31)
        if c > 1.0:
            c = 1.0
        if ca > 1.0:
            ca = 1.0
        c_pair[pair] = c
        coa_pair[pair] = ca
    return c_bip, c_pair, coa_pair


# ---------------------------------------------------------------------------
# Canonical-form search: local-unitary angles minimising forbidden weight
# ---------------------------------------------------------------------------

@njit(cache=True)
def euler_unitary(a, b, c):
    """Rz(a) @ Ry(b) @ Rz(c) as a 2x2 complex matrix."""
    u = np.empty((2, 2), dtype=np.complex128)
    cb = np.cos(0.5 * b)
    sb = np.sin(0.5 * b)
    ea = np.exp(-0.5j * a)
    ec = np.exp(-0.5j * c)
    u[0, 0] = ea * cb * ec
    u[0, 1] = -ea * sb / ec
    u[1, 0] = sb * ec / ea
    u[1, 1] = cb / (ea * ec)
    return u


@njit(cache=True)
def apply_local_unitaries(amps, u1, u2, u3):
    """(u1 x u2 x u3) |psi> as a flat 8-vector."""
    psi = amps.reshape(2, 2, 2)
    out = np.empty(8, dtype=np.complex128)
    for p in range(2):
        for q in range(2):
            for r in range(2):
                acc = 0.0 + 0.0j
                for x in range(2):
                    for y in range(2):
                        for z in range(2):
                            acc += u1[p, x] * u2[q, y] * u3[r, z] * psi[x, y, z]
                out[4 * p + 2 * q + r] = acc
    return out


@njit(cache=True)
def canonical_objective(amps, x):
    """Squared magnitude left on indices {001, 010, 011} after rotating."""
    u1 = euler_unitary(x[0], x[1], x[2])
    u2 = euler_unitary(x[3], x[4], x[5])
    u3 = euler_unitary(x[6], x[7], x[8])
    phi = apply_local_unitaries(amps, u1, u2, u3)
    return (
        phi[1].real ** 2 + phi[1].imag ** 2
        + phi[2].real ** 2 + phi[2].imag ** 2
        + phi[3].real ** 2 + phi[3].imag ** 2
    )


@njit(cache=True)
def nelder_mead_canonical(amps, x0, max_iter, ftol, target, step):
    """Simplex descent on the forbidden-index weight over 9 Euler angles."""
    n = x0.shape[0]
    m = n + 1
    simplex = np.empty((m, n))
    fvals = np.empty(m)
    for i in range(m):
        for j in range(n):
            simplex[i, j] = x0[j]
        if i > 0:
            simplex[i, i - 1] += step
        fvals[i] = canonical_objective(amps, simplex[i])
    for _ in range(max_iter):
        order = np.argsort(fvals)
        simplex = simplex[order]
        fvals = fvals[order]
        if fvals[0] < target or fvals[m - 1] - fvals[0] < ftol:
            break
        centroid = np.zeros(n)
        for i in range(m - 1):
            centroid += simplex[i]
        centroid /= m - 1
        worst = simplex[m - 1]
        refl = centroid + (centroid - worst)
        f_refl = canonical_objective(amps, refl)
        if f_refl < fvals[0]:
            expd = centroid + 2.0 * (centroid - worst)
            f_expd = canonical_objective(amps, expd)
            if f_expd < f_refl:
                simplex[m - 1] = expd
                fvals[m - 1] = f_expd
            else:
                simplex[m - 1] = refl
                fvals[m - 1] = f_refl
        elif f_refl < fvals[m - 2]:
            simplex[m - 1] = refl
            fvals[m - 1] = f_refl
        else:
            if f_refl < fvals[m - 1]:
                contr = centroid + 0.5 * (refl - centroid)
                bar = f_refl
            else:
                contr = centroid + 0.5 * (worst - centroid)
                bar = fvals[m - 1]
            f_contr = canonical_objective(amps, contr)
            if f_contr < bar:
                simplex[m - 1] = contr
                fvals[m - 1] = f_contr
            else:
                for i in range(1, m):
                    simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0])
                    fvals[i] = canonical_objective(amps, simplex[i])
    best = np.argmin(fvals)
    return simplex[best].copy(), fvals[best]


def warm_up():
    """Trigger compilation of all kernels (a no-op on the fallback path)."""
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = 1.0
    t = correlation_tensor(amps)
    starts = np.zeros((1, 12))
    optimize_mermin_multistart(t, starts, 3, 1e-6, 0.4)
    pure_state_measures(amps)
    nelder_mead_canonical(amps, np.zeros(9), 3, 1e-6, 1e-16, 0.4)
