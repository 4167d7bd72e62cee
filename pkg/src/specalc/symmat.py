"""Dense real symmetric matrices and their eigendecompositions.

Everything here is desk-scale (n up to a few dozen): the eigensolver is a
cyclic Jacobi sweep, chosen for backward stability and bit-reproducibility
rather than speed. All objects are immutable after construction and all
randomness flows through explicit seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError

# Jacobi sweep control: rotate while any |off-diagonal| exceeds
# JACOBI_REL_TOL * ||M||_F, give up after JACOBI_MAX_SWEEPS row-cyclic sweeps.
JACOBI_REL_TOL = 1e-14
JACOBI_MAX_SWEEPS = 30

ORTHOGONALITY_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-10
CONJUGATION_ORTHO_TOL = 1e-10

# Text format shared with the CLI: {"n": int, "rows": [[...], ...]}.
ASYMMETRY_REPORT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """A real symmetric n-by-n matrix with finite entries.

    ``entries`` is stored as a full square array, exactly symmetric
    (``entries[i, j] == entries[j, i]`` bit for bit) and write-protected.
    """

    n: int
    entries: np.ndarray

    @property
    def fro(self) -> float:
        """Frobenius norm, the reference scale for relative tolerances."""
        return float(np.linalg.norm(self.entries))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a matrix.

    Columns of ``eigenvectors`` pair with ``eigenvalues``; ``gap`` is the
    smallest consecutive eigenvalue difference (``inf`` for n=1) and
    ``source_norm`` the Frobenius norm of the decomposed matrix.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    gap: float
    source_norm: float

    @property
    def n(self) -> int:
        return self.eigenvalues.size


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def make_symmetric(raw) -> SymmetricMatrix:
    """Symmetrize a square grid of numbers into a SymmetricMatrix.

    Returns (raw + raw^T) / 2. An already-symmetric input is returned
    entry-for-entry unchanged (the average of equal doubles is exact).

    Raises ValueError for non-square input or non-finite entries.
    """
    arr = np.array(raw, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    sym = (arr + arr.T) / 2.0
    return SymmetricMatrix(n=arr.shape[0], entries=_freeze(sym))


def _sort_and_fix_signs(diag: np.ndarray, vecs: np.ndarray):
    """Ascending eigenvalue order; largest-|component| of each column made
    positive, ties broken by lowest row index."""
    order = np.argsort(diag, kind="stable")
    lam = diag[order].copy()
    v = vecs[:, order].copy()
    for j in range(v.shape[1]):
        k = int(np.argmax(np.abs(v[:, j])))
        if v[k, j] < 0.0:
            v[:, j] = -v[:, j]
    return lam, v


def _consecutive_gap(eigenvalues: np.ndarray) -> float:
    if eigenvalues.size < 2:
        return math.inf
    return float(np.min(np.diff(eigenvalues)))


def eigendecompose(M: SymmetricMatrix) -> Spectrum:
    """Full eigendecomposition by row-cyclic Jacobi rotations.

    Deterministic: identical input bits give identical output bits.
    Raises ConvergenceError if the off-diagonal tolerance is not met
    within the sweep budget (numerically pathological input).
    """
    n = M.n
    fro = M.fro
    if n == 1:
        lam = np.array([float(M.entries[0, 0])])
        v = np.eye(1)
        return Spectrum(_freeze(lam), _freeze(v), math.inf, fro)

    a = M.entries.copy()
    v = np.eye(n)
    thresh = JACOBI_REL_TOL * fro
    converged = False
    for _ in range(JACOBI_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= thresh:
                    continue
                rotated = True
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                # Analytic values for the rotated 2x2 block.
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
        if not rotated:
            converged = True
            break
    if not converged:
        raise ConvergenceError(
            f"Jacobi sweep budget ({JACOBI_MAX_SWEEPS}) exhausted before the "
            f"off-diagonal tolerance was met (n={n})"
        )

    lam, vecs = _sort_and_fix_signs(np.diag(a).copy(), v)
    spectrum = Spectrum(
        eigenvalues=_freeze(lam),
        eigenvectors=_freeze(vecs),
        gap=_consecutive_gap(lam),
        source_norm=fro,
    )
    _verify_spectrum(spectrum, M)
    return spectrum


def _verify_spectrum(s: Spectrum, M: SymmetricMatrix) -> None:
    v = s.eigenvectors
    ortho = np.max(np.abs(v.T @ v - np.eye(s.n)))
    if ortho > ORTHOGONALITY_TOL:
        raise ConvergenceError(f"eigenvector orthogonality defect {ortho:.3e}")
    recon = np.max(np.abs((v * s.eigenvalues) @ v.T - M.entries))
    if recon > RECONSTRUCTION_TOL * max(1.0, s.source_norm):
        raise ConvergenceError(f"reconstruction defect {recon:.3e}")


def conjugate(M: SymmetricMatrix, O: np.ndarray) -> SymmetricMatrix:
    """Return O^T M O, re-symmetrized to kill roundoff drift.

    O must be orthogonal to within 1e-10 in the max norm.
    """
    O = np.asarray(O, dtype=float)
    if O.shape != (M.n, M.n):
        raise ValueError(f"conjugating matrix has shape {O.shape}, expected {(M.n, M.n)}")
    defect = np.max(np.abs(O.T @ O - np.eye(M.n)))
    if defect > CONJUGATION_ORTHO_TOL:
        raise ValueError(f"matrix fails orthogonality tolerance: defect {defect:.3e}")
    return make_symmetric(O.T @ M.entries @ O)


def symmetric_from_rng(n: int, rng: np.random.Generator, scale: float = 1.0) -> SymmetricMatrix:
    """Symmetrized i.i.d. standard-normal matrix times ``scale``."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if scale <= 0:
        raise ValueError("scale must be positive")
    return make_symmetric(rng.standard_normal((n, n)) * scale)


def random_symmetric(n: int, seed: int, scale: float = 1.0) -> SymmetricMatrix:
    """Seeded random symmetric matrix; identical seed, identical matrix."""
    return symmetric_from_rng(n, np.random.default_rng(seed), scale)


def orthogonal_from_rng(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix via QR of a Gaussian matrix.

    The sign convention (diagonal of the triangular factor positive) makes
    the distribution exactly Haar and the output deterministic per stream.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    g = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    signs = np.sign(np.diag(r))
    signs[signs == 0.0] = 1.0
    return q * signs


def random_orthogonal(n: int, seed: int) -> np.ndarray:
    """Seeded Haar-random orthogonal matrix, orthogonal to 1e-12."""
    return orthogonal_from_rng(n, np.random.default_rng(seed))


def spectral_gap(s: Spectrum) -> float:
    """Smallest consecutive eigenvalue difference; +inf for n=1."""
    return _consecutive_gap(s.eigenvalues)


def shift_spectrum(M: SymmetricMatrix, s: Spectrum, c: float):
    """Spectrum and matrix of M + c*I, reusing M's eigenvectors.

    Adding a multiple of the identity shifts every eigenvalue by c and
    leaves eigenvectors (and the gap) unchanged, so no second
    decomposition is needed.
    """
    shifted = make_symmetric(M.entries + c * np.eye(M.n))
    lam = s.eigenvalues + c
    spec = Spectrum(
        eigenvalues=_freeze(lam),
        eigenvectors=s.eigenvectors,
        gap=s.gap,
        source_norm=shifted.fro,
    )
    return shifted, spec


def matrix_to_dict(M: SymmetricMatrix) -> dict:
    """Serialize to the shared JSON object format."""
    return {"n": M.n, "rows": [[float(x) for x in row] for row in M.entries]}


def matrix_from_dict(obj) -> tuple[SymmetricMatrix, float]:
    """Parse the shared JSON object format.

    Returns the symmetrized matrix together with the largest entry change
    the symmetrization introduced, so callers can warn when it exceeds
    ASYMMETRY_REPORT_TOL.
    """
    if not isinstance(obj, dict) or "n" not in obj or "rows" not in obj:
        raise ValueError('matrix object must have keys "n" and "rows"')
    n = obj["n"]
    rows = obj["rows"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(rows, list) or len(rows) != n:
        raise ValueError(f'"rows" must be a list of {n} rows, got {len(rows) if isinstance(rows, list) else type(rows).__name__}')
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ValueError(f"row {i} must be a list of {n} numbers")
    arr = np.array(rows, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    sym = make_symmetric(arr)
    asym = float(np.max(np.abs(arr - sym.entries)))
    return sym, asym
