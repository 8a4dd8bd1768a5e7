"""Dense complex linear algebra for small bipartite operators.

Everything here works on square ``numpy`` arrays of ``complex128``. Operator
orders stay tiny (<= 25), so the priorities are correctness and tight,
testable contracts rather than speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class BipartiteShape:
    """Local dimensions (dim_a, dim_b) of a bipartite system A x B."""

    dim_a: int
    dim_b: int

    def __post_init__(self):
        if self.dim_a < 2 or self.dim_b < 2:
            raise ValueError(
                f"local dimensions must be >= 2, got {self.dim_a}x{self.dim_b}"
            )

    @property
    def order(self) -> int:
        return self.dim_a * self.dim_b

    def index(self, i: int, l: int) -> int:
        """Flat index of the product basis vector |i>_A |l>_B (1-based levels).

        The A index varies slowest: |i>_A |l>_B sits at (i-1)*dim_b + (l-1).
        Every module inherits this ordering.
        """
        if not (1 <= i <= self.dim_a and 1 <= l <= self.dim_b):
            raise ValueError(f"levels ({i},{l}) out of range for {self.dim_a}x{self.dim_b}")
        return (i - 1) * self.dim_b + (l - 1)


def _require_square(m: np.ndarray, what: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{what} must be square, got shape {m.shape}")
    return m


def _require_hermitian(m: np.ndarray, what: str = "matrix") -> np.ndarray:
    m = _require_square(m, what)
    dev = np.abs(m - m.conj().T).max() if m.size else 0.0
    if dev > HERMITICITY_TOL:
        raise ValueError(f"{what} is not Hermitian (max deviation {dev:.3e})")
    return m


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the A factor on the left.

    Index convention matches :meth:`BipartiteShape.index`: the flat index of
    |i>_A |l>_B is i*order(b) + l with 0-based i, l.
    """
    a = _require_square(a, "left factor")
    b = _require_square(b, "right factor")
    return np.kron(a, b)


def partial_transpose_b(rho: np.ndarray, shape: BipartiteShape) -> np.ndarray:
    """Transpose the B factor only: ((i,l),(i',l')) -> ((i,l'),(i',l)).

    Involutive, trace-preserving, and Hermiticity-preserving.
    """
    rho = _require_square(rho, "state")
    m, n = shape.dim_a, shape.dim_b
    if rho.shape[0] != m * n:
        raise ValueError(
            f"matrix order {rho.shape[0]} does not match shape {m}x{n}"
        )
    return rho.reshape(m, n, m, n).transpose(0, 3, 2, 1).reshape(m * n, m * n)


def hermitian_eigen(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, eigenvector columns). The input must be
    Hermitian within HERMITICITY_TOL and is symmetrized as (h + h^dag)/2
    before decomposition to absorb roundoff.
    """
    h = _require_hermitian(h)
    vals, vecs = np.linalg.eigh((h + h.conj().T) / 2)
    return vals, vecs


def unitary_exp(h: np.ndarray) -> np.ndarray:
    """exp(i*h) for Hermitian h, via eigendecomposition."""
    vals, vecs = hermitian_eigen(h)
    return (vecs * np.exp(1j * vals)) @ vecs.conj().T
