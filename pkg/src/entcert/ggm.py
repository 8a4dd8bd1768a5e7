"""Generalized Gell-Mann generator basis of SU(n).

The n^2 - 1 Hermitian traceless generators come in three families:

- symmetric      |j><k| + |k><j|                              1 <= j < k <= n
- antisymmetric  -i|j><k| + i|k><j|                           1 <= j < k <= n
- diagonal       sqrt(2/(l(l+1))) (sum_{j<=l} |j><j| - l|l+1><l+1|),  1 <= l <= n-1

They are pairwise orthogonal with Tr(g_a g_b) = 2 delta_ab, and together with
the identity they span the Hermitian n x n matrices, so every elementary
operator |j><k| has an exact expansion in them (``ketbra_in_ggm``).

For n = 2 the basis is the Pauli set: symmetric -> sigma_x, antisymmetric ->
sigma_y, diagonal -> diag(1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np


def _ketbra(j: int, k: int, n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[j - 1, k - 1] = 1.0
    return m


def _freeze(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class GellMannBasis:
    """Generator basis for one dimension, in a fixed enumeration order.

    Off-diagonal families are ordered lexicographically in (j, k); the
    diagonal family by l = 1..n-1. The order is load-bearing: serialized
    dumps and unitary parameter vectors both index into it.
    """

    dim: int
    symmetric: tuple[np.ndarray, ...]
    antisymmetric: tuple[np.ndarray, ...]
    diagonal: tuple[np.ndarray, ...]

    def pair_index(self, j: int, k: int) -> int:
        """Position of (j, k), j < k, in the lexicographic pair order."""
        n = self.dim
        if not (1 <= j < k <= n):
            raise ValueError(f"need 1 <= j < k <= {n}, got ({j},{k})")
        return (j - 1) * n - (j - 1) * j // 2 + (k - j - 1)

    def sym(self, j: int, k: int) -> np.ndarray:
        return self.symmetric[self.pair_index(j, k)]

    def asym(self, j: int, k: int) -> np.ndarray:
        return self.antisymmetric[self.pair_index(j, k)]

    def diag(self, l: int) -> np.ndarray:
        if not (1 <= l <= self.dim - 1):
            raise ValueError(f"need 1 <= l <= {self.dim - 1}, got {l}")
        return self.diagonal[l - 1]

    def labeled(self) -> Iterator[tuple[str, np.ndarray]]:
        """All generators as (label, matrix), in enumeration order.

        Labels: ``s:j,k`` / ``a:j,k`` / ``d:l``.
        """
        n = self.dim
        pairs = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
        for (j, k), m in zip(pairs, self.symmetric):
            yield f"s:{j},{k}", m
        for (j, k), m in zip(pairs, self.antisymmetric):
            yield f"a:{j},{k}", m
        for l, m in enumerate(self.diagonal, start=1):
            yield f"d:{l}", m

    def stack(self) -> np.ndarray:
        """All generators as one (n^2 - 1, n, n) array, in enumeration order."""
        return np.stack([m for _, m in self.labeled()])


def build_basis(n: int) -> GellMannBasis:
    """Construct the generator basis of SU(n)."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    symmetric = []
    antisymmetric = []
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            symmetric.append(_freeze(_ketbra(j, k, n) + _ketbra(k, j, n)))
            antisymmetric.append(_freeze(-1j * _ketbra(j, k, n) + 1j * _ketbra(k, j, n)))
    diagonal = []
    for l in range(1, n):
        d = np.zeros((n, n), dtype=complex)
        coeff = np.sqrt(2.0 / (l * (l + 1)))
        for j in range(1, l + 1):
            d[j - 1, j - 1] = coeff
        d[l, l] = -l * coeff
        diagonal.append(_freeze(d))
    return GellMannBasis(n, tuple(symmetric), tuple(antisymmetric), tuple(diagonal))


def ketbra_in_ggm(j: int, k: int, basis: GellMannBasis) -> np.ndarray:
    """The elementary operator |j><k| assembled from generators.

    Branches on the index pair:

    - j < k:  ( sym_{jk} + i asym_{jk} ) / 2
    - j > k:  ( sym_{kj} - i asym_{kj} ) / 2
    - j = k:  -sqrt((j-1)/(2j)) diag_{j-1}
              + sum_{m=0}^{n-j-1} diag_{j+m} / sqrt(2(j+m)(j+m+1))
              + I/n

    The diag_{j-1} term carries coefficient 0 at j = 1 (and diag_0 does not
    exist), so it is omitted there; the sum is empty at j = n.
    """
    n = basis.dim
    if not (1 <= j <= n and 1 <= k <= n):
        raise ValueError(f"indices ({j},{k}) out of range for dimension {n}")
    if j < k:
        return 0.5 * (basis.sym(j, k) + 1j * basis.asym(j, k))
    if j > k:
        return 0.5 * (basis.sym(k, j) - 1j * basis.asym(k, j))
    out = np.eye(n, dtype=complex) / n
    if j > 1:
        out -= np.sqrt((j - 1) / (2.0 * j)) * basis.diag(j - 1)
    for m in range(n - j):
        out += basis.diag(j + m) / np.sqrt(2.0 * (j + m) * (j + m + 1))
    return out
