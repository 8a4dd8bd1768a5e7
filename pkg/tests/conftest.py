from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

from entcert import build_basis


@lru_cache(maxsize=None)
def cached_basis(n):
    return build_basis(n)


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


@pytest.fixture(scope="session")
def data_dir():
    return Path(__file__).resolve().parent.parent / "data"
