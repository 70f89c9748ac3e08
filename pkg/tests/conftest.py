import warnings

import numpy as np
import pytest

from lrckit import example_code, linear_code, simplex


@pytest.fixture(scope="session")
def ex1():
    return example_code(1)


@pytest.fixture(scope="session")
def ex2():
    return example_code(2)


@pytest.fixture(scope="session")
def ex3():
    return example_code(3)


@pytest.fixture(scope="session")
def hamming74():
    # systematic [7,4,3] Hamming code
    return linear_code(2, [
        [1, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ])


@pytest.fixture(scope="session")
def simplex32():
    return simplex(3, 2)


def random_code(rng: np.random.RandomState, q: int, n_max: int = 12, k_max: int = 5):
    """A random code with 1 <= k <= k_max; rank deficiency folded in silently."""
    while True:
        n = rng.randint(2, n_max + 1)
        k = rng.randint(1, min(k_max, n) + 1)
        mat = rng.randint(0, q, size=(k, n))
        if not mat.any():
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code = linear_code(q, mat)
        if code.k >= 1:
            return code


def random_subset(rng: np.random.RandomState, n: int) -> frozenset:
    mask = rng.randint(0, 2, size=n).astype(bool)
    return frozenset(int(i) for i in np.nonzero(mask)[0])
