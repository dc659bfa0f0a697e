import random

import pytest
from hypothesis import strategies as st

from lensgenus import intmatrix as im

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_unimodular(rng: random.Random, n: int, steps: int = 6):
    """Product of random elementary matrices (and sign flips)."""
    m = [list(r) for r in im.identity(n)]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-2, -1, 1, 2))
        m = [row[:] for row in m]
        for r in range(n):
            m[r][j] += k * m[r][i]
    for i in range(n):
        if rng.random() < 0.3:
            for r in range(n):
                m[r][i] = -m[r][i]
    return im.as_matrix(m)


def congruent(s, u):
    return im.matmul(im.matmul(im.transpose(u), s), u)


@st.composite
def symmetric_matrices(draw, min_rank=1, max_rank=4, bound=6, nondegenerate=True):
    n = draw(st.integers(min_rank, max_rank))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(st.integers(-bound, bound))
    mat = im.as_matrix(m)
    if nondegenerate:
        from hypothesis import assume
        assume(im.determinant(mat) != 0)
    return mat


@st.composite
def unimodular_matrices(draw, n):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_unimodular(random.Random(seed), n)


@st.composite
def coprime_pairs(draw, max_p=200, min_p=2):
    p = draw(st.integers(min_p, max_p))
    q = draw(st.integers(1, max(1, p - 1)).filter(lambda x: __import__("math").gcd(x, p) == 1))
    return p, q


@pytest.fixture
def rng():
    return random.Random(20261017)
