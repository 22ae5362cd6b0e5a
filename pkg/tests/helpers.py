"""Shared oracles and generators.

The oracles deliberately avoid the library's own algorithms: ranks come
from plain Gaussian elimination over Fraction with pivot normalization,
reduced ratios from integer gcd, so agreement with the library is an
actual cross-check rather than the same code run twice.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from steinitz import INF, MatrixStage, SupernaturalNumber

PRIME_POOL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def gauss_rank(rows) -> int:
    """Row-reduce a copy over Fraction and count the pivots."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank_oracle(a: MatrixStage) -> int:
    return gauss_rank(a.entries)


def random_supernatural(
    rng: random.Random,
    max_primes: int = 4,
    max_exp: int = 6,
    allow_default: bool = True,
) -> SupernaturalNumber:
    primes = rng.sample(PRIME_POOL, rng.randint(0, max_primes))
    default = rng.choice((0, 0, 0, 1, 2, INF)) if allow_default else 0
    exc = {}
    for p in primes:
        pick = rng.randrange(4)
        exc[p] = INF if pick == 3 else rng.randint(0, max_exp)
    return SupernaturalNumber(default, exc)


def random_matrix(rng: random.Random, n: int, denominators=(1, 1, 1, 2, 3)) -> MatrixStage:
    return MatrixStage(
        tuple(
            tuple(Fraction(rng.randint(-4, 4), rng.choice(denominators)) for _ in range(n))
            for _ in range(n)
        )
    )


def random_low_rank_matrix(rng: random.Random, n: int, r: int) -> MatrixStage:
    """Product of n x r and r x n integer matrices, so rank is at most r."""
    u = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(n)]
    v = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
    return MatrixStage(
        tuple(
            tuple(Fraction(sum(u[i][k] * v[k][j] for k in range(r))) for j in range(n))
            for i in range(n)
        )
    )


exponents = st.one_of(st.integers(min_value=0, max_value=8), st.just(INF))

supernaturals = st.builds(
    lambda default, items: SupernaturalNumber(default, dict(items)),
    exponents,
    st.lists(
        st.tuples(st.sampled_from(PRIME_POOL), exponents),
        max_size=4,
        unique_by=lambda kv: kv[0],
    ),
)
