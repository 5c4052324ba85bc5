import random

import pytest
from hypothesis import strategies as st

WORKED = ["abaa", "abac", "abb", "abcb", "bab", "babaa", "bb", "bbaa", "bbba"]

# lspo(i, j) for the set above, row i / column j (ids 1..9), computed with the
# pure-Python descending scan and checked by hand for the spot values below.
WORKED_MATRIX = [
    [4, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 4, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 3, 0, 1, 1, 2, 2, 2],
    [0, 0, 0, 4, 1, 1, 1, 1, 1],
    [2, 2, 2, 2, 3, 3, 1, 1, 1],
    [4, 1, 1, 1, 0, 5, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 2, 2, 2],
    [1, 1, 1, 1, 0, 0, 0, 4, 0],
    [1, 1, 1, 1, 2, 2, 0, 3, 4],
]


def worked_records(ell=0):
    return {
        (i, j, WORKED_MATRIX[i - 1][j - 1])
        for i in range(1, 10)
        for j in range(1, 10)
        if WORKED_MATRIX[i - 1][j - 1] >= ell
    }


@pytest.fixture
def worked():
    return dict(enumerate(WORKED, start=1))


def random_set(rng: random.Random, sigma: int, k_max: int, len_max: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"[:sigma]
    out = []
    seen = set()
    for _ in range(rng.randint(1, k_max)):
        s = "".join(rng.choice(letters) for _ in range(rng.randint(1, len_max)))
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def string_sets(alphabet="abc", max_size=8, max_len=7):
    return st.lists(
        st.text(alphabet=alphabet, min_size=1, max_size=max_len),
        min_size=1, max_size=max_size, unique=True,
    )
