import random

import pytest

from grigconj import quotient, search
from grigconj.words import LETTERS, STARS


@pytest.fixture(scope="session")
def tables():
    return quotient.get_tables()


@pytest.fixture(scope="session")
def base_table(tables):
    return search.get_base_table()


def rand_reduced(length: int, rng: random.Random) -> str:
    out = []
    last = None
    for _ in range(length):
        if last == "a":
            ch = rng.choice(STARS)
        elif last is None:
            ch = rng.choice(LETTERS)
        else:
            ch = "a"
        out.append(ch)
        last = ch
    return "".join(out)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
