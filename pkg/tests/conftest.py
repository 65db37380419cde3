import random
import sys

import pytest
from hypothesis import settings, strategies as st

from bicirc_forest.graph import BicirculantSpec

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

@st.composite
def specs(draw, max_n=10, max_set=3, min_n=1):
    """Valid half-set specs with n <= max_n, any flag combination."""
    n = draw(st.integers(min_n, max_n))
    flags = draw(st.tuples(st.booleans(), st.booleans())) if n % 2 == 0 else (False, False)
    pool = list(range(1, (n + 1) // 2))
    alphas = draw(st.lists(st.sampled_from(pool), max_size=max_set, unique=True)) if pool else []
    betas = draw(st.lists(st.sampled_from(pool), max_size=max_set, unique=True)) if pool else []
    gammas = draw(st.lists(st.integers(0, n - 1), max_size=max_set, unique=True))
    return BicirculantSpec(n, tuple(sorted(alphas)), tuple(sorted(betas)), tuple(sorted(gammas)), *flags)

def random_spec(rng: random.Random, max_n=10, max_set=3) -> BicirculantSpec:
    n = rng.randint(1, max_n)
    flags = (rng.random() < 0.5, rng.random() < 0.5) if n % 2 == 0 else (False, False)
    pool = list(range(1, (n + 1) // 2))

    def pick(values):
        k = rng.randint(0, min(max_set, len(values)))
        return tuple(sorted(rng.sample(values, k)))

    return BicirculantSpec(n, pick(pool), pick(pool), pick(list(range(n))), *flags)

def random_corpus(count=600, seed=20240611, max_n=10):
    rng = random.Random(seed)
    return [random_spec(rng, max_n) for _ in range(count)]

@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
