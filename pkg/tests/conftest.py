"""
Pytest configuration file.
Adds project root to Python path so tests can import modules correctly.
Tests marked `slow` run only when RUN_SLOW=1.
"""
import sys
import os

import pytest

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

RUN_SLOW = os.getenv("RUN_SLOW", "0") == "1"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long distance computations (set RUN_SLOW=1)")


def pytest_collection_modifyitems(config, items):
    if RUN_SLOW:
        return
    skip_slow = pytest.mark.skip(reason="set RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _fresh_container():
    """Each test gets its own DI container"""
    from di.container import reset_container
    reset_container()
    yield
    reset_container()


@pytest.fixture
def data_path():
    return os.path.join(project_root, "data")


@pytest.fixture
def random_code():
    """
    Factory for random valid double skew cyclic codes: g and h drawn from
    the monic right divisors of x^r - 1 and x^s - 1, l admissible.

    Small cases enumerate every divisor; larger ones take the right gcd of
    x^n - 1 with random polynomials and the lcm of two such gcds.
    """
    from domain.entities import DoubleCodeSpec
    from domain.entities.skew_poly import SkewPoly, right_gcd, right_lcm
    from domain.services.divisor_search import cached_divisors, random_admissible_l

    def sample(spec, i, n, rng):
        target = SkewPoly.x_n_minus_one(spec, i, n)
        found = []
        for _ in range(2):
            degree = int(rng.integers(0, n + 1))
            codes = rng.integers(0, spec.q, size=degree + 1)
            f = SkewPoly(spec, i, tuple(spec.from_code(int(c)) for c in codes))
            found.append(right_gcd(f, target))
        return right_lcm(found[0], found[1]) if rng.integers(2) else found[0]

    def pick(spec, i, n, rng):
        if spec.q ** n > 10 ** 4:
            return sample(spec, i, n, rng)
        options = [f for d in range(n + 1) for f in cached_divisors(n, d, spec, i, 10 ** 6)]
        return options[int(rng.integers(len(options)))]

    def make(spec, i, r, s, rng, label="random"):
        g_v, g_vp = pick(spec, i, r, rng), pick(spec, i, r, rng)
        h_v, h_vp = pick(spec, i, s, rng), pick(spec, i, s, rng)
        l_v = random_admissible_l(g_v, h_v, s, rng)
        l_vp = random_admissible_l(g_vp, h_vp, s, rng)
        return DoubleCodeSpec(spec, i, r, s, g_v, g_vp, l_v, l_vp, h_v, h_vp, label)

    return make
