import pytest

from gfcodec import build_tower

# (p, k_modulus, l_modulus) -> GF(4), GF(16), GF(9), GF(16) over GF(4)
TOWER_CONFIGS = {
    "gf4": (2, [1], [1, 1, 1]),
    "gf16": (2, [1], [1, 1, 0, 0, 1]),
    "gf9": (3, [1], [1, 0, 1]),
    "gf4x2": (2, [1, 1, 1], [2, 1, 1]),
}

_cache = {}


def get_tower(name):
    if name not in _cache:
        _cache[name] = build_tower(*TOWER_CONFIGS[name])
    return _cache[name]


@pytest.fixture(scope="session")
def gf4():
    return get_tower("gf4")


@pytest.fixture(scope="session")
def gf16():
    return get_tower("gf16")


@pytest.fixture(scope="session")
def gf9():
    return get_tower("gf9")


@pytest.fixture(scope="session")
def gf4x2():
    return get_tower("gf4x2")


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]
