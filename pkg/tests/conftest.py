import pytest

from liekit.builder import build_exceptional

_CACHE = {}


@pytest.fixture(scope="session")
def exceptional():
    """Session-wide cache of verified exceptional tables, keyed by
    (name, workers); the Jacobi sweep runs once per key."""
    def get(name, workers=1):
        key = (name.upper(), workers)
        if key not in _CACHE:
            _CACHE[key] = build_exceptional(name, workers=workers)
        return _CACHE[key]
    return get
