import os

import pytest

from pathdom.verification import CensusCache


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, str(default)))
    except ValueError:
        return default


@pytest.fixture(scope="session")
def census_cache() -> CensusCache:
    """One shared exhaustive-census cache for the whole run."""
    return CensusCache(workers=_env_int("PATHDOM_ACCEPT_WORKERS", 1))
