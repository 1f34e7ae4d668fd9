from __future__ import annotations

import pytest

from adeweights.graphs import DynkinType
from adeweights.verify import DEFAULT_SUITE, build_bundle

SUITE = list(DEFAULT_SUITE)


@pytest.fixture(scope="session")
def bundle():
    """Shared per-type computation cache (build_bundle memoizes)."""
    def get(name: str):
        return build_bundle(DynkinType.parse(name))
    return get


@pytest.fixture(scope="session")
def suite_types():
    return SUITE
