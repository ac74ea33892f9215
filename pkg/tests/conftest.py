import pytest

from grunsky_bounds.claims import SuiteConfig, SuiteContext


@pytest.fixture(scope="session")
def suite_ctx() -> SuiteContext:
    """One shared context so the acceptance criteria reuse the heavy runs."""
    return SuiteContext(SuiteConfig())
