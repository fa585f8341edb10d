import pytest

from arithmetic_metric import factor_core


@pytest.fixture(scope="session", autouse=True)
def _warm():
    # Build the shared sieve and load the compiled kernel once, up front.
    factor_core.default_sieve().trial_product
    factor_core.factor(1000003 * 999983)
