import pytest

import weylchar.tensor


@pytest.fixture(autouse=True, scope="session")
def audit_every_tensor_call():
    """Assert dimension conservation on every decomposition in the suite."""
    weylchar.tensor.AUDIT_DIMENSIONS = True
    yield
    weylchar.tensor.AUDIT_DIMENSIONS = False
