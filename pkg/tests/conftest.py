import pytest

from gtsij.core.signed_set import get_element_budget, set_element_budget


@pytest.fixture(autouse=True)
def restore_element_budget():
    """The element budget is process-wide; put it back after each test."""
    saved = get_element_budget()
    yield
    set_element_budget(saved)
