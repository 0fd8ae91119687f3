import pytest

from supercong.checks import CheckContext
from supercong.sequences import SequenceStore


@pytest.fixture(scope="session")
def shared_ctx() -> CheckContext:
    """One context (and sequence cache) for the whole session."""
    return CheckContext(store=SequenceStore())
