import pytest


@pytest.fixture
def announce(capsys):
    """Print a line that survives pytest's output capture."""

    def _announce(line: str) -> None:
        with capsys.disabled():
            print(line)

    return _announce
