import json
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden():
    """Load a frozen oracle from tests/golden; skip when it has not been frozen yet."""

    def load(name: str):
        path = GOLDEN_DIR / name
        if not path.exists():
            pytest.skip(f"{name} not frozen; run `poe freeze-golden`")
        return json.loads(path.read_text(encoding="utf-8"))

    return load
