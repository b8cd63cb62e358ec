import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def wild_trace_bytes() -> bytes:
    return (DATA_DIR / "wild_trace.json").read_bytes()
