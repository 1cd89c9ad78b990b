import sys
from pathlib import Path

import pytest

# Ensure repository root and package paths are available for imports
REPO_ROOT = Path(__file__).resolve().parents[2]
PKG_SRC = REPO_ROOT / 'boole_witt' / 'src'
if str(REPO_ROOT) not in sys.path:
    sys.path.append(str(REPO_ROOT))
if str(PKG_SRC) not in sys.path:
    sys.path.append(str(PKG_SRC))


@pytest.fixture
def small_budget(monkeypatch):
    """Term budget low enough that any two-fold sum at level 2 exceeds it."""
    monkeypatch.setenv("BOOLE_WITT_TERM_BUDGET", "50")
    return 50
