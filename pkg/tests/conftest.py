import sys
from pathlib import Path

# Repository root on sys.path so boole_witt.src.* imports without installing
REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.append(str(REPO_ROOT))
