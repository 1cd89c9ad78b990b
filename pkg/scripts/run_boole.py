#!/usr/bin/env python3
"""
Runner for the boole-witt CLI straight from a checkout, without installing.

Usage:
  python scripts/run_boole.py compute boole --n 4 --lambda 2
  python scripts/run_boole.py table --kind s1 --max-n 6
  python scripts/run_boole.py verify --id thm1 --format json
  python scripts/run_boole.py witt --p 3 --N 2 --n 1 --lambda 1 --x 0
"""

from __future__ import annotations

import os
import sys


def _ensure_src_on_path():
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(here)
    src = os.path.join(root, 'boole_witt', 'src')
    if src not in sys.path:
        sys.path.insert(0, src)


def main():
    _ensure_src_on_path()
    from cli import main as cli_main

    sys.exit(cli_main(sys.argv[1:]))


if __name__ == '__main__':
    main()
