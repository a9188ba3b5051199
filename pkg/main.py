#!/usr/bin/env python3
"""Command-line entry point; forwards to src/main.py."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
