#!/usr/bin/env python3
"""Script to run the moulton command line without installing the package."""

import sys

from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.app import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
