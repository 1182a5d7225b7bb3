#!/usr/bin/env python3
"""
pdsum - Launcher
Runs the pd command line from a source checkout without installing the package
"""

import sys
from pathlib import Path

# Ensure we can import from the package
sys.path.insert(0, str(Path(__file__).parent))

from pdsum.cli import main  # noqa: E402


if __name__ == '__main__':
    main()
