#!/usr/bin/env python3
"""
Monotone CLT command-line launcher.

Usage:
    python mclt.py count --pairs 2 --colors 3 --check
    python mclt.py table --order 2 4 6 8 --colors 10 40 --format json
    python mclt.py verify
"""

import os
import sys

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from monotone_clt.cli.commands import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
