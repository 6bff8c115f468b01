#!/usr/bin/env python3
"""
Root circle splitting types of rational homogeneous varieties.

Usage:
    python circles.py report --model grassmannian:2,4 --all-alphas
    python circles.py flatness --type D4 --cross 4
    python circles.py audit --model lagrangian:3
    python circles.py sweep --max-rank 3
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.cli import run  # noqa: E402


if __name__ == '__main__':
    sys.exit(run())
