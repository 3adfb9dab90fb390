"""
Launch script for the workbench command line.
"""

import sys
from pathlib import Path

# Add the repository root to the path
sys.path.insert(0, str(Path(__file__).parent))

from src.main import main


if __name__ == "__main__":
    sys.exit(main())
