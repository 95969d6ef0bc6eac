"""Entry point for running susy_crystal as a module.

Allows: python -m susy_crystal [args]
"""

import sys

from susy_crystal.cli import main

if __name__ == "__main__":
    sys.exit(main())
