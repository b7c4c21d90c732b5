"""Module entry point for `python -m permcensus`."""

import sys

from permcensus.cli import main

if __name__ == "__main__":
    sys.exit(main())
