#!/usr/bin/env python3
"""degencount - Entry point."""

import sys

from degencount.app import main

if __name__ == "__main__":
    sys.exit(main())
