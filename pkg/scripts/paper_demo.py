#!/usr/bin/env python3
"""Run the worked four-point example through all three computation routes."""

import sys

from convalg.cli import main

if __name__ == "__main__":
    sys.exit(main(["paper-demo"] + sys.argv[1:]))
