#!/usr/bin/env python3
"""Run the oracle sweeps from the command line; exits nonzero on failure."""

import sys

from vermahom.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["selfcheck", *sys.argv[1:]]))
