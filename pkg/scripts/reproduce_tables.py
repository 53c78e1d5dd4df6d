#!/usr/bin/env python3
"""Regenerate the low-genus Betti tables and recorded boundary profiles.

Prints the half-column comparison (both fields, genus 1..6) followed by
the genus-1 and genus-2 boundary-map data, exactly as the verify suite
checks them.  Extra arguments are forwarded to the ``tables`` call, so
e.g. ``reproduce_tables.py --full`` prints every degree.
"""

import sys

from f2moduli.cli import main

if __name__ == "__main__":
    rc = main(["tables", "--max-genus", "6", *sys.argv[1:]])
    for genus in ("1", "2"):
        rc = rc or main(["profiles", "--genus", genus])
    sys.exit(rc)
