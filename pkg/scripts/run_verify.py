#!/usr/bin/env python3
"""Run the identity and oracle checks and exit nonzero on any failure."""

import sys

from carlsonacg.verify import run_verify

if __name__ == "__main__":
    report = run_verify(quick="--quick" in sys.argv[1:])
    print(report.format())
    sys.exit(0 if report.passed else 1)
