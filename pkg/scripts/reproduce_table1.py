#!/usr/bin/env python3
"""Re-run the classification search behind the builtin 23-row table and
print the diff.  Exits nonzero if any table row is not found."""

import argparse
import sys

from drgkit.cli import main


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--parallelism", type=int, default=4)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    args = ap.parse_args()
    sys.exit(main(["reproduce-table1", "--parallelism", str(args.parallelism),
                   "--format", args.format]))
