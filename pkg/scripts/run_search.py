#!/usr/bin/env python3
"""Run a custom bounded search, e.g.

    python scripts/run_search.py --k-min 5 --k-max 25 --d-min 3 --d-max 3 \
        --theta1-lo 1 --theta1-hi 2 --parallelism 4
"""

import sys

from drgkit.cli import main


if __name__ == "__main__":
    sys.exit(main(["enumerate"] + sys.argv[1:]))
