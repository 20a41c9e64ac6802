#!/usr/bin/env python3
"""
Double Skew Cyclic Codes - Command Line Entry Point
================================================================================
Builds double skew cyclic codes over R = F_q + vF_q (v^2 = v), computes their
Gray-image parameters and duals, evaluates the G' construction and reproduces
the optimal-code table.

Usage:
    python main.py params --config data/jobs/example1.json
    python main.py construct --config data/jobs/example2.json --format json
    python main.py table --budget-secs 30 --format csv --out output/table.csv
    python main.py verify-fixture --config data/fixtures/gf27_r6_s3_construction.txt
    python main.py factorizations
    python main.py search --p 3 --m 3 --r 6 --s 3 --g-min 3 --g-max 3 --h-min 1 --h-max 1
================================================================================
"""
import sys

from cli.commands import run


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
