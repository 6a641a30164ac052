#!/usr/bin/env python3
"""Run the homotopy, comparison-map, and AW/EZ property suites via the CLI."""

import sys

from hhtwist.cli import main as cli_main


def main():
    code = 0
    for suite in ("homotopy", "conditions", "awez"):
        for q, char in (("generic", 0), ("-1", 0), ("1", 2)):
            print(f"--- suite {suite}, q = {q}, char {char} ---")
            code |= cli_main(["verify", "--suite", suite, "--q", q,
                              "--char", str(char), "--text"])
    return code


if __name__ == "__main__":
    sys.exit(main())
