#!/usr/bin/env python3
"""Run the builtin corpus and print the summary table.

Equivalent to `curveinv corpus`; exits nonzero if any cross-check fails.
"""

import sys

from curveinv.report import AnalysisOptions, run_corpus


def main() -> int:
    text, ok = run_corpus(AnalysisOptions())
    print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
