#!/usr/bin/env python3
"""Render first/second/cyclic pages for every builtin curve model.

Usage: render_pages.py [label ...]
With no arguments, renders all models; otherwise only the named ones.
"""

import sys

from curveinv import corpus
from curveinv.report import AnalysisOptions, analyze
from curveinv.schema import build_curve
from curveinv.spectral import render_page


def main(argv) -> int:
    wanted = set(argv)
    known = {doc["label"] for doc in corpus.curve_models()}
    missing = wanted - known
    if missing:
        print(f"unknown labels: {sorted(missing)}", file=sys.stderr)
        print(f"known: {sorted(known)}", file=sys.stderr)
        return 2
    for doc in corpus.curve_models():
        if wanted and doc["label"] not in wanted:
            continue
        report = analyze(build_curve(doc), AnalysisOptions())
        print(render_page(report.e1, "text"))
        print()
        print(render_page(report.e2, "text"))
        for m, page in report.hc.per_m:
            print()
            print(render_page(page, "text"))
        print("\n" + "=" * 72 + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
