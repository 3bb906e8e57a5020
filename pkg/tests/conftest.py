"""Shared builders: analyzed curve models assembled from the builtin corpus."""

import pytest

from curveinv import corpus
from curveinv.report import AnalysisOptions, analyze
from curveinv.schema import build_curve

_CACHE = {}


def analyzed_model(label, options=AnalysisOptions()):
    key = (label, options)
    if key not in _CACHE:
        docs = {doc["label"]: doc for doc in corpus.curve_models()}
        _CACHE[key] = analyze(build_curve(docs[label]), options)
    return _CACHE[key]


@pytest.fixture
def model():
    return analyzed_model
