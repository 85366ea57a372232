from __future__ import annotations

from valab.fileio import AlgebroidFile
from valab.forms import make_context
from valab.semiconformal import LOneMap


def context_of(f: AlgebroidFile):
    if f.gorenstein is not None:
        return make_context(f.algebroid, f.gorenstein.t, f.gorenstein.B, f.grading)
    return make_context(f.algebroid, None, None, f.grading)


def l1_of(f: AlgebroidFile) -> LOneMap:
    return LOneMap(f.l1)
