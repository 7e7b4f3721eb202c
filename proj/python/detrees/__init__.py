"""Rees algebras and fibers of maximal-minor ideals: relation families,
standard tableaux and verification certificates."""

import json
import os

from ._core import (
    ClosureViolation,
    DomainError,
    ParseError,
    PreconditionError,
    __version__,
    is_standard,
    standardize,
    support,
)
from . import _core

__all__ = [
    "ClosureViolation",
    "DomainError",
    "ParseError",
    "PreconditionError",
    "Report",
    "generate",
    "is_standard",
    "oracle",
    "standardize",
    "standardize_text",
    "support",
    "verify",
]


class Report:
    """Result of a command: the JSON report, a text summary, emitted files
    and the exit code the command line tool would return."""

    def __init__(self, raw):
        data, text, files, exit_code = raw
        self.data = json.loads(data)
        self.text = text
        self.files = dict(files)
        self.exit_code = exit_code

    def __repr__(self):
        return f"Report(exit_code={self.exit_code}, keys={sorted(self.data)})"


def _spec_text(spec):
    if isinstance(spec, dict):
        return json.dumps(spec)
    if isinstance(spec, os.PathLike) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        with open(spec, encoding="utf-8") as f:
            return f.read()
    return spec


def generate(spec, which="all"):
    """Relation families for a problem spec (dict, JSON text or path)."""
    return Report(_core.generate(_spec_text(spec), which))


def verify(spec, claim="all", seed=None, probes=5, claimed=None):
    """Certificates for a claim; `claimed` replaces the family of a single
    Groebner claim, as a list of polynomial strings or one per line."""
    if claimed is not None and not isinstance(claimed, str):
        claimed = "\n".join(claimed)
    return Report(_core.verify(_spec_text(spec), claim, seed, probes, claimed))


def oracle(spec, map="initial", ambient="fiber", method="elimination"):
    return Report(_core.oracle(_spec_text(spec), map, ambient, method))


def standardize_text(tableau, spec=None):
    """Standardization report for a tableau in the text format."""
    return Report(_core.standardize_report(tableau, None if spec is None else _spec_text(spec)))
