"""Tensor text format and shorthand parsing for the CLI.

The file format is a JSON document:

    {"dim": 3,
     "entries": [{"index": [1, 1, 2, 3], "value": "-7/12"}, ...]}

Unlisted canonical indices are zero; indices may appear in any order and
are canonicalized.  Values are rational strings ("p/q"), integers, or
decimal strings expanded exactly in base 10.

A shorthand JSON form is also accepted:

    {"family": "cyclic", "coeffs": ["1", "-1", "1", "1", "-7/12"]}
    {"family": "binary", "coeffs": [...5 coefficients...]}
    {"family": "relaxed", "coeffs": [...7: a b c d e123 e223 e233...]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence, Union

from .binary import BinaryQuartic
from .cyclic import CyclicTernary, RelaxedCyclicTernary
from .tensor import SymmetricTensor4
from .verdict import as_fraction

ParsedInput = Union[BinaryQuartic, CyclicTernary, RelaxedCyclicTernary, SymmetricTensor4]


class InputError(ValueError):
    """Malformed input file or shorthand; message names the offending field."""


def parse_shorthand(family: str, coeffs: Sequence[str]) -> ParsedInput:
    try:
        vals = [as_fraction(c) for c in coeffs]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"coefficient: {exc}") from exc
    if family == "binary":
        if len(vals) != 5:
            raise InputError(f"family 'binary' needs 5 coefficients, got {len(vals)}")
        return BinaryQuartic(*vals)
    if family == "cyclic":
        if len(vals) != 5:
            raise InputError(f"family 'cyclic' needs 5 coefficients, got {len(vals)}")
        return CyclicTernary(*vals)
    if family == "relaxed":
        if len(vals) != 7:
            raise InputError(f"family 'relaxed' needs 7 coefficients, got {len(vals)}")
        return RelaxedCyclicTernary(*vals)
    raise InputError(f"family: unknown family {family!r}")


def parse_document(doc: dict) -> ParsedInput:
    if not isinstance(doc, dict):
        raise InputError("document: JSON object expected")
    if "family" in doc:
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, list):
            raise InputError("coeffs: list expected")
        return parse_shorthand(doc["family"], coeffs)
    if "dim" not in doc:
        raise InputError("dim: missing")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"dim: positive integer expected, got {dim!r}")
    entries = {}
    for i, ent in enumerate(doc.get("entries", [])):
        if not isinstance(ent, dict) or "index" not in ent or "value" not in ent:
            raise InputError(f"entries[{i}]: object with 'index' and 'value' expected")
        idx = ent["index"]
        if (
            not isinstance(idx, list)
            or len(idx) != 4
            or not all(isinstance(j, int) and 1 <= j <= dim for j in idx)
        ):
            raise InputError(f"entries[{i}].index: 4 indices in 1..{dim} expected")
        try:
            val = as_fraction(ent["value"])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise InputError(f"entries[{i}].value: {exc}") from exc
        key = tuple(sorted(idx))
        if key in entries and entries[key] != val:
            raise InputError(f"entries[{i}].index: conflicting values for slot {key}")
        entries[key] = val
    try:
        return SymmetricTensor4(dim, entries)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load(path: str) -> ParsedInput:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"path: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"document: invalid JSON ({exc})") from exc
    return parse_document(doc)


def to_tensor(parsed: ParsedInput) -> SymmetricTensor4:
    from .cyclic import embed

    if isinstance(parsed, SymmetricTensor4):
        return parsed
    if isinstance(parsed, BinaryQuartic):
        return parsed.to_tensor()
    return embed(parsed)


def describe(parsed: ParsedInput) -> dict:
    if isinstance(parsed, BinaryQuartic):
        return {"family": "binary", "coeffs": [str(v) for v in parsed]}
    if isinstance(parsed, CyclicTernary):
        return {
            "family": "cyclic",
            "coeffs": [str(v) for v in (parsed.a, parsed.b, parsed.c, parsed.d, parsed.e)],
        }
    if isinstance(parsed, RelaxedCyclicTernary):
        return {
            "family": "relaxed",
            "coeffs": [
                str(v)
                for v in (
                    parsed.a,
                    parsed.b,
                    parsed.c,
                    parsed.d,
                    parsed.e123,
                    parsed.e223,
                    parsed.e233,
                )
            ],
        }
    return {
        "dim": parsed.dim,
        "entries": [
            {"index": list(idx), "value": str(v)}
            for idx, v in sorted(parsed.entries().items())
        ],
    }
