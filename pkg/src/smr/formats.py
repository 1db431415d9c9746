"""Canonical serialization of arrays: JSON, CSV and text grid.

JSON and CSV forms carry the parameter quadruple and round-trip bit-exactly
through the parsers here.  The grid form is the human-facing rendering
(right-aligned entries, "." for empty cells) and can also be parsed back for
tests; it does not carry parameters.
"""

from __future__ import annotations

import json

from .core import Params, SignedArray


class ParseError(ValueError):
    """Input text does not match a supported serialization."""


def to_json(a: SignedArray, p: Params) -> str:
    """Canonical JSON: fixed key order, cells sorted by (row, col)."""
    obj = {
        "m": p.m,
        "n": p.n,
        "r": p.r,
        "s": p.s,
        "cells": [[i, j, e] for (i, j), e in a.items()],
    }
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def from_json(text: str) -> tuple[SignedArray, Params]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    try:
        p = Params(obj["m"], obj["n"], obj["r"], obj["s"])
        triples = [(int(i), int(j), int(e)) for i, j, e in obj["cells"]]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
    a = SignedArray.from_cells(p.m, p.n, triples)
    return a, p


def to_csv(a: SignedArray, p: Params) -> str:
    """Canonical CSV: a parameter comment, a header, one sorted line per cell."""
    lines = [f"# m={p.m} n={p.n} r={p.r} s={p.s}", "row,col,value"]
    lines += [f"{i},{j},{e}" for (i, j), e in a.items()]
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> tuple[SignedArray, Params]:
    """Parse CSV with a ``row,col,value`` header.

    Parameters come from the leading ``# m=.. n=.. r=.. s=..`` comment when
    present and are otherwise inferred from the cells (maximal row and column
    index, uniform per-row and per-column counts).
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    params: Params | None = None
    if lines and lines[0].startswith("#"):
        params = _parse_param_comment(lines[0])
        lines = lines[1:]
    if not lines or lines[0].strip().lower() != "row,col,value":
        raise ParseError("expected header line 'row,col,value'")
    triples = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected three comma-separated fields")
        try:
            triples.append((int(parts[0]), int(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if params is None:
        params = _infer_params(triples)
    a = SignedArray.from_cells(params.m, params.n, triples)
    return a, params


def _parse_param_comment(line: str) -> Params:
    fields: dict[str, int] = {}
    for token in line.lstrip("#").split():
        if "=" not in token:
            raise ParseError(f"malformed parameter token {token!r}")
        key, _, value = token.partition("=")
        try:
            fields[key] = int(value)
        except ValueError as exc:
            raise ParseError(f"malformed parameter token {token!r}") from exc
    missing = {"m", "n", "r", "s"} - fields.keys()
    if missing:
        raise ParseError(f"parameter comment missing {sorted(missing)}")
    try:
        return Params(fields["m"], fields["n"], fields["r"], fields["s"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _infer_params(triples: list[tuple[int, int, int]]) -> Params:
    if not triples:
        raise ParseError("cannot infer parameters from an empty cell list")
    m = max(i for i, _, _ in triples)
    n = max(j for _, j, _ in triples)
    if len(triples) % m or len(triples) % n:
        raise ParseError("cell count is not divisible by the inferred dimensions")
    try:
        return Params(m, n, len(triples) // m, len(triples) // n)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_grid(a: SignedArray) -> str:
    """Text grid: one line per row, right-aligned entries, '.' when empty."""
    width = max((len(str(e)) for e in a.cells.values()), default=1)
    lines = []
    for i in range(1, a.rows + 1):
        row = a.row(i)
        lines.append(
            " ".join(
                (str(row[j]) if j in row else ".").rjust(width)
                for j in range(1, a.cols + 1)
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


def from_grid(text: str) -> SignedArray:
    """Parse the grid rendering; tolerant of extra spacing."""
    rows = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        entries = []
        for token in ln.split():
            if token == ".":
                entries.append(0)
            else:
                try:
                    entries.append(int(token))
                except ValueError as exc:
                    raise ParseError(f"bad grid token {token!r}") from exc
        rows.append(entries)
    return SignedArray.from_dense(rows)
