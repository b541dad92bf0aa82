"""Plain-text code and function files.

Code file::

    # comment
    q 3
    n 6
    k 3
    matrix parity          # or generator
    0 0 2 1 0 0
    0 1 0 0 1 0
    1 0 0 0 0 1

An optional ``modulus c0 c1 ... cl`` line (little-endian) selects the modulus
of a composite field.  Function files use ``q``, ``s``, ``domain full|reduced``
and optional ``modulus`` headers, followed by whitespace-separated integers:
q^s values in lexicographic order for ``full``, or the value at 0 followed by
the values at the theta(q, s) projective points for ``reduced``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import LinearCode
from .gf import Field, gf


class CodeFileError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(msg if line is None else f"line {line}: {msg}")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise CodeFileError(f"expected an integer, got {tok!r}", no) from None


def _field(q: int | None, modulus, no: int | None) -> Field:
    if q is None:
        raise CodeFileError("missing 'q' header", no)
    try:
        return gf(q, modulus)
    except ValueError as exc:
        raise CodeFileError(str(exc), no) from None


def parse_code_file(text: str) -> LinearCode:
    header: dict = {}
    rows: list[tuple[int, list[int]]] = []
    last = None
    for no, toks in _lines(text):
        last = no
        key = toks[0]
        if key in ("q", "n", "k"):
            if len(toks) != 2:
                raise CodeFileError(f"'{key}' takes one value", no)
            if rows:
                raise CodeFileError(f"header '{key}' after matrix rows", no)
            header[key] = (_int(toks[1], no), no)
        elif key == "matrix":
            if len(toks) != 2 or toks[1] not in ("generator", "parity"):
                raise CodeFileError("expected 'matrix generator' or 'matrix parity'", no)
            header["matrix"] = (toks[1], no)
        elif key == "modulus":
            header["modulus"] = ([_int(t, no) for t in toks[1:]], no)
        else:
            if "matrix" not in header:
                raise CodeFileError(f"unexpected token {key!r} before 'matrix' line", no)
            rows.append((no, [_int(t, no) for t in toks]))

    for key in ("q", "n", "k", "matrix"):
        if key not in header:
            raise CodeFileError(f"missing '{key}' header", last)
    q, qno = header["q"]
    n, nno = header["n"]
    k, kno = header["k"]
    kind, mno = header["matrix"]
    modulus = header.get("modulus", (None, None))[0]
    field = _field(q, modulus, header.get("modulus", (None, qno))[1])
    if not 0 <= k <= n or n < 1:
        raise CodeFileError(f"invalid dimensions n={n}, k={k}", kno)
    want = k if kind == "generator" else n - k
    if len(rows) != want:
        raise CodeFileError(f"{kind} matrix needs {want} rows, found {len(rows)}", mno)
    for no, row in rows:
        if len(row) != n:
            raise CodeFileError(f"row has {len(row)} entries, expected {n}", no)
        for x in row:
            if not 0 <= x < q:
                raise CodeFileError(f"element out of range: {x} not in [0, {q})", no)
    M = np.array([r for _, r in rows], dtype=np.int64).reshape(want, n)
    try:
        if kind == "generator":
            return LinearCode(field, generator=M, n=n)
        return LinearCode(field, parity=M, n=n)
    except ValueError as exc:
        raise CodeFileError(str(exc), mno) from None


def format_code_file(code: LinearCode, matrix: str | None = None) -> str:
    if matrix is None:
        matrix = "generator" if code.generator is not None else "parity"
    M = code.generator_matrix() if matrix == "generator" else code.parity_matrix()
    out = [f"q {code.field.q}", f"n {code.n}", f"k {code.k}"]
    if code.field.modulus is not None:
        out.append("modulus " + " ".join(str(c) for c in code.field.modulus))
    out.append(f"matrix {matrix}")
    out.extend(" ".join(str(int(x)) for x in row) for row in M)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class FunctionFile:
    field: Field
    s: int
    domain: str
    values: list[int]


def parse_function_file(text: str) -> FunctionFile:
    header: dict = {}
    values: list[int] = []
    last = None
    for no, toks in _lines(text):
        last = no
        key = toks[0]
        if key in ("q", "s"):
            header[key] = _int(toks[1], no) if len(toks) == 2 else None
            if header[key] is None:
                raise CodeFileError(f"'{key}' takes one value", no)
        elif key == "domain":
            if len(toks) != 2 or toks[1] not in ("full", "reduced"):
                raise CodeFileError("expected 'domain full' or 'domain reduced'", no)
            header["domain"] = toks[1]
        elif key == "modulus":
            header["modulus"] = [_int(t, no) for t in toks[1:]]
        else:
            values.extend(_int(t, no) for t in toks)
    if "s" not in header:
        raise CodeFileError("missing 's' header", last)
    field = _field(header.get("q"), header.get("modulus"), last)
    s = header["s"]
    if s < 1:
        raise CodeFileError("s must be >= 1", last)
    domain = header.get("domain", "full")
    q = field.q
    want = q**s if domain == "full" else (q**s - 1) // (q - 1) + 1
    if len(values) != want:
        raise CodeFileError(f"{domain} domain needs {want} values, found {len(values)}", last)
    return FunctionFile(field, s, domain, values)
