"""File formats: the versioned JSON set document and printed sign-matrix text.

A set document looks like::

    {
      "codes": [["0 0 1 ...", "..."], ...],   # one string of phases per row
      "format": "zccs-doc v1",
      "kind": "type-II ZCCS",
      "params": {"K": 4, "M": 4, "N": 24, "Z": 22},
      "provenance": {...},
      "q": 2
    }

For ``q = 0`` each row is a list of ``[re, im]`` pairs instead of a string.
Keys are sorted and numbers use Python's shortest round-trip repr, so
writing the same set twice gives identical bytes.
"""
from __future__ import annotations

import json

import numpy as np

from .errors import DocumentError
from .sequences import SET_KINDS, CodeMatrix, CodeSet, PhaseSequence

FORMAT = "zccs-doc v1"


def set_to_document(s: CodeSet, provenance: dict | None = None) -> dict:
    if s.q:
        codes = [[" ".join(map(str, r.phases.tolist())) for r in c.rows] for c in s.codes]
    else:
        codes = [[[[float(v.real), float(v.imag)] for v in r.values] for r in c.rows] for c in s.codes]
    return {
        "format": FORMAT,
        "q": s.q,
        "kind": s.kind,
        "params": {"K": s.K, "M": s.M, "Z": s.Z, "N": s.N},
        "codes": codes,
        "provenance": dict(provenance or {}),
    }


def dumps(s: CodeSet, provenance: dict | None = None) -> str:
    return json.dumps(set_to_document(s, provenance), indent=2, sort_keys=True) + "\n"


def _fail(msg):
    raise DocumentError(msg)


def document_to_set(doc) -> tuple[CodeSet, dict]:
    """Validate a parsed document and rebuild the set; returns ``(set, provenance)``."""
    if not isinstance(doc, dict):
        _fail("document must be a JSON object")
    if doc.get("format") != FORMAT:
        _fail(f"unsupported format {doc.get('format')!r}; expected {FORMAT!r}")
    q = doc.get("q")
    if not isinstance(q, int) or isinstance(q, bool) or q < 0:
        _fail("q must be a non-negative integer")
    params = doc.get("params")
    if not isinstance(params, dict) or any(not isinstance(params.get(k), int) for k in "KMZN"):
        _fail("params must hold integers K, M, Z, N")
    kind = doc.get("kind", "raw")
    if kind not in SET_KINDS:
        _fail(f"unknown kind {kind!r}")
    raw = doc.get("codes")
    if not isinstance(raw, list) or len(raw) != params["K"]:
        _fail("codes must be a list of K codes")
    codes = []
    try:
        for code in raw:
            if not isinstance(code, list) or len(code) != params["M"]:
                _fail("every code must have M rows")
            rows = []
            for row in code:
                if q:
                    if not isinstance(row, str):
                        _fail("rows must be strings of phase integers")
                    phases = [int(tok) for tok in row.split()]
                    if any(p < 0 or p >= q for p in phases):
                        _fail(f"phase out of range 0..{q - 1}")
                    rows.append(PhaseSequence(phases, q=q))
                else:
                    vals = np.array(row, dtype=float)
                    if vals.ndim != 2 or vals.shape[1] != 2:
                        _fail("complex rows must be lists of [re, im] pairs")
                    rows.append(PhaseSequence(values=vals[:, 0] + 1j * vals[:, 1], q=0))
                if rows[-1].length != params["N"]:
                    _fail("row length does not match N")
            codes.append(CodeMatrix(rows))
        s = CodeSet(codes, Z=params["Z"], kind=kind)
    except DocumentError:
        raise
    except (ValueError, TypeError) as exc:
        raise DocumentError(str(exc)) from exc
    prov = doc.get("provenance", {})
    if not isinstance(prov, dict):
        _fail("provenance must be an object")
    s.meta.update(prov)
    return s, prov


def loads(text: str) -> tuple[CodeSet, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return document_to_set(doc)


def write_document(path, s: CodeSet, provenance: dict | None = None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(s, provenance))


def read_document(path) -> tuple[CodeSet, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return loads(text)


# -- sign-matrix text ---------------------------------------------------------
def _row_text(r: PhaseSequence) -> str:
    if r.q == 2:
        return " ".join("+-"[p] for p in r.phases)
    if r.q:
        return " ".join(str(p) for p in r.phases)
    return " ".join(f"{v.real:+.6f}{v.imag:+.6f}j" for v in r.values)


def sign_matrix_text(s: CodeSet, header: bool = True) -> str:
    """Codes as blank-line separated blocks: '+'/'-' for binary, phase digits for q-ary."""
    lines = []
    if header:
        lines.append(f"# {s.kind} (K,M,Z,N) = ({s.K},{s.M},{s.Z},{s.N})")
        lines.append(f"# q={s.q}")
    for k, code in enumerate(s.codes):
        if k:
            lines.append("")
        lines.extend(_row_text(r) for r in code.rows)
    return "\n".join(lines) + "\n"


def parse_sign_matrix(text: str, q: int | None = None) -> list[list[PhaseSequence]]:
    """Inverse of :func:`sign_matrix_text` for q > 0.

    Blocks are separated by blank lines.  Binary rows use '+'/'-'; other
    rows are whitespace separated phase integers and need ``q`` either as
    an argument or from a ``# q=<int>`` comment line.
    """
    blocks, cur = [], []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            if body.startswith("q=") and q is None:
                try:
                    q = int(body[2:])
                except ValueError as exc:
                    raise DocumentError(f"bad alphabet line {line!r}") from exc
            continue
        if not stripped:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(stripped)
    if cur:
        blocks.append(cur)
    if not blocks:
        raise DocumentError("no sequences found")
    out = []
    for block in blocks:
        rows = []
        for line in block:
            tokens = line.replace(",", " ").split()
            if len(tokens) == 1 and set(tokens[0]) <= set("+-"):
                tokens = list(tokens[0])
            if all(t in ("+", "-") for t in tokens):
                rows.append(PhaseSequence.from_signs("".join(tokens)))
                continue
            if q is None or q < 1:
                raise DocumentError("q-ary rows need an alphabet order ('# q=<int>')")
            try:
                rows.append(PhaseSequence([int(t) for t in tokens], q=q))
            except ValueError as exc:
                raise DocumentError(f"bad row {line!r}") from exc
        out.append(rows)
    return out
