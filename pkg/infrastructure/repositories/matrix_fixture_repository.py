"""
Infrastructure Layer - Matrix Fixture Repository

Implements IMatrixFixtureRepository on the plain-text fixture format:

    # comment lines
    q=27 rows=10 cols=18 modulus=[1,2,0,1] rank=10 d=7
    1, 0, t^10, ...

The header needs q, rows and cols; modulus, rank and d are optional.
"""
import json
import os
from typing import Dict, List, Optional

import numpy as np
from filelock import FileLock
from sympy import factorint

from domain.entities import LinearCodeMatrix, MatrixFixture
from domain.entities.field import FieldSpec, format_element, get_field, parse_element
from domain.errors import ParseError
from domain.interfaces import IMatrixFixtureRepository
from utils.logging_config import logger

_REQUIRED = ("q", "rows", "cols")


def _parse_header(line: str, path: str) -> Dict[str, str]:
    header = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep or not value:
            raise ParseError(f"{path}: malformed header token {token!r}")
        header[key] = value
    missing = [k for k in _REQUIRED if k not in header]
    if missing:
        raise ParseError(f"{path}: header lacks {', '.join(missing)}")
    return header


def _field_for(q: int, modulus: Optional[List[int]], path: str) -> FieldSpec:
    factors = factorint(q)
    if len(factors) != 1:
        raise ParseError(f"{path}: q={q} is not a prime power")
    (p, m), = factors.items()
    return get_field(int(p), int(m), modulus)


def _optional_int(header: Dict[str, str], key: str, path: str) -> Optional[int]:
    if key not in header:
        return None
    try:
        return int(header[key])
    except ValueError as e:
        raise ParseError(f"{path}: {key}={header[key]!r} is not an integer") from e


class MatrixFixtureRepository(IMatrixFixtureRepository):
    """Fixture files with atomic, lock-guarded writes"""

    def load(self, path: str) -> MatrixFixture:
        if not os.path.exists(path):
            raise ParseError(f"fixture not found: {path}")
        with open(path, "r") as f:
            lines = [ln.strip() for ln in f if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ParseError(f"{path}: empty fixture")

        header = _parse_header(lines[0], path)
        try:
            q, rows, cols = (int(header[k]) for k in _REQUIRED)
            modulus = json.loads(header["modulus"]) if "modulus" in header else None
        except (ValueError, json.JSONDecodeError) as e:
            raise ParseError(f"{path}: malformed header: {e}") from e
        spec = _field_for(q, modulus, path)

        body = lines[1:]
        if len(body) != rows:
            raise ParseError(f"{path}: header says {rows} rows, found {len(body)}")
        entries = np.zeros((rows, cols), dtype=np.int32)
        for r, line in enumerate(body):
            tokens = [tok for tok in line.split(",") if tok.strip()]
            if len(tokens) != cols:
                raise ParseError(f"{path}: row {r + 1} has {len(tokens)} entries, expected {cols}")
            entries[r] = [parse_element(tok, spec).code for tok in tokens]

        label = os.path.splitext(os.path.basename(path))[0]
        logger.debug(f"Loaded fixture {path}: {rows}x{cols} over {spec.name}")
        return MatrixFixture(
            path=path,
            matrix=LinearCodeMatrix(spec, entries, label),
            expected_rank=_optional_int(header, "rank", path),
            expected_d=_optional_int(header, "d", path),
        )

    def save(self, path: str, matrix: LinearCodeMatrix,
             expected_rank: Optional[int] = None, expected_d: Optional[int] = None) -> str:
        spec = matrix.field
        header = [f"q={spec.q}", f"rows={matrix.rows}", f"cols={matrix.n}",
                  "modulus=[" + ",".join(str(c) for c in spec.modulus) + "]"]
        if expected_rank is not None:
            header.append(f"rank={expected_rank}")
        if expected_d is not None:
            header.append(f"d={expected_d}")
        lines = [f"# {matrix.label or 'generator matrix'} over {spec.name}", " ".join(header)]
        for row in matrix.entries:
            lines.append(", ".join(format_element(spec.from_code(int(c))) for c in row))

        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with FileLock(f"{path}.lock"):
            temp_file = f"{path}.tmp"
            with open(temp_file, "w") as f:
                f.write("\n".join(lines) + "\n")
            os.replace(temp_file, path)
        logger.info(f"Matrix written to {path}")
        return path
