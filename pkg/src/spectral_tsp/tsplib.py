"""Reader for the classic TSPLIB problem-file format (symmetric instances).

Supports EDGE_WEIGHT_TYPE EXPLICIT (FULL_MATRIX, UPPER_ROW, LOWER_ROW,
UPPER_DIAG_ROW, LOWER_DIAG_ROW), EUC_2D, ATT, and GEO.  Distances are
realized exactly as the format defines them, including the integer
rounding conventions, so values agree with published optima:

  EUC_2D  nint(sqrt(dx^2 + dy^2)) with nint(x) = floor(x + 0.5)
  ATT     r = sqrt((dx^2 + dy^2) / 10), t = nint(r), d = t + (t < r)
  GEO     degrees.minutes decoding (deg = nint(coord)), great-circle
          distance on a sphere of radius 6378.388, truncated to int

Parse failures raise typed errors naming the offending line.  A companion
"sidecar" file may record the known optimal tour length as a single
`optimum: <value>` line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DimensionMismatch,
    InputFormatError,
    TruncatedSection,
    UnsupportedKeyword,
)

_WEIGHT_TYPES = {"EXPLICIT", "EUC_2D", "ATT", "GEO"}
_WEIGHT_FORMATS = {"FULL_MATRIX", "UPPER_ROW", "LOWER_ROW", "UPPER_DIAG_ROW", "LOWER_DIAG_ROW"}
_HEADER_KEYS = {
    "NAME",
    "TYPE",
    "COMMENT",
    "DIMENSION",
    "EDGE_WEIGHT_TYPE",
    "EDGE_WEIGHT_FORMAT",
    "DISPLAY_DATA_TYPE",
    "NODE_COORD_TYPE",
}
_SECTIONS = {"NODE_COORD_SECTION", "EDGE_WEIGHT_SECTION", "DISPLAY_DATA_SECTION"}


@dataclass
class TsplibProblem:
    name: str
    dimension: int
    edge_weight_type: str
    matrix: np.ndarray
    coords: np.ndarray | None = None


def _nint(x: float) -> int:
    return int(math.floor(x + 0.5))


def _euc_2d(coords: np.ndarray) -> np.ndarray:
    n = len(coords)
    D = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            dx = coords[i, 0] - coords[j, 0]
            dy = coords[i, 1] - coords[j, 1]
            D[i, j] = D[j, i] = _nint(math.sqrt(dx * dx + dy * dy))
    return D


def _att(coords: np.ndarray) -> np.ndarray:
    n = len(coords)
    D = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            dx = coords[i, 0] - coords[j, 0]
            dy = coords[i, 1] - coords[j, 1]
            r = math.sqrt((dx * dx + dy * dy) / 10.0)
            t = _nint(r)
            D[i, j] = D[j, i] = t + 1 if t < r else t
    return D


def _geo_radians(coords: np.ndarray) -> np.ndarray:
    out = np.zeros_like(coords)
    for i, coord in enumerate(coords):
        for k in (0, 1):
            deg = _nint(coord[k])
            minutes = coord[k] - deg
            out[i, k] = math.pi * (deg + 5.0 * minutes / 3.0) / 180.0
    return out


def _geo(coords: np.ndarray) -> np.ndarray:
    rad = _geo_radians(coords)
    rrr = 6378.388
    n = len(coords)
    D = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            q1 = math.cos(rad[i, 1] - rad[j, 1])
            q2 = math.cos(rad[i, 0] - rad[j, 0])
            q3 = math.cos(rad[i, 0] + rad[j, 0])
            d = int(rrr * math.acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0)
            D[i, j] = D[j, i] = d
    return D


_COORD_DISTANCE = {"EUC_2D": _euc_2d, "ATT": _att, "GEO": _geo}


def _explicit_positions(fmt: str, n: int) -> list[tuple[int, int]]:
    """Fill order (i, j) of an EDGE_WEIGHT_SECTION in the given format."""
    if fmt == "FULL_MATRIX":
        return [(i, j) for i in range(n) for j in range(n)]
    if fmt == "UPPER_ROW":
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    if fmt == "LOWER_ROW":
        return [(i, j) for i in range(n) for j in range(i)]
    if fmt == "UPPER_DIAG_ROW":
        return [(i, j) for i in range(n) for j in range(i, n)]
    if fmt == "LOWER_DIAG_ROW":
        return [(i, j) for i in range(n) for j in range(i + 1)]
    raise AssertionError(fmt)


def parse_tsplib(text: str, source: str = "<string>") -> TsplibProblem:
    """Parse TSPLIB problem text into a realized distance matrix."""
    lines = text.splitlines()
    header: dict[str, str] = {}
    coords: np.ndarray | None = None
    weights: list[float] | None = None

    def fail(exc, lineno, msg):
        raise exc(f"{source}, line {lineno + 1}: {msg}")

    i = 0
    while i < len(lines):
        line = lines[i].strip()
        if not line:
            i += 1
            continue
        key = line.split(":", 1)[0].strip().upper()

        if key == "EOF":
            break

        if key in _HEADER_KEYS:
            if ":" not in line:
                fail(InputFormatError, i, f"expected '{key}: value'")
            value = line.split(":", 1)[1].strip()
            # reject unsupported kinds at the offending line, before any
            # section is parsed under a wrong assumption
            if key == "EDGE_WEIGHT_TYPE" and value not in _WEIGHT_TYPES:
                fail(UnsupportedKeyword, i, f"EDGE_WEIGHT_TYPE {value!r} is not supported")
            if key == "TYPE" and value.split()[0] != "TSP":
                fail(UnsupportedKeyword, i, f"only TYPE TSP is supported, got {value.split()[0]!r}")
            header[key] = value
            i += 1
            continue

        if key in _SECTIONS:
            if "DIMENSION" not in header:
                fail(InputFormatError, i, f"{key} before DIMENSION")
            n = int(header["DIMENSION"])

            if key == "NODE_COORD_SECTION":
                rows = np.zeros((n, 2))
                for k in range(n):
                    i += 1
                    if i >= len(lines):
                        fail(TruncatedSection, i - 1, f"coordinates end after {k} of {n} points")
                    parts = lines[i].split()
                    if len(parts) != 3:
                        fail(TruncatedSection, i, f"expected 'index x y', got {lines[i].strip()!r}")
                    try:
                        idx, x, y = int(parts[0]), float(parts[1]), float(parts[2])
                    except ValueError:
                        fail(TruncatedSection, i, f"malformed coordinate line {lines[i].strip()!r}")
                    if idx != k + 1:
                        fail(DimensionMismatch, i, f"coordinate index {idx}, expected {k + 1}")
                    rows[k] = (x, y)
                coords = rows
                i += 1
                continue

            if key == "DISPLAY_DATA_SECTION":
                i += 1 + n  # cosmetic plotting coordinates; not used
                continue

            # EDGE_WEIGHT_SECTION
            fmt = header.get("EDGE_WEIGHT_FORMAT")
            if fmt not in _WEIGHT_FORMATS:
                fail(UnsupportedKeyword, i, f"EDGE_WEIGHT_FORMAT {fmt!r} is not supported")
            need = len(_explicit_positions(fmt, n))
            weights = []
            start = i
            while len(weights) < need:
                i += 1
                if i >= len(lines):
                    fail(TruncatedSection, start, f"section has {len(weights)} of {need} entries")
                try:
                    vals = [float(tok) for tok in lines[i].split()]
                except ValueError:
                    fail(TruncatedSection, i, f"section has {len(weights)} of {need} entries")
                weights.extend(vals)
            if len(weights) > need:
                fail(DimensionMismatch, i, f"section has more than the {need} entries implied by DIMENSION")
            i += 1
            continue

        fail(UnsupportedKeyword, i, f"unsupported keyword {key!r}")

    if "DIMENSION" not in header:
        raise InputFormatError(f"{source}: missing DIMENSION")
    n = int(header["DIMENSION"])
    if n < 3:
        raise DimensionMismatch(f"{source}: DIMENSION must be at least 3, got {n}")
    problem_type = header.get("TYPE", "TSP").split()[0]
    if problem_type != "TSP":
        raise UnsupportedKeyword(f"{source}: only TYPE TSP is supported, got {problem_type!r}")
    wtype = header.get("EDGE_WEIGHT_TYPE")
    if wtype not in _WEIGHT_TYPES:
        raise UnsupportedKeyword(f"{source}: EDGE_WEIGHT_TYPE {wtype!r} is not supported")

    if wtype == "EXPLICIT":
        if weights is None:
            raise InputFormatError(f"{source}: EXPLICIT problem has no EDGE_WEIGHT_SECTION")
        fmt = header["EDGE_WEIGHT_FORMAT"]
        D = np.zeros((n, n))
        for (r, c), v in zip(_explicit_positions(fmt, n), weights):
            D[r, c] = v
            if fmt != "FULL_MATRIX":
                D[c, r] = v
        if not np.array_equal(D, D.T):
            raise InputFormatError(f"{source}: FULL_MATRIX weights are not symmetric")
        if np.any(np.diagonal(D) != 0):
            raise InputFormatError(f"{source}: nonzero diagonal in EDGE_WEIGHT_SECTION")
    else:
        if coords is None:
            raise InputFormatError(f"{source}: {wtype} problem has no NODE_COORD_SECTION")
        D = _COORD_DISTANCE[wtype](coords)

    return TsplibProblem(
        name=header.get("NAME", Path(source).stem),
        dimension=n,
        edge_weight_type=wtype,
        matrix=D,
        coords=coords,
    )


def load_tsplib(path) -> TsplibProblem:
    p = Path(path)
    return parse_tsplib(p.read_text(), source=str(p))


def read_optimum(path) -> float:
    """Read a sidecar file holding one `optimum: <value>` line."""
    p = Path(path)
    for lineno, raw in enumerate(p.read_text().splitlines()):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        if key.strip().lower() != "optimum" or not value.strip():
            raise InputFormatError(f"{p}, line {lineno + 1}: expected 'optimum: <value>'")
        try:
            return float(value.strip())
        except ValueError:
            raise InputFormatError(f"{p}, line {lineno + 1}: optimum is not a number") from None
    raise InputFormatError(f"{p}: no optimum line found")


def load_with_optimum(problem_path, sidecar_path=None) -> tuple[TsplibProblem, float | None]:
    """Load a problem and, if present, its known optimal length.

    With no explicit sidecar path, looks for the problem file's name with a
    .opt suffix and returns None for the optimum when that does not exist.
    """
    problem = load_tsplib(problem_path)
    if sidecar_path is None:
        candidate = Path(problem_path).with_suffix(".opt")
        if not candidate.exists():
            return problem, None
        sidecar_path = candidate
    return problem, read_optimum(sidecar_path)
