"""Versioned JSON grid-file format shared by the library and the CLI.

Layout (format tag "monokernels-grid", version 1): one JSON object with

  format       fixed string "monokernels-grid"
  version      fixed integer 1
  m            dimension, integer in 1..4
  shape        list of m positive integers (samples per axis)
  spacing      list of m positive floats
  origin       list of m floats (coordinates of the first sample)
  blade_order  list of 2^m blade names in bitmask order, e.g.
               ["1", "e1", "e2", "e12"] for m = 2
  samples      flat list of [re, im] pairs, blade-major: the pair for blade
               index b at row-major grid index k sits at position
               b * prod(shape) + k

Floats are written at repr precision, so a write/read cycle reproduces the
grid bit-for-bit.  Parse failures report the byte offset where decoding
stopped; semantic failures (wrong tag, mismatched lengths, non-finite
entries) report a message without an offset.
"""

import json
import math

import numpy as np

from .clifford import algebra
from .errors import GridFormatError
from .spectral import GridFunction

FORMAT_TAG = "monokernels-grid"
FORMAT_VERSION = 1


def blade_names(m):
    """Blade labels in bitmask order: "1", then "e..." with ascending indices."""
    names = []
    for mask in range(1 << m):
        if mask == 0:
            names.append("1")
        else:
            names.append("e" + "".join(str(j + 1) for j in range(m) if mask >> j & 1))
    return names


def write_grid(path, grid):
    """Write a GridFunction to path in the version-1 JSON layout."""
    flat = grid.values.reshape(grid.values.shape[0], -1)
    samples = [[float(z.real), float(z.imag)] for row in flat for z in row]
    payload = {
        "format": FORMAT_TAG,
        "version": FORMAT_VERSION,
        "m": grid.m,
        "shape": list(grid.shape),
        "spacing": [float(s) for s in grid.spacing],
        "origin": [float(o) for o in grid.origin],
        "blade_order": blade_names(grid.m),
        "samples": samples,
    }
    with open(path, "w", encoding="ascii") as handle:
        json.dump(payload, handle, separators=(",", ":"))
        handle.write("\n")


def _require(condition, message):
    if not condition:
        raise GridFormatError(message)


def read_grid(path):
    """Read a version-1 grid file back into a GridFunction."""
    with open(path, "r", encoding="ascii") as handle:
        text = handle.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise GridFormatError(f"grid file is not valid JSON: {err.msg}", byte_offset=err.pos)
    _require(isinstance(payload, dict), "grid file must contain a JSON object")
    _require(
        payload.get("format") == FORMAT_TAG,
        f"unrecognized format tag {payload.get('format')!r}; expected {FORMAT_TAG!r}",
    )
    _require(
        payload.get("version") == FORMAT_VERSION,
        f"unsupported grid format version {payload.get('version')!r}",
    )
    m = payload.get("m")
    _require(isinstance(m, int) and 1 <= m <= 4, f"m must be an integer in 1..4, got {m!r}")
    shape = payload.get("shape")
    _require(
        isinstance(shape, list)
        and len(shape) == m
        and all(isinstance(n, int) and n > 0 for n in shape),
        f"shape must list {m} positive integers",
    )
    spacing = payload.get("spacing")
    _require(
        isinstance(spacing, list)
        and len(spacing) == m
        and all(isinstance(s, (int, float)) and s > 0 for s in spacing),
        f"spacing must list {m} positive numbers",
    )
    origin = payload.get("origin")
    _require(
        isinstance(origin, list)
        and len(origin) == m
        and all(isinstance(o, (int, float)) for o in origin),
        f"origin must list {m} numbers",
    )
    _require(
        payload.get("blade_order") == blade_names(m),
        f"blade_order must match the bitmask order for m = {m}",
    )
    samples = payload.get("samples")
    dim = algebra(m).dim
    count = dim * int(np.prod(shape))
    _require(
        isinstance(samples, list) and len(samples) == count,
        f"samples must list {count} [re, im] pairs (2^m blades times the grid size)",
    )
    flat = np.empty(count, dtype=np.complex128)
    for k, pair in enumerate(samples):
        _require(
            isinstance(pair, list)
            and len(pair) == 2
            and all(isinstance(p, (int, float)) and math.isfinite(p) for p in pair),
            f"sample {k} must be a pair of finite numbers",
        )
        flat[k] = complex(pair[0], pair[1])
    values = flat.reshape((dim,) + tuple(shape))
    return GridFunction(m, tuple(shape), tuple(spacing), tuple(origin), values)
