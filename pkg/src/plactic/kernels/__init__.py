"""Batch canonical keys: one integer row per word, equal rows iff equal P-symbols.

The numba backend is used when numba imports and ``PLACTIC_BACKEND`` is not
``numpy``; setting ``PLACTIC_BACKEND=numpy`` (or ``PLACTIC_DISABLE_NUMBA=1``)
selects the vectorised numpy path instead. ``batch_keys(..., backend=...)``
overrides the choice per call.

Key layouts for a batch of width n and largest symbol S:

========== ===============================================================
plac       rows of the tableau, each padded to n, min(n, S) rows
hypo       ribbon entries in order (n), then row-break-after flags (n)
sylv       in-order labels (n), then 1-based depths in in-order (n)
sylvsharp  as sylv for the left-strict tree
baxt       sylvsharp key then sylv key
taig       (multiplicity, depth) for each symbol 1..S
stal       (symbol, height) for each column, left to right
lps        columns top to bottom, each padded to min(n, S)
rps        columns top to bottom, each padded to n
========== ===============================================================
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from . import _numpy

try:
    from . import _numba
except ImportError:  # pragma: no cover - numba missing
    _numba = None

_NAMES = ("plac", "hypo", "sylv", "sylvsharp", "baxt", "stal", "taig", "lps", "rps")


def default_backend() -> str:
    if os.environ.get("PLACTIC_DISABLE_NUMBA", "") not in ("", "0"):
        return "numpy"
    choice = os.environ.get("PLACTIC_BACKEND", "").lower()
    if choice == "numpy" or _numba is None:
        return "numpy"
    return "numba"


def available_backends() -> list[str]:
    return ["numpy"] if _numba is None else ["numba", "numpy"]


def pack(words: Iterable[Sequence[int]], width: int | None = None) -> np.ndarray:
    """Zero-padded ``int64[B, width]`` array of words."""
    words = list(words)
    if width is None:
        width = max((len(w) for w in words), default=0)
    arr = np.zeros((len(words), width), dtype=np.int64)
    for i, w in enumerate(words):
        arr[i, : len(w)] = w
    return arr


def unpack(row: np.ndarray) -> tuple[int, ...]:
    return tuple(int(a) for a in row if a)


def batch_keys(monoid: str, words: np.ndarray, max_symbol: int | None = None, backend: str | None = None) -> np.ndarray:
    name = str(monoid)
    if name not in _NAMES:
        raise ValueError(f"unknown monoid {monoid!r}")
    words = np.ascontiguousarray(words, dtype=np.int64)
    if max_symbol is None:
        max_symbol = int(words.max()) if words.size else 1
    max_symbol = max(int(max_symbol), 1)
    backend = backend or default_backend()
    if backend == "numba":
        if _numba is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        module = _numba
    elif backend == "numpy":
        module = _numpy
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return getattr(module, f"{name}_keys")(words, max_symbol)


def differing(monoid: str, lhs: np.ndarray, rhs: np.ndarray, max_symbol: int, backend: str | None = None) -> np.ndarray:
    """Boolean mask: rows where the two word batches have different P-symbols."""
    width = max(lhs.shape[1], rhs.shape[1])
    lhs = _widen(lhs, width)
    rhs = _widen(rhs, width)
    kl = batch_keys(monoid, lhs, max_symbol, backend)
    kr = batch_keys(monoid, rhs, max_symbol, backend)
    return np.any(kl != kr, axis=1)


def _widen(arr: np.ndarray, width: int) -> np.ndarray:
    if arr.shape[1] == width:
        return arr
    out = np.zeros((arr.shape[0], width), dtype=np.int64)
    out[:, : arr.shape[1]] = arr
    return out
