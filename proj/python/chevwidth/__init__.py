"""Chevalley groups over finite fields and function rings.

Every function returns plain Python data decoded from the JSON produced by
the C++ core. Words are lists of ``{"root": index, "param": element}`` and
matrices are lists of rows; elements may be integers, expression strings
such as ``"t^2+1"`` or coefficient objects ``{"ring": ..., "coeffs": [...]}``.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from . import _chevwidth as _core

__all__ = [
    "ChevwidthError",
    "roots_info",
    "constants",
    "verify_commutator",
    "symplectic_form",
    "eval_word",
    "collect",
    "k2_witness",
    "k2_class",
    "k2_ring",
    "factor",
    "unitriangular",
    "tavgen",
    "acceptance",
]


class ChevwidthError(Exception):
    """A library failure; ``code`` is the error name, e.g. ``"NotUnimodular"``."""

    def __init__(self, message: str):
        super().__init__(message)
        self.code = message.split(":", 1)[0]


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.ChevwidthError as e:
        raise ChevwidthError(str(e)) from None


def _matrix(rows) -> str:
    if isinstance(rows, dict):
        return json.dumps(rows)
    return json.dumps({"rows": [[x if isinstance(x, (int, dict)) else str(x) for x in r] for r in rows]})


def roots_info(system: str) -> dict:
    return json.loads(_call(_core.roots_info, system))


def constants(system: str) -> dict:
    return json.loads(_call(_core.constants, system))


def verify_commutator(system: str, ring: str, rep: str = "", trials: int = 25, seed: int = 7) -> dict:
    return json.loads(_call(_core.verify_commutator, system, ring, rep, trials, seed))


def symplectic_form(rank: int) -> list:
    return _call(_core.symplectic_form, rank)


def eval_word(system: str, rep: str, ring: str, word: list) -> dict:
    return json.loads(_call(_core.eval_word, system, rep, ring, json.dumps(word)))


def collect(system: str, ring: str, word: list) -> list:
    return json.loads(_call(_core.collect, system, ring, json.dumps(word)))


def k2_witness(system: str, ring: str, word: list) -> str:
    return _call(_core.k2_witness, system, ring, json.dumps(word))


def k2_class(ring: str, f: str, g: str) -> dict:
    return json.loads(_call(_core.k2_class, ring, f, g))


def k2_ring(ring: str) -> dict:
    return json.loads(_call(_core.k2_ring, ring))


def factor(ring: str, system: str, matrix) -> dict:
    return json.loads(_call(_core.factor, ring, system, _matrix(matrix)))


def unitriangular(system: str, field: str, matrix, N: int = 4) -> Optional[dict]:
    return json.loads(_call(_core.unitriangular, system, field, _matrix(matrix), N))


def tavgen(target: str, field: int, N: int = 4, exhaustive: bool = False, walk: int = 1000, seed: int = 7) -> dict:
    return json.loads(_call(_core.tavgen, target, field, N, exhaustive, walk, seed))


def acceptance(criterion: int = 0, seed: int = 7, expensive: bool = False) -> list[Any]:
    return json.loads(_call(_core.acceptance, criterion, seed, expensive))
