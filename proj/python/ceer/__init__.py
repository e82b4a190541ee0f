"""Coded enumerations of equivalence relations: codings, derived-relation
deciders and the verification harness, backed by the C++ core."""

import json

from ._ceer import (
    DEFAULT_FUEL,
    CeerError,
    FuelExhausted,
    NoWalk,
    ScaleExceeded,
    SpecError,
    beta,
    cantor_pair,
    cantor_unpair,
    decide,
    decode_all,
    decode_seq,
    dyadic_pair,
    dyadic_unpair,
    encode_seq,
    is_valid_code,
    spec_name,
)
from . import _ceer

__version__ = "0.1.0"


def _spec_text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def coding(spec, n, fuel=DEFAULT_FUEL, merged=False):
    """The coding table of `spec` through n entries, as a dict."""
    return json.loads(_ceer.coding_json(_spec_text(spec), n, fuel, merged))


def verify(spec=None, window=16, fuel=DEFAULT_FUEL, seeds=(1,)):
    """Verification report for one relation spec, or every built-in if None."""
    text = None if spec is None else _spec_text(spec)
    return json.loads(_ceer.verify_json(text, window, fuel, list(seeds)))


def generate(spec, window):
    """The relation restricted to [0, window]², as {"bound", "pairs"}."""
    return json.loads(_ceer.generate_json(_spec_text(spec), window))


__all__ = [
    "CeerError",
    "DEFAULT_FUEL",
    "FuelExhausted",
    "NoWalk",
    "ScaleExceeded",
    "SpecError",
    "beta",
    "cantor_pair",
    "cantor_unpair",
    "coding",
    "decide",
    "decode_all",
    "decode_seq",
    "dyadic_pair",
    "dyadic_unpair",
    "encode_seq",
    "generate",
    "is_valid_code",
    "spec_name",
    "verify",
]
