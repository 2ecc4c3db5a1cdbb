"""Matched pairs, bicrossed Hopf algebras and braidings over cyclotomic fields.

Structured arguments and results are plain dicts and lists; they are passed to the
C++ core as JSON.
"""

import json as _json

from ._crossact import Cyclotomic, Error, ParseError
from . import _crossact as _core

__all__ = [
    "Cyclotomic", "Error", "ParseError", "run_cli", "validate_pair", "bicrossed_group_order",
    "cocycle_report", "enumerate_cocycles", "build_hopf", "verify_hopf", "monad_check",
    "braiding_pairs", "search_braidings", "verify_braiding",
]


def _enc(x):
    return "" if x is None else _json.dumps(x)


def run_cli(args):
    """Run the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))


def validate_pair(pair):
    return _json.loads(_core.validate_pair(_enc(pair)))


def bicrossed_group_order(pair):
    return _core.bicrossed_group_order(_enc(pair))


def cocycle_report(pair, cocycles=None):
    return _json.loads(_core.cocycle_report(_enc(pair), _enc(cocycles)))


def enumerate_cocycles(pair, N, budget=1000000):
    return _json.loads(_core.enumerate_cocycles(_enc(pair), N, budget))


def build_hopf(pair, cocycles=None):
    return _json.loads(_core.build_hopf(_enc(pair), _enc(cocycles)))


def verify_hopf(hopf):
    return _json.loads(_core.verify_hopf(_enc(hopf)))


def monad_check(pair, cocycles=None):
    return _json.loads(_core.monad_check(_enc(pair), _enc(cocycles)))


def braiding_pairs(pair):
    return _json.loads(_core.braiding_pairs(_enc(pair)))


def search_braidings(pair, braiding_pair, N, cocycles=None):
    return _json.loads(_core.search_braidings(_enc(pair), _enc(cocycles), _enc(braiding_pair), N))


def verify_braiding(pair, braiding, cocycles=None, seed=0):
    return _json.loads(_core.verify_braiding(_enc(pair), _enc(cocycles), _enc(braiding), seed))
