"""Exact Picard-Fuchs series, mod-p congruences, supersingular loci and point-count oracles."""

import json as _json
import os as _os
from pathlib import Path as _Path

_packaged = _Path(__file__).with_name("data")
if "PFKIT_DATA" not in _os.environ and (_packaged / "descriptors").is_dir():
    _os.environ["PFKIT_DATA"] = str(_packaged)

from . import _core  # noqa: E402
from ._core import DescriptorError, PfkitError, RamifiedPrime, data_directory, descriptor_hash, frobenius_solution  # noqa: E402

__version__ = _core.__version__


def solve(family, order=30):
    return _json.loads(_core.solve_json(family, order))


def congruence(family, prime, order=0):
    return _json.loads(_core.congruence_json(family, prime, order))


def locus(family, prime):
    return _json.loads(_core.locus_json(family, prime))


def oracle(family, prime, exts=(1,), model=""):
    return _json.loads(_core.oracle_json(family, prime, list(exts), model))


def igusa(family, prime):
    return _json.loads(_core.igusa_json(family, prime))


def modforms(family, order=100, emit=("tprime",), primes=()):
    return _json.loads(_core.modforms_json(family, order, list(emit), list(primes)))


def bounds(family, primes=(), jobs=1):
    return _json.loads(_core.bounds_json(family, list(primes), jobs))


def crosscheck(family, prime, exts=(1, 2)):
    return _json.loads(_core.crosscheck_json(family, prime, list(exts)))


__all__ = [
    "DescriptorError",
    "PfkitError",
    "RamifiedPrime",
    "bounds",
    "congruence",
    "crosscheck",
    "data_directory",
    "descriptor_hash",
    "frobenius_solution",
    "igusa",
    "locus",
    "modforms",
    "oracle",
    "solve",
]
