"""Class expansions of symmetric functions evaluated at Jucys-Murphy elements.

Polynomials are returned as dicts mapping (z_exponent, alpha_exponent) to
fractions.Fraction; partitions as tuples of parts.
"""

import json
from fractions import Fraction

from . import _jmc
from ._jmc import GuardRailError, DEFAULT_SEED

__all__ = [
    "DEFAULT_SEED",
    "GuardRailError",
    "central_character",
    "character",
    "expand",
    "gen_catalan",
    "moment",
    "oracle",
    "partitions_of",
    "phi_series",
    "psi_series",
    "reduced",
    "run_cli",
    "verify",
]


def _poly(obj):
    return {(t["z"], t["alpha"]): Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}


def _partition(text):
    return tuple(int(p) for p in text.split(",")) if text else ()


def _coeffs(obj):
    return {_partition(key): _poly(value) for key, value in obj["coeffs"].items()}


def partitions_of(n):
    return [tuple(p) for p in _jmc.partitions_of(n)]


def expand(family, k, n, l=0):
    """a_mu(n) for every mu |- n, from the reduced recurrences."""
    return _coeffs(json.loads(_jmc.expand_json(family, k, n, l)))


def reduced(family, k, l=0, cap=-1):
    """The n-independent coefficients c_rho."""
    return _coeffs(json.loads(_jmc.reduced_json(family, k, l, cap)))


def oracle(family, k, n, l=0, force=False):
    """a_mu(n) by brute force in the group algebra of S_n."""
    return _coeffs(json.loads(_jmc.oracle_json(family, k, n, l, force)))


def character(lam, mu):
    return int(_jmc.mn_character(list(lam), list(mu)))


def central_character(lam, mu):
    return Fraction(_jmc.central_character(list(lam), list(mu)))


def moment(lam, k):
    return Fraction(_jmc.moment(list(lam), k))


def gen_catalan(r, method="defsum"):
    return _poly(json.loads(_jmc.gen_catalan_json(r, method)))


def _series(text):
    return [_poly(c) for c in json.loads(text)["series"]["coeffs"]]


def phi_series(family, rho, order):
    """Coefficients of t^0 .. t^(order-1) of phi_rho(t)."""
    return _series(_jmc.phi_series_json(family, list(rho), order))


def psi_series(family, rho, order):
    return _series(_jmc.psi_series_json(family, list(rho), order))


def verify(suite="all", max_n=5, max_k=4, seed=DEFAULT_SEED, force=False, threads=0):
    """Runs a verification suite and returns the report as a dict."""
    return json.loads(_jmc.verify_json(suite, max_n, max_k, seed, force, threads))


def run_cli(args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _jmc.run_cli(list(args))
