"""Monic polynomials over GF(p) used as tube parameters.

Coefficient tuples are stored highest degree first, as in
``sympy.polys.galoistools``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow

from ..errors import InvalidParameterError
from ..ffla import check_prime

_X = sympy.Symbol("x")


@dataclass(frozen=True)
class TubeParameter:
    """A monic irreducible polynomial over GF(p), or the point at infinity (``coeffs is None``)."""

    p: int
    coeffs: tuple[int, ...] | None

    @property
    def is_infinite(self) -> bool:
        return self.coeffs is None

    @property
    def degree(self) -> int:
        return 1 if self.coeffs is None else len(self.coeffs) - 1

    def __str__(self) -> str:
        return "inf" if self.coeffs is None else format_poly(self.coeffs)


def format_poly(coeffs: tuple[int, ...]) -> str:
    n = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        e = n - i
        if c == 0:
            continue
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    return len(coeffs) >= 2 and bool(gf_irreducible_p([int(c) for c in coeffs], p, ZZ))


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible polynomials of the given degree, in lexicographic order."""
    check_prime(p)
    out = []
    for tail in itertools.product(range(p), repeat=degree):
        f = (1,) + tail
        if is_irreducible(f, p):
            out.append(f)
    return tuple(out)


def tube_parameters(p: int, max_degree: int) -> list[TubeParameter]:
    """Infinity first, then monic irreducibles by degree."""
    out = [TubeParameter(p, None)]
    for d in range(1, max_degree + 1):
        out.extend(TubeParameter(p, f) for f in monic_irreducibles(p, d))
    return out


def parse_parameter(text: str, p: int) -> TubeParameter:
    """Read ``"inf"`` or a polynomial in ``x`` such as ``"x^2+x+1"`` or ``"x-1"``.

    Coefficients are reduced mod p; the result must be monic and irreducible.
    """
    check_prime(p)
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo", "∞"):
        return TubeParameter(p, None)
    try:
        expr = sympy.sympify(t.replace("^", "**"), locals={"x": _X})
        poly = sympy.Poly(expr, _X)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError, SyntaxError) as exc:
        raise InvalidParameterError(f"cannot read polynomial {text!r}") from exc
    if poly.free_symbols - {_X}:
        raise InvalidParameterError(f"polynomial {text!r} must only involve x")
    coeffs = tuple(int(c) % p for c in poly.all_coeffs())
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) < 2 or coeffs[0] != 1:
        raise InvalidParameterError(f"{text!r} is not monic of positive degree over GF({p})")
    if not is_irreducible(coeffs, p):
        raise InvalidParameterError(f"{format_poly(coeffs)} is reducible over GF({p})")
    return TubeParameter(p, coeffs)


def poly_power(coeffs: tuple[int, ...], t: int, p: int) -> tuple[int, ...]:
    return tuple(int(c) for c in gf_pow([int(c) for c in coeffs], t, p, ZZ))


def companion_matrix(coeffs: tuple[int, ...], p: int) -> np.ndarray:
    """Companion matrix of a monic polynomial: ``x`` acting on ``GF(p)[x]/(f)`` in the basis 1, x, ..."""
    n = len(coeffs) - 1
    C = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        C[i + 1, i] = 1
    # x * x^(n-1) = -sum c_j x^j, coeffs[n - j] is the coefficient of x^j
    for j in range(n):
        C[j, n - 1] = (-coeffs[n - j]) % p
    return C
