"""Dense univariate polynomials over the integers.

A polynomial is a tuple of coefficients, lowest degree first, with trailing
zeros stripped; ``()`` is the zero polynomial.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Poly = tuple[int, ...]


def normalize(p: Iterable[int]) -> Poly:
    coeffs = list(p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def coeff(p: Sequence[int], k: int) -> int:
    return p[k] if 0 <= k < len(p) else 0


def degree(p: Poly) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(p) - 1


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out)


def product(factors: Iterable[Poly]) -> Poly:
    out: Poly = (1,)
    for f in factors:
        out = mul(out, f)
    return out


def binomial_term(k: int) -> Poly:
    """``1 - t^k`` for ``k >= 1``."""
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    return normalize([1] + [0] * (k - 1) + [-1])


def divmod_exact(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Long division by ``den``, whose leading coefficient must be a unit (+-1).

    Returns ``(quotient, remainder)`` with integer coefficients.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have leading coefficient +-1")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return (), normalize(rem)
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] * lead
        if c:
            quot[k - dd] = c
            for j, y in enumerate(den):
                rem[k - dd + j] -= c * y
    return normalize(quot), normalize(rem)


def is_palindromic(p: Poly) -> bool:
    return p == p[::-1]


def to_str(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
