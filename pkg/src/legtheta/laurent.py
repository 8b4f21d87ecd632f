"""Integer Laurent polynomials in one variable."""
from __future__ import annotations

from typing import Mapping


class LaurentPolynomial:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "A"):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exp: int, coef: int = 1, var: str = "A") -> "LaurentPolynomial":
        return cls({exp: coef}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        return isinstance(other, LaurentPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()}, self.var)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()}, self.var)

    def substitute(self, scale: int, var: str) -> "LaurentPolynomial":
        """Rewrite x^e as y^(e * scale) for a rational ``scale`` given as int
        multiplier or (num, den) pair; exponents must stay integral."""
        num, den = (scale, 1) if isinstance(scale, int) else scale
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(e * num, den)
            if r:
                raise ValueError(f"exponent {e} does not rescale integrally")
            out[q] = c
        return LaurentPolynomial(out, var)

    def reflect(self) -> "LaurentPolynomial":
        """x -> x^-1 (mirror image for bracket and Jones)."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()}, self.var)

    def divide_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        rem = dict(self._terms)
        lo, hi = min(other._terms), max(other._terms)
        lead = other._terms[hi]
        floor = min(rem, default=0) - lo
        quo: dict[int, int] = {}
        while rem:
            top = max(rem)
            e = top - hi
            q, r = divmod(rem[top], lead)
            if r or e < floor:
                raise ValueError("polynomial division is not exact")
            quo[e] = q
            for oe, oc in other._terms.items():
                rem[e + oe] = rem.get(e + oe, 0) - q * oc
                if rem[e + oe] == 0:
                    del rem[e + oe]
        return LaurentPolynomial(quo, self.var)

    def is_zero(self) -> bool:
        return not self._terms

    def __repr__(self):
        return f"LaurentPolynomial({dict(sorted(self._terms.items()))}, var={self.var!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            if mono and abs(c) == 1:
                s = ("-" if c < 0 else "+") + mono
            else:
                s = f"{c:+d}" + ("*" + mono if mono else "")
            parts.append(s)
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}
