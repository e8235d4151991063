"""Sparse Laurent polynomials in ``v`` with Python integer coefficients."""

from __future__ import annotations

import re

__all__ = ["LaurentPoly", "V", "ONE", "ZERO", "QUANTUM_MINUS"]


class LaurentPoly:
    """Immutable map exponent -> nonzero coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, int):
            self._terms = {0: terms} if terms else {}
        else:
            self._terms = {int(e): int(c) for e, c in dict(terms).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> LaurentPoly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> LaurentPoly:
        return cls._raw({exp: coeff} if coeff else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly._raw({e * n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> LaurentPoly:
        """``v -> v^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def __call__(self, value):
        return sum(c * value ** e for e, c in self._terms.items())

    # -- text ------------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(sorted(self._terms.items())):
            mono = _monomial_str(abs(c), e)
            if i == 0:
                parts.append(("−" if c < 0 else "") + mono)
            else:
                parts.append((" − " if c < 0 else " + ") + mono)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        if re.search(r"[\dv]\s+[\dv]", text):
            raise ValueError(f"missing operator in {text!r}")
        s = text.replace("−", "-").replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if not s:
            raise ValueError("empty polynomial")
        out: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            mt = _MONOMIAL.match(s, pos)
            if not mt or mt.end() == pos or not (mt.group(2) or mt.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
            if pos and not mt.group(1):
                raise ValueError(f"missing sign in {text!r}")
            sign, coeff, var, exp = mt.groups()
            c = int(coeff) if coeff else 1
            e = (int(exp) if exp else 1) if var else 0
            out[e] = out.get(e, 0) + (-c if sign == "-" else c)
            pos = mt.end()
        return cls(out)


_MONOMIAL = re.compile(r"([+-]?)(\d*)(v)?(?:\^(-?\d+))?")


def _monomial_str(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    var = "v" if e == 1 else f"v^{e}"
    return var if c == 1 else f"{c}{var}"


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
V = LaurentPoly.monomial(1, 1)
# v^-1 - v, the quadratic-relation coefficient
QUANTUM_MINUS = LaurentPoly({-1: 1, 1: -1})
