"""Iwahori-Hecke algebra of a finite Weyl group over ``Z[v, v^-1]``.

Normalization: ``H_s^2 = 1 + (v^-1 - v) H_s``, so ``H_s^-1 = H_s + (v - v^-1)``
and ``v`` records the grading shift.  Elements are stored in the standard
basis ``{H_w}`` as a sparse map ``WeylElement -> LaurentPoly``.

The costandard class of ``w`` is ``(H_{w^-1})^-1``.  It equals ``H_w`` plus
terms supported strictly below ``w`` in Bruhat order, so every element has a
unique expansion in the costandard basis.  Two routes compute it:
``expand_costandard`` solves the triangular system directly, and
``to_costandard`` uses the right action of ``H_s`` on costandard classes,

    C_x H_s = C_{xs}                       if xs < x,
    C_x H_s = C_{xs} + (v^-1 - v) C_x      if xs > x,

which is much cheaper when the same system is queried many times.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .coxeter import CoxeterSystem, MixedSystems, WeylElement
from .laurent import ONE, QUANTUM_MINUS, ZERO, LaurentPoly

__all__ = [
    "HeckeElt",
    "InvalidGenerator",
    "standard",
    "h_mul",
    "h_inv_standard",
    "costandard",
    "expand_costandard",
    "from_costandard",
    "to_costandard",
    "costandard_rmul",
    "eval_braid",
    "full_twist_class",
    "render",
    "parse_hecke",
]

_PLUS_MINUS = -QUANTUM_MINUS  # v - v^-1


class InvalidGenerator(ValueError):
    pass


class HeckeElt:
    """Finite linear combination of standard basis elements ``H_w``."""

    __slots__ = ("system", "terms")

    def __init__(self, system: CoxeterSystem, terms: Mapping[WeylElement, LaurentPoly] | None = None):
        self.system = system
        clean = {}
        for w, c in (terms or {}).items():
            if w.system is not system:
                raise MixedSystems(f"term from {w.system.name} in element of {system.name}")
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly(c)
            if c:
                clean[w] = c
        self.terms: dict[WeylElement, LaurentPoly] = clean

    @classmethod
    def _raw(cls, system, terms):
        h = cls.__new__(cls)
        h.system = system
        h.terms = terms
        return h

    @classmethod
    def one(cls, system: CoxeterSystem) -> HeckeElt:
        return cls._raw(system, {system.identity: ONE})

    @classmethod
    def zero(cls, system: CoxeterSystem) -> HeckeElt:
        return cls._raw(system, {})

    def coeff(self, w: WeylElement) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    __hash__ = None

    def _check(self, other):
        if self.system is not other.system:
            raise MixedSystems(f"{self.system.name} vs {other.system.name}")

    def __add__(self, other: HeckeElt) -> HeckeElt:
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return HeckeElt._raw(self.system, out)

    def __neg__(self):
        return HeckeElt._raw(self.system, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        return self + (-other)

    def scale(self, c) -> HeckeElt:
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly(c)
        if not c:
            return HeckeElt.zero(self.system)
        return HeckeElt._raw(self.system, {w: p * c for w, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return h_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- multiplication by one generator -----------------------------------

    def rmul_simple(self, s: int, inverse: bool = False) -> HeckeElt:
        """``self * H_s`` (or ``self * H_s^-1``)."""
        out: dict = {}
        for w, c in self.terms.items():
            ws = w.rmul(s)
            up = ws.length > w.length
            _add(out, ws, c)
            if up == inverse:
                _add(out, w, c * (_PLUS_MINUS if inverse else QUANTUM_MINUS))
        return HeckeElt._raw(self.system, out)

    def lmul_simple(self, s: int, inverse: bool = False) -> HeckeElt:
        """``H_s * self`` (or ``H_s^-1 * self``)."""
        out: dict = {}
        for w, c in self.terms.items():
            sw = w.lmul(s)
            up = sw.length > w.length
            _add(out, sw, c)
            if up == inverse:
                _add(out, w, c * (_PLUS_MINUS if inverse else QUANTUM_MINUS))
        return HeckeElt._raw(self.system, out)

    def __repr__(self):
        return f"HeckeElt({render(self)})"

    __str__ = lambda self: render(self)


def _add(out: dict, w, c):
    s = out.get(w)
    if s is None:
        out[w] = c
    else:
        s = s + c
        if s:
            out[w] = s
        else:
            del out[w]


def _accumulate(out: dict, terms: Mapping):
    for w, c in terms.items():
        _add(out, w, c)


def _cache(system: CoxeterSystem, name: str) -> dict:
    caches = system.__dict__.setdefault("_hecke_caches", {})
    return caches.setdefault(name, {})


def standard(w: WeylElement, coeff=ONE) -> HeckeElt:
    return HeckeElt(w.system, {w: coeff})


def h_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a._check(b)
    out: dict = {}
    # group b's terms by element so each word is walked once
    for w, c in b.terms.items():
        part = a
        for s in w.word:
            part = part.rmul_simple(s)
        for x, p in part.terms.items():
            _add(out, x, p * c)
    return HeckeElt._raw(a.system, out)


def h_inv_standard(w: WeylElement) -> HeckeElt:
    """``H_w^-1``: inverses of the letters of a reduced word, in reverse order."""
    h = HeckeElt.one(w.system)
    for s in reversed(w.word):
        h = h.rmul_simple(s, inverse=True)
    return h


def costandard(w: WeylElement) -> HeckeElt:
    """Class of the costandard object of ``w``: ``(H_{w^-1})^-1``."""
    cache = _cache(w.system, "costandard")
    h = cache.get(w)
    if h is None:
        h = h_inv_standard(w.inverse())
        cache[w] = h
    return h


def expand_costandard(h: HeckeElt) -> dict[WeylElement, LaurentPoly]:
    """Coefficients ``d`` with ``h = sum_w d[w] * costandard(w)``, by back-substitution."""
    rest = dict(h.terms)
    out: dict[WeylElement, LaurentPoly] = {}
    while rest:
        # no remaining support element lies above the longest one in Bruhat order
        w = max(rest, key=WeylElement.sort_key)
        d = rest[w]
        out[w] = d
        for x, c in costandard(w).terms.items():
            _add(rest, x, -(c * d))
        assert w not in rest
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def from_costandard(system: CoxeterSystem, coords: Mapping[WeylElement, LaurentPoly]) -> HeckeElt:
    out: dict = {}
    for w, d in coords.items():
        if d:
            for x, c in costandard(w).terms.items():
                _add(out, x, c * d)
    return HeckeElt._raw(system, out)


def costandard_rmul(coords: Mapping[WeylElement, LaurentPoly], s: int) -> dict:
    """Right multiplication by ``H_s`` on costandard coordinates."""
    out: dict = {}
    for x, c in coords.items():
        xs = x.rmul(s)
        _add(out, xs, c)
        if xs.length > x.length:
            _add(out, x, c * QUANTUM_MINUS)
    return out


def _standard_in_costandard(system: CoxeterSystem) -> dict:
    """Table ``w -> costandard coordinates of H_w`` for all of ``W``."""
    cache = _cache(system, "std_in_cos")
    if not cache:
        cache[system.identity] = {system.identity: ONE}
        for w in system.elements():
            if w is system.identity:
                continue
            s = w.word[-1]
            cache[w] = costandard_rmul(cache[w.rmul(s)], s)
    return cache


def to_costandard(h: HeckeElt) -> dict[WeylElement, LaurentPoly]:
    """Same result as :func:`expand_costandard`, via a cached per-system table."""
    table = _standard_in_costandard(h.system)
    out: dict = {}
    for w, c in h.terms.items():
        for x, d in table[w].items():
            _add(out, x, d * c)
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def eval_braid(system: CoxeterSystem, word: Iterable[tuple[int, int]]) -> HeckeElt:
    """Image of a signed braid word under ``sigma_i -> H_{s_i}``."""
    h = HeckeElt.one(system)
    for i, sign in word:
        if not 0 <= i < system.rank or sign not in (1, -1):
            raise InvalidGenerator(f"({i}, {sign}) is not a letter of {system.name}")
        h = h.rmul_simple(i, inverse=sign < 0)
    return h


def full_twist_class(system: CoxeterSystem, subset: Iterable[int] | None = None) -> HeckeElt:
    """``H_{w_0,I}^2``."""
    w0 = system.longest_element(system.generators if subset is None else subset)
    h = standard(w0)
    for s in w0.word:
        h = h.rmul_simple(s)
    return h


# -- text -----------------------------------------------------------------------

def _word_label(w: WeylElement) -> str:
    return " ".join(str(i + 1) for i in w.word)


def render(h: HeckeElt) -> str:
    """Deterministic text form, e.g. ``1 + (v^-1 − v)·H[1]``."""
    items = sorted(h.terms.items(), key=lambda kv: kv[0].sort_key())
    if not items:
        return "0"
    parts = []
    for w, c in items:
        if w.length == 0:
            text = str(c)
            if len(c) > 1 and len(items) > 1:
                text = f"({text})"
        else:
            basis = f"H[{_word_label(w)}]"
            if c.is_one():
                text = basis
            elif (-c).is_one():
                text = "−" + basis
            elif len(c) == 1:
                text = f"{c}·{basis}"
            else:
                text = f"({c})·{basis}"
        parts.append(text)
    out = parts[0]
    for text in parts[1:]:
        if text.startswith("−"):
            out += " − " + text[1:]
        else:
            out += " + " + text
    return out


_TERM = re.compile(r"^(?P<coeff>.*?)(?:·?H\[(?P<word>[\d ]*)\])?$")


def _split_top_level(text: str) -> list[tuple[str, str]]:
    parts, depth, start, sign = [], 0, 0, "+"
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text[i:i + 3] in (" + ", " − "):
            parts.append((sign, text[start:i]))
            sign = "+" if text[i + 1] == "+" else "-"
            start = i + 3
            i += 3
            continue
        i += 1
    parts.append((sign, text[start:]))
    return parts


def parse_hecke(system: CoxeterSystem, text: str) -> HeckeElt:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        return HeckeElt.zero(system)
    out: dict = {}
    for sign, term in _split_top_level(text):
        term = term.strip()
        neg = sign == "-"
        mt = _TERM.match(term)
        if mt is None:
            raise ValueError(f"cannot parse term {term!r}")
        coeff, word = mt.group("coeff"), mt.group("word")
        if word is None:
            w = system.identity
            c = LaurentPoly.parse(coeff)
        else:
            letters = [int(t) - 1 for t in word.split()]
            w = system.from_word(letters)
            if w.length != len(letters):
                raise ValueError(f"H[{word}] is not a reduced word")
            if coeff in ("", "−", "-"):
                c = ONE if coeff == "" else -ONE
            else:
                c = LaurentPoly.parse(coeff)
        _add(out, w, -c if neg else c)
    return HeckeElt._raw(system, out)
