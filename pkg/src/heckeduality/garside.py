"""Spherical Artin-Tits braid groups and their left Garside normal form.

Every braid is written uniquely as ``Δ^k x_1 ... x_m`` where ``Δ`` is the
positive lift of the longest element, each ``x_i`` is the positive lift of a
Weyl group element other than ``e`` and ``w_0``, and each adjacent pair is
left-weighted: ``left_descents(x_{i+1}) ⊆ right_descents(x_i)``.

Simple braids are identified with Weyl group elements.  Useful facts:

* ``x Δ = Δ τ(x)`` with ``τ(x) = w_0 x w_0``;
* ``x^-1 = Δ^-1 (w_0 x^-1)`` for a simple ``x``, since ``(w_0 x^-1) x = w_0``
  is length-additive.

Braid words are sequences of ``(generator, ±1)`` with 0-based generators; the
text syntax is 1-based signed integers, e.g. ``"1 2 -1"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import CoxeterSystem, MixedSystems, WeylElement, longest_coset_representative
from .hecke import InvalidGenerator

__all__ = [
    "BraidWord",
    "GarsideNF",
    "InvalidGenerator",
    "parse_braid_word",
    "format_braid_word",
    "identity",
    "delta",
    "generator",
    "positive_lift",
    "negative_lift",
    "nf_from_word",
    "nf_multiply",
    "nf_inverse",
    "nf_equal",
    "word_of",
    "full_twist",
    "check_ft_central",
    "check_conjugation_identity",
]

BraidWord = tuple  # of (generator, sign) pairs


def parse_braid_word(text: str) -> BraidWord:
    letters = []
    for tok in text.replace(",", " ").split():
        try:
            n = int(tok)
        except ValueError:
            raise InvalidGenerator(f"not a signed integer: {tok!r}") from None
        if n == 0:
            raise InvalidGenerator("generator 0 does not exist (words are 1-based)")
        letters.append((abs(n) - 1, 1 if n > 0 else -1))
    return tuple(letters)


def format_braid_word(word: Iterable[tuple[int, int]]) -> str:
    return " ".join(str((i + 1) * sign) for i, sign in word)


@dataclass(frozen=True)
class GarsideNF:
    system: CoxeterSystem
    delta_power: int
    factors: tuple[WeylElement, ...]

    def __mul__(self, other: GarsideNF) -> GarsideNF:
        return nf_multiply(self, other)

    def __invert__(self) -> GarsideNF:
        return nf_inverse(self)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self):
        words = ", ".join(
            "[" + " ".join(str(i + 1) for i in x.word) + "]" for x in self.factors
        )
        return f"Δ^{self.delta_power} · [{words}]"

    def __repr__(self):
        return f"GarsideNF({self})"


def _tau_table(system: CoxeterSystem) -> tuple[int, ...]:
    table = system.__dict__.get("_tau_generators")
    if table is None:
        w0 = system.longest
        perm = []
        for i in system.generators:
            x = w0 * system.simple(i) * w0
            assert x.length == 1
            perm.append(x.word[0])
        table = tuple(perm)
        system.__dict__["_tau_generators"] = table
    return table


def _tau(x: WeylElement) -> WeylElement:
    perm = _tau_table(x.system)
    return x.system.from_word(perm[i] for i in x.word)


def _slide(a: WeylElement, b: WeylElement) -> tuple[WeylElement, WeylElement]:
    """Left-weight the pair ``(a, b)`` by moving letters from ``b`` into ``a``."""
    while True:
        movable = b.left_descents - a.right_descents
        if not movable:
            return a, b
        s = min(movable)
        a = a.rmul(s)
        b = b.lmul(s)


def _normalize(system: CoxeterSystem, k: int, factors: Sequence[WeylElement]) -> GarsideNF:
    if system.rank == 0:
        return GarsideNF(system, 0, ())
    fs = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a, b = _slide(fs[i], fs[i + 1])
            if a is not fs[i]:
                fs[i], fs[i + 1] = a, b
                changed = True
    w0 = system.longest
    lo, hi = 0, len(fs)
    while lo < hi and fs[lo] is w0:
        lo += 1
    while lo < hi and fs[hi - 1].length == 0:
        hi -= 1
    return GarsideNF(system, k + lo, tuple(fs[lo:hi]))


class _Builder:
    """Accumulates ``Δ^k y_1 ... y_n`` without normalizing."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.k = 0
        self.factors: list[WeylElement] = []

    def simple(self, x: WeylElement):
        self.factors.append(x)

    def delta(self, j: int):
        if j % 2:
            self.factors = [_tau(x) for x in self.factors]
        self.k += j

    def simple_inverse(self, x: WeylElement):
        self.delta(-1)
        self.factors.append(self.system.longest * x.inverse())

    def nf(self, other: GarsideNF):
        self.delta(other.delta_power)
        self.factors.extend(other.factors)

    def result(self) -> GarsideNF:
        return _normalize(self.system, self.k, self.factors)


def identity(system: CoxeterSystem) -> GarsideNF:
    return GarsideNF(system, 0, ())


def delta(system: CoxeterSystem, power: int = 1) -> GarsideNF:
    return GarsideNF(system, power, ())


def generator(system: CoxeterSystem, i: int, sign: int = 1) -> GarsideNF:
    return nf_from_word(system, ((i, sign),))


def positive_lift(w: WeylElement) -> GarsideNF:
    """The simple braid of ``w`` (class of the standard object)."""
    return _normalize(w.system, 0, (w,))


def negative_lift(w: WeylElement) -> GarsideNF:
    """``positive_lift(w^-1)^-1`` (class of the costandard object)."""
    return nf_inverse(positive_lift(w.inverse()))


def nf_from_word(system: CoxeterSystem, word: Iterable[tuple[int, int]]) -> GarsideNF:
    b = _Builder(system)
    for i, sign in word:
        if not 0 <= i < system.rank or sign not in (1, -1):
            raise InvalidGenerator(f"({i}, {sign}) is not a letter of {system.name}")
        s = system.simple(i)
        if sign > 0:
            b.simple(s)
        else:
            b.simple_inverse(s)
    return b.result()


def _same(a: GarsideNF, b: GarsideNF):
    if a.system is not b.system:
        raise MixedSystems(f"braids of {a.system.name} and {b.system.name}")


def nf_multiply(a: GarsideNF, b: GarsideNF) -> GarsideNF:
    _same(a, b)
    bl = _Builder(a.system)
    bl.nf(a)
    bl.nf(b)
    return bl.result()


def nf_inverse(a: GarsideNF) -> GarsideNF:
    bl = _Builder(a.system)
    for x in reversed(a.factors):
        bl.simple_inverse(x)
    bl.delta(-a.delta_power)
    return bl.result()


def nf_equal(a: GarsideNF, b: GarsideNF) -> bool:
    _same(a, b)
    return a.delta_power == b.delta_power and a.factors == b.factors


def word_of(a: GarsideNF) -> BraidWord:
    """A braid word representing ``a``."""
    w0_word = a.system.longest.word
    letters: list[tuple[int, int]] = []
    if a.delta_power >= 0:
        letters.extend((i, 1) for i in w0_word * a.delta_power)
    else:
        letters.extend((i, -1) for i in tuple(reversed(w0_word)) * -a.delta_power)
    for x in a.factors:
        letters.extend((i, 1) for i in x.word)
    return tuple(letters)


def full_twist(system: CoxeterSystem, subset: Iterable[int] | None = None) -> GarsideNF:
    """Square of the positive lift of the longest element of ``W_I``."""
    w = system.longest_element(system.generators if subset is None else subset)
    lift = positive_lift(w)
    return nf_multiply(lift, lift)


def check_ft_central(system: CoxeterSystem) -> bool:
    ft = full_twist(system)
    for i in system.generators:
        g = generator(system, i)
        if not nf_equal(nf_multiply(ft, g), nf_multiply(g, ft)):
            return False
    return True


def conjugation_identities(system: CoxeterSystem, subset: Iterable[int]) -> dict[str, bool]:
    """Both braid identities relating the full twists of ``W`` and ``W_I``.

    With ``u = w_0 w_{0,I}^-1``:
    ``FT = Δ_u FT_I Δ_{u^-1}`` and ``FT_I = FT ∇_{u^-1} ∇_u``.
    """
    subset = frozenset(subset)
    u = longest_coset_representative(system, subset)
    ft = full_twist(system)
    ft_i = full_twist(system, subset)
    conj = nf_multiply(nf_multiply(positive_lift(u), ft_i), positive_lift(u.inverse()))
    costd = nf_multiply(nf_multiply(ft, negative_lift(u.inverse())), negative_lift(u))
    return {
        "conjugation": nf_equal(ft, conj),
        "costandard_form": nf_equal(ft_i, costd),
    }


def check_conjugation_identity(system: CoxeterSystem, subset: Iterable[int]) -> bool:
    return all(conjugation_identities(system, subset).values())
