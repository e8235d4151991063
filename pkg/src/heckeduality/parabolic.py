"""Parabolic induction and its two adjoints, at the level of Hecke algebras.

For a subset ``I`` of the generators, ``H_L`` is the Hecke algebra of the
standard parabolic subgroup ``W_I``, realized on its own Coxeter system (the
"Levi" system, generators renumbered ``0 .. |I|-1``).

* ``incl`` relabels standard basis elements; it is an algebra map.
* ``proj_std`` keeps the standard coordinates on ``W_I`` (left adjoint; its
  kernel is spanned by ``H_x``, ``x`` outside ``W_I``).
* ``proj_cos`` keeps the costandard coordinates on ``W_I`` and reassembles
  them on costandard classes of ``H_L`` (right adjoint; its kernel is spanned
  by costandard classes outside ``W_I``).

The relative full twist is ``FT_I^-1 FT``, acting on the left.  The duality
to check is ``proj_cos(h) == proj_std(FT_rel * h)``.

All checkers return one :class:`Outcome` per case instead of raising, so a
single counterexample never hides the others.
"""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Iterable, Iterator

from .coxeter import (
    CoxeterSystem,
    Parabolic,
    WeylElement,
    is_downward_closed,
)
from .garside import full_twist, word_of
from .hecke import (
    HeckeElt,
    costandard,
    costandard_rmul,
    eval_braid,
    from_costandard,
    full_twist_class,
    render,
    standard,
    to_costandard,
)
from .laurent import LaurentPoly
from .report import Outcome

__all__ = [
    "SupportOutsideParabolic",
    "ParabolicContext",
    "right_orbit",
    "serre_duality_check",
    "recollement_check",
    "kernel_exchange_check",
    "kernel_swap_check",
    "restricted_twist_check",
    "cone_containment_check",
]


class SupportOutsideParabolic(ValueError):
    pass


def _inverse_word(word):
    return tuple((i, -sign) for i, sign in reversed(word))


def right_orbit(system: CoxeterSystem, start, step: Callable) -> Iterator[tuple[WeylElement, object]]:
    """Yield ``(w, start * T_w)`` for every ``w``, building each value from its parent.

    ``step(value, s)`` must implement right multiplication by the generator
    ``T_s``, and ``T_w T_s = T_{ws}`` must hold whenever ``ws > w``.  Only two
    length layers are kept in memory.
    """
    prev: dict = {}
    cur: dict = {}
    length = 0
    for w in system.elements():
        if w.length != length:
            prev, cur, length = cur, {}, w.length
        if w.length == 0:
            val = start
        else:
            s = w.word[-1]
            val = step(prev[w.rmul(s)], s)
        cur[w] = val
        yield w, val


class ParabolicContext:
    """Everything attached to a pair ``(W, I)``; immutable once built."""

    def __init__(self, system: CoxeterSystem, subset: Iterable[int]):
        self.system = system
        self.parabolic = Parabolic(system, frozenset(subset))
        self.subset = self.parabolic.subset
        order = sorted(self.subset)
        self._position = {g: k for k, g in enumerate(order)}
        self.levi = CoxeterSystem(
            [[system.bond_matrix[i][j] for j in order] for i in order],
            name=f"{system.name}|{self.parabolic.label()}",
        )
        self._to_levi: dict[WeylElement, WeylElement] = {}
        self._from_levi: dict[WeylElement, WeylElement] = {}
        for w in sorted(self.parabolic.elements, key=WeylElement.sort_key):
            x = self.levi.from_word(self._position[i] for i in w.word)
            self._to_levi[w] = x
            self._from_levi[x] = w

    @property
    def label(self) -> str:
        return self.parabolic.label()

    @property
    def u(self) -> WeylElement:
        return self.parabolic.coset_representative

    def in_levi(self, w: WeylElement) -> bool:
        return w in self._to_levi

    def to_levi(self, w: WeylElement) -> WeylElement:
        return self._to_levi[w]

    def from_levi(self, x: WeylElement) -> WeylElement:
        return self._from_levi[x]

    # -- full twists -----------------------------------------------------------

    @cached_property
    def ft_word(self):
        return word_of(full_twist(self.system))

    @cached_property
    def ft_levi_word(self):
        return word_of(full_twist(self.system, self.subset))

    @cached_property
    def ft_G(self) -> HeckeElt:
        return full_twist_class(self.system)

    @cached_property
    def ft_L(self) -> HeckeElt:
        return full_twist_class(self.system, self.subset)

    @cached_property
    def ft_rel(self) -> HeckeElt:
        return eval_braid(self.system, _inverse_word(self.ft_levi_word) + self.ft_word)

    @cached_property
    def ft_rel_inv(self) -> HeckeElt:
        return eval_braid(self.system, _inverse_word(self.ft_word) + self.ft_levi_word)

    # -- the three functors ---------------------------------------------------

    def incl(self, h: HeckeElt) -> HeckeElt:
        if h.system is not self.levi:
            raise SupportOutsideParabolic(f"expected an element of {self.levi.name}")
        return HeckeElt(self.system, {self._from_levi[x]: c for x, c in h.terms.items()})

    def restrict_support(self, h: HeckeElt) -> HeckeElt:
        """Reinterpret an element of ``H_G`` supported on ``W_I`` as one of ``H_L``."""
        outside = [w for w in h.terms if w not in self._to_levi]
        if outside:
            raise SupportOutsideParabolic(f"{outside[0]!r} is not in W_{self.label}")
        return HeckeElt(self.levi, {self._to_levi[w]: c for w, c in h.terms.items()})

    def proj_std(self, h: HeckeElt) -> HeckeElt:
        return HeckeElt(
            self.levi, {self._to_levi[w]: c for w, c in h.terms.items() if w in self._to_levi}
        )

    def _levi_from_costandard(self, coords) -> HeckeElt:
        kept = {self._to_levi[w]: d for w, d in coords.items() if w in self._to_levi}
        return from_costandard(self.levi, kept)

    def proj_cos(self, h: HeckeElt) -> HeckeElt:
        return self._levi_from_costandard(to_costandard(h))


# -- checkers ----------------------------------------------------------------------

def _mismatch(lhs, rhs) -> str:
    return f"lhs={render(lhs)} rhs={render(rhs)}"


def _word_case(w: WeylElement) -> str:
    return "[" + " ".join(str(i + 1) for i in w.word) + "]"


def serre_duality_check(ctx: ParabolicContext) -> list[Outcome]:
    """``proj_cos(H_w) == proj_std(FT_rel H_w)`` for every ``w``."""
    system = ctx.system
    coords_orbit = right_orbit(system, {system.identity: LaurentPoly(1)}, costandard_rmul)
    twisted_orbit = right_orbit(system, ctx.ft_rel, lambda h, s: h.rmul_simple(s))
    out = []
    for (w, coords), (w2, twisted) in zip(coords_orbit, twisted_orbit):
        assert w is w2
        lhs = ctx._levi_from_costandard(coords)
        rhs = ctx.proj_std(twisted)
        ok = lhs == rhs
        out.append(Outcome(_word_case(w), ok, "" if ok else _mismatch(lhs, rhs)))
    return out


def recollement_check(ctx: ParabolicContext, h: HeckeElt) -> bool:
    """``h - incl(proj_cos(h))`` has no costandard coordinates on ``W_I``."""
    rest = h - ctx.incl(ctx.proj_cos(h))
    return not any(ctx.in_levi(w) for w in to_costandard(rest))


def _standard_costandard_orbit(system: CoxeterSystem, start: HeckeElt):
    """``start * costandard(w)`` for all ``w`` (costandard classes multiply along reduced words)."""
    return right_orbit(system, start, lambda h, s: h.rmul_simple(s, inverse=True))


def kernel_exchange_check(ctx: ParabolicContext) -> dict[str, list[Outcome]]:
    """The longest element and the full twist carry costandard kernels to standard ones.

    For ``u`` outside ``W_I``: ``H_{w_0} costandard(u) == H_{w_0 u}`` and
    ``FT costandard(u)`` has no standard support on ``W_I``.  Also the set
    ``{w_0 u : u not in W_I}`` is a Bruhat lower set on which the standard
    and costandard spans agree.
    """
    system = ctx.system
    w0 = system.longest
    exchange, twist = [], []
    orbit_w0 = _standard_costandard_orbit(system, standard(w0))
    orbit_ft = _standard_costandard_orbit(system, ctx.ft_G)
    for (u, a), (_, b) in zip(orbit_w0, orbit_ft):
        if ctx.in_levi(u):
            continue
        expected = standard(w0 * u)
        ok = a == expected
        exchange.append(Outcome(_word_case(u), ok, "" if ok else _mismatch(a, expected)))
        bad = sorted((x for x in b.terms if ctx.in_levi(x)), key=WeylElement.sort_key)
        twist.append(Outcome(_word_case(u), not bad,
                             "" if not bad else "standard support meets W_I at "
                             + ", ".join(map(_word_case, bad))))
    tau = frozenset(w0 * u for u in ctx.parabolic.complement)
    closed = is_downward_closed(system, tau)
    spans = closed and all(
        set(costandard(t).terms) <= tau and set(to_costandard(standard(t))) <= tau for t in tau
    )
    detail = f"|set|={len(tau)}"
    if not closed:
        detail += " not downward closed"
    elif not spans:
        detail += " spans differ"
    return {
        "w0_times_costandard": exchange,
        "full_twist_support": twist,
        "flipped_complement_spans": [Outcome("all", closed and spans, detail)],
    }


def kernel_swap_check(ctx: ParabolicContext) -> list[Outcome]:
    """``FT_rel`` maps costandard classes outside ``W_I`` into the standard span outside
    ``W_I``, and ``FT_rel^-1`` maps that span back into the costandard one."""
    system = ctx.system
    forward = _standard_costandard_orbit(system, ctx.ft_rel)
    back_coords = right_orbit(system, to_costandard(ctx.ft_rel_inv), costandard_rmul)
    out = []
    for (u, a), (_, b) in zip(forward, back_coords):
        if ctx.in_levi(u):
            continue
        hit_a = [x for x in a.terms if ctx.in_levi(x)]
        hit_b = [x for x, c in b.items() if c and ctx.in_levi(x)]
        ok = not hit_a and not hit_b
        detail = ""
        if not ok:
            detail = (f"forward meets W_I at {sorted(map(_word_case, hit_a))}; "
                      f"backward meets W_I at {sorted(map(_word_case, hit_b))}")
        out.append(Outcome(_word_case(u), ok, detail))
    return out


def restricted_twist_check(ctx: ParabolicContext) -> bool:
    """``proj_std(FT) == FT_L`` inside ``H_L``."""
    return ctx.proj_std(ctx.ft_G) == full_twist_class(ctx.levi)


def cone_containment_check(ctx: ParabolicContext) -> dict[str, bool | list]:
    """Support of ``H_u^-1 (costandard(u) - H_u)`` in the costandard basis.

    It must lie in ``{u^-1 v : v < u}``, and that set must avoid ``W_I``.
    """
    from .hecke import expand_costandard, h_inv_standard, h_mul

    system, u = ctx.system, ctx.u
    cone = costandard(u) - standard(u)
    c = h_mul(h_inv_standard(u), cone)
    support = set(expand_costandard(c))
    below = system.bruhat_lower_set(u) - {u}
    allowed = {u.inverse() * v for v in below}
    return {
        "contained": support <= allowed,
        "disjoint": not any(ctx.in_levi(x) for x in allowed),
        "support": sorted(support, key=WeylElement.sort_key),
    }
