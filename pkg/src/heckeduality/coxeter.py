"""Finite Weyl groups from Coxeter data.

A system is built from a bond matrix ``m`` (``m[i][i] == 1``, off-diagonal
entries in ``{2, 3, 4, 6}``).  We pick a crystallographic Cartan matrix for
it and let each element act on the root lattice, written in the basis of
simple roots.  An element is stored as the integer matrix whose ``j``-th
column is the image of the ``j``-th simple root, so that

* the length is the number of positive roots sent to negative roots,
* ``s`` is a right descent of ``w`` iff column ``s`` of ``w`` is negative,
* ``s`` is a left descent of ``w`` iff it is a right descent of ``w^-1``.

Elements are interned per system: two equal elements are the same object.
Hashes only depend on the matrix entries, so iteration over sets of
elements is reproducible between runs.

Generators are numbered ``0 .. rank-1`` here.  Text formats (braid words,
rendered Hecke elements) number them from 1.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "CoxeterError",
    "MalformedMatrix",
    "NonSpherical",
    "MixedSystems",
    "GroupTooLarge",
    "CoxeterSystem",
    "WeylElement",
    "Parabolic",
    "build_system",
    "named_bond_matrix",
    "named_system",
    "load_datum",
    "multiply",
    "inverse",
    "descents",
    "canonical_reduced_word",
    "enumerate_elements",
    "elements_of_parabolic",
    "longest_element",
    "bruhat_leq",
    "bruhat_lower_set",
    "longest_coset_representative",
    "flipped_complement",
    "is_downward_closed",
]

DEFAULT_MAX_GROUP_ORDER = 1_200_000
DEFAULT_MAX_ROOTS = 512

# product of the two Cartan entries for each allowed bond
_CARTAN_PRODUCT = {2: 0, 3: 1, 4: 2, 6: 3}


class CoxeterError(ValueError):
    pass


class MalformedMatrix(CoxeterError):
    pass


class NonSpherical(CoxeterError):
    pass


class MixedSystems(CoxeterError):
    pass


class GroupTooLarge(CoxeterError):
    pass


def _check_bond_matrix(bond_matrix) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in bond_matrix)
    except (TypeError, ValueError) as exc:
        raise MalformedMatrix(f"bond matrix is not an integer matrix: {exc}") from None
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedMatrix(f"row {i} has length {len(row)}, expected {n}")
        if row[i] != 1:
            raise MalformedMatrix(f"diagonal entry ({i}, {i}) is {row[i]}, expected 1")
        for j, m in enumerate(row):
            if i == j:
                continue
            if m != rows[j][i]:
                raise MalformedMatrix(f"bond matrix is not symmetric at ({i}, {j})")
            if m not in _CARTAN_PRODUCT:
                raise MalformedMatrix(
                    f"bond ({i}, {j}) = {m} is not crystallographic (allowed: 2, 3, 4, 6)"
                )
    return rows


def _cartan_from_bonds(bonds) -> tuple[tuple[int, ...], ...]:
    n = len(bonds)
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p = _CARTAN_PRODUCT[bonds[i][j]]
            if p:
                # the lower-indexed node carries the short root
                cartan[i][j] = -1
                cartan[j][i] = -p
    return tuple(tuple(r) for r in cartan)


def _has_cycle(bonds) -> bool:
    n = len(bonds)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if bonds[i][j] != 2:
                a, b = find(i), find(j)
                if a == b:
                    return True
                parent[a] = b
    return False


def _is_negative(vec) -> bool:
    for x in vec:
        if x:
            return x < 0
    return False


class CoxeterSystem:
    """A finite crystallographic Coxeter system ``(W, S)``.

    The element table is materialized only when something asks for it
    (``elements()``, ``order``), and never beyond ``max_group_order``.
    """

    def __init__(
        self,
        bond_matrix,
        name: str | None = None,
        max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
        max_roots: int = DEFAULT_MAX_ROOTS,
    ):
        self.bond_matrix = _check_bond_matrix(bond_matrix)
        self.rank = len(self.bond_matrix)
        self.name = name if name is not None else f"bonds{list(map(list, self.bond_matrix))}"
        self.max_group_order = max_group_order
        self.generators = tuple(range(self.rank))
        if _has_cycle(self.bond_matrix):
            raise NonSpherical(f"{self.name}: Coxeter graph has a cycle")
        self.cartan = _cartan_from_bonds(self.bond_matrix)
        self.positive_roots = self._close_roots(max_roots)
        self.simple_reflection_action = tuple(
            self._reflection_matrix(i) for i in self.generators
        )
        self._interned: dict[tuple, WeylElement] = {}
        self._elements: tuple[WeylElement, ...] | None = None
        self._bruhat_memo: dict[tuple[WeylElement, WeylElement], bool] = {}
        self._lower_sets: dict[WeylElement, frozenset] = {}
        self._longest: dict[frozenset, WeylElement] = {}
        ident = tuple(
            tuple(1 if i == j else 0 for i in range(self.rank)) for j in range(self.rank)
        )
        self.identity = self._intern(ident)

    def __repr__(self):
        return f"CoxeterSystem({self.name!r}, rank={self.rank})"

    # -- root system -----------------------------------------------------

    def pairing(self, i: int, vec) -> int:
        """``<alpha_i^vee, vec>`` for ``vec`` in simple-root coordinates."""
        row = self.cartan[i]
        return sum(row[k] * vec[k] for k in range(self.rank))

    def reflect(self, i: int, vec) -> tuple[int, ...]:
        c = self.pairing(i, vec)
        if not c:
            return tuple(vec)
        out = list(vec)
        out[i] -= c
        return tuple(out)

    def _close_roots(self, max_roots: int) -> tuple[tuple[int, ...], ...]:
        simple = [tuple(1 if k == i else 0 for k in range(self.rank)) for i in range(self.rank)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(self.rank):
                gamma = self.reflect(i, beta)
                if _is_negative(gamma) or gamma in seen:
                    continue
                seen.add(gamma)
                if len(seen) > max_roots:
                    raise NonSpherical(
                        f"{self.name}: more than {max_roots} positive roots"
                    )
                queue.append(gamma)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    def _reflection_matrix(self, i: int):
        return tuple(
            tuple(self.reflect(i, tuple(1 if k == j else 0 for k in range(self.rank))))
            for j in range(self.rank)
        )

    # -- elements ----------------------------------------------------------

    def _intern(self, matrix) -> WeylElement:
        elt = self._interned.get(matrix)
        if elt is None:
            if len(self._interned) >= self.max_group_order:
                raise GroupTooLarge(
                    f"{self.name}: more than {self.max_group_order} elements requested"
                )
            elt = WeylElement(self, matrix)
            self._interned[matrix] = elt
        return elt

    def simple(self, i: int) -> WeylElement:
        if not 0 <= i < self.rank:
            raise IndexError(f"{self.name} has no generator {i}")
        return self.identity.rmul(i)

    def from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            if not 0 <= i < self.rank:
                raise IndexError(f"{self.name} has no generator {i}")
            w = w.rmul(i)
        return w

    def elements(self) -> tuple[WeylElement, ...]:
        """All of ``W``, sorted by length and then canonical word."""
        if self._elements is None:
            layer = [self.identity]
            seen = {self.identity}
            while layer:
                nxt = []
                for w in layer:
                    for i in self.generators:
                        x = w.rmul(i)
                        if x not in seen and x.length > w.length:
                            seen.add(x)
                            nxt.append(x)
                layer = nxt
            self._elements = tuple(sorted(seen, key=WeylElement.sort_key))
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    @property
    def longest(self) -> WeylElement:
        return self.longest_element(self.generators)

    def longest_element(self, subset: Iterable[int]) -> WeylElement:
        key = frozenset(subset)
        if not key <= set(self.generators):
            raise IndexError(f"{sorted(key)} is not a subset of the generators of {self.name}")
        w = self._longest.get(key)
        if w is None:
            # climb: right-multiply by any generator of the subset that is not a descent
            w = self.identity
            while True:
                for i in sorted(key):
                    if i not in w.right_descents:
                        w = w.rmul(i)
                        break
                else:
                    break
            self._longest[key] = w
        return w

    def _check_same(self, *elts):
        for e in elts:
            if e.system is not self:
                raise MixedSystems(f"element of {e.system.name} used with {self.name}")

    # -- Bruhat order --------------------------------------------------------

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        self._check_same(u, w)
        return self._bruhat(u, w)

    def _bruhat(self, u, w) -> bool:
        if u.length > w.length:
            return False
        if u.length == w.length:
            return u is w
        if u is self.identity:
            return True
        key = (u, w)
        res = self._bruhat_memo.get(key)
        if res is None:
            # lifting property along a left descent of w
            s = min(w.left_descents)
            sw = w.lmul(s)
            su = u.lmul(s)
            res = self._bruhat(su if su.length < u.length else u, sw)
            self._bruhat_memo[key] = res
        return res

    def bruhat_lower_set(self, w: WeylElement) -> frozenset:
        self._check_same(w)
        res = self._lower_sets.get(w)
        if res is None:
            if w is self.identity:
                res = frozenset((w,))
            else:
                s = min(w.left_descents)
                below = self.bruhat_lower_set(w.lmul(s))
                res = below | {x.lmul(s) for x in below}
            self._lower_sets[w] = res
        return res


class WeylElement:
    """An element of a finite Weyl group; treat as immutable."""

    __slots__ = ("system", "matrix", "length", "_hash", "_rmul", "_lmul", "_word",
                 "_inverse", "_right_descents", "_left_descents")

    def __init__(self, system: CoxeterSystem, matrix):
        self.system = system
        self.matrix = matrix
        self._hash = hash(matrix)
        n = system.rank
        self._rmul: list = [None] * n
        self._lmul: list = [None] * n
        self._word = None
        self._inverse = None
        self._left_descents = None
        self._right_descents = frozenset(j for j in range(n) if _is_negative(matrix[j]))
        length = 0
        for beta in system.positive_roots:
            image = [0] * n
            for j, c in enumerate(beta):
                if c:
                    col = matrix[j]
                    for k in range(n):
                        image[k] += c * col[k]
            if _is_negative(image):
                length += 1
        self.length = length

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other

    def __repr__(self):
        return f"W[{' '.join(str(i + 1) for i in self.word)}]" if self.word else "W[e]"

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def sort_key(self):
        return (self.length, self.word)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def rmul(self, i: int) -> WeylElement:
        """``self * s_i``."""
        x = self._rmul[i]
        if x is None:
            sysm = self.system
            cart = sysm.cartan[i]
            cols = self.matrix
            ci = cols[i]
            new = []
            for j, col in enumerate(cols):
                a = cart[j]
                if a:
                    new.append(tuple(col[k] - a * ci[k] for k in range(sysm.rank)))
                else:
                    new.append(col)
            x = sysm._intern(tuple(new))
            self._rmul[i] = x
            x._rmul[i] = self
        return x

    def lmul(self, i: int) -> WeylElement:
        """``s_i * self``."""
        x = self._lmul[i]
        if x is None:
            sysm = self.system
            x = sysm._intern(tuple(sysm.reflect(i, col) for col in self.matrix))
            self._lmul[i] = x
            x._lmul[i] = self
        return x

    @property
    def right_descents(self) -> frozenset:
        return self._right_descents

    @property
    def left_descents(self) -> frozenset:
        if self._left_descents is None:
            self._left_descents = self.inverse()._right_descents
        return self._left_descents

    def inverse(self) -> WeylElement:
        if self._inverse is None:
            # peel right descents to get a reduced word, then read it backwards
            peeled = []
            w = self
            while w.length:
                s = min(w._right_descents)
                peeled.append(s)
                w = w.rmul(s)
            inv = self.system.identity
            for s in peeled:
                inv = inv.rmul(s)
            self._inverse = inv
            inv._inverse = self
        return self._inverse

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word."""
        if self._word is None:
            letters = []
            w = self
            while w.length:
                s = min(w.left_descents)
                letters.append(s)
                w = w.lmul(s)
            self._word = tuple(letters)
        return self._word

    def is_identity(self) -> bool:
        return self.length == 0


@dataclass(frozen=True)
class Parabolic:
    """A standard parabolic subgroup ``W_I`` together with its combinatorics."""

    system: CoxeterSystem
    subset: frozenset
    elements: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        subset = frozenset(self.subset)
        if not subset <= set(self.system.generators):
            raise IndexError(f"{sorted(subset)} is not a subset of the generators")
        object.__setattr__(self, "subset", subset)
        object.__setattr__(self, "elements", elements_of_parabolic(self.system, subset))

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.elements

    @cached_property
    def longest(self) -> WeylElement:
        return self.system.longest_element(self.subset)

    @cached_property
    def coset_representative(self) -> WeylElement:
        return longest_coset_representative(self.system, self.subset)

    @cached_property
    def complement(self) -> tuple[WeylElement, ...]:
        return tuple(w for w in self.system.elements() if w not in self.elements)

    def label(self) -> str:
        return "{" + ",".join(str(i + 1) for i in sorted(self.subset)) + "}"


# -- named types and datum files -----------------------------------------------

_NAMED = re.compile(r"^([A-G])(\d+)$")


def _chain(n: int, bonds: Sequence[int]):
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, b in enumerate(bonds):
        m[i][i + 1] = m[i + 1][i] = b
    return m


def _irreducible_bonds(kind: str, n: int):
    if kind == "A" and n >= 1:
        return _chain(n, [3] * (n - 1))
    if kind in "BC" and n >= 2:
        return _chain(n, [3] * (n - 2) + [4])
    if kind == "D" and n >= 4:
        m = _chain(n, [3] * (n - 2))
        # the last node branches off node n-3
        m[n - 2][n - 1] = m[n - 1][n - 2] = 2
        m[n - 3][n - 1] = m[n - 1][n - 3] = 3
        return m
    if kind == "E" and n in (6, 7, 8):
        # Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to node 4
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            m[i][j] = m[j][i] = 3
        return m
    if kind == "F" and n == 4:
        return _chain(4, [3, 4, 3])
    if kind == "G" and n == 2:
        return _chain(2, [6])
    raise MalformedMatrix(f"unknown Cartan type {kind}{n}")


def named_bond_matrix(name: str):
    """Bond matrix for names like ``"B3"`` or ``"A2xA1"``."""
    blocks = []
    for part in name.strip().split("x"):
        mt = _NAMED.match(part.strip())
        if not mt:
            raise MalformedMatrix(f"cannot parse type name {name!r}")
        blocks.append(_irreducible_bonds(mt.group(1), int(mt.group(2))))
    n = sum(len(b) for b in blocks)
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                m[off + i][off + j] = x
        off += len(b)
    return m


def build_system(bond_matrix, name: str | None = None, **kwargs) -> CoxeterSystem:
    return CoxeterSystem(bond_matrix, name=name, **kwargs)


def named_system(name: str, **kwargs) -> CoxeterSystem:
    return CoxeterSystem(named_bond_matrix(name), name=name, **kwargs)


def load_datum(path, **kwargs) -> CoxeterSystem:
    """Read a JSON datum file with keys ``name`` and ``bond_matrix``."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedMatrix(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict) or "bond_matrix" not in data:
        raise MalformedMatrix(f"{path}: expected an object with a 'bond_matrix' field")
    matrix = data["bond_matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise MalformedMatrix(f"{path}: bond_matrix must be an array of arrays")
    return CoxeterSystem(matrix, name=str(data.get("name", Path(path).stem)), **kwargs)


# -- functional interface -------------------------------------------------------

def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.system is not b.system:
        raise MixedSystems(f"cannot multiply elements of {a.system.name} and {b.system.name}")
    w = a
    for i in b.word:
        w = w.rmul(i)
    return w


def inverse(w: WeylElement) -> WeylElement:
    return w.inverse()


def descents(w: WeylElement, side: str = "right") -> frozenset:
    if side == "right":
        return w.right_descents
    if side == "left":
        return w.left_descents
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def canonical_reduced_word(w: WeylElement) -> tuple[int, ...]:
    return w.word


def enumerate_elements(system: CoxeterSystem) -> tuple[WeylElement, ...]:
    return system.elements()


def elements_of_parabolic(system: CoxeterSystem, subset: Iterable[int]) -> frozenset:
    subset = frozenset(subset)
    seen = {system.identity}
    stack = [system.identity]
    while stack:
        w = stack.pop()
        for i in subset:
            x = w.rmul(i)
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return frozenset(seen)


def longest_element(system: CoxeterSystem, subset: Iterable[int] | None = None) -> WeylElement:
    return system.longest_element(system.generators if subset is None else subset)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    if u.system is not w.system:
        raise MixedSystems("Bruhat comparison across systems")
    return u.system.bruhat_leq(u, w)


def bruhat_lower_set(w: WeylElement) -> frozenset:
    return w.system.bruhat_lower_set(w)


def longest_coset_representative(system: CoxeterSystem, subset: Iterable[int]) -> WeylElement:
    """``u = w_0 * w_{0,I}^-1``, the longest minimal representative of ``W / W_I``."""
    w0 = system.longest
    w0_i = system.longest_element(subset)
    u = multiply(w0, w0_i.inverse())
    assert w0.length == u.length + w0_i.length, "length additivity failed for w_0 = u * w_{0,I}"
    return u


def flipped_complement(system: CoxeterSystem, subset: Iterable[int]) -> frozenset:
    """``{w_0 u : u not in W_I}``; a Bruhat lower set."""
    inside = elements_of_parabolic(system, subset)
    w0 = system.longest
    return frozenset(multiply(w0, u) for u in system.elements() if u not in inside)


def is_downward_closed(system: CoxeterSystem, elements: Iterable[WeylElement]) -> bool:
    xs = frozenset(elements)
    return all(system.bruhat_lower_set(x) <= xs for x in xs)
