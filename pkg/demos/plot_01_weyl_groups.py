"""
Finite Weyl groups from a bond matrix
=====================================

A Coxeter system is given by its bond matrix ``m[i][j]``.  Elements of the
group are stored as integer matrices acting on the root lattice, so lengths,
descents and the Bruhat order are all computed exactly.
"""

from heckeduality import named_system, build_system
from heckeduality.coxeter import flipped_complement, longest_coset_representative

###############################################################################
# Named types and raw bond matrices give the same thing.

b2 = build_system([[1, 4], [4, 1]], name="B2")
print(b2.name, "order", b2.order, "positive roots", len(b2.positive_roots))

a3 = named_system("A3")
print("A3 has", a3.order, "elements; the longest is", a3.longest, "of length", a3.longest.length)

###############################################################################
# Every element carries its lexicographically least reduced word.
# Generators are printed from 1.

for w in a3.elements()[:8]:
    print(f"{str(w):14} length {w.length}  left descents {sorted(i + 1 for i in w.left_descents)}")

###############################################################################
# Bruhat order.  Multiplying by the longest element reverses it.

s1, s2 = a3.simple(0), a3.simple(1)
x, y = s1, s2 * s1
print(x, "<=", y, ":", a3.bruhat_leq(x, y))
w0 = a3.longest
print(w0 * y, "<=", w0 * x, ":", a3.bruhat_leq(w0 * y, w0 * x))
print("interval below", y, "=", sorted(map(str, a3.bruhat_lower_set(y))))

###############################################################################
# Parabolic subgroups.  For ``I = {1}`` in A2, ``u`` is the longest element of
# minimal length in its coset and ``{w0 u'}`` for ``u'`` outside ``W_I`` is a
# Bruhat lower set.

a2 = named_system("A2")
print("u =", longest_coset_representative(a2, {0}))
print("flipped complement:", sorted(map(str, flipped_complement(a2, {0}))))
