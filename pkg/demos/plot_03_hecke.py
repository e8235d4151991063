"""
The Hecke algebra and its two bases
===================================

Coefficients are exact Laurent polynomials in ``v``; the quadratic relation is
``H_s^2 = 1 + (v^-1 - v) H_s``.  Besides the standard basis ``H_w`` there is
the costandard basis ``(H_{w^-1})^-1``, unitriangular with respect to the
Bruhat order.
"""

from heckeduality import costandard, eval_braid, full_twist_class, named_system, parse_braid_word, render, standard
from heckeduality.hecke import expand_costandard, h_mul

b2 = named_system("B2")
s1, s2 = b2.simple(0), b2.simple(1)

###############################################################################
# Products in the standard basis.

print("H_s H_s =", render(h_mul(standard(s1), standard(s1))))
print("H_12 H_1 =", render(h_mul(standard(s1 * s2), standard(s1))))

###############################################################################
# Braids act through ``σ_i -> H_i`` and ``σ_i^-1 -> H_i^-1``.

print("class of 1 2 -1:", render(eval_braid(b2, parse_braid_word("1 2 -1"))))

###############################################################################
# A costandard class and the costandard coordinates of a standard one.

w = s1 * s2 * s1
print("costandard(121) =", render(costandard(w)))
coords = expand_costandard(standard(w))
for x, c in sorted(coords.items(), key=lambda kv: kv[0].sort_key()):
    print(f"  coefficient of costandard {x}: {c}")

###############################################################################
# The longest element carries costandard classes to standard ones.

w0 = b2.longest
print(all(h_mul(standard(w0), costandard(u)) == standard(w0 * u) for u in b2.elements()))

###############################################################################
# The class of the full twist in G2, where coefficients grow quickly.

ft = full_twist_class(named_system("G2"))
print("full twist of G2 has", len(ft.terms), "terms; top coefficient", ft.coeff(ft.system.longest))
