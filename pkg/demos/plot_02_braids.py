"""
Braid words and the Garside normal form
=======================================

Braids are words in signed generators, written ``"1 2 -1"``.  Their
left-greedy normal form ``Δ^k · x_1 ... x_m`` solves the word problem:
two words are the same braid exactly when their normal forms agree.
"""

from heckeduality import full_twist, named_system, nf_from_word, parse_braid_word
from heckeduality.garside import (
    check_conjugation_identity,
    negative_lift,
    nf_equal,
    nf_inverse,
    nf_multiply,
    positive_lift,
)

a2 = named_system("A2")


def nf(text):
    return nf_from_word(a2, parse_braid_word(text))


###############################################################################
# The braid relation and free cancellation disappear in the normal form.

print(nf("1 2 1"), "==", nf("2 1 2"))
print(nf("1 2 -2 -1 1"), "== sigma_1")
print("full twist:", nf("1 2 1 1 2 1"))

###############################################################################
# Inverses of positive lifts: ``σ_1^-1 = Δ^-1 σ_1 σ_2``.

print("negative lift of s1:", negative_lift(a2.simple(0)))

###############################################################################
# Group laws hold on the nose.

x, y = nf("1 -2 2 2 -1"), nf("2 1 -2")
print("x y (x y)^-1 =", nf_multiply(nf_multiply(x, y), nf_inverse(nf_multiply(x, y))))

###############################################################################
# The full twist is central, and for a parabolic ``I`` it factors through the
# Levi full twist and the positive lifts of ``u`` and ``u^-1``.

d4 = named_system("D4")
ft = full_twist(d4)
g = nf_from_word(d4, parse_braid_word("2 -3 1"))
print("D4 full twist central:", nf_equal(nf_multiply(ft, g), nf_multiply(g, ft)))
print("D4, I = {1,3,4}:", check_conjugation_identity(d4, {0, 2, 3}))
print("lifts multiply along s1 * s2:", nf_equal(
    nf_multiply(positive_lift(a2.simple(0)), positive_lift(a2.simple(1))),
    positive_lift(a2.simple(0) * a2.simple(1))))
