"""
Restriction to a Levi and the twisted duality
=============================================

For a subset ``I`` of the generators there are two ways to restrict an element
of the Hecke algebra to the parabolic subalgebra: keep its standard
coordinates on ``W_I`` (``proj_std``) or its costandard coordinates
(``proj_cos``).  They differ, but become equal once the element is first
multiplied on the left by the relative full twist ``FT_I^-1 FT``.
"""

import random

from heckeduality import ParabolicContext, named_system, render, serre_duality_check, standard
from heckeduality.hecke import h_mul
from heckeduality.parabolic import cone_containment_check, kernel_exchange_check, recollement_check
from heckeduality.verify import random_hecke

ctx = ParabolicContext(named_system("B3"), [1, 2])
print("W =", ctx.system.name, " I =", ctx.label, " Levi order", ctx.levi.order, " u =", ctx.u)

###############################################################################
# The two projections of a basis element outside ``W_I`` disagree.

w = ctx.system.from_word([1, 2, 0])
print("proj_std(H_w) =", render(ctx.proj_std(standard(w))))
print("proj_cos(H_w) =", render(ctx.proj_cos(standard(w))))
print("proj_std(FT_rel H_w) =", render(ctx.proj_std(h_mul(ctx.ft_rel, standard(w)))))

###############################################################################
# Checking every ``w`` in W.

outcomes = serre_duality_check(ctx)
print(sum(o.ok for o in outcomes), "of", len(outcomes), "elements satisfy the identity")

###############################################################################
# The supporting statements: the full twist swaps the two kernels, the cone of
# ``H_u -> costandard(u)`` avoids ``W_I``, and every element splits into a
# Levi part plus a part with no costandard coordinates on ``W_I``.

exchange = kernel_exchange_check(ctx)
print({k: all(o.ok for o in v) for k, v in exchange.items()})
print(cone_containment_check(ctx)["contained"])
rng = random.Random(0)
print(all(recollement_check(ctx, random_hecke(ctx.system, rng)) for _ in range(20)))
