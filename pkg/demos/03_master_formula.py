# # The master quantity alpha
# alpha_{P,Q}(n, m, S, f) comes out of a summation recursion. It also has a
# closed operator form: a product of V-operators applied to a P-binomial
# determinant. Both are exact polynomials in X_i = P^{k_i} over Q(P, Q).

from fractions import Fraction

from monotri import AlphaSpec, SpecSet, alpha_closed_xpoly, alpha_recursive
from monotri.ring import eval_pq

spec = SpecSet.from_dict({(0, 1): Fraction(1, 2), (1, -1): -3})
a = AlphaSpec(3, (1,), spec)

rec = alpha_recursive(a)
closed = alpha_closed_xpoly(a)
print(rec)
print("recursion == closed form:", rec == closed)

# Evaluate at a bottom row and specialize P and Q.

value = closed.evaluate((0, 2, 5))
print("alpha(0,2,5) =", value)
print("at P=Q=1:", eval_pq(value, 1, 1))

# The same number from the point recursion, which never touches P.

from monotri.recursions import Variant, alpha_point_recursion

print("point recursion:", alpha_point_recursion((0, 2, 5), Variant("P1Q1", spec, 1)))
