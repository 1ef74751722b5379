# # Q- and P-weighted enumerations
# Replacing (2 - Q) in the operator tracks entries strictly between their
# neighbours below. These entries are the -1s of the matching alternating sign
# matrix. A P-deformation of the operators counts weak monotone triangles
# instead.

from monotri import classical_formula, p_genfun, p_weight_weak_brute, q_weight_brute
from monotri.ring import eval_pq

k = (1, 2, 3, 4)
q_poly = classical_formula(k, "Q")
print("Q-generating function:", q_poly)
print("oracle agrees:", q_poly == q_weight_brute(k))

# Q = 2 gives the 2-enumeration 2^binom(n,2) * prod (k_j-k_i)/(j-i).

print("2-enumeration:", eval_pq(q_poly, 1, 2))

# The P-weight lives on weakly increasing rows.

for row in [(1, 2), (1, 3), (0, 2, 2), (1, 1, 3)]:
    g = p_genfun(row)
    print(row, g, g == p_weight_weak_brute(row))
