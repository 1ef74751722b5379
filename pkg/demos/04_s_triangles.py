# # S-triangles
# At P = Q = 1, alpha with m = 0 is a signed count of S-triangles. In these
# triangles an entry may be "special", and its two parents are then pinned at
# offsets (r, t) from S. Other entries interlace, or interlace in reverse below
# an inversion, which costs a factor -1.

from monotri import AlphaSpec, SpecSet, alpha_closed, s_sum_brute
from monotri.ring import eval_pq
from monotri.triangles import iter_s_triangles

spec = SpecSet.from_dict({(0, 1): 2, (2, 0): 3})
for pat, w in list(iter_s_triangles((1, 3, 2, 4), spec))[:8]:
    print(pat.line(), w)

k = (1, 3, 2, 4)
print("sum of weights:", s_sum_brute(k, spec))
print("alpha at P=Q=1:", eval_pq(alpha_closed(AlphaSpec(4, (0,), spec), k), 1, 1))

# With Q kept symbolic, the Q-refined weights give alpha at P=1.

print(s_sum_brute(k, spec, "Q"))
print(alpha_closed(AlphaSpec(4, (0,), spec), k).subs_p(1))
