# # Alternating sign matrices
# Monotone triangles with bottom row (1..n) are in bijection with n x n ASMs.
# Row i of the triangle lists the columns whose partial sum over the first i
# matrix rows is 1.

from monotri import AsmMatrix, asm_counts, asm_to_mt, mt_to_asm
from monotri.asm import census, iter_asms, vsasm_brute

a = AsmMatrix(((0, 1, 0), (1, -1, 1), (0, 1, 0)))
t = asm_to_mt(a)
print(t.line())
print(mt_to_asm(t).to_text())

for n in range(1, 6):
    print(n, asm_counts(n), census(iter_asms(n)))

# Refined counts: the 1 of the first row sits in column i.

print([asm_counts(5, i) for i in range(1, 6)])

# Vertically symmetric ASMs, by number of -1s.

print(vsasm_brute(5), vsasm_brute(7))
