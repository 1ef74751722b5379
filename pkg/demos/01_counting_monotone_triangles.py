# # Counting monotone triangles
# A monotone triangle is a triangular array that increases weakly along both
# diagonals and strictly along rows. The operator formula counts them for any
# bottom row, and the brute-force enumerator checks it.

from monotri import classical_formula, enumerate_monotone
from monotri.triangles import iter_monotone

# The seven triangles with bottom row (1,2,3), one per line, bottom row first.

for t in iter_monotone((1, 2, 3)):
    print(t.line())

# The operator formula gives the same number for every strictly increasing row.

for k in [(1, 2, 3), (1, 2, 4), (1, 3, 4, 7), (1, 2, 3, 4, 5)]:
    print(k, enumerate_monotone(k), classical_formula(k))

# The formula is a polynomial, so it also makes sense for rows that are not
# increasing. There it counts S-triangles with signs (see demo 04).

print(classical_formula((2, 1)), classical_formula((3, 1, 2)))
