# # Controlling the top entry
# Take a combination of alpha_{1,1}(n, q, {(0,0)}, -1) over q whose
# coefficients form the indicator of i in the binomial basis. That combination
# counts the monotone triangles with top entry i. The indicator has to hold on
# every value the top can take, which is the window [k_1, k_n].

from monotri import enumerate_monotone, indicator_coeffs, top_row_count_via_alpha

print(indicator_coeffs(3, 2).coeffs)

k = (1, 3, 4, 6)
for i in range(1, 7):
    print(i, top_row_count_via_alpha(k, i, range(1, 7)), enumerate_monotone(k, i))

# Nodes 1..n alone only suffice when the bottom row itself is (1..n).

print(top_row_count_via_alpha((1, 2, 3), 2, range(1, 4)), top_row_count_via_alpha((1, 5), 1, range(1, 3)))
