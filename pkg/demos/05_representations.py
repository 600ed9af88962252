"""Degeneracies from Weyl's formula and the branching Spin(2n+1) -> Spin(2n).

Level I of the spectrum is the Spin(2n+1) module with highest weight
(I + mu, mu, ..., mu); restricting it to Spin(2n) recovers the angular
sectors l = 0..I.
"""
from micz_verify import branch_B_to_D, k_type_table, weyl_dimension
from micz_verify.reps import level_weight, uniqueness_search

for n, two_mu in [(2, 0), (2, 1), (3, 1)]:
    print(f"n = {n}, mu = {two_mu / 2}")
    for I in range(4):
        lam = level_weight(n, two_mu, I)
        parts = branch_B_to_D(lam)
        dims = [weyl_dimension("D", n, m) for m in parts]
        only = uniqueness_search(n, two_mu, I, 5) == [lam]
        print(f"  I={I}: dim {weyl_dimension('B', n, lam):>4} = {' + '.join(map(str, dims)):<24} unique: {only}")
    t = k_type_table(n, two_mu, 2)
    print("  highest weight", tuple(str(x) for x in t["highest_weight"]))
