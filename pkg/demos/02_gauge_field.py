"""The monopole-type gauge field on R^4 minus the negative x4 axis.

The field strength is built from the potential by the curvature formula and
compared with its closed form, then the gauge identities are checked at
seeded rational points.  The spin-1 background shows which identity is
special to the two admissible charges.
"""
from micz_verify import ProblemConfig, verify_gauge_identities

for two_mu in (1, 2):
    rep = verify_gauge_identities(ProblemConfig(n=2, two_mu=two_mu, points=5, seed=3))
    print(f"mu = {two_mu / 2}: {rep.summary}")
    seen = set()
    for it in rep.items:
        ident = it.id.split("@")[0]
        if ident not in seen:
            seen.add(ident)
            print(f"  {ident:<28} {it.status:<14} {it.anchor}")
