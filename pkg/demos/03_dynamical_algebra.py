"""Generators of so(2, 2n+1) as differential operators, and their brackets.

The generators are built from pi = -i d + A by commutators, then a few of
the bracket relations and the quadratic relation are shown, first exactly
and then in double precision.
"""
from fractions import Fraction

from micz_verify import ProblemConfig, build_generators, commutator, verify_quadratic_relations
from micz_verify.micz import bracket_rhs, compare, quadratic_sum
from micz_verify.exact import random_points

cfg = ProblemConfig(n=2, two_mu=1)
gs = build_generators(cfg)
print(f"D = {gs.D}, spinor size {gs.dim}, a = {gs.a}, {len(gs.labels())} generators")

pts = random_points(gs.D, 3, 0)
for (A, B), (A2, B2) in [((1, 2), (3, 4)), ((-1, 0), (5, 0)), ((1, 5), (-1, 2))]:
    lhs = commutator(gs.J(A, B), gs.J(A2, B2))
    rhs = bracket_rhs(gs, A, B, A2, B2)
    verdicts = [(s, ok) for s, _, ok, _ in compare(lhs, rhs, pts)]
    print(f"[J{A},{B}, J{A2},{B2}]  order {lhs.order}  ->  {verdicts}")

for B, C in [(-1, -1), (0, 0), (1, 2)]:
    q = quadratic_sum(gs, B, C)
    print(f"sum_A eta^AA {{J[A,{B}], J[A,{C}]}} =", q.coefficient((0,) * gs.D)[0][0], "(order", q.order, ")")

rep = verify_quadratic_relations(ProblemConfig(n=2, two_mu=1, mode="float"))
print("float mode worst residual:", max(float(it.residual) for it in rep.items))
print("expected constant -2a =", -2 * Fraction(gs.a))
