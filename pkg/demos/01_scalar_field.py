"""Exact arithmetic with functions of x and r = |x|.

Every element is kept as f + g*r with f, g rational functions of x, so the
relation r^2 = |x|^2 is applied eagerly and equality is decided exactly.
"""
from micz_verify import RationalPoint, context, differentiate, eval_exact, normalize

ctx = context(4)
x1, x4, r = ctx.x(1), ctx.x(4), ctx.r

e = normalize(1 / (r + x4))
print("1/(r + x4)        =", e.f_part(), "+ r *", e.g_part())
print("d/dx1 (1/r)       =", differentiate(1 / r, 1))
print("(x1 + r)(x1 - r)  =", (x1 + r) * (x1 - r))

for coords in ([3, 4, 0, 0], [1, 0, 0, 2], [1, 1, 1, 1]):
    p = RationalPoint(coords)
    print(f"at {coords}: r = {eval_exact(r, p)}, 1/(r+x4) = {eval_exact(e, p)}")
