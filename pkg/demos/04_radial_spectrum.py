"""Energy levels, Laguerre eigenfunctions and the twist map.

Each angular sector l reduces to a radial problem.  The twisted states are
eigenfunctions of Gamma_-1 with eigenvalue k + l_mu, and the twist map
carries normalized bound states onto them without changing the norm.
"""
from micz_verify import GaussianRational, SpectralLabel, radial_eigenfunction, radial_operator, twist_map
from micz_verify.radial import inner

n, two_mu = 2, 1
print("level  energy")
for I in range(4):
    print(f"{I:>5}  {SpectralLabel(I + 1, 0, n, two_mu).energy}")

for k, l in [(1, 0), (2, 1), (3, 2)]:
    lab = SpectralLabel(k, l, n, two_mu)
    psi = radial_eigenfunction(lab, twisted=True)
    G = radial_operator("Gamma-1", l, n, two_mu, twisted=True)
    print(f"k={k} l={l}: Gamma_-1 psi = {lab.nu} psi ? {G.apply(psi) == psi.scale(lab.nu)};"
          f" twist(R) == psi ? {twist_map(lab) == psi}; <psi, psi> = {inner(psi, psi, n)}")

That = radial_operator("T", 0, n, two_mu, twisted=True)
Gp = radial_operator("GammaD+1", 0, n, two_mu, twisted=True)
psi1 = radial_eigenfunction(SpectralLabel(1, 0, n, two_mu), twisted=True)
i = GaussianRational(0, 1)
print("(T + i Gamma_D+1) on the lowest state is zero:", (That + Gp.scale(i)).apply(psi1).is_zero())
