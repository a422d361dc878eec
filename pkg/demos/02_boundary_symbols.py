"""Cusps and weight-0 boundary symbols.

Classifies cusps under Gamma_1(N), builds the Eisenstein boundary symbols
at levels 5 and 7 from their defining character sums, and evaluates the
explicit level-27 symbol shipped with the package.
"""

from taumt import (
    Cusp,
    DirichletCharacter,
    INFINITY_CUSP,
    cusp_equivalent,
    cusp_representatives,
    eisenstein_boundary_symbol,
    phi9,
)

print("cusps of Gamma_1(5):", [str(c) for c in cusp_representatives(5)])
print("cusps of Gamma_1(27): 30 classes, e.g.", [str(c) for c in cusp_representatives(27)[:8]], "...")

print("\nsome equivalences at level 5:")
for x, y in (("1/5", "4/5"), ("oo", "1/5"), ("0", "1/2")):
    same = cusp_equivalent(5, Cusp.parse(x), Cusp.parse(y))
    print(f"  {x} ~ {y}: {same}")

print("\nEisenstein boundary symbols (value on each cusp class):")
for p, a in ((5, 2), (7, 4)):
    psi = DirichletCharacter.teichmuller_power(p, a, 1)
    phi = eisenstein_boundary_symbol(psi, DirichletCharacter.trivial())
    table = {str(r): v for r, v in zip(phi.reps, phi.values)}
    print(f"  level {p}, psi = omega^{a}: {table}")
    total = sum(phi.value(INFINITY_CUSP) - phi.value(Cusp(b, p)) for b in range(1, p)) % p
    print(f"    sum over a of phi(oo) - phi(a/{p}) = {total} mod {p} (a unit: the lambda formula applies)")

print("\nthe explicit mod-9 symbol of level 27:")
for text in ("oo", "2/9", "1/4", "17/27", "-1/14"):
    print(f"  phi9({text}) = {phi9(Cusp.parse(text))}")
print("  in towers the value only sees a mod 9: phi9(a/3^k) = phi9((a mod 9)/9) for k >= 2")
