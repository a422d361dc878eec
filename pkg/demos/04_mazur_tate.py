"""Mazur-Tate elements and their Iwasawa invariants.

Builds the level-n elements of the Eisenstein boundary symbols, of the
explicit level-27 symbol, and of the discriminant form's plus symbol, and
prints mu and lambda next to the closed-form predictions.
"""

from taumt import (
    DirichletCharacter,
    delta_symbol,
    eisenstein_boundary_symbol,
    invariants,
    mazur_tate,
    phi9_symbol,
    to_T_basis,
)


def eis(p, a):
    psi = DirichletCharacter.teichmuller_power(p, a, 1)
    return eisenstein_boundary_symbol(psi, DirichletCharacter.trivial())


print("level-1 element of the level-5 Eisenstein symbol, mod 5:")
theta = mazur_tate(eis(5, 2), 5, 1, 1)
print("  group basis:", theta.coeffs)
print("  T basis:    ", to_T_basis(theta).coeffs, " (a unit times T^4)")

print("\nlambda = p^n - 1 for the Eisenstein route:")
for p, a, n_max in ((5, 2, 4), (7, 4, 3)):
    lams = [invariants(mazur_tate(eis(p, a), p, n, 1)).lam for n in range(1, n_max + 1)]
    print(f"  p={p}: lambda =", lams, " expected", [p**n - 1 for n in range(1, n_max + 1)])

print("\nthe discriminant form gives the same invariants mod 5 and 7:")
for p in (5, 7):
    for n in (1, 2):
        inv = invariants(mazur_tate(delta_symbol(), p, n, 1))
        print(f"  p={p}, n={n}: mu={inv.mu}, lambda={inv.lam}  (expected 0, {p**n - 1})")

print("\nat p = 3 the elements are divisible by 3 exactly once and lambda drops by one:")
for n in (1, 2, 3):
    inv = invariants(mazur_tate(delta_symbol(), 3, n, 2))
    print(f"  Delta route, n={n}: mu={inv.mu}, lambda={inv.lam}  (expected 1, {3**n - 2})")
for n in (4, 5, 6):
    inv = invariants(mazur_tate(phi9_symbol(), 3, n, 2))
    print(f"  level-27 route, n={n}: mu={inv.mu}, lambda={inv.lam}  (expected 1, {3**n - 2})")
