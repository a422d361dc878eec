"""Congruences of the Ramanujan tau function.

Expands tau exactly from the 24th power of the Euler product, then checks
it against weight-two Eisenstein coefficients mod 3, 5, 7 and against the
classical prime-power congruences.
"""

from taumt import tau_expansion, verify_serre_congruences, verify_tau_congruence
from taumt.qseries import admissible_sweep

BOUND = 2000

print("tau(1..10):")
tau = tau_expansion(BOUND)
print(" ", tau[1:11])

print("\ntau(n) mod p against the divisor sums of E_2 twisted by Teichmuller powers:")
for p, a in ((3, 2), (5, 2), (7, 4)):
    report = verify_tau_congruence(p, 2, a, 0, BOUND, tau)
    print(f"  p={p}: {report}")

print("\nthe full admissible family, weights up to 20:")
for p in (3, 5, 7):
    reports = admissible_sweep(p, 20, 1000, tau)
    print(f"  p={p}: {len(reports)} series scanned, all congruent: {all(r.ok for r in reports)}")

print("\nan inadmissible pair fails immediately:")
bad = verify_tau_congruence(5, 2, 1, 0, 100, tau)
print(f"  {bad}")

print("\nprime-power congruences at all primes up to the bound:")
for rep in verify_serre_congruences(BOUND, tau):
    status = "holds" if rep.ok else f"fails at l={rep.first_failure}"
    print(f"  tau(l) = l^{rep.e1} + l^{rep.e2} mod {rep.modulus}: {status}")
