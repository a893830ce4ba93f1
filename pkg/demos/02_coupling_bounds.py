"""Coupling bounds at fixed temperature: the rank ladder and the sandwich.

The stability threshold of the normal state sits at coupling
Lambda(P, T) = 1/k(P, T), with k the top eigenvalue of a compact operator.
Finite-rank truncations give k_1 <= k_2 <= ... from below (hence coupling
bounds from above), and a spectral estimate k_star gives k from above
(coupling from below).  Ranks one through four have closed forms; the demo
prints them next to the dense eigensolver to show they agree to ten digits.
"""

from eliashberg_tc import bounds, measure, stability

m = measure.discrete([(0.5, 0.8), (0.5, 1.2)])
t = 0.15

print(f"Measure: {m.describe()},  T = {t}")
print(f"{'rank':>6}  {'closed form':>18}  {'eigensolver':>18}  {'coupling bound':>16}")
for n in (1, 2, 3, 4):
    closed = stability.k_closed_form(m, t, n)
    eig = stability.k_numeric(m, t, n)
    print(f"{n:>6}  {closed.k_value:>18.12f}  {eig.k_value:>18.12f}  {closed.lambda_upper:>16.10f}")
for n in (8, 16, 64):
    eig = stability.k_numeric(m, t, n)
    print(f"{n:>6}  {'':>18}  {eig.k_value:>18.12f}  {eig.lambda_upper:>16.10f}")

star = bounds.k_star(m, t)
sharp = bounds.k_sharp(m, t)
print(f"\nSpectral estimates from above: k_star = {star:.10f}, k_sharp = {sharp:.10f}")
print(f"Coupling is therefore bracketed: "
      f"{1.0 / sharp:.10f} <= {1.0 / star:.10f} <= Lambda(P,T) <= "
      f"{stability.k_numeric(m, t, 64).lambda_upper:.10f}")

# the fixed-point view: at the threshold coupling the cone-preserving map
# has spectral radius exactly one; below it, it is a contraction
lam = stability.k_numeric(m, t, 32).lambda_upper
for factor in (0.5, 1.0, 2.0):
    rho = stability.c_spectral_radius(m, t, factor * lam, 32)
    print(f"fixed-point radius at {factor:.1f} * threshold coupling: {rho:.10f}")

# the zero-temperature floors are measure independent
print("\nZero-temperature limits (measure independent):")
for n in (1, 2, 3, 4, 8):
    lim = stability.k_limit_T0(n)
    print(f"  rank {n}: k -> {lim.k0:.10f}, coupling floor {lim.lambda_floor:.10f}")
