from fractions import Fraction

from supercohom import catalog, classify, coboundary_solve, h1_dimension, is_cocycle
from supercohom.results import predicted_h1

half = Fraction(1, 2)

# --- Named cocycles ---

# Upsilon on D_{-1,1}: a cocycle that is not a coboundary
entry = catalog.make("upsilon-k", 2)
print(entry.name, is_cocycle(entry.cochain).ok)
result = coboundary_solve(entry.cochain)
print("coboundary:", result.is_coboundary, "certificate verifies:", result.verify())

# A relative coboundary generator: delta0 of theta2 eta_bar2 on D_{1/2,1/2}
entry = catalog.make("cob-t2-eta2", half)
print(entry.name, coboundary_solve(entry.cochain).is_coboundary)

# --- Truncated H^1 ---

# Absolute: D_{lambda,lambda} carries two classes, D_{-1/2,1/2} three
for lam, mu in [(Fraction(0), Fraction(0)), (-half, half), (Fraction(1, 3), Fraction(2))]:
    report = h1_dimension(lam, mu)
    print(f"H1({lam}, {mu}) = {report.h1_dim}  expected {predicted_h1(lam, mu)}")

# Relative to osp(1|2): the diagonal class survives only for lambda != 0
for lam in (Fraction(0), Fraction(1)):
    report = h1_dimension(lam, lam, relative=True)
    print(f"H1_rel({lam}, {lam}) = {report.h1_dim}")

# --- Invariant bilinear operators ---

# sl(2)-invariant maps h0 x F_lambda -> F_{lambda+k-1/2}
for k in range(3):
    cell = classify("sl2", "h0", Fraction(-1, 2), k)
    print(f"k={k}: dim {cell.dimension}, constraint {cell.constraint}")
