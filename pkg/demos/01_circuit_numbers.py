"""Circuit numbers on the hexagonal face, from first principles.

Walks through the basic certificate machinery: barycentric coordinates of the
interior point, the circuit number Theta, the nonnegativity threshold, and the
toy weighted split whose optimum motivates weighted covers.
"""

from hexcover import (
    CircuitSupport,
    LatticePoint,
    Simplex,
    barycentric_coordinates,
    circuit_number,
    is_nonnegative,
    optimize_scalar_weight,
)
from hexcover.geometry import M

# The canonical triangle: vertices (4,2), (2,0), (0,1) with m = (2,1) inside.
tri = Simplex((LatticePoint(4, 2), LatticePoint(2, 0), LatticePoint(0, 1)))
lam = barycentric_coordinates(tri, M)
print("barycentrics of m in the canonical triangle:", lam.lambdas)

# Unit coefficients give Theta = 3: the polynomial
#   x^4 y^2 + x^2 + y - c x^2 y
# is nonnegative on the positive orthant exactly when c <= 3.
support = CircuitSupport(tri, M, {v: 1.0 for v in tri.vertices})
print("Theta =", circuit_number(support))
for c in (2.5, 3.0, 3.0 + 1e-6):
    s = CircuitSupport(tri, M, support.positive_coeffs, -c)
    print(f"  c = {c}: nonnegative = {is_nonnegative(s)}")

# Segments behave like a weighted AM-GM: midpoint interior gives Theta = 2*sqrt(ab).
seg = Simplex((LatticePoint(1, 0), LatticePoint(3, 2)))
print("segment Theta with coefficients (4, 9):",
      circuit_number(CircuitSupport(seg, M, {LatticePoint(1, 0): 4.0,
                                             LatticePoint(3, 2): 9.0})))

# Splitting a coefficient across two circuits can beat either circuit alone.
# g(x,y) = x^4 y^2 + x^2 + y + 1 - c x^2 y supports the triangle above plus the
# segment {(0,0),(4,2)}; the vertex (4,2) is shared with weight w vs 1-w.
diag = Simplex((LatticePoint(0, 0), LatticePoint(4, 2)))


def split_objective(w: float) -> float:
    total = 0.0
    if w > 0:
        total += circuit_number(CircuitSupport(
            tri, M, {LatticePoint(4, 2): w, LatticePoint(2, 0): 1.0, LatticePoint(0, 1): 1.0}))
    if w < 1:
        total += circuit_number(CircuitSupport(
            diag, M, {LatticePoint(0, 0): 1.0, LatticePoint(4, 2): 1.0 - w}))
    return total


w_opt, value = optimize_scalar_weight(split_objective)
print(f"optimal split weight w = {w_opt:.4f}, Theta sum = {value:.4f}")
print("  (either circuit alone certifies less: "
      f"w=1 -> {split_objective(1.0):.4f}, w=0 -> {split_objective(0.0):.4f})")
