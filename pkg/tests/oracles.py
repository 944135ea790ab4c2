"""Independent oracles used by the test suite.

These deliberately avoid the code paths they check: the torsion oracle runs
plain multiples with no Lutz-Nagell shortcut, and the census oracle is an
exact sign-grid flood fill, not a sweep.
"""

from __future__ import annotations

from fractions import Fraction

from kumfib.elliptic import ECPoint, WeierstrassCurve, _add_unchecked, to_integral_model
from kumfib.realroots import int_coeffs
import kumfib._kernel as K


def brute_force_torsion(E: WeierstrassCurve, P: ECPoint):
    """(is_torsion, order or None) by computing nP for n <= 12 on an integral model.

    No Lutz-Nagell shortcut anywhere; soundness of the depth-12 cutoff over Q
    comes from the torsion-order classification alone.
    """
    E2, P2, _lam = to_integral_model(E, P)
    R = P2
    for n in range(2, 13):
        R = _add_unchecked(E2, R, P2)
        if R.is_infinity:
            return True, n
    return False, None


def poly_at(coeffs, v: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * v + c
    return acc


def flood_fill_census(phi, psi, scale: int = 64, margin: int = 2) -> int:
    """Connected components of {phi(x) = psi(t)} by exact sign-grid flood fill.

    Grid step 1/scale over a box derived from root bounds: wide enough in x
    to contain every critical x-value and bounded component, and wide enough
    in t to contain all t-solutions over that x-range, so that components of
    the clipped curve biject with components of the affine curve.  The grid
    is exact (integer-scaled evaluations); resolution must exceed the
    feature separation of the tested curve, which the catalog guarantees.
    """
    phi = [Fraction(c) for c in phi]
    psi = [Fraction(c) for c in psi]
    Bx = K.cauchy_bound(int_coeffs(phi)) + margin
    # |phi| on [-Bx, Bx] bounds the needed t-range through psi's root bound
    mphi = max(abs(poly_at(phi, Fraction(v))) for v in range(-Bx, Bx + 1)) + 1
    shifted = list(psi)
    shifted[0] -= mphi
    shifted2 = list(psi)
    shifted2[0] += mphi
    Bt = max(K.cauchy_bound(int_coeffs(shifted)), K.cauchy_bound(int_coeffs(shifted2))) + margin

    nx, nt = 2 * Bx * scale, 2 * Bt * scale
    phi_vals = [poly_at(phi, Fraction(i, scale) - Bx) for i in range(nx + 1)]
    psi_vals = [poly_at(psi, Fraction(j, scale) - Bt) for j in range(nt + 1)]

    def sgn(i, j):
        v = phi_vals[i] - psi_vals[j]
        return (v > 0) - (v < 0)

    cells = set()
    scol = [[sgn(i, j) for j in range(nt + 1)] for i in range(nx + 1)]
    for i in range(nx):
        ci, ci1 = scol[i], scol[i + 1]
        for j in range(nt):
            ss = {ci[j], ci1[j], ci[j + 1], ci1[j + 1]}
            if 0 in ss or (1 in ss and -1 in ss):
                cells.add((i, j))
    comps = 0
    seen = set()
    for cell in cells:
        if cell in seen:
            continue
        comps += 1
        stack = [cell]
        seen.add(cell)
        while stack:
            a, b = stack.pop()
            for na, nb in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
                if (na, nb) in cells and (na, nb) not in seen:
                    seen.add((na, nb))
                    stack.append((na, nb))
    return comps
