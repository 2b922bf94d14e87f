"""Torsion-product and reduced-Laplacian-product identities.

The squared combinatorial torsion of a complex with its integral bases is
the squared alternating product of the homology torsion orders; the same
quantity factors through reduced Laplacian determinants and homology
covolumes.  Both sides are assembled here independently and compared
exactly, for the complex and for each of its skeleta.
"""

import time
from fractions import Fraction

from .complexes import ComplexFormatError, boundary_matrix_above, skeleton
from .homology import homology_covolume_squared, torsion_order
from .intmat import principal_minor_sum, rank


class TorsionReport:
    """Both sides of the torsion identity, with per-dimension factors."""

    def __init__(self, name, factors, lhs, rhs, skeleta, passed, elapsed_ms):
        self.name = name
        self.factors = factors  # list of dicts per dimension
        self.lhs = lhs
        self.rhs = rhs
        self.skeleta = skeleta  # list of (dim, lhs, rhs, pass)
        self.passed = passed
        self.elapsed_ms = elapsed_ms

    def to_json_dict(self, deterministic=False):
        def frac(v):
            v = Fraction(v)
            return (str(v.numerator) if v.denominator == 1
                    else f"{v.numerator}/{v.denominator}")

        return {
            "complex": self.name,
            "factors": [
                {"dim": f["dim"], "torsion_order": frac(f["torsion_order"]),
                 "reduced_laplacian_det": frac(f["reduced_laplacian_det"]),
                 "homology_covolume_sq": frac(f["homology_covolume_sq"])}
                for f in self.factors
            ],
            "lhs": frac(self.lhs),
            "rhs": frac(self.rhs),
            "skeleta": [{"dim": d, "lhs": frac(a), "rhs": frac(b), "pass": ok}
                        for d, a, b, ok in self.skeleta],
            "pass": self.passed,
            "elapsed_ms": None if deterministic else self.elapsed_ms,
        }

    def __repr__(self):
        return f"TorsionReport({self.name}, pass={self.passed})"


def reduced_laplacian_det(x, i):
    """Product of the nonzero eigenvalues of the degree-i up-Laplacian.

    Evaluated as the r-th elementary symmetric function of the matrix of
    boundary-composed-with-adjoint, r being the boundary rank; by
    Cauchy-Binet this is the sum of squared maximal minors, an integer.
    Equals 1 when there are no (i+1)-cells.
    """
    if not 0 <= i <= x.dimension:
        raise ComplexFormatError(f"dimension {i} out of range 0..{x.dimension}")
    upper = boundary_matrix_above(x, i)
    r = rank(upper)
    if r == 0:
        return 1
    lap = upper.mul(upper.transpose())
    return int(principal_minor_sum(lap, r))


def rf_combinatorial(x):
    """Squared alternating product of the homology torsion orders."""
    value = Fraction(1)
    for i in range(x.dimension + 1):
        t = torsion_order(x, i)
        if i % 2:
            value /= t * t
        else:
            value *= t * t
    return value


def rf_laplacian(x):
    """Squared torsion via reduced Laplacian determinants and covolumes."""
    value = Fraction(1)
    for i in range(x.dimension + 1):
        factor = Fraction(reduced_laplacian_det(x, i)) * \
            homology_covolume_squared(x, i)
        if i % 2:
            value /= factor
        else:
            value *= factor
    return value


def verify_rf_identity(x):
    """Check the torsion identity for the complex and all its skeleta."""
    start = time.monotonic()
    factors = []
    for i in range(x.dimension + 1):
        factors.append({
            "dim": i,
            "torsion_order": torsion_order(x, i),
            "reduced_laplacian_det": reduced_laplacian_det(x, i),
            "homology_covolume_sq": homology_covolume_squared(x, i),
        })
    lhs = rf_combinatorial(x)
    rhs = rf_laplacian(x)
    passed = lhs == rhs
    skeleta = []
    for d in range(x.dimension + 1):
        sk = skeleton(x, d) if d < x.dimension else x
        a = rf_combinatorial(sk)
        b = rf_laplacian(sk)
        ok = a == b
        passed = passed and ok
        skeleta.append((d, a, b, ok))
    elapsed = (time.monotonic() - start) * 1000.0
    return TorsionReport(x.name, factors, lhs, rhs, skeleta, passed, elapsed)
