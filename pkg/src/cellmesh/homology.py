"""Integral homology, torsion orders, lattice bases and covolumes.

Everything is computed from Smith/Hermite forms of boundary matrices over
exact integers; the harmonic projection used for homology covolumes is done
over rationals by solving normal equations, never floating point.
"""

from fractions import Fraction

from .complexes import ComplexFormatError, boundary_matrix, boundary_matrix_above
from .intmat import (IntMatrix, RatMatrix, column_hermite, gram_det,
                     invariant_factor_product, kernel_basis, rank,
                     smith_normal_form)


class HomologySummary:
    """Betti number and torsion data of one integral homology group."""

    __slots__ = ("dimension", "betti", "invariant_factors", "torsion_order")

    def __init__(self, dimension, betti, factors):
        self.dimension = dimension
        self.betti = betti
        self.invariant_factors = list(factors)
        t = 1
        for f in self.invariant_factors:
            t *= f
        self.torsion_order = t

    def __repr__(self):
        return (f"HomologySummary(d={self.dimension}, betti={self.betti}, "
                f"factors={self.invariant_factors})")


class LatticeBasis:
    """Columns of `basis` generate a sublattice of the cellular d-chains."""

    __slots__ = ("dimension", "ambient", "basis", "kind")

    def __init__(self, dimension, basis, kind):
        if kind not in ("cycles", "boundaries"):
            raise ValueError(f"bad lattice kind {kind!r}")
        self.dimension = dimension
        self.ambient = basis.rows
        self.basis = basis
        self.kind = kind

    @property
    def rank(self):
        return self.basis.cols

    def __repr__(self):
        return (f"LatticeBasis({self.kind}, d={self.dimension}, "
                f"{self.ambient}x{self.basis.cols})")


def homology_groups(x, d):
    """H_d(X;Z) from Smith forms of the two adjacent boundary maps."""
    if not 0 <= d <= x.dimension:
        raise ComplexFormatError(f"dimension {d} out of range 0..{x.dimension}")
    lower = boundary_matrix(x, d)
    upper = boundary_matrix_above(x, d)
    rank_lower = rank(lower)
    diag = smith_normal_form(upper).invariant_factors()
    betti = x.n_cells(d) - rank_lower - len(diag)
    factors = [f for f in diag if f != 1]
    return HomologySummary(d, betti, factors)


def torsion_order(x, d):
    """t_d(X): the order of the torsion subgroup of H_d(X;Z), always >= 1."""
    if not 0 <= d <= x.dimension:
        raise ComplexFormatError(f"dimension {d} out of range 0..{x.dimension}")
    upper = boundary_matrix_above(x, d)
    return invariant_factor_product([row[:] for row in upper.data])


def integral_cycle_basis(x, d):
    """Canonical basis of the saturated d-cycle lattice ker(boundary)."""
    mat = boundary_matrix(x, d)
    return LatticeBasis(d, kernel_basis(mat), "cycles")


def integral_boundary_basis(x, d):
    """Canonical basis of the d-boundary image lattice (not its saturation).

    Column Hermite form of the (d+1)-boundary matrix, so the choice is
    deterministic given cell order.
    """
    if not 0 <= d < x.dimension:
        # boundaries above the top dimension are trivially empty; allow d = dim
        if d == x.dimension:
            n = x.n_cells(d)
            return LatticeBasis(d, IntMatrix(n, 0, [[] for _ in range(n)]),
                                "boundaries")
        raise ComplexFormatError(f"dimension {d} out of range 0..{x.dimension}")
    upper = boundary_matrix(x, d + 1)
    return LatticeBasis(d, column_hermite(upper), "boundaries")


def covolume_squared(lattice):
    """Gram determinant of the basis; invariant under unimodular change."""
    return gram_det(lattice.basis)


def saturate_columns(mat):
    """Basis of the saturation Z^n intersect Q-span(columns of mat)."""
    left_null = kernel_basis(mat.transpose())
    return kernel_basis(left_null.transpose())


def rational_solve(a, b):
    """Solve a X = b exactly for full-column-rank a; entries are Fractions."""
    m, n = a.rows, a.cols
    aug = [[Fraction(a.data[i][j]) for j in range(n)]
           + [Fraction(b.data[i][j]) for j in range(b.cols)]
           for i in range(m)]
    width = n + b.cols
    prow = 0
    pivots = []
    for col in range(n):
        piv = None
        for i in range(prow, m):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix does not have full column rank")
        aug[prow], aug[piv] = aug[piv], aug[prow]
        inv = 1 / aug[prow][col]
        aug[prow] = [v * inv for v in aug[prow]]
        for i in range(m):
            if i != prow and aug[i][col]:
                f = aug[i][col]
                row_i, row_p = aug[i], aug[prow]
                for j in range(col, width):
                    row_i[j] -= f * row_p[j]
        pivots.append(col)
        prow += 1
    for i in range(prow, m):
        if any(aug[i][n:]):
            raise ValueError("inconsistent system")
    sol = [[aug[r][n + j] for j in range(b.cols)] for r in range(n)]
    return RatMatrix(n, b.cols, sol)


def integer_inverse(u):
    """Exact inverse of a unimodular integer matrix."""
    inv = rational_solve(u, IntMatrix.identity(u.rows))
    return inv.to_integer()


def homology_lift_basis(x, d):
    """Integral cycles projecting to a basis of H_d(X;Z)/torsion.

    Returns an n_d x betti integer matrix.  The choice is canonical given
    the Hermite-canonical cycle and boundary bases.
    """
    z = integral_cycle_basis(x, d).basis
    if z.cols == 0:
        n = x.n_cells(d)
        return IntMatrix(n, 0, [[] for _ in range(n)])
    b = integral_boundary_basis(x, d).basis
    b_sat = saturate_columns(b) if b.cols else b
    if b_sat.cols == 0:
        return z
    coords = rational_solve(z, b_sat).to_integer()
    snf = smith_normal_form(coords)
    if snf.invariant_factors() != [1] * coords.cols:
        raise AssertionError("saturated boundary lattice not a direct summand")
    u_inv = integer_inverse(snf.u)
    lift_coords = u_inv.submatrix(range(z.cols), range(coords.cols, z.cols))
    return z.mul(lift_coords)


def harmonic_projection_gram(x, d, lift):
    """Gram matrix of the lift columns projected off the boundary span."""
    b = integral_boundary_basis(x, d).basis
    h = lift.cols
    if h == 0:
        return RatMatrix(0, 0, [])
    cols = [[Fraction(lift.data[i][j]) for i in range(lift.rows)]
            for j in range(h)]
    if b.cols:
        gram_b = b.transpose().mul(b)
        bt_lift = b.transpose().mul(lift)
        coeffs = rational_solve(gram_b, bt_lift)  # (B^t B)^{-1} B^t lift
        for j in range(h):
            for i in range(lift.rows):
                cols[j][i] -= sum(Fraction(b.data[i][l]) * coeffs.data[l][j]
                                  for l in range(b.cols))
    data = [[sum(ci * cj for ci, cj in zip(cols[a], cols[c])) for c in range(h)]
            for a in range(h)]
    return RatMatrix(h, h, data)


def homology_covolume_squared(x, d):
    """Squared covolume of the projected homology lattice in the harmonics.

    Computed both as the quotient formula
        covol^2(cycles) * t_d^2 / covol^2(boundaries)
    and directly as the Gram determinant of the orthogonal projection of the
    canonical homology lift onto the harmonic subspace; the two must agree.
    """
    if not 0 <= d <= x.dimension:
        raise ComplexFormatError(f"dimension {d} out of range 0..{x.dimension}")
    z = integral_cycle_basis(x, d)
    b = integral_boundary_basis(x, d)
    t = torsion_order(x, d)
    quotient = Fraction(covolume_squared(z) * t * t, covolume_squared(b))
    lift = homology_lift_basis(x, d)
    gram = harmonic_projection_gram(x, d, lift)
    direct = gram.det() if gram.rows else Fraction(1)
    if direct != quotient:
        raise AssertionError(
            f"homology covolume mismatch at d={d}: {direct} vs {quotient}")
    return quotient


def boundary_restriction_kernel(x, d, keep_zero_ids, basis=None):
    """Coordinates (in the chosen boundary basis) of boundaries vanishing on
    the given d-cells: the saturated kernel of the rows of the basis matrix
    indexed by keep_zero_ids."""
    b = basis if basis is not None else integral_boundary_basis(x, d)
    rows = x.positions(d, keep_zero_ids)
    sub = b.basis.submatrix(rows, range(b.basis.cols))
    return kernel_basis(sub)


def relative_order(x, upper, lower, hom_degree):
    """Order of the finite relative homology group of (X_upper, X_lower).

    Two shapes occur.  With upper at dimension hom_degree+1 and lower at
    hom_degree, the pair's relative chain complex is the two-term complex
    made of the boundary-matrix block with rows outside `lower` and columns
    in `upper`, and the order is the product of its invariant factors.  With
    both subsets at dimension hom_degree (lower inside upper), the boundary
    lattice of the ambient complex restricted to the cells of upper-minus-
    lower plays the role of the relative boundaries.  Raises ValueError when
    the group is infinite (rank mismatch).
    """
    d = hom_degree
    if upper.dimension == d + 1 and lower.dimension == d:
        rows = [i for i, cid in enumerate(x.cell_ids(d))
                if cid not in lower.members]
        cols = x.positions(d + 1, upper.members)
        mat = boundary_matrix(x, d + 1).submatrix(rows, cols)
        if rank(mat) != len(rows):
            raise ValueError("relative homology group is infinite")
        return invariant_factor_product([row[:] for row in mat.data])
    if upper.dimension == d and lower.dimension == d:
        if not lower.members <= upper.members:
            raise ComplexFormatError("lower subset not contained in upper")
        interface = sorted(upper.members - lower.members)
        basis = integral_boundary_basis(x, d)
        vanish_on = [cid for cid in x.cell_ids(d) if cid not in upper.members]
        kern = boundary_restriction_kernel(x, d, vanish_on, basis)
        supported = basis.basis.mul(kern)  # boundaries living on `upper`
        rows = x.positions(d, interface)
        mat = supported.submatrix(rows, range(supported.cols))
        if rank(mat) != len(rows) or mat.rows != mat.cols:
            raise ValueError("relative homology group is infinite")
        return invariant_factor_product([row[:] for row in mat.data])
    raise ComplexFormatError(
        f"unsupported pair dimensions ({upper.dimension}, {lower.dimension}) "
        f"for homology degree {hom_degree}")
