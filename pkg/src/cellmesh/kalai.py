"""Closed-form spectra for simplices: reduced incidence, Laplacian, and the
cycle basis built from the cone over the first vertex.

The predictions are two-eigenvalue tables with binomial multiplicities;
verification is eigensolver-free: the annihilating polynomial of the
assembled matrix is expanded exactly, together with trace and determinant
bookkeeping.  Weighted variants run on the square-root-free similarity
representative so that everything stays rational.
"""

import time
from fractions import Fraction
from math import comb, prod

from .complexes import (ComplexFormatError, boundary_matrix, standard_simplex)
from .intmat import IntMatrix, RatMatrix, det_rational
from .spectra import VerificationReport

MAX_SIMPLEX_VERTICES = 9


class SpectrumSummary:
    """Distinct eigenvalues with multiplicities; multiplicities sum to dim."""

    __slots__ = ("eigenvalues",)

    def __init__(self, pairs):
        merged = {}
        for value, mult in pairs:
            if mult:
                value = Fraction(value)
                merged[value] = merged.get(value, 0) + mult
        self.eigenvalues = sorted(merged.items(), reverse=True)

    def dimension(self):
        return sum(m for _, m in self.eigenvalues)

    def trace(self):
        return sum(v * m for v, m in self.eigenvalues)

    def determinant(self):
        return prod(v ** m for v, m in self.eigenvalues)

    def __repr__(self):
        inner = ", ".join(f"{v}:{m}" for v, m in self.eigenvalues)
        return f"SpectrumSummary({{{inner}}})"


def _check_params(n, k):
    if n < 2 or not 1 <= k <= n - 1:
        raise ComplexFormatError(f"need n >= 2 and 1 <= k <= n-1, got ({n},{k})")


def _faces_without_first_vertex(x, dim):
    """Positions of dim-cells avoiding vertex 1 (the sub-simplex cells)."""
    out = []
    for pos, cell in enumerate(x.cells[dim]):
        vertices = cell.id.split(".")
        if "1" not in vertices:
            out.append(pos)
    return out


def reduced_incidence(n, k):
    """Boundary of k-faces of the (n-1)-simplex restricted to (k-1)-rows
    avoiding the first vertex: C(n-1,k) x C(n,k+1)."""
    _check_params(n, k)
    x = standard_simplex(n)
    bd = boundary_matrix(x, k)
    rows = _faces_without_first_vertex(x, k - 1)
    return bd.submatrix(rows, range(bd.cols))


def phi_basis(n, k):
    """Integral cycle basis of the (k-1)-cycles of the (n-1)-simplex.

    Column s (a (k-1)-face avoiding the first vertex) is the boundary of the
    cone of the first vertex over s; restricting back to the sub-simplex
    rows gives the identity, so the columns form an integral basis.
    """
    _check_params(n, k)
    x = standard_simplex(n)
    bd = boundary_matrix(x, k)
    cols = []
    lookup = {cell.id: j for j, cell in enumerate(x.cells[k])}
    for pos in _faces_without_first_vertex(x, k - 1):
        s = x.cells[k - 1][pos].id
        cone = ".".join(["1"] + s.split("."))
        cols.append(lookup[cone])
    return bd.submatrix(range(bd.rows), cols)


def _parse_weights(n, weights):
    if weights is None:
        return None
    ws = [Fraction(w) for w in weights]
    if len(ws) != n:
        raise ComplexFormatError(f"expected {n} weights, got {len(ws)}")
    if any(w <= 0 for w in ws):
        raise ComplexFormatError("weights must be strictly positive")
    return ws


def predicted_spectrum(n, k, kind, weights=None):
    """Eigenvalue/multiplicity table for the requested matrix.

    Unweighted: incidence Gram has eigenvalues 1 and n; the Laplacian of the
    one-smaller simplex has 0 and n-1; the cycle-basis mesh matrix has n and
    1 -- all with multiplicities C(n-2,k-1) and C(n-2,k).  With positive
    vertex weights a_j the tables become: incidence a_1 and sum(a_1..a_n);
    Laplacian 0 and sum(a_1..a_{n-1}); mesh a_1*sum(1/a_j over all n) and 1
    (the latter derived from the incidence table the same way as in the
    unweighted case).
    """
    _check_params(n, k)
    ws = _parse_weights(n, weights)
    m_low = comb(n - 2, k - 1)
    m_high = comb(n - 2, k)
    if kind == "incidence":
        if ws is None:
            return SpectrumSummary([(1, m_low), (n, m_high)])
        return SpectrumSummary([(ws[0], m_low), (sum(ws), m_high)])
    if kind == "laplacian":
        if ws is None:
            return SpectrumSummary([(0, m_low), (n - 1, m_high)])
        return SpectrumSummary([(0, m_low), (sum(ws[:n - 1]), m_high)])
    if kind == "mesh":
        if ws is None:
            return SpectrumSummary([(n, m_low), (1, m_high)])
        value = ws[0] * sum(Fraction(1) / w for w in ws)
        return SpectrumSummary([(value, m_low), (1, m_high)])
    raise ComplexFormatError(f"unknown kind {kind!r}")


def _face_weight_diagonal(x, dim, vertex_weights):
    """Diagonal of products of vertex weights over each dim-face."""
    out = []
    for cell in x.cells[dim]:
        w = Fraction(1)
        for v in cell.id.split("."):
            w *= vertex_weights[int(v) - 1]
        out.append(w)
    return out


def _similarity_representative(core, row_weights):
    """core * diag(row_weights)^{-1}: same characteristic polynomial as the
    symmetric normalized matrix."""
    n = core.rows
    data = [[Fraction(core.data[i][j]) / row_weights[j] for j in range(n)]
            for i in range(n)]
    return RatMatrix(n, n, data)


def build_kalai_matrix(n, k, kind, weights=None):
    """The actual matrix whose spectrum predicted_spectrum tabulates."""
    _check_params(n, k)
    ws = _parse_weights(n, weights)
    if kind == "incidence":
        inc = reduced_incidence(n, k)
        if ws is None:
            return inc.mul(inc.transpose())
        x = standard_simplex(n)
        mid = _face_weight_diagonal(x, k, ws)
        rows = [_face_weight_diagonal(x, k - 1, ws)[p]
                for p in _faces_without_first_vertex(x, k - 1)]
        core = _weighted_gram(inc, mid)
        return _similarity_representative(core, rows)
    if kind == "laplacian":
        x = standard_simplex(n - 1)
        bd = boundary_matrix(x, k) if k <= x.dimension else None
        n_rows = len(x.cells[k - 1])
        if bd is None:
            core = IntMatrix.zeros(n_rows, n_rows)
        else:
            core = bd.mul(bd.transpose())
        if ws is None:
            return core
        sub_ws = ws[:n - 1]
        mid = (_face_weight_diagonal(x, k, sub_ws)
               if bd is not None else [])
        rows = _face_weight_diagonal(x, k - 1, sub_ws)
        if bd is None:
            zero = RatMatrix(n_rows, n_rows,
                             [[Fraction(0)] * n_rows for _ in range(n_rows)])
            return zero
        core = _weighted_gram(bd, mid)
        return _similarity_representative(core, rows)
    if kind == "mesh":
        phi = phi_basis(n, k)
        if ws is None:
            return phi.transpose().mul(phi)
        x = standard_simplex(n)
        mid = _face_weight_diagonal(x, k - 1, ws)
        rows = [_face_weight_diagonal(x, k - 1, ws)[p]
                for p in _faces_without_first_vertex(x, k - 1)]
        core = _weighted_gram(phi.transpose(), mid)
        return _similarity_representative(core, rows)
    raise ComplexFormatError(f"unknown kind {kind!r}")


def _weighted_gram(a, mid_weights):
    """a * diag(mid_weights) * a^t over rationals."""
    m = a.rows
    inner = a.cols
    data = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            acc = Fraction(0)
            for l in range(inner):
                if a.data[i][l] and a.data[j][l]:
                    acc += mid_weights[l] * (a.data[i][l] * a.data[j][l])
            data[i][j] = acc
            data[j][i] = acc
    return RatMatrix(m, m, data)


def verify_kalai(n, k, kind, weights=None):
    """Verify the predicted spectrum without any eigensolver.

    Expands the annihilating polynomial prod over distinct eigenvalues of
    (M - lambda I) and requires it to vanish exactly, then checks trace and
    determinant against the multiplicity table, and the binomial
    bookkeeping C(n-2,k-1) + C(n-2,k) = C(n-1,k).
    """
    start = time.monotonic()
    if n > MAX_SIMPLEX_VERTICES:
        raise ComplexFormatError(
            f"desk-scale guard: n = {n} exceeds {MAX_SIMPLEX_VERTICES}")
    spectrum = predicted_spectrum(n, k, kind, weights)
    matrix = build_kalai_matrix(n, k, kind, weights)
    dim = matrix.rows
    rows = []
    passed = True

    mult_ok = spectrum.dimension() == dim == comb(n - 1, k)
    passed &= mult_ok
    rows.append({"k": k, "check": "multiplicities", "lhs": spectrum.dimension(),
                 "rhs": comb(n - 1, k), "pass": mult_ok})

    if isinstance(matrix, IntMatrix):
        work = matrix.to_rational()
    else:
        work = matrix
    ann = RatMatrix.identity(dim)
    for value, _ in spectrum.eigenvalues:
        shifted = RatMatrix(dim, dim,
                            [[work.data[i][j] - (value if i == j else 0)
                              for j in range(dim)] for i in range(dim)])
        ann = ann.mul(shifted)
    ann_ok = all(x == 0 for row in ann.data for x in row)
    passed &= ann_ok
    rows.append({"k": k, "check": "annihilating_polynomial",
                 "lhs": "zero-matrix" if ann_ok else "nonzero",
                 "rhs": "zero-matrix", "pass": ann_ok})

    tr = sum(work.data[i][i] for i in range(dim))
    tr_ok = tr == spectrum.trace()
    passed &= tr_ok
    rows.append({"k": k, "check": "trace", "lhs": tr, "rhs": spectrum.trace(),
                 "pass": tr_ok})

    det = det_rational([row[:] for row in work.data])
    det_ok = det == spectrum.determinant()
    passed &= det_ok
    rows.append({"k": k, "check": "determinant", "lhs": det,
                 "rhs": spectrum.determinant(), "pass": det_ok})

    elapsed = (time.monotonic() - start) * 1000.0
    report = VerificationReport(f"kalai-{kind}", k, rows, passed, elapsed)
    return report
