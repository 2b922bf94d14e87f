"""Spanning forests, coforests, their augmented/reduced variants, and weights.

A d-dimensional spanning forest is a subset of d-cells of size rank(B_{d-1})
carrying no d-cycles; adding k cells gives a k-augmented spanning forest.
A spanning coforest is a subset onto which the d-boundary space restricts
isomorphically; deleting k cells (restriction still onto) gives a k-reduced
spanning coforest.  Enumeration is a lexicographic DFS over cell positions
with incremental fraction-free rank tracking, so a prefix is abandoned as
soon as the rank condition becomes unattainable.
"""

from fractions import Fraction

from .complexes import CellSubset, ComplexFormatError, boundary_matrix
from .homology import integral_boundary_basis, relative_order
from .intmat import (IntMatrix, gram_det, invariant_factor_product,
                     kernel_basis, rank)

KINDS = ("spanning_forest", "k_augmented", "forest_of_size",
         "spanning_coforest", "k_reduced_coforest")


class ForestCertificate:
    """A classified subset of d-cells, optionally with its computed weight."""

    __slots__ = ("subset", "kind", "param", "weight", "weight_parts")

    def __init__(self, subset, kind, param=None, weight=None, weight_parts=None):
        if kind not in KINDS:
            raise ValueError(f"bad certificate kind {kind!r}")
        self.subset = subset
        self.kind = kind
        self.param = param
        self.weight = weight
        self.weight_parts = weight_parts

    def __repr__(self):
        tag = self.kind if self.param is None else f"{self.kind}({self.param})"
        return f"ForestCertificate({tag}, {sorted(self.subset.members)}, w={self.weight})"


# ---------------------------------------------------------------------------
# Rank bookkeeping helpers.
# ---------------------------------------------------------------------------

def _reduce_against(vec, pivots):
    """Fraction-free reduction of vec against echelon pivots (pos, pvec)."""
    v = list(vec)
    for pos, pvec in pivots:
        c = v[pos]
        if c:
            w = pvec[pos]
            v = [w * a - c * b for a, b in zip(v, pvec)]
    return v


def _first_nonzero(v):
    for i, x in enumerate(v):
        if x:
            return i
    return -1


def subset_rank_stream(vectors, size, target_rank, allow_dependent):
    """Yield index tuples (lexicographic) of subsets with the given rank.

    vectors: list of integer tuples (the columns or rows being chosen).
    Each yielded subset has exactly `size` elements and rank `target_rank`;
    with allow_dependent=False every chosen vector must extend the rank.
    """
    n = len(vectors)
    dep_budget = size - target_rank
    if dep_budget < 0:
        return
    pivots = []

    def rec(start, chosen, chosen_count, dep_count):
        if chosen_count == size:
            if len(pivots) == target_rank:
                yield tuple(chosen)
            return
        need = size - chosen_count
        if len(pivots) + need < target_rank:
            return
        for i in range(start, n - need + 1):
            red = _reduce_against(vectors[i], pivots)
            pos = _first_nonzero(red)
            if pos >= 0:
                if len(pivots) < target_rank:
                    pivots.append((pos, red))
                    chosen.append(i)
                    yield from rec(i + 1, chosen, chosen_count + 1, dep_count)
                    chosen.pop()
                    pivots.pop()
                # else: would overshoot the target rank; skip
            elif allow_dependent and dep_count < dep_budget:
                chosen.append(i)
                yield from rec(i + 1, chosen, chosen_count + 1, dep_count + 1)
                chosen.pop()

    yield from rec(0, [], 0, 0)


def _column_vectors(mat):
    return [tuple(mat.data[i][j] for i in range(mat.rows)) for j in range(mat.cols)]


def _row_vectors(mat):
    return [tuple(row) for row in mat.data]


# ---------------------------------------------------------------------------
# Classification and enumeration.
# ---------------------------------------------------------------------------

def classify(x, d, subset):
    """All applicable kinds (with parameters) of a subset of d-cells.

    A spanning forest is also reported as 0-augmented, a spanning coforest
    as 0-reduced.
    """
    if subset.dimension != d:
        raise ComplexFormatError(
            f"subset at dimension {subset.dimension}, expected {d}")
    pos = x.positions(d, subset.members)
    bd = boundary_matrix(x, d)
    b_low = rank(bd)
    sub_rank = rank(bd.submatrix(range(bd.rows), pos))
    kinds = set()
    m = len(pos)
    if sub_rank == m and m <= b_low:
        kinds.add(("forest_of_size", m))
        if m == b_low:
            kinds.add(("spanning_forest", None))
    if sub_rank == b_low and m >= b_low:
        kinds.add(("k_augmented", m - b_low))
    bbasis = integral_boundary_basis(x, d).basis
    b_up = bbasis.cols
    row_rank = rank(bbasis.submatrix(pos, range(b_up)))
    if row_rank == m and m <= b_up:
        kinds.add(("k_reduced_coforest", b_up - m))
        if m == b_up:
            kinds.add(("spanning_coforest", None))
    return kinds


def enumerate_forests(x, d, kind, param=None):
    """Stream every qualifying subset exactly once, lexicographically.

    Subsets are ordered by their sorted tuples of cell positions (file
    order).  Weights are not attached; see cycle_weight / boundary_weight.
    """
    if kind not in KINDS:
        raise ComplexFormatError(f"unknown kind {kind!r}")
    ids = x.cell_ids(d)
    if kind in ("spanning_forest", "k_augmented", "forest_of_size"):
        bd = boundary_matrix(x, d)
        b_low = rank(bd)
        vectors = _column_vectors(bd)
        if kind == "spanning_forest":
            size, target, dep = b_low, b_low, False
            param = None
        elif kind == "k_augmented":
            k = 0 if param is None else int(param)
            z = len(ids) - b_low
            if not 0 <= k <= z:
                raise ComplexFormatError(f"augmentation {k} out of range 0..{z}")
            size, target, dep, param = b_low + k, b_low, True, k
        else:
            m = int(param)
            if not 0 <= m <= b_low:
                raise ComplexFormatError(f"forest size {m} out of range 0..{b_low}")
            size, target, dep, param = m, m, False, m
    else:
        bbasis = integral_boundary_basis(x, d).basis
        b_up = bbasis.cols
        vectors = _row_vectors(bbasis)
        if kind == "spanning_coforest":
            size, target, dep = b_up, b_up, False
            param = None
        else:
            k = 0 if param is None else int(param)
            if not (0 <= k < b_up or (k == 0 and b_up == 0)):
                raise ComplexFormatError(
                    f"reduction {k} out of range for rank {b_up}")
            size, target, dep, param = b_up - k, b_up - k, False, k
    for idx in subset_rank_stream(vectors, size, target, dep):
        subset = CellSubset(d, [ids[i] for i in idx])
        yield ForestCertificate(subset, kind, param)


# ---------------------------------------------------------------------------
# Weight computation contexts (built once per complex/dimension).
# ---------------------------------------------------------------------------

class CycleWeightContext:
    """Cached data for Theorem-style cycle weights at one dimension.

    Torsion orders of subcomplexes are read off the boundary columns
    expressed in a basis of the saturated (d-1)-boundary lattice, which
    shrinks every per-subset Smith computation to b_{d-1} rows.
    """

    def __init__(self, x, d, basis):
        from .homology import rational_solve, saturate_columns
        if basis.kind != "cycles" or basis.dimension != d:
            raise ComplexFormatError("cycle_weight needs a cycle basis at d")
        self.x = x
        self.d = d
        self.a = basis.basis  # n_d x z_d
        bd = boundary_matrix(x, d)
        self.b_low = rank(bd)
        self.z = self.a.cols
        if self.b_low:
            bbar = saturate_columns(bd)
            coords = rational_solve(bbar, bd).to_integer()
        else:
            coords = IntMatrix(0, x.n_cells(d), [])
        self.coords = coords
        self.coord_cols = [tuple(coords.data[i][j] for i in range(coords.rows))
                           for j in range(coords.cols)]
        self.t_x = invariant_factor_product([row[:] for row in coords.data])

    def torsion_subcomplex(self, positions):
        """t_{d-1} of the subcomplex with exactly these d-cells."""
        rows = len(self.coord_cols[0]) if self.coord_cols else 0
        if not self.coord_cols:
            return 1
        m = [[self.coord_cols[j][i] for j in positions] for i in range(rows)]
        return invariant_factor_product(m)


class BoundaryWeightContext:
    """Cached data for boundary-mesh weights at one dimension."""

    def __init__(self, x, d, basis):
        if basis.kind != "boundaries" or basis.dimension != d:
            raise ComplexFormatError("boundary_weight needs a boundary basis at d")
        self.x = x
        self.d = d
        self.a = basis.basis  # n_d x b_d
        self.b_up = self.a.cols
        self.rows = _row_vectors(self.a)


def _greedy_coforest_completion(ctx, positions, order):
    """Extend row positions to a spanning coforest greedily along `order`."""
    pivots = []
    chosen = list(positions)
    for p in positions:
        red = _reduce_against(ctx.rows[p], pivots)
        pos = _first_nonzero(red)
        if pos < 0:
            raise ComplexFormatError("subset is not a k-reduced spanning coforest")
        pivots.append((pos, red))
    for i in order:
        if len(pivots) == ctx.b_up:
            break
        if i in positions:
            continue
        red = _reduce_against(ctx.rows[i], pivots)
        pos = _first_nonzero(red)
        if pos >= 0:
            pivots.append((pos, red))
            chosen.append(i)
    if len(pivots) != ctx.b_up:
        raise ComplexFormatError("no containing spanning coforest exists")
    return sorted(chosen)


def cycle_weight(x, d, subset, basis, ctx=None):
    """Weight of a k-augmented spanning forest, computed both ways.

    (i) directly as the Gram determinant of the rows of the cycle-basis
    matrix indexed by the complement, and (ii) as the squared torsion ratio
    t_{d-1}(X_W)/t_{d-1}(X) times the Gram determinant of the inclusion of
    Z_d(X_W) into the cycle lattice.  The two must agree exactly and the
    torsion ratio must be a positive integer.
    """
    if ctx is None:
        ctx = CycleWeightContext(x, d, basis)
    pos = x.positions(d, subset.members)
    pos_set = set(pos)
    comp = [i for i in range(x.n_cells(d)) if i not in pos_set]
    k = len(pos) - ctx.b_low
    u_w = ctx.a.submatrix(comp, range(ctx.z))
    if k < 0 or rank(u_w) != len(comp):
        raise ComplexFormatError("subset is not a k-augmented spanning forest")
    direct = gram_det(u_w.transpose())
    b_w = kernel_basis(u_w)  # cycles supported on the subset, in basis coords
    gram_factor = gram_det(b_w)
    t_w = ctx.torsion_subcomplex(pos)
    if t_w % ctx.t_x:
        raise AssertionError(
            f"torsion ratio {t_w}/{ctx.t_x} is not an integer on {subset}")
    ratio = t_w // ctx.t_x
    if direct != ratio * ratio * gram_factor:
        raise AssertionError(
            f"cycle weight mismatch on {sorted(subset.members)}: "
            f"direct {direct} != {ratio}^2 * {gram_factor}")
    parts = {"torsion_ratio": ratio, "gram_factor": gram_factor}
    return ForestCertificate(subset, "k_augmented" if k else "spanning_forest",
                             k if k else None, direct, parts)


def boundary_weight(x, d, subset, basis, ctx=None):
    """Weight of a k-reduced spanning coforest, computed both ways.

    (i) directly as the Gram determinant of the boundary-basis rows indexed
    by the subset, and (ii) as (v(V,X)/u(W,V))^2 det(B'[W]^t B'[W]) for a
    greedily chosen containing spanning coforest V, where u and v are the
    relative orders of Theorem-2 type.  f(W) = u/v is recorded and its
    independence of V is spot-checked against a second containing coforest
    when one exists.
    """
    if ctx is None:
        ctx = BoundaryWeightContext(x, d, basis)
    pos = x.positions(d, subset.members)
    m = len(pos)
    k = ctx.b_up - m
    r_w = ctx.a.submatrix(pos, range(ctx.b_up))
    if k < 0 or rank(r_w) != m:
        raise ComplexFormatError("subset is not a k-reduced spanning coforest")
    direct = gram_det(r_w.transpose())
    bprime = kernel_basis(r_w)  # b_d x k coordinates of boundaries vanishing on W
    gram_factor = gram_det(bprime)
    n = x.n_cells(d)
    v1 = _greedy_coforest_completion(ctx, pos, range(n))
    u1, vv1 = _u_v_orders(ctx, pos, v1, bprime)
    if direct * u1 * u1 != vv1 * vv1 * gram_factor:
        raise AssertionError(
            f"boundary weight mismatch on {sorted(subset.members)}: "
            f"{direct} * {u1}^2 != {vv1}^2 * {gram_factor}")
    f_w = Fraction(u1, vv1)
    v2 = _greedy_coforest_completion(ctx, pos, range(n - 1, -1, -1))
    if v2 != v1:
        u2, vv2 = _u_v_orders(ctx, pos, v2, bprime)
        if Fraction(u2, vv2) != f_w:
            raise AssertionError(
                f"f(W) depends on the containing coforest: {u1}/{vv1} vs {u2}/{vv2}")
    parts = {"u": u1, "v": vv1, "f": f_w, "gram_factor": gram_factor}
    return ForestCertificate(subset, "k_reduced_coforest" if k else "spanning_coforest",
                             k if k else None, direct, parts)


def _u_v_orders(ctx, w_positions, v_positions, bprime):
    """u(W,V) and v(V,X) for W inside the spanning coforest V."""
    interface = [p for p in v_positions if p not in set(w_positions)]
    supported = ctx.a.mul(bprime)  # boundaries vanishing on W, cellular coords
    sub = supported.submatrix(interface, range(bprime.cols))
    u = abs(sub.det()) if sub.rows else 1
    square = ctx.a.submatrix(v_positions, range(ctx.b_up))
    v = abs(square.det())
    if u == 0 or v == 0:
        raise AssertionError("degenerate containing coforest")
    return u, v


def kirchhoff_pair_weight(x, d, forest_subset, coforest_subset):
    """Squared determinant of the incidence minor of a (forest, coforest) pair.

    Rows are the (d-1)-cells of the coforest, columns the d-cells of the
    forest; the value is zero unless the pair is a forest of size m together
    with a spanning coforest of its subcomplex.  Nonzero values are
    cross-checked against the squared relative order of the pair.
    """
    if len(forest_subset.members) != len(coforest_subset.members):
        raise ComplexFormatError("forest and coforest sizes differ")
    vpos = x.positions(d, forest_subset.members)
    wpos = x.positions(d - 1, coforest_subset.members)
    bd = boundary_matrix(x, d)
    minor = bd.submatrix(wpos, vpos)
    det = minor.det()
    weight = det * det
    if weight:
        comp = CellSubset(d - 1, set(x.cell_ids(d - 1)) - coforest_subset.members)
        order = relative_order(x, forest_subset, comp, d - 1)
        if order * order != weight:
            raise AssertionError(
                f"pair weight {weight} != relative order {order} squared")
    return weight


def det_squared_leaf_stream(vectors, size):
    """Yield (index tuple, det^2) over independent subsets of square width.

    vectors must all have length `size`; the determinant is produced by the
    running Bareiss state, so each leaf costs no extra elimination.
    """
    n = len(vectors)
    if size == 0:
        yield (), 1
        return
    pivots = []  # (pos, reduced row, bareiss divisor before this pivot)

    def rec(start, chosen):
        depth = len(chosen)
        if depth == size:
            yield tuple(chosen), pivots[-1][1][pivots[-1][0]] ** 2
            return
        need = size - depth
        for i in range(start, n - need + 1):
            v = list(vectors[i])
            prev = 1
            for pos, pvec, div in pivots:
                c = v[pos]
                w = pvec[pos]
                v = [(w * a - c * b) // prev for a, b in zip(v, pvec)]
                prev = w
            pos = _first_nonzero(v)
            if pos >= 0:
                pivots.append((pos, v, prev))
                chosen.append(i)
                yield from rec(i + 1, chosen)
                chosen.pop()
                pivots.pop()

    yield from rec(0, [])
