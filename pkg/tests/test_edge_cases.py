"""Degenerate and off-corpus inputs: empty middle dimensions, higher-degree
attachments, disconnected complexes."""

from fractions import Fraction

from cellmesh.complexes import Cell, CellComplex, validate
from cellmesh.homology import homology_groups, torsion_order
from cellmesh.spectra import (verify_geometric_theorems, verify_kirchhoff_lyons,
                              verify_theorem1, verify_theorem2)
from cellmesh.torsion import rf_combinatorial, verify_rf_identity


def cw_sphere():
    """One vertex, no edges, one 2-cell with empty attaching boundary."""
    return CellComplex("s2cw", 2, {0: [Cell("v")], 1: [], 2: [Cell("f")]})


def moore_z3():
    return CellComplex("moore3", 2, {0: [Cell("v")], 1: [Cell("e")],
                                     2: [Cell("f", [("e", 3)])]})


def two_triangles():
    return CellComplex("two_triangles", 1, {
        0: [Cell(f"v{i}") for i in range(1, 7)],
        1: [Cell("a1", [("v1", -1), ("v2", 1)]),
            Cell("a2", [("v2", -1), ("v3", 1)]),
            Cell("a3", [("v1", -1), ("v3", 1)]),
            Cell("b1", [("v4", -1), ("v5", 1)]),
            Cell("b2", [("v5", -1), ("v6", 1)]),
            Cell("b3", [("v4", -1), ("v6", 1)])]})


def test_cw_sphere_with_empty_middle_dimension():
    x = cw_sphere()
    assert validate(x) == []
    assert [homology_groups(x, d).betti for d in range(3)] == [1, 0, 1]
    for d in (1, 2):
        assert verify_theorem1(x, d).passed
        assert verify_theorem2(x, d).passed
        assert verify_kirchhoff_lyons(x, d).passed
        assert verify_geometric_theorems(x, d).passed
    assert verify_rf_identity(x).passed


def test_degree_three_attachment():
    x = moore_z3()
    assert torsion_order(x, 1) == 3
    report = verify_theorem2(x, 1)
    det_row = [r for r in report.rows if r["k"] == 0][0]
    assert report.passed and det_row["rhs"] == 9
    assert verify_theorem1(x, 1).passed
    assert rf_combinatorial(x) == Fraction(1, 9)
    assert verify_rf_identity(x).passed


def test_disconnected_graph_forest_count():
    x = two_triangles()
    report = verify_theorem1(x, 1)
    det_row = [r for r in report.rows if r["k"] == 0][0]
    assert report.passed and det_row["rhs"] == 9  # 3 forests per component
    assert verify_kirchhoff_lyons(x, 1).passed
    assert verify_geometric_theorems(x, 1).passed
    assert verify_rf_identity(x).passed
