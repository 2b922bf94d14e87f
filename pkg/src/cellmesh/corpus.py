"""Bundled test corpus: small complexes spanning torsion-free and torsion cases.

Graphs (K3, K4, theta, P2), spheres and disks (solid and hollow tetrahedron),
the 2-skeleton of the 5-simplex, the 6-vertex projective plane, a CW Moore
space M(Z/2, 1), and a CW dunce-hat.  All are small enough for exhaustive
subset enumeration.
"""

from .complexes import Cell, CellComplex, simplex_id, skeleton, standard_simplex

# Faces of the 6-vertex triangulation of the projective plane (antipodal
# quotient of the icosahedron).  Every edge of K6 lies in exactly two faces.
RP2_FACES = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def _graph(name, n_vertices, edges):
    """Graph complex; edges are (tail, head) pairs on vertices 1..n."""
    vertices = [Cell(f"v{i}") for i in range(1, n_vertices + 1)]
    cells = {0: vertices, 1: []}
    for label, (a, b) in edges:
        cells[1].append(Cell(label, [(f"v{a}", -1), (f"v{b}", 1)]))
    return CellComplex(name, 1, cells, check=False)


def k3():
    return _graph("k3", 3, [("e12", (1, 2)), ("e23", (2, 3)), ("e13", (1, 3))])


def k4():
    edges = []
    for a in range(1, 5):
        for b in range(a + 1, 5):
            edges.append((f"e{a}{b}", (a, b)))
    return _graph("k4", 4, edges)


def theta_graph():
    return _graph("theta", 2, [("ea", (1, 2)), ("eb", (1, 2)), ("ec", (1, 2))])


def p2_path():
    return _graph("p2", 2, [("e", (1, 2))])


def solid_delta3():
    x = standard_simplex(4)
    return CellComplex("delta3", 3, x.cells, check=False)


def boundary_delta3():
    x = skeleton(standard_simplex(4), 2)
    return CellComplex("sphere2", 2, x.cells, check=False)


def delta5_skel2():
    x = skeleton(standard_simplex(6), 2)
    return CellComplex("delta5skel2", 2, x.cells, check=False)


def _simplicial_two_complex(name, n_vertices, faces):
    vertices = [Cell(str(i)) for i in range(1, n_vertices + 1)]
    edge_set = sorted({tuple(sorted(pair)) for face in faces
                       for pair in [(face[0], face[1]), (face[0], face[2]),
                                    (face[1], face[2])]})
    edges = []
    for a, b in edge_set:
        edges.append(Cell(simplex_id((a, b)), [(str(a), -1), (str(b), 1)]))
    tris = []
    for face in sorted(tuple(sorted(f)) for f in faces):
        a, b, c = face
        tris.append(Cell(simplex_id(face), [
            (simplex_id((b, c)), 1),
            (simplex_id((a, c)), -1),
            (simplex_id((a, b)), 1),
        ]))
    return CellComplex(name, 2, {0: vertices, 1: edges, 2: tris}, check=False)


def rp2_six_vertex():
    return _simplicial_two_complex("rp2", 6, RP2_FACES)


def moore_z2():
    """CW Moore space M(Z/2, 1): one vertex, one loop, one degree-2 disk."""
    cells = {
        0: [Cell("v")],
        1: [Cell("e")],
        2: [Cell("f", [("e", 2)])],
    }
    return CellComplex("moore_z2", 2, cells, check=False)


def dunce_hat():
    """CW dunce-hat-like complex: disk glued to a loop with total degree 1."""
    cells = {
        0: [Cell("v")],
        1: [Cell("e")],
        2: [Cell("f", [("e", 1)])],
    }
    return CellComplex("dunce", 2, cells, check=False)


def point():
    return CellComplex("point", 0, {0: [Cell("pt")]}, check=False)


BUILDERS = {
    "k3": k3,
    "k4": k4,
    "theta": theta_graph,
    "p2": p2_path,
    "delta3": solid_delta3,
    "sphere2": boundary_delta3,
    "delta5skel2": delta5_skel2,
    "rp2": rp2_six_vertex,
    "moore_z2": moore_z2,
    "dunce": dunce_hat,
}


def all_complexes():
    """Name -> freshly built complex, in a fixed order."""
    return {name: build() for name, build in BUILDERS.items()}


def write_corpus(directory):
    """Write every corpus complex to <directory>/<name>.json."""
    import os
    from .complexes import serialize_complex
    os.makedirs(directory, exist_ok=True)
    for name, build in BUILDERS.items():
        path = os.path.join(directory, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_complex(build()))
            fh.write("\n")
