"""Semigroups of weak dimension vectors cut out by determinantal data,
and their (generally non-symmetric) etale quivers.

For each edge, a block matrix of arrows Delta_e of weight l imposes, on a
weak dimension vector (a_i near, b_j far), the inequalities

    a_i <= sum_j min(P_ij, Q_ij) b_j      b_j <= sum_i min(P_ij, R_ij) a_i

where P_ij counts the arrows between blocks i and j, and Q_ij / R_ij count
linearly independent entries of the block A_ij.  Two readings of the
counts are provided: "block" (independent entries of the whole block, the
default) and "per-column" (one inequality per column of the block on the
near side, per row on the far side, which is the sharper variant).  Both
reproduce the worked fixtures; they are compared in tests.

Generators are found by adding one slack variable per inequality and
running the same Hilbert-basis completion as for full vectors; minimality
transfers because the slack lift is additive.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .dimvec import hilbert_basis, vertex_weight_rows
from .quiver import DimVector, Quiver, euler_form
from .zariski import ArrowMatrix, sigma_matrix, zariski_quiver


def _entry_rank(vectors):
    """Rank of a list of arrow-coefficient dictionaries over Q."""
    from . import linalg
    labs = sorted({k for v in vectors for k in v})
    if not labs:
        return 0
    rows = [[Fraction(v.get(l, 0)) for l in labs] for v in vectors]
    return linalg.rank(rows)


@dataclass
class EdgeDelta:
    edge_id: str
    weight: int
    matrix: ArrowMatrix


@dataclass
class SDeltaSpec:
    tree: object
    deltas: list                     # EdgeDelta per edge
    zq: object = None
    warnings: list = field(default_factory=list)

    def __post_init__(self):
        self.zq = self.zq or zariski_quiver(self.tree)


def canonical_spec(t, zq=None):
    """The spec whose matrices are the canonical edge matrices."""
    zq = zq or zariski_quiver(t)
    deltas = [EdgeDelta(oe.edge.id, 1, sigma_matrix(zq, oe.edge.id))
              for oe in zq.oriented]
    return SDeltaSpec(tree=t, deltas=deltas, zq=zq)


def _block_counts(zq, ed, reading):
    """Per near-block/far-block data: P and the min(P, count) coefficients.

    Returns (near_vertices, far_vertices, a_ineq_rows, b_ineq_rows) where
    each inequality row is a dict quiver-vertex -> coefficient bounding the
    keyed vertex: a_i <= sum coeff_j b_j and symmetrically.
    """
    am = ed.matrix
    near = []
    for v in am.col_vertices:
        if v not in near:
            near.append(v)
    far = []
    for v in am.row_vertices:
        if v not in far:
            far.append(v)
    cols_of = {v: [c for c, w in enumerate(am.col_vertices) if w == v]
               for v in near}
    rows_of = {v: [r for r, w in enumerate(am.row_vertices) if w == v]
               for v in far}

    def entry_vec(r, c):
        return {lab: co for co, lab in am.entry(r, c)}

    P = {(i, j): zq.quiver.arrow_count(i, j) for i in near for j in far}

    a_rows = {}   # near vertex -> list of coefficient dicts (one per ineq)
    b_rows = {}
    for i in near:
        if reading == "block":
            coeffs = {}
            for j in far:
                block = [entry_vec(r, c)
                         for r in rows_of[j] for c in cols_of[i]]
                q_ij = _entry_rank([v for v in block if v])
                coeffs[j] = min(P[(i, j)], q_ij)
            a_rows[i] = [coeffs]
        else:  # per-column
            rows = []
            for c in cols_of[i]:
                coeffs = {}
                for j in far:
                    column = [entry_vec(r, c) for r in rows_of[j]]
                    q_ij = _entry_rank([v for v in column if v])
                    coeffs[j] = min(P[(i, j)], q_ij)
                rows.append(coeffs)
            a_rows[i] = rows
    for j in far:
        if reading == "block":
            coeffs = {}
            for i in near:
                block = [entry_vec(r, c)
                         for r in rows_of[j] for c in cols_of[i]]
                r_ij = _entry_rank([v for v in block if v])
                coeffs[i] = min(P[(i, j)], r_ij)
            b_rows[j] = [coeffs]
        else:
            rows = []
            for r in rows_of[j]:
                coeffs = {}
                for i in near:
                    rowv = [entry_vec(r, c) for c in cols_of[i]]
                    r_ij = _entry_rank([v for v in rowv if v])
                    coeffs[i] = min(P[(i, j)], r_ij)
                rows.append(coeffs)
            b_rows[j] = rows
    return near, far, a_rows, b_rows


def sdelta_generators(spec, reading="block"):
    """Hilbert-basis generators of the weak vectors passing the
    inequalities of every edge matrix."""
    zq = spec.zq
    qverts = zq.quiver.vertices
    idx = {v: i for i, v in enumerate(qverts)}
    nvars = len(qverts)

    eq_rows = []
    # weak condition: all tree-vertex weighted sums agree
    weights = vertex_weight_rows(zq)
    tree_verts = list(weights)
    for a, b in zip(tree_verts, tree_verts[1:]):
        eq_rows.append(tuple(x - y for x, y in zip(weights[a], weights[b])))

    ineqs = []   # each: dict vertex -> coefficient of (lhs_vertex <= sum ...)
    for ed in spec.deltas:
        near, far, a_rows, b_rows = _block_counts(zq, ed, reading)
        for i, rows in a_rows.items():
            for coeffs in rows:
                ineqs.append((i, coeffs))
        for j, rows in b_rows.items():
            for coeffs in rows:
                ineqs.append((j, coeffs))

    total = nvars + len(ineqs)
    rows = [r + (0,) * len(ineqs) for r in eq_rows]
    for s, (lhs, coeffs) in enumerate(ineqs):
        row = [0] * total
        row[idx[lhs]] = 1
        for v, c in coeffs.items():
            row[idx[v]] -= c
        row[nvars + s] = 1           # slack: lhs - sum + slack = 0
        rows.append(tuple(row))

    basis = hilbert_basis(rows, total)
    gens = sorted({g[:nvars] for g in basis if any(g[:nvars])})
    out = [DimVector(g) for g in gens]
    out.sort(key=lambda g: (g.total(), g.entries))
    return out


def etale_quiver_localized(spec, reading="block"):
    """Etale quiver on the S_Delta generators; negative arrow counts are
    clamped to zero and reported in spec.warnings."""
    zq = spec.zq
    gens = sdelta_generators(spec, reading)
    names = [f"g{i + 1}" for i in range(len(gens))]
    arrows = []
    spec.warnings.clear()
    for i in range(len(gens)):
        for j in range(len(gens)):
            m = (1 if i == j else 0) - euler_form(zq.quiver, gens[i], gens[j])
            if m < 0:
                spec.warnings.append(
                    f"clamped negative arrow count {m} at ({names[i]},{names[j]})")
                m = 0
            for r in range(m):
                arrows.append((f"{names[i]}->{names[j]}#{r + 1}",
                               names[i], names[j]))
    return Quiver(names, arrows), gens


# -- the worked eight-row fixture ---------------------------------------

def gl2z_delta_spec(t=None, zq=None):
    """The eight-row block matrix over the dihedral tree, weight one.

    Rows: the two one-dimensional far blocks, the doubled sixth block, the
    two one-dimensional far blocks of the second component, then the
    doubled fifth block with its two parallel arrows crossed over.
    """
    from .algebra_tree import preset_tree
    t = t or preset_tree("gl2z")
    zq = zq or zariski_quiver(t)

    def arrow(i, j, which=0):
        src = zq.vertex_of("D4", i - 1)
        tgt = zq.vertex_of("D6", j - 1)
        labs = [a.label for a in zq.quiver.arrows_between(src, tgt)]
        return labs[which]

    one = Fraction(1)
    # column vertices: a1..a4 once each, a5 twice
    col_vs = [zq.vertex_of("D4", i) for i in range(4)] + [zq.vertex_of("D4", 4)] * 2
    row_vs = ([zq.vertex_of("D6", 0), zq.vertex_of("D6", 1)]
              + [zq.vertex_of("D6", 5)] * 2
              + [zq.vertex_of("D6", 2), zq.vertex_of("D6", 3)]
              + [zq.vertex_of("D6", 4)] * 2)
    b = {}
    b[(0, 0)] = ((one, arrow(1, 1)),)
    b[(0, 2)] = ((one, arrow(3, 1)),)
    b[(1, 1)] = ((one, arrow(2, 2)),)
    b[(1, 3)] = ((one, arrow(4, 2)),)
    b[(2, 0)] = ((one, arrow(1, 6)),)
    b[(2, 1)] = ((one, arrow(2, 6)),)
    b[(2, 2)] = ((one, arrow(3, 6)),)
    b[(3, 0)] = ((one, arrow(1, 6)),)
    b[(3, 1)] = ((one, arrow(2, 6)),)
    b[(3, 3)] = ((one, arrow(4, 6)),)
    b[(4, 4)] = ((one, arrow(5, 3)),)
    b[(5, 5)] = ((one, arrow(5, 4)),)
    b[(6, 4)] = ((one, arrow(5, 5, 0)),)
    b[(6, 5)] = ((one, arrow(5, 5, 1)),)
    b[(7, 4)] = ((one, arrow(5, 5, 1)),)
    b[(7, 5)] = ((one, arrow(5, 5, 0)),)
    am = ArrowMatrix(row_vertices=row_vs, col_vertices=col_vs, entries=b)
    return SDeltaSpec(tree=t, deltas=[EdgeDelta("e", 1, am)], zq=zq)
