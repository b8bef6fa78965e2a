"""The Zariski quiver of a tree of semisimple algebras, and its
canonical localization matrices.

Quiver vertices are the simple blocks of the vertex algebras, one quiver
vertex "<tree vertex>:<block index>" per block.  For every tree edge,
oriented away from the root, the number of arrows between block i on the
near side and block j on the far side is

    n_ij = sum_k a_near[k][i] * a_far[k][j],

one arrow per (edge block k, copy r on the near side, copy s on the far
side).  Copies are counted through the blocks in order, so the canonical
arrow label "<edge>:<k>:<r>:<s>" is reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra_tree import validate_tree
from .quiver import Arrow, Quiver


@dataclass
class OrientedEdge:
    edge: object            # the TreeEdge
    near: str               # endpoint closer to the root
    far: str
    restriction_near: object
    restriction_far: object


def orient_edges(t):
    """Assign each edge its root-to-leaves orientation."""
    depth = {t.root: 0}
    frontier = [t.root]
    adj = {}
    for e in t.edges:
        adj.setdefault(e.v, []).append((e.w, e))
        adj.setdefault(e.w, []).append((e.v, e))
    order = {}
    while frontier:
        nxt = []
        for u in frontier:
            for w, e in adj.get(u, []):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    order[e.id] = (u, w)
                    nxt.append(w)
        frontier = nxt
    out = []
    for e in t.edges:
        near, far = order[e.id]
        out.append(OrientedEdge(
            edge=e, near=near, far=far,
            restriction_near=t.restriction_into(e, near),
            restriction_far=t.restriction_into(e, far)))
    return out


def _copy_positions(restriction, block_k):
    """(vertex block i, local copy r) pairs for edge block k, in order."""
    out = []
    for i in range(restriction.n_cols):
        for r in range(restriction.matrix[block_k][i]):
            out.append((i, r))
    return out


@dataclass
class ZariskiQuiver:
    tree: object
    quiver: Quiver
    vertex_map: dict         # (tree vertex, block index 0-based) -> quiver vertex
    arrow_info: dict         # label -> dict(edge, k, near_block, near_copy, ...)
    oriented: list           # OrientedEdge list

    def vertex_of(self, tree_vertex, block):
        return self.vertex_map[(tree_vertex, block)]

    def block_weights(self):
        """d-weight of each quiver vertex, aligned with quiver.vertices."""
        w = []
        for v in self.quiver.vertices:
            tv, i = self._rev[v]
            w.append(self.tree.vertices[tv].blocks[i])
        return w

    def __post_init__(self):
        self._rev = {qv: key for key, qv in self.vertex_map.items()}

    def tree_block_of(self, quiver_vertex):
        return self._rev[quiver_vertex]


def zariski_quiver(t):
    report = validate_tree(t)
    if not report:
        raise ValueError("invalid tree: " + "; ".join(report.problems))
    vertices = []
    vertex_map = {}
    # root-first breadth order so dimension vectors read off in tree order
    depth = {t.root: 0}
    order = [t.root]
    adj = {}
    for e in t.edges:
        adj.setdefault(e.v, []).append(e.w)
        adj.setdefault(e.w, []).append(e.v)
    frontier = [t.root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in sorted(adj.get(u, [])):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    for tv in order:
        for i in range(t.vertices[tv].n_blocks):
            qv = f"{tv}:{i + 1}"
            vertices.append(qv)
            vertex_map[(tv, i)] = qv

    arrows = []
    arrow_info = {}
    oriented = orient_edges(t)
    for oe in oriented:
        n_e = oe.edge.algebra.n_blocks
        for k in range(n_e):
            near_pos = _copy_positions(oe.restriction_near, k)
            far_pos = _copy_positions(oe.restriction_far, k)
            for r, (i, _ri) in enumerate(near_pos):
                for s, (j, _sj) in enumerate(far_pos):
                    label = f"{oe.edge.id}:{k + 1}:{r + 1}:{s + 1}"
                    arrows.append(Arrow(label,
                                        vertex_map[(oe.near, i)],
                                        vertex_map[(oe.far, j)]))
                    arrow_info[label] = {
                        "edge": oe.edge.id, "k": k,
                        "near_block": i, "near_copy": r + 1,
                        "far_block": j, "far_copy": s + 1,
                    }
    return ZariskiQuiver(tree=t, quiver=Quiver(vertices, arrows),
                         vertex_map=vertex_map, arrow_info=arrow_info,
                         oriented=oriented)


# -- arrow matrices -----------------------------------------------------

@dataclass
class ArrowMatrix:
    """Matrix whose scalar entries are rational combinations of arrows.

    Each symbolic row/column is tied to a quiver vertex; on evaluation the
    (r, c) entry becomes an alpha_row x alpha_col block.  Entries are
    tuples of (coefficient, arrow label); missing entries are zero.
    """
    row_vertices: list
    col_vertices: list
    entries: dict            # (r, c) -> tuple((Fraction, label), ...)
    row_names: list = None
    col_names: list = None

    def entry(self, r, c):
        return self.entries.get((r, c), ())

    def nonzero_count(self):
        return sum(1 for v in self.entries.values() if v)

    def arrow_labels(self):
        out = []
        for v in self.entries.values():
            out.extend(lab for _, lab in v)
        return out

    def grid_str(self):
        rows = []
        for r in range(len(self.row_vertices)):
            cells = []
            for c in range(len(self.col_vertices)):
                ent = self.entry(r, c)
                if not ent:
                    cells.append("0")
                else:
                    cells.append(" + ".join(
                        lab if co == 1 else f"{co}·{lab}" for co, lab in ent))
            rows.append("[" + "  ".join(cells) + "]")
        return "\n".join(rows)


def sigma_matrix(zq, edge_id):
    """Canonical localization matrix of one edge.

    Rows are indexed by (far block j, edge block k, copy s) and columns by
    (near block i, edge block k, copy r), both sorted lexicographically;
    the entry is the arrow <edge>:<k>:<r>:<s> when the edge blocks agree
    and zero otherwise.  Every arrow of the edge appears exactly once.
    """
    for oe in zq.oriented:
        if oe.edge.id == edge_id:
            break
    else:
        raise KeyError(f"no edge {edge_id!r}")
    n_e = oe.edge.algebra.n_blocks

    cols = []        # (near block i, k, global copy r)
    col_names = []
    for i in range(oe.restriction_near.n_cols):
        for k in range(n_e):
            for r, (i2, _loc) in enumerate(_copy_positions(oe.restriction_near, k)):
                if i2 == i:
                    cols.append((i, k, r + 1))
                    col_names.append(f"({oe.near}:{i + 1},{k + 1},{r + 1})")
    rows = []
    row_names = []
    for j in range(oe.restriction_far.n_cols):
        for k in range(n_e):
            for s, (j2, _loc) in enumerate(_copy_positions(oe.restriction_far, k)):
                if j2 == j:
                    rows.append((j, k, s + 1))
                    row_names.append(f"({oe.far}:{j + 1},{k + 1},{s + 1})")

    entries = {}
    for rr, (j, k, s) in enumerate(rows):
        for cc, (i, k2, r) in enumerate(cols):
            if k == k2:
                label = f"{oe.edge.id}:{k + 1}:{r}:{s}"
                entries[(rr, cc)] = ((Fraction(1), label),)
    return ArrowMatrix(
        row_vertices=[zq.vertex_of(oe.far, j) for j, _, _ in rows],
        col_vertices=[zq.vertex_of(oe.near, i) for i, _, _ in cols],
        entries=entries, row_names=row_names, col_names=col_names)


def to_dot(zq, alpha=None):
    from .quiver import to_dot as qdot
    return qdot(zq.quiver, dims=alpha.entries if alpha else None, name="zariski")
