"""Trees of semisimple algebras.

A vertex or edge algebra is recorded by its list of matrix block sizes.
Each edge carries two restriction matrices (Bratteli data): entry a[k][j]
is the multiplicity of the k-th edge block inside the j-th block of the
endpoint algebra, subject to the column identity

    d_endpoint(j) = sum_k a[k][j] * d_edge(k).

Everything is an immutable value; validation reports all violations
instead of raising.
"""

import json
import random
from dataclasses import dataclass, field


@dataclass(frozen=True)
class SemiSimpleAlgebra:
    blocks: tuple

    def __init__(self, blocks):
        blocks = tuple(int(b) for b in blocks)
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError("block sizes must be a non-empty list of positive ints")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n_blocks(self):
        return len(self.blocks)

    def dimension(self):
        return sum(b * b for b in self.blocks)


@dataclass(frozen=True)
class RestrictionMap:
    """Multiplicity matrix, rows = edge blocks, columns = vertex blocks."""

    matrix: tuple

    def __init__(self, matrix):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("restriction matrix must be rectangular and non-empty")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("restriction multiplicities must be nonnegative")
        object.__setattr__(self, "matrix", rows)

    @property
    def n_rows(self):
        return len(self.matrix)

    @property
    def n_cols(self):
        return len(self.matrix[0])

    def column_defects(self, edge_alg, vertex_alg):
        """Violations of the column identity, as (column, got, expected)."""
        out = []
        if self.n_rows != edge_alg.n_blocks or self.n_cols != vertex_alg.n_blocks:
            out.append(("shape", (self.n_rows, self.n_cols),
                        (edge_alg.n_blocks, vertex_alg.n_blocks)))
            return out
        for j in range(self.n_cols):
            got = sum(self.matrix[k][j] * edge_alg.blocks[k]
                      for k in range(self.n_rows))
            if got != vertex_alg.blocks[j]:
                out.append((j, got, vertex_alg.blocks[j]))
        return out


@dataclass(frozen=True)
class TreeEdge:
    id: str
    v: str
    w: str
    algebra: SemiSimpleAlgebra
    restriction_v: RestrictionMap
    restriction_w: RestrictionMap


@dataclass(frozen=True)
class TreeOfAlgebras:
    name: str
    root: str
    vertices: dict = field(default_factory=dict)   # id -> SemiSimpleAlgebra
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))

    def vertex_ids(self):
        return list(self.vertices)

    def edge(self, edge_id):
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(f"no edge {edge_id!r}")

    def restriction_into(self, e, vertex_id):
        if vertex_id == e.v:
            return e.restriction_v
        if vertex_id == e.w:
            return e.restriction_w
        raise KeyError(f"{vertex_id!r} is not an endpoint of edge {e.id!r}")


@dataclass
class ValidationReport:
    ok: bool
    problems: list

    def __bool__(self):
        return self.ok


def validate_tree(t):
    """Check the tree shape and every restriction-matrix column identity."""
    problems = []
    ids = set(t.vertices)
    if t.root not in ids:
        problems.append(f"root {t.root!r} is not a declared vertex")
    # tree shape: connected with |E| = |V| - 1, no repeated endpoints
    if len(t.edges) != len(ids) - 1:
        problems.append(
            f"edge count {len(t.edges)} != vertex count {len(ids)} - 1")
    adj = {v: set() for v in ids}
    for e in t.edges:
        for end in (e.v, e.w):
            if end not in ids:
                problems.append(f"edge {e.id!r}: endpoint {end!r} not declared")
        if e.v == e.w:
            problems.append(f"edge {e.id!r} is a self-loop")
        if e.v in adj and e.w in adj:
            adj[e.v].add(e.w)
            adj[e.w].add(e.v)
    if ids:
        start = t.root if t.root in ids else next(iter(ids))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != ids:
            problems.append("underlying graph is not connected")
    for e in t.edges:
        for end, rmap in ((e.v, e.restriction_v), (e.w, e.restriction_w)):
            if end not in t.vertices:
                continue
            for defect in rmap.column_defects(e.algebra, t.vertices[end]):
                problems.append(
                    f"edge {e.id!r} into {end!r}: column identity fails at {defect[0]}"
                    f" (got {defect[1]}, expected {defect[2]})")
    return ValidationReport(ok=not problems, problems=problems)


# -- document format --------------------------------------------------

class TreeFormatError(ValueError):
    pass


def tree_from_doc(doc):
    try:
        name = doc.get("name", "")
        root = doc["root"]
        vertices = {v["id"]: SemiSimpleAlgebra(v["blocks"])
                    for v in doc["vertices"]}
        edges = []
        for e in doc["edges"]:
            edges.append(TreeEdge(
                id=e["id"], v=e["from"], w=e["to"],
                algebra=SemiSimpleAlgebra(e["blocks"]),
                restriction_v=RestrictionMap(e["restriction_from"]),
                restriction_w=RestrictionMap(e["restriction_to"]),
            ))
    except (KeyError, TypeError, ValueError) as exc:
        raise TreeFormatError(f"malformed tree document: {exc}") from exc
    t = TreeOfAlgebras(name=name, root=root, vertices=vertices, edges=edges)
    report = validate_tree(t)
    if not report:
        raise TreeFormatError("invalid tree: " + "; ".join(report.problems))
    return t


def parse_tree(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TreeFormatError(f"syntax error at line {exc.lineno}: {exc.msg}") from exc
    return tree_from_doc(doc)


def tree_to_doc(t):
    return {
        "name": t.name,
        "root": t.root,
        "vertices": [{"id": v, "blocks": list(alg.blocks)}
                     for v, alg in t.vertices.items()],
        "edges": [{
            "id": e.id, "from": e.v, "to": e.w,
            "blocks": list(e.algebra.blocks),
            "restriction_from": [list(r) for r in e.restriction_v.matrix],
            "restriction_to": [list(r) for r in e.restriction_w.matrix],
        } for e in t.edges],
    }


def serialize_tree(t):
    return json.dumps(tree_to_doc(t), indent=2) + "\n"


# -- presets ----------------------------------------------------------
#
# The group presets store their restriction data literally.  Character
# orderings:
#   sl2z:  Z4 characters by value on the generator (-i, -1, i, 1), Z6
#          characters by value on the generator (-r, r^2, -1, r, -r^2, 1)
#          for r a primitive cube root of unity; Z2 blocks are ordered
#          (trivial, sign).
#   gl2z:  D4 simples X1..X5, D6 simples Y1..Y6, D2 simples Z1..Z4 in the
#          usual character-table order, X5/Y5/Y6 two-dimensional.
#   psl2z: Z2 and Z3 over the trivial algebra; every character restricts
#          to the unique simple, so both restriction maps are all-ones
#          row vectors.
# calogero-moser-base is the two-vertex tree with trivial edge algebra;
# its Zariski quiver is the single arrow that seeds the calogero-moser
# quiver preset (the loop is added at the quiver level, see
# quiver.preset_quiver).

def preset_tree(name):
    if name == "sl2z":
        return tree_from_doc({
            "name": "sl2z", "root": "Z4",
            "vertices": [
                {"id": "Z4", "blocks": [1, 1, 1, 1]},
                {"id": "Z6", "blocks": [1, 1, 1, 1, 1, 1]},
            ],
            "edges": [{
                "id": "e", "from": "Z4", "to": "Z6", "blocks": [1, 1],
                "restriction_from": [[0, 1, 0, 1], [1, 0, 1, 0]],
                "restriction_to": [[0, 1, 0, 1, 0, 1], [1, 0, 1, 0, 1, 0]],
            }],
        })
    if name == "psl2z":
        return tree_from_doc({
            "name": "psl2z", "root": "Z2",
            "vertices": [
                {"id": "Z2", "blocks": [1, 1]},
                {"id": "Z3", "blocks": [1, 1, 1]},
            ],
            "edges": [{
                "id": "e", "from": "Z2", "to": "Z3", "blocks": [1],
                "restriction_from": [[1, 1]],
                "restriction_to": [[1, 1, 1]],
            }],
        })
    if name == "gl2z":
        # X1..X4 restrict to Z1, Z4, Z1, Z4; X5 to Z2+Z3.
        # Y1..Y6 restrict to Z1, Z4, Z2, Z3, Z2+Z3, Z1+Z4.
        return tree_from_doc({
            "name": "gl2z", "root": "D4",
            "vertices": [
                {"id": "D4", "blocks": [1, 1, 1, 1, 2]},
                {"id": "D6", "blocks": [1, 1, 1, 1, 2, 2]},
            ],
            "edges": [{
                "id": "e", "from": "D4", "to": "D6", "blocks": [1, 1, 1, 1],
                "restriction_from": [
                    [1, 0, 1, 0, 0],
                    [0, 0, 0, 0, 1],
                    [0, 0, 0, 0, 1],
                    [0, 1, 0, 1, 0],
                ],
                "restriction_to": [
                    [1, 0, 0, 0, 0, 1],
                    [0, 0, 1, 0, 1, 0],
                    [0, 0, 0, 1, 1, 0],
                    [0, 1, 0, 0, 0, 1],
                ],
            }],
        })
    if name == "calogero-moser-base":
        return tree_from_doc({
            "name": "calogero-moser-base", "root": "A",
            "vertices": [
                {"id": "A", "blocks": [1]},
                {"id": "B", "blocks": [1]},
            ],
            "edges": [{
                "id": "e", "from": "A", "to": "B", "blocks": [1],
                "restriction_from": [[1]],
                "restriction_to": [[1]],
            }],
        })
    raise ValueError(f"unknown preset: {name}")


PRESET_NAMES = ("sl2z", "psl2z", "gl2z", "calogero-moser-base")


# -- random valid trees (property-test support) ------------------------

def _random_restriction(rng, vertex_blocks, edge_blocks, max_entry=2):
    """A nonnegative matrix with column identity against the given blocks,
    entries <= max_entry, or None if some column has no such split."""
    cols = []
    for d in vertex_blocks:
        splits = []
        def rec(i, remaining, acc):
            if i == len(edge_blocks):
                if remaining == 0:
                    splits.append(tuple(acc))
                return
            for c in range(0, min(max_entry, remaining // edge_blocks[i]) + 1):
                rec(i + 1, remaining - c * edge_blocks[i], acc + [c])
        rec(0, d, [])
        if not splits:
            return None
        cols.append(rng.choice(splits))
    return RestrictionMap(tuple(zip(*cols)))


def random_tree(rng, max_vertices=4, max_blocks=3, max_block_size=3,
                max_entry=2):
    """A random valid tree of semisimple algebras within the given bounds."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    nv = rng.randint(1, max_vertices)
    vertices = {}
    for i in range(nv):
        blocks = [rng.randint(1, max_block_size)
                  for _ in range(rng.randint(1, max_blocks))]
        vertices[f"v{i}"] = SemiSimpleAlgebra(blocks)
    edges = []
    shapes = [(1,), (1, 1), (1, 2), (1, 1, 1), (2,)]
    for i in range(1, nv):
        j = rng.randrange(i)
        va, wa = vertices[f"v{j}"], vertices[f"v{i}"]
        rng_shapes = shapes[:]
        rng.shuffle(rng_shapes)
        rng_shapes.append((1, 1))   # always solvable for block sizes <= 4
        for shape in rng_shapes:
            alg = SemiSimpleAlgebra(shape)
            rv = _random_restriction(rng, va.blocks, shape, max_entry)
            rw = _random_restriction(rng, wa.blocks, shape, max_entry)
            if rv is not None and rw is not None:
                edges.append(TreeEdge(f"e{i}", f"v{j}", f"v{i}", alg, rv, rw))
                break
        else:
            raise RuntimeError("no valid restriction data found")
    t = TreeOfAlgebras(name="random", root="v0", vertices=vertices, edges=edges)
    assert validate_tree(t).ok
    return t
