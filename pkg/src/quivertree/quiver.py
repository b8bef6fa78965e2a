"""Quivers (finite labeled multidigraphs), dimension vectors and Euler forms.

A quiver may additionally carry *double structure*: an involution a <-> a*
on its arrows together with the class L of unstarred arrows.  The doubling
constructions below produce that structure; most downstream symbolic
machinery (necklaces, brackets, flows) requires it.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


class Quiver:
    """Finite quiver with ordered vertices, labeled arrows, loops allowed.

    `star` maps each arrow label to its partner when the quiver is a double
    quiver (then `unstarred` is the class L); both are None otherwise.
    """

    def __init__(self, vertices, arrows, star=None, unstarred=None):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        arr = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.label} has undeclared endpoint")
            arr.append(a)
        self.arrows = tuple(arr)
        self.by_label = {a.label: a for a in self.arrows}
        if len(self.by_label) != len(self.arrows):
            raise ValueError("arrow labels are not unique")
        self.star = dict(star) if star else None
        self.unstarred = frozenset(unstarred) if unstarred else None
        self._index = {v: i for i, v in enumerate(self.vertices)}
        counts = {}
        for a in self.arrows:
            counts[(a.source, a.target)] = counts.get((a.source, a.target), 0) + 1
        self._counts = counts

    # -- basic queries -------------------------------------------------

    def vertex_index(self, v):
        return self._index[v]

    def arrow_count(self, i, j):
        """Number of arrows i -> j (counting multiplicity)."""
        return self._counts.get((i, j), 0)

    def loops_at(self, v):
        return self.arrow_count(v, v)

    def arrows_between(self, i, j):
        return [a for a in self.arrows if a.source == i and a.target == j]

    def is_double(self):
        return self.star is not None

    def source(self, label):
        return self.by_label[label].source

    def target(self, label):
        return self.by_label[label].target

    def restricted(self, keep):
        """Full subquiver on the vertex subset `keep` (arrow structure only)."""
        keep = set(keep)
        return Quiver(
            [v for v in self.vertices if v in keep],
            [a for a in self.arrows if a.source in keep and a.target in keep],
        )

    def components(self):
        """Connected components (ignoring orientation), as vertex lists."""
        seen = set()
        nbrs = {v: set() for v in self.vertices}
        for a in self.arrows:
            nbrs[a.source].add(a.target)
            nbrs[a.target].add(a.source)
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in nbrs[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp, key=self._index.get))
        return comps

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


class DimVector:
    """Nonnegative integer vector indexed by the vertices of a quiver."""

    def __init__(self, entries):
        self.entries = tuple(int(x) for x in entries)
        if any(x < 0 for x in self.entries):
            raise ValueError("dimension vector entries must be nonnegative")

    @classmethod
    def from_dict(cls, quiver, values):
        return cls(values.get(v, 0) for v in quiver.vertices)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __add__(self, other):
        return DimVector(x + y for x, y in zip(self.entries, other.entries))

    def __rmul__(self, c):
        return DimVector(c * x for x in self.entries)

    def __eq__(self, other):
        return isinstance(other, DimVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"DimVector{self.entries}"

    def total(self):
        return sum(self.entries)

    def support(self, quiver):
        return [v for v, x in zip(quiver.vertices, self.entries) if x > 0]


def unit_vector(quiver, v):
    return DimVector(1 if u == v else 0 for u in quiver.vertices)


def euler_form(q, alpha, beta):
    """Euler form: sum_v a_v b_v - sum_{arrows} a_src b_tgt.  Bilinear."""
    if len(alpha) != len(q.vertices) or len(beta) != len(q.vertices):
        raise ValueError("dimension vector size mismatch")
    val = sum(a * b for a, b in zip(alpha.entries, beta.entries))
    idx = q.vertex_index
    for a in q.arrows:
        val -= alpha[idx(a.source)] * beta[idx(a.target)]
    return val


def is_symmetric(q):
    """True iff #(i->j) == #(j->i) for every pair i != j (loops are free)."""
    for i in q.vertices:
        for j in q.vertices:
            if i != j and q.arrow_count(i, j) != q.arrow_count(j, i):
                return False
    return True


def double_quiver(q):
    """Adjoin a reversed arrow a*: j -> i for every arrow a: i -> j.

    The original arrows form the unstarred class L; the star involution is
    returned as quiver metadata.
    """
    arrows = list(q.arrows)
    star = {}
    for a in q.arrows:
        s = a.label + "*"
        if s in q.by_label:
            raise ValueError(f"label {s} already taken")
        arrows.append(Arrow(s, a.target, a.source))
        star[a.label] = s
        star[s] = a.label
    return Quiver(q.vertices, arrows, star=star,
                  unstarred=[a.label for a in q.arrows])


def symmetrize_to_double(q):
    """Turn a symmetric quiver into a double quiver.

    Non-loop arrows between each vertex pair are matched in label order;
    loops at a vertex are matched pairwise in label order.  A leftover
    unmatched loop l at vertex i is replaced by a fresh vertex i' and an
    arrow pair l: i -> i', l*: i' -> i; those replacement arrows form the
    inversion set.

    Returns (double quiver, inversion set, map of new vertices to their
    originals).
    """
    if not is_symmetric(q):
        raise ValueError("quiver is not symmetric")
    vertices = list(q.vertices)
    arrows = []
    star = {}
    unstarred = []
    inversion = []
    new_to_old = {}

    done_pairs = set()
    for i in q.vertices:
        for j in q.vertices:
            if i == j or (j, i) in done_pairs:
                continue
            done_pairs.add((i, j))
            fwd = sorted(q.arrows_between(i, j), key=lambda a: a.label)
            bwd = sorted(q.arrows_between(j, i), key=lambda a: a.label)
            for a, b in zip(fwd, bwd):
                arrows.append(a)
                arrows.append(b)
                star[a.label] = b.label
                star[b.label] = a.label
                unstarred.append(a.label)

    for i in q.vertices:
        loops = sorted(q.arrows_between(i, i), key=lambda a: a.label)
        for k in range(0, len(loops) - 1, 2):
            a, b = loops[k], loops[k + 1]
            arrows.append(a)
            arrows.append(b)
            star[a.label] = b.label
            star[b.label] = a.label
            unstarred.append(a.label)
        if len(loops) % 2 == 1:
            l = loops[-1]
            nv = i + "'"
            while nv in q._index or nv in new_to_old:
                nv += "'"
            vertices.append(nv)
            new_to_old[nv] = i
            arrows.append(Arrow(l.label, i, nv))
            sl = l.label + "*"
            arrows.append(Arrow(sl, nv, i))
            star[l.label] = sl
            star[sl] = l.label
            unstarred.append(l.label)
            inversion.append(l.label)

    dq = Quiver(vertices, arrows, star=star, unstarred=unstarred)
    assert all(dq.loops_at(v) % 2 == 0 for v in dq.vertices)
    return dq, inversion, new_to_old


# -- presets ----------------------------------------------------------

def preset_quiver(name):
    """Base (undoubled) quivers used by the worked examples."""
    if name == "calogero-moser-base":
        return Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "2")])
    raise ValueError(f"unknown quiver preset: {name}")


def preset_double_quiver(name):
    """Named double quivers with their standard arrow labels.

    calogero-moser: one arrow 1->2 plus a loop at 2, doubled (a, a*, b, b*).
    psl2z: hexagon with forward arrows s1..s6 and reverse arrows ti = si*.
    gl2z: eight-vertex cycle p1..p8 (stars q1..q8) plus the two diagonals
    x1: v2 -> v6 and x2: v4 -> v8 (stars y1, y2).
    """
    if name == "calogero-moser":
        return double_quiver(preset_quiver("calogero-moser-base"))
    if name == "psl2z":
        verts = [f"v{i}" for i in range(1, 7)]
        arrows = []
        star = {}
        for i in range(1, 7):
            s, t = f"s{i}", f"t{i}"
            arrows.append(Arrow(s, f"v{i}", f"v{i % 6 + 1}"))
            arrows.append(Arrow(t, f"v{i % 6 + 1}", f"v{i}"))
            star[s] = t
            star[t] = s
        return Quiver(verts, arrows, star=star,
                      unstarred=[f"s{i}" for i in range(1, 7)])
    if name == "gl2z":
        verts = [f"v{i}" for i in range(1, 9)]
        arrows = []
        star = {}
        for i in range(1, 9):
            p, qq = f"p{i}", f"q{i}"
            arrows.append(Arrow(p, f"v{i}", f"v{i % 8 + 1}"))
            arrows.append(Arrow(qq, f"v{i % 8 + 1}", f"v{i}"))
            star[p] = qq
            star[qq] = p
        for lab, slab, src, tgt in [("x1", "y1", "v2", "v6"),
                                    ("x2", "y2", "v4", "v8")]:
            arrows.append(Arrow(lab, src, tgt))
            arrows.append(Arrow(slab, tgt, src))
            star[lab] = slab
            star[slab] = lab
        return Quiver(verts, arrows, star=star,
                      unstarred=[f"p{i}" for i in range(1, 9)] + ["x1", "x2"])
    raise ValueError(f"unknown double quiver preset: {name}")


# -- export -----------------------------------------------------------

def to_dot(q, dims=None, name="quiver"):
    """Graphviz DOT text for the quiver, deterministic line order."""
    lines = [f"digraph {name} {{"]
    for v in q.vertices:
        if dims is not None:
            lines.append(f'  "{v}" [label="{v} ({dims[q.vertex_index(v)]})"];')
        else:
            lines.append(f'  "{v}";')
    for a in q.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_doc(q):
    doc = {
        "vertices": list(q.vertices),
        "arrows": [{"label": a.label, "from": a.source, "to": a.target}
                   for a in q.arrows],
    }
    if q.is_double():
        doc["star"] = {a: q.star[a] for a in sorted(q.star)}
        doc["unstarred"] = sorted(q.unstarred)
    return doc


def quiver_from_doc(doc):
    return Quiver(
        doc["vertices"],
        [(a["label"], a["from"], a["to"]) for a in doc["arrows"]],
        star=doc.get("star"),
        unstarred=doc.get("unstarred"),
    )
