"""Exact evaluation of symbolic elements on quiver representations:
traces, induced Poisson brackets, determinantal semi-invariants, stability
inequalities, flows, and the rank-one phase-space checks.

All matrices are exact rational; there is no floating point anywhere.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .necklace import (NecklacePoly, induced_bracket, moment_element,
                       necklace_path, flow)
from .paths import NCPoly, path_end
from .quiver import DimVector
from .zariski import ArrowMatrix, sigma_matrix, orient_edges


@dataclass
class Representation:
    quiver: object
    dims: DimVector                 # aligned with quiver.vertices
    matrices: dict                  # arrow label -> Fraction matrix

    def __post_init__(self):
        idx = self.quiver.vertex_index
        mats = {}
        for a in self.quiver.arrows:
            m = linalg.mat(self.matrices.get(a.label,
                                             linalg.zeros(self.dims[idx(a.target)],
                                                          self.dims[idx(a.source)])))
            want = (self.dims[idx(a.target)], self.dims[idx(a.source)])
            got = (len(m), len(m[0]) if m else 0)
            if self.dims[idx(a.source)] == 0 or self.dims[idx(a.target)] == 0:
                m = linalg.zeros(*want)
                got = want
            if got != want:
                raise ValueError(
                    f"matrix for {a.label!r} has shape {got}, expected {want}")
            mats[a.label] = m
        self.matrices = mats

    def dim_of(self, v):
        return self.dims[self.quiver.vertex_index(v)]

    def matrix(self, label):
        return self.matrices[label]


def random_representation(q, alpha, rng, lo=-3, hi=3):
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    idx = q.vertex_index
    mats = {}
    for a in q.arrows:
        rows, cols = alpha[idx(a.target)], alpha[idx(a.source)]
        mats[a.label] = tuple(
            tuple(Fraction(rng.randint(lo, hi)) for _ in range(cols))
            for _ in range(rows))
    return Representation(q, alpha, mats)


def evaluate_path(R, p):
    at = p.start
    dims = [R.dim_of(at)]
    for lab in p.word:
        at = R.quiver.target(lab)
        dims.append(R.dim_of(at))
    if 0 in dims:
        return linalg.zeros(dims[-1], dims[0])
    m = linalg.identity(R.dim_of(p.start))
    for lab in p.word:
        m = linalg.mat_mul(R.matrix(lab), m)
    return m


def evaluate_components(P, R):
    """Evaluate an NCPoly per (start, end) vertex pair."""
    out = {}
    for p, c in P.terms.items():
        key = (p.start, path_end(P.quiver, p))
        m = linalg.mat_scale(c, evaluate_path(R, p))
        out[key] = linalg.mat_add(out[key], m) if key in out else m
    return out


def evaluate(P, R):
    """Evaluate an NCPoly whose paths all share start and end vertices."""
    comps = evaluate_components(P, R)
    if len(comps) > 1:
        raise ValueError(
            f"mixed components {sorted(comps)}; use evaluate_components")
    if not comps:
        raise ValueError("cannot evaluate the zero polynomial to a matrix")
    return next(iter(comps.values()))


def trace_ncpoly(P, R):
    """Trace of an NCPoly all of whose paths are closed."""
    total = Fraction(0)
    for p, c in P.terms.items():
        if path_end(P.quiver, p) != p.start:
            raise ValueError(f"path {p} is not closed")
        total += c * linalg.trace(evaluate_path(R, p))
    return total


def trace_necklace(N, R):
    if not isinstance(N, NecklacePoly):
        raise TypeError("expected a NecklacePoly")
    total = Fraction(0)
    for n, c in N.terms.items():
        p = necklace_path(N.quiver, n)
        total += c * linalg.trace(evaluate_path(R, p))
    return total


def act(g, R):
    """Base change: arrow a: v -> w gets g_w . M(a) . g_v^{-1}."""
    idx = R.quiver.vertex_index
    inv = {}
    for v in R.quiver.vertices:
        m = linalg.mat(g[v]) if v in g else linalg.identity(R.dims[idx(v)])
        if linalg.shape(m) != (R.dims[idx(v)], R.dims[idx(v)]):
            raise ValueError(f"base change at {v!r} has the wrong size")
        inv[v] = (m, linalg.inverse(m) if R.dims[idx(v)] else m)
    mats = {}
    for a in R.quiver.arrows:
        if R.dims[idx(a.source)] == 0 or R.dims[idx(a.target)] == 0:
            continue
        gw = inv[a.target][0]
        gvi = inv[a.source][1]
        mats[a.label] = linalg.mat_mul(gw, linalg.mat_mul(R.matrix(a.label), gvi))
    return Representation(R.quiver, R.dims, mats)


def _lift(N):
    out = NCPoly.zero(N.quiver)
    for n, c in N.terms.items():
        out = out + NCPoly.from_path(N.quiver, necklace_path(N.quiver, n), c)
    return out


def poisson_trace_bracket(P, Q, R):
    """{tr P, tr Q} evaluated at R, via the induced bracket of the double
    Poisson structure: tr({{p,q}}_1 {{p,q}}_2)(R)."""
    return trace_ncpoly(induced_bracket(_lift(P), _lift(Q)), R)


def flow_on_rep(N, rho, R):
    """Push a representation along a symplectic flow, arrow by arrow."""
    mats = {}
    for a in R.quiver.arrows:
        img = flow(N, rho, NCPoly.from_arrow(R.quiver, a.label))
        mats[a.label] = evaluate(img, R) if not img.is_zero() else None
    mats = {k: v for k, v in mats.items() if v is not None}
    return Representation(R.quiver, R.dims, mats)


# -- determinantal semi-invariants ---------------------------------------

@dataclass
class SemiInvariantSpec:
    """A block matrix of arrows over one edge, with its character data.

    `matrix` rows/columns are tied to Zariski-quiver vertices; `weight` is
    the power of the character the determinant transforms by.  The
    character of a block base change g is
    prod det(g at near blocks)^(d_near) * prod det(g at far blocks)^(-d_far).
    """
    edge_id: str
    weight: int
    matrix: ArrowMatrix
    near_exponents: dict        # quiver vertex -> +d
    far_exponents: dict         # quiver vertex -> -d


def sigma_spec(zq, edge_id):
    m = sigma_matrix(zq, edge_id)
    for oe in zq.oriented:
        if oe.edge.id == edge_id:
            break
    t = zq.tree
    near = {zq.vertex_of(oe.near, i): d
            for i, d in enumerate(t.vertices[oe.near].blocks)}
    far = {zq.vertex_of(oe.far, j): -d
           for j, d in enumerate(t.vertices[oe.far].blocks)}
    return SemiInvariantSpec(edge_id=edge_id, weight=1, matrix=m,
                             near_exponents=near, far_exponents=far)


def evaluate_arrow_matrix(am, R):
    """Replace each symbolic entry by its evaluated block; returns the
    assembled rational matrix."""
    idx = R.quiver.vertex_index
    row_sizes = [R.dims[idx(v)] for v in am.row_vertices]
    col_sizes = [R.dims[idx(v)] for v in am.col_vertices]
    total_r, total_c = sum(row_sizes), sum(col_sizes)
    grid = [[Fraction(0)] * total_c for _ in range(total_r)]
    r_off = [0]
    for s in row_sizes:
        r_off.append(r_off[-1] + s)
    c_off = [0]
    for s in col_sizes:
        c_off.append(c_off[-1] + s)
    for (r, c), ent in am.entries.items():
        if not ent:
            continue
        block = linalg.zeros(row_sizes[r], col_sizes[c])
        for coeff, lab in ent:
            block = linalg.mat_add(block,
                                   linalg.mat_scale(coeff, R.matrix(lab)))
        for i in range(row_sizes[r]):
            for j in range(col_sizes[c]):
                grid[r_off[r] + i][c_off[c] + j] = block[i][j]
    return tuple(tuple(row) for row in grid)


def det_semi_invariant(spec, R):
    m = evaluate_arrow_matrix(spec.matrix, R)
    n, k = linalg.shape(m)
    if n != k:
        raise ValueError(
            f"evaluated matrix is {n}x{k}; the dimension vector is not"
            " admissible for this semi-invariant")
    return linalg.det(m)


def theta_character(spec, g):
    """The block character: prod det(g_near)^d * prod det(g_far)^(-d)."""
    val = Fraction(1)
    for v, e in spec.near_exponents.items():
        val *= linalg.det(linalg.mat(g[v])) ** e
    for v, e in spec.far_exponents.items():
        val *= linalg.det(linalg.mat(g[v])) ** e
    return val


def sigma_invertible(zq, R):
    """All canonical edge matrices invertible at R; characterizes the
    representations of the tree algebra among quiver representations."""
    from .dimvec import dimvec_check
    chk = dimvec_check(zq.tree, R.dims, zq)
    if not chk.is_full():
        raise ValueError(f"dimension vector is not full ({chk.kind})")
    for oe in zq.oriented:
        spec = sigma_spec(zq, oe.edge.id)
        if det_semi_invariant(spec, R) == 0:
            return False
    return True


# -- stability inequalities ----------------------------------------------

def e_semistable_inequality(t, edge_id, sub, strict=False):
    """Evaluate the stability inequality of one edge for a candidate
    subdimension vector (near blocks first, then far blocks)."""
    for oe in orient_edges(t):
        if oe.edge.id == edge_id:
            break
    else:
        raise KeyError(f"no edge {edge_id!r}")
    dv = t.vertices[oe.near].blocks
    dw = t.vertices[oe.far].blocks
    if len(sub) != len(dv) + len(dw):
        raise ValueError("subdimension vector has the wrong length")
    if any(x < 0 for x in sub):
        raise ValueError("subdimension entries must be nonnegative")
    left = sum(k * d for k, d in zip(sub[:len(dv)], dv))
    right = sum(l * d for l, d in zip(sub[len(dv):], dw))
    return right > left if strict else right >= left


# -- rank-one phase space ---------------------------------------------

def cm_phase_space_check(X, Z):
    """rank([X, Z] + I) == 1, the defining condition of the rank-one
    commutator variety."""
    X, Z = linalg.mat(X), linalg.mat(Z)
    n, m = linalg.shape(X)
    if n != m or linalg.shape(Z) != (n, m):
        raise ValueError("expected two square matrices of equal size")
    c = linalg.mat_add(linalg.commutator(X, Z), linalg.identity(n))
    return linalg.rank(c) == 1


def moment_evaluate(R, lam):
    """Check the deformed moment relation: the moment element evaluates at
    each vertex to lam_v times the identity.  Returns (ok, per-vertex)."""
    m = moment_element(R.quiver)
    comps = evaluate_components(m, R)
    idx = R.quiver.vertex_index
    out = {}
    ok = True
    for v in R.quiver.vertices:
        d = R.dims[idx(v)]
        if d == 0:
            continue
        got = comps.get((v, v), linalg.zeros(d, d))
        want = linalg.mat_scale(Fraction(lam.get(v, 0)), linalg.identity(d))
        out[v] = got
        if got != want:
            ok = False
    return ok, out
