"""Dimension vectors of the Zariski quiver: admissibility and the
semigroup of admissible vectors.

A vector alpha is *full* for total dimension n when every tree vertex v
satisfies sum_i d_v(i) alpha_i = n and every edge satisfies, block by
block, sum_i a_near[k][i] alpha_i = sum_j a_far[k][j] alpha_j.  It is
*weak* when only the vertex sums agree.  The edge equalities imply the
vertex-sum agreement (weight each block equality by the edge block size
and sum), so the semigroup of full vectors is the solution monoid of the
homogeneous edge system alone; that implication is asserted, not assumed.

The minimal generators (Hilbert basis) are computed by Contejean-Devie
completion: grow candidate vectors from the unit vectors, stepping only in
coordinates whose column decreases the residual norm, and prune anything
that dominates a known solution.  Tests cross-check the result against
naive bounded enumeration.
"""

from dataclasses import dataclass

from .quiver import DimVector
from .zariski import zariski_quiver


@dataclass
class DimVecCheck:
    kind: str          # "full" | "weak" | "invalid"
    n: int = None
    violations: tuple = ()

    def is_full(self):
        return self.kind == "full"


def edge_equation_rows(zq):
    """Integer rows (aligned with quiver vertices) of the edge system."""
    qverts = zq.quiver.vertices
    idx = {v: i for i, v in enumerate(qverts)}
    rows = []
    meta = []
    for oe in zq.oriented:
        n_e = oe.edge.algebra.n_blocks
        for k in range(n_e):
            row = [0] * len(qverts)
            for i in range(oe.restriction_near.n_cols):
                row[idx[zq.vertex_of(oe.near, i)]] += oe.restriction_near.matrix[k][i]
            for j in range(oe.restriction_far.n_cols):
                row[idx[zq.vertex_of(oe.far, j)]] -= oe.restriction_far.matrix[k][j]
            rows.append(tuple(row))
            meta.append((oe.edge.id, k))
    return rows, meta


def vertex_weight_rows(zq):
    """For each tree vertex, the d-weight row over the quiver vertices."""
    qverts = zq.quiver.vertices
    idx = {v: i for i, v in enumerate(qverts)}
    out = {}
    for tv, alg in zq.tree.vertices.items():
        row = [0] * len(qverts)
        for i, d in enumerate(alg.blocks):
            row[idx[zq.vertex_of(tv, i)]] = d
        out[tv] = tuple(row)
    return out


def dimvec_check(t, alpha, zq=None):
    zq = zq or zariski_quiver(t)
    if len(alpha) != len(zq.quiver.vertices):
        raise ValueError("dimension vector size mismatch")
    weights = vertex_weight_rows(zq)
    sums = {tv: sum(w * a for w, a in zip(row, alpha.entries))
            for tv, row in weights.items()}
    values = set(sums.values())
    if len(values) > 1:
        return DimVecCheck(kind="invalid",
                           violations=tuple(sorted(sums.items())))
    n = values.pop() if values else 0
    rows, meta = edge_equation_rows(zq)
    bad = tuple(meta[i] for i, row in enumerate(rows)
                if sum(r * a for r, a in zip(row, alpha.entries)) != 0)
    if bad:
        return DimVecCheck(kind="weak", n=n, violations=bad)
    return DimVecCheck(kind="full", n=n)


# -- Hilbert basis ------------------------------------------------------

def _single_equation_minimal(weights):
    """Minimal nonzero x >= 0 with sum w_i x_i = 0 (Contejean-Devie).

    One signed equation only; candidates grow from the unit vectors and a
    step in coordinate i is taken only when it moves the residual toward
    zero.  Solution monoids of linear systems are difference-closed, so
    componentwise-minimal is the same as indecomposable.
    """
    dim = len(weights)
    minimal = []

    def dominated(x):
        return any(all(xi >= mi for xi, mi in zip(x, m)) for m in minimal)

    units = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    frontier = [(u, weights[i]) for i, u in enumerate(units)]
    seen = {u for u, _ in frontier}
    while frontier:
        nxt = []
        for x, v in frontier:
            if dominated(x):
                continue
            if v == 0:
                minimal.append(x)
                continue
            for i in range(dim):
                w = weights[i]
                if v * w >= 0:
                    continue
                y = tuple(a + b for a, b in zip(x, units[i]))
                if y in seen:
                    continue
                seen.add(y)
                if not dominated(y):
                    nxt.append((y, v + w))
        frontier = nxt
    return [m for m in minimal
            if not any(m != m2 and all(a >= b for a, b in zip(m, m2))
                       for m2 in minimal)]


def _prune_minimal(vectors):
    """Componentwise-minimal elements of a set of nonzero vectors."""
    vs = sorted(set(vectors), key=lambda v: (sum(v), v))
    out = []
    for v in vs:
        if not any(all(a >= b for a, b in zip(v, m)) for m in out):
            out.append(v)
    return out


def hilbert_basis(rows, dim):
    """Minimal nonzero solutions of rows . x = 0, x >= 0 integral.

    Sequential elimination: keep a generating set of the monoid cut out by
    the rows processed so far (initially the unit vectors); for the next
    row, generators with value zero survive and minimally balanced
    combinations of positive- and negative-value generators are added.
    Every minimal solution of the extended system arises from a minimal
    multiplicity vector, so pruning to componentwise-minimal elements
    yields the Hilbert basis after each step.
    """
    if dim == 0:
        return []
    gens = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    # process constrained rows first: fewer supported generators
    rows = sorted((tuple(r) for r in rows),
                  key=lambda r: sum(1 for x in r if x))
    for r in rows:
        vals = [sum(a * b for a, b in zip(r, g)) for g in gens]
        zero = [g for g, v in zip(gens, vals) if v == 0]
        active = [(g, v) for g, v in zip(gens, vals) if v != 0]
        new = list(zero)
        if any(v > 0 for _, v in active) and any(v < 0 for _, v in active):
            weights = [v for _, v in active]
            for combo in _single_equation_minimal(weights):
                vec = [0] * dim
                for mult, (g, _) in zip(combo, active):
                    if mult:
                        for k in range(dim):
                            vec[k] += mult * g[k]
                new.append(tuple(vec))
        gens = _prune_minimal(new)
    return sorted(gens)


def semigroup_generators(t, zq=None):
    """Hilbert basis of the monoid of full dimension vectors, sorted."""
    zq = zq or zariski_quiver(t)
    rows, _ = edge_equation_rows(zq)
    gens = [DimVector(g) for g in
            hilbert_basis(rows, len(zq.quiver.vertices))]
    for g in gens:
        chk = dimvec_check(t, g, zq)
        assert chk.is_full() and chk.n >= 1, "edge system missed a vertex sum"
    gens.sort(key=lambda g: (g.total(), g.entries))
    return gens


def decompose_in_generators(alpha, gens):
    """All nonnegative-integer ways to write alpha over the generators.

    Returns a list of multiplicity tuples aligned with `gens`; empty when
    alpha is not in the monoid.
    """
    dim = len(alpha)
    sols = []
    k = len(gens)

    def rec(i, remaining, acc):
        if all(r == 0 for r in remaining):
            sols.append(tuple(acc) + (0,) * (k - i))
            return
        if i == k:
            return
        g = gens[i].entries
        cap = None
        for gv, rv in zip(g, remaining):
            if gv:
                c = rv // gv
                cap = c if cap is None else min(cap, c)
        cap = cap or 0
        for m in range(cap, -1, -1):
            rem2 = [r - m * gv for r, gv in zip(remaining, g)]
            # prune branches whose leftover cannot be covered later at all
            if any(r and not any(h.entries[j] for h in gens[i + 1:])
                   for j, r in enumerate(rem2)):
                continue
            rec(i + 1, rem2, acc + [m])

    rec(0, list(alpha.entries), [])
    return sols
