"""Etale quiver, simplicity of dimension vectors, local quiver settings,
and the cherry-tree smoothness test for symmetric quiver settings.

The etale quiver has one vertex per semigroup generator and
delta_ij - chi(alpha_i, alpha_j) arrows i -> j, chi the Euler form of the
Zariski quiver.  It is symmetric because chi is a symmetric pairing on
admissible vectors (the fundamental bilinear identity of the restriction
data); the construction asserts nonnegativity of every arrow count.
"""

from dataclasses import dataclass, field

from .dimvec import decompose_in_generators, dimvec_check, semigroup_generators
from .quiver import DimVector, Quiver, euler_form, is_symmetric, unit_vector
from .zariski import zariski_quiver


@dataclass
class EtaleQuiver:
    tree: object
    zariski: object
    quiver: Quiver                 # vertices are "g1".."gk"
    generators: list               # DimVector per vertex, same order

    def generator_of(self, vertex):
        return self.generators[self.quiver.vertex_index(vertex)]


def _arrow_counts(zq, vectors):
    k = len(vectors)
    counts = {}
    for i in range(k):
        for j in range(k):
            m = (1 if i == j else 0) - euler_form(zq.quiver, vectors[i],
                                                  vectors[j])
            counts[(i, j)] = m
    return counts


def etale_quiver(t, zq=None):
    zq = zq or zariski_quiver(t)
    gens = semigroup_generators(t, zq)
    counts = _arrow_counts(zq, gens)
    names = [f"g{i + 1}" for i in range(len(gens))]
    arrows = []
    for (i, j), m in sorted(counts.items()):
        if m < 0:
            raise AssertionError(
                f"negative arrow count {m} between generators {i} and {j}")
        for r in range(m):
            arrows.append((f"{names[i]}->{names[j]}#{r + 1}",
                           names[i], names[j]))
    psi = Quiver(names, arrows)
    assert is_symmetric(psi)
    return EtaleQuiver(tree=t, zariski=zq, quiver=psi, generators=gens)


# -- simple dimension vectors -------------------------------------------

def _strongly_connected(q, supp):
    supp = set(supp)
    if not supp:
        return False
    start = next(iter(supp))
    fwd = {v: set() for v in supp}
    bwd = {v: set() for v in supp}
    for a in q.arrows:
        if a.source in supp and a.target in supp:
            fwd[a.source].add(a.target)
            bwd[a.target].add(a.source)

    def reach(adj):
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return reach(fwd) == supp and reach(bwd) == supp


def is_simple_dimvector(q, beta):
    """Whether beta is the dimension vector of a simple representation.

    The generic criterion: support strongly connected and
    chi(eps_i, beta) <= 0, chi(beta, eps_i) <= 0 on the support.  Small
    supports are exceptional: a lone vertex without loops only carries the
    one-dimensional simple; a lone vertex with a single loop likewise only
    beta = 1; a pair of vertices joined by exactly one arrow each way
    forces both entries equal to one.
    """
    if len(beta) != len(q.vertices):
        raise ValueError("dimension vector size mismatch")
    idx = q.vertex_index
    supp = [v for v in q.vertices if beta[idx(v)] > 0]
    if not supp:
        return False
    if len(supp) == 1:
        v = supp[0]
        loops = q.loops_at(v)
        if loops == 0 or loops == 1:
            return beta[idx(v)] == 1
        return True
    if not _strongly_connected(q, supp):
        return False
    if len(supp) == 2:
        u, v = supp
        if (q.arrow_count(u, v) == 1 and q.arrow_count(v, u) == 1
                and q.loops_at(u) == 0 and q.loops_at(v) == 0):
            return beta[idx(u)] == 1 and beta[idx(v)] == 1
    for v in supp:
        eps = unit_vector(q, v)
        if euler_form(q, eps, beta) > 0 or euler_form(q, beta, eps) > 0:
            return False
    return True


def component_has_simples(t, alpha, etale=None):
    """Whether the component of alpha contains simple representations.

    Decided by decomposing alpha over the semigroup generators and testing
    the multiplicity vector on the etale quiver; the verdict is the same
    for every decomposition, which is asserted.
    """
    e = etale or etale_quiver(t)
    chk = dimvec_check(t, alpha, e.zariski)
    if not chk.is_full():
        raise ValueError(f"alpha is not a full dimension vector ({chk.kind})")
    decs = decompose_in_generators(alpha, e.generators)
    if not decs:
        raise ValueError("alpha is not in the semigroup")
    verdicts = {is_simple_dimvector(e.quiver, DimVector(d)) for d in decs}
    assert len(verdicts) == 1, "simplicity depended on the decomposition"
    return verdicts.pop()


# -- local quiver settings ----------------------------------------------

@dataclass
class LocalQuiverSetting:
    quiver: Quiver
    dims: DimVector
    simple_labels: list            # the multiplicity vectors gamma_i
    warnings: list = field(default_factory=list)


def local_quiver(t, xi, etale=None):
    """Local quiver setting of a semisimple point.

    `xi` is a list of (gamma_i, e_i): gamma_i a multiplicity vector over
    the semigroup generators describing a simple summand, e_i its
    multiplicity.  Arrow counts are delta_ij - chi(beta_i, beta_j) with
    beta_i the underlying Zariski dimension vector; that this agrees with
    the Euler form of the etale quiver applied to the gamma_i is asserted
    (the two pairings coincide by bilinearity).
    """
    if not xi:
        raise ValueError("empty local setting")
    e = etale or etale_quiver(t)
    warnings = []
    gammas = []
    betas = []
    for gamma, mult in xi:
        gamma = tuple(int(x) for x in gamma)
        if len(gamma) != len(e.generators) or not any(gamma):
            raise ValueError("each gamma must be a nonzero vector over the generators")
        if int(mult) < 1:
            raise ValueError("multiplicities must be positive")
        beta = DimVector([0] * len(e.zariski.quiver.vertices))
        for c, g in zip(gamma, e.generators):
            if c:
                beta = beta + c * g
        gammas.append(gamma)
        betas.append(beta)
        gsimple = is_simple_dimvector(e.quiver, DimVector(gamma))
        if not gsimple:
            warnings.append(f"gamma {gamma} is not a simple dimension vector")
    k = len(xi)
    names = [f"w{i + 1}" for i in range(k)]
    arrows = []
    for i in range(k):
        for j in range(k):
            m = (1 if i == j else 0) - euler_form(e.zariski.quiver,
                                                  betas[i], betas[j])
            m_psi = (1 if i == j else 0) - euler_form(
                e.quiver, DimVector(gammas[i]), DimVector(gammas[j]))
            assert m == m_psi, "etale and Zariski Euler forms disagree"
            if m < 0:
                raise AssertionError("negative local arrow count")
            for r in range(m):
                arrows.append((f"{names[i]}->{names[j]}#{r + 1}",
                               names[i], names[j]))
    delta = Quiver(names, arrows)
    assert is_symmetric(delta)
    return LocalQuiverSetting(quiver=delta,
                              dims=DimVector([m for _, m in xi]),
                              simple_labels=gammas, warnings=warnings)


# -- cherry trees --------------------------------------------------------

def _collapse(q, alpha):
    """Support-restricted undirected view: edge multiplicities and loops."""
    idx = q.vertex_index
    supp = [v for v in q.vertices if alpha[idx(v)] > 0]
    a = {v: alpha[idx(v)] for v in supp}
    loops = {}
    for v in supp:
        l = q.loops_at(v)
        if l:
            loops[v] = (l + 1) // 2     # a leftover odd loop still counts
    edges = {}
    for i, u in enumerate(supp):
        for v in supp[i + 1:]:
            k1, k2 = q.arrow_count(u, v), q.arrow_count(v, u)
            if k1 != k2:
                raise ValueError("quiver is not symmetric on the support")
            if k1:
                edges[(u, v)] = k1
    return supp, a, loops, edges


def is_cherry_tree(q, alpha):
    """Smoothness test for a symmetric quiver setting.

    After restricting to the support and collapsing arrow pairs to
    undirected edges, the setting passes iff:

      1. every cherry can be harvested: a leaf hanging from a stem of
         dimension one is removed when it is loop-free with edge
         multiplicity at most its own dimension, or carries a single loop
         on a plain edge;
      2. isolated vertices carry at most one loop unless their dimension
         is one;
      3. what remains is a loop-free forest with all edge multiplicities
         one, which splits at dimension-one vertices into pieces that are
         single edges, or three-vertex paths with an end equal to one or
         a middle equal to two.
    """
    if not is_symmetric(q):
        raise ValueError("cherry-tree test needs a symmetric quiver")
    supp, a, loops, edges = _collapse(q, alpha)
    alive = set(supp)
    adj = {v: {} for v in supp}
    for (u, v), k in edges.items():
        adj[u][v] = k
        adj[v][u] = k

    # harvest
    changed = True
    while changed:
        changed = False
        for u in sorted(alive):
            nbrs = [w for w in adj[u] if w in alive]
            if len(nbrs) != 1:
                continue
            w = nbrs[0]
            if a[w] != 1:
                continue
            k = adj[u][w]
            lu = loops.get(u, 0)
            if (lu == 0 and k <= a[u]) or (lu == 1 and k == 1):
                alive.discard(u)
                changed = True

    # isolated vertices
    live_edges = {(u, v): k for (u, v), k in edges.items()
                  if u in alive and v in alive}
    degree = {v: 0 for v in alive}
    for (u, v) in live_edges:
        degree[u] += 1
        degree[v] += 1
    for v in alive:
        if degree[v] == 0:
            if loops.get(v, 0) > 1 and a[v] != 1:
                return False

    # remainder must be a loop-free forest with multiplicity-one edges
    for (u, v), k in live_edges.items():
        if k != 1:
            return False
    for v in alive:
        if degree[v] > 0 and loops.get(v, 0):
            return False
    # acyclicity, component by component
    parent = {v: v for v in alive}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v) in live_edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv

    # cut at dimension-one vertices and match the pieces
    clone_adj = {}

    def add(x, y):
        clone_adj.setdefault(x, set()).add(y)
        clone_adj.setdefault(y, set()).add(x)

    for (u, v) in live_edges:
        cu = (u, (u, v)) if a[u] == 1 else (u, None)
        cv = (v, (u, v)) if a[v] == 1 else (v, None)
        add(cu, cv)

    seen = set()
    for node in clone_adj:
        if node in seen:
            continue
        stack, piece = [node], set()
        seen.add(node)
        while stack:
            x = stack.pop()
            piece.add(x)
            for y in clone_adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        verts = piece
        if len(verts) == 2:
            continue
        if len(verts) == 3:
            inner = [x for x in verts if len(clone_adj[x]) == 2]
            outer = [x for x in verts if len(clone_adj[x]) == 1]
            if len(inner) != 1 or len(outer) != 2:
                return False
            mid = inner[0][0]
            if a[mid] == 2:
                continue
            if any(a[x[0]] == 1 for x in outer):
                continue
            return False
        return False
    return True


def is_smooth_component(t, alpha, etale=None):
    """Whether the whole component of alpha has a smooth quotient variety:
    every decomposition over the generators must be a cherry-tree setting."""
    e = etale or etale_quiver(t)
    chk = dimvec_check(t, alpha, e.zariski)
    if not chk.is_full():
        raise ValueError(f"alpha is not a full dimension vector ({chk.kind})")
    decs = decompose_in_generators(alpha, e.generators)
    if not decs:
        raise ValueError("alpha is not in the semigroup")
    return all(is_cherry_tree(e.quiver, DimVector(d)) for d in decs)


def is_smooth_point(t, xi, etale=None):
    """Smoothness of the quotient variety at one semisimple point."""
    setting = local_quiver(t, xi, etale)
    return is_cherry_tree(setting.quiver, setting.dims)
