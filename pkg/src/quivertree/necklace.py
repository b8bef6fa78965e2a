"""Necklaces, double brackets, the necklace Lie algebra, and symplectic flows.

All of this lives over a double quiver: a quiver carrying the involution
a <-> a* and the unstarred class L.  Sign conventions are pinned once and
for all here:

  * the cyclic derivative d n / d a of a necklace deletes one occurrence
    of a and reads the remaining cycle from the head of a to its tail;

  * the double bracket of two paths is

      {{p, q}} = sum_{a in L}  (dq/da*)_1 (dp/da)_2  tensor  (dp/da)_1 (dq/da*)_2
                             - (dq/da)_1 (dp/da*)_2  tensor  (dp/da*)_1 (dq/da)_2

    with d/dc the Leibniz extension of db/dc = e_head tensor e_tail;

  * the necklace bracket is

      [n, n'] = sum_{a in L}  (dn/da*) (dn'/da) - (dn/da) (dn'/da*),

    which is the induced (Loday) bracket of the double bracket above
    projected to cyclic words, with an overall minus sign.  This is the
    orientation in which [l_i, s-cycle] = s-cycle on the doubled hexagon;

  * the symplectic derivation of a necklace n acts by
    theta_n(a) = -dn/da*, theta_n(a*) = +dn/da  for a in L.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .paths import (NCPoly, Path, Tensor2, Tensor3, arrow_path, check_path,
                    mul_paths, path_end, path_str, trivial_path)


# -- necklaces ---------------------------------------------------------

@dataclass(frozen=True)
class Necklace:
    """Cyclic word of arrows in canonical (lexicographically least) rotation.

    A trivial necklace is a vertex; then `word` is empty and `vertex` set.
    """
    word: tuple
    vertex: str = None

    def is_trivial(self):
        return not self.word

    def __len__(self):
        return len(self.word)

    def support(self):
        return set(self.word)


def _canonical_rotation(word):
    if not word:
        return word
    rots = [word[i:] + word[:i] for i in range(len(word))]
    return min(rots)


def necklace(q, word, vertex=None):
    """Build a necklace from an application-order arrow word (or a vertex)."""
    word = tuple(word)
    if not word:
        if vertex is None:
            raise ValueError("trivial necklace needs a vertex")
        return Necklace((), vertex)
    p = check_path(q, Path(q.source(word[0]), word))
    if path_end(q, p) != p.start:
        raise ValueError("word is not a closed cycle")
    return Necklace(_canonical_rotation(word))


def necklace_of_path(q, p):
    if p.is_trivial():
        return Necklace((), p.start)
    if path_end(q, p) != p.start:
        raise ValueError("path is not closed")
    return Necklace(_canonical_rotation(p.word))


def necklace_path(q, n):
    """The canonical open path of a necklace (cut at the canonical start)."""
    if n.is_trivial():
        return trivial_path(n.vertex)
    return Path(q.source(n.word[0]), n.word)


def necklace_str(n):
    if n.is_trivial():
        return f"e_{n.vertex}"
    return ".".join(reversed(n.word))


def rotation_period(n):
    """Smallest p with word = (prefix of length p) repeated; len(n) for primitive."""
    w = n.word
    L = len(w)
    for p in range(1, L + 1):
        if L % p == 0 and w == (w[:p] * (L // p)):
            return p
    return L


def power_multiplicity(n):
    """m such that the necklace word is an m-th power of a primitive word."""
    if n.is_trivial():
        return 1
    return len(n) // rotation_period(n)


def is_primitive(n):
    return power_multiplicity(n) == 1


class NecklacePoly:
    """Rational linear combination of necklaces."""

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        self.terms = {}
        if terms:
            for n, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[n] = c

    @classmethod
    def zero(cls, q):
        return cls(q)

    @classmethod
    def from_necklace(cls, q, n, coeff=1):
        return cls(q, {n: Fraction(coeff)})

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out.get(n, Fraction(0)) + c
        return NecklacePoly(self.quiver, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NecklacePoly(self.quiver, {n: -c for n, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return NecklacePoly(self.quiver,
                            {n: c * x for n, x in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, NecklacePoly)
                and self.quiver is other.quiver and self.terms == other.terms)

    def support_arrows(self):
        out = set()
        for n in self.terms:
            out.update(n.word)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda it: (len(it[0].word), necklace_str(it[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for n, c in self.sorted_terms():
            body = necklace_str(n)
            if c == 1:
                piece = body
            elif c == -1:
                piece = f"-{body}"
            else:
                piece = f"{c}·{body}"
            bits.append(piece if not bits else
                        (f"- {piece[1:]}" if piece.startswith("-") else f"+ {piece}"))
        return " ".join(bits)

    def __repr__(self):
        return f"NecklacePoly({self})"


def ncpoly_to_necklaces(P):
    """Project an NCPoly of closed paths onto necklaces (cyclic words)."""
    out = {}
    for p, c in P.terms.items():
        n = necklace_of_path(P.quiver, p)
        out[n] = out.get(n, Fraction(0)) + c
    return NecklacePoly(P.quiver, out)


# -- derivatives -------------------------------------------------------

def necklace_derivative(q, n, label):
    """Cyclic derivative: delete one occurrence of the arrow at a time.

    Each deletion leaves the open path that runs from the head of the
    deleted arrow once around the cycle to its tail.
    """
    if label not in q.by_label:
        raise ValueError(f"unknown arrow {label!r}")
    out = NCPoly.zero(q)
    if n.is_trivial():
        return out
    w = n.word
    for k, lab in enumerate(w):
        if lab == label:
            rest = w[k + 1:] + w[:k]
            p = Path(q.target(label), rest)
            out = out + NCPoly.from_path(q, p)
    return out


def necklace_poly_derivative(N, label):
    out = NCPoly.zero(N.quiver)
    for n, c in N.terms.items():
        out = out + necklace_derivative(N.quiver, n, label).scale(c)
    return out


def double_derivation(P, label):
    """Leibniz extension of db/dc = e_head tensor e_tail to an NCPoly.

    For a path a_n ... a_1 the value is the sum over occurrences a_k = c of
    (a_n ... a_{k+1}) tensor (a_{k-1} ... a_1).
    """
    q = P.quiver
    if label not in q.by_label:
        raise ValueError(f"unknown arrow {label!r}")
    out = Tensor2.zero(q)
    terms = {}
    for p, c in P.terms.items():
        for k, lab in enumerate(p.word):
            if lab != label:
                continue
            later = Path(q.target(label), p.word[k + 1:])
            earlier = Path(p.start, p.word[:k])
            key = (later, earlier)
            terms[key] = terms.get(key, Fraction(0)) + c
    return out + Tensor2(q, terms)


def _combine(S, T):
    """sum (s1 t2) tensor (t1 s2) over the terms of S and T."""
    q = S.quiver
    terms = {}
    for (s1, s2), cs in S.terms.items():
        for (t1, t2), ct in T.terms.items():
            left = mul_paths(q, s1, t2)
            right = mul_paths(q, t1, s2)
            if left is None or right is None:
                continue
            key = (left, right)
            terms[key] = terms.get(key, Fraction(0)) + cs * ct
    return Tensor2(q, terms)


def double_bracket(P, Q):
    """Canonical double bracket of the double quiver (see module docstring)."""
    q = P.quiver
    if q is not Q.quiver:
        raise ValueError("operands live over different quivers")
    if not q.is_double():
        raise ValueError("double bracket needs a double quiver")
    out = Tensor2.zero(q)
    for a in sorted(q.unstarred):
        astar = q.star[a]
        out = out + _combine(double_derivation(Q, astar), double_derivation(P, a))
        out = out - _combine(double_derivation(Q, a), double_derivation(P, astar))
    return out


def _bracket_left(P, T):
    """{{P, -}} applied to the first leg of a Tensor2, as a Tensor3."""
    q = P.quiver
    out = Tensor3.zero(q)
    terms = {}
    for (u1, u2), c in T.terms.items():
        inner = double_bracket(P, NCPoly.from_path(q, u1))
        for (x1, x2), d in inner.terms.items():
            key = (x1, x2, u2)
            terms[key] = terms.get(key, Fraction(0)) + c * d
    return out + Tensor3(q, terms)


def double_jacobiator(A, B, C):
    """{{A,{{B,C}}}}_L + t(123) {{B,{{C,A}}}}_L + t(132) {{C,{{A,B}}}}_L.

    Identically zero for the canonical bracket; exposed so the axiom can be
    property-tested.
    """
    t1 = _bracket_left(A, double_bracket(B, C))
    t2 = _bracket_left(B, double_bracket(C, A)).permute((2, 0, 1))
    t3 = _bracket_left(C, double_bracket(A, B)).permute((1, 2, 0))
    return t1 + t2 + t3


def induced_bracket(P, Q):
    """{p,q} = {{p,q}}_1 {{p,q}}_2: a left Loday bracket on the path algebra."""
    return double_bracket(P, Q).multiply_legs()


def necklace_bracket(N1, N2):
    """Lie bracket on necklaces (sign pinned as in the module docstring)."""
    q = N1.quiver
    if q is not N2.quiver:
        raise ValueError("operands live over different quivers")
    if not q.is_double():
        raise ValueError("necklace bracket needs a double quiver")
    acc = NCPoly.zero(q)
    for a in sorted(q.unstarred):
        astar = q.star[a]
        acc = acc + necklace_poly_derivative(N1, astar) * necklace_poly_derivative(N2, a)
        acc = acc - necklace_poly_derivative(N1, a) * necklace_poly_derivative(N2, astar)
    return ncpoly_to_necklaces(acc)


# -- symplectic derivations and flows ----------------------------------

@dataclass
class SymplecticDerivation:
    """Vertex-algebra derivation attached to a necklace polynomial."""
    quiver: object
    source: object          # the generating NecklacePoly
    values: dict            # arrow label -> NCPoly

    def __call__(self, P):
        return theta_apply(self, P)


def theta(N):
    """theta_n(a) = -dn/da*, theta_n(a*) = +dn/da, for a in the class L."""
    q = N.quiver
    if not q.is_double():
        raise ValueError("symplectic derivations need a double quiver")
    values = {}
    for a in q.unstarred:
        astar = q.star[a]
        values[a] = -necklace_poly_derivative(N, astar)
        values[astar] = necklace_poly_derivative(N, a)
    return SymplecticDerivation(q, N, values)


def theta_apply(th, P):
    """Extend the derivation to paths by Leibniz, linearly to NCPoly."""
    q = P.quiver
    out = NCPoly.zero(q)
    for p, c in P.terms.items():
        for k, lab in enumerate(p.word):
            val = th.values[lab]
            if val.is_zero():
                continue
            earlier = Path(p.start, p.word[:k])
            later = Path(q.target(lab), p.word[k + 1:])
            piece = NCPoly.from_path(q, later) * val * NCPoly.from_path(q, earlier)
            out = out + piece.scale(c)
    return out


def theta_power(th, P, t):
    for _ in range(t):
        P = theta_apply(th, P)
    return P


def is_one_way(n):
    """No arrow occurs together with its star."""
    if isinstance(n, NecklacePoly):
        supp = n.support_arrows()
        q = n.quiver
    else:
        raise TypeError("expected a NecklacePoly; wrap single necklaces")
    return not any(q.star[a] in supp for a in supp)


def is_one_way_necklace(q, n):
    supp = n.support()
    return not any(q.star[a] in supp for a in supp)


is_locally_nilpotent = is_one_way


class NotOneWayError(ValueError):
    def __init__(self, arrow, star):
        super().__init__(
            f"necklace support contains both {arrow!r} and {star!r};"
            " the flow would not terminate")
        self.witness = (arrow, star)


def _check_one_way(N):
    supp = N.support_arrows()
    for a in sorted(supp):
        if N.quiver.star[a] in supp:
            raise NotOneWayError(a, N.quiver.star[a])


def _nilpotence_bound(N, P):
    supp = N.support_arrows()
    k = 0
    for p in P.terms:
        k = max(k, sum(1 for lab in p.word if lab not in supp))
    return k


def flow(N, rho, P):
    """Symplectic flow exp(rho * theta_n) applied to an NCPoly.

    Requires the combined support of N to be one-way, which makes theta_n
    locally nilpotent: a path with k arrows outside supp(N) dies after
    k+1 applications, so the exponential series is a finite sum.
    """
    _check_one_way(N)
    rho = Fraction(rho)
    th = theta(N)
    bound = _nilpotence_bound(N, P)
    acc = P
    cur = P
    j = 0
    while not cur.is_zero():
        cur = theta_apply(th, cur)
        j += 1
        if cur.is_zero():
            break
        if j > bound:
            raise AssertionError("flow series failed to terminate")
        acc = acc + cur.scale(rho ** j / math.factorial(j))
    return acc


def flow_compose(N1, N2, rho1, rho2, P):
    """gamma_{N2,rho2} after gamma_{N1,rho1}.

    When no arrow has its star anywhere in supp(N1) union supp(N2) this
    equals flow(rho2*N2 + rho1*N1, 1, -).
    """
    return flow(N2, rho2, flow(N1, rho1, P))


def moment_element(q):
    """sum over a in L of (a a* - a* a)."""
    if not q.is_double():
        raise ValueError("moment element needs a double quiver")
    out = NCPoly.zero(q)
    for a in sorted(q.unstarred):
        astar = q.star[a]
        src, tgt = q.source(a), q.target(a)
        out = out + NCPoly.from_path(q, Path(tgt, (astar, a)))
        out = out - NCPoly.from_path(q, Path(src, (a, astar)))
    return out


def parse_necklace(q, text):
    """Parse a dot-separated cyclic word in composition order."""
    from .paths import parse_path
    p = parse_path(q, text)
    return necklace_of_path(q, p)
