"""Paths and noncommutative polynomials over a path algebra.

A path stores its arrow labels in *application order* (first arrow applied
first), together with its start vertex so that trivial paths are
representable.  Printing uses composition order, i.e. the word as usually
written with the last-applied arrow leftmost; "a.b" denotes a after b.

NCPoly is a finite rational linear combination of paths; Tensor2/Tensor3
are combinations of ordered pairs/triples of paths with the outer bimodule
products used by double brackets.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Path:
    start: str
    word: tuple  # arrow labels, application order

    def is_trivial(self):
        return not self.word

    def __len__(self):
        return len(self.word)


def path_end(q, p):
    return q.target(p.word[-1]) if p.word else p.start


def check_path(q, p):
    at = p.start
    for lab in p.word:
        a = q.by_label[lab]
        if a.source != at:
            raise ValueError(f"non-composable word at {lab!r}")
        at = a.target
    return p


def trivial_path(v):
    return Path(v, ())


def arrow_path(q, label):
    return Path(q.source(label), (label,))


def mul_paths(q, p1, p2):
    """Product p1 p2 (p2 applied first); None when not composable."""
    if p1.start != path_end(q, p2):
        return None
    return Path(p2.start, p2.word + p1.word)


def path_str(p):
    if not p.word:
        return f"e_{p.start}"
    return ".".join(reversed(p.word))


def parse_path(q, text):
    """Parse a dot-separated word in composition order ("a.b" = a after b).

    "e_v" denotes the trivial path at vertex v.
    """
    text = text.strip()
    if text.startswith("e_"):
        v = text[2:]
        if v not in q._index:
            raise ValueError(f"unknown vertex {v!r}")
        return trivial_path(v)
    labels = [s.strip() for s in text.split(".")]
    for lab in labels:
        if lab not in q.by_label:
            raise ValueError(f"unknown arrow {lab!r}")
    word = tuple(reversed(labels))
    return check_path(q, Path(q.source(word[0]), word))


def _term_sort_key(p):
    # length first, then reverse-lexicographic on the displayed word (with
    # extensions ranked before their prefixes), so that starred arrows
    # print before their unstarred partners.
    disp = path_str(p)
    return (len(p.word), tuple(-ord(c) for c in disp) + (1,), p.start)


class NCPoly:
    """Rational linear combination of paths of one quiver."""

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        self.terms = {}
        if terms:
            for p, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[p] = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, q):
        return cls(q)

    @classmethod
    def from_path(cls, q, p, coeff=1):
        return cls(q, {check_path(q, p): Fraction(coeff)})

    @classmethod
    def from_arrow(cls, q, label, coeff=1):
        return cls(q, {arrow_path(q, label): Fraction(coeff)})

    @classmethod
    def idempotent(cls, q, v):
        if v not in q._index:
            raise ValueError(f"unknown vertex {v!r}")
        return cls(q, {trivial_path(v): Fraction(1)})

    # -- ring structure --------------------------------------------------

    def _chk(self, other):
        if self.quiver is not other.quiver:
            raise ValueError("operands live over different quivers")

    def __add__(self, other):
        self._chk(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        return NCPoly(self.quiver, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCPoly(self.quiver, {p: -c for p, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return NCPoly(self.quiver, {p: c * x for p, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._chk(other)
        out = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                p = mul_paths(self.quiver, p1, p2)
                if p is not None:
                    out[p] = out.get(p, Fraction(0)) + c1 * c2
        return NCPoly(self.quiver, out)

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, NCPoly) and self.quiver is other.quiver
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def support_arrows(self):
        out = set()
        for p in self.terms:
            out.update(p.word)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: _term_sort_key(it[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for p, c in self.sorted_terms():
            body = path_str(p)
            if c == 1:
                piece = body
            elif c == -1:
                piece = f"-{body}"
            else:
                piece = f"{c}·{body}"
            if not chunks:
                chunks.append(piece)
            elif piece.startswith("-"):
                chunks.append(f"- {piece[1:]}")
            else:
                chunks.append(f"+ {piece}")
        return " ".join(chunks)

    def __repr__(self):
        return f"NCPoly({self})"


def parse_ncpoly(q, text):
    """Parse sums like "b* + 1/2·b - 2·a.b" (also accepts "1/2 b")."""
    text = text.replace("−", "-")
    # split on top-level +/-, keeping signs
    pieces = []
    cur = ""
    for ch in text:
        if ch in "+-" and cur.strip():
            pieces.append(cur.strip())
            cur = ch if ch == "-" else ""
        elif ch in "+-" and not cur.strip():
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur.strip():
        pieces.append(cur.strip())
    out = NCPoly.zero(q)
    for piece in pieces:
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:].strip()
        if "·" in piece:
            coeff_s, word_s = piece.split("·", 1)
            coeff = Fraction(coeff_s.strip())
        elif " " in piece and "/" in piece.split()[0]:
            coeff_s, word_s = piece.split(None, 1)
            coeff = Fraction(coeff_s)
        else:
            coeff, word_s = Fraction(1), piece
        out = out + NCPoly.from_path(q, parse_path(q, word_s.strip()),
                                     sign * coeff)
    return out


class Tensor2:
    """Rational combination of ordered pairs of paths (A tensor A)."""

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @classmethod
    def zero(cls, q):
        return cls(q)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return Tensor2(self.quiver, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Tensor2(self.quiver, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return Tensor2(self.quiver, {k: c * x for k, x in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Tensor2) and self.quiver is other.quiver
                and self.terms == other.terms)

    def flip(self):
        """(u tensor v) -> (v tensor u)."""
        return Tensor2(self.quiver,
                       {(b, a): c for (a, b), c in self.terms.items()})

    def multiply_legs(self):
        """Image under a tensor b -> a*b (an NCPoly)."""
        out = NCPoly.zero(self.quiver)
        for (a, b), c in self.terms.items():
            p = mul_paths(self.quiver, a, b)
            if p is not None:
                out = out + NCPoly.from_path(self.quiver, p, c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(
                self.terms.items(),
                key=lambda it: (_term_sort_key(it[0][0]), _term_sort_key(it[0][1]))):
            bits.append(f"{c}·({path_str(a)} ⊗ {path_str(b)})")
        return " + ".join(bits)

    def __repr__(self):
        return f"Tensor2({self})"


class Tensor3:
    """Rational combination of ordered triples of paths."""

    def __init__(self, quiver, terms=None):
        self.quiver = quiver
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @classmethod
    def zero(cls, q):
        return cls(q)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return Tensor3(self.quiver, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Tensor3) and self.quiver is other.quiver
                and self.terms == other.terms)

    def permute(self, order):
        """Reorder legs: order=(i,j,k) sends (x0,x1,x2) to (x_i,x_j,x_k)."""
        i, j, k = order
        return Tensor3(self.quiver,
                       {(t[i], t[j], t[k]): c for t, c in self.terms.items()})
