"""Planar diagrams: the basis objects of every Hom-space.

A Diagram with dst = m, src = n pairs up the m + n boundary nodes of a
rectangle.  Nodes are numbered 1..m down the left column and m+1..m+n up
the right column, so the numbering runs once around the boundary and
planarity is the classical no-interleaving test on a line: no two pairs
(a,b), (c,d) with a < c < b < d.

Dilute diagrams additionally allow vacancies: nodes carrying no string.
Composing a string end onto a vacancy annihilates the whole composite.

Internally a diagram stores a 0-based link table; the public pairing view
is 1-based to match the text serialization {m}x{n}:[(a,b),...].
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

try:  # compiled kernel if built, pure Python twin otherwise
    from ._kernel_cy import compose_links, KERNEL  # type: ignore
except ImportError:  # pragma: no cover
    from ._kernel_py import compose_links, KERNEL

__all__ = [
    "Diagram",
    "ComposeOutcome",
    "InterfaceMismatch",
    "identity_diagram",
    "cup_diagram",
    "cap_diagram",
    "e_diagram",
    "enumerate_diagrams",
    "factor_through_lines",
    "KERNEL",
]


class InterfaceMismatch(ValueError):
    """Composition attempted across unequal middle node counts."""


class Diagram:
    __slots__ = ("dst", "src", "link", "dilute", "_hash")

    def __init__(self, dst: int, src: int, link: tuple, dilute: bool = False):
        self.dst = dst
        self.src = src
        self.link = link
        self.dilute = dilute
        self._hash = hash((dst, src, link, dilute))

    @staticmethod
    def from_pairs(dst: int, src: int, pairs, dilute: bool = False) -> "Diagram":
        total = dst + src
        link = [-1] * total
        for a, b in pairs:
            if not (1 <= a <= total and 1 <= b <= total) or a == b:
                raise ValueError(f"bad pair ({a},{b}) for {dst}x{src}")
            if link[a - 1] != -1 or link[b - 1] != -1:
                raise ValueError(f"node reused in pair ({a},{b})")
            link[a - 1] = b - 1
            link[b - 1] = a - 1
        if not dilute and -1 in link:
            raise ValueError("non-dilute diagram must pair every node")
        d = Diagram(dst, src, tuple(link), dilute)
        d._check_planar()
        return d

    def _check_planar(self):
        ps = self.pairs()
        for i, (a, b) in enumerate(ps):
            for c, d in ps[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    raise ValueError(f"pairs ({a},{b}) and ({c},{d}) cross")

    # -- views ----------------------------------------------------------------

    def pairs(self) -> tuple:
        """Sorted 1-based pairs; the canonical key for basis ordering."""
        out = []
        for i, j in enumerate(self.link):
            if 0 <= i < j:
                out.append((i + 1, j + 1))
        return tuple(sorted(out))

    def vacancies(self) -> tuple:
        return tuple(i + 1 for i, j in enumerate(self.link) if j == -1)

    @property
    def through(self) -> int:
        m = self.dst
        return sum(1 for i, j in enumerate(self.link) if i < m <= j)

    @property
    def is_identity(self) -> bool:
        if self.dst != self.src:
            return False
        n = self.dst
        return all(self.link[i] == 2 * n - 1 - i for i in range(n))

    # -- operations -------------------------------------------------------------

    def compose(self, other: "Diagram") -> "ComposeOutcome":
        """self after other: glue self's source column onto other's destination."""
        if self.src != other.dst:
            raise InterfaceMismatch(
                f"cannot compose: src {self.src} != dst {other.dst}"
            )
        if self.dilute != other.dilute:
            raise InterfaceMismatch("cannot mix dilute and ordinary diagrams")
        link, loops, dead = _compose_cached(
            self.dst, self.src, other.src, self.link, other.link
        )
        if dead:
            return ComposeOutcome(None, 0, True)
        return ComposeOutcome(
            Diagram(self.dst, other.src, link, self.dilute), loops, False
        )

    def tensor(self, other: "Diagram") -> "Diagram":
        """Stack self on top of other."""
        if self.dilute != other.dilute:
            raise InterfaceMismatch("cannot mix dilute and ordinary diagrams")
        m1, n1, m2, n2 = self.dst, self.src, other.dst, other.src
        dst, src = m1 + m2, n1 + n2
        link = [-1] * (dst + src)

        def shift1(i):  # self keeps the top block of both columns
            return i if i < m1 else i + m2 + n2

        def shift2(i):  # other sits below on the left, before self on the right
            return i + m1 if i < m2 else i + m1

        for i, j in enumerate(self.link):
            if j >= 0:
                link[shift1(i)] = shift1(j)
        for i, j in enumerate(other.link):
            if j >= 0:
                link[shift2(i)] = shift2(j)
        return Diagram(dst, src, tuple(link), self.dilute)

    def transpose(self) -> "Diagram":
        """Reflect through a vertical axis, swapping source and destination."""
        m, n = self.dst, self.src
        total = m + n
        # with the numbering running once around the boundary, reflection at
        # the same height is exactly reversal of the numbering
        link = [-1] * total
        for i, j in enumerate(self.link):
            if j >= 0:
                link[total - 1 - i] = total - 1 - j
        return Diagram(n, m, tuple(link), self.dilute)

    # -- text form ----------------------------------------------------------------

    def to_text(self) -> str:
        tag = "d" if self.dilute else ""
        body = ",".join(f"({a},{b})" for a, b in self.pairs())
        return f"{self.dst}x{self.src}{tag}:[{body}]"

    @staticmethod
    def from_text(text: str) -> "Diagram":
        head, _, body = text.strip().partition(":")
        dilute = head.endswith("d")
        if dilute:
            head = head[:-1]
        m, _, n = head.partition("x")
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad diagram text {text!r}")
        pairs = []
        inner = body[1:-1].replace(" ", "")
        if inner:
            for chunk in inner.split("),("):
                chunk = chunk.strip("()")
                a, _, b = chunk.partition(",")
                pairs.append((int(a), int(b)))
        return Diagram.from_pairs(int(m), int(n), pairs, dilute)

    # -- plumbing ------------------------------------------------------------------

    def key(self):
        return (self.pairs(), self.vacancies())

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.dst == other.dst
            and self.src == other.src
            and self.link == other.link
            and self.dilute == other.dilute
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Diagram({self.to_text()})"


class ComposeOutcome:
    __slots__ = ("diagram", "loops", "annihilated")

    def __init__(self, diagram, loops: int, annihilated: bool):
        self.diagram = diagram
        self.loops = loops
        self.annihilated = annihilated

    def __iter__(self):
        return iter((self.diagram, self.loops, self.annihilated))

    def __repr__(self):
        if self.annihilated:
            return "ComposeOutcome(annihilated)"
        return f"ComposeOutcome({self.diagram!r}, loops={self.loops})"


@lru_cache(maxsize=1 << 18)
def _compose_cached(kdst, mid, nsrc, c_link, b_link):
    return compose_links(kdst, mid, nsrc, c_link, b_link)


# ---------------------------------------------------------------------------
# standard diagrams


def identity_diagram(n: int, dilute: bool = False) -> Diagram:
    link = tuple(2 * n - 1 - i for i in range(2 * n))
    return Diagram(n, n, link, dilute)


def cup_diagram(dilute: bool = False) -> Diagram:
    """The (2,0)-diagram z: a single arc on the left column."""
    return Diagram(2, 0, (1, 0), dilute)


def cap_diagram(dilute: bool = False) -> Diagram:
    """The (0,2)-diagram z^t."""
    return Diagram(0, 2, (1, 0), dilute)


def e_diagram(i: int, n: int, dilute: bool = False) -> Diagram:
    """The TL generator diagram: arcs joining neighbours i, i+1 on both columns."""
    if not (1 <= i <= n - 1):
        raise ValueError(f"e_{i} undefined in End({n})")
    link = [2 * n - 1 - j for j in range(2 * n)]
    a, b = i - 1, i
    link[a], link[b] = b, a
    ra, rb = 2 * n - 1 - a, 2 * n - 1 - b
    link[ra], link[rb] = rb, ra
    return Diagram(n, n, tuple(link), dilute)


# ---------------------------------------------------------------------------
# enumeration


def _noncrossing_matchings(points: tuple):
    """All non-crossing perfect matchings of an ordered point tuple."""
    if not points:
        yield ()
        return
    first = points[0]
    for idx in range(1, len(points), 2):
        partner = points[idx]
        inside = points[1:idx]
        outside = points[idx + 1:]
        for mi in _noncrossing_matchings(inside):
            for mo in _noncrossing_matchings(outside):
                yield ((first, partner),) + mi + mo


def enumerate_diagrams(n: int, m: int, dilute: bool = False, through=None) -> list:
    """All planar (m,n)-diagrams in Hom(n,m), deterministically ordered
    (lexicographic on the sorted pairing list)."""
    total = m + n
    out = []

    def emit(match):
        link = [-1] * total
        for a, b in match:
            link[a] = b
            link[b] = a
        d = Diagram(m, n, tuple(link), dilute)
        if through is None or d.through == through:
            out.append(d)

    if dilute:
        allpts = tuple(range(total))
        for k in range(0, total + 1, 2):
            for subset in combinations(allpts, k):
                for match in _noncrossing_matchings(subset):
                    emit(match)
    else:
        if total % 2:
            return []
        for match in _noncrossing_matchings(tuple(range(total))):
            emit(match)
    out.sort(key=Diagram.key)
    return out


# ---------------------------------------------------------------------------
# through-line factorization


def _half_diagrams(c: Diagram) -> tuple:
    """Split c into its left half in Hom(k,m) and right half in Hom(n,k)."""
    m, n, k = c.dst, c.src, c.through
    lefts = sorted(i for i, j in enumerate(c.link) if i < m <= j)
    rights = sorted(c.link[i] for i in lefts)  # ascending node = ascending height
    hl = [-1] * (m + k)
    hr = [-1] * (n + k)
    for i, j in enumerate(c.link):
        if j < i:
            continue
        if j < m:  # left arc
            hl[i] = j
            hl[j] = i
        elif i >= m:  # right arc
            hr[i - m + k] = j - m + k
            hr[j - m + k] = i - m + k
    # planar through lines never cross: the pos-th through line from the top
    # on the left meets the pos-th from the top on the right (right-column
    # node indices run bottom up, so the topmost slot is the largest index)
    for pos, i in enumerate(lefts):
        hl[i] = m + k - 1 - pos
        hl[m + k - 1 - pos] = i
    for pos, j in enumerate(sorted(rights, reverse=True)):
        hr[pos] = k + (j - m)
        hr[k + (j - m)] = pos
    return (
        Diagram(m, k, tuple(hl), c.dilute),
        k,
        Diagram(k, n, tuple(hr), c.dilute),
    )


def _cup_block(k: int, p: int) -> Diagram:
    """1_k tensor z^{tensor p} in Hom(k, k+2p)."""
    d = identity_diagram(k)
    for _ in range(p):
        d = d.tensor(cup_diagram())
    return d


def factor_through_lines(c: Diagram):
    """Write c = a o (1_k (x) z^{(x)p}) o (1_k (x) (z^t)^{(x)p'}) o b with
    a in End(dst), b in End(src) and zero loops; k is the through-line count."""
    if c.dilute:
        raise ValueError("factorization is defined for ordinary diagrams")
    h_left, k, h_right = _half_diagrams(c)
    m, n = c.dst, c.src
    w = _cup_block(k, (m - k) // 2)
    a = None
    for cand in enumerate_diagrams(m, m):
        res = cand.compose(w)
        if res.loops == 0 and res.diagram == h_left:
            a = cand
            break
    v = _cup_block(k, (n - k) // 2).transpose()
    b = None
    for cand in enumerate_diagrams(n, n):
        res = v.compose(cand)
        if res.loops == 0 and res.diagram == h_right:
            b = cand
            break
    if a is None or b is None:
        raise AssertionError("factorization search failed; planarity bug")
    return a, k, b
