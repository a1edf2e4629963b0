"""Morphisms: formal linear combinations of planar diagrams.

A Morphism is a dict Diagram -> coefficient with all diagrams sharing
(dst, src, dilute).  Coefficients live in a CoeffDomain: symbolic Scalars
by default, or exact specialized values (rationals, cyclotomic numbers).
Composition extends diagram gluing bilinearly, multiplying in one loop
weight beta per closed loop; dilute annihilated pairs contribute nothing.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product as _iproduct

from .diagram import (
    Diagram,
    InterfaceMismatch,
    cap_diagram,
    cup_diagram,
    e_diagram,
    identity_diagram,
)
from .scalar import ONE, ZERO, Scalar, Specialization, parse_scalar

__all__ = [
    "CoeffDomain",
    "GENERIC",
    "domain_for",
    "Morphism",
    "identity",
    "e",
    "t",
    "t_inv",
    "z",
    "zt",
    "big_cup",
    "big_cap",
    "dilute_identity",
    "parse_morphism",
]


class CoeffDomain:
    """The coefficient ring: everything a Morphism needs to know about it."""

    __slots__ = ("spec", "zero", "one", "_spow", "beta", "_beta_pows")

    def __init__(self, spec: Specialization):
        self.spec = spec
        if spec.kind == "generic":
            self._spow = Scalar.s_power
        elif spec.kind == "rational":
            try:
                from gmpy2 import mpq
            except ImportError:
                mpq = Fraction
            s0 = mpq(spec.s0.numerator, spec.s0.denominator)
            self._spow = lambda k: s0**k
        elif spec.kind == "cyclotomic":
            from .cyclotomic import CycloField

            field = CycloField(spec.N)
            self._spow = lambda k: field.zeta(spec.a * k)
        else:
            raise ValueError(
                "complex specializations are for reporting, not morphism arithmetic"
            )
        self.one = self._spow(0)
        self.zero = self.one - self.one
        self.beta = -self._spow(4) - self._spow(-4)
        self._beta_pows = [self.one, self.beta]

    def s_power(self, k: int):
        return self._spow(k)

    def q_power(self, k):
        e = Fraction(k) * 4
        if e.denominator != 1:
            raise ValueError(f"q^{k} is not integral in s")
        return self._spow(int(e))

    def beta_power(self, k: int):
        pows = self._beta_pows
        while len(pows) <= k:
            pows.append(pows[-1] * self.beta)
        return pows[k]

    def __eq__(self, other):
        return isinstance(other, CoeffDomain) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"CoeffDomain({self.spec.describe()})"


GENERIC = CoeffDomain(Specialization.generic())

_domains = {Specialization.generic(): GENERIC}


def domain_for(spec: Specialization) -> CoeffDomain:
    if spec not in _domains:
        _domains[spec] = CoeffDomain(spec)
    return _domains[spec]


class Morphism:
    __slots__ = ("dst", "src", "dilute", "terms", "dom")

    def __init__(self, dst, src, terms, dilute=False, dom=GENERIC, _clean=False):
        self.dst = dst
        self.src = src
        self.dilute = dilute
        self.dom = dom
        if _clean:
            self.terms = terms
        else:
            self.terms = {d: c for d, c in terms.items() if c}
            for d in self.terms:
                if d.dst != dst or d.src != src or d.dilute != dilute:
                    raise ValueError(f"term {d!r} does not live in {dst}<-{src}")

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def from_diagram(d: Diagram, dom: CoeffDomain = GENERIC) -> "Morphism":
        return Morphism(d.dst, d.src, {d: dom.one}, d.dilute, dom, _clean=True)

    @staticmethod
    def zero(dst, src, dilute=False, dom: CoeffDomain = GENERIC) -> "Morphism":
        return Morphism(dst, src, {}, dilute, dom, _clean=True)

    # -- linear structure -------------------------------------------------------

    def _check_shape(self, other):
        if (
            self.dst != other.dst
            or self.src != other.src
            or self.dilute != other.dilute
            or self.dom != other.dom
        ):
            raise InterfaceMismatch("morphism shapes or domains differ")

    def __add__(self, other):
        self._check_shape(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            c2 = terms.get(d)
            c2 = c if c2 is None else c2 + c
            if c2:
                terms[d] = c2
            elif d in terms:
                del terms[d]
        return Morphism(self.dst, self.src, terms, self.dilute, self.dom, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Morphism(
            self.dst,
            self.src,
            {d: -c for d, c in self.terms.items()},
            self.dilute,
            self.dom,
            _clean=True,
        )

    def scale(self, c) -> "Morphism":
        if not c:
            return Morphism.zero(self.dst, self.src, self.dilute, self.dom)
        return Morphism(
            self.dst,
            self.src,
            {d: c * cd for d, cd in self.terms.items()},
            self.dilute,
            self.dom,
            _clean=True,
        )

    def __mul__(self, other):
        """f * g is composition f after g; scalars also accepted."""
        if isinstance(other, Morphism):
            return self.compose(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- multiplicative structure -------------------------------------------------

    def compose(self, other: "Morphism") -> "Morphism":
        if self.src != other.dst:
            raise InterfaceMismatch(
                f"compose: src {self.src} != dst {other.dst}"
            )
        if self.dilute != other.dilute or self.dom != other.dom:
            raise InterfaceMismatch("compose: dilute flags or domains differ")
        dom = self.dom
        out: dict = {}
        for (d1, c1), (d2, c2) in _iproduct(self.terms.items(), other.terms.items()):
            res = d1.compose(d2)
            if res.annihilated:
                continue
            c = c1 * c2
            if res.loops:
                c = c * dom.beta_power(res.loops)
            d = res.diagram
            c0 = out.get(d)
            c0 = c if c0 is None else c0 + c
            if c0:
                out[d] = c0
            elif d in out:
                del out[d]
        return Morphism(self.dst, other.src, out, self.dilute, dom, _clean=True)

    def tensor(self, other: "Morphism") -> "Morphism":
        if self.dilute != other.dilute or self.dom != other.dom:
            raise InterfaceMismatch("tensor: dilute flags or domains differ")
        out: dict = {}
        for (d1, c1), (d2, c2) in _iproduct(self.terms.items(), other.terms.items()):
            d = d1.tensor(d2)
            c = c1 * c2
            c0 = out.get(d)
            c0 = c if c0 is None else c0 + c
            if c0:
                out[d] = c0
        return Morphism(
            self.dst + other.dst,
            self.src + other.src,
            out,
            self.dilute,
            self.dom,
            _clean=True,
        )

    def __pow__(self, k: int):
        if self.dst != self.src:
            raise InterfaceMismatch("powers need an endomorphism")
        if k < 0:
            raise ValueError("negative morphism powers are not defined here")
        out = identity(self.dst, self.dilute, self.dom)
        base = self
        while k:
            if k & 1:
                out = out.compose(base)
            base = base.compose(base) if k > 1 else base
            k >>= 1
        return out

    def transpose(self) -> "Morphism":
        return Morphism(
            self.src,
            self.dst,
            {d.transpose(): c for d, c in self.terms.items()},
            self.dilute,
            self.dom,
            _clean=True,
        )

    # -- predicates -----------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_identity(self) -> bool:
        if self.dst != self.src or len(self.terms) != 1:
            return False
        ((d, c),) = self.terms.items()
        return d.is_identity and c == self.dom.one

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.dst == other.dst
            and self.src == other.src
            and self.dilute == other.dilute
            and self.dom == other.dom
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.dst, self.src, self.dilute, frozenset(self.terms.items()))
        )

    # -- specialization ---------------------------------------------------------------

    def specialize(self, spec: Specialization) -> "Morphism":
        if self.dom.spec.kind != "generic":
            raise ValueError("can only specialize a generic morphism")
        if spec.kind == "generic":
            return self
        dom = domain_for(spec)
        terms = {}
        for d, c in self.terms.items():
            v = c.specialize(spec)
            if v:
                terms[d] = v
        return Morphism(self.dst, self.src, terms, self.dilute, dom, _clean=True)

    # -- text form ----------------------------------------------------------------------

    def to_text(self) -> str:
        tag = "d" if self.dilute else ""
        head = f"{self.dst}<-{self.src}{tag} : "
        if not self.terms:
            return head + "0"
        parts = [
            f"[{c}] * {d.to_text()}"
            for d, c in sorted(self.terms.items(), key=lambda kv: kv[0].key())
        ]
        return head + " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "dst": self.dst,
            "src": self.src,
            "dilute": self.dilute,
            "spec": self.dom.spec.describe(),
            "terms": [
                {"coeff": str(c), "diagram": d.to_text()}
                for d, c in sorted(self.terms.items(), key=lambda kv: kv[0].key())
            ],
        }

    def __repr__(self):
        return f"Morphism({self.to_text()})"


def parse_morphism(text: str) -> Morphism:
    """Inverse of to_text for generic-domain morphisms."""
    head, _, body = text.partition(":")
    head = head.strip()
    dilute = head.endswith("d")
    if dilute:
        head = head[:-1]
    dst_s, _, src_s = head.partition("<-")
    dst, src = int(dst_s), int(src_s)
    body = body.strip()
    if body == "0":
        return Morphism.zero(dst, src, dilute)
    terms = {}
    # split only at term boundaries: a '+' followed by a new '[coeff]'
    # (coefficients themselves may contain ' + ')
    for chunk in re.split(r" \+ (?=\[)", body):
        chunk = chunk.strip()
        if not chunk.startswith("["):
            raise ValueError(f"bad term {chunk!r}")
        close = chunk.rindex("] * ")
        coeff = parse_scalar(chunk[1:close])
        diag = Diagram.from_text(chunk[close + 4:])
        if diag in terms:
            terms[diag] = terms[diag] + coeff
        else:
            terms[diag] = coeff
    return Morphism(dst, src, terms, dilute)


# ---------------------------------------------------------------------------
# generators


def identity(n: int, dilute: bool = False, dom: CoeffDomain = GENERIC) -> Morphism:
    if dilute:
        return dilute_identity(n, dom)
    return Morphism.from_diagram(identity_diagram(n), dom)


def e(i: int, n: int, dom: CoeffDomain = GENERIC) -> Morphism:
    return Morphism.from_diagram(e_diagram(i, n), dom)


def t(i: int, n: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """Elementary crossing q^(1/2) (1_n + q^(-1) e_i)."""
    terms = {
        identity_diagram(n): dom.s_power(2),
        e_diagram(i, n): dom.s_power(-2),
    }
    return Morphism(n, n, terms, False, dom, _clean=True)


def t_inv(i: int, n: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """Inverse crossing q^(-1/2) (1_n + q e_i)."""
    terms = {
        identity_diagram(n): dom.s_power(-2),
        e_diagram(i, n): dom.s_power(2),
    }
    return Morphism(n, n, terms, False, dom, _clean=True)


def z(dom: CoeffDomain = GENERIC) -> Morphism:
    """Cup in Hom(0,2)."""
    return Morphism.from_diagram(cup_diagram(), dom)


def zt(dom: CoeffDomain = GENERIC) -> Morphism:
    """Cap in Hom(2,0)."""
    return Morphism.from_diagram(cap_diagram(), dom)


def big_cup(m: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """Nested cups in Hom(0,2m): node i arcs to node 2m+1-i."""
    link = tuple(2 * m - 1 - i for i in range(2 * m))
    return Morphism.from_diagram(Diagram(2 * m, 0, link), dom)


def big_cap(m: int, dom: CoeffDomain = GENERIC) -> Morphism:
    return big_cup(m, dom).transpose()


def dilute_identity(n: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """The dilute unit: sum over all occupation patterns of parallel strands."""
    terms = {}
    for mask in range(1 << n):
        link = [-1] * (2 * n)
        for i in range(n):
            if mask >> i & 1:
                link[i] = 2 * n - 1 - i
                link[2 * n - 1 - i] = i
        terms[Diagram(n, n, tuple(link), True)] = dom.one
    return Morphism(n, n, terms, True, dom, _clean=True)
