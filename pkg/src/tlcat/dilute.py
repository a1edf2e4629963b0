"""Braiding for the dilute diagram family.

The elementary two-strand braiding is a five-diagram morphism in the
dilute End(2); its coefficients are forced, up to sign choices, by
requiring that occupied and vacant strand patterns transport through it.
Everything else - the crossings t_i, the block interchange eta_{r,s} and
its inverse - is built from that element exactly as in the ordinary
family, with the dilute identity (a sum over occupation patterns) taking
the place of the ordinary identity strand.
"""

from __future__ import annotations

import random
from itertools import combinations

from .diagram import Diagram, enumerate_diagrams
from .morphism import CoeffDomain, GENERIC, Morphism, dilute_identity
from .report import VerificationReport

__all__ = [
    "dilute_diagram",
    "DILUTE_END2_NAMES",
    "dilute_eta11",
    "dilute_eta11_inverse",
    "dilute_t",
    "dilute_t_inv",
    "dilute_commutor",
    "dilute_commutor_inverse",
    "verify_dilute_braiding",
]

# The nine diagrams of the dilute End(2).  Left nodes are 1 (top) and
# 2 (bottom); right nodes are 3 (bottom) and 4 (top).
_END2_PAIRS = {
    "parallel": ((1, 4), (2, 3)),
    "cupcap": ((1, 2), (3, 4)),
    "diag-down": ((1, 3),),
    "diag-up": ((2, 4),),
    "top-line": ((1, 4),),
    "bottom-line": ((2, 3),),
    "left-cup": ((1, 2),),
    "right-cap": ((3, 4),),
    "vacant": (),
}

DILUTE_END2_NAMES = tuple(_END2_PAIRS)


def dilute_diagram(name: str) -> Diagram:
    """One of the nine dilute End(2) diagrams, by name."""
    return Diagram.from_pairs(2, 2, _END2_PAIRS[name], dilute=True)


def _named(dom: CoeffDomain, **coeffs) -> Morphism:
    terms = {dilute_diagram(k): c for k, c in coeffs.items() if c}
    return Morphism(2, 2, terms, dilute=True, dom=dom)


def dilute_eta11(dom: CoeffDomain = GENERIC) -> Morphism:
    """The elementary dilute braiding:
    q^{1/2} parallel + q^{-1/2} cup-cap + both diagonals + all-vacant."""
    one = dom.one
    return _named(
        dom,
        **{
            "parallel": dom.s_power(2),
            "cupcap": dom.s_power(-2),
            "diag-down": one,
            "diag-up": one,
            "vacant": one,
        },
    )


def dilute_eta11_inverse(dom: CoeffDomain = GENERIC) -> Morphism:
    one = dom.one
    return _named(
        dom,
        **{
            "parallel": dom.s_power(-2),
            "cupcap": dom.s_power(2),
            "diag-down": one,
            "diag-up": one,
            "vacant": one,
        },
    )


def dilute_t(i: int, n: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """Crossing of dilute strands i, i+1 inside End(n)."""
    if not 1 <= i < n:
        raise ValueError(f"strand index {i} out of range for {n} strands")
    out = dilute_eta11(dom)
    if i > 1:
        out = dilute_identity(i - 1, dom).tensor(out)
    if i + 1 < n:
        out = out.tensor(dilute_identity(n - i - 1, dom))
    return out


def dilute_t_inv(i: int, n: int, dom: CoeffDomain = GENERIC) -> Morphism:
    if not 1 <= i < n:
        raise ValueError(f"strand index {i} out of range for {n} strands")
    out = dilute_eta11_inverse(dom)
    if i > 1:
        out = dilute_identity(i - 1, dom).tensor(out)
    if i + 1 < n:
        out = out.tensor(dilute_identity(n - i - 1, dom))
    return out


def _prod(factors) -> Morphism:
    out = None
    for f in factors:
        out = f if out is None else f.compose(out)
    return out


def dilute_commutor(
    r: int, s: int, form: str = "left-nested", dom: CoeffDomain = GENERIC
) -> Morphism:
    """eta_{r,s} for dilute strands, same crossing products as the
    ordinary family."""
    n = r + s
    if r == 0 or s == 0:
        return dilute_identity(n, dom)
    factors = []
    if form == "left-nested":
        for i in range(1, s + 1):
            for j in range(r - 1, -1, -1):
                factors.append(dilute_t(i + j, n, dom))
    elif form == "right-nested":
        for i in range(r, 0, -1):
            for j in range(0, s):
                factors.append(dilute_t(i + j, n, dom))
    else:
        raise ValueError(f"unknown commutor form {form!r}")
    return _prod(factors)


def dilute_commutor_inverse(r: int, s: int, dom: CoeffDomain = GENERIC) -> Morphism:
    n = r + s
    if r == 0 or s == 0:
        return dilute_identity(n, dom)
    factors = []
    for i in range(1, s + 1):
        for j in range(r - 1, -1, -1):
            factors.append(dilute_t_inv(i + j, n, dom))
    return _prod(list(reversed(factors)))


# ---------------------------------------------------------------------------
# verifiers


def _sum_diagrams(dom: CoeffDomain, dst: int, src: int, pair_sets) -> Morphism:
    terms = {}
    for pairs in pair_sets:
        terms[Diagram.from_pairs(dst, src, pairs, dilute=True)] = dom.one
    return Morphism(dst, src, terms, dilute=True, dom=dom)


def verify_dilute_braiding(
    max_total: int = 4,
    dom: CoeffDomain = GENERIC,
    samples: int = 50,
    seed: int = 0,
) -> VerificationReport:
    rep = VerificationReport("dilute.braiding")
    eta = dilute_eta11(dom)
    one = dom.one

    # basic counting and unit facts
    rep.add(
        "dilute End(2) has nine diagrams",
        {},
        len(enumerate_diagrams(2, 2, dilute=True)) == 9,
    )
    rep.check(
        "eta11 inverse",
        {},
        eta.compose(dilute_eta11_inverse(dom)),
        dilute_identity(2, dom),
    )

    # coefficient constraints: a1 = q^{1/2}, a5 = q^{-1/2}, a2 = a3 = a4 = 1
    a1, a5 = dom.s_power(2), dom.s_power(-2)
    rep.add(
        "a1^2 + a1 a5 beta + a5^2 = 0",
        {},
        not (a1 * a1 + a1 * a5 * dom.beta + a5 * a5),
    )
    rep.add("a2^2 = a3^2 = a4^2 = a1 a5", {}, one * one == a1 * a5)

    # occupation-pattern transport: dashed span = line + vacancies
    top_solid = _sum_diagrams(dom, 2, 2, [((1, 4), (2, 3)), ((1, 4),)])
    bottom_solid = _sum_diagrams(dom, 2, 2, [((1, 4), (2, 3)), ((2, 3),)])
    top_vacant = _sum_diagrams(dom, 2, 2, [((2, 3),), ()])
    bottom_vacant = _sum_diagrams(dom, 2, 2, [((1, 4),), ()])
    for name, (x, y) in {
        "solid top -> solid bottom": (top_solid, bottom_solid),
        "solid bottom -> solid top": (bottom_solid, top_solid),
        "vacant top -> vacant bottom": (top_vacant, bottom_vacant),
        "vacant bottom -> vacant top": (bottom_vacant, top_vacant),
    }.items():
        rep.check("occupation transport: " + name, {}, eta.compose(x), y.compose(eta))

    # the interchange conditions that pinned the coefficients
    one_strand = dilute_identity(1, dom)
    eta12 = dilute_commutor(1, 2, dom=dom)
    eta21 = dilute_commutor(2, 1, dom=dom)
    for bname in ("cupcap", "left-cup", "right-cap"):
        b = Morphism.from_diagram(dilute_diagram(bname), dom)
        rep.check(
            "eta_{1,2} interchange",
            {"b": bname},
            eta12.compose(one_strand.tensor(b)),
            b.tensor(one_strand).compose(eta12),
        )
        rep.check(
            "eta_{2,1} interchange",
            {"b": bname},
            eta21.compose(b.tensor(one_strand)),
            one_strand.tensor(b).compose(eta21),
        )
    vac_node = Morphism.from_diagram(Diagram.from_pairs(1, 0, (), dilute=True), dom)
    strand = Morphism.from_diagram(Diagram.from_pairs(1, 1, ((1, 2),), dilute=True), dom)
    vac_strand = Morphism.from_diagram(Diagram.from_pairs(1, 1, (), dilute=True), dom)
    for aname, a in (("line", strand), ("vacancy", vac_strand)):
        rep.check(
            "eta_{1,1} absorbs a single boundary node",
            {"a": aname},
            eta.compose(a.tensor(vac_node)),
            vac_node.tensor(a),
        )
        rep.check(
            "eta_{1,1} absorbs a single boundary node (flip)",
            {"a": aname},
            eta.compose(vac_node.tensor(a)),
            a.tensor(vac_node),
        )

    # closed forms, inverses, hexagons
    for total in range(0, max_total + 1):
        for r in range(0, total + 1):
            s = total - r
            rep.check(
                "closed-forms-agree",
                {"r": r, "s": s},
                dilute_commutor(r, s, "left-nested", dom),
                dilute_commutor(r, s, "right-nested", dom),
            )
            rep.check(
                "inverse",
                {"r": r, "s": s},
                dilute_commutor(r, s, dom=dom).compose(
                    dilute_commutor_inverse(r, s, dom)
                ),
                dilute_identity(r + s, dom),
            )
    for total in range(0, max_total + 1):
        for n in range(0, total + 1):
            for m in range(0, total - n + 1):
                k = total - n - m
                rep.check(
                    "hexagon-first",
                    {"n": n, "m": m, "k": k},
                    dilute_commutor(n, m + k, dom=dom),
                    dilute_identity(m, dom)
                    .tensor(dilute_commutor(n, k, dom=dom))
                    .compose(dilute_commutor(n, m, dom=dom).tensor(dilute_identity(k, dom))),
                )
                rep.check(
                    "hexagon-second",
                    {"n": n, "m": m, "k": k},
                    dilute_commutor(n + m, k, dom=dom),
                    dilute_commutor(n, k, dom=dom)
                    .tensor(dilute_identity(m, dom))
                    .compose(dilute_identity(n, dom).tensor(dilute_commutor(m, k, dom=dom))),
                )

    # naturality on sampled dilute diagrams
    rng = random.Random(seed)
    sizes = [
        (r, s, n, m)
        for r in range(0, 3)
        for s in range(0, 3)
        for n in range(0, 3)
        for m in range(0, 3)
    ]
    for _ in range(samples):
        r, s, n, m = rng.choice(sizes)
        cs = enumerate_diagrams(n, r, dilute=True)
        ds = enumerate_diagrams(m, s, dilute=True)
        if not cs or not ds:
            continue
        c = Morphism.from_diagram(rng.choice(cs), dom)
        d = Morphism.from_diagram(rng.choice(ds), dom)
        rep.check(
            "naturality",
            {"r": r, "s": s, "n": n, "m": m,
             "c": next(iter(c.terms)).to_text(), "d": next(iter(d.terms)).to_text()},
            dilute_commutor(r, s, dom=dom).compose(c.tensor(d)),
            d.tensor(c).compose(dilute_commutor(n, m, dom=dom)),
        )
    return rep
