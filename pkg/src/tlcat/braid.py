"""The commutor eta_{r,s} and mechanical verification of the braiding laws.

eta_{r,s} in End(r+s) interchanges a block of r strands with a block of s
strands.  Two closed-form products build it; their equality is itself one
of the verified identities.  Products here follow the convention that the
running index grows towards the left: prod_{i=1}^{s} t_i = t_s ... t_1.
"""

from __future__ import annotations

import random

from .morphism import GENERIC, CoeffDomain, Morphism, e, identity, t, t_inv, z
from .diagram import enumerate_diagrams
from .report import VerificationReport

__all__ = [
    "commutor",
    "commutor_inverse",
    "verify_hexagons",
    "verify_naturality",
    "verify_braid_relations",
    "verify_braiding_lemmas",
    "monodromy_noncentral_witness",
    "verify_braid_suite",
]


def _prod(factors) -> Morphism:
    """Compose a sequence so that later list entries stand further left."""
    out = None
    for f in factors:
        out = f if out is None else f.compose(out)
    return out


def commutor(r: int, s: int, form: str = "left-nested", dom: CoeffDomain = GENERIC) -> Morphism:
    """eta_{r,s} in End(r+s); both closed forms yield the same morphism."""
    n = r + s
    if r == 0 or s == 0:
        return identity(n, dom=dom)
    factors = []
    if form == "left-nested":
        # prod_{i=1}^{s} ( prod_{j=r-1}^{0} t_{i+j} )
        for i in range(1, s + 1):
            for j in range(r - 1, -1, -1):
                factors.append(t(i + j, n, dom))
    elif form == "right-nested":
        # prod_{i=r}^{1} ( prod_{j=0}^{s-1} t_{i+j} )
        for i in range(r, 0, -1):
            for j in range(0, s):
                factors.append(t(i + j, n, dom))
    else:
        raise ValueError(f"unknown commutor form {form!r}")
    return _prod(factors)


def commutor_inverse(r: int, s: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """Structural inverse: the reversed product of inverse crossings."""
    n = r + s
    if r == 0 or s == 0:
        return identity(n, dom=dom)
    factors = []
    for i in range(1, s + 1):
        for j in range(r - 1, -1, -1):
            factors.append(t_inv(i + j, n, dom))
    return _prod(list(reversed(factors)))


# ---------------------------------------------------------------------------
# verifiers


def verify_hexagons(max_total: int, dom: CoeffDomain = GENERIC) -> VerificationReport:
    rep = VerificationReport("braid.hexagons")
    for total in range(0, max_total + 1):
        for r in range(0, total + 1):
            s = total - r
            rep.check(
                "closed-forms-agree",
                {"r": r, "s": s},
                commutor(r, s, "left-nested", dom),
                commutor(r, s, "right-nested", dom),
            )
            rep.check(
                "inverse",
                {"r": r, "s": s},
                commutor(r, s, dom=dom).compose(commutor_inverse(r, s, dom)),
                identity(r + s, dom=dom),
            )
    for total in range(0, max_total + 1):
        for n in range(0, total + 1):
            for m in range(0, total - n + 1):
                k = total - n - m
                lhs = commutor(n, m + k, dom=dom)
                rhs = identity(m, dom=dom).tensor(commutor(n, k, dom=dom)).compose(
                    commutor(n, m, dom=dom).tensor(identity(k, dom=dom))
                )
                rep.check("hexagon-first", {"n": n, "m": m, "k": k}, lhs, rhs)
                lhs2 = commutor(n + m, k, dom=dom)
                rhs2 = commutor(n, k, dom=dom).tensor(identity(m, dom=dom)).compose(
                    identity(n, dom=dom).tensor(commutor(m, k, dom=dom))
                )
                rep.check("hexagon-second", {"u": n, "v": m, "w": k}, lhs2, rhs2)
    return rep


def _naturality_case(rep, r, s, n, m, c_diag, d_diag, dom):
    cm = Morphism.from_diagram(c_diag, dom)
    dm = Morphism.from_diagram(d_diag, dom)
    lhs = commutor(r, s, dom=dom).compose(cm.tensor(dm))
    rhs = dm.tensor(cm).compose(commutor(n, m, dom=dom))
    return rep.check(
        "naturality",
        {"r": r, "s": s, "n": n, "m": m,
         "c": c_diag.to_text(), "d": d_diag.to_text()},
        lhs,
        rhs,
    )


def verify_naturality(
    max_total: int = 6,
    samples: int = 0,
    seed: int = 0,
    dom: CoeffDomain = GENERIC,
) -> VerificationReport:
    """eta_{r,s} (c tensor d) = (d tensor c) eta_{n,m} for c in Hom(n,r),
    d in Hom(m,s); exhaustive for r+s and n+m up to max_total, plus random
    larger pairs when samples > 0."""
    rep = VerificationReport("braid.naturality")
    for rs in range(0, max_total + 1):
        for r in range(0, rs + 1):
            s = rs - r
            for nm in range(0, max_total + 1):
                for n in range(0, nm + 1):
                    m = nm - n
                    if (n + r) % 2 or (m + s) % 2:
                        continue
                    cs = enumerate_diagrams(n, r)
                    ds = enumerate_diagrams(m, s)
                    for c_diag in cs:
                        for d_diag in ds:
                            _naturality_case(rep, r, s, n, m, c_diag, d_diag, dom)
    rng = random.Random(seed)
    done = 0
    while done < samples:
        r = rng.randint(0, 4)
        s = rng.randint(0, 4)
        n = rng.randint(0, 4)
        m = rng.randint(0, 4)
        if max(r + s, n + m) <= max_total or (n + r) % 2 or (m + s) % 2:
            continue
        cs = enumerate_diagrams(n, r)
        ds = enumerate_diagrams(m, s)
        if not cs or not ds:
            continue
        _naturality_case(rep, r, s, n, m, rng.choice(cs), rng.choice(ds), dom)
        done += 1
    return rep


def verify_braid_relations(n: int, dom: CoeffDomain = GENERIC) -> VerificationReport:
    rep = VerificationReport("braid.relations")
    for i in range(1, n - 1):
        ti, tj = t(i, n, dom), t(i + 1, n, dom)
        ei, ej = e(i, n, dom), e(i + 1, n, dom)
        rep.check("t t e = e e (lower)", {"n": n, "i": i}, ti * tj * ei, ej * ei)
        rep.check("e e = e t t (lower)", {"n": n, "i": i}, ej * ei, ej * ti * tj)
        rep.check("t t e = e e (upper)", {"n": n, "i": i}, tj * ti * ej, ei * ej)
        rep.check("e e = e t t (upper)", {"n": n, "i": i}, ei * ej, ei * tj * ti)
        rep.check("braid relation", {"n": n, "i": i}, ti * tj * ti, tj * ti * tj)
    for i in range(1, n):
        for j in range(i + 2, n):
            rep.check(
                "far commutation", {"n": n, "i": i, "j": j},
                t(i, n, dom) * t(j, n, dom), t(j, n, dom) * t(i, n, dom),
            )
    # palindome words t_i ... t_{n-1} ... t_i = t_{n-1} ... t_i ... t_{n-1}
    for i in range(1, n):
        top = n - 1
        up = list(range(i, top + 1))
        word1 = up + up[-2::-1]
        down = list(range(top, i - 1, -1))
        word2 = down + down[-2::-1]
        lhs = _prod([t(k, n, dom) for k in reversed(word1)])
        rhs = _prod([t(k, n, dom) for k in reversed(word2)])
        rep.check("palindrome", {"n": n, "i": i}, lhs, rhs)
    return rep


def verify_braiding_lemmas(max_total: int = 6, dom: CoeffDomain = GENERIC) -> VerificationReport:
    """The e-transport and bubble identities of the braiding construction."""
    rep = VerificationReport("braid.lemmas")
    for total in range(2, max_total + 1):
        for n in range(0, total + 1):
            m = total - n
            eta = commutor(n, m, dom=dom)
            for i in range(1, n):
                rep.check(
                    "eta e_i = e_{m+i} eta", {"n": n, "m": m, "i": i},
                    eta * e(i, total, dom), e(m + i, total, dom) * eta,
                )
            for j in range(1, m):
                rep.check(
                    "eta e_{n+j} = e_j eta", {"n": n, "m": m, "j": j},
                    eta * e(n + j, total, dom), e(j, total, dom) * eta,
                )
    for n in range(0, max_total - 1):
        for p in range(1, (max_total - n) // 2 + 1):
            zp = z(dom)
            for _ in range(p - 1):
                zp = zp.tensor(z(dom))
            lhs = commutor(n, 2 * p, dom=dom).compose(identity(n, dom=dom).tensor(zp))
            rhs = zp.tensor(identity(n, dom=dom))
            rep.check("bubble: eta_{n,2p} (1 x z^p) = z^p x 1", {"n": n, "p": p}, lhs, rhs)
    return rep


def monodromy_noncentral_witness(dom: CoeffDomain = GENERIC) -> Morphism:
    """The exact nonzero commutator showing the double braiding is not central:
    eta_{2,1} eta_{1,2} e_1 - e_1 eta_{2,1} eta_{1,2}
      = q^-2 (q - q^-1)(e_1 e_2 - e_2 e_1)."""
    mono = commutor(2, 1, dom=dom).compose(commutor(1, 2, dom=dom))
    e1, e2 = e(1, 3, dom), e(2, 3, dom)
    witness = mono * e1 - e1 * mono
    coeff = dom.s_power(-8) * (dom.s_power(4) - dom.s_power(-4))
    expected = (e1 * e2 - e2 * e1).scale(coeff)
    if witness != expected:
        raise AssertionError("non-centrality witness does not match the closed form")
    return witness


def verify_braid_suite(
    max_total: int = 6, samples: int = 200, seed: int = 0, dom: CoeffDomain = GENERIC
) -> VerificationReport:
    rep = VerificationReport("braid")
    rep.extend(verify_hexagons(max_total, dom))
    rep.extend(verify_naturality(max_total, samples=samples, seed=seed, dom=dom))
    for n in range(2, max_total + 1):
        rep.extend(verify_braid_relations(n, dom))
    rep.extend(verify_braiding_lemmas(max_total, dom))
    try:
        w = monodromy_noncentral_witness(dom)
        rep.add("noncentral-witness", {}, not w.is_zero, {"witness": w.to_text()})
    except AssertionError as exc:
        rep.add("noncentral-witness", {}, False, {"error": str(exc)})
    return rep
