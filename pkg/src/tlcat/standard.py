"""Standard modules as explicit matrix representations, the Jones-Wenzl
style projector, and the diagrammatic rigidity identities.

S_{n,k} is spanned by the (n,k)-diagrams with exactly k through lines,
viewed in Hom(k, n).  A morphism acts by composition on the left; any term
whose through-line count drops below k is discarded.  The regular module
(End(n) acting on its own diagram basis) uses plain composition with loop
weights and no truncation; fusion at roots of unity needs it.
"""

from __future__ import annotations

from math import comb

from .diagram import Diagram, enumerate_diagrams
from .linalg import nullspace, rref
from .morphism import GENERIC, CoeffDomain, Morphism, big_cap, big_cup, domain_for, e, identity
from .report import VerificationReport
from .scalar import PoleAtSpecialization, Specialization

__all__ = [
    "StandardModule",
    "RegularModule",
    "standard_dimension",
    "act",
    "eigenvalue_on_standard",
    "NotScalarAction",
    "wenzl_jones",
    "verify_rigidity",
    "annihilated_line_dimension",
]


class NotScalarAction(ValueError):
    """A claimed central element did not act as a multiple of the identity."""


def standard_dimension(n: int, k: int) -> int:
    p = (n - k) // 2
    return comb(n, p) - (comb(n, p - 1) if p >= 1 else 0)


class StandardModule:
    """S_{n,k}: span of (n,k)-diagrams with exactly k through lines."""

    def __init__(self, n: int, k: int, dom: CoeffDomain = GENERIC):
        if k < 0 or k > n or (n - k) % 2:
            raise ValueError(f"no standard module S_{n},{k}")
        self.n = n
        self.k = k
        self.dom = dom
        self.basis = [
            d for d in enumerate_diagrams(k, n) if d.through == k
        ]
        self._index = {d: i for i, d in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def act_on_element(self, f: Morphism, v: Diagram) -> dict:
        """Column of act(f) at basis element v, as index -> coefficient."""
        out: dict = {}
        for d, c in f.terms.items():
            res = Diagram.compose(d, v)
            if res.annihilated:
                continue
            img = res.diagram
            if img.through != self.k:
                continue
            coeff = c
            if res.loops:
                coeff = coeff * self.dom.beta_power(res.loops)
            idx = self._index[img]
            prev = out.get(idx)
            prev = coeff if prev is None else prev + coeff
            if prev:
                out[idx] = prev
            elif idx in out:
                del out[idx]
        return out

    def __repr__(self):
        return f"StandardModule(S_{self.n},{self.k}, dim={self.dim})"


class RegularModule:
    """End(n) as a left module over itself, on the diagram basis."""

    def __init__(self, n: int, dom: CoeffDomain = GENERIC):
        self.n = n
        self.k = None
        self.dom = dom
        self.basis = enumerate_diagrams(n, n)
        self._index = {d: i for i, d in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def act_on_element(self, f: Morphism, v: Diagram) -> dict:
        out: dict = {}
        for d, c in f.terms.items():
            res = Diagram.compose(d, v)
            if res.annihilated:
                continue
            coeff = c
            if res.loops:
                coeff = coeff * self.dom.beta_power(res.loops)
            idx = self._index[res.diagram]
            prev = out.get(idx)
            prev = coeff if prev is None else prev + coeff
            if prev:
                out[idx] = prev
            elif idx in out:
                del out[idx]
        return out

    def __repr__(self):
        return f"RegularModule(End({self.n}), dim={self.dim})"


def act(f: Morphism, module: StandardModule):
    """Matrix of f: S_{n,k} -> S_{m,k} on the diagram bases (rows = target)."""
    if f.src != module.n:
        raise ValueError(f"morphism source {f.src} != module size {module.n}")
    if f.dst == module.n:
        target = module
    else:
        target = StandardModule(f.dst, module.k, module.dom)
    zero = module.dom.zero
    mat = [[zero] * module.dim for _ in range(target.dim)]
    for j, v in enumerate(module.basis):
        col: dict = {}
        for d, c in f.terms.items():
            res = Diagram.compose(d, v)
            if res.annihilated:
                continue
            img = res.diagram
            if img.through != module.k:
                continue
            coeff = c
            if res.loops:
                coeff = coeff * module.dom.beta_power(res.loops)
            i = target._index[img]
            col[i] = col.get(i, zero) + coeff
        for i, coeff in col.items():
            mat[i][j] = coeff
    return mat


def eigenvalue_on_standard(central: Morphism, module: StandardModule):
    """The scalar by which a central element acts; NotScalarAction otherwise."""
    mat = act(central, module)
    n = len(mat)
    if n == 0:
        raise NotScalarAction("module is zero-dimensional")
    lam = mat[0][0]
    for i in range(n):
        for j in range(n):
            expect = lam if i == j else module.dom.zero
            if mat[i][j] != expect:
                raise NotScalarAction(
                    f"matrix is not scalar at entry ({i},{j})"
                )
    return lam


# ---------------------------------------------------------------------------
# the projector


def _coeff_inv(c):
    try:
        return c.inv()
    except AttributeError:
        return 1 / c


def wenzl_jones(m: int, dom: CoeffDomain = GENERIC) -> Morphism:
    """The idempotent in End(m) killed by every e_i, built recursively;
    the recursion coefficient is solved exactly from the annihilation
    condition at each step rather than taken from any closed form."""
    if m < 0:
        raise ValueError("need m >= 0")
    wj = identity(max(m, 0), dom=dom) if m <= 1 else None
    if wj is not None:
        return wj
    wj = identity(1, dom=dom)
    for size in range(2, m + 1):
        w1 = wj.tensor(identity(1, dom=dom))
        em = e(size - 1, size, dom)
        a = em.compose(w1)
        b = a.compose(em).compose(w1)
        # b must be a scalar multiple of a; that scalar's inverse is the
        # recursion coefficient, and it vanishing signals a root of unity
        d0, c0 = next(iter(a.terms.items()))
        num = b.terms.get(d0)
        if num is None or not num:
            raise PoleAtSpecialization(
                f"projector recursion breaks at size {size}: quantum integer vanishes"
            )
        ratio = num * _coeff_inv(c0)
        if b != a.scale(ratio):
            raise AssertionError("projector recursion lost proportionality")
        wj = w1 - w1.compose(em).compose(w1).scale(_coeff_inv(ratio))
    return wj


def annihilated_line_dimension(m: int, spec: Specialization | None = None) -> int:
    """Dimension of {x in End(m) : e_i x = x e_i = 0 for all i}.

    Symbolic for the generic specialization; callers wanting speed pass a
    rational point.
    """
    dom = GENERIC if spec is None or spec.kind == "generic" else domain_for(spec)
    diags = enumerate_diagrams(m, m)
    index = {d: i for i, d in enumerate(diags)}
    nd = len(diags)
    zero = dom.zero
    rows = []
    for i in range(1, m):
        for side in ("left", "right"):
            gen = e(i, m, dom)
            # rows of the linear map x -> e_i x (or x e_i) on the diagram basis
            block = [[zero] * nd for _ in range(nd)]
            for j, d in enumerate(diags):
                dm = Morphism.from_diagram(d, dom)
                prod = gen.compose(dm) if side == "left" else dm.compose(gen)
                for dd, c in prod.terms.items():
                    block[index[dd]][j] = block[index[dd]][j] + c
            rows.extend(block)
    if not rows:
        return nd
    return len(nullspace(rows, nd))


def verify_rigidity(m: int, dom: CoeffDomain = GENERIC) -> VerificationReport:
    """Zig-zag identities and the projector-decorated zig-zag."""
    rep = VerificationReport("repr.rigidity")
    one_m = identity(m, dom=dom)
    cup = big_cup(m, dom)
    cap = big_cap(m, dom)
    rep.check(
        "zig-zag left", {"m": m},
        one_m.tensor(cap).compose(cup.tensor(one_m)), one_m,
    )
    rep.check(
        "zig-zag right", {"m": m},
        cap.tensor(one_m).compose(one_m.tensor(cup)), one_m,
    )
    try:
        wj = wenzl_jones(m, dom)
        decorated_cap = cap.compose(wj.tensor(wj))
        rep.check(
            "projector zig-zag", {"m": m},
            one_m.tensor(decorated_cap).compose(cup.tensor(one_m)), wj,
        )
        rep.check("projector idempotent", {"m": m}, wj.compose(wj), wj)
        rep.check("projector transpose-symmetric", {"m": m}, wj.transpose(), wj)
        ok = True
        for i in range(1, m):
            ei = e(i, m, dom)
            if not ei.compose(wj).is_zero or not wj.compose(ei).is_zero:
                ok = False
        rep.add("projector annihilation", {"m": m}, ok)
    except PoleAtSpecialization as exc:
        rep.add("projector existence", {"m": m}, False, {"error": str(exc)})
    return rep
