"""Elementary crossings, braid relations, commutor closed forms,
hexagons, naturality, and the non-centrality witness."""

import random

from tlcat.braid import (
    commutor,
    commutor_inverse,
    monodromy_noncentral_witness,
    verify_braid_relations,
    verify_braiding_lemmas,
    verify_hexagons,
    verify_naturality,
)
from tlcat.diagram import enumerate_diagrams
from tlcat.morphism import Morphism, e, identity, t, t_inv
from tlcat.scalar import Scalar


def test_crossing_definition_and_inverse():
    for n in (2, 3, 4):
        for i in range(1, n):
            ti = t(i, n)
            expected = identity(n).scale(Scalar.s_power(2)) + \
                e(i, n).scale(Scalar.s_power(-2))
            assert ti == expected
            assert ti * t_inv(i, n) == identity(n)
            assert t_inv(i, n) * ti == identity(n)


def test_braid_relations():
    for n in (3, 4, 5):
        assert verify_braid_relations(n).ok


def test_braid_group_relation_direct():
    # t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}, checked without the verifier
    for n in (3, 4):
        for i in range(1, n - 1):
            a, b = t(i, n), t(i + 1, n)
            assert a * b * a == b * a * b
    # distant generators commute
    a, b = t(1, 4), t(3, 4)
    assert a * b == b * a


def test_commutor_closed_forms_and_hexagons():
    assert verify_hexagons(5).ok


def test_commutor_inverse():
    for r in range(0, 4):
        for s in range(0, 4 - r):
            eta = commutor(r, s)
            inv = commutor_inverse(r, s)
            assert eta * inv == identity(r + s)
            assert inv * eta == identity(r + s)


def test_commutor_small_explicit():
    # eta_{1,1} = t_1 and eta_{0,n} = eta_{n,0} = identity
    assert commutor(1, 1) == t(1, 2)
    assert commutor(0, 3) == identity(3)
    assert commutor(3, 0) == identity(3)


def test_naturality_exhaustive_small_and_sampled():
    assert verify_naturality(4, samples=50, seed=1).ok


def test_naturality_direct_random():
    rng = random.Random(5)
    for _ in range(25):
        r, s = rng.randint(0, 3), rng.randint(0, 3)
        n = rng.choice([k for k in range(0, 4) if (k + r) % 2 == 0])
        m = rng.choice([k for k in range(0, 4) if (k + s) % 2 == 0])
        cs = enumerate_diagrams(n, r)
        ds = enumerate_diagrams(m, s)
        if not cs or not ds:
            continue
        c = Morphism.from_diagram(rng.choice(cs))
        d = Morphism.from_diagram(rng.choice(ds))
        lhs = commutor(r, s).compose(c.tensor(d))
        rhs = d.tensor(c).compose(commutor(n, m))
        assert lhs == rhs


def test_braiding_lemmas():
    assert verify_braiding_lemmas(5).ok


def test_noncentral_witness_exact():
    w = monodromy_noncentral_witness()
    e1, e2 = e(1, 3), e(2, 3)
    coeff = Scalar.q_power(-2) * (Scalar.q_power(1) - Scalar.q_power(-1))
    assert w == (e1 * e2 - e2 * e1).scale(coeff)
    assert not w.is_zero
