"""Twist element: centrality, the twist condition, naturality, cyclic
rotation identities, and eigenvalues on standard modules."""

from tlcat.morphism import Morphism, identity, t
from tlcat.scalar import Scalar
from tlcat.standard import StandardModule, eigenvalue_on_standard
from tlcat.twist import (
    gamma_eigenvalue,
    twist_element,
    twist_element_reversed,
    twist_inverse,
    verify_centrality,
    verify_cyclic_lemma,
    verify_det_t1,
    verify_gamma_consistency,
    verify_twist_axiom,
    verify_twist_naturality_exhaustive,
)


def test_twist_small_explicit():
    # c_0 = empty identity, c_1 = q^{3/2} 1 (single strand, no crossings)
    assert twist_element(0) == identity(0)
    assert twist_element(1) == identity(1).scale(Scalar.s_power(6))
    # c_2 = q^3 (t_1)^2
    assert twist_element(2) == (t(1, 2) * t(1, 2)).scale(Scalar.s_power(12))


def test_centrality_and_inverse():
    for n in (2, 3, 4):
        assert verify_centrality(n).ok
        assert twist_element(n) * twist_inverse(n) == identity(n)


def test_twist_condition():
    assert verify_twist_axiom(4).ok


def test_both_product_orders_agree():
    for n in range(0, 5):
        assert twist_element(n) == twist_element_reversed(n)


def test_naturality():
    assert verify_twist_naturality_exhaustive(4).ok


def test_cyclic_lemma():
    for n in (2, 3, 4):
        assert verify_cyclic_lemma(n).ok


def test_gamma_on_standard_modules():
    # independent oracle: act the central element on each standard module
    # and read off the scalar
    for n in range(1, 6):
        for k in range(n % 2, n + 1, 2):
            module = StandardModule(n, k)
            if module.dim == 0:
                continue
            got = eigenvalue_on_standard(twist_element(n), module)
            assert got == gamma_eigenvalue(k)
            assert got == Scalar.q_power(  # q^{k(k+2)/2}
                __import__("fractions").Fraction(k * (k + 2), 2))
    assert verify_gamma_consistency(5).ok


def test_gamma_example():
    # the n = 4, k = 2 module has central eigenvalue q^4 = s^16
    assert gamma_eigenvalue(2) == Scalar.s_power(16)


def test_det_t1():
    assert verify_det_t1(4).ok
