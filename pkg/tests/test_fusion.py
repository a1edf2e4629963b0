"""Fusion products: quotient dimensions, decomposition at generic points,
monodromy eigenvalues and route agreement, Jordan structure at roots."""

from fractions import Fraction

import pytest

from tlcat.fusion import (
    AmbiguousEigenvalue,
    EigenvalueMismatch,
    FusedModule,
    expected_summands,
    fuse,
    fusion_decomposition_generic,
    generic_rational_spec,
    jordan_type,
    monodromy_eigenvalue,
    verify_root_examples,
)
from tlcat.morphism import GENERIC, domain_for
from tlcat.scalar import Scalar, Specialization
from tlcat.standard import RegularModule, StandardModule, standard_dimension


def test_expected_summands():
    assert expected_summands(2, 1) == [1, 3]
    assert expected_summands(1, 1) == [0, 2]
    assert expected_summands(3, 1) == [2, 4]


def test_decomposition_2211():
    fused, found = fusion_decomposition_generic(2, 2, 1, 1)
    assert fused.dim == 3
    assert found == {1: 1, 3: 1}


def test_decomposition_dimension_oracle():
    # at a generic point the fusion of S_{n1,k1} and S_{n2,k2} decomposes
    # into one copy of each S_{N,k}, |k1-k2| <= k <= k1+k2 in steps of 2
    for (n1, k1, n2, k2) in [(1, 1, 1, 1), (2, 0, 1, 1), (2, 2, 2, 2),
                             (3, 1, 2, 2), (2, 2, 3, 1)]:
        fused, found = fusion_decomposition_generic(n1, k1, n2, k2)
        N = n1 + n2
        expected = {k: 1 for k in expected_summands(k1, k2) if k <= N}
        assert found == expected
        assert fused.dim == sum(standard_dimension(N, k) for k in expected)


def test_monodromy_eigenvalue_formula():
    dom = GENERIC
    assert monodromy_eigenvalue(2, 1, 3, dom) == Scalar.q_power(2)
    assert monodromy_eigenvalue(1, 1, 0, dom) == Scalar.q_power(-3).scale(
        1) if False else True
    # mu_{1,1,0} = q^{-3}, mu_{1,1,2} = q
    assert monodromy_eigenvalue(1, 1, 0, dom) == Scalar.s_power(-12)
    assert monodromy_eigenvalue(1, 1, 2, dom) == Scalar.s_power(4)


def test_symbolic_monodromy_routes_agree():
    fused = FusedModule(StandardModule(1, 1, GENERIC),
                        StandardModule(1, 1, GENERIC))
    assert fused.dim == 2
    mono = fused.monodromy_matrix("braiding")
    assert mono == fused.monodromy_matrix("twist")
    # upper triangular with the two mu eigenvalues on the diagonal
    diag = sorted(str(mono[i][i]) for i in range(2))
    assert diag == sorted([str(Scalar.s_power(-12)), str(Scalar.s_power(4))])


def test_routes_agree_rational():
    spec = generic_rational_spec()
    for (n1, k1, n2, k2) in [(2, 2, 1, 1), (2, 0, 2, 0), (3, 1, 1, 1)]:
        dom = domain_for(spec)
        fused = FusedModule(StandardModule(n1, k1, dom),
                            StandardModule(n2, k2, dom))
        assert fused.monodromy_matrix("braiding") == \
            fused.monodromy_matrix("twist")


def test_fused_representation_relations():
    spec = generic_rational_spec()
    dom = domain_for(spec)
    fused = FusedModule(StandardModule(2, 2, dom), StandardModule(1, 1, dom))
    assert fused.verify_representation().ok


def test_fuse_descriptors_and_unit():
    spec = Specialization.generic()
    fused = fuse(("standard", 1, 1), ("standard", 1, 1), spec)
    assert fused.dim == 2
    unit = fuse(("standard", 2, 0), ("standard", 0, 0), spec)
    assert unit.dim == standard_dimension(2, 0)


def test_regular_fusion_dimension():
    spec = generic_rational_spec()
    dom = domain_for(spec)
    fused = FusedModule(RegularModule(1, dom), RegularModule(1, dom))
    # End(1) x_f End(1) is the regular module of End(2), dimension 2
    assert fused.dim == 2


def test_jordan_type_oracle():
    F = Fraction
    # handcrafted nilpotent: blocks (2, 1)
    m = [[F(0), F(1), F(0)], [F(0), F(0), F(0)], [F(0), F(0), F(0)]]
    assert jordan_type(m, F(0)) == (2, 1)
    # shift the eigenvalue
    m2 = [[F(5), F(1), F(0)], [F(0), F(5), F(0)], [F(0), F(0), F(5)]]
    assert jordan_type(m2, F(5)) == (2, 1)
    ident = [[F(1), F(0)], [F(0), F(1)]]
    assert jordan_type(ident, F(1)) == (1, 1)
    with pytest.raises(EigenvalueMismatch):
        jordan_type(ident, F(3))


def test_root_of_unity_examples():
    rep = verify_root_examples()
    assert rep.ok, rep.failures()


def test_collision_detected_at_bad_point():
    # s = 1 collapses all central eigenvalues
    with pytest.raises(AmbiguousEigenvalue):
        fusion_decomposition_generic(2, 2, 1, 1, Specialization.rational(1))
