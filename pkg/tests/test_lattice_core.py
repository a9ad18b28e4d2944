"""Symplectic normal form, polarization types, Sp(2g, Z) membership and
conjugacy invariants."""

from random import Random

import pytest

from fibsurf import (
    AlternatingForm,
    ConjugacyInvariants,
    Degenerate,
    IntMatrix,
    NotAlternating,
    NotCoprincipal,
    NotSymplectic,
    OddDimension,
    PolarizationType,
    SymplecticMatrix,
    associated_degree,
    block_normal_gram,
    conjugacy_invariants,
    coprincipal_type,
    frobenius_basis,
    gram_in_basis,
    invert_unimodular,
    is_symplectic,
    polarization_type,
    principal_type,
    standard_symplectic_gram,
)
from helpers import random_symplectic, random_unimodular


def test_standard_gram_shape():
    j = standard_symplectic_gram(2)
    assert j == IntMatrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])


def test_alternating_form_rejects_bad_grams():
    with pytest.raises(NotAlternating):
        AlternatingForm(IntMatrix([[1, 0], [0, 1]]))
    with pytest.raises(NotAlternating):
        AlternatingForm(IntMatrix([[0, 1], [1, 0]]))
    with pytest.raises(NotAlternating):
        AlternatingForm(IntMatrix([[0, 1, 0], [-1, 0, 0]]))


def test_polarization_type_divisor_chain_enforced():
    with pytest.raises(ValueError):
        PolarizationType((2, 3))
    with pytest.raises(ValueError):
        PolarizationType((0, 2))
    assert tuple(PolarizationType((1, 2, 4))) == (1, 2, 4)
    assert len(coprincipal_type(3, 5)) == 3
    assert principal_type(2).divisors == (1, 1)


def test_frobenius_on_block_form_is_fixed_point():
    for divisors in [(1,), (3,), (1, 2), (1, 1, 4), (2, 6)]:
        ptype = PolarizationType(divisors)
        form = AlternatingForm(block_normal_gram(ptype))
        basis, found = frobenius_basis(form)
        assert found == ptype
        assert gram_in_basis(form.gram, basis) == block_normal_gram(ptype)


def test_frobenius_postcondition_random():
    rng = Random(201)
    for _ in range(60):
        k = rng.randint(1, 3)
        chain = [rng.randint(1, 3)]
        while len(chain) < k:
            chain.append(chain[-1] * rng.randint(1, 3))
        ptype = PolarizationType(tuple(chain))
        n = 2 * k
        p = random_unimodular(rng, n)
        gram = gram_in_basis(block_normal_gram(ptype), p)
        basis, found = frobenius_basis(AlternatingForm(gram))
        assert found == ptype
        assert gram_in_basis(gram, basis) == block_normal_gram(ptype)


def test_type_recovery_under_gl_conjugation():
    """The divisor chain is a GL(2k, Z)-invariant of the form."""
    rng = Random(202)
    cases = []
    for d in range(2, 10):
        cases += [(d,), (1, d), (1, 1, d), (1, d, d)]
    cases.append((1,))
    for divisors in cases:
        ptype = PolarizationType(divisors)
        reference = block_normal_gram(ptype)
        for _ in range(4):
            p = random_unimodular(rng, reference.rows)
            gram = gram_in_basis(reference, p)
            assert polarization_type(AlternatingForm(gram)) == ptype
            prod = 1
            for v in divisors:
                prod *= v
            assert gram.det() == prod * prod


def test_polarization_type_errors():
    with pytest.raises(OddDimension):
        polarization_type(AlternatingForm(IntMatrix([[0]])))
    degenerate = AlternatingForm(IntMatrix([[0, 0], [0, 0]]))
    with pytest.raises(Degenerate):
        polarization_type(degenerate)


def test_associated_degree():
    assert associated_degree(coprincipal_type(3, 4)) == 4
    assert associated_degree(principal_type(2)) == 1
    with pytest.raises(NotCoprincipal):
        associated_degree(PolarizationType((1, 2, 4)))
    with pytest.raises(NotCoprincipal):
        associated_degree(PolarizationType((2, 2)))


def test_is_symplectic_basics():
    g = 2
    assert is_symplectic(IntMatrix.identity(4), g)
    assert is_symplectic(standard_symplectic_gram(g), g)  # J itself
    assert not is_symplectic(IntMatrix.identity(4).scale(2), g)
    shear = IntMatrix([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert is_symplectic(shear, g)


def test_random_symplectic_generator_products():
    rng = Random(203)
    for g in (1, 2, 3):
        for _ in range(15):
            m = random_symplectic(rng, g)
            assert is_symplectic(m, g)
            assert m.det() == 1


def test_symplectic_matrix_wrapper_validates():
    with pytest.raises(NotSymplectic):
        SymplecticMatrix(IntMatrix.identity(4).scale(2), 2)
    from fibsurf import DimensionMismatch

    with pytest.raises(DimensionMismatch):
        SymplecticMatrix(IntMatrix.identity(3), 1)
    sm = SymplecticMatrix(IntMatrix.identity(4), 2)
    assert sm.g == 2


def test_conjugacy_invariants_structure():
    inv = conjugacy_invariants(IntMatrix.identity(4))
    assert isinstance(inv, ConjugacyInvariants)
    assert inv.char_poly == (1, -4, 6, -4, 1)  # (x-1)^4
    assert inv.unipotent is True


def test_conjugacy_invariants_stable_under_symplectic_conjugation():
    rng = Random(204)
    for g in (1, 2, 3):
        for _ in range(10):
            m = random_symplectic(rng, g)
            p = random_symplectic(rng, g)
            p_inv = invert_unimodular(p)
            conj = p_inv * m * p
            assert conjugacy_invariants(m) == conjugacy_invariants(conj)


def test_conjugacy_invariants_reject_odd_dimension():
    with pytest.raises(NotSymplectic):
        conjugacy_invariants(IntMatrix.identity(3))


def test_non_symplectic_input_rejected():
    with pytest.raises(NotSymplectic):
        conjugacy_invariants(IntMatrix([[2, 0], [0, 2]]))
