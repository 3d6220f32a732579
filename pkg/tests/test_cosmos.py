import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ewkernel.cosmos import (
    QQ,
    CosmosError,
    DimensionMismatch,
    FactorizationError,
    Field,
    FieldMismatch,
    Mor,
    Obj,
    braiding,
    coequalizer,
    compose,
    curry,
    equalizer,
    factor_through,
    identity,
    induce_through_coequalizer,
    kernel_basis,
    parse_fraction,
    shuffle,
    tensor,
    uncurry,
    zero,
)
from ewkernel.harness import closed_structure_laws, cosmos_tuple_laws, random_mor

from oracles import kron, matmul, rank, rows_of

dims = st.integers(min_value=1, max_value=4)
small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def matrices(draw, r=None, c=None):
    r = r or draw(dims)
    c = c or draw(dims)
    rows = [[draw(small) for _ in range(c)] for _ in range(r)]
    return Mor.from_rows(rows)


# -- fields and scalars ------------------------------------------------------


def test_field_parsing_and_tags():
    assert Field.parse("q") == QQ
    assert Field.parse("fp:5").p == 5
    assert Field.parse("fp:5").tag == "fp:5"
    with pytest.raises(CosmosError):
        Field.parse("fp:6")
    with pytest.raises(CosmosError):
        Field.parse("reals")


def test_fraction_parsing_rejects_zero_denominator():
    assert parse_fraction("-3/4") == Fraction(-3, 4)
    with pytest.raises(CosmosError):
        parse_fraction("1/0")


def test_prime_field_reduces_fractions():
    F5 = Field(5)
    assert int(F5.scalar("7")) == 2
    assert int(F5.scalar("1/2")) == 3  # 2 * 3 = 6 = 1 mod 5
    with pytest.raises(CosmosError):
        F5.scalar("1/5")


def test_mixing_fields_is_an_error():
    a = Mor.from_rows([[1]])
    b = Mor.from_rows([[1]], Field(5))
    with pytest.raises(FieldMismatch):
        compose(a, b)
    with pytest.raises(FieldMismatch):
        tensor(a, b)


def test_composition_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(Mor.from_rows([[1, 2]]), Mor.from_rows([[1, 2]]))


# -- Kronecker convention against a hand-written oracle -----------------------


@given(matrices(), matrices())
def test_tensor_matches_naive_kronecker(f, g):
    assert [[Fraction(v) for v in r] for r in kron(rows_of(f), rows_of(g))] == rows_of(tensor(f, g))


@given(matrices(2, 3), matrices(3, 2))
def test_composition_matches_naive_product(g, f):
    assert matmul(rows_of(g), rows_of(f)) == rows_of(compose(g, f))


def test_lexicographic_index_convention():
    # e_i ⊗ e_j lands at index i*dim(y)+j
    e1 = Mor.from_rows([[0], [1], [0]])
    e0 = Mor.from_rows([[1], [0]])
    v = tensor(e1, e0)
    assert [r[0] for r in rows_of(v)] == [0, 0, 1, 0, 0, 0]


def test_braiding_swaps_factors():
    x, y = Obj(2), Obj(3)
    a = Mor.from_rows([[1], [2]])
    b = Mor.from_rows([[3], [4], [5]])
    assert compose(braiding(x, y), tensor(a, b)) == tensor(b, a)


def test_shuffle_is_a_permutation():
    s = shuffle([2, 3, 2], [2, 0, 1])
    assert s.is_invertible()
    assert rank(rows_of(s)) == 12


# -- closed structure ---------------------------------------------------------


@given(st.integers(0, 10**6))
def test_cosmos_coherence_on_random_tuples(seed):
    rep = cosmos_tuple_laws(random.Random(seed), QQ, 4)
    assert rep.ok, rep.failures()


@given(st.integers(0, 10**6))
def test_closed_structure_on_random_samples(seed):
    rep = closed_structure_laws(random.Random(seed), QQ, 3)
    assert rep.ok, rep.failures()


@given(st.integers(0, 10**6))
def test_closed_structure_over_f5(seed):
    rep = closed_structure_laws(random.Random(seed), Field(5), 3)
    assert rep.ok, rep.failures()


def test_curry_requires_declared_factorization():
    f = Mor.from_rows([[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        curry(f, Obj(2), Obj(2))
    with pytest.raises(DimensionMismatch):
        uncurry(Mor.from_rows([[1], [2], [3]]), Obj(2), Obj(2))


# -- quotients and kernels ----------------------------------------------------


@given(matrices())
def test_coequalizer_dimension_matches_oracle(f):
    g = zero(f.src, f.dst)
    c = coequalizer(f, g)
    assert c.quot.dim == f.dst.dim - rank(rows_of(f))
    # the projection kills the image and the section splits it
    assert compose(c.proj, f) == compose(c.proj, g)
    assert compose(c.proj, c.section) == identity(c.quot)


@given(matrices())
def test_equalizer_is_kernel(f):
    e = equalizer(f, zero(f.src, f.dst))
    assert e.sub.dim == f.src.dim - rank(rows_of(f))
    assert compose(f, e.incl).is_zero()
    assert compose(e.retr, e.incl) == identity(e.sub)


@given(matrices())
def test_kernel_basis_vectors_are_killed(f):
    basis, _, _ = kernel_basis(f)
    for vec in basis:
        v = Mor.from_rows([[x] for x in vec])
        assert compose(f, v).is_zero()


def test_inducing_through_a_quotient_names_the_violation():
    f = Mor.from_rows([[1], [0]])
    g = zero(f.src, f.dst)
    c = coequalizer(f, g)  # kills the first coordinate
    good = Mor.from_rows([[0, 5]])
    assert compose(induce_through_coequalizer(c, good), c.proj) == good
    bad = Mor.from_rows([[1, 5]])
    with pytest.raises(FactorizationError) as info:
        induce_through_coequalizer(c, bad)
    assert info.value.witness is not None


def test_corrupted_section_is_detected():
    f = Mor.from_rows([[1], [1]])
    c = coequalizer(f, zero(f.src, f.dst))
    h = Mor.from_rows([[1, -1]])
    assert compose(factor_through(c, h), c.proj) == h
    broken = type(c)(c.quot, c.proj, Mor.from_rows([[1], [1]]), c.f, c.g)
    with pytest.raises(FactorizationError):
        factor_through(broken, h)


def test_random_mor_is_seeded():
    a = random_mor(random.Random(3), QQ, 3, 2)
    b = random_mor(random.Random(3), QQ, 3, 2)
    assert a == b
