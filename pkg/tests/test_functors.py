import random

import pytest
from hypothesis import given, strategies as st

from ewkernel.cosmos import Mor, Obj, compose, identity, tensor
from ewkernel.functors import (
    Compose,
    HomModule,
    Identity,
    LaxFunctor,
    LaxStructure,
    Restrict,
    TensorBimodule,
    canonical_left_module,
    check_functoriality,
    check_lambda,
    check_lax_axioms,
    check_strength_laws,
    cocontinuity_probe,
    ew_roundtrip,
    identity_lax,
    lambda_component,
)
from ewkernel.module_tensor import unit_iso
from ewkernel.modules import (
    ModuleError,
    ModuleMor,
    check_bimodule,
    identity_module_mor,
    opposite_left_action,
    random_bimodule,
    random_module,
    random_module_mor,
    regular_bimodule,
    regular_module,
)
from ewkernel.monoids import BUILTIN_NAMES, builtin_algebra, builtin_morphisms, identity_mor

names = st.sampled_from(BUILTIN_NAMES)
seeds = st.integers(0, 10**6)


def _exprs(b, rng):
    X = random_bimodule(b, b, rng)
    return [TensorBimodule(X), HomModule(X), Compose(TensorBimodule(X), HomModule(X)), Restrict(identity_mor(b)), Identity(b)]


@given(names, seeds)
def test_functoriality_and_strength_for_every_node(name, seed):
    rng = random.Random(seed)
    b = builtin_algebra(name)
    ms = [random_module(b, rng) for _ in range(3)]
    for F in _exprs(b, rng):
        h = random_module_mor(ms[0], ms[1], rng)
        g = random_module_mor(ms[1], ms[2], rng)
        assert check_functoriality(F, g, h).ok, F
        assert check_strength_laws(F, ms[0], Obj(2), Obj(2), h).ok, F
        assert check_lambda(F, ms[1], Obj(2)).ok, F


def test_identity_acts_trivially(D, k_over_D):
    assert Identity(D).apply_obj(k_over_D) is k_over_D
    h = identity_module_mor(k_over_D)
    assert Identity(D).apply_mor(h).map == h.map


def test_tensoring_with_the_regular_bimodule_is_the_identity_up_to_unit_iso(D, rng):
    F = TensorBimodule(regular_bimodule(D))
    for _ in range(5):
        z = random_module(D, rng)
        assert lambda_component(F, z).is_invertible()
        assert F.apply_obj(z).dim == z.dim


def test_restriction_strength_is_the_identity(D, rng):
    f = next(m for m in builtin_morphisms() if m.name == "unit_dual_numbers")
    z = random_module(D, rng)
    t = Restrict(f).strength(Obj(2), z)
    assert t.map == identity(t.map.src)


def test_strength_is_trivial_at_the_unit_object(D, rng):
    z = random_module(D, rng)
    X = random_bimodule(D, D, rng)
    t = TensorBimodule(X).strength(Obj(1), z)
    assert t.map == identity(t.map.src)


def test_hom_out_of_residue_field_kills_lambda(D, k_over_D):
    H = HomModule(opposite_left_action(k_over_D))
    lam = lambda_component(H, k_over_D)
    assert (lam.src.dim, lam.dst.dim) == (1, 1)
    assert lam.map.is_zero()
    verdict = cocontinuity_probe(H, [k_over_D])
    assert not verdict.iso_on_all_samples
    assert verdict.witness is k_over_D


def test_hom_out_of_residue_field_on_the_augmentation(D, k_over_D):
    # applied to D -> k the functor gives the zero map between lines
    H = HomModule(opposite_left_action(k_over_D))
    aug = ModuleMor(regular_module(D), k_over_D, Mor.from_rows([[1, 0]]))
    out = H.apply_mor(aug)
    assert (out.src.dim, out.dst.dim) == (1, 1)
    assert out.map.is_zero()


def test_canonical_module_of_hom_out_of_residue_field(D, k_over_D):
    can = canonical_left_module(HomModule(opposite_left_action(k_over_D)))
    assert can.dim == 1
    assert check_bimodule(can).ok
    # t acts by zero on the line
    t = Mor.from_rows([[0], [1]])
    assert compose(can.left_action, tensor(t, can.id())).is_zero()


def test_canonical_module_of_tensor_functor_is_the_bimodule(rng):
    b = builtin_algebra("t_cubed")
    X = random_bimodule(b, b, rng)
    can = canonical_left_module(TensorBimodule(X))
    assert unit_iso(X).is_invertible()
    assert check_bimodule(can).ok
    assert can.dim == X.dim


@given(names, seeds)
def test_eilenberg_watts_round_trip(name, seed):
    rng = random.Random(seed)
    b = builtin_algebra(name)
    X = random_bimodule(b, b, rng)
    sample = [regular_module(b)] + [random_module(b, rng) for _ in range(2)]
    assert ew_roundtrip(X, sample).ok


def test_base_mismatch_in_composition(D):
    k = builtin_algebra("ground")
    with pytest.raises(ModuleError):
        Compose(Identity(k), Identity(D))


def test_identity_lax_axioms(D, rng):
    xs = [random_module(D, rng) for _ in range(3)]
    assert check_lax_axioms(identity_lax(D), xs, rng, weight=Obj(2)).ok


def test_corrupted_lax_coherence_is_rejected(D, rng):
    xs = [regular_module(D)] + [random_module(D, rng) for _ in range(2)]
    good = identity_lax(D)

    def doubled(x, y):
        m = good.binary(x, y)
        return ModuleMor(m.src, m.dst, m.map.scale(2))

    bad = LaxFunctor(good.expr, LaxStructure(good.unit, doubled), "doubled")
    rep = check_lax_axioms(bad, xs, rng)
    assert not rep.ok
    assert any(r.name.startswith("left unit") for r in rep.failures())
