import random

import pytest
from hypothesis import given, strategies as st

from ewkernel.cosmos import Mor, Obj, compose, tensor
from ewkernel.modules import (
    Bimodule,
    ModuleError,
    ModuleMor,
    RightModule,
    bimodule_from_monoid_legs,
    bimodule_to_module,
    check_bimodule,
    check_module,
    check_module_mor,
    hom_module_object,
    module_to_bimodule,
    opposite_left_action,
    random_bimodule,
    random_module,
    random_module_mor,
    regular_module,
    restrict_module,
)
from ewkernel.monoids import BUILTIN_NAMES, builtin_algebra, builtin_morphisms

from oracles import equivariant_maps_dim, module_ops

names = st.sampled_from(BUILTIN_NAMES)
seeds = st.integers(0, 10**6)


@given(names, seeds)
def test_random_modules_satisfy_the_laws(name, seed):
    b = builtin_algebra(name)
    x = random_module(b, random.Random(seed))
    assert 1 <= x.dim <= 3
    assert check_module(x).ok


@given(names, seeds)
def test_random_module_maps_are_equivariant(name, seed):
    rng = random.Random(seed)
    b = builtin_algebra(name)
    x, y = random_module(b, rng), random_module(b, rng)
    assert check_module_mor(random_module_mor(x, y, rng)).ok


@given(names, seeds)
def test_equivariant_maps_dimension_matches_oracle(name, seed):
    rng = random.Random(seed)
    b = builtin_algebra(name)
    x, y = random_module(b, rng), random_module(b, rng)
    eq = hom_module_object(x, y)
    assert eq.sub.dim == equivariant_maps_dim(module_ops(x), module_ops(y), x.dim, y.dim)


def test_residue_field_hom_dimensions(D, k_over_D):
    # derived with the brute-force oracle: both are one-dimensional
    assert hom_module_object(k_over_D, regular_module(D)).sub.dim == 1
    assert hom_module_object(k_over_D, k_over_D).sub.dim == 1


def test_wrong_action_is_rejected(D):
    # t acting as the identity on a line violates t·t = 0
    bad = RightModule(D, Obj(1), Mor.from_rows([[1, 1]]), "bad")
    rep = check_module(bad)
    assert not rep["associativity"].ok


def test_non_equivariant_map_is_rejected(D, k_over_D):
    h = ModuleMor(k_over_D, regular_module(D), Mor.from_rows([[1], [0]]))
    assert not check_module_mor(h).ok
    good = ModuleMor(k_over_D, regular_module(D), Mor.from_rows([[0], [1]]))
    assert check_module_mor(good).ok


def test_base_mismatch_raises(D, k_over_D):
    k = builtin_algebra("ground")
    with pytest.raises(ModuleError):
        ModuleMor(k_over_D, regular_module(k), Mor.from_rows([[1]]))


@pytest.mark.parametrize("f", builtin_morphisms(), ids=lambda f: f.name)
def test_restriction_and_legs(f):
    y = regular_module(f.dst)
    assert check_module(restrict_module(f, y)).ok
    X = bimodule_from_monoid_legs(f, f.__class__(f.dst, f.dst, f.dst.id()))
    assert check_bimodule(X).ok


@given(st.sampled_from([("dual_numbers", "ground"), ("split_pair", "dual_numbers"), ("ground", "z2_group_algebra")]), seeds)
def test_bimodule_and_coproduct_module_round_trip(pair, seed):
    b, b2 = (builtin_algebra(n) for n in pair)
    X = random_bimodule(b, b2, random.Random(seed))
    assert check_bimodule(X).ok
    back = module_to_bimodule(bimodule_to_module(X), b, b2)
    assert back.left_action == X.left_action
    assert back.right_action == X.right_action


def test_opposite_action_of_regular_module(D):
    X = opposite_left_action(regular_module(D))
    assert check_bimodule(X).ok
    assert X.left_action == D.product


def test_bimodule_with_clashing_actions_is_rejected(D):
    # on a plane, t acts on the left as e0 -> e1 and on the right as e1 -> e0;
    # each is a module structure but the two do not commute
    shift = {0: [0, 1], 1: [0, 0]}
    back = {0: [0, 0], 1: [1, 0]}
    left = Mor.from_function(Obj(4), Obj(2), lambda i, c: (int(i == c % 2) if c // 2 == 0 else shift[c % 2][i]))
    right = Mor.from_function(Obj(4), Obj(2), lambda i, c: (int(i == c // 2) if c % 2 == 0 else back[c // 2][i]))
    assert check_module(RightModule(D, Obj(2), right)).ok
    X = Bimodule(D, D, Obj(2), left, right, "clash")
    rep = check_bimodule(X)
    assert not rep.ok
