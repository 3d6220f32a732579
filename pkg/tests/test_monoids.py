import pytest

from ewkernel.cosmos import CosmosError, Field, Mor, compose, tensor
from ewkernel.monoids import (
    BUILTIN_NAMES,
    CommMonoid,
    MonoidMor,
    MonoidOver,
    builtin_algebra,
    builtin_morphisms,
    check_comm_monoid,
    check_internal_monoid,
    check_monoid_mor,
    compose_mor,
    coproduct,
    copairing,
    enumerate_monoid_mors,
    identity_mor,
    internal_to_over,
    monoid_mor_from_images,
    over_to_internal,
    unit_map,
)

from oracles import algebra_maps_brute_force, rows_of

F5 = Field(5)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("field", [Field(), F5, Field(2)], ids=["q", "f5", "f2"])
def test_builtin_algebras_satisfy_the_laws(name, field):
    assert check_comm_monoid(builtin_algebra(name, field)).ok


def test_builtin_dimensions():
    dims = {n: builtin_algebra(n).dim for n in BUILTIN_NAMES}
    assert dims == {"ground": 1, "dual_numbers": 2, "split_pair": 2, "z2_group_algebra": 2, "t_cubed": 3}


def test_dual_numbers_square_to_zero():
    D = builtin_algebra("dual_numbers")
    t = D.element([0, 1])
    assert compose(D.product, tensor(t, t)).is_zero()


def test_unknown_builtin():
    with pytest.raises(CosmosError):
        builtin_algebra("octonions")


def test_corrupted_product_entry_is_caught_with_witness():
    D = builtin_algebra("dual_numbers")
    rows = D.product.rows()
    rows[1][1 * 2 + 0] = 0  # t·1 set to zero
    broken = CommMonoid(D.carrier, D.unit, Mor.from_rows(rows), "broken")
    rep = check_comm_monoid(broken)
    assert not rep["right unit"].ok
    assert not rep["commutativity"].ok
    assert rep["right unit"].witness is not None


def test_noncommutative_corruption_breaks_associativity():
    # t·t = t^2 but also t·t^2 = t^2 while t^2·t = 0
    T = builtin_algebra("t_cubed")
    rows = T.product.rows()
    rows[2][1 * 3 + 2] = 1
    broken = CommMonoid(T.carrier, T.unit, Mor.from_rows(rows), "broken")
    rep = check_comm_monoid(broken)
    assert not rep["associativity"].ok
    assert not rep["commutativity"].ok


@pytest.mark.parametrize("f", builtin_morphisms(), ids=lambda f: f.name)
def test_builtin_morphisms_are_algebra_maps(f):
    assert check_monoid_mor(f).ok


def test_non_multiplicative_map_is_rejected():
    D = builtin_algebra("dual_numbers")
    k = builtin_algebra("ground")
    f = monoid_mor_from_images(D, k, [[1], [1]], "bad")
    rep = check_monoid_mor(f)
    assert rep["preserves unit"].ok
    assert not rep["preserves product"].ok


def test_coproduct_and_copairing():
    D = builtin_algebra("dual_numbers")
    Z = builtin_algebra("z2_group_algebra")
    B, p, p2 = coproduct(D, Z)
    assert B.dim == 4
    assert check_comm_monoid(B).ok and check_monoid_mor(p).ok and check_monoid_mor(p2).ok
    # the copairing of the coprojections is the identity
    assert copairing(B, p, p2) == B.id()


def test_composition_and_identity():
    f = next(m for m in builtin_morphisms() if m.name == "unit_dual_numbers")
    g = next(m for m in builtin_morphisms() if m.name == "augmentation_dual")
    gf = compose_mor(g, f)
    assert gf == identity_mor(f.src)
    assert compose_mor(f, identity_mor(f.src)) == f


def _table(b):
    return rows_of(b.product, b.field.p), rows_of(b.unit, b.field.p)


@pytest.mark.parametrize(
    "src,dst,count",
    [
        ("dual_numbers", "dual_numbers", 5),
        ("dual_numbers", "ground", 1),
        ("z2_group_algebra", "z2_group_algebra", 4),
        ("split_pair", "split_pair", 4),
        ("z2_group_algebra", "split_pair", 4),
        ("split_pair", "dual_numbers", 2),
    ],
)
def test_exhaustive_enumeration_over_f5(src, dst, count):
    # counts were derived with the brute-force oracle and are frozen here
    a, b = builtin_algebra(src, F5), builtin_algebra(dst, F5)
    found = enumerate_monoid_mors(a, b)
    assert len(found) == count
    pa, ua = _table(a)
    pb, ub = _table(b)
    oracle = algebra_maps_brute_force(pa, ua, pb, ub, a.dim, b.dim, 5)
    assert sorted(rows_of(f.map, 5) for f in found) == sorted(oracle)


def test_enumeration_needs_a_finite_field():
    with pytest.raises(CosmosError):
        enumerate_monoid_mors(builtin_algebra("ground"), builtin_algebra("dual_numbers"))


@pytest.mark.parametrize("f", builtin_morphisms(), ids=lambda f: f.name)
def test_algebra_over_base_is_an_internal_monoid(f):
    internal = over_to_internal(MonoidOver(f.src, f.dst, f))
    assert check_internal_monoid(internal).ok
    back = internal_to_over(internal)
    assert back.total.product == f.dst.product
    assert back.total.unit == f.dst.unit
    assert back.leg.map == f.map


def test_unit_map_is_unique_from_ground():
    D = builtin_algebra("dual_numbers", F5)
    assert [rows_of(m.map, 5) for m in enumerate_monoid_mors(builtin_algebra("ground", F5), D)] == [
        rows_of(unit_map(D).map, 5)
    ]
