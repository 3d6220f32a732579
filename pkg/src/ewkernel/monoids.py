"""Commutative monoid objects: finite-dimensional commutative algebras.

An algebra is given by its structure constants: the unit as a column
``c -> b`` and the product as a matrix ``b⊗b -> b`` in the Kronecker basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .cosmos import (
    QQ,
    UNIT,
    CosmosError,
    Field,
    FieldMismatch,
    Mor,
    Obj,
    braiding,
    compose,
    identity,
    shuffle,
    tensor,
    tensor_obj,
)
from .laws import LawReport


@dataclass(eq=False)
class CommMonoid:
    carrier: Obj
    unit: Mor
    product: Mor
    name: str | None = None

    def __post_init__(self):
        if self.unit.src != UNIT or self.unit.dst != self.carrier:
            raise CosmosError("unit must be a map c -> b")
        if self.product.src != tensor_obj(self.carrier, self.carrier) or self.product.dst != self.carrier:
            raise CosmosError("product must be a map b⊗b -> b")
        if self.unit.field != self.product.field:
            raise FieldMismatch("unit and product live over different fields")

    @property
    def field(self) -> Field:
        return self.unit.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def id(self) -> Mor:
        return identity(self.carrier, self.field)

    def element(self, coords) -> Mor:
        """A point ``c -> b`` from its coordinates."""
        return Mor.from_rows([[c] for c in coords], self.field, src=1)

    def multiplication_by(self, beta: Mor) -> Mor:
        """The linear map ``v ↦ v·beta`` on the carrier."""
        return compose(self.product, tensor(self.id(), beta))

    def same_as(self, other: "CommMonoid") -> bool:
        return self is other or (
            self.carrier == other.carrier and self.unit == other.unit and self.product == other.product
        )

    def __repr__(self):
        return f"CommMonoid({self.name or 'anonymous'}, dim={self.dim}, {self.field})"


def check_comm_monoid(b: CommMonoid) -> LawReport:
    rep = LawReport()
    ib = b.id()
    m = b.product
    rep.equal("associativity", compose(m, tensor(m, ib)), compose(m, tensor(ib, m)))
    rep.equal("left unit", compose(m, tensor(b.unit, ib)), ib)
    rep.equal("right unit", compose(m, tensor(ib, b.unit)), ib)
    rep.equal("commutativity", compose(m, braiding(b.carrier, b.carrier, b.field)), m)
    return rep


@dataclass(eq=False)
class MonoidMor:
    src: CommMonoid
    dst: CommMonoid
    map: Mor
    name: str | None = None

    def __post_init__(self):
        if self.map.src != self.src.carrier or self.map.dst != self.dst.carrier:
            raise CosmosError("monoid morphism has the wrong shape")

    def __eq__(self, other):
        if not isinstance(other, MonoidMor):
            return NotImplemented
        return self.src.same_as(other.src) and self.dst.same_as(other.dst) and self.map == other.map

    __hash__ = None

    def __repr__(self):
        return f"MonoidMor({self.name or '?'}: {self.src.name} -> {self.dst.name})"


def check_monoid_mor(f: MonoidMor) -> LawReport:
    rep = LawReport()
    rep.equal("preserves unit", compose(f.map, f.src.unit), f.dst.unit)
    rep.equal(
        "preserves product",
        compose(f.map, f.src.product),
        compose(f.dst.product, tensor(f.map, f.map)),
    )
    return rep


def identity_mor(b: CommMonoid) -> MonoidMor:
    return MonoidMor(b, b, b.id(), f"id_{b.name}")


def compose_mor(g: MonoidMor, f: MonoidMor) -> MonoidMor:
    if not g.src.same_as(f.dst):
        raise CosmosError("monoid morphisms are not composable")
    return MonoidMor(f.src, g.dst, compose(g.map, f.map))


def coproduct(b: CommMonoid, b2: CommMonoid):
    """The tensor algebra ``b⊗b2`` with its two coprojections."""
    if b.field != b2.field:
        raise FieldMismatch(f"cannot form the coproduct of algebras over {b.field} and {b2.field}")
    field = b.field
    d1, d2 = b.dim, b2.dim
    # (b⊗b2)⊗(b⊗b2) -> b⊗b⊗b2⊗b2 -> b⊗b2
    middle = shuffle([d1, d2, d1, d2], [0, 2, 1, 3], field)
    prod = compose(tensor(b.product, b2.product), middle)
    unit = tensor(b.unit, b2.unit)
    name = f"{b.name}⊗{b2.name}" if b.name and b2.name else None
    total = CommMonoid(tensor_obj(b.carrier, b2.carrier), unit, prod, name)
    p = MonoidMor(b, total, tensor(b.id(), b2.unit), "p")
    p2 = MonoidMor(b2, total, tensor(b.unit, b2.id()), "p'")
    return total, p, p2


def copairing(total_target: CommMonoid, f: MonoidMor, f2: MonoidMor) -> Mor:
    """``m ∘ (f⊗f2)``: the map out of the coproduct induced by two legs."""
    return compose(total_target.product, tensor(f.map, f2.map))


# ---------------------------------------------------------------------------
# builtin algebras


def algebra_from_table(name: str, dim: int, unit_coords, mult, field: Field = QQ) -> CommMonoid:
    """``mult(i, j)`` returns the coordinate list of ``e_i·e_j``."""
    carrier = Obj(dim)
    cols = {}
    for i, j in iproduct(range(dim), range(dim)):
        cols[i * dim + j] = mult(i, j)
    prod = Mor.from_function(tensor_obj(carrier, carrier), carrier, lambda r, c: cols[c][r], field)
    unit = Mor.from_function(UNIT, carrier, lambda r, c: unit_coords[r], field)
    return CommMonoid(carrier, unit, prod, name)


def _truncated_polynomial(name: str, n: int, field: Field) -> CommMonoid:
    def mult(i, j):
        v = [0] * n
        if i + j < n:
            v[i + j] = 1
        return v

    return algebra_from_table(name, n, [1] + [0] * (n - 1), mult, field)


BUILTIN_NAMES = ("ground", "dual_numbers", "split_pair", "z2_group_algebra", "t_cubed")


def builtin_algebra(name: str, field: Field = QQ) -> CommMonoid:
    """Named small algebras.

    ground            k
    dual_numbers      k[t]/(t^2), basis 1, t
    split_pair        k x k, basis of orthogonal idempotents e1, e2 (unit e1 + e2)
    z2_group_algebra  k[s]/(s^2 - 1), basis 1, s
    t_cubed           k[t]/(t^3), basis 1, t, t^2
    """
    if name == "ground":
        return _truncated_polynomial("ground", 1, field)
    if name == "dual_numbers":
        return _truncated_polynomial("dual_numbers", 2, field)
    if name == "t_cubed":
        return _truncated_polynomial("t_cubed", 3, field)
    if name == "split_pair":
        return algebra_from_table(
            "split_pair", 2, [1, 1], lambda i, j: [int(i == j == 0), int(i == j == 1)], field
        )
    if name == "z2_group_algebra":
        return algebra_from_table(
            "z2_group_algebra", 2, [1, 0], lambda i, j: [int((i + j) % 2 == 0), int((i + j) % 2 == 1)], field
        )
    raise CosmosError(f"unknown builtin algebra {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def unit_map(b: CommMonoid) -> MonoidMor:
    """The unique algebra map from the ground field."""
    k = builtin_algebra("ground", b.field)
    return MonoidMor(k, b, b.unit, f"unit_{b.name}")


def monoid_mor_from_images(src: CommMonoid, dst: CommMonoid, images, name: str | None = None) -> MonoidMor:
    """A linear map given by the coordinates of the images of the basis of ``src``."""
    m = Mor.from_function(src.carrier, dst.carrier, lambda r, c: images[c][r], src.field)
    return MonoidMor(src, dst, m, name)


def builtin_morphisms(field: Field = QQ) -> list[MonoidMor]:
    """A curated family of algebra maps among the builtins.

    Includes identities, unit maps, augmentations, the two projections of
    ``split_pair``, the Fourier isomorphism ``z2_group_algebra -> split_pair``
    when 2 is invertible, and some maps between truncated polynomial rings.
    Every entry passes :func:`check_monoid_mor` over ``field``.
    """
    k = builtin_algebra("ground", field)
    D = builtin_algebra("dual_numbers", field)
    P = builtin_algebra("split_pair", field)
    Z = builtin_algebra("z2_group_algebra", field)
    T = builtin_algebra("t_cubed", field)
    out = [identity_mor(b) for b in (k, D, P, Z, T)]
    out += [unit_map(b) for b in (D, P, Z, T)]
    out.append(monoid_mor_from_images(D, k, [[1], [0]], "augmentation_dual"))
    out.append(monoid_mor_from_images(T, k, [[1], [0], [0]], "augmentation_t_cubed"))
    out.append(monoid_mor_from_images(P, k, [[1], [0]], "first_projection"))
    out.append(monoid_mor_from_images(P, k, [[0], [1]], "second_projection"))
    out.append(monoid_mor_from_images(Z, k, [[1], [1]], "trivial_character"))
    if field.characteristic != 2:
        out.append(monoid_mor_from_images(Z, k, [[1], [-1]], "sign_character"))
        out.append(monoid_mor_from_images(Z, P, [[1, 1], [1, -1]], "fourier"))
    out.append(monoid_mor_from_images(D, D, [[1, 0], [0, 2]], "rescale_dual"))
    out.append(monoid_mor_from_images(D, D, [[1, 0], [0, 0]], "kill_t_dual"))
    out.append(monoid_mor_from_images(T, D, [[1, 0], [0, 1], [0, 0]], "truncate_t_cubed"))
    out.append(monoid_mor_from_images(D, T, [[1, 0, 0], [0, 0, 1]], "t_to_t_squared"))
    out.append(monoid_mor_from_images(P, P, [[0, 1], [1, 0]], "swap_pair"))
    return out


def enumerate_monoid_mors(src: CommMonoid, dst: CommMonoid) -> list[MonoidMor]:
    """Every algebra map ``src -> dst`` over a prime field, by exhaustion.

    The image of the unit is forced; the remaining basis images range over
    all of ``dst``.  Only usable for tiny dimensions over F_p.
    """
    p = src.field.p
    if p is None:
        raise CosmosError("exhaustive enumeration needs a finite field")
    if src.field != dst.field:
        raise FieldMismatch("algebras over different fields")
    n, m = src.dim, dst.dim
    if p ** (m * max(n - 1, 0)) > 200_000:
        raise CosmosError("search space too large")
    # coordinates of the unit of src in its own basis
    u = [int(src.unit[i, 0]) for i in range(n)]
    pivot = next((i for i, v in enumerate(u) if v), None)
    if pivot is None:
        return []
    others = [i for i in range(n) if i != pivot]
    out = []
    du = [int(dst.unit[i, 0]) for i in range(m)]
    inv = pow(u[pivot], -1, p)
    for choice in iproduct(range(p), repeat=m * len(others)):
        images = {}
        for k, i in enumerate(others):
            images[i] = list(choice[k * m : (k + 1) * m])
        # f(unit) = unit fixes the pivot image
        images[pivot] = [
            ((du[r] - sum(u[i] * images[i][r] for i in others)) * inv) % p for r in range(m)
        ]
        f = monoid_mor_from_images(src, dst, [images[i] for i in range(n)])
        if check_monoid_mor(f).ok:
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# monoids over a base, and their internal description


@dataclass(eq=False)
class MonoidOver:
    base: CommMonoid
    total: CommMonoid
    leg: MonoidMor


@dataclass(eq=False)
class InternalCommMonoid:
    """A commutative monoid in the module category over ``carrier.over``."""

    carrier: object  # RightModule
    unit: object  # ModuleMor: regular module -> carrier
    product: object  # ModuleMor: carrier ⊛ carrier -> carrier


def over_to_internal(o: MonoidOver) -> InternalCommMonoid:
    """``b -> b~`` becomes ``b~`` as a monoid inside right b-modules.

    The product is the map ``b~ ⊛_b b~ -> b~`` induced by ``m_{b~}`` through
    the coequalizer; the unit is the leg seen as a module map ``b_b -> b~_b``.
    """
    from .module_tensor import mtensor, induced_from_raw
    from .modules import ModuleMor, RightModule, regular_module

    b, t, f = o.base, o.total, o.leg
    action = compose(t.product, tensor(t.id(), f.map))
    carrier = RightModule(b, t.carrier, action)
    sq = mtensor(carrier, carrier)
    mult = induced_from_raw(sq, carrier, t.product, "product of the total monoid")
    unit = ModuleMor(regular_module(b), carrier, f.map)
    return InternalCommMonoid(carrier, unit, mult)


def internal_to_over(m: InternalCommMonoid) -> MonoidOver:
    """Inverse of :func:`over_to_internal`: unit and product are read off through ``cq``."""
    from .module_tensor import mtensor

    b = m.carrier.over
    sq = mtensor(m.carrier, m.carrier)
    prod = compose(m.product.map, sq.pres.proj)
    unit = compose(m.unit.map, b.unit)
    total = CommMonoid(m.carrier.carrier, unit, prod)
    leg = MonoidMor(b, total, m.unit.map)
    return MonoidOver(b, total, leg)


def check_internal_monoid(m: InternalCommMonoid) -> LawReport:
    """Associativity, unit and commutativity of an internal monoid, via the coherences."""
    from .module_tensor import (
        associator_b,
        braiding_b,
        left_unitor_b,
        mtensor_mor,
        right_unitor_b,
    )
    from .modules import ModuleMor, identity_module_mor

    x = m.carrier
    idx = identity_module_mor(x)
    mu = m.product
    rep = LawReport()

    def law(name, thunk):
        rep.attempt(name, thunk)

    def assoc():
        a = associator_b(x, x, x)
        lhs = mu.map @ mtensor_mor(mu, idx).map @ a.map
        rhs = mu.map @ mtensor_mor(idx, mu).map
        return lhs == rhs

    def left_unit():
        lhs = mu.map @ mtensor_mor(m.unit, idx).map
        return lhs == left_unitor_b(x).map

    def right_unit():
        lhs = mu.map @ mtensor_mor(idx, m.unit).map
        return lhs == right_unitor_b(x).map

    def comm():
        return mu.map @ braiding_b(x, x).map == mu.map

    law("associativity", assoc)
    law("left unit", left_unit)
    law("right unit", right_unit)
    law("commutativity", comm)
    return rep
