"""Right modules, bimodules and module morphisms over commutative algebras."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cosmos import (
    UNIT,
    CosmosError,
    EqPresentation,
    Mor,
    Obj,
    braiding,
    coequalizer,
    compose,
    equalizer,
    factor_through,
    hom_obj,
    hom_post,
    hom_pre,
    hom_tensor_id,
    identity,
    tensor,
    tensor_obj,
    zero,
)
from .laws import LawReport
from .monoids import CommMonoid, MonoidMor, coproduct


class ModuleError(CosmosError):
    pass


def _same_base(a: CommMonoid, b: CommMonoid, what: str):
    if not a.same_as(b):
        raise ModuleError(f"{what}: base algebras differ ({a.name} vs {b.name})")


@dataclass(eq=False)
class RightModule:
    over: CommMonoid
    carrier: Obj
    action: Mor
    name: str | None = None

    def __post_init__(self):
        if self.action.src != tensor_obj(self.carrier, self.over.carrier) or self.action.dst != self.carrier:
            raise ModuleError(
                f"action must be x⊗b -> x with dim x = {self.carrier.dim}, dim b = {self.over.dim}"
            )

    @property
    def field(self):
        return self.over.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def id(self) -> Mor:
        return identity(self.carrier, self.field)

    def acting(self, beta: Mor) -> Mor:
        """The linear map ``v ↦ v·beta`` for a point ``beta: c -> b``."""
        return compose(self.action, tensor(self.id(), beta))

    def same_as(self, other: "RightModule") -> bool:
        return self is other or (
            self.over.same_as(other.over) and self.carrier == other.carrier and self.action == other.action
        )

    def __repr__(self):
        return f"RightModule({self.name or '?'} over {self.over.name}, dim={self.dim})"


@dataclass(eq=False)
class ModuleMor:
    src: RightModule
    dst: RightModule
    map: Mor

    def __post_init__(self):
        _same_base(self.src.over, self.dst.over, "module morphism")
        if self.map.src != self.src.carrier or self.map.dst != self.dst.carrier:
            raise ModuleError(
                f"module morphism matrix {self.map.shape} does not fit {self.src.dim} -> {self.dst.dim}"
            )

    def __matmul__(self, other: "ModuleMor") -> "ModuleMor":
        return compose_module_mor(self, other)

    def __eq__(self, other):
        if not isinstance(other, ModuleMor):
            return NotImplemented
        return self.map == other.map

    __hash__ = None

    def is_invertible(self) -> bool:
        return self.map.is_invertible()

    def inverse(self) -> "ModuleMor":
        return ModuleMor(self.dst, self.src, self.map.inverse())

    def __repr__(self):
        return f"ModuleMor({self.src.dim}->{self.dst.dim})"


def compose_module_mor(g: ModuleMor, f: ModuleMor) -> ModuleMor:
    return ModuleMor(f.src, g.dst, compose(g.map, f.map))


def identity_module_mor(x: RightModule) -> ModuleMor:
    return ModuleMor(x, x, x.id())


@dataclass(eq=False)
class Bimodule:
    """Carrier with a left action of ``left_over`` and a right action of ``right_over``."""

    left_over: CommMonoid
    right_over: CommMonoid
    carrier: Obj
    left_action: Mor
    right_action: Mor
    name: str | None = None

    def __post_init__(self):
        if self.left_action.src != tensor_obj(self.left_over.carrier, self.carrier) or self.left_action.dst != self.carrier:
            raise ModuleError("left action must be b⊗x -> x")
        if self.right_action.src != tensor_obj(self.carrier, self.right_over.carrier) or self.right_action.dst != self.carrier:
            raise ModuleError("right action must be x⊗b' -> x")

    @property
    def field(self):
        return self.left_over.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def right_module(self) -> RightModule:
        return RightModule(self.right_over, self.carrier, self.right_action, self.name)

    def left_as_right_module(self) -> RightModule:
        """The left action turned into a right action with the braiding."""
        act = compose(self.left_action, braiding(self.carrier, self.left_over.carrier, self.field))
        return RightModule(self.left_over, self.carrier, act, self.name)

    def id(self) -> Mor:
        return identity(self.carrier, self.field)

    def __repr__(self):
        return f"Bimodule({self.name or '?'}: ({self.left_over.name}, {self.right_over.name}), dim={self.dim})"


# a left b-module object in the module category over b'
LeftModuleObject = Bimodule


# ---------------------------------------------------------------------------
# law checks


def check_module(x: RightModule) -> LawReport:
    rep = LawReport()
    b = x.over
    g = x.action
    ib = b.id()
    rep.equal("associativity", compose(g, tensor(g, ib)), compose(g, tensor(x.id(), b.product)))
    rep.equal("unit", compose(g, tensor(x.id(), b.unit)), x.id())
    return rep


def check_module_mor(h: ModuleMor) -> LawReport:
    rep = LawReport()
    rep.equal(
        "equivariance",
        compose(h.map, h.src.action),
        compose(h.dst.action, tensor(h.map, h.src.over.id())),
    )
    return rep


def check_bimodule(X: Bimodule) -> LawReport:
    rep = LawReport()
    b, b2 = X.left_over, X.right_over
    rho, gam = X.left_action, X.right_action
    ix = X.id()
    rep.equal("left associativity", compose(rho, tensor(b.id(), rho)), compose(rho, tensor(b.product, ix)))
    rep.equal("left unit", compose(rho, tensor(b.unit, ix)), ix)
    rep.equal("right associativity", compose(gam, tensor(gam, b2.id())), compose(gam, tensor(ix, b2.product)))
    rep.equal("right unit", compose(gam, tensor(ix, b2.unit)), ix)
    rep.equal(
        "actions commute",
        compose(gam, tensor(rho, b2.id())),
        compose(rho, tensor(b.id(), gam)),
    )
    return rep


def check_bimodule_mor(X: Bimodule, Y: Bimodule, phi: Mor) -> LawReport:
    rep = LawReport()
    rep.equal("left equivariance", compose(phi, X.left_action), compose(Y.left_action, tensor(X.left_over.id(), phi)))
    rep.equal("right equivariance", compose(phi, X.right_action), compose(Y.right_action, tensor(phi, X.right_over.id())))
    return rep


# ---------------------------------------------------------------------------
# constructions


def regular_module(b: CommMonoid) -> RightModule:
    return RightModule(b, b.carrier, b.product, f"{b.name}_reg")


def hom_module_object(x: RightModule, y: RightModule) -> EqPresentation:
    """Equivariant maps ``x -> y`` as a subspace of ``hom(x, y)``.

    It is the equalizer of ``φ ↦ φ∘γ_x`` and ``φ ↦ γ_y∘(φ⊗id_b)``,
    both landing in ``hom(x⊗b, y)``.
    """
    _same_base(x.over, y.over, "hom module object")
    b = x.over.carrier
    pre = hom_pre(x.action, y.carrier)
    post = compose(
        hom_post(y.action, tensor_obj(x.carrier, b)),
        hom_tensor_id(x.carrier, y.carrier, b, x.field),
    )
    return equalizer(pre, post)


def module_mor_from_point(x: RightModule, y: RightModule, eq: EqPresentation, r: int) -> ModuleMor:
    """The r-th basis morphism of ``hom_module_object(x, y)``."""
    col = compose(eq.incl, _basis_point(eq.sub, r, x.field))
    m = Mor(x.carrier, y.carrier, x.field.matrix(y.dim, x.dim, col.mat.entries()), x.field)
    return ModuleMor(x, y, m)


def _basis_point(o: Obj, r: int, field) -> Mor:
    m = field.matrix(o.dim, 1)
    m[r, 0] = 1
    return Mor(UNIT, o, m, field)


def tensored(z: Obj, x: RightModule) -> RightModule:
    """``z⊗x`` with action ``id_z⊗γ_x``."""
    return RightModule(x.over, tensor_obj(z, x.carrier), tensor(identity(z, x.field), x.action))


def tensored_mor(f: Mor, h: ModuleMor) -> ModuleMor:
    """``f⊗h: z⊗x -> z'⊗y`` between tensored modules."""
    return ModuleMor(tensored(f.src, h.src), tensored(f.dst, h.dst), tensor(f, h.map))


def opposite_left_action(x: RightModule) -> Bimodule:
    """View a right module over a commutative algebra as a bimodule: left action ``γ∘s``."""
    rho = compose(x.action, braiding(x.over.carrier, x.carrier, x.field))
    return Bimodule(x.over, x.over, x.carrier, rho, x.action, x.name)


def regular_bimodule(b: CommMonoid) -> Bimodule:
    return opposite_left_action(regular_module(b))


def bimodule_from_monoid_legs(f: MonoidMor, f2: MonoidMor) -> Bimodule:
    """``b~`` as a (b, b')-bimodule through ``f: b -> b~`` and ``f2: b' -> b~``."""
    t = f.dst
    _same_base(t, f2.dst, "bimodule from legs")
    rho = compose(t.product, tensor(f.map, t.id()))
    gam = compose(t.product, tensor(t.id(), f2.map))
    return Bimodule(f.src, f2.src, t.carrier, rho, gam, t.name)


def restrict_module(f: MonoidMor, y: RightModule) -> RightModule:
    """Restriction of scalars along ``f: b -> b'``."""
    _same_base(f.dst, y.over, "restriction")
    return RightModule(f.src, y.carrier, compose(y.action, tensor(y.id(), f.map)), y.name)


def bimodule_to_module(X: Bimodule) -> RightModule:
    """A (b, b')-bimodule as a right module over ``b⊗b'``."""
    B, _, _ = coproduct(X.left_over, X.right_over)
    field = X.field
    # x⊗b⊗b' -> b⊗x⊗b' -> x⊗b' -> x
    swap = tensor(braiding(X.carrier, X.left_over.carrier, field), X.right_over.id())
    act = compose(X.right_action, tensor(X.left_action, X.right_over.id()), swap)
    return RightModule(B, X.carrier, act, X.name)


def module_to_bimodule(x: RightModule, b: CommMonoid, b2: CommMonoid) -> Bimodule:
    """A right ``b⊗b'``-module as a (b, b')-bimodule, through the coprojections."""
    B, p, p2 = coproduct(b, b2)
    if x.over.carrier != B.carrier or x.over.product != B.product:
        raise ModuleError("module is not over the coproduct of the given algebras")
    rho = compose(x.action, tensor(x.id(), p.map), braiding(b.carrier, x.carrier, x.field))
    gam = compose(x.action, tensor(x.id(), p2.map))
    return Bimodule(b, b2, x.carrier, rho, gam, x.name)


# ---------------------------------------------------------------------------
# random modules


def _random_element(b: CommMonoid, rng: random.Random, scale: int = 2) -> Mor:
    return b.element([rng.randint(-scale, scale) for _ in range(b.dim)])


def _random_invertible(n: int, field, rng: random.Random) -> Mor:
    while True:
        m = Mor.from_function(Obj(n), Obj(n), lambda i, j: rng.randint(-2, 2), field)
        if m.is_invertible():
            return m


def random_module(b: CommMonoid, rng: random.Random, max_dim: int = 3, min_dim: int = 1, budget: int = 200) -> RightModule:
    """A seeded random right module of dimension in ``[min_dim, max_dim]``.

    A finitely presented module: the quotient of a free module ``b^n`` by the
    submodule generated by a few random relations, carried to a random basis.
    Rejects and retries when the dimension falls outside the range.
    """
    field = b.field
    for _ in range(budget):
        n = rng.randint(1, max(1, max_dim // max(1, b.dim) + 1))
        free_dim = n * b.dim
        if free_dim < min_dim:
            continue
        nrel = rng.randint(0, n + 1)
        free_carrier = Obj(free_dim)
        free_action = tensor(identity(Obj(n), field), b.product)  # (k^n⊗b)⊗b -> k^n⊗b
        # relations: random elements of the free module, closed under the action
        gens = []
        for _ in range(nrel):
            coords = [rng.randint(-1, 1) if rng.random() < 0.6 else 0 for _ in range(free_dim)]
            gens.append(coords)
        if gens:
            rel = Mor.from_function(Obj(len(gens)), free_carrier, lambda i, j: gens[j][i], field)
            span = compose(free_action, tensor(rel, b.id()))  # images of r·β for all basis β
            pres = coequalizer(span, zero(span.src, span.dst, field))
        else:
            pres = coequalizer(zero(Obj(0), free_carrier, field), zero(Obj(0), free_carrier, field))
        q = pres.quot
        if not (min_dim <= q.dim <= max_dim):
            continue
        act = compose(pres.proj, free_action, tensor(pres.section, b.id()))
        if q.dim:
            change = _random_invertible(q.dim, field, rng)
            act = compose(change, act, tensor(change.inverse(), b.id()))
        x = RightModule(b, q, act)
        if check_module(x).ok:
            return x
    raise ModuleError(f"could not generate a module of dim in [{min_dim},{max_dim}] within {budget} attempts")


def random_bimodule(b: CommMonoid, b2: CommMonoid, rng: random.Random, max_dim: int = 3, min_dim: int = 1) -> Bimodule:
    """A seeded random (b, b')-bimodule, built as a module over ``b⊗b'``."""
    B, _, _ = coproduct(b, b2)
    x = random_module(B, rng, max_dim=max_dim, min_dim=min_dim)
    return module_to_bimodule(x, b, b2)


def random_module_mor(x: RightModule, y: RightModule, rng: random.Random) -> ModuleMor:
    """A random integer combination of the basis of equivariant maps."""
    eq = hom_module_object(x, y)
    m = zero(x.carrier, y.carrier, x.field)
    for r in range(eq.sub.dim):
        c = rng.randint(-2, 2)
        if c:
            m = m + module_mor_from_point(x, y, eq, r).map.scale(c)
    return ModuleMor(x, y, m)


def factor_module_mor(pres, h: Mor, src: RightModule, dst: RightModule, what: str = "map") -> ModuleMor:
    return ModuleMor(src, dst, factor_through(pres, h, what))
