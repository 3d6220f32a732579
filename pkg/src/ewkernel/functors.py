"""Enriched functors between module categories, as expression trees.

Three leaf families cover the constructions used downstream: tensoring
with a bimodule, restriction of scalars along an algebra map, and the
Hom out of a bimodule.  Each node knows how to act on modules, on module
maps, and how to produce its tensorial strength ``w⊗F(z) -> F(w⊗z)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cosmos import Mor, Obj, compose, factor_through, identity, tensor
from .laws import LawReport
from .module_tensor import (
    associator_b,
    braiding_b,
    hom_bimodule,
    hom_bimodule_mor,
    induced_from_raw,
    left_unitor_b,
    mtensor,
    mtensor_mor,
    right_unitor_b,
    strength_assoc,
    tensor_over,
    tensor_over_bimodule_mor,
    tensor_over_mor,
    unit_iso,
)
from .modules import (
    Bimodule,
    ModuleError,
    ModuleMor,
    RightModule,
    check_bimodule_mor,
    identity_module_mor,
    opposite_left_action,
    random_module_mor,
    regular_module,
    restrict_module,
    tensored,
    tensored_mor,
)
from .monoids import CommMonoid, MonoidMor


class FunctorExpr:
    """Base class.  ``source`` and ``target`` are the algebras of the module categories."""

    source: CommMonoid
    target: CommMonoid
    cocontinuous: bool | None = None  # structural verdict when known

    def apply_obj(self, z: RightModule) -> RightModule:
        raise NotImplementedError

    def apply_mor(self, h: ModuleMor) -> ModuleMor:
        raise NotImplementedError

    def strength(self, w: Obj, z: RightModule) -> ModuleMor:
        raise NotImplementedError

    def _check_source(self, z: RightModule):
        if not z.over.same_as(self.source):
            raise ModuleError(f"{self.describe()} expects modules over {self.source.name}, got {z.over.name}")

    def describe(self) -> str:
        return type(self).__name__

    def __repr__(self):
        return self.describe()


class TensorBimodule(FunctorExpr):
    """``z ↦ z ⊛ X`` for a bimodule ``X``."""

    def __init__(self, X: Bimodule):
        self.X = X
        self.source = X.left_over
        self.target = X.right_over
        self.cocontinuous = True

    def apply_obj(self, z):
        self._check_source(z)
        return tensor_over(z, self.X).result

    def apply_mor(self, h):
        return tensor_over_mor(h, self.X)

    def strength(self, w, z):
        return strength_assoc(w, z, self.X)

    def describe(self):
        return f"tensor({self.X.name or '?'})"


class Restrict(FunctorExpr):
    """Restriction of scalars along ``f: b -> b~``, from b~-modules to b-modules."""

    def __init__(self, f: MonoidMor):
        self.f = f
        self.source = f.dst
        self.target = f.src
        # restriction is isomorphic to tensoring with b~ seen as a (b~, b)-bimodule
        self.cocontinuous = True

    def apply_obj(self, y):
        self._check_source(y)
        return restrict_module(self.f, y)

    def apply_mor(self, h):
        return ModuleMor(self.apply_obj(h.src), self.apply_obj(h.dst), h.map)

    def strength(self, w, y):
        src = tensored(w, self.apply_obj(y))
        dst = self.apply_obj(tensored(w, y))
        return ModuleMor(src, dst, identity(src.carrier, y.field))

    def describe(self):
        return f"restrict({self.f.name or '?'})"


class HomModule(FunctorExpr):
    """``Y ↦ Hom(X, Y)`` for a (c, d)-bimodule ``X``, from d-modules to c-modules."""

    def __init__(self, X: Bimodule):
        self.X = X
        self.source = X.right_over
        self.target = X.left_over
        self.cocontinuous = None

    def apply_obj(self, y):
        self._check_source(y)
        return hom_bimodule(self.X, y).result

    def apply_mor(self, h):
        return hom_bimodule_mor(self.X, h)

    def strength(self, w, y):
        # w⊗hom(X, y) and hom(X, w⊗y) share the Kronecker basis, so the
        # strength is the corestriction of id_w⊗incl.
        src = hom_bimodule(self.X, y)
        dst = hom_bimodule(self.X, tensored(w, y))
        m = tensor(identity(w, y.field), src.eq.incl)
        return ModuleMor(tensored(w, src.result), dst.result, dst.eq.restrict(m, "strength of Hom"))

    def describe(self):
        return f"hom({self.X.name or '?'})"


class Identity(FunctorExpr):
    def __init__(self, b: CommMonoid):
        self.source = b
        self.target = b
        self.cocontinuous = True

    def apply_obj(self, z):
        self._check_source(z)
        return z

    def apply_mor(self, h):
        return h

    def strength(self, w, z):
        return identity_module_mor(tensored(w, z))

    def describe(self):
        return "id"


class Compose(FunctorExpr):
    """``outer ∘ inner``."""

    def __init__(self, outer: FunctorExpr, inner: FunctorExpr):
        if not inner.target.same_as(outer.source):
            raise ModuleError(f"cannot compose {outer.describe()} after {inner.describe()}")
        self.outer = outer
        self.inner = inner
        self.source = inner.source
        self.target = outer.target
        if outer.cocontinuous and inner.cocontinuous:
            self.cocontinuous = True
        else:
            self.cocontinuous = None

    def apply_obj(self, z):
        return self.outer.apply_obj(self.inner.apply_obj(z))

    def apply_mor(self, h):
        return self.outer.apply_mor(self.inner.apply_mor(h))

    def strength(self, w, z):
        t_inner = self.inner.strength(w, z)
        t_outer = self.outer.strength(w, self.inner.apply_obj(z))
        return ModuleMor(t_outer.src, self.apply_obj(tensored(w, z)), compose(self.outer.apply_mor(t_inner).map, t_outer.map))

    def describe(self):
        return f"{self.inner.describe()} ; {self.outer.describe()}"


def apply_obj(F: FunctorExpr, z: RightModule) -> RightModule:
    return F.apply_obj(z)


def apply_mor(F: FunctorExpr, h: ModuleMor) -> ModuleMor:
    return F.apply_mor(h)


def strength(F: FunctorExpr, w: Obj, z: RightModule) -> ModuleMor:
    return F.strength(w, z)


# ---------------------------------------------------------------------------
# the canonical bimodule F(b) and the comparison λ


def _action_as_map(z: RightModule) -> ModuleMor:
    """``γ_z`` as a module map ``z⊗b_b -> z``."""
    return ModuleMor(tensored(z.carrier, regular_module(z.over)), z, z.action)


def canonical_left_module(F: FunctorExpr) -> Bimodule:
    """``F(b_b)`` with the left action ``F(m_b)∘t_{b, b_b}``."""
    b = F.source
    bb = regular_module(b)
    Fb = F.apply_obj(bb)
    rho = compose(F.apply_mor(_action_as_map(bb)).map, F.strength(b.carrier, bb).map)
    return Bimodule(b, F.target, Fb.carrier, rho, Fb.action, f"{F.describe()}(b)")


def lambda_component(F: FunctorExpr, z: RightModule, can: Bimodule | None = None) -> ModuleMor:
    """``λ_z: z ⊛ F(b) -> F(z)``, induced by ``F(γ_z)∘t_{z, b_b}``."""
    can = can or canonical_left_module(F)
    src = tensor_over(z, can)
    bb = regular_module(z.over)
    raw = compose(F.apply_mor(_action_as_map(z)).map, F.strength(z.carrier, bb).map)
    return induced_from_raw(src, F.apply_obj(z), raw, "λ")


@dataclass
class NatFamily:
    """A family of module maps ``F(z) -> G(z)`` given by a procedure."""

    source: FunctorExpr
    target: FunctorExpr
    component: Callable[[RightModule], ModuleMor]

    def __call__(self, z: RightModule) -> ModuleMor:
        return self.component(z)

    def check(self, samples: Sequence[RightModule], maps: Sequence[ModuleMor] = (), weights: Sequence[Obj] = ()) -> LawReport:
        rep = LawReport()
        F, G = self.source, self.target
        for n, h in enumerate(maps):
            lhs = compose(G.apply_mor(h).map, self(h.src).map)
            rhs = compose(self(h.dst).map, F.apply_mor(h).map)
            rep.equal(f"naturality[{n}]", lhs, rhs)
        for n, z in enumerate(samples):
            for m, w in enumerate(weights):
                lhs = compose(self(tensored(w, z)).map, F.strength(w, z).map)
                rhs = compose(G.strength(w, z).map, tensor(identity(w, z.field), self(z).map))
                rep.equal(f"strength compatibility[{n},{m}]", lhs, rhs)
        return rep


def lambda_family(F: FunctorExpr) -> NatFamily:
    can = canonical_left_module(F)
    return NatFamily(TensorBimodule(can), F, lambda z: lambda_component(F, z, can))


def check_strength_laws(F: FunctorExpr, z: RightModule, v: Obj, w: Obj, h: ModuleMor | None = None) -> LawReport:
    """Unit and associativity relations of the tensorial strength, plus naturality in z."""
    from .cosmos import UNIT

    rep = LawReport()
    t_unit = F.strength(UNIT, z)
    rep.equal("strength at the unit object", t_unit.map, F.apply_obj(z).id())
    lhs = F.strength(Obj(v.dim * w.dim), z).map
    rhs = compose(F.strength(v, tensored(w, z)).map, tensor(identity(v, z.field), F.strength(w, z).map))
    rep.equal("strength associativity", lhs, rhs)
    if h is not None:
        lhs = compose(F.apply_mor(tensored_mor(identity(w, z.field), h)).map, F.strength(w, h.src).map)
        rhs = compose(F.strength(w, h.dst).map, tensor(identity(w, z.field), F.apply_mor(h).map))
        rep.equal("strength naturality", lhs, rhs)
    return rep


def check_functoriality(F: FunctorExpr, g: ModuleMor, h: ModuleMor) -> LawReport:
    """``F(id) = id`` and ``F(g∘h) = F(g)∘F(h)`` for composable ``g, h``."""
    rep = LawReport()
    rep.equal("preserves identity", F.apply_mor(identity_module_mor(h.src)).map, F.apply_obj(h.src).id())
    rep.equal("preserves composition", F.apply_mor(g @ h).map, compose(F.apply_mor(g).map, F.apply_mor(h).map))
    return rep


def check_lambda(F: FunctorExpr, z: RightModule, w: Obj | None = None) -> LawReport:
    """λ is well defined at z, equals ι at b_b, and satisfies the strength square."""
    rep = LawReport()
    can = canonical_left_module(F)
    lam = rep.attempt("λ well defined", lambda: lambda_component(F, z, can))
    if not lam.ok:
        return rep
    b = F.source
    rep.equal("λ at b_b is ι", lambda_component(F, regular_module(b), can).map, unit_iso(can).map)
    if w is not None:
        a = strength_assoc(w, z, can)
        lhs = compose(lambda_component(F, tensored(w, z), can).map, a.map)
        rhs = compose(F.strength(w, z).map, tensor(identity(w, z.field), lambda_component(F, z, can).map))
        rep.equal("λ strength square", lhs, rhs)
    return rep


@dataclass
class ProbeVerdict:
    iso_on_all_samples: bool
    witness: RightModule | None
    per_sample: list[bool]
    structural: bool | None

    def describe(self) -> str:
        if not self.iso_on_all_samples:
            return "not cocontinuous: λ fails to be invertible at a sampled module"
        if self.structural:
            return "cocontinuous (every leaf is a left adjoint); λ invertible on all samples"
        return "λ invertible on all samples; this is evidence, not a proof of cocontinuity"


def cocontinuity_probe(F: FunctorExpr, sample: Sequence[RightModule]) -> ProbeVerdict:
    """Test invertibility of λ on each sample.

    A non-invertible λ certifies that F is not cocontinuous.  Invertibility on
    every sample is only evidence in the other direction.
    """
    can = canonical_left_module(F)
    flags = []
    witness = None
    for z in sample:
        ok = lambda_component(F, z, can).is_invertible()
        flags.append(ok)
        if not ok and witness is None:
            witness = z
    return ProbeVerdict(all(flags), witness, flags, F.cocontinuous)


def ew_roundtrip(X: Bimodule, sample: Sequence[RightModule]) -> LawReport:
    """``X -> -⊛X -> F(b)`` returns ``X`` up to ι, and λ is invertible on the sample."""
    rep = LawReport()
    F = TensorBimodule(X)
    can = canonical_left_module(F)
    iota = unit_iso(X)
    rep.extend(check_bimodule_mor(can, X, iota.map), "ι is a bimodule map/")
    rep.add("ι invertible", iota.is_invertible())
    for n, z in enumerate(sample):
        rep.add(f"λ invertible[{n}]", lambda_component(F, z, can).is_invertible())
    return rep


def counit_naturality_in_functor(X: Bimodule, Y: Bimodule, xi: Mor, z: RightModule) -> LawReport:
    """For a bimodule map ``ξ: X -> Y``: ``λ^G_z∘(z⊛ξ_b) = ξ_z∘λ^F_z``."""
    rep = LawReport()
    F, G = TensorBimodule(X), TensorBimodule(Y)
    b = X.left_over
    bb = regular_module(b)
    canF, canG = canonical_left_module(F), canonical_left_module(G)
    xi_b = tensor_over_bimodule_mor(bb, xi, X, Y).map
    lhs = compose(lambda_component(G, z, canG).map, tensor_over_bimodule_mor(z, xi_b, canF, canG).map)
    rhs = compose(tensor_over_bimodule_mor(z, xi, X, Y).map, lambda_component(F, z, canF).map)
    rep.equal("λ natural in the functor", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# lax tensor structures


@dataclass
class LaxStructure:
    """Unit coherence ``b'_{b'} -> F(b_b)`` and binary coherences ``F(x)⊛F(y) -> F(x⊛y)``."""

    unit_coherence: ModuleMor
    binary_coherence: Callable[[RightModule, RightModule], ModuleMor]


@dataclass
class LaxFunctor:
    expr: FunctorExpr
    lax: LaxStructure
    name: str | None = None

    @property
    def source(self):
        return self.expr.source

    @property
    def target(self):
        return self.expr.target

    def __call__(self, z):
        return self.expr.apply_obj(z)

    def binary(self, x, y) -> ModuleMor:
        return self.lax.binary_coherence(x, y)

    @property
    def unit(self) -> ModuleMor:
        return self.lax.unit_coherence


def identity_lax(b: CommMonoid) -> LaxFunctor:
    return LaxFunctor(
        Identity(b),
        LaxStructure(identity_module_mor(regular_module(b)), lambda x, y: identity_module_mor(mtensor(x, y).result)),
        "id",
    )


def compose_lax(G: LaxFunctor, F: LaxFunctor) -> LaxFunctor:
    """``G∘F`` with coherences ``G(F_{x,y})∘G_{Fx,Fy}`` and ``G(F_0)∘G_0``."""
    expr = Compose(G.expr, F.expr)

    def binary(x, y):
        inner = F.binary(x, y)
        outer = G.binary(F(x), F(y))
        return ModuleMor(outer.src, G.expr.apply_obj(inner.dst), compose(G.expr.apply_mor(inner).map, outer.map))

    unit = G.expr.apply_mor(F.unit)
    u = ModuleMor(G.unit.src, unit.dst, compose(unit.map, G.unit.map))
    return LaxFunctor(expr, LaxStructure(u, binary), f"{F.name};{G.name}")


def mixed_strength(w: Obj, x: RightModule, y: RightModule) -> ModuleMor:
    """``w⊗(x⊛y) -> x⊛(w⊗y)`` induced by ``s_{w,x}⊗id_y``."""
    from .cosmos import braiding

    src = mtensor(x, y)
    dst = mtensor(x, tensored(w, y))
    raw = compose(dst.pres.proj, tensor(braiding(w, x.carrier, x.field), y.id()))
    pres = src.pres.tensor_id(w, side="left")
    return ModuleMor(tensored(w, src.result), dst.result, factor_through(pres, raw, "mixed strength"))


def check_lax_axioms(
    L: LaxFunctor,
    samples: Sequence[RightModule],
    rng: random.Random | None = None,
    weight: Obj | None = None,
    max_triples: int = 4,
) -> LawReport:
    """Naturality, associativity, unit, symmetry and strength compatibility of ``L``."""
    rep = LawReport()
    F = L.expr
    b = L.source
    bb = regular_module(b)
    F0 = L.unit
    xs = list(samples)
    pairs = [(x, y) for x in xs for y in xs][: max_triples * 2]
    for n, (x, y) in enumerate(pairs):
        Fx, Fy = F.apply_obj(x), F.apply_obj(y)
        Fxy = L.binary(x, y)
        # symmetry
        Fyx = L.binary(y, x)
        lhs = compose(F.apply_mor(braiding_b(x, y)).map, Fxy.map)
        rhs = compose(Fyx.map, braiding_b(Fx, Fy).map)
        rep.equal(f"symmetry[{n}]", lhs, rhs)
        if rng is not None:
            h = random_module_mor(x, x, rng)
            k = random_module_mor(y, y, rng)
            lhs = compose(F.apply_mor(mtensor_mor(h, k)).map, Fxy.map)
            rhs = compose(Fxy.map, mtensor_mor(F.apply_mor(h), F.apply_mor(k)).map)
            rep.equal(f"naturality[{n}]", lhs, rhs)
        if weight is not None:
            w = weight
            # variable x
            a_t = strength_assoc(w, Fx, opposite_left_action(Fy))
            lhs = compose(
                L.binary(tensored(w, x), y).map,
                mtensor_mor(F.strength(w, x), identity_module_mor(Fy)).map,
                a_t.map,
            )
            a_s = strength_assoc(w, x, opposite_left_action(y))
            rhs = compose(
                F.apply_mor(a_s).map,
                F.strength(w, mtensor(x, y).result).map,
                tensor(identity(w, x.field), Fxy.map),
            )
            rep.equal(f"strength compatibility in x[{n}]", lhs, rhs)
            # variable y
            m_t = mixed_strength(w, Fx, Fy)
            lhs = compose(
                L.binary(x, tensored(w, y)).map,
                mtensor_mor(identity_module_mor(Fx), F.strength(w, y)).map,
                m_t.map,
            )
            m_s = mixed_strength(w, x, y)
            rhs = compose(
                F.apply_mor(m_s).map,
                F.strength(w, mtensor(x, y).result).map,
                tensor(identity(w, x.field), Fxy.map),
            )
            rep.equal(f"strength compatibility in y[{n}]", lhs, rhs)
    for n, x in enumerate(xs[:max_triples]):
        Fx = F.apply_obj(x)
        lhs = compose(
            F.apply_mor(left_unitor_b(x)).map,
            L.binary(bb, x).map,
            mtensor_mor(F0, identity_module_mor(Fx)).map,
        )
        rep.equal(f"left unit[{n}]", lhs, left_unitor_b(Fx).map)
        lhs = compose(
            F.apply_mor(right_unitor_b(x)).map,
            L.binary(x, bb).map,
            mtensor_mor(identity_module_mor(Fx), F0).map,
        )
        rep.equal(f"right unit[{n}]", lhs, right_unitor_b(Fx).map)
    triples = [(xs[i % len(xs)], xs[(i + 1) % len(xs)], xs[(i + 2) % len(xs)]) for i in range(min(max_triples, len(xs)))]
    for n, (x, y, z) in enumerate(triples):
        Fx, Fy, Fz = F.apply_obj(x), F.apply_obj(y), F.apply_obj(z)
        yz = mtensor(y, z).result
        xy = mtensor(x, y).result
        lhs = compose(
            F.apply_mor(associator_b(x, y, z)).map,
            L.binary(x, yz).map,
            mtensor_mor(identity_module_mor(Fx), L.binary(y, z)).map,
        )
        rhs = compose(
            L.binary(xy, z).map,
            mtensor_mor(L.binary(x, y), identity_module_mor(Fz)).map,
            associator_b(Fx, Fy, Fz).map,
        )
        rep.equal(f"associativity[{n}]", lhs, rhs)
    return rep
