"""Commutative algebras under ``b⊗b'`` versus lax tensor functors ``M_b -> M_{b'}``.

A pair of algebra maps ``b -> b~ <- b'`` gives the functor ``f'_* f*``
(extend along ``f``, restrict along ``f'``) with its lax structure.  In the
other direction a lax tensor functor ``F`` makes ``F(b)`` a commutative
algebra receiving maps from ``b`` (through the left action) and from ``b'``
(through the unit coherence).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .cosmos import CosmosError, Mor, compose, factor_through, shuffle, tensor
from .functors import (
    Compose,
    LaxFunctor,
    LaxStructure,
    Restrict,
    TensorBimodule,
    canonical_left_module,
    check_lax_axioms,
    lambda_component,
)
from .laws import LawReport
from .module_tensor import mtensor, right_unitor_b, tensor_over, unit_iso_inverse
from .modules import (
    Bimodule,
    ModuleMor,
    RightModule,
    bimodule_from_monoid_legs,
    regular_module,
    restrict_module,
)
from .monoids import (
    CommMonoid,
    MonoidMor,
    check_comm_monoid,
    check_monoid_mor,
    coproduct,
    identity_mor,
)


@dataclass(eq=False)
class CommOverPair:
    """``b --f--> total <--f2-- b2``."""

    b: CommMonoid
    b2: CommMonoid
    total: CommMonoid
    f: MonoidMor
    f2: MonoidMor
    name: str | None = None

    def check(self) -> LawReport:
        rep = LawReport()
        rep.extend(check_comm_monoid(self.total), "total/")
        rep.extend(check_monoid_mor(self.f), "f/")
        rep.extend(check_monoid_mor(self.f2), "f'/")
        return rep

    def leg_from_coproduct(self) -> MonoidMor:
        """The single algebra map ``b⊗b' -> total``."""
        B, _, _ = coproduct(self.b, self.b2)
        return MonoidMor(B, self.total, compose(self.total.product, tensor(self.f.map, self.f2.map)))

    def bimodule(self) -> Bimodule:
        """``total`` as a (b, b')-bimodule."""
        return bimodule_from_monoid_legs(self.f, self.f2)

    def __repr__(self):
        return f"CommOverPair({self.name or '?'}: {self.b.name} -> {self.total.name} <- {self.b2.name})"


def pair_from_coproduct_leg(b: CommMonoid, b2: CommMonoid, leg: MonoidMor) -> CommOverPair:
    _, p, p2 = coproduct(b, b2)
    f = MonoidMor(b, leg.dst, compose(leg.map, p.map))
    f2 = MonoidMor(b2, leg.dst, compose(leg.map, p2.map))
    return CommOverPair(b, b2, leg.dst, f, f2)


# ---------------------------------------------------------------------------
# from algebras to functors


def _extension_bimodule(p: CommOverPair) -> Bimodule:
    return bimodule_from_monoid_legs(p.f, identity_mor(p.total))


def comm_binary_coherence(p: CommOverPair, x: RightModule, y: RightModule) -> ModuleMor:
    """``F(x) ⊛_{b'} F(y) -> F(x ⊛_b y)`` for ``F = f'_* f*``.

    On representatives it sends ``[x⊗β]⊗[y⊗β']`` to ``[[x⊗y]⊗ββ']``.
    """
    X = _extension_bimodule(p)
    field = x.field
    fx = tensor_over(x, X)
    fy = tensor_over(y, X)
    Fx = restrict_module(p.f2, fx.result)
    Fy = restrict_module(p.f2, fy.result)
    src = mtensor(Fx, Fy)
    xy = mtensor(x, y)
    dst = tensor_over(xy.result, X)
    dt = p.total.dim
    reorder = shuffle([x.dim, dt, y.dim, dt], [0, 2, 1, 3], field)
    raw = compose(dst.pres.proj, tensor(xy.pres.proj, p.total.product), reorder)
    pres = fx.pres.tensor(fy.pres).then(src.pres)
    m = factor_through(pres, raw, "binary coherence of the extension-restriction functor")
    return ModuleMor(src.result, restrict_module(p.f2, dst.result), m)


def comm_unit_coherence(p: CommOverPair) -> ModuleMor:
    """``(ι_{total})^{-1} ∘ f'``: ``b'_{b'} -> F(b_b)``."""
    X = _extension_bimodule(p)
    inv = unit_iso_inverse(X)
    return ModuleMor(regular_module(p.b2), restrict_module(p.f2, inv.dst), compose(inv.map, p.f2.map))


def comm_to_functor(p: CommOverPair) -> LaxFunctor:
    X = _extension_bimodule(p)
    expr = Compose(Restrict(p.f2), TensorBimodule(X))
    lax = LaxStructure(comm_unit_coherence(p), lambda x, y: comm_binary_coherence(p, x, y))
    return LaxFunctor(expr, lax, f"functor({p.name or '?'})")


# ---------------------------------------------------------------------------
# from functors to algebras


@dataclass(eq=False)
class Extraction:
    pair: CommOverPair
    left_module: Bimodule  # F(b) with its canonical left b-action
    product_over_target: ModuleMor  # F(b) ⊛_{b'} F(b) -> F(b)


def functor_to_comm(L: LaxFunctor) -> Extraction:
    """Read off the algebra ``F(b)`` with legs from ``b`` and ``b'``."""
    b, b2 = L.source, L.target
    bb = regular_module(b)
    can = canonical_left_module(L.expr)
    Fb = L(bb)
    coh = L.binary(bb, bb)
    mult_over = compose(L.expr.apply_mor(right_unitor_b(bb)).map, coh.map)
    sq = mtensor(Fb, Fb)
    product = compose(mult_over, sq.pres.proj)
    unit = compose(L.unit.map, b2.unit)
    total = CommMonoid(Fb.carrier, unit, product, f"{L.name or 'F'}(b)")
    f2 = MonoidMor(b2, total, L.unit.map, "f'(F)")
    f = MonoidMor(b, total, compose(can.left_action, tensor(b.id(), unit)), "f(F)")
    pair = CommOverPair(b, b2, total, f, f2, f"extracted({L.name or 'F'})")
    return Extraction(pair, can, ModuleMor(sq.result, Fb, mult_over))


def extraction_identities(e: Extraction) -> LawReport:
    """``f(F)∘u_b = u`` and ``m∘(f(F)⊗id) = ρ``, plus the algebra laws."""
    rep = LawReport()
    p = e.pair
    rep.extend(p.check(), "")
    rep.equal("f(F) preserves unit", compose(p.f.map, p.b.unit), p.total.unit)
    rep.equal(
        "product after f(F) is the left action",
        compose(p.total.product, tensor(p.f.map, p.total.id())),
        e.left_module.left_action,
    )
    rep.equal(
        "product after f'(F) is the right action",
        compose(p.total.product, tensor(p.total.id(), p.f2.map)),
        e.left_module.right_action,
    )
    # images of the legs commute, forced by commutativity of F(b)
    a = compose(p.total.product, tensor(p.f.map, p.f2.map))
    from .cosmos import braiding

    s = compose(p.total.product, tensor(p.f2.map, p.f.map), braiding(p.b.carrier, p.b2.carrier, p.total.field))
    rep.equal("legs commute", a, s)
    return rep


# ---------------------------------------------------------------------------
# λ as a tensor transformation


def lambda_tensor_check(L: LaxFunctor, samples: Sequence[RightModule]) -> LawReport:
    """``F_{x,y}∘(λ_x⊛λ_y) = λ_{x⊛y}∘G_{x,y}`` and ``λ_b∘G_0 = F_0``,
    where ``G`` is the functor of the extracted algebra."""
    rep = LawReport()
    e = functor_to_comm(L)
    G = comm_to_functor(e.pair)
    can = e.left_module
    bb = regular_module(L.source)

    def lam(z):
        return lambda_component(L.expr, z, can)

    rep.equal("unit triangle", compose(lam(bb).map, G.unit.map), L.unit.map)
    pairs = [(x, y) for x in samples for y in samples]
    for n, (x, y) in enumerate(pairs):
        lx, ly = lam(x), lam(y)
        Gx, Gy = G(x), G(y)
        src = mtensor(Gx, Gy)
        dst = mtensor(L(x), L(y))
        if lx.src.carrier != Gx.carrier or ly.src.carrier != Gy.carrier:
            rep.add(f"tensor square[{n}]", False, "λ source differs from the extracted functor")
            continue
        lxy = compose(dst.pres.proj, tensor(lx.map, ly.map))
        tensor_l = factor_through(src.pres, lxy, "λ⊛λ")
        lhs = compose(L.binary(x, y).map, tensor_l)
        xy = mtensor(x, y).result
        rhs = compose(lam(xy).map, G.binary(x, y).map)
        rep.equal(f"tensor square[{n}]", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# round trips


def unit_iso(p: CommOverPair) -> Mor:
    """``(ι_{total})^{-1}: total -> b ⊛_b total``."""
    return unit_iso_inverse(_extension_bimodule(p)).map


def roundtrip_main(p: CommOverPair, samples: Sequence[RightModule] = (), rng: random.Random | None = None) -> LawReport:
    """``functor_to_comm(comm_to_functor(p))`` is ``p`` up to ``(ι_{total})^{-1}``."""
    rep = LawReport()
    L = comm_to_functor(p)
    e = functor_to_comm(L)
    q = e.pair
    rep.extend(extraction_identities(e), "extraction/")
    phi = unit_iso(p)
    rep.add("unit is invertible", phi.is_invertible())
    rep.equal("unit respects f", compose(phi, p.f.map), q.f.map)
    rep.equal("unit respects f'", compose(phi, p.f2.map), q.f2.map)
    rep.equal("unit respects unit", compose(phi, p.total.unit), q.total.unit)
    rep.equal("unit respects product", compose(phi, p.total.product), compose(q.total.product, tensor(phi, phi)))
    if samples:
        rep.extend(check_lax_axioms(L, samples[:3], rng, max_triples=2), "lax/")
        for n, z in enumerate(samples):
            rep.add(f"λ invertible[{n}]", lambda_component(L.expr, z, e.left_module).is_invertible())
        rep.extend(lambda_tensor_check(L, samples[:3]), "λ tensor/")
    return rep


def roundtrip_functor(L: LaxFunctor, samples: Sequence[RightModule]) -> LawReport:
    """For cocontinuous ``L``: λ invertible and tensor-natural on samples."""
    rep = LawReport()
    e = functor_to_comm(L)
    rep.extend(extraction_identities(e), "extraction/")
    for n, z in enumerate(samples):
        rep.add(f"λ invertible[{n}]", lambda_component(L.expr, z, e.left_module).is_invertible())
    rep.extend(lambda_tensor_check(L, samples), "λ tensor/")
    return rep


# ---------------------------------------------------------------------------
# algebra maps as strong tensor functors


def pair_of_morphism(ft: MonoidMor) -> CommOverPair:
    return CommOverPair(ft.src, ft.dst, ft.dst, ft, identity_mor(ft.dst), ft.name)


def recovered_morphism(e: Extraction) -> Mor:
    """``f'(F)^{-1} ∘ f(F)``."""
    return compose(e.pair.f2.map.inverse(), e.pair.f.map)


def corollary_strong(ft: MonoidMor, samples: Sequence[RightModule] = ()) -> LawReport:
    rep = LawReport()
    L = comm_to_functor(pair_of_morphism(ft))
    e = functor_to_comm(L)
    inv = e.pair.f2.map.is_invertible()
    rep.add("f'(F) invertible", inv)
    if inv:
        rep.equal("recovers the morphism", recovered_morphism(e), ft.map)
    for n, x in enumerate(samples):
        for m, y in enumerate(samples):
            rep.add(f"coherence invertible[{n},{m}]", L.binary(x, y).is_invertible())
    return rep


def distinguishable(f1: MonoidMor, f2: MonoidMor) -> tuple[bool, object]:
    """Whether the functors of ``f1`` and ``f2`` are non-isomorphic as tensor functors.

    An isomorphism of extracted pairs must match the ``b'`` legs, which are
    invertible, so it is forced to be ``φ = f'_2 ∘ f'_1^{-1}``; the functors are
    isomorphic exactly when this ``φ`` also matches the ``b`` legs.
    Returns ``(distinct, witness)``.
    """
    e1 = functor_to_comm(comm_to_functor(pair_of_morphism(f1)))
    e2 = functor_to_comm(comm_to_functor(pair_of_morphism(f2)))
    a, c = e1.pair, e2.pair
    if a.total.dim != c.total.dim:
        return True, "dimensions differ"
    if not a.f2.map.is_invertible():
        raise CosmosError("extracted unit leg is not invertible")
    phi = compose(c.f2.map, a.f2.map.inverse())
    lhs = compose(phi, a.f.map)
    if lhs == c.f.map:
        return False, None
    from .cosmos import first_difference

    return True, first_difference(lhs, c.f.map)


def full_faithfulness(morphisms: Sequence[MonoidMor]) -> LawReport:
    """Distinct morphisms give distinguishable functors, equal ones do not."""
    rep = LawReport()
    for i, f1 in enumerate(morphisms):
        for j, f2 in enumerate(morphisms):
            if j < i or not (f1.src.same_as(f2.src) and f1.dst.same_as(f2.dst)):
                continue
            distinct, wit = distinguishable(f1, f2)
            same = f1.map == f2.map
            rep.add(f"{f1.name or i} vs {f2.name or j}", distinct != same, wit)
    return rep
