"""Extension and restriction of scalars along an algebra map ``f: b -> b'``.

``f*`` tensors with ``b'`` viewed as a (b, b')-bimodule, ``f_*`` restricts
scalars, ``f_!`` tensors with ``b'`` viewed as a (b', b)-bimodule and ``f^!``
is the Hom out of that same bimodule.  ``f*`` carries an invertible tensor
structure, ``f_*`` a lax one, and the two are related by the projection
formula.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .cosmos import compose, factor_through, shuffle, tensor
from .functors import (
    HomModule,
    LaxFunctor,
    LaxStructure,
    Restrict,
    TensorBimodule,
    check_lax_axioms,
)
from .laws import LawReport
from .module_tensor import (
    adjunction_triangles,
    adjunction_unit,
    adjunction_counit,
    induced_from_raw,
    mtensor,
    mtensor_mor,
    right_unitor_b_inverse,
    tensor_over,
    tensor_over_mor,
    unit_iso,
    unit_iso_inverse,
)
from .modules import (
    Bimodule,
    ModuleMor,
    RightModule,
    bimodule_from_monoid_legs,
    random_module_mor,
    regular_module,
    restrict_module,
)
from .monoids import MonoidMor, identity_mor


@dataclass(eq=False)
class SixFunctorPack:
    f: MonoidMor
    pullback: TensorBimodule
    pushforward: Restrict
    shriek: TensorBimodule
    upper_shriek: HomModule

    @property
    def pull_bimodule(self) -> Bimodule:
        """``b'`` as a (b, b')-bimodule."""
        return self.pullback.X

    @property
    def shriek_bimodule(self) -> Bimodule:
        """``b'`` as a (b', b)-bimodule."""
        return self.shriek.X

    # f* ⊣ f_* --------------------------------------------------------------
    def pullback_unit(self, x: RightModule) -> ModuleMor:
        """``η_x = (id⊛f)∘ȷ_x^{-1}: x -> f_*f*(x)``."""
        f = self.f
        b = f.src
        src = mtensor(x, regular_module(b))
        dst = tensor_over(x, self.pull_bimodule)
        id_f = induce_map(src, dst, compose(dst.pres.proj, tensor(x.id(), f.map)))
        m = compose(id_f, right_unitor_b_inverse(x).map)
        return ModuleMor(x, restrict_module(f, dst.result), m)

    def pullback_counit(self, y: RightModule) -> ModuleMor:
        """``ε_y: f*f_*(y) -> y`` with ``ε∘cq = γ_y``."""
        src = tensor_over(restrict_module(self.f, y), self.pull_bimodule)
        return induced_from_raw(src, y, y.action, "counit of extension/restriction")

    # f_! ⊣ f^! -------------------------------------------------------------
    def shriek_unit(self, y: RightModule) -> ModuleMor:
        return adjunction_unit(y, self.shriek_bimodule)

    def shriek_counit(self, x: RightModule) -> ModuleMor:
        return adjunction_counit(x, self.shriek_bimodule)

    def shriek_star(self, y: RightModule) -> ModuleMor:
        return shriek_star_iso(self, y)


def induce_map(src, dst, raw):
    from .cosmos import induce_through_coequalizer

    return induce_through_coequalizer(src.pres, raw)


def build_pack(f: MonoidMor) -> SixFunctorPack:
    b2 = f.dst
    pull = bimodule_from_monoid_legs(f, identity_mor(b2))
    pull.name = f"{b2.name}[{f.src.name},{b2.name}]"
    shr = bimodule_from_monoid_legs(identity_mor(b2), f)
    shr.name = f"{b2.name}[{b2.name},{f.src.name}]"
    return SixFunctorPack(f, TensorBimodule(pull), Restrict(f), TensorBimodule(shr), HomModule(shr))


def shriek_star_iso(pack: SixFunctorPack, y: RightModule) -> ModuleMor:
    """``f_!(y) -> f_*(y)``, the right unitor of ``y`` read over ``b``."""
    src = tensor_over(y, pack.shriek_bimodule)
    return induced_from_raw(src, restrict_module(pack.f, y), y.action, "f_! ≅ f_*")


# ---------------------------------------------------------------------------
# lax and strong tensor structures


def lax_pushforward(f: MonoidMor, x: RightModule, y: RightModule) -> ModuleMor:
    """``(f_*)_{x,y}: f_*x ⊛_b f_*y -> f_*(x ⊛_{b'} y)`` with composite ``cq_{b'}``."""
    src = mtensor(restrict_module(f, x), restrict_module(f, y))
    dst = mtensor(x, y)
    return induced_from_raw(src, restrict_module(f, dst.result), dst.pres.proj, "lax coherence of restriction")


def lax_pushforward_unit(f: MonoidMor) -> ModuleMor:
    """``(f_*)_{b'} = f`` as a module map ``b_b -> f_*(b'_{b'})``."""
    return ModuleMor(regular_module(f.src), restrict_module(f, regular_module(f.dst)), f.map)


def pushforward_lax(f: MonoidMor) -> LaxFunctor:
    return LaxFunctor(
        Restrict(f),
        LaxStructure(lax_pushforward_unit(f), lambda x, y: lax_pushforward(f, x, y)),
        f"{f.name}_*",
    )


def pullback_coherence(x: RightModule, y: RightModule, X: Bimodule, target_algebra_product, over_target: bool = True) -> ModuleMor:
    """The map ``(x⊛X)⊛(y⊛X) -> (x⊛y)⊛X`` determined on ``x⊗X⊗y⊗X`` by
    ``x⊗β⊗y⊗β' ↦ [[x⊗y]⊗ββ']``.

    ``X`` must be a commutative algebra viewed as a bimodule and
    ``target_algebra_product`` its multiplication.  The outer tensor on the
    source is taken over the right algebra of ``X``.
    """
    field = x.field
    fx = tensor_over(x, X)
    fy = tensor_over(y, X)
    src = mtensor(fx.result, fy.result)
    xy = mtensor(x, y)
    dst = tensor_over(xy.result, X)
    dX = X.dim
    reorder = shuffle([x.dim, dX, y.dim, dX], [0, 2, 1, 3], field)
    raw = compose(dst.pres.proj, tensor(xy.pres.proj, target_algebra_product), reorder)
    pres = fx.pres.tensor(fy.pres).then(src.pres)
    return ModuleMor(src.result, dst.result, factor_through(pres, raw, "tensor coherence"))


def tensor_pullback(f: MonoidMor, x: RightModule, y: RightModule) -> ModuleMor:
    """``(f*)_{x,y}: f*x ⊛_{b'} f*y -> f*(x ⊛_b y)``."""
    pack = build_pack(f)
    return pullback_coherence(x, y, pack.pull_bimodule, f.dst.product)


def tensor_pullback_unit(f: MonoidMor) -> ModuleMor:
    """``(f*)_{b_b} = ι^{-1}: b'_{b'} -> b_b ⊛ b'``."""
    return unit_iso_inverse(build_pack(f).pull_bimodule)


def pullback_strong(f: MonoidMor) -> LaxFunctor:
    pack = build_pack(f)
    X = pack.pull_bimodule
    return LaxFunctor(
        pack.pullback,
        LaxStructure(unit_iso_inverse(X), lambda x, y: pullback_coherence(x, y, X, f.dst.product)),
        f"{f.name}^*",
    )


def mate_check(f: MonoidMor, x: RightModule, y: RightModule) -> LawReport:
    """The colax structure obtained from the adjunction is inverse to ``(f*)_{x,y}``.

    ``ε_{f*x⊛f*y} ∘ f*((f_*)_{f*x,f*y}) ∘ f*(η_x⊛η_y) = ((f*)_{x,y})^{-1}``
    and ``ε_{b'} ∘ f*((f_*)_{b'}) = ι``.
    """
    rep = LawReport()
    pack = build_pack(f)
    X = pack.pull_bimodule
    eta_x, eta_y = pack.pullback_unit(x), pack.pullback_unit(y)
    fx, fy = eta_x.dst, eta_y.dst  # f_*f*x, f_*f*y over b
    step1 = tensor_over_mor(mtensor_mor(eta_x, eta_y), X)
    fx_ = tensor_over(x, X).result
    fy_ = tensor_over(y, X).result
    lax = lax_pushforward(f, fx_, fy_)
    step2 = tensor_over_mor(lax, X)
    eps = pack.pullback_counit(mtensor(fx_, fy_).result)
    colax = compose(eps.map, step2.map, step1.map)
    strong = tensor_pullback(f, x, y)
    rep.add("tensor coherence invertible", strong.is_invertible())
    if strong.is_invertible():
        rep.equal("mate equals inverse", colax, strong.inverse().map)
    unit_side = compose(pack.pullback_counit(regular_module(f.dst)).map, tensor_over_mor(lax_pushforward_unit(f), X).map)
    rep.equal("mate of unit coherence is ι", unit_side, unit_iso(X).map)
    return rep


# ---------------------------------------------------------------------------
# projection formula


def _bimodule_on_free(f: MonoidMor, y: RightModule):
    """``b' ⊛_{b'} y`` with its left b-action through ``f``."""
    from .modules import Bimodule as _Bimodule

    b, b2 = f.src, f.dst
    mid = mtensor(regular_module(b2), y)
    raw = compose(mid.pres.proj, tensor(compose(b2.product, tensor(f.map, b2.id())), y.id()))
    rho = factor_through(mid.pres.tensor_id(b.carrier, side="left"), raw, "left action on b'⊛y")
    M = _Bimodule(b, b2, mid.quot, rho, mid.result.action, "b'⊛y")
    return mid, M


def projection_formula(f: MonoidMor, x: RightModule, y: RightModule) -> ModuleMor:
    """``x ⊛_b f_*(y) -> f_*(f*(x) ⊛_{b'} y)`` as ``(f_*)_{f*x,y} ∘ (η_x ⊛ id)``."""
    pack = build_pack(f)
    eta = pack.pullback_unit(x)
    fy = restrict_module(f, y)
    from .modules import identity_module_mor

    step = mtensor_mor(eta, identity_module_mor(fy))
    fx = tensor_over(x, pack.pull_bimodule).result
    lax = lax_pushforward(f, fx, y)
    return ModuleMor(step.src, lax.dst, compose(lax.map, step.map))


def projection_formula_closed_form(f: MonoidMor, x: RightModule, y: RightModule) -> ModuleMor:
    """``a_{x,b',y} ∘ (id_x ⊛ ι_y^{-1})``, assembled in two induced steps."""
    pack = build_pack(f)
    fy = restrict_module(f, y)
    src = mtensor(x, fy)
    mid, M = _bimodule_on_free(f, y)
    xm = tensor_over(x, M)
    iota_inv = compose(mid.pres.proj, tensor(f.dst.unit, y.id()))
    step1 = factor_through(src.pres, compose(xm.pres.proj, tensor(x.id(), iota_inv)), "id⊛ι^{-1}")
    fx = tensor_over(x, pack.pull_bimodule)
    outer = mtensor(fx.result, y)
    raw = compose(outer.pres.proj, tensor(fx.pres.proj, y.id()))
    pres = mid.pres.tensor_id(x.carrier, side="left").then(xm.pres)
    step2 = factor_through(pres, raw, "mixed associator")
    return ModuleMor(src.result, restrict_module(f, outer.result), compose(step2, step1))


# ---------------------------------------------------------------------------
# aggregate law report


def check_pack(
    f: MonoidMor,
    xs: Sequence[RightModule],
    ys: Sequence[RightModule],
    rng: random.Random,
    lax_axioms: bool = True,
) -> LawReport:
    """Adjunction triangles, ``f_! ≅ f_*``, mates and the projection formula on samples.

    ``xs`` are modules over the source algebra, ``ys`` over the target.
    """
    rep = LawReport()
    pack = build_pack(f)
    X = pack.pull_bimodule
    for n, x in enumerate(xs):
        eta = pack.pullback_unit(x)
        fx = tensor_over(x, X)
        eps = pack.pullback_counit(fx.result)
        rep.equal(f"f*⊣f_* left triangle[{n}]", compose(eps.map, tensor_over_mor(eta, X, src=fx).map), fx.result.id())
    for n, y in enumerate(ys):
        eps = pack.pullback_counit(y)
        fy = restrict_module(f, y)
        eta = pack.pullback_unit(fy)
        rep.equal(f"f*⊣f_* right triangle[{n}]", compose(eps.map, eta.map), y.id())
    for n, (y, x) in enumerate(zip(ys, xs)):
        rep.extend(adjunction_triangles(y, x, pack.shriek_bimodule), f"f_!⊣f^![{n}]/")
    for n, y in enumerate(ys):
        iso = pack.shriek_star(y)
        rep.add(f"f_!≅f_* invertible[{n}]", iso.is_invertible())
    if len(ys) >= 2:
        h = random_module_mor(ys[0], ys[1], rng)
        lhs = compose(pack.shriek_star(ys[1]).map, pack.shriek.apply_mor(h).map)
        rhs = compose(pack.pushforward.apply_mor(h).map, pack.shriek_star(ys[0]).map)
        rep.equal("f_!≅f_* natural", lhs, rhs)
    for n, (x, y) in enumerate(zip(xs, ys)):
        can = projection_formula(f, x, y)
        closed = projection_formula_closed_form(f, x, y)
        rep.add(f"projection formula invertible[{n}]", can.is_invertible())
        rep.equal(f"projection formula closed form[{n}]", can.map, closed.map)
    for n in range(min(2, len(xs))):
        x, x2 = xs[n], xs[(n + 1) % len(xs)]
        rep.extend(mate_check(f, x, x2), f"mate[{n}]/")
    if lax_axioms:
        rep.extend(check_lax_axioms(pushforward_lax(f), ys[:3], rng, max_triples=2), "f_* lax/")
        rep.extend(check_lax_axioms(pullback_strong(f), xs[:3], rng, max_triples=2), "f* strong/")
        for n, (x, x2) in enumerate(zip(xs, xs[1:])):
            rep.add(f"f* coherence invertible[{n}]", tensor_pullback(f, x, x2).is_invertible())
    return rep
