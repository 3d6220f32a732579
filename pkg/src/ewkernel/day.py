"""Day convolution of the functors ``-⊛X`` and ``-⊛Y`` for (b, b')-bimodules.

The convolution is again of the form ``-⊛(X⊛_{b⊗b'}Y)``, where ``X`` and
``Y`` are read as right modules over ``b⊗b'``.  The universal transformation
``θ`` and the factorization of cones through it are computed on
representatives.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .cosmos import (
    Mor,
    braiding,
    coequalizer,
    compose,
    curry,
    factor_through,
    hom_post,
    shuffle,
    tensor,
)
from .functors import TensorBimodule, canonical_left_module, lambda_component
from .laws import LawReport
from .module_tensor import (
    TensorOverResult,
    mtensor,
    mtensor_mor,
    right_unitor_b,
    tensor_over,
    tensor_over_bimodule_mor,
    tensor_over_mor,
    unit_iso,
    unit_iso_inverse,
)
from .modules import (
    Bimodule,
    ModuleMor,
    RightModule,
    bimodule_from_monoid_legs,
    bimodule_to_module,
    check_bimodule,
    check_bimodule_mor,
    hom_module_object,
    module_to_bimodule,
    regular_module,
    restrict_module,
    tensored,
)
from .monoids import CommMonoid, coproduct
from .six_functors import lax_pushforward


@dataclass(eq=False)
class ConvolutionResult:
    X: Bimodule
    Y: Bimodule
    product: Bimodule
    over_pair: TensorOverResult  # the tensor over b⊗b' of the two modules

    @property
    def pres(self):
        return self.over_pair.pres

    def theta(self, w: RightModule, z: RightModule) -> ModuleMor:
        return theta(self, w, z)


def convolve(X: Bimodule, Y: Bimodule) -> ConvolutionResult:
    """``X ⊛_{b⊗b'} Y`` with its induced left and right actions."""
    if not (X.left_over.same_as(Y.left_over) and X.right_over.same_as(Y.right_over)):
        from .modules import ModuleError

        raise ModuleError("convolution needs bimodules over the same pair of algebras")
    b, b2 = X.left_over, X.right_over
    R = mtensor(bimodule_to_module(X), bimodule_to_module(Y))
    cq = R.pres
    rho_raw = compose(cq.proj, tensor(X.left_action, Y.id()))
    rho = factor_through(cq.tensor_id(b.carrier, side="left"), rho_raw, "left action on the convolution")
    gam_raw = compose(cq.proj, tensor(X.id(), Y.right_action))
    gam = factor_through(cq.tensor_id(b2.carrier, side="right"), gam_raw, "right action on the convolution")
    name = f"{X.name or 'X'}*{Y.name or 'Y'}"
    return ConvolutionResult(X, Y, Bimodule(b, b2, cq.quot, rho, gam, name), R)


def iterated_convolution(X: Bimodule, Y: Bimodule):
    """The same quotient taken in two stages: first over ``b``, then over ``b'``.

    Returns the final coequalizer presentation of ``x⊗y``.
    """
    b2 = X.right_over
    field = X.field
    first = mtensor(X.left_as_right_module(), Y.left_as_right_module())
    dx, dy, d2 = X.dim, Y.dim, b2.dim
    # x⊗y⊗b' -> x⊗b'⊗y -> x⊗y
    swap = shuffle([dx, dy, d2], [0, 2, 1], field)
    act_x = compose(first.pres.proj, tensor(X.right_action, Y.id()), swap)
    act_y = compose(first.pres.proj, tensor(X.id(), Y.right_action))
    lifted = first.pres.tensor_id(b2.carrier, side="right")
    g1 = factor_through(lifted, act_x, "right action on x, first stage")
    g2 = factor_through(lifted, act_y, "right action on y, first stage")
    second = coequalizer(g1, g2)
    return first.pres.then(second)


def check_convolution(R: ConvolutionResult) -> LawReport:
    """Bimodule laws, agreement with the coproduct-module route, and the
    coherences of restriction along the two coprojections."""
    rep = LawReport()
    rep.extend(check_bimodule(R.product), "bimodule/")
    X, Y = R.X, R.Y
    b, b2 = X.left_over, X.right_over
    via_module = module_to_bimodule(R.over_pair.result, b, b2)
    rep.equal("left action agrees with the coproduct action", R.product.left_action, via_module.left_action)
    rep.equal("right action agrees with the coproduct action", R.product.right_action, via_module.right_action)
    _, p, p2 = coproduct(b, b2)
    xm, ym = bimodule_to_module(X), bimodule_to_module(Y)
    for label, leg in (("p", p), ("p'", p2)):
        coh = lax_pushforward(leg, xm, ym)
        inner = mtensor(restrict_module(leg, xm), restrict_module(leg, ym))
        rep.equal(f"{label}_* coherence composes to cq", compose(coh.map, inner.pres.proj), R.pres.proj)
    return rep


# ---------------------------------------------------------------------------
# θ


def theta(R: ConvolutionResult, w: RightModule, z: RightModule) -> ModuleMor:
    """``θ_{w,z}: (w⊛X) ⊛_{b'} (z⊛Y) -> (w⊛z) ⊛ (X⊛_{b⊗b'}Y)``.

    On representatives ``[w⊗x]⊗[z⊗y] ↦ [[w⊗z]⊗[x⊗y]]``.
    """
    X, Y = R.X, R.Y
    field = X.field
    wX = tensor_over(w, X)
    zY = tensor_over(z, Y)
    src = mtensor(wX.result, zY.result)
    wz = mtensor(w, z)
    dst = tensor_over(wz.result, R.product)
    reorder = shuffle([w.dim, X.dim, z.dim, Y.dim], [0, 2, 1, 3], field)
    raw = compose(dst.pres.proj, tensor(wz.pres.proj, R.pres.proj), reorder)
    pres = wX.pres.tensor(zY.pres).then(src.pres)
    return ModuleMor(src.result, dst.result, factor_through(pres, raw, "θ"))


def theta_relation(R: ConvolutionResult, w: RightModule, z: RightModule) -> LawReport:
    """Check the defining relation of ``θ`` on ``w⊗x⊗z⊗y`` directly."""
    rep = LawReport()
    X, Y = R.X, R.Y
    t = theta(R, w, z)
    wX = tensor_over(w, X)
    zY = tensor_over(z, Y)
    src = mtensor(wX.result, zY.result)
    wz = mtensor(w, z)
    dst = tensor_over(wz.result, R.product)
    lhs = compose(t.map, src.pres.proj, tensor(wX.pres.proj, zY.pres.proj))
    reorder = shuffle([w.dim, X.dim, z.dim, Y.dim], [0, 2, 1, 3], X.field)
    rhs = compose(dst.pres.proj, tensor(wz.pres.proj, R.pres.proj), reorder)
    rep.equal("θ defining relation", lhs, rhs)
    return rep


def theta_is_epi(R: ConvolutionResult) -> tuple[bool, int, int]:
    """``θ_{b,b}`` has full row rank.  Returns ``(ok, rank, target dim)``."""
    bb = regular_module(R.X.left_over)
    t = theta(R, bb, bb)
    return t.map.rank() == t.dst.dim, t.map.rank(), t.dst.dim


def theta_naturality(R: ConvolutionResult, h: ModuleMor, z: RightModule) -> LawReport:
    """Naturality of ``θ`` in the first variable along ``h: w -> w'``."""
    rep = LawReport()
    X, Y = R.X, R.Y
    w, w2 = h.src, h.dst
    zY = tensor_over(z, Y)
    hX = tensor_over_mor(h, X)
    from .modules import identity_module_mor

    left = mtensor_mor(hX, identity_module_mor(zY.result))
    hz = mtensor_mor(h, identity_module_mor(z))
    right = tensor_over_mor(hz, R.product)
    lhs = compose(theta(R, w2, z).map, left.map)
    rhs = compose(right.map, theta(R, w, z).map)
    rep.equal("θ natural in the first variable", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# the unit object


def unit_bimodule(b: CommMonoid, b2: CommMonoid) -> Bimodule:
    """``b⊗b'`` acted on by ``b`` on the left and ``b'`` on the right."""
    B, p, p2 = coproduct(b, b2)
    U = bimodule_from_monoid_legs(p, p2)
    U.name = "unit"
    return U


def unit_object_iso(b: CommMonoid, b2: CommMonoid, z: RightModule) -> ModuleMor:
    """``z ⊛ (b⊗b') -> M_b(b_b, z) ⊗ b'``, as ``(γ̄_z⊗id)∘e``.

    ``e`` has composite ``γ_z⊗id_{b'}`` with the quotient map and ``γ̄_z`` is the
    transpose of the action landing in equivariant maps.
    """
    U = unit_bimodule(b, b2)
    zU = tensor_over(z, U)
    e = factor_through(zU.pres, tensor(z.action, b2.id()), "e")
    eq = hom_module_object(regular_module(b), z)
    bar = eq.restrict(curry(z.action, z.carrier, b.carrier), "transpose of the action")
    target = tensored(eq.sub, regular_module(b2))
    return ModuleMor(zU.result, target, compose(tensor(bar, b2.id()), e))


def unit_object_naturality(b: CommMonoid, b2: CommMonoid, h: ModuleMor) -> LawReport:
    rep = LawReport()
    U = unit_bimodule(b, b2)
    bb = regular_module(b)
    src_eq = hom_module_object(bb, h.src)
    dst_eq = hom_module_object(bb, h.dst)
    post = dst_eq.restrict(compose(hom_post(h.map, b.carrier), src_eq.incl), "postcomposition")
    lhs = compose(tensor(post, b2.id()), unit_object_iso(b, b2, h.src).map)
    rhs = compose(unit_object_iso(b, b2, h.dst).map, tensor_over_mor(h, U).map)
    rep.equal("unit iso natural", lhs, rhs)
    return rep


def unit_law(Y: Bimodule) -> ModuleMor:
    """``unit ⊛_{b⊗b'} Y -> Y`` induced by the action of ``b⊗b'`` on ``Y``."""
    U = unit_bimodule(Y.left_over, Y.right_over)
    R = convolve(U, Y)
    ym = bimodule_to_module(Y)
    raw = compose(ym.action, braiding(U.carrier, Y.carrier, Y.field))
    return ModuleMor(R.over_pair.result, ym, factor_through(R.pres, raw, "unit law"))


# ---------------------------------------------------------------------------
# symmetry and the monoid correspondence


def convolution_braiding(X: Bimodule, Y: Bimodule) -> ModuleMor:
    a, c = convolve(X, Y), convolve(Y, X)
    raw = compose(c.pres.proj, braiding(X.carrier, Y.carrier, X.field))
    return ModuleMor(a.over_pair.result, c.over_pair.result, factor_through(a.pres, raw, "braiding"))


def check_symmetry(X: Bimodule, Y: Bimodule) -> LawReport:
    rep = LawReport()
    s = convolution_braiding(X, Y)
    back = convolution_braiding(Y, X)
    rep.add("braiding invertible", s.is_invertible())
    rep.equal("braiding is an involution", compose(back.map, s.map), s.src.id())
    rep.extend(check_bimodule_mor(convolve(X, Y).product, convolve(Y, X).product, s.map), "braiding bimodule map/")
    return rep


def monoid_correspondence(pair, samples) -> LawReport:
    """For an algebra under ``b⊗b'``, the convolution square composed with its
    product reproduces the binary coherence of the associated functor."""
    from .main_equivalence import comm_binary_coherence

    rep = LawReport()
    X = pair.bimodule()
    R = convolve(X, X)
    mult = factor_through(R.pres, pair.total.product, "product over the coproduct")
    for n, x in enumerate(samples):
        for m, y in enumerate(samples):
            t = theta(R, x, y)
            xy = mtensor(x, y).result
            after = tensor_over_bimodule_mor(xy, mult, R.product, X)
            lhs = compose(after.map, t.map)
            rhs = comm_binary_coherence(pair, x, y).map
            rep.equal(f"convolution monoid gives coherence[{n},{m}]", lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# universal property


@dataclass(eq=False)
class Factorization:
    psi: Mor  # X⊛_{b⊗b'}Y -> b⊛Z
    psi0: Mor  # X⊛_{b⊗b'}Y -> Z
    xi: Callable[[RightModule], ModuleMor]
    report: LawReport


def planted_cone(R: ConvolutionResult, Z: Bimodule, psi0: Mor):
    """``α_{w,z} = ((w⊛z)⊛ψ₀)∘θ_{w,z}``."""

    def alpha(w, z):
        t = theta(R, w, z)
        wz = mtensor(w, z).result
        return compose(tensor_over_bimodule_mor(wz, psi0, R.product, Z).map, t.map)

    return alpha


def universal_factorization(
    R: ConvolutionResult,
    Z: Bimodule,
    alpha: Callable[[RightModule, RightModule], Mor],
    samples=(),
    planted: Mor | None = None,
) -> Factorization:
    """Recover ``ξ`` with ``α = ξ_{w⊛z}∘θ_{w,z}`` from ``α`` at ``(b, b)``."""
    rep = LawReport()
    X, Y = R.X, R.Y
    b = X.left_over
    bb = regular_module(b)
    # φ = Z(ȷ_b) ∘ α_{b,b} ∘ (ι_X^{-1} ⊛ ι_Y^{-1})
    ix, iy = unit_iso_inverse(X), unit_iso_inverse(Y)
    xy = mtensor(X.right_module(), Y.right_module())
    inv = mtensor_mor(ix, iy, src=xy)
    jb = tensor_over_mor(right_unitor_b(bb), Z)
    phi = compose(jb.map, alpha(bb, bb), inv.map)
    can = canonical_left_module(TensorBimodule(Z))
    psi = factor_through(R.pres, compose(phi, xy.pres.proj), "ψ")
    psi0 = compose(unit_iso(Z).map, psi)
    rep.extend(check_bimodule_mor(R.product, can, psi), "ψ bimodule map/")
    if planted is not None:
        rep.equal("planted ψ₀ recovered", psi0, planted)

    def xi(z: RightModule) -> ModuleMor:
        lam = lambda_component(TensorBimodule(Z), z, can)
        zpsi = tensor_over_bimodule_mor(z, psi, R.product, can)
        return ModuleMor(zpsi.src, lam.dst, compose(lam.map, zpsi.map))

    for n, (w, z) in enumerate(samples):
        wz = mtensor(w, z).result
        rep.equal(f"α factors through θ[{n}]", compose(xi(wz).map, theta(R, w, z).map), alpha(w, z))
    return Factorization(psi, psi0, xi, rep)


def uniqueness_check(R: ConvolutionResult, alpha, candidate: Mor) -> LawReport:
    """A candidate component at ``b⊛b`` is accepted iff it factors ``α_{b,b}``.

    Since ``θ_{b,b}`` is an epimorphism, at most one candidate can pass.
    """
    rep = LawReport()
    bb = regular_module(R.X.left_over)
    t = theta(R, bb, bb)
    ok, rank, dim = theta_is_epi(R)
    rep.add("θ at (b,b) is epi", ok, {"rank": rank, "dim": dim})
    rep.equal("candidate factors α", compose(candidate, t.map), alpha(bb, bb))
    return rep


def check_day(X: Bimodule, Y: Bimodule, samples, rng: random.Random) -> LawReport:
    """Everything about one pair of bimodules, on sampled right b-modules."""
    from .modules import random_module_mor

    rep = LawReport()
    R = convolve(X, Y)
    rep.extend(check_convolution(R), "convolution/")
    full = iterated_convolution(X, Y)
    rep.add("matches the iterated quotient", full.quot.dim == R.product.dim, {"direct": R.product.dim, "iterated": full.quot.dim})
    ok, rank, dim = theta_is_epi(R)
    rep.add("θ at (b,b) full row rank", ok, {"rank": rank, "dim": dim})
    for n, w in enumerate(samples):
        for m, z in enumerate(samples[:2]):
            rep.extend(theta_relation(R, w, z), f"[{n},{m}]")
    if len(samples) >= 2:
        h = random_module_mor(samples[0], samples[1], rng)
        rep.extend(theta_naturality(R, h, samples[0]), "")
    rep.extend(check_symmetry(X, Y), "symmetry/")
    # planted factorization into Z = X⊛Y through a random endomorphism
    P = R.product
    pm = bimodule_to_module(P)
    psi0 = random_module_mor(pm, pm, rng).map
    alpha = planted_cone(R, P, psi0)
    pairs = [(w, z) for w in samples[:2] for z in samples[:2]]
    fac = universal_factorization(R, P, alpha, pairs, planted=psi0)
    rep.extend(fac.report, "factorization/")
    return rep
