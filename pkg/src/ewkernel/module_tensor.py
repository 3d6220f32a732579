"""Tensor products over a commutative algebra, computed as coequalizers.

``z ⊛_b X`` is the quotient of ``z⊗X`` by the image of
``γ_z⊗id_X - id_z⊗ρ_X`` on ``z⊗b⊗X``.  Every map out of such a tensor
product is produced by factoring a map on ``z⊗X`` through the stored
presentation, and every factorization is checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosmos import (
    CoeqPresentation,
    EqPresentation,
    Mor,
    Obj,
    Presentation,
    braiding,
    coequalizer,
    coevaluation,
    compose,
    evaluation,
    factor_through,
    hom_post,
    hom_pre,
    identity,
    induce_through_coequalizer,
    tensor,
    tensor_obj,
)
from .laws import LawReport
from .modules import (
    Bimodule,
    ModuleError,
    ModuleMor,
    RightModule,
    _basis_point,
    _same_base,
    hom_module_object,
    identity_module_mor,
    opposite_left_action,
    regular_module,
    tensored,
)


@dataclass(eq=False)
class TensorOverResult:
    """``z ⊛_b X`` together with the coequalizer presenting it."""

    result: RightModule
    pres: CoeqPresentation
    left: RightModule
    bimodule: Bimodule

    @property
    def quot(self) -> Obj:
        return self.pres.quot

    @property
    def dim(self) -> int:
        return self.pres.quot.dim


def _actions_pair(z: RightModule, X: Bimodule):
    _same_base(z.over, X.left_over, "tensor over")
    f = tensor(z.action, X.id())
    g = tensor(z.id(), X.left_action)
    return f, g


def tensor_over(z: RightModule, X: Bimodule) -> TensorOverResult:
    """``z ⊛_b X`` as a right module over the right algebra of ``X``."""
    f, g = _actions_pair(z, X)
    pres = coequalizer(f, g)
    b2 = X.right_over
    raw = compose(pres.proj, tensor(z.id(), X.right_action))
    act = factor_through(pres.tensor_id(b2.carrier), raw, "induced right action")
    name = f"{z.name}⊛{X.name}" if z.name and X.name else None
    return TensorOverResult(RightModule(b2, pres.quot, act, name), pres, z, X)


def induced_from_raw(src: TensorOverResult, dst: RightModule, raw: Mor, what: str = "map") -> ModuleMor:
    """The module map out of ``src`` whose composite with ``cq`` is ``raw``."""
    return ModuleMor(src.result, dst, induce_through_coequalizer(src.pres, raw))


def tensor_over_mor(
    h: ModuleMor,
    X: Bimodule,
    src: TensorOverResult | None = None,
    dst: TensorOverResult | None = None,
) -> ModuleMor:
    """``h ⊛ X``: the map with ``(h⊛X)∘cq = cq'∘(h⊗id_X)``."""
    src = src or tensor_over(h.src, X)
    dst = dst or tensor_over(h.dst, X)
    raw = compose(dst.pres.proj, tensor(h.map, X.id()))
    return induced_from_raw(src, dst.result, raw, "h⊛X")


def tensor_over_bimodule_mor(
    z: RightModule,
    xi: Mor,
    X: Bimodule,
    Y: Bimodule,
    src: TensorOverResult | None = None,
    dst: TensorOverResult | None = None,
) -> ModuleMor:
    """``z ⊛ ξ`` for a bimodule map ``ξ: X -> Y``."""
    src = src or tensor_over(z, X)
    dst = dst or tensor_over(z, Y)
    raw = compose(dst.pres.proj, tensor(z.id(), xi))
    return induced_from_raw(src, dst.result, raw, "z⊛ξ")


def strength_assoc(w: Obj, z: RightModule, X: Bimodule) -> ModuleMor:
    """``a_{w,z,X}: w⊗(z⊛X) -> (w⊗z)⊛X`` with ``a∘(id_w⊗cq) = cq``."""
    inner = tensor_over(z, X)
    outer = tensor_over(tensored(w, z), X)
    src_mod = tensored(w, inner.result)
    pres = inner.pres.tensor_id(w, side="left")
    return ModuleMor(src_mod, outer.result, factor_through(pres, outer.pres.proj, "strength"))


# ---------------------------------------------------------------------------
# adjunction  -⊛X  ⊣  Hom(X, -)


@dataclass(eq=False)
class HomBimoduleResult:
    """``Hom_{b'}(X, Y)`` as a right module over the left algebra of ``X``."""

    result: RightModule
    eq: EqPresentation
    bimodule: Bimodule
    target: RightModule


def action_from_operators(carrier: Obj, ops: list[Mor], field) -> Mor:
    """Assemble ``x⊗b -> x`` from the operators ``v ↦ v·e_β``."""
    db = len(ops)
    m = field.matrix(carrier.dim, carrier.dim * db)
    for beta, op in enumerate(ops):
        rows = op.mat.tolist()
        for i in range(carrier.dim):
            row = rows[i]
            for r in range(carrier.dim):
                v = row[r]
                if v != 0:
                    m[i, r * db + beta] = v
    return Mor(tensor_obj(carrier, Obj(db)), carrier, m, field)


def hom_bimodule(X: Bimodule, Y: RightModule) -> HomBimoduleResult:
    """Equivariant maps ``X -> Y`` over the right algebra, acted on through ``ρ_X``."""
    _same_base(X.right_over, Y.over, "hom from bimodule")
    field = X.field
    b = X.left_over
    eq = hom_module_object(X.right_module(), Y)
    ops = []
    for beta in range(b.dim):
        e = _basis_point(b.carrier, beta, field)
        m_beta = compose(X.left_action, tensor(e, X.id()))  # x ↦ ρ(e_β⊗x)
        op = compose(hom_pre(m_beta, Y.carrier), eq.incl)
        ops.append(eq.restrict(op, "precomposition with the left action"))
    act = action_from_operators(eq.sub, ops, field)
    return HomBimoduleResult(RightModule(b, eq.sub, act), eq, X, Y)


def hom_bimodule_mor(X: Bimodule, h: ModuleMor, src: HomBimoduleResult | None = None, dst: HomBimoduleResult | None = None) -> ModuleMor:
    """``Hom(X, h)`` by postcomposition."""
    src = src or hom_bimodule(X, h.src)
    dst = dst or hom_bimodule(X, h.dst)
    m = compose(hom_post(h.map, X.carrier), src.eq.incl)
    return ModuleMor(src.result, dst.result, dst.eq.restrict(m, "postcomposition"))


def adjunction_unit(z: RightModule, X: Bimodule) -> ModuleMor:
    """``η_z: z -> Hom(X, z⊛X)``: coevaluation followed by ``hom(X, cq)``."""
    zx = tensor_over(z, X)
    R = hom_bimodule(X, zx.result)
    raw = compose(hom_post(zx.pres.proj, X.carrier), coevaluation(z.carrier, X.carrier, X.field))
    return ModuleMor(z, R.result, R.eq.restrict(raw, "unit"))


def adjunction_counit(Y: RightModule, X: Bimodule) -> ModuleMor:
    """``ε_Y: Hom(X, Y)⊛X -> Y`` with ``ε∘cq = Ev∘(incl⊗id_X)``."""
    R = hom_bimodule(X, Y)
    src = tensor_over(R.result, X)
    raw = compose(evaluation(X.carrier, Y.carrier, X.field), tensor(R.eq.incl, X.id()))
    return induced_from_raw(src, Y, raw, "counit")


def adjunction_triangles(z: RightModule, Y: RightModule, X: Bimodule) -> LawReport:
    """Both triangle identities of ``-⊛X ⊣ Hom(X, -)`` at ``z`` and ``Y``."""
    rep = LawReport()
    zx = tensor_over(z, X)
    eta = adjunction_unit(z, X)
    eps = adjunction_counit(zx.result, X)
    eta_x = tensor_over_mor(eta, X, src=zx)
    rep.equal("left triangle", compose(eps.map, eta_x.map), zx.result.id())
    R = hom_bimodule(X, Y)
    eta_r = adjunction_unit(R.result, X)
    eps_y = adjunction_counit(Y, X)
    r_eps = hom_bimodule_mor(X, eps_y, dst=R)
    rep.equal("right triangle", compose(r_eps.map, eta_r.map), R.result.id())
    return rep


def unit_iso(X: Bimodule) -> ModuleMor:
    """``ι_X: b_b ⊛ X -> X`` with ``ι∘cq = ρ_X``."""
    b = X.left_over
    src = tensor_over(regular_module(b), X)
    return induced_from_raw(src, X.right_module(), X.left_action, "unit isomorphism")


def unit_iso_inverse(X: Bimodule) -> ModuleMor:
    """``cq∘(u_b⊗id_X)``."""
    b = X.left_over
    src = tensor_over(regular_module(b), X)
    return ModuleMor(X.right_module(), src.result, compose(src.pres.proj, tensor(b.unit, X.id())))


# ---------------------------------------------------------------------------
# the symmetric monoidal structure on right modules


def mtensor(x: RightModule, y: RightModule) -> TensorOverResult:
    """``x ⊛_b y``, with ``y`` made a bimodule through the braiding."""
    _same_base(x.over, y.over, "module tensor")
    return tensor_over(x, opposite_left_action(y))


def mtensor_mor(
    h: ModuleMor,
    k: ModuleMor,
    src: TensorOverResult | None = None,
    dst: TensorOverResult | None = None,
) -> ModuleMor:
    """``h ⊛ k`` with ``(h⊛k)∘cq = cq'∘(h⊗k)``."""
    src = src or mtensor(h.src, k.src)
    dst = dst or mtensor(h.dst, k.dst)
    raw = compose(dst.pres.proj, tensor(h.map, k.map))
    return induced_from_raw(src, dst.result, raw, "h⊛k")


def left_unitor_b(x: RightModule) -> ModuleMor:
    """``b_b ⊛ x -> x`` with composite ``γ_x∘s`` on ``b⊗x``."""
    src = mtensor(regular_module(x.over), x)
    raw = compose(x.action, braiding(x.over.carrier, x.carrier, x.field))
    return induced_from_raw(src, x, raw, "left unitor")


def left_unitor_b_inverse(x: RightModule) -> ModuleMor:
    b = x.over
    src = mtensor(regular_module(b), x)
    return ModuleMor(x, src.result, compose(src.pres.proj, tensor(b.unit, x.id())))


def right_unitor_b(x: RightModule) -> ModuleMor:
    """``x ⊛ b_b -> x`` with composite ``γ_x`` on ``x⊗b``."""
    src = mtensor(x, regular_module(x.over))
    return induced_from_raw(src, x, x.action, "right unitor")


def right_unitor_b_inverse(x: RightModule) -> ModuleMor:
    b = x.over
    src = mtensor(x, regular_module(b))
    return ModuleMor(x, src.result, compose(src.pres.proj, tensor(x.id(), b.unit)))


def associator_b(z: RightModule, x: RightModule, y: RightModule) -> ModuleMor:
    """``z⊛(x⊛y) -> (z⊛x)⊛y``, induced by the identity on ``z⊗x⊗y``."""
    xy = mtensor(x, y)
    src = mtensor(z, xy.result)
    zx = mtensor(z, x)
    dst = mtensor(zx.result, y)
    pres = xy.pres.tensor_id(z.carrier, side="left").then(src.pres)
    raw = compose(dst.pres.proj, tensor(zx.pres.proj, y.id()))
    return ModuleMor(src.result, dst.result, factor_through(pres, raw, "associator"))


def braiding_b(x: RightModule, y: RightModule) -> ModuleMor:
    """``x⊛y -> y⊛x`` with ``s∘cq = cq∘s``."""
    src = mtensor(x, y)
    dst = mtensor(y, x)
    raw = compose(dst.pres.proj, braiding(x.carrier, y.carrier, x.field))
    return induced_from_raw(src, dst.result, raw, "braiding")


def internal_hom_b(x: RightModule, y: RightModule) -> RightModule:
    """``Hom_b(x, y)``: equivariant maps with the pointwise action."""
    return hom_bimodule(opposite_left_action(x), y).result


# ---------------------------------------------------------------------------
# coherence checks


def pentagon(w: RightModule, z: RightModule, x: RightModule, y: RightModule) -> LawReport:
    """``(a⊛id)∘a∘(id⊛a) = a∘a`` as maps ``w⊛(z⊛(x⊛y)) -> ((w⊛z)⊛x)⊛y``."""
    rep = LawReport()
    xy = mtensor(x, y)
    zx = mtensor(z, x)
    wz = mtensor(w, z)
    a_zxy = associator_b(z, x, y)
    a_w_zx_y = associator_b(w, zx.result, y)
    a_wzx = associator_b(w, z, x)
    lhs = compose(
        mtensor_mor(a_wzx, identity_module_mor(y)).map,
        a_w_zx_y.map,
        mtensor_mor(identity_module_mor(w), a_zxy).map,
    )
    rhs = compose(associator_b(wz.result, x, y).map, associator_b(w, z, xy.result).map)
    rep.equal("pentagon", lhs, rhs)
    return rep


def triangle(x: RightModule, y: RightModule) -> LawReport:
    """``(ȷ_x⊛id_y)∘a_{x,b,y} = id_x⊛ι_y``."""
    rep = LawReport()
    b = regular_module(x.over)
    lhs = compose(
        mtensor_mor(right_unitor_b(x), identity_module_mor(y)).map,
        associator_b(x, b, y).map,
    )
    rhs = mtensor_mor(identity_module_mor(x), left_unitor_b(y)).map
    rep.equal("triangle", lhs, rhs)
    return rep


def hexagon(x: RightModule, y: RightModule, z: RightModule) -> LawReport:
    """Hexagon for ``α = a^{-1}: (x⊛y)⊛z -> x⊛(y⊛z)``.

    ``α_{y,z,x}∘s_{x,y⊛z}∘α_{x,y,z} = (id_y⊛s_{x,z})∘α_{y,x,z}∘(s_{x,y}⊛id_z)``
    """
    rep = LawReport()
    yz = mtensor(y, z)
    alpha_xyz = associator_b(x, y, z).inverse()
    alpha_yzx = associator_b(y, z, x).inverse()
    alpha_yxz = associator_b(y, x, z).inverse()
    lhs = compose(alpha_yzx.map, braiding_b(x, yz.result).map, alpha_xyz.map)
    rhs = compose(
        mtensor_mor(identity_module_mor(y), braiding_b(x, z)).map,
        alpha_yxz.map,
        mtensor_mor(braiding_b(x, y), identity_module_mor(z)).map,
    )
    rep.equal("hexagon", lhs, rhs)
    return rep


def symmetry(x: RightModule, y: RightModule) -> LawReport:
    rep = LawReport()
    rep.equal("symmetry", compose(braiding_b(y, x).map, braiding_b(x, y).map), mtensor(x, y).result.id())
    return rep


def closedness(z: RightModule, x: RightModule, y: RightModule, rng=None) -> LawReport:
    """Hom spaces on both sides of the tensor-hom adjunction match, and transposition round-trips."""
    from .modules import hom_module_object as hmo
    from .modules import random_module_mor

    rep = LawReport()
    X = opposite_left_action(x)
    zx = tensor_over(z, X)
    H = hom_bimodule(X, y)
    lhs_space = hmo(zx.result, y)
    rhs_space = hmo(z, H.result)
    rep.add("hom dimensions agree", lhs_space.sub.dim == rhs_space.sub.dim, (lhs_space.sub.dim, rhs_space.sub.dim))
    if rng is not None:
        phi = random_module_mor(zx.result, y, rng)
        eta = adjunction_unit(z, X)
        transposed = compose(hom_bimodule_mor(X, phi, dst=H).map, eta.map)
        eps = adjunction_counit(y, X)
        back = compose(eps.map, tensor_over_mor(ModuleMor(z, H.result, transposed), X, src=zx).map)
        rep.equal("transpose round trip", back, phi.map)
    return rep


def unit_iso_checks(X: Bimodule) -> LawReport:
    rep = LawReport()
    iota = unit_iso(X)
    inv = unit_iso_inverse(X)
    src = tensor_over(regular_module(X.left_over), X)
    rep.equal("ι∘cq = ρ", compose(iota.map, src.pres.proj), X.left_action)
    rep.add("ι invertible", iota.is_invertible())
    rep.equal("ι∘ι⁻¹ = id", compose(iota.map, inv.map), X.id())
    rep.equal("ι⁻¹∘ι = id", compose(inv.map, iota.map), src.result.id())
    return rep


def induced_action_ok(r: TensorOverResult) -> bool:
    from .modules import check_module

    return check_module(r.result).ok


__all__ = [
    "TensorOverResult",
    "tensor_over",
    "tensor_over_mor",
    "tensor_over_bimodule_mor",
    "strength_assoc",
    "hom_bimodule",
    "hom_bimodule_mor",
    "adjunction_unit",
    "adjunction_counit",
    "adjunction_triangles",
    "unit_iso",
    "unit_iso_inverse",
    "mtensor",
    "mtensor_mor",
    "left_unitor_b",
    "left_unitor_b_inverse",
    "right_unitor_b",
    "right_unitor_b_inverse",
    "associator_b",
    "braiding_b",
    "internal_hom_b",
    "pentagon",
    "triangle",
    "hexagon",
    "symmetry",
    "closedness",
    "unit_iso_checks",
    "induced_from_raw",
    "ModuleError",
    "Presentation",
    "identity",
]
