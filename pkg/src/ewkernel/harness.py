"""Instance generation and the named check suites.

Each suite returns a :class:`~ewkernel.serialize.Report` whose checks are
deterministic given the instance and the seed; only the timing differs
between runs.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable

from . import __version__
from .cosmos import (
    Field,
    Mor,
    Obj,
    QQ,
    associator,
    braiding,
    coevaluation,
    compose,
    curry,
    evaluation,
    hom_obj,
    hom_post,
    identity,
    left_unitor,
    right_unitor,
    tensor,
    tensor_obj,
    uncurry,
)
from .functors import (
    Compose,
    HomModule,
    Identity,
    Restrict,
    TensorBimodule,
    check_functoriality,
    check_lambda,
    check_strength_laws,
    cocontinuity_probe,
    counit_naturality_in_functor,
    ew_roundtrip,
    lambda_component,
)
from .laws import LawReport
from .module_tensor import (
    adjunction_triangles,
    closedness,
    hexagon,
    pentagon,
    symmetry,
    triangle,
    unit_iso_checks,
)
from .modules import (
    ModuleError,
    RightModule,
    bimodule_to_module,
    check_module_mor,
    opposite_left_action,
    random_bimodule,
    random_module,
    random_module_mor,
    regular_module,
)
from .monoids import (
    BUILTIN_NAMES,
    MonoidOver,
    builtin_algebra,
    builtin_morphisms,
    check_internal_monoid,
    coproduct,
    identity_mor,
    internal_to_over,
    over_to_internal,
)
from .serialize import Instance, Report

PROFILES = {"small": 3, "medium": 4}
SUITES = ("cosmos-laws", "module-laws", "tensor-coherence", "ew", "six", "main-thm", "day")

BIMODULE_PAIRS = (
    ("dual_numbers", "dual_numbers"),
    ("ground", "dual_numbers"),
    ("dual_numbers", "ground"),
    ("split_pair", "dual_numbers"),
    ("z2_group_algebra", "ground"),
    ("t_cubed", "ground"),
)


class GenerationError(ModuleError):
    pass


def generate(seed: int, profile: str = "small", field: Field = QQ) -> Instance:
    """Builtin algebras and morphisms plus seeded random modules and bimodules."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    max_dim = PROFILES[profile]
    rng = random.Random(seed)
    inst = Instance(field, seed, profile)
    for name in BUILTIN_NAMES:
        inst.algebras[name] = builtin_algebra(name, field)
    by_name = {}
    for f in builtin_morphisms(field):
        by_name[f.name] = f
    # re-point the morphisms at the instance's own algebra objects
    for name, f in by_name.items():
        src = next(a for a in inst.algebras.values() if a.same_as(f.src))
        dst = next(a for a in inst.algebras.values() if a.same_as(f.dst))
        f.src, f.dst = src, dst
        inst.morphisms[name] = f
    try:
        for name in BUILTIN_NAMES:
            b = inst.algebras[name]
            for i in range(2):
                m = random_module(b, rng, max_dim=max_dim)
                m.name = f"{name}.m{i}"
                inst.modules[m.name] = m
        for left, right in BIMODULE_PAIRS:
            for i in range(2):
                X = random_bimodule(inst.algebras[left], inst.algebras[right], rng, max_dim=max_dim)
                X.name = f"{left}|{right}.x{i}"
                inst.bimodules[X.name] = X
    except ModuleError as exc:
        raise GenerationError(f"seed {seed}: {exc}") from None
    return inst


# ---------------------------------------------------------------------------
# cosmos-level samplers shared with the acceptance tests


def random_mor(rng: random.Random, field: Field, src: int, dst: int) -> Mor:
    dens = [d for d in (1, 1, 2, 3) if field.p is None or d % field.p]

    def entry(i, j):
        if rng.random() < 0.3:
            return 0
        return Fraction(rng.randint(-3, 3), rng.choice(dens))

    return Mor.from_function(Obj(src), Obj(dst), entry, field)


def cosmos_tuple_laws(rng: random.Random, field: Field = QQ, max_dim: int = 4) -> LawReport:
    """Coherence and functoriality of ``⊗`` on one random tuple of maps."""
    rep = LawReport()
    d = [rng.randint(1, max_dim) for _ in range(6)]
    x, y, z, w = (Obj(n) for n in d[:4])
    f = random_mor(rng, field, d[0], d[4])
    g = random_mor(rng, field, d[1], d[5])
    h = random_mor(rng, field, d[2], d[3])
    f2 = random_mor(rng, field, d[4], d[1])
    g2 = random_mor(rng, field, d[5], d[0])
    rep.equal("functoriality", tensor(compose(f2, f), compose(g2, g)), compose(tensor(f2, g2), tensor(f, g)))
    rep.equal("identities", tensor(identity(x, field), identity(y, field)), identity(tensor_obj(x, y), field))
    a = associator
    lhs = compose(a(f.dst, g.dst, h.dst, field), tensor(tensor(f, g), h))
    rhs = compose(tensor(f, tensor(g, h)), a(x, y, z, field))
    rep.equal("associator natural", lhs, rhs)
    # pentagon: two paths ((xy)z)w -> x(y(zw))
    p1 = compose(a(x, y, tensor_obj(z, w), field), a(tensor_obj(x, y), z, w, field))
    p2 = compose(
        tensor(identity(x, field), a(y, z, w, field)),
        a(x, tensor_obj(y, z), w, field),
        tensor(a(x, y, z, field), identity(w, field)),
    )
    rep.equal("pentagon", p1, p2)
    unit = Obj(1)
    t1 = compose(tensor(identity(x, field), left_unitor(y, field)), a(x, unit, y, field))
    rep.equal("triangle", t1, tensor(right_unitor(x, field), identity(y, field)))
    s = braiding
    rep.equal("hexagon", s(x, tensor_obj(y, z), field), compose(tensor(identity(y, field), s(x, z, field)), tensor(s(x, y, field), identity(z, field))))
    rep.equal("hexagon (second)", s(tensor_obj(x, y), z, field), compose(tensor(s(x, z, field), identity(y, field)), tensor(identity(x, field), s(y, z, field))))
    rep.equal("symmetry", compose(s(y, x, field), s(x, y, field)), identity(tensor_obj(x, y), field))
    rep.equal("braiding natural", compose(s(f.dst, g.dst, field), tensor(f, g)), compose(tensor(g, f), s(x, y, field)))
    return rep


def closed_structure_laws(rng: random.Random, field: Field = QQ, max_dim: int = 3) -> LawReport:
    """Curry round trips and both triangle identities of ``-⊗x ⊣ hom(x, -)``."""
    rep = LawReport()
    dz, dx, dy = (rng.randint(1, max_dim) for _ in range(3))
    z, x, y = Obj(dz), Obj(dx), Obj(dy)
    f = random_mor(rng, field, dz * dx, dy)
    g = random_mor(rng, field, dz, dx * dy)
    rep.equal("uncurry after curry", uncurry(curry(f, z, x), x, y), f)
    rep.equal("curry after uncurry", curry(uncurry(g, x, y), z, x), g)
    zx = tensor_obj(z, x)
    left = compose(evaluation(x, zx, field), tensor(coevaluation(z, x, field), identity(x, field)))
    rep.equal("left triangle", left, identity(zx, field))
    hxy = hom_obj(x, y)
    right = compose(hom_post(evaluation(x, y, field), x), coevaluation(hxy, x, field))
    rep.equal("right triangle", right, identity(hxy, field))
    # naturality of the transpose in the source
    k = random_mor(rng, field, dz, dz)
    rep.equal("curry natural", curry(compose(f, tensor(k, identity(x, field))), z, x), compose(curry(f, z, x), k))
    return rep


def _collapse(rep: LawReport, samples: int, prefix: str) -> LawReport:
    """One entry per law name over many samples, with the first failure as witness."""
    out = LawReport()
    seen: dict[str, list] = {}
    for r in rep.results:
        seen.setdefault(r.name, []).append(r)
    for name, rs in seen.items():
        bad = [r for r in rs if not r.ok]
        out.add(f"{prefix}{name} ({len(rs)} samples)", not bad, bad[0].witness if bad else None)
    return out


# ---------------------------------------------------------------------------
# suites


def suite_cosmos(inst: Instance, rng: random.Random, tuples: int = 200, closed: int = 100) -> LawReport:
    rep = LawReport()
    raw = LawReport()
    for _ in range(tuples):
        raw.extend(cosmos_tuple_laws(rng, inst.field, 4))
    rep.extend(_collapse(raw, tuples, ""))
    raw = LawReport()
    for _ in range(closed):
        raw.extend(closed_structure_laws(rng, inst.field, 3))
    rep.extend(_collapse(raw, closed, "closed/"))
    return rep


def suite_modules(inst: Instance, rng: random.Random) -> LawReport:
    rep = inst.check()
    for name, b in inst.algebras.items():
        ms = inst.modules_over(b)
        for i, x in enumerate(ms):
            for j, y in enumerate(ms):
                h = random_module_mor(x, y, rng)
                rep.extend(check_module_mor(h), f"random module map {x.name}->{y.name}/")
    for name, f in inst.morphisms.items():
        internal = over_to_internal(MonoidOver(f.src, f.dst, f))
        rep.extend(check_internal_monoid(internal), f"internal monoid {name}/")
        back = internal_to_over(internal)
        rep.equal(f"internal monoid {name}/round trip product", back.total.product, f.dst.product)
        rep.equal(f"internal monoid {name}/round trip unit", back.total.unit, f.dst.unit)
    return rep


def suite_tensor(inst: Instance, rng: random.Random) -> LawReport:
    rep = LawReport()
    for name, b in inst.algebras.items():
        ms = [regular_module(b)] + inst.modules_over(b)
        w, z, x, y = (ms[i % len(ms)] for i in (1, 2, 0, 1))
        rep.extend(pentagon(w, z, x, y), f"{name}/")
        rep.extend(triangle(z, x), f"{name}/")
        rep.extend(hexagon(z, x, y), f"{name}/")
        rep.extend(symmetry(z, w), f"{name}/")
        rep.extend(closedness(z, x, w, rng), f"{name}/")
    for name, X in inst.bimodules.items():
        rep.extend(unit_iso_checks(X), f"{name}/")
        zs = inst.modules_over(X.left_over)
        ys = inst.modules_over(X.right_over)
        rep.extend(adjunction_triangles(zs[0], ys[0], X), f"{name}/adjunction/")
    return rep


def _hom_witness(inst: Instance) -> LawReport:
    """Hom out of the residue field of the dual numbers: λ at the residue
    field is the zero map between one-dimensional spaces."""
    rep = LawReport()
    D = inst.algebras.get("dual_numbers")
    if D is None:
        return rep
    k = RightModule(D, Obj(1), Mor.from_rows([[1, 0]], inst.field), "k")
    F = HomModule(opposite_left_action(k))
    lam = lambda_component(F, k)
    confirmed = lam.src.dim == 1 and lam.dst.dim == 1 and lam.map.is_zero()
    rep.add(
        "Hom(k,-) over dual numbers: λ at k is the zero map, not invertible",
        confirmed,
        {"source_dim": lam.src.dim, "target_dim": lam.dst.dim, "matrix": [[inst.field.format(v) for v in r] for r in lam.map.rows()]},
        expected_negative=True,
    )
    return rep


def suite_ew(inst: Instance, rng: random.Random) -> LawReport:
    rep = LawReport()
    for name, X in inst.bimodules.items():
        b = X.left_over
        zs = [regular_module(b)] + inst.modules_over(b)
        F = TensorBimodule(X)
        rep.extend(ew_roundtrip(X, zs), f"{name}/")
        for n, z in enumerate(zs):
            rep.extend(check_lambda(F, z, Obj(2)), f"{name}/z{n}/")
        h = random_module_mor(zs[1], zs[2], rng)
        g = random_module_mor(zs[2], zs[1], rng)
        rep.extend(check_strength_laws(F, zs[1], Obj(2), Obj(1), h), f"{name}/strength/")
        rep.extend(check_functoriality(F, g, h), f"{name}/")
        xm = bimodule_to_module(X)
        xi = random_module_mor(xm, xm, rng).map
        rep.extend(counit_naturality_in_functor(X, X, xi, zs[1]), f"{name}/")
    for name, f in inst.morphisms.items():
        zs = [regular_module(f.dst)] + inst.modules_over(f.dst)
        v = cocontinuity_probe(Restrict(f), zs)
        rep.add(f"restriction along {name}: λ invertible on samples", v.iso_on_all_samples)
    for name in ("dual_numbers", "t_cubed"):
        b = inst.algebras.get(name)
        if b is None:
            continue
        zs = [regular_module(b)] + inst.modules_over(b)
        v = cocontinuity_probe(Identity(b), zs)
        rep.add(f"identity on {name}: λ invertible on samples", v.iso_on_all_samples)
        comp = Compose(Restrict(identity_mor(b)), Identity(b))
        rep.extend(check_lambda(comp, zs[1], Obj(2)), f"composite on {name}/")
    rep.extend(_hom_witness(inst))
    return rep


def suite_six(inst: Instance, rng: random.Random) -> LawReport:
    from .six_functors import check_pack

    rep = LawReport()
    for name, f in inst.morphisms.items():
        xs = [regular_module(f.src)] + inst.modules_over(f.src)
        ys = [regular_module(f.dst)] + inst.modules_over(f.dst)
        rep.extend(check_pack(f, xs, ys, rng, lax_axioms=name in ("unit_dual_numbers", "augmentation_dual", "id_dual_numbers")), f"{name}/")
    return rep


def suite_main(inst: Instance, rng: random.Random) -> LawReport:
    from .functors import identity_lax
    from .main_equivalence import (
        CommOverPair,
        corollary_strong,
        full_faithfulness,
        pair_of_morphism,
        roundtrip_functor,
        roundtrip_main,
    )
    from .six_functors import pullback_strong, pushforward_lax

    rep = LawReport()
    for name, f in inst.morphisms.items():
        xs = inst.modules_over(f.src)[:2]
        heavy = name in ("unit_dual_numbers", "augmentation_dual", "id_dual_numbers", "fourier")
        rep.extend(roundtrip_main(pair_of_morphism(f), xs if heavy else (), rng), f"pair {name}/")
        rep.extend(corollary_strong(f, xs), f"corollary {name}/")
    D = inst.algebras.get("dual_numbers")
    if D is not None:
        B, p, p2 = coproduct(D, D)
        free = CommOverPair(D, D, B, p, p2, "free")
        rep.extend(roundtrip_main(free, inst.modules_over(D)[:2], rng), "pair free/")
        xs = [regular_module(D)] + inst.modules_over(D)
        rep.extend(roundtrip_functor(identity_lax(D), xs[:2]), "functor identity/")
        for name in ("unit_dual_numbers", "augmentation_dual"):
            f = inst.morphisms.get(name)
            if f is None:
                continue
            rep.extend(roundtrip_functor(pushforward_lax(f), inst.modules_over(f.dst)[:2]), f"functor restriction {name}/")
            rep.extend(roundtrip_functor(pullback_strong(f), inst.modules_over(f.src)[:2]), f"functor extension {name}/")
    rep.extend(full_faithfulness(list(inst.morphisms.values())), "full faithfulness/")
    return rep


def suite_day(inst: Instance, rng: random.Random) -> LawReport:
    from .day import check_day, monoid_correspondence, unit_law, unit_object_iso
    from .main_equivalence import pair_of_morphism

    rep = LawReport()
    groups: dict[tuple, list] = {}
    for name, X in inst.bimodules.items():
        key = (inst.algebra_name(X.left_over), inst.algebra_name(X.right_over))
        groups.setdefault(key, []).append(X)
    for (l, r), Xs in groups.items():
        b, b2 = inst.algebras[l], inst.algebras[r]
        samples = [regular_module(b)] + inst.modules_over(b)[:1]
        for i, X in enumerate(Xs):
            for j, Y in enumerate(Xs):
                if j < i:
                    continue
                rep.extend(check_day(X, Y, samples, rng), f"{X.name}*{Y.name}/")
            rep.add(f"{X.name}/unit law invertible", unit_law(X).is_invertible())
        for n, z in enumerate([regular_module(b)] + inst.modules_over(b)):
            rep.add(f"{l}|{r}/unit object iso invertible[{n}]", unit_object_iso(b, b2, z).is_invertible())
    for name in ("unit_dual_numbers", "augmentation_dual", "fourier"):
        f = inst.morphisms.get(name)
        if f is not None:
            rep.extend(monoid_correspondence(pair_of_morphism(f), [regular_module(f.src)] + inst.modules_over(f.src)[:1]), f"monoid {name}/")
    return rep


SUITE_FUNCS: dict[str, Callable[[Instance, random.Random], LawReport]] = {
    "cosmos-laws": suite_cosmos,
    "module-laws": suite_modules,
    "tensor-coherence": suite_tensor,
    "ew": suite_ew,
    "six": suite_six,
    "main-thm": suite_main,
    "day": suite_day,
}


def run_suite(name: str, inst: Instance, seed: int | None = None) -> Report:
    """Run one suite, or every suite for ``all``."""
    if seed is None:
        seed = inst.seed if inst.seed is not None else 0
    names = SUITES if name == "all" else (name,)
    for n in names:
        if n not in SUITE_FUNCS:
            raise ValueError(f"unknown suite {n!r}; choose from {', '.join(SUITES + ('all',))}")
    start = time.perf_counter()
    checks = []
    for n in names:
        rng = random.Random(f"{seed}/{n}")
        rep = SUITE_FUNCS[n](inst, rng)
        prefix = f"{n}/" if name == "all" else ""
        for r in rep.results:
            d = r.as_dict()
            d["id"] = prefix + d["id"]
            checks.append(d)
    elapsed = time.perf_counter() - start
    return Report(name, seed, inst.field.tag, __version__, checks, elapsed)
