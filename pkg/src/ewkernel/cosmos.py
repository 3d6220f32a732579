"""Finite-dimensional vector spaces over an exact field.

This is the ambient closed symmetric monoidal category every other module
computes in.  Objects are dimensions, morphisms are exact matrices, and the
monoidal product is the Kronecker product with the lexicographic basis
``(i, j) -> i * dim(y) + j``.  With that convention the associator and both
unitors are identity matrices; the braiding is a permutation.

Matrices are stored as python-flint ``fmpq_mat`` (rationals) or ``nmod_mat``
(residues modulo a prime).  All structural maps (Kronecker products,
permutations, curry/uncurry, presentations of quotients and kernels) are
built here from entry-level descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import flint


class CosmosError(ValueError):
    """Base class for structural errors raised by the linear backend."""


class DimensionMismatch(CosmosError):
    pass


class FieldMismatch(CosmosError):
    pass


class FactorizationError(CosmosError):
    """A map was asked to factor through a quotient it does not respect."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class Field:
    """The scalar field: rationals when ``p`` is None, otherwise F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
                raise CosmosError(f"modulus {self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``q`` or ``fp:P``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rational"):
            return cls()
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise CosmosError(f"unknown field {text!r}; expected 'q' or 'fp:P'")

    @property
    def tag(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    def __str__(self):
        return "Q" if self.p is None else f"F_{self.p}"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def scalar(self, value):
        """Coerce ints, Fractions, strings like ``"-3/4"`` and flint scalars."""
        if isinstance(value, str):
            value = parse_fraction(value)
        if self.p is None:
            if isinstance(value, Fraction):
                return flint.fmpq(value.numerator, value.denominator)
            if isinstance(value, flint.nmod):
                raise FieldMismatch("residue given where a rational was expected")
            return flint.fmpq(value)
        if isinstance(value, (Fraction, flint.fmpq)):
            num, den = int(value.numerator if isinstance(value, Fraction) else value.p), int(
                value.denominator if isinstance(value, Fraction) else value.q
            )
            if den % self.p == 0:
                raise CosmosError(f"denominator {den} vanishes modulo {self.p}")
            return flint.nmod(num * pow(den, -1, self.p), self.p)
        if isinstance(value, flint.nmod):
            if value.modulus() != self.p:
                raise FieldMismatch(f"residue mod {value.modulus()} used in {self}")
            return value
        return flint.nmod(int(value), self.p)

    def format(self, value) -> str:
        """Canonical string for a scalar: ``p/q`` over Q, a residue in [0, p) over F_p."""
        if self.p is None:
            return str(flint.fmpq(value))
        return str(int(value))

    def matrix(self, rows: int, cols: int, entries: Iterable | None = None):
        if entries is None:
            if self.p is None:
                return flint.fmpq_mat(rows, cols)
            return flint.nmod_mat(rows, cols, self.p)
        entries = [self.scalar(e) if not isinstance(e, int) else e for e in entries]
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        if self.p is None:
            return flint.fmpq_mat(rows, cols, entries)
        return flint.nmod_mat(rows, cols, [int(e) % self.p for e in entries], self.p)

    def owns(self, mat) -> bool:
        if self.p is None:
            return isinstance(mat, flint.fmpq_mat)
        return isinstance(mat, flint.nmod_mat) and mat.modulus() == self.p


QQ = Field()


def parse_fraction(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"``; a zero denominator is an error."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        num_i, den_i = int(num), int(den)
        if den_i == 0:
            raise CosmosError(f"zero denominator in {text!r}")
        return Fraction(num_i, den_i)
    return Fraction(int(text))


# ---------------------------------------------------------------------------
# objects and morphisms


@dataclass(frozen=True)
class Obj:
    """A space with standard basis e_0 .. e_{dim-1}."""

    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise CosmosError("dimension must be non-negative")

    def __repr__(self):
        return f"Obj({self.dim})"


UNIT = Obj(1)


def tensor_obj(*objs: Obj) -> Obj:
    d = 1
    for o in objs:
        d *= o.dim
    return Obj(d)


class Mor:
    """An exact matrix ``dst.dim x src.dim`` between two objects."""

    __slots__ = ("src", "dst", "mat", "field")

    def __init__(self, src: Obj, dst: Obj, mat, field: Field):
        if not field.owns(mat):
            raise FieldMismatch(f"matrix does not live over {field}")
        if mat.nrows() != dst.dim or mat.ncols() != src.dim:
            raise DimensionMismatch(
                f"matrix is {mat.nrows()}x{mat.ncols()} but the morphism is {src.dim} -> {dst.dim}"
            )
        self.src = src
        self.dst = dst
        self.mat = mat
        self.field = field

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, src: int | None = None) -> "Mor":
        """Build from a list of rows.  ``src`` is needed when there are no rows."""
        r = len(rows)
        c = len(rows[0]) if r else (src or 0)
        if any(len(row) != c for row in rows):
            raise DimensionMismatch("ragged rows")
        flat = [x for row in rows for x in row]
        return cls(Obj(c), Obj(r), field.matrix(r, c, flat), field)

    @classmethod
    def from_function(cls, src: Obj, dst: Obj, fn: Callable[[int, int], object], field: Field = QQ) -> "Mor":
        """Entry (i, j) is ``fn(i, j)`` with i a dst index and j a src index."""
        flat = [fn(i, j) for i in range(dst.dim) for j in range(src.dim)]
        return cls(src, dst, field.matrix(dst.dim, src.dim, flat), field)

    # basic shape -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.dst.dim, self.src.dim)

    def __getitem__(self, ij):
        return self.mat[ij[0], ij[1]]

    def rows(self) -> list[list]:
        return self.mat.tolist()

    def __repr__(self):
        return f"Mor({self.src.dim}->{self.dst.dim} over {self.field}: {self.rows()})"

    # algebra ---------------------------------------------------------------
    def _same_field(self, other: "Mor"):
        if self.field != other.field:
            raise FieldMismatch(f"cannot combine morphisms over {self.field} and {other.field}")

    def __matmul__(self, other: "Mor") -> "Mor":
        return compose(self, other)

    def __add__(self, other: "Mor") -> "Mor":
        self._same_field(other)
        if self.src != other.src or self.dst != other.dst:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Mor(self.src, self.dst, self.mat + other.mat, self.field)

    def __sub__(self, other: "Mor") -> "Mor":
        self._same_field(other)
        if self.src != other.src or self.dst != other.dst:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Mor(self.src, self.dst, self.mat - other.mat, self.field)

    def __neg__(self) -> "Mor":
        return Mor(self.src, self.dst, -self.mat, self.field)

    def scale(self, c) -> "Mor":
        c = self.field.scalar(c)
        return Mor(self.src, self.dst, self.mat * c, self.field)

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return (
            self.field == other.field
            and self.src == other.src
            and self.dst == other.dst
            and self.mat == other.mat
        )

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    @property
    def T(self) -> "Mor":
        return Mor(self.dst, self.src, self.mat.transpose(), self.field)

    # linear-algebra queries -----------------------------------------------
    def rank(self) -> int:
        if self.src.dim == 0 or self.dst.dim == 0:
            return 0
        return self.mat.rref()[1]

    def is_zero(self) -> bool:
        return self.mat == self.field.matrix(self.dst.dim, self.src.dim)

    def is_invertible(self) -> bool:
        return self.src.dim == self.dst.dim and self.rank() == self.src.dim

    def inverse(self) -> "Mor":
        if not self.is_invertible():
            raise CosmosError(f"morphism {self.src.dim}->{self.dst.dim} of rank {self.rank()} is not invertible")
        if self.src.dim == 0:
            return self
        return Mor(self.dst, self.src, self.mat.inv(), self.field)

    def column(self, j: int) -> list:
        return [self.mat[i, j] for i in range(self.dst.dim)]


def first_difference(a: Mor, b: Mor):
    """Return ``(row, col, a_entry, b_entry)`` for the first disagreement, or None."""
    if a.shape != b.shape:
        return ("shape", a.shape, b.shape)
    if a.mat == b.mat:
        return None
    for i in range(a.dst.dim):
        for j in range(a.src.dim):
            if a.mat[i, j] != b.mat[i, j]:
                return (i, j, a.field.format(a.mat[i, j]), a.field.format(b.mat[i, j]))
    return None


# ---------------------------------------------------------------------------
# category structure


def identity(x: Obj, field: Field = QQ) -> Mor:
    m = field.matrix(x.dim, x.dim)
    for i in range(x.dim):
        m[i, i] = 1
    return Mor(x, x, m, field)


def zero(src: Obj, dst: Obj, field: Field = QQ) -> Mor:
    return Mor(src, dst, field.matrix(dst.dim, src.dim), field)


def _compose2(g: Mor, f: Mor) -> Mor:
    if g.field != f.field:
        raise FieldMismatch(f"cannot compose a morphism over {g.field} after one over {f.field}")
    if g.src != f.dst:
        raise DimensionMismatch(
            f"cannot compose g: {g.src.dim}->{g.dst.dim} after f: {f.src.dim}->{f.dst.dim}"
        )
    return Mor(f.src, g.dst, g.mat * f.mat, g.field)


def compose(g: Mor, f: Mor, *more: Mor) -> Mor:
    """``g ∘ f``; extra arguments continue to the right, ``compose(h, g, f) = h∘g∘f``."""
    maps = (g, f) + more
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = _compose2(m, out)
    return out


def tensor(f: Mor, g: Mor) -> Mor:
    """Kronecker product under the lexicographic basis convention."""
    if f.field != g.field:
        raise FieldMismatch(f"cannot tensor morphisms over {f.field} and {g.field}")
    field = f.field
    fr, fc = f.shape
    gr, gc = g.shape
    src = Obj(fc * gc)
    dst = Obj(fr * gr)
    if fr * gr == 0 or fc * gc == 0:
        return zero(src, dst, field)
    frows = f.mat.tolist()
    grows = g.mat.tolist()
    flat = []
    for i in range(fr):
        frow = frows[i]
        for k in range(gr):
            grow = grows[k]
            for j in range(fc):
                a = frow[j]
                if a == 0:
                    flat.extend([0] * gc)
                else:
                    flat.extend(a * b for b in grow)
    if field.p is None:
        mat = flint.fmpq_mat(dst.dim, src.dim, flat)
    else:
        mat = flint.nmod_mat(dst.dim, src.dim, [int(v) for v in flat], field.p)
    return Mor(src, dst, mat, field)


def tensor_all(*maps: Mor) -> Mor:
    out = maps[0]
    for m in maps[1:]:
        out = tensor(out, m)
    return out


def permutation(src: Obj, images: Sequence[int], field: Field = QQ) -> Mor:
    """The map sending basis vector ``e_j`` to ``e_{images[j]}``."""
    m = field.matrix(src.dim, src.dim)
    for j, i in enumerate(images):
        m[i, j] = 1
    return Mor(src, src, m, field)


def braiding(x: Obj, y: Obj, field: Field = QQ) -> Mor:
    """The symmetry ``x⊗y -> y⊗x`` sending basis (i, j) to (j, i)."""
    dx, dy = x.dim, y.dim
    src = tensor_obj(x, y)
    m = field.matrix(src.dim, src.dim)
    for i in range(dx):
        for j in range(dy):
            m[j * dx + i, i * dy + j] = 1
    return Mor(src, tensor_obj(y, x), m, field)


def associator(x: Obj, y: Obj, z: Obj, field: Field = QQ) -> Mor:
    """``x⊗(y⊗z) -> (x⊗y)⊗z``; the identity under the lexicographic convention."""
    return identity(tensor_obj(x, y, z), field)


def left_unitor(x: Obj, field: Field = QQ) -> Mor:
    """``c⊗x -> x``."""
    return identity(x, field)


def right_unitor(x: Obj, field: Field = QQ) -> Mor:
    """``x⊗c -> x``."""
    return identity(x, field)


def shuffle(dims: Sequence[int], order: Sequence[int], field: Field = QQ) -> Mor:
    """Reorder tensor factors.

    The source is ``⊗_k dims[k]``; the target is ``⊗_k dims[order[k]]``.
    A basis vector with multi-index ``(i_0, .., i_n)`` goes to the one with
    multi-index ``(i_{order[0]}, .., i_{order[n]})``.
    """
    if sorted(order) != list(range(len(dims))):
        raise CosmosError(f"{order} is not a permutation of {len(dims)} factors")
    total = 1
    for d in dims:
        total *= d
    src = Obj(total)
    new_dims = [dims[k] for k in order]
    m = field.matrix(total, total)
    if total:
        strides_new = [1] * len(dims)
        for k in range(len(dims) - 2, -1, -1):
            strides_new[k] = strides_new[k + 1] * new_dims[k + 1]
        idx = [0] * len(dims)
        for col in range(total):
            rem = col
            for k in range(len(dims) - 1, -1, -1):
                idx[k] = rem % dims[k]
                rem //= dims[k]
            row = sum(idx[order[k]] * strides_new[k] for k in range(len(dims)))
            m[row, col] = 1
    return Mor(src, Obj(total), m, field)


# ---------------------------------------------------------------------------
# closed structure
#
# hom(x, y) has basis E_{j,i} (the matrix unit y_j <- x_i) at index j*dim(x)+i,
# i.e. a morphism x -> y is stored as its row-major flattened matrix.


def hom_obj(x: Obj, y: Obj) -> Obj:
    return Obj(x.dim * y.dim)


def flatten(f: Mor) -> Mor:
    """A morphism ``x -> y`` as a point ``c -> hom(x, y)``."""
    return Mor(UNIT, hom_obj(f.src, f.dst), f.field.matrix(f.dst.dim * f.src.dim, 1, f.mat.entries()), f.field)


def unflatten(v: Mor, x: Obj, y: Obj) -> Mor:
    """Inverse of :func:`flatten`; ``v`` is a ``c -> hom(x, y)`` column."""
    if v.src != UNIT or v.dst != hom_obj(x, y):
        raise DimensionMismatch(f"expected a point of hom({x.dim},{y.dim})")
    return Mor(x, y, v.field.matrix(y.dim, x.dim, v.mat.entries()), v.field)


def curry(f: Mor, z: Obj, x: Obj) -> Mor:
    """Transpose ``f: z⊗x -> y`` to ``z -> hom(x, y)``.

    The factorization of the source must be declared: ``z.dim * x.dim``
    has to equal ``f.src.dim``.
    """
    if z.dim * x.dim != f.src.dim:
        raise DimensionMismatch(f"source of dim {f.src.dim} is not declared as {z.dim}⊗{x.dim}")
    y = f.dst
    dx = x.dim
    rows = f.mat.tolist()
    out = f.field.matrix(y.dim * dx, z.dim)
    for j in range(y.dim):
        row = rows[j]
        for k in range(z.dim):
            for i in range(dx):
                v = row[k * dx + i]
                if v != 0:
                    out[j * dx + i, k] = v
    return Mor(z, hom_obj(x, y), out, f.field)


def uncurry(g: Mor, x: Obj, y: Obj) -> Mor:
    """Transpose ``g: z -> hom(x, y)`` back to ``z⊗x -> y``."""
    if g.dst != hom_obj(x, y):
        raise DimensionMismatch(f"target of dim {g.dst.dim} is not hom({x.dim},{y.dim})")
    z = g.src
    dx = x.dim
    rows = g.mat.tolist()
    out = g.field.matrix(y.dim, z.dim * dx)
    for j in range(y.dim):
        for i in range(dx):
            row = rows[j * dx + i]
            for k in range(z.dim):
                v = row[k]
                if v != 0:
                    out[j, k * dx + i] = v
    return Mor(tensor_obj(z, x), y, out, g.field)


def evaluation(x: Obj, y: Obj, field: Field = QQ) -> Mor:
    """``Ev: hom(x, y)⊗x -> y``."""
    return uncurry(identity(hom_obj(x, y), field), x, y)


def coevaluation(z: Obj, x: Obj, field: Field = QQ) -> Mor:
    """``Cv: z -> hom(x, z⊗x)``."""
    return curry(identity(tensor_obj(z, x), field), z, x)


def hom_post(h: Mor, x: Obj) -> Mor:
    """``hom(x, h): hom(x, y) -> hom(x, y')`` for ``h: y -> y'``."""
    return tensor(h, identity(x, h.field))


def hom_pre(g: Mor, y: Obj) -> Mor:
    """``hom(g, y): hom(x, y) -> hom(x', y)`` for ``g: x' -> x``."""
    return tensor(identity(y, g.field), g.T)


def hom_tensor_id(x: Obj, y: Obj, w: Obj, field: Field = QQ) -> Mor:
    """``φ ↦ φ⊗id_w`` as a linear map ``hom(x, y) -> hom(x⊗w, y⊗w)``."""
    dx, dy, dw = x.dim, y.dim, w.dim
    src = hom_obj(x, y)
    dst = Obj(dx * dw * dy * dw)
    m = field.matrix(dst.dim, src.dim)
    for j in range(dy):
        for i in range(dx):
            for k in range(dw):
                m[(j * dw + k) * (dx * dw) + (i * dw + k), j * dx + i] = 1
    return Mor(src, dst, m, field)


# ---------------------------------------------------------------------------
# quotients and kernels


def _rref_rows(mat, field: Field, rows: int, cols: int):
    """Reduced row echelon form as (list of rows, pivot columns)."""
    if rows == 0 or cols == 0:
        return [], []
    r, rank = mat.rref()
    out = r.tolist()[:rank]
    pivots = []
    for row in out:
        for c, v in enumerate(row):
            if v != 0:
                pivots.append(c)
                break
    return out, pivots


@dataclass(frozen=True, eq=False)
class Presentation:
    """A surjection ``proj: raw -> quot`` together with a chosen section.

    Any map ``h`` out of ``raw`` with ``h ∘ section ∘ proj == h`` factors
    uniquely through ``proj``.
    """

    quot: Obj
    proj: Mor
    section: Mor

    @property
    def raw(self) -> Obj:
        return self.proj.src

    def then(self, outer: "Presentation") -> "Presentation":
        """The composite surjection ``outer.proj ∘ self.proj``."""
        return Presentation(
            outer.quot,
            compose(outer.proj, self.proj),
            compose(self.section, outer.section),
        )

    def tensor(self, other: "Presentation") -> "Presentation":
        return Presentation(
            tensor_obj(self.quot, other.quot),
            tensor(self.proj, other.proj),
            tensor(self.section, other.section),
        )

    def tensor_id(self, w: Obj, side: str = "right") -> "Presentation":
        ident = trivial_presentation(w, self.proj.field)
        return self.tensor(ident) if side == "right" else ident.tensor(self)

    def reindex(self, iso: Mor) -> "Presentation":
        """Precompose with an isomorphism ``iso: raw' -> raw``."""
        return Presentation(self.quot, compose(self.proj, iso), compose(iso.inverse(), self.section))


def trivial_presentation(x: Obj, field: Field = QQ) -> Presentation:
    i = identity(x, field)
    return Presentation(x, i, i)


def factor_through(pres: Presentation, h: Mor, what: str = "map") -> Mor:
    """The unique ``ĥ`` with ``ĥ ∘ pres.proj == h``."""
    if h.src != pres.raw:
        raise DimensionMismatch(f"{what} has source of dim {h.src.dim}, presentation raw dim {pres.raw.dim}")
    hat = compose(h, pres.section)
    back = compose(hat, pres.proj)
    if back != h:
        w = first_difference(back, h)
        raise FactorizationError(f"{what} does not factor through the quotient; first violated entry {w}", w)
    return hat


@dataclass(frozen=True, eq=False)
class CoeqPresentation(Presentation):
    """Coequalizer of a parallel pair ``f, g: src -> dst``."""

    f: Mor = None
    g: Mor = None


def coequalizer(f: Mor, g: Mor) -> CoeqPresentation:
    """``dst / image(f - g)`` with pivot-complement coordinates.

    Row-reduce ``(f - g)^T``; its pivot columns are target coordinates that
    can be eliminated, the remaining coordinates index the quotient.
    """
    if f.src != g.src or f.dst != g.dst:
        raise DimensionMismatch(f"coequalizer of non-parallel pair {f.shape} / {g.shape}")
    field = f.field
    y = f.dst
    d = (f - g).T
    rows, pivots = _rref_rows(d.mat, field, d.dst.dim, d.src.dim)
    pivot_set = set(pivots)
    keep = [j for j in range(y.dim) if j not in pivot_set]
    pos = {j: n for n, j in enumerate(keep)}
    quot = Obj(len(keep))
    proj = field.matrix(quot.dim, y.dim)
    for j in keep:
        proj[pos[j], j] = 1
    for row, p in zip(rows, pivots):
        for j in keep:
            v = row[j]
            if v != 0:
                proj[pos[j], p] = -v
    sec = field.matrix(y.dim, quot.dim)
    for j in keep:
        sec[j, pos[j]] = 1
    return CoeqPresentation(quot, Mor(y, quot, proj, field), Mor(quot, y, sec, field), f, g)


def induce_through_coequalizer(c: CoeqPresentation, h: Mor) -> Mor:
    """The unique ``ĥ`` with ``ĥ ∘ c.proj == h``, after checking ``h`` coequalizes."""
    lhs, rhs = compose(h, c.f), compose(h, c.g)
    if lhs != rhs:
        w = first_difference(lhs, rhs)
        raise FactorizationError(f"map does not coequalize the pair; first violated entry {w}", w)
    return factor_through(c, h, "coequalizing map")


@dataclass(frozen=True, eq=False)
class EqPresentation:
    """Equalizer of ``f, g``: inclusion of ``kernel(f - g)`` and a retraction."""

    sub: Obj
    incl: Mor
    retr: Mor
    f: Mor = None
    g: Mor = None

    def contains(self, v: Mor) -> bool:
        """Whether every column of ``v`` (a map into the ambient space) lies in the subspace."""
        return compose(self.incl, compose(self.retr, v)) == v

    def restrict(self, v: Mor, what: str = "map") -> Mor:
        """Corestrict ``v`` to the subspace, failing if it does not land there."""
        r = compose(self.retr, v)
        back = compose(self.incl, r)
        if back != v:
            w = first_difference(back, v)
            raise FactorizationError(f"{what} does not land in the equalizer; first violated entry {w}", w)
        return r


def kernel_basis(d: Mor) -> tuple[list[list], list[int], list[int]]:
    """Null space of ``d`` via RREF: (basis vectors, pivots, free columns)."""
    n = d.src.dim
    rows, pivots = _rref_rows(d.mat, d.field, d.dst.dim, n)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for row, p in zip(rows, pivots):
            if row[fcol] != 0:
                v[p] = -row[fcol]
        basis.append(v)
    return basis, pivots, free


def equalizer(f: Mor, g: Mor) -> EqPresentation:
    """``kernel(f - g)`` with the free-variable basis from RREF."""
    if f.src != g.src or f.dst != g.dst:
        raise DimensionMismatch(f"equalizer of non-parallel pair {f.shape} / {g.shape}")
    field = f.field
    x = f.src
    basis, _, free = kernel_basis(f - g)
    sub = Obj(len(free))
    incl = field.matrix(x.dim, sub.dim)
    for c, v in enumerate(basis):
        for r, val in enumerate(v):
            if val != 0:
                incl[r, c] = val
    retr = field.matrix(sub.dim, x.dim)
    for c, j in enumerate(free):
        retr[c, j] = 1
    return EqPresentation(sub, Mor(sub, x, incl, field), Mor(x, sub, retr, field), f, g)
