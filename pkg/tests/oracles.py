"""Brute-force reference computations used to derive expected values.

Everything here works on plain lists of ``Fraction`` (or ints mod p) with a
hand-written Gaussian elimination, so it shares no code with the package's
flint-backed linear algebra.
"""

from fractions import Fraction
from itertools import product


def to_frac(v):
    if hasattr(v, "p") and hasattr(v, "q") and not callable(v.p):
        return Fraction(int(v.p), int(v.q))
    return Fraction(int(v))


def rows_of(mor, p=None):
    """Matrix entries as Fractions (or residues when ``p`` is given)."""
    out = []
    for row in mor.rows():
        if p is None:
            out.append([to_frac(v) for v in row])
        else:
            out.append([int(v) % p for v in row])
    return out


def rank(rows, p=None):
    """Row rank by naive elimination over Q or F_p."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if (m[i][c] % p if p else m[i][c]) != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        if p:
            inv = pow(int(m[r][c]) % p, -1, p)
            m[r] = [(v * inv) % p for v in m[r]]
        else:
            lead = m[r][c]
            m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def kron(a, b):
    """Kronecker product written out with four nested loops."""
    ra, ca = len(a), len(a[0])
    rb, cb = len(b), len(b[0])
    out = [[0] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def action_operators(action_rows, dx, db):
    """``op[β][i][j]``: coordinate i of ``e_j·e_β`` for an action ``x⊗b -> x``."""
    return [[[action_rows[i][j * db + beta] for j in range(dx)] for i in range(dx)] for beta in range(db)]


def left_operators(left_rows, dx, db):
    """``op[β][i][j]``: coordinate i of ``e_β·e_j`` for a left action ``b⊗x -> x``."""
    return [[[left_rows[i][beta * dx + j] for j in range(dx)] for i in range(dx)] for beta in range(db)]


def tensor_over_dim(ops_x, ops_y, dx, dy, p=None):
    """``dim(x⊗y / span{xβ⊗y - x⊗βy})`` with both sides acted on by the same algebra."""
    rels = []
    for beta in range(len(ops_x)):
        for i, j in product(range(dx), range(dy)):
            v = [Fraction(0)] * (dx * dy)
            for a in range(dx):
                c = ops_x[beta][a][i]
                if c:
                    v[a * dy + j] += c
            for b in range(dy):
                c = ops_y[beta][b][j]
                if c:
                    v[i * dy + b] -= c
            rels.append(v)
    return dx * dy - rank(rels, p)


def equivariant_maps_dim(ops_x, ops_y, dx, dy, p=None):
    """Dimension of ``{φ: x -> y | φ∘A^x_β = A^y_β∘φ for all β}``."""
    eqs = []
    for beta in range(len(ops_x)):
        ax, ay = ops_x[beta], ops_y[beta]
        for r, c in product(range(dy), range(dx)):
            v = [Fraction(0)] * (dy * dx)
            # (φ ax)[r][c] = sum_t φ[r][t] ax[t][c]
            for t in range(dx):
                v[r * dx + t] += ax[t][c]
            # (ay φ)[r][c] = sum_t ay[r][t] φ[t][c]
            for t in range(dy):
                v[t * dx + c] -= ay[r][t]
            eqs.append(v)
    return dy * dx - rank(eqs, p)


def bimodule_tensor_dim(X, Y, p=None):
    """``dim`` of ``X⊗Y`` modulo the relations from both left and both right actions."""
    dx, dy = X.dim, Y.dim
    db, db2 = X.left_over.dim, X.right_over.dim
    lx = left_operators(rows_of(X.left_action, p), dx, db)
    ly = left_operators(rows_of(Y.left_action, p), dy, db)
    rx = action_operators(rows_of(X.right_action, p), dx, db2)
    ry = action_operators(rows_of(Y.right_action, p), dy, db2)
    rels = []
    for ox, oy in ((lx, ly), (rx, ry)):
        for beta in range(len(ox)):
            for i, j in product(range(dx), range(dy)):
                v = [Fraction(0)] * (dx * dy)
                for a in range(dx):
                    if ox[beta][a][i]:
                        v[a * dy + j] += ox[beta][a][i]
                for b in range(dy):
                    if oy[beta][b][j]:
                        v[i * dy + b] -= oy[beta][b][j]
                rels.append(v)
    return dx * dy - rank(rels, p)


def module_ops(x, p=None):
    return action_operators(rows_of(x.action, p), x.dim, x.over.dim)


def algebra_maps_brute_force(src_rows_product, src_unit, dst_rows_product, dst_unit, n, m, p):
    """Every ``m×n`` matrix over F_p preserving unit and product, by exhaustion."""
    found = []
    for flat in product(range(p), repeat=m * n):
        f = [list(flat[r * n:(r + 1) * n]) for r in range(m)]
        if [[v % p for v in r] for r in matmul(f, src_unit)] != [[v % p for v in r] for r in dst_unit]:
            continue
        lhs = matmul(f, src_rows_product)
        rhs = matmul(dst_rows_product, kron(f, f))
        if all((a - b) % p == 0 for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb)):
            found.append(f)
    return found
