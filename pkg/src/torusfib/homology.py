"""Exact integer and rational linear algebra for surface homology.

Matrices are lists of rows of Python ints (or Fractions where noted) so
nothing ever overflows or rounds.  Matrices act on column vectors and
products are in functional order: ``rep(a b) = rep(a) @ rep(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence


class HomologyError(ValueError):
    pass


# -- basic matrix helpers --------------------------------------------------

def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    if A and len(A[0]) != len(B):
        raise HomologyError(f"shape mismatch {len(A)}x{len(A[0])} @ {len(B)}x?")
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def mat_vec(A: Sequence[Sequence], x: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def transpose(A: Sequence[Sequence]) -> list:
    return [list(r) for r in zip(*A)]


def to_int_matrix(A) -> list:
    return [[int(v) for v in row] for row in A]


def det(A: Sequence[Sequence]) -> int | Fraction:
    """Bareiss fraction-free determinant (exact for ints and Fractions)."""
    M = [list(r) for r in A]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else Fraction(num) / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse(A: Sequence[Sequence]) -> list:
    """Exact inverse over the rationals (entries returned as ints when integral)."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise HomologyError("matrix is singular")
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [[int(v) if v.denominator == 1 else v for v in row[n:]] for row in M]


def nullspace(A: Sequence[Sequence], ncols: int | None = None) -> list:
    """Rational basis of {x : A x = 0} from reduced row echelon form."""
    ncols = ncols if ncols is not None else (len(A[0]) if A else 0)
    M = [[Fraction(v) for v in row] for row in A]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [v / pv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][f]
        basis.append(v)
    return basis


def primitive(v: Sequence) -> list:
    """Scale a rational vector to a primitive integer vector."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(A[0]) - len(nullspace(A))


# -- Smith normal form -----------------------------------------------------

def smith_normal_form(A: Sequence[Sequence]) -> tuple:
    """Return (D, U, V) with U A V = D diagonal, U and V unimodular.

    The diagonal satisfies d_1 | d_2 | ... with nonnegative entries.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, r)) for r in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):
        D[dst] = [a + f * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for M in (D, V):
            for r in M:
                r[dst] += f * r[src]

    for t in range(min(m, n)):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # enforce divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    return D, U, V


def elementary_divisors(A: Sequence[Sequence]) -> list:
    D, _, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def integer_kernel(A: Sequence[Sequence], ncols: int | None = None) -> list:
    """Z-basis of the integer kernel of A (list of column vectors)."""
    ncols = ncols if ncols is not None else len(A[0])
    if not A:
        return [list(r) for r in identity(ncols)]
    D, _, V = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [[V[i][j] for i in range(ncols)] for j in range(r, ncols)]


def solve_integer(A: Sequence[Sequence], b: Sequence) -> list | None:
    """Some integer x with A x = b, or None if no integer solution exists."""
    m = len(A)
    n = len(A[0])
    D, U, V = smith_normal_form(A)
    c = mat_vec(U, b)
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i]:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    return mat_vec(V, y)


# -- lattices and transvections -------------------------------------------

@dataclass(frozen=True)
class H1Lattice:
    """Integer lattice with a skew intersection form ``<x, y> = x^T J y``."""

    form: tuple

    def __post_init__(self):
        J = tuple(tuple(int(v) for v in row) for row in self.form)
        n = len(J)
        if any(len(r) != n for r in J):
            raise HomologyError("intersection-form: matrix is not square")
        for i in range(n):
            for j in range(n):
                if J[i][j] != -J[j][i]:
                    raise HomologyError("intersection-form: matrix is not skew-symmetric")
        object.__setattr__(self, "form", J)

    @property
    def rank(self) -> int:
        return len(self.form)

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.form[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if self.form[i][j])

    def is_unimodular(self) -> bool:
        return abs(det(self.form)) == 1

    def is_symplectic(self, M: Sequence[Sequence[int]]) -> bool:
        return mat_mul(mat_mul(transpose(M), self.form), M) == [list(r) for r in self.form]

    def _check(self, c):
        if len(c) != self.rank:
            raise HomologyError(f"class of length {len(c)} in lattice of rank {self.rank}")


def transvection(lattice: H1Lattice, c: Sequence[int], power: int = 1) -> list:
    """Matrix of x -> x + power * <x, c> c."""
    lattice._check(c)
    Jc = mat_vec(lattice.form, c)
    n = lattice.rank
    return [[int(i == j) + power * c[i] * Jc[j] for j in range(n)] for i in range(n)]


def symplectic_rep(lattice: H1Lattice, classes: Mapping[str, Sequence[int]],
                   word: Iterable[tuple]) -> list:
    """Product of transvections for a twist word of (symbol, exponent) pairs."""
    M = identity(lattice.rank)
    for name, e in word:
        try:
            c = classes[name]
        except KeyError:
            raise HomologyError(f"unknown twist symbol {name!r}") from None
        M = mat_mul(M, transvection(lattice, c, e))
    return M


# -- dependence certificates ----------------------------------------------

@dataclass(frozen=True)
class DependenceCertificate:
    length: int
    coefficients: tuple

    def check(self, classes: Sequence[Sequence[int]]) -> bool:
        total = [sum(n * cl[i] for n, cl in zip(self.coefficients, classes)) for i in range(len(classes[0]))]
        return not any(total) and self.coefficients[-1] != 0


def dependence_certificate(classes: Sequence[Sequence[int]]) -> DependenceCertificate | None:
    """Shortest dependent prefix of ``classes`` with its integer relation.

    The first l-1 classes are independent, so the relation is unique up to
    scale; it is returned primitive with a positive last coefficient.
    """
    if not classes:
        raise HomologyError("empty class list")
    for ell in range(1, len(classes) + 1):
        cols = classes[:ell]
        A = transpose(cols)
        ker = nullspace(A, ell)
        if ker:
            v = primitive(ker[0])
            if v[-1] < 0:
                v = [-x for x in v]
            return DependenceCertificate(ell, tuple(v))
    return None


def surface_square(cert: DependenceCertificate) -> int:
    return -sum(n * n for n in cert.coefficients)


def b2minus_lower_bound(m: int, n: int, s: int, g: int) -> int:
    if m < 1:
        raise HomologyError("cover degree must be positive")
    if n < 0 or s < 0 or g < 1:
        raise HomologyError("need n, s >= 0 and g >= 1")
    return m * s + (m * n) // (2 * g + 1)


# -- signatures ------------------------------------------------------------

def signature(S: Sequence[Sequence]) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalization."""
    M = [[Fraction(v) for v in row] for row in S]
    sig = 0
    while M:
        n = len(M)
        p = next((i for i in range(n) if M[i][i] != 0), None)
        if p is None:
            off = next(((i, j) for i in range(n) for j in range(i + 1, n) if M[i][j] != 0), None)
            if off is None:
                return sig
            i, j = off
            # row/column i += row/column j makes the diagonal entry nonzero
            M[i] = [a + b for a, b in zip(M[i], M[j])]
            for r in M:
                r[i] += r[j]
            p = i
        d = M[p][p]
        sig += 1 if d > 0 else -1
        rest = [i for i in range(n) if i != p]
        M = [[M[i][j] - M[i][p] * M[p][j] / d for j in rest] for i in rest]
    return sig


def meyer_cocycle(lattice: H1Lattice, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> int:
    """Meyer's signature cocycle tau(A, B).

    V = {(x, y) : (A^-1 - I) x + (B - I) y = 0} carries the symmetric form
    ((x1, y1), (x2, y2)) -> (x1 + y1)^T J (I - B) y2; tau is its signature.
    """
    if not (lattice.is_symplectic(A) and lattice.is_symplectic(B)):
        raise HomologyError("meyer_cocycle needs symplectic matrices")
    n = lattice.rank
    I = identity(n)
    Ainv = inverse(A)
    K = [[Ainv[i][j] - I[i][j] for j in range(n)] + [B[i][j] - I[i][j] for j in range(n)] for i in range(n)]
    V = nullspace(K, 2 * n)
    if not V:
        return 0
    J = lattice.form
    IB = [[I[i][j] - B[i][j] for j in range(n)] for i in range(n)]
    JIB = mat_mul(J, IB)
    left = [[v[i] + v[n + i] for i in range(n)] for v in V]
    right = [mat_vec(JIB, v[n:]) for v in V]
    G = [[sum(a * b for a, b in zip(left[p], right[q])) for q in range(len(V))] for p in range(len(V))]
    S = [[(G[p][q] + G[q][p]) / 2 for q in range(len(V))] for p in range(len(V))]
    return signature(S)


# Sign relating sum of cocycle values to the signature of the total space,
# fixed by the genus-1 anchor (t_a t_b)^6 -> -8 under the transvection
# convention above.
MEYER_SIGN = 1
SEPARATING_LOCAL_TERM = -1


def signature_of_factorization(lattice: H1Lattice, twist_classes: Sequence[Sequence[int]],
                               separating: Sequence[bool],
                               commutator: tuple | None = None) -> int:
    """Signature of a Lefschetz fibration from its monodromy factorization.

    ``twist_classes`` lists the vanishing cycles t_1 .. t_N in factorization
    order.  Over the sphere the product must be the identity; over the torus
    ``commutator = (A, B)`` and the product must equal A B A^-1 B^-1.
    Separating cycles must carry the zero class in the closed lattice.
    """
    mats = [transvection(lattice, c) for c in twist_classes]
    for c, sep in zip(twist_classes, separating):
        if sep and any(c):
            raise HomologyError("separating vanishing cycle with nonzero class")
    prod = identity(lattice.rank)
    for M in mats:
        prod = mat_mul(prod, M)
    seq = list(mats)
    if commutator is None:
        target = identity(lattice.rank)
    else:
        A, B = commutator
        Ai, Bi = to_int_matrix(inverse(A)), to_int_matrix(inverse(B))
        target = mat_mul(mat_mul(A, B), mat_mul(Ai, Bi))
        # t_1 ... t_N B A B^-1 A^-1 = 1
        seq += [B, A, Bi, Ai]
    if prod != target:
        raise HomologyError("factorization does not multiply to its target")
    total = 0
    partial = identity(lattice.rank)
    for j in range(len(seq) - 1):
        partial = mat_mul(partial, seq[j])
        total += meyer_cocycle(lattice, partial, seq[j + 1])
    return MEYER_SIGN * total + SEPARATING_LOCAL_TERM * sum(bool(s) for s in separating)


# -- symplectic bases and witnesses ---------------------------------------

def standard_form(g: int) -> list:
    """Block form with <e_i, f_i> = 1 in the basis e_1, f_1, ..., e_g, f_g."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1
    return J


def complete_symplectic_basis(lattice: H1Lattice, isotropic: Sequence[Sequence[int]]) -> list:
    """Extend isotropic vectors e_1..e_r to a symplectic basis.

    Returns [e_1, f_1, ..., e_g, f_g] with <e_i, f_i> = 1 and all other
    pairings zero.  Requires J unimodular and the e_i spanning a primitive
    isotropic sublattice.
    """
    if not lattice.is_unimodular():
        raise HomologyError("symplectic completion needs a unimodular lattice")
    n = lattice.rank
    if n % 2:
        raise HomologyError("odd rank lattice")
    es = [list(e) for e in isotropic]
    for a in es:
        for b in es:
            if lattice.pairing(a, b):
                raise HomologyError("prescribed vectors are not isotropic")
    J = lattice.form
    basis: list = []
    fs: list = []
    for i, e in enumerate(es):
        # f with <e_j, f> = delta_ij for all prescribed e_j and <f_j, f> = 0 so far
        rhs = [int(j == i) for j in range(len(es))] + [0] * len(fs)
        A = [[sum(ej[k] * J[k][l] for k in range(n)) for l in range(n)] for ej in es + fs]
        f = solve_integer(A, rhs)
        if f is None:
            raise HomologyError("prescribed vectors do not span a primitive sublattice")
        fs.append(f)
    for e, f in zip(es, fs):
        basis += [e, f]
    while len(basis) < n:
        # complement: integer kernel of the pairing with everything chosen so far
        A = [[sum(v[k] * J[k][l] for k in range(n)) for l in range(n)] for v in basis]
        comp = integer_kernel(A, n) if A else [list(r) for r in identity(n)]
        e = comp[0]
        rest = comp[1:]
        # find f in the complement pairing to 1 with e
        vals = [lattice.pairing(e, v) for v in rest]
        coeff = solve_integer([vals], [1])
        if coeff is None:
            raise HomologyError("complement is not unimodular")
        f = [sum(c * v[k] for c, v in zip(coeff, rest)) for k in range(n)]
        basis += [e, f]
    return basis


def symplectic_witness(lattice: H1Lattice, sources: Sequence[Sequence[int]],
                       targets: Sequence[Sequence[int]]) -> list:
    """Integer symplectic matrix mapping each source class to its target.

    Both lists must be isotropic and span primitive sublattices; the witness
    sends a completed symplectic basis of the sources to one of the targets.
    """
    bs = complete_symplectic_basis(lattice, sources)
    bt = complete_symplectic_basis(lattice, targets)
    Ms = transpose(bs)
    Mt = transpose(bt)
    W = to_int_matrix(mat_mul(Mt, inverse(Ms)))
    if not lattice.is_symplectic(W):
        raise HomologyError("witness construction failed to be symplectic")
    return W
