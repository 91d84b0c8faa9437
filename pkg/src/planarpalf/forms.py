"""Exact integer linear algebra: Smith normal form and integral symmetric forms.

Matrices are lists of lists of Python ints; every routine accepts any nested
sequence (including integer numpy arrays) and never touches floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def as_matrix(m, cols: int | None = None) -> Matrix:
    out = [[int(x) for x in row] for row in m]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def shape(m: Matrix, cols: int | None = None) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else (cols or 0))


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Matrix, cols: int = 0) -> Matrix:
    if not m:
        return [[] for _ in range(cols)]
    return [list(r) for r in zip(*m)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def determinant(m) -> int:
    """Bareiss fraction-free determinant."""
    a = as_matrix(m)
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


# --------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    D: Matrix
    U: Matrix
    V: Matrix
    rows: int
    cols: int

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(self.rows, self.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d]


def smith_normal_form(m, cols: int | None = None) -> SmithForm:
    """Return ``D, U, V`` with ``D == U @ M @ V`` diagonal and ``d_1 | d_2 | ...``.

    ``U`` and ``V`` are unimodular.  ``cols`` gives the column count when ``m``
    has no rows.
    """
    A = as_matrix(m)
    r = len(A)
    c = len(A[0]) if A else (cols or 0)
    U = identity_matrix(r)
    V = identity_matrix(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    t = 0
    while t < min(r, c):
        # smallest nonzero entry in the remaining block becomes the pivot
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, r):
                q = A[i][t] // A[t][t]
                if q:
                    add_row(t, i, -q)
                if A[i][t]:
                    done = False
            for j in range(t + 1, c):
                q = A[t][j] // A[t][t]
                if q:
                    add_col(t, j, -q)
                if A[t][j]:
                    done = False
            if done:
                # the pivot must divide the whole remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if A[i][j] % A[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest entry of row/column t into the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, r) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, c) if A[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            elif j != t:
                swap_cols(t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SmithForm(A, U, V, r, c)


def check_smith(m, sf: SmithForm) -> None:
    """Raise ``AssertionError`` unless ``sf`` is a valid decomposition of ``m``."""
    M = as_matrix(m)
    assert matmul(matmul(sf.U, M), sf.V) == sf.D or (not M and not sf.D)
    for i, row in enumerate(sf.D):
        for j, x in enumerate(row):
            assert i == j or x == 0
    d = sf.invariant_factors
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    assert sf.diagonal[len(d):] == [0] * (len(sf.diagonal) - len(d))
    assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1


def cokernel(m, rows: int | None = None) -> list[int]:
    """Invariant factors of ``Z^rows / image(m)``; zeros stand for free summands.

    Factors equal to 1 are dropped, so the trivial group is ``[]``.
    """
    A = as_matrix(m)
    r = len(A) if A else (rows or 0)
    if not A or not A[0]:
        return [0] * r
    sf = smith_normal_form(A)
    diag = sf.diagonal + [0] * (r - len(sf.diagonal))
    return sorted((d for d in diag if d != 1), key=lambda d: (d == 0, d))


def format_group(factors: Sequence[int]) -> str:
    if not factors:
        return "0"
    parts = []
    free = sum(1 for d in factors if d == 0)
    parts += [f"Z/{d}" for d in factors if d]
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    return " + ".join(parts)


def kernel_basis(m, cols: int | None = None) -> Matrix:
    """Integral basis of ``{v : M v = 0}`` from the Smith column transform.

    Returned as a list of basis vectors.
    """
    A = as_matrix(m)
    c = len(A[0]) if A else (cols or 0)
    if not A:
        return identity_matrix(c)
    sf = smith_normal_form(A)
    return [[sf.V[i][j] for i in range(c)] for j in range(sf.rank, c)]


def kernel_basis_hermite(m, cols: int | None = None) -> Matrix:
    """Integral kernel basis by column-style Hermite reduction (no row operations)."""
    A = as_matrix(m)
    r = len(A)
    c = len(A[0]) if A else (cols or 0)
    cols_ = [[A[i][j] for i in range(r)] for j in range(c)]
    T = [[int(i == j) for i in range(c)] for j in range(c)]  # T[j] tracks column j
    pivot_col = 0
    for i in range(r):
        # Euclid across columns pivot_col.. on row i
        while True:
            nz = [j for j in range(pivot_col, c) if cols_[j][i]]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(cols_[j][i]))
            for j in nz:
                if j != j0:
                    q = cols_[j][i] // cols_[j0][i]
                    cols_[j] = [x - q * y for x, y in zip(cols_[j], cols_[j0])]
                    T[j] = [x - q * y for x, y in zip(T[j], T[j0])]
        nz = [j for j in range(pivot_col, c) if cols_[j][i]]
        if nz:
            j = nz[0]
            cols_[pivot_col], cols_[j] = cols_[j], cols_[pivot_col]
            T[pivot_col], T[j] = T[j], T[pivot_col]
            pivot_col += 1
    return [T[j] for j in range(pivot_col, c)]


# --------------------------------------------------------------------------
# integral symmetric forms


@dataclass(frozen=True)
class IntSymForm:
    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram):
        g = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(g)
        for i, row in enumerate(g):
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
            for j in range(i):
                if row[j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self) -> Matrix:
        return [list(r) for r in self.gram]

    def __call__(self, u, v) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    @property
    def det(self) -> int:
        return determinant(self.gram)

    def pullback(self, P) -> "IntSymForm":
        """The form ``P^T G P``."""
        P = as_matrix(P)
        return IntSymForm(matmul(matmul(transpose(P), self.matrix()), P))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.gram) + "]"


def restrict(gram, basis: Sequence[Sequence[int]]) -> IntSymForm:
    """Restriction of ``gram`` to the lattice spanned by ``basis`` vectors."""
    G = as_matrix(gram)
    B = [list(b) for b in basis]
    return IntSymForm([[sum(u[i] * G[i][j] * v[j] for i in range(len(u)) for j in range(len(v))) for v in B] for u in B])


def inertia(f: IntSymForm) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts from exact Lagrange diagonalization."""
    a = [[Fraction(x) for x in row] for row in f.gram]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j gives diagonal 2 a_ij
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            q = a[i][k] / p
            if q:
                for t in range(n):
                    a[i][t] -= q * a[k][t]
                for t in range(n):
                    a[t][i] -= q * a[t][k]
    return pos, neg, n - pos - neg


def signature(f: IntSymForm) -> int:
    p, q, _ = inertia(f)
    return p - q


def is_even(f: IntSymForm) -> bool:
    return all(f.gram[i][i] % 2 == 0 for i in range(f.rank))


def parity(f: IntSymForm) -> str:
    return "even" if is_even(f) else "odd"


def form_invariants(f: IntSymForm) -> dict:
    """Congruence invariants: rank, determinant, inertia, parity, discriminant group."""
    p, q, z = inertia(f)
    return {
        "rank": f.rank,
        "det": f.det,
        "signature": p - q,
        "nullity": z,
        "parity": parity(f),
        "discriminant": cokernel(f.matrix(), f.rank),
    }


@dataclass(frozen=True)
class Congruence:
    verdict: str  # "yes", "no" or "unknown"
    witness: Matrix | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict == "yes"


def _vectors(n: int, bound: int):
    return list(itertools.product(range(-bound, bound + 1), repeat=n))


def congruent(f: IntSymForm, g: IntSymForm, bound: int = 5, max_vectors: int = 200_000) -> Congruence:
    """Decide whether ``P^T f P == g`` for some unimodular ``P``.

    Cheap invariants are compared first and a mismatch gives ``no``.
    Otherwise unimodular matrices with entries bounded by ``bound`` are
    searched column by column; exhausting the search gives ``unknown``.
    """
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    fi, gi = form_invariants(f), form_invariants(g)
    for key in ("det", "signature", "nullity", "parity", "discriminant"):
        if fi[key] != gi[key]:
            return Congruence("no", reason=key)
    n = f.rank
    if f.gram == g.gram:
        return Congruence("yes", witness=identity_matrix(n))
    if (2 * bound + 1) ** n > max_vectors:
        return Congruence("unknown", reason="search space too large")
    vecs = _vectors(n, bound)
    G = f.matrix()
    Gv = {v: [sum(G[i][j] * v[j] for j in range(n)) for i in range(n)] for v in vecs}
    by_norm: dict[int, list] = {}
    for v in vecs:
        by_norm.setdefault(sum(a * b for a, b in zip(v, Gv[v])), []).append(v)

    cols: list = []

    def search(i: int):
        if i == n:
            P = [[cols[j][r] for j in range(n)] for r in range(n)]
            return P if abs(determinant(P)) == 1 else None
        for v in by_norm.get(g.gram[i][i], ()):
            if all(sum(a * b for a, b in zip(v, Gv[cols[j]])) == g.gram[i][j] for j in range(i)):
                cols.append(v)
                found = search(i + 1)
                if found is not None:
                    return found
                cols.pop()
        return None

    P = search(0)
    if P is None:
        return Congruence("unknown", reason=f"no witness with entries bounded by {bound}")
    assert f.pullback(P) == g
    return Congruence("yes", witness=P)


def random_unimodular(n: int, rng, steps: int = 6, bound: int = 2) -> Matrix:
    """Product of elementary matrices, rejected until entries stay within ``bound``."""
    while True:
        P = identity_matrix(n)
        for _ in range(steps):
            if n < 2:
                break
            i, j = rng.sample(range(n), 2)
            k = rng.choice((-1, 1))
            for row in P:
                row[j] += k * row[i]
        if rng.random() < 0.5 and n:
            i = rng.randrange(n)
            for row in P:
                row[i] = -row[i]
        if all(abs(x) <= bound for row in P for x in row):
            return P


# --------------------------------------------------------------------------
# linking forms


@dataclass(frozen=True)
class LinkingForm:
    """``-L^{-1} mod 1`` on the cokernel of a nondegenerate symmetric matrix.

    ``factors`` are the nontrivial invariant factors, ``generators[i]`` a
    vector representing a generator of the ``i``-th cyclic summand, and
    ``values[i][j]`` the pairing of generators ``i`` and ``j`` in ``[0, 1)``.
    """

    factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    values: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _inverse: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    def q_values(self) -> list[Fraction]:
        return [self.values[i][i] for i in range(len(self.factors))]

    def pair(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        n = len(self._inverse)
        s = -sum(x[i] * self._inverse[i][j] * y[j] for i in range(n) for j in range(n))
        return s - (s.numerator // s.denominator)

    def elements(self):
        """Every element as an integer vector, via combinations of the generators."""
        n = len(self._inverse)
        for coeffs in itertools.product(*(range(d) for d in self.factors)):
            yield tuple(sum(c * g[i] for c, g in zip(coeffs, self.generators)) for i in range(n))

    def self_pairing_multiset(self) -> tuple[Fraction, ...]:
        """Sorted values ``lambda(x, x)`` over the whole group (an isomorphism invariant)."""
        return tuple(sorted(self.pair(x, x) for x in self.elements()))

    def generator_multiset(self) -> tuple[Fraction, ...] | None:
        """For cyclic groups: sorted ``lambda(g, g)`` over all generators ``g``."""
        if len(self.factors) != 1:
            return None
        (d,) = self.factors
        (g,) = self.generators
        vals = []
        for u in range(1, d):
            if gcd(u, d) == 1:
                x = [u * a for a in g]
                vals.append(self.pair(x, x))
        return tuple(sorted(vals)) if d > 1 else ()


def _inverse_fraction(m: Matrix) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for k in range(n):
        p = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                q = a[i][k]
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def linking_form(f) -> LinkingForm:
    if not isinstance(f, IntSymForm):
        f = IntSymForm(f)
    if f.rank and f.det == 0:
        raise ValueError("linking form needs a nondegenerate matrix")
    n = f.rank
    inv = _inverse_fraction(f.matrix()) if n else []
    sf = smith_normal_form(f.matrix(), n) if n else None
    factors, gens = [], []
    if n:
        # coker(L) ~ coker(D) through x -> U x, so U^-1 e_i generates summand i
        Uinv = [[int(x) for x in row] for row in _inverse_fraction(sf.U)]
        for i, d in enumerate(sf.diagonal):
            if d > 1:
                factors.append(d)
                gens.append(tuple(Uinv[r][i] for r in range(n)))
    lf = LinkingForm(tuple(factors), tuple(gens), (), tuple(tuple(r) for r in inv))
    values = tuple(tuple(lf.pair(a, b) for b in gens) for a in gens)
    return LinkingForm(lf.factors, lf.generators, values, lf._inverse)


def linking_forms_isomorphic(a: LinkingForm, b: LinkingForm, max_order: int = 4096) -> bool | None:
    """Exact for cyclic groups.

    For other groups a mismatch of self-pairing multisets gives ``False``;
    agreement is only a necessary condition and gives ``None``, as does a
    group too large to enumerate.
    """
    if a.factors != b.factors:
        return False
    if len(a.factors) <= 1:
        return a.generator_multiset() == b.generator_multiset()
    if a.order > max_order:
        return None
    return None if a.self_pairing_multiset() == b.self_pairing_multiset() else False
