"""Integer chain complexes, Smith normal form, and (co)homology.

All linear algebra is exact: Python integers for Smith normal form,
Fractions only transiently when inverting unimodular matrices.  Matrices
are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction

from .chains import FormalChain


class BoundaryError(ValueError):
    """Raised when the matrices of a complex do not square to zero."""


# ---------------------------------------------------------------------------
# matrix helpers

def zeros(rows: int, cols: int) -> list:
    return [[0] * cols for _ in range(rows)]

def identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

def transpose(M: list) -> list:
    return [list(col) for col in zip(*M)] if M else []

def mat_mult(A: list, B: list) -> list:
    if not A or not B:
        return []
    n, k, p = len(A), len(B), len(B[0])
    Bt = transpose(B)
    return [[sum(A[i][t] * Bt[j][t] for t in range(k)) for j in range(p)]
            for i in range(n)]

def is_zero_matrix(M: list) -> bool:
    return all(all(x == 0 for x in row) for row in M)


def integer_inverse(U: list) -> list:
    """Inverse of a unimodular integer matrix (exact, via Fractions)."""
    n = len(U)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(U)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    inv = [[x for x in row[n:]] for row in aug]
    assert all(x.denominator == 1 for row in inv for x in row)
    return [[int(x) for x in row] for row in inv]


# ---------------------------------------------------------------------------
# Smith normal form

def smith_normal_form(M: list, pivot: str = "min_abs"):
    """Compute unimodular S, T and diagonal D with S * M * T = D.

    Diagonal entries are nonnegative and each divides the next.  `pivot`
    selects the elimination pivot ('min_abs' or 'first_nonzero'); the
    invariant factors do not depend on it.
    """
    D = [list(row) for row in M]
    rows = len(D)
    cols = len(D[0]) if D else 0
    S = identity(rows)
    T = identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        S[i], S[j] = S[j], S[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in T:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in T:
            row[dst] += q * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        S[i] = [-x for x in S[i]]

    def select_pivot(k):
        candidates = [(i, j) for i in range(k, rows) for j in range(k, cols)
                      if D[i][j] != 0]
        if not candidates:
            return None
        if pivot == "first_nonzero":
            return candidates[0]
        return min(candidates, key=lambda ij: abs(D[ij[0]][ij[1]]))

    k = 0
    while k < min(rows, cols):
        pos = select_pivot(k)
        if pos is None:
            break
        swap_rows(k, pos[0])
        swap_cols(k, pos[1])
        # clear row and column k; pivoting may reintroduce entries, so loop
        while True:
            dirty = False
            for i in range(k + 1, rows):
                if D[i][k] != 0:
                    q = -(D[i][k] // D[k][k])
                    add_row(k, i, q)
                    if D[i][k] != 0:  # remainder became the smaller pivot
                        swap_rows(k, i)
                        dirty = True
            for j in range(k + 1, cols):
                if D[k][j] != 0:
                    q = -(D[k][j] // D[k][k])
                    add_col(k, j, q)
                    if D[k][j] != 0:
                        swap_cols(k, j)
                        dirty = True
            if not dirty:
                break
        # enforce divisibility of the remaining block by the pivot
        if D[k][k] != 0:
            for i in range(k + 1, rows):
                bad = next((j for j in range(k + 1, cols)
                            if D[i][j] % D[k][k] != 0), None)
                if bad is not None:
                    add_row(i, k, 1)
                    k -= 1
                    break
        k += 1

    for i in range(min(rows, cols)):
        if D[i][i] < 0:
            negate_row(i)
    return S, D, T


def invariant_factors(M: list) -> list:
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))
            if D[i][i] != 0]


def rank_mod_p(M: list, p: int) -> int:
    """Rank of an integer matrix over the prime field GF(p)."""
    A = [[x % p for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if A else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if A[r][col] % p), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][col], p - 2, p)
        A[rank] = [(x * inv) % p for x in A[rank]]
        for r in range(rows):
            if r != rank and A[r][col]:
                factor = A[r][col]
                A[r] = [(x - factor * y) % p for x, y in zip(A[r], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# chain complexes

class ChainComplexData:
    """Graded basis labels plus integer boundary matrices.

    `diff[d]` maps degree-d chains to degree-(d-1) chains; its shape is
    len(basis[d-1]) x len(basis[d]).  Degrees may be negative (used for
    cochain duals, where degree -q holds the q-cochains).
    """

    def __init__(self, basis: dict, diff: dict, shift: int = 0):
        self.basis = {d: list(labels) for d, labels in basis.items()}
        self.diff = diff
        self.shift = shift  # records the cochain regrading, if any
        self.index = {d: {label: i for i, label in enumerate(labels)}
                      for d, labels in self.basis.items()}

    @property
    def degrees(self) -> list:
        return sorted(self.basis)

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, []))

    def matrix(self, d: int) -> list:
        """Boundary matrix out of degree d (zero matrix if absent)."""
        M = self.diff.get(d)
        if M is None:
            return zeros(self.dim(d - 1), self.dim(d))
        return M

    def check_dd_zero(self) -> bool:
        for d in self.degrees:
            outer = self.matrix(d)
            inner = self.matrix(d + 1)
            if not outer or not inner:
                continue
            outer_cols = [{i: row[k] for i, row in enumerate(outer) if row[k]}
                          for k in range(len(outer[0]))]
            for j in range(len(inner[0])):
                acc = {}
                for k in range(len(inner)):
                    v = inner[k][j]
                    if not v:
                        continue
                    for i, w in outer_cols[k].items():
                        acc[i] = acc.get(i, 0) + v * w
                if any(acc.values()):
                    raise BoundaryError(f"D_{d} * D_{d + 1} != 0")
        return True

    def vector(self, chain: FormalChain, d: int) -> list:
        v = [0] * self.dim(d)
        for label, coeff in chain:
            v[self.index[d][label]] = coeff
        return v

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.dim(d) for d in self.degrees)


def complex_from_boundary(cells_by_dim: dict, boundary_fn) -> ChainComplexData:
    """Assemble a ChainComplexData from graded cells and a boundary map
    returning FormalChain.  Cell order within a degree is preserved."""
    basis = {d: list(cells) for d, cells in cells_by_dim.items()}
    index = {d: {c: i for i, c in enumerate(cells)} for d, cells in basis.items()}
    diff = {}
    for d in sorted(basis):
        if d - 1 not in basis:
            continue
        M = zeros(len(basis[d - 1]), len(basis[d]))
        for j, cell in enumerate(basis[d]):
            for label, coeff in boundary_fn(cell):
                i = index[d - 1].get(label)
                if i is None:
                    raise BoundaryError(
                        f"boundary of {cell} leaves the complex at {label}")
                M[i][j] = coeff
        diff[d] = M
    return ChainComplexData(basis, diff)


def cochain_dual(C: ChainComplexData) -> ChainComplexData:
    """Transpose of a chain complex, regraded so that degree -q carries the
    q-cochains; homology of the result at -q is H^q."""
    basis = {-d: [("dual", label) for label in labels]
             for d, labels in C.basis.items()}
    diff = {}
    for q in C.degrees:
        # d on q-cochains is the transpose of the boundary out of q+1
        if C.dim(q + 1) and C.dim(q):
            diff[-q] = transpose(C.matrix(q + 1))
    return ChainComplexData(basis, diff, shift=0 if C.shift else -1)


class HomologySummary:
    """Per-degree free rank and torsion coefficients."""

    def __init__(self, data: dict):
        self.data = dict(data)  # degree -> (betti, [torsion])

    def betti(self, d: int) -> int:
        return self.data.get(d, (0, []))[0]

    def torsion(self, d: int) -> list:
        return self.data.get(d, (0, []))[1]

    def betti_vector(self) -> list:
        degs = [d for d, (b, t) in self.data.items() if b or t]
        if not degs:
            return []
        lo, hi = min(min(degs), 0), max(degs)
        return [self.betti(d) for d in range(lo, hi + 1)]

    def to_json(self) -> list:
        return [{"degree": d, "betti": b, "torsion": list(t)}
                for d, (b, t) in sorted(self.data.items()) if b or t]

    def __repr__(self):
        return f"HomologySummary({self.to_json()})"

    def __eq__(self, other):
        keys = set(self.data) | set(other.data)
        return all(self.betti(d) == other.betti(d)
                   and self.torsion(d) == other.torsion(d) for d in keys)


def homology(C: ChainComplexData, coefficients="Z") -> HomologySummary:
    """Homology of an integer chain complex.

    `coefficients` is "Z", "Q", or a prime p.  Over Z the torsion list per
    degree holds the invariant factors > 1 of the incoming boundary.
    """
    C.check_dd_zero()
    data = {}
    for d in C.degrees:
        n = C.dim(d)
        out_m = C.matrix(d)
        in_m = C.matrix(d + 1)
        if coefficients == "Z" or coefficients == "Q":
            out_rank = len(invariant_factors(out_m)) if C.dim(d - 1) else 0
            in_factors = invariant_factors(in_m) if C.dim(d + 1) else []
            betti = n - out_rank - len(in_factors)
            torsion = [f for f in in_factors if f > 1] if coefficients == "Z" else []
        else:
            p = int(coefficients)
            out_rank = rank_mod_p(out_m, p) if C.dim(d - 1) else 0
            in_rank = rank_mod_p(in_m, p) if C.dim(d + 1) else 0
            betti = n - out_rank - in_rank
            torsion = []
        data[d] = (betti, torsion)
    return HomologySummary(data)


def homology_generators(C: ChainComplexData, d: int):
    """Representatives of the free part of H_d, plus a coordinate map.

    Returns (gens, coords): `gens` are integer vectors in the degree-d
    basis; `coords(v)` maps a cycle vector to its class coordinates in
    that free basis (well defined modulo boundaries and torsion).
    """
    n = C.dim(d)
    A = C.matrix(d)       # out of degree d
    B = C.matrix(d + 1)   # into degree d
    if C.dim(d - 1) == 0:
        kernel_cols = identity(n)
        kernel_idx = list(range(n))
        Tinv = identity(n)
        T = identity(n)
    else:
        _, D, T = smith_normal_form(A)
        kernel_idx = [j for j in range(n)
                      if all(D[i][j] == 0 for i in range(len(D)))]
        Tinv = integer_inverse(T)
        kernel_cols = [[T[i][j] for j in kernel_idx] for i in range(n)]
    z = len(kernel_idx)

    # image of B, written in kernel coordinates
    if C.dim(d + 1):
        full = mat_mult(Tinv, B)
        X = [full[i] for i in kernel_idx]
    else:
        X = zeros(z, 0)
    Sx, Dx, _ = smith_normal_form(X) if z else ([], [], [])
    r = sum(1 for i in range(min(len(Dx), len(Dx[0]) if Dx else 0))
            if Dx[i][i] != 0)
    free_idx = [i for i in range(z) if i >= r]
    Sx_inv = integer_inverse(Sx) if z else []

    gens = []
    for i in free_idx:
        col = [Sx_inv[row][i] for row in range(z)]
        vec = [sum(kernel_cols[row][t] * col[t] for t in range(z))
               for row in range(n)]
        gens.append(vec)

    def coords(v: list) -> tuple:
        full = [sum(Tinv[i][j] * v[j] for j in range(n)) for i in range(n)]
        for i in range(n):
            if i not in kernel_idx and full[i] != 0:
                raise ValueError("vector is not a cycle")
        xk = [full[i] for i in kernel_idx]
        y = [sum(Sx[i][t] * xk[t] for t in range(z)) for i in range(z)]
        return tuple(y[i] for i in free_idx)

    return gens, coords
