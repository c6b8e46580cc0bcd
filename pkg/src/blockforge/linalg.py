"""Small exact linear algebra over fields.

The generic routines work for any element type with field operators and a
falsy zero (``Fraction``, :class:`~blockforge.finite_field.FFElem`). The
``*_mod`` variants take plain ints modulo a prime and are used by the
character table solver.
"""

from __future__ import annotations

from typing import Sequence


def _eliminate(rows, one):
    """Row-reduce a copy of ``rows``; return (rref rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, one) -> int:
    return len(_eliminate(rows, one)[1])


class EchelonBasis:
    """Incrementally maintained row space, for greedy independence tests."""

    def __init__(self, one):
        self.one = one
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v):
        v = list(v)
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Insert ``v`` if independent; report whether it was."""
        w = self.reduce(v)
        c = next((i for i, x in enumerate(w) if x), None)
        if c is None:
            return False
        inv = self.one / w[c]
        w = [x * inv for x in w]
        for i, row in enumerate(self.rows):
            if row[c]:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(c)
        return True

    def __len__(self) -> int:
        return len(self.rows)


def independent_rows(rows, one) -> list[int]:
    """Indices of the greedy (first-come) maximal independent subset of rows."""
    basis = EchelonBasis(one)
    return [i for i, r in enumerate(rows) if basis.add(r)]


def independent_columns(rows, one) -> list[int]:
    return _eliminate(rows, one)[1]


def det(M, one):
    m = [list(r) for r in M]
    n = len(m)
    zero = one - one
    result = one
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return zero
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = -result
        piv = m[c][c]
        result = result * piv
        inv = one / piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def is_nonsingular(M, one) -> bool:
    return len(M) == 0 or rank(M, one) == len(M)


def inverse_matrix(M, one):
    n = len(M)
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M)]
    red, piv = _eliminate(aug, one)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def nullspace(M, one) -> list[list]:
    """Basis of ``{v : M v = 0}``."""
    if not M:
        return []
    ncols = len(M[0])
    zero = one - one
    red, piv = _eliminate(M, one)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(piv):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), row[0] * 0) for col in zip(*B)] for row in A]


# -- prime-field routines on plain ints ---------------------------------------

def eliminate_mod(rows: Sequence[Sequence[int]], q: int):
    m = [[x % q for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [x * inv % q for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace_mod(M: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    ncols = len(M[0])
    red, piv = eliminate_mod(M, q)
    basis = []
    for fc in (c for c in range(ncols) if c not in piv):
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(piv):
            v[pc] = (-red[r][fc]) % q
        basis.append(v)
    return basis


def charpoly_mod(A: Sequence[Sequence[int]], q: int) -> list[int]:
    """Coefficients (lowest first) of det(xI - A) over F_q via Hessenberg form."""
    n = len(A)
    H = [[x % q for x in r] for r in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = pow(H[m][m - 1], -1, q)
        for i in range(m + 1, n):
            f = H[i][m - 1] * inv % q
            if f:
                H[i] = [(a - f * b) % q for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + f * row[i]) % q
    # p_k = det(xI - H[:k,:k])
    polys = [[1]]
    for k in range(1, n + 1):
        hk = H[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [0] + prev  # x * p_{k-1}
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - hk * c) % q
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1] % q
            coef = H[i - 1][k - 1] * prod % q
            if coef:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] = (cur[j] - coef * c) % q
        polys.append(cur)
    return polys[n]
