"""Dense exact linear algebra over QQ (Fractions) or F_p (ints)."""

from __future__ import annotations

from fractions import Fraction


def _norm(c, p):
    return c % p if p else Fraction(c)


def row_echelon(rows, p: int = 0):
    """Reduced row echelon form; returns ``(echelon_rows, pivot_columns)``."""
    mat = [[_norm(c, p) for c in r] for r in rows if any(r)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        inv = pow(row[c], -1, p) if p else 1 / row[c]
        if p:
            row = [v * inv % p for v in row]
        else:
            row = [v * inv for v in row]
        mat[r] = row
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                other = mat[i]
                if p:
                    mat[i] = [(a - f * b) % p for a, b in zip(other, row)]
                else:
                    mat[i] = [a - f * b for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, p: int = 0) -> int:
    return len(row_echelon(rows, p)[1])


def nullspace(rows, ncols: int, p: int = 0):
    """Basis of {v : rows v = 0} as a list of vectors of length ``ncols``."""
    ech, piv = row_echelon(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(piv)]
    zero = 0 if p else Fraction(0)
    one = 1 if p else Fraction(1)
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(ech, piv):
            v[pc] = (-row[f]) % p if p else -row[f]
        basis.append(v)
    return basis


def in_row_space(rows, v, p: int = 0) -> bool:
    """Whether ``v`` is a linear combination of ``rows``."""
    if not any(v):
        return True
    if not rows:
        return False
    return rank(list(rows) + [v], p) == rank(rows, p)
