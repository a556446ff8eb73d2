"""Exact sparse linear algebra over the rationals.

Matrices are dictionaries mapping (row, col) to nonzero Fraction entries; the
zero matrix is the empty dict.  Everything here is exact: ranks come from
fraction-free (Bareiss) elimination on denominator-cleared integer rows,
kernels from rational row reduction, and characteristic polynomials from an
exact Hessenberg reduction.  No thresholds, no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Entry = Tuple[int, int]


class SparseMat:
    """Immutable-by-convention sparse matrix with Fraction entries.

    Stored zeros are never kept: `data` only holds nonzero values, so two
    matrices are equal iff their dicts are equal.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Optional[Dict[Entry, Fraction]] = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = {}
        self.data = {k: v for k, v in data.items() if v != 0}
        for (i, j) in self.data:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry {(i, j)} outside {rows}x{cols} matrix")

    @classmethod
    def identity(cls, n: int) -> "SparseMat":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction]]) -> "SparseMat":
        n = len(rows)
        m = len(rows[0]) if n else 0
        data = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v != 0:
                    data[(i, j)] = Fraction(v)
        return cls(n, m, data)

    def get(self, i: int, j: int) -> Fraction:
        return self.data.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def __hash__(self):
        raise TypeError("SparseMat is not hashable")

    def __add__(self, other: "SparseMat") -> "SparseMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        data = dict(self.data)
        for k, v in other.data.items():
            data[k] = data.get(k, Fraction(0)) + v
        return SparseMat(self.rows, self.cols, data)

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "SparseMat":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "SparseMat":
        c = Fraction(c)
        if c == 0:
            return SparseMat(self.rows, self.cols)
        return SparseMat(self.rows, self.cols, {k: c * v for k, v in self.data.items()})

    def __mul__(self, other: "SparseMat") -> "SparseMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        # index other by row for the sparse product
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (r, c), v in other.data.items():
            by_row.setdefault(r, []).append((c, v))
        data: Dict[Entry, Fraction] = {}
        for (i, k), a in self.data.items():
            for (j, b) in by_row.get(k, ()):
                key = (i, j)
                data[key] = data.get(key, Fraction(0)) + a * b
        return SparseMat(self.rows, other.cols, data)

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows, {(j, i): v for (i, j), v in self.data.items()})

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self.data.items() if i == j), Fraction(0))

    def kron(self, other: "SparseMat") -> "SparseMat":
        data = {}
        for (i, j), a in self.data.items():
            for (r, s), b in other.data.items():
                data[(i * other.rows + r, j * other.cols + s)] = a * b
        return SparseMat(self.rows * other.rows, self.cols * other.cols, data)

    def bracket(self, other: "SparseMat") -> "SparseMat":
        return self * other - other * self

    def row_vectors(self) -> List[Dict[int, Fraction]]:
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            rows[i][j] = v
        return rows

    def col_vectors(self) -> List[Dict[int, Fraction]]:
        cols: List[Dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for (i, j), v in self.data.items():
            cols[j][i] = v
        return cols

    def apply(self, vec: Dict[int, Fraction]) -> Dict[int, Fraction]:
        """Matrix times sparse column vector."""
        out: Dict[int, Fraction] = {}
        for (i, j), v in self.data.items():
            c = vec.get(j)
            if c is not None:
                out[i] = out.get(i, Fraction(0)) + v * c
        return {k: v for k, v in out.items() if v != 0}

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.data.items():
            out[i][j] = v
        return out

    def rank(self) -> int:
        return rank_of_rows(self.row_vectors())

    def nullspace(self) -> List[Dict[int, Fraction]]:
        return nullspace_of_rows(self.row_vectors(), self.cols)

    def charpoly(self) -> List[Fraction]:
        return charpoly(self)

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, {len(self.data)} entries)"


def _clear_row(row: Dict[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to primitive integers (rank-preserving)."""
    row = {j: v for j, v in row.items() if v != 0}
    if not row:
        return {}
    from math import gcd, lcm

    den = 1
    for v in row.values():
        den = lcm(den, v.denominator)
    ints = {j: int(v * den) for j, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if g > 1:
        ints = {j: v // g for j, v in ints.items()}
    return ints


def rank_of_rows(rows: Iterable[Dict[int, Fraction]], stop_at: Optional[int] = None) -> int:
    """Rank via fraction-free elimination on gcd-normalized integer rows.

    Each eliminated row is rescaled to primitive form, which keeps the
    arithmetic in (exact) integers without Bareiss' exact-division bookkeeping.
    `stop_at` allows early exit once the rank reaches a known maximum.
    """
    from math import gcd

    work = [_clear_row(r) for r in rows]
    work = [r for r in work if r]
    rank = 0
    while work:
        # pick the shortest row to pivot on (limits fill-in)
        work.sort(key=len)
        pivot_row = work.pop(0)
        pcol = min(pivot_row)
        pval = pivot_row[pcol]
        rank += 1
        if stop_at is not None and rank >= stop_at:
            return rank
        nxt = []
        for r in work:
            rv = r.get(pcol)
            if rv is None:
                nxt.append(r)
                continue
            new: Dict[int, int] = {}
            for j, v in r.items():
                if j == pcol:
                    continue
                w = v * pval - pivot_row.get(j, 0) * rv
                if w:
                    new[j] = w
            for j, pv in pivot_row.items():
                if j == pcol or j in r:
                    continue
                w = -pv * rv
                if w:
                    new[j] = w
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, abs(v))
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                nxt.append(new)
        work = nxt
    return rank


def rref_of_rows(rows: Sequence[Dict[int, Fraction]]) -> Tuple[List[Dict[int, Fraction]], List[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot cols)."""
    work = [{j: v for j, v in r.items() if v != 0} for r in rows]
    work = [r for r in work if r]
    echelon: List[Dict[int, Fraction]] = []
    pivots: List[int] = []
    while work:
        work.sort(key=lambda r: (min(r), len(r)))
        row = work.pop(0)
        pcol = min(row)
        pval = row[pcol]
        row = {j: v / pval for j, v in row.items()}
        nxt = []
        for r in work:
            rv = r.get(pcol)
            if rv is None:
                nxt.append(r)
                continue
            new = {j: v for j, v in r.items() if j != pcol}
            for j, pv in row.items():
                if j == pcol:
                    continue
                w = new.get(j, Fraction(0)) - rv * pv
                if w:
                    new[j] = w
                elif j in new:
                    del new[j]
            if new:
                nxt.append(new)
        work = nxt
        # back-substitute into existing echelon rows
        for er in echelon:
            rv = er.get(pcol)
            if rv is None:
                continue
            del er[pcol]
            for j, pv in row.items():
                if j == pcol:
                    continue
                w = er.get(j, Fraction(0)) - rv * pv
                if w:
                    er[j] = w
                elif j in er:
                    del er[j]
        echelon.append(row)
        pivots.append(pcol)
    order = sorted(range(len(pivots)), key=lambda t: pivots[t])
    return [echelon[t] for t in order], sorted(pivots)


def nullspace_of_rows(rows: Sequence[Dict[int, Fraction]], ncols: int) -> List[Dict[int, Fraction]]:
    """Basis of {x : R x = 0} for the row list R, as sparse column vectors."""
    echelon, pivots = rref_of_rows(rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for row, p in zip(echelon, pivots):
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def solve_row_combination(rows: Sequence[Dict[int, Fraction]], target: Dict[int, Fraction]) -> Optional[List[Fraction]]:
    """Express `target` as a linear combination of `rows`; None if inconsistent.

    The rows need not be independent; any one solution is returned.
    """
    # Solve (coeffs) . rows = target by eliminating on an augmented system whose
    # unknowns are the combination coefficients.
    n = len(rows)
    # Build columns: for each coordinate j, equation sum_i c_i rows[i][j] = target[j]
    eqs: Dict[int, Dict[int, Fraction]] = {}
    for i, r in enumerate(rows):
        for j, v in r.items():
            eqs.setdefault(j, {})[i] = v
    rhs = dict(target)
    aug: List[Dict[int, Fraction]] = []
    keys = sorted(set(eqs) | set(rhs))
    for j in keys:
        row = dict(eqs.get(j, {}))
        t = rhs.get(j, Fraction(0))
        if t:
            row[n] = t  # augmented column
        if row:
            aug.append(row)
    echelon, pivots = rref_of_rows(aug)
    if n in pivots:
        return None  # inconsistent
    coeffs = [Fraction(0)] * n
    for row, p in zip(echelon, pivots):
        coeffs[p] = row.get(n, Fraction(0))
    return coeffs


def _hessenberg(dense: List[List[Fraction]]) -> List[List[Fraction]]:
    """In-place similarity reduction to upper Hessenberg form."""
    n = len(dense)
    H = dense
    for k in range(n - 2):
        piv = None
        for r in range(k + 1, n):
            if H[r][k] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != k + 1:
            H[piv], H[k + 1] = H[k + 1], H[piv]
            for r in range(n):
                H[r][piv], H[r][k + 1] = H[r][k + 1], H[r][piv]
        p = H[k + 1][k]
        for r in range(k + 2, n):
            if H[r][k] == 0:
                continue
            f = H[r][k] / p
            hr = H[r]
            h1 = H[k + 1]
            for c in range(k, n):
                if h1[c]:
                    hr[c] -= f * h1[c]
            for rr in range(n):
                if H[rr][r]:
                    H[rr][k + 1] += f * H[rr][r]
    return H


def charpoly(M: SparseMat) -> List[Fraction]:
    """Monic characteristic polynomial det(t I - M), coefficients ascending.

    Exact: Hessenberg similarity reduction over Q, then the leading-minor
    recurrence.  Returns [c0, c1, ..., 1] with len = n + 1.
    """
    if M.rows != M.cols:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = M.rows
    if n == 0:
        return [Fraction(1)]
    H = _hessenberg(M.to_dense())
    # p[k] = charpoly of leading k x k block, ascending coefficients
    p: List[List[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        hkk = H[k - 1][k - 1]
        prev = p[k - 1]
        # (t - hkk) * prev
        cur = [Fraction(0)] * (k + 1)
        for i, c in enumerate(prev):
            cur[i + 1] += c
            cur[i] -= hkk * c
        # - sum over products of subdiagonals
        prod = Fraction(1)
        for m in range(1, k):
            prod *= H[k - m][k - m - 1]
            if prod == 0:
                break
            a = H[k - m - 1][k - 1]
            if a == 0:
                continue
            coef = a * prod
            for i, c in enumerate(p[k - m - 1]):
                cur[i] -= coef * c
        p.append(cur)
    return p[n]


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int, bound: int = 10**6) -> List[int]:
    """Positive divisors of |n| via trial division up to `bound`.

    If an unfactored cofactor remains it is treated as prime (its proper
    divisors beyond the bound are not enumerated).
    """
    n = abs(n)
    if n == 0:
        return []
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for pr, e in factors.items():
        divs = [dd * pr**i for dd in divs for i in range(e + 1)]
    return sorted(set(divs))


def rational_roots(coeffs: Sequence[Fraction]) -> Tuple[List[Tuple[Fraction, int]], List[Fraction]]:
    """All rational roots (with multiplicity) of a polynomial, plus remainder.

    Roots are found by the rational-root theorem over a denominator-cleared
    copy and removed by synthetic division; the returned remainder has no
    rational roots (or none findable within the divisor bound).
    """
    work = list(coeffs)
    while work and work[-1] == 0:
        work.pop()
    if not work:
        raise ValueError("zero polynomial")
    roots: List[Tuple[Fraction, int]] = []
    # strip t = 0 roots
    zmult = 0
    while work[0] == 0:
        work.pop(0)
        zmult += 1
    if zmult:
        roots.append((Fraction(0), zmult))

    def deflate(poly: List[Fraction], r: Fraction) -> Optional[List[Fraction]]:
        # synthetic division by (t - r); None if r is not a root
        out = [Fraction(0)] * (len(poly) - 1)
        acc = Fraction(0)
        for i in range(len(poly) - 1, 0, -1):
            acc = acc * r + poly[i]
            out[i - 1] = acc
        if acc * r + poly[0] != 0:
            return None
        return out

    while len(work) > 1:
        from math import lcm

        den = 1
        for c in work:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in work]
        cands: List[Fraction] = []
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                cands.append(Fraction(p, q))
                cands.append(Fraction(-p, q))
        found = None
        for cand in sorted(set(cands), key=lambda f: (abs(f), f < 0)):
            nxt = deflate(work, cand)
            if nxt is not None:
                found = cand
                mult = 1
                work = nxt
                while len(work) > 1:
                    nxt = deflate(work, cand)
                    if nxt is None:
                        break
                    work = nxt
                    mult += 1
                roots.append((cand, mult))
                break
        if found is None:
            break
    roots.sort(key=lambda t: t[0])
    return roots, work


def stack_rows(mats: Sequence[SparseMat]) -> SparseMat:
    """Vertical concatenation."""
    cols = mats[0].cols
    data = {}
    off = 0
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch")
        for (i, j), v in m.data.items():
            data[(off + i, j)] = v
        off += m.rows
    return SparseMat(off, cols, data)


def span_rank(vectors: Sequence[Dict[int, Fraction]], stop_at: Optional[int] = None) -> int:
    return rank_of_rows(vectors, stop_at=stop_at)


def vectors_contained_in_span(vectors: Sequence[Dict[int, Fraction]], span: Sequence[Dict[int, Fraction]]) -> bool:
    """True iff every vector lies in the rational span of `span`."""
    base = rank_of_rows(span)
    joint = list(span) + list(vectors)
    return rank_of_rows(joint) == base
