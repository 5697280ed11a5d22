"""Small exact linear algebra kernel: integer determinants, fraction-free
rank / span tracking, and a replayable Gaussian solver for repeated
right-hand sides over the rationals."""

from fractions import Fraction
from math import gcd, lcm


def det_int(rows) -> int:
    """Bareiss determinant of a square integer matrix."""
    m = [list(r) for r in rows]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(k - 1):
        if m[c][c] == 0:
            for i in range(c + 1, k):
                if m[i][c]:
                    m[c], m[i] = m[i], m[c]
                    sign = -sign
                    break
            else:
                return 0
        p = m[c][c]
        for i in range(c + 1, k):
            mic = m[i][c]
            for j in range(c + 1, k):
                m[i][j] = (p * m[i][j] - mic * m[c][j]) // prev
            m[i][c] = 0
        prev = p
    return sign * m[k - 1][k - 1]


def rank_int(rows) -> int:
    """Rank over QQ of an integer matrix, by division-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [p * a - f * b for a, b in zip(m[i], m[rank])]
                g = 0
                for x in m[i]:
                    g = gcd(g, x)
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        rank += 1
        if rank == len(m):
            break
    return rank


def to_int_vector(vec) -> list[int]:
    """Scale a rational vector by the lcm of denominators; row space is unchanged."""
    fracs = [Fraction(x) for x in vec]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * mult) for f in fracs]


def _gcd_normalize(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        vec = [x // g for x in vec]
    lead = next((x for x in vec if x), 0)
    if lead < 0:
        vec = [-x for x in vec]
    return vec


class IntRowSpan:
    """Incremental row space over QQ, kept as gcd-reduced integer echelon rows.

    Cross-multiplication keeps everything in ZZ (fraction-free); scaling
    rows never changes the span, so rank and membership are exact.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, list[int]] = {}

    def _reduce(self, vec) -> tuple[list[int], int | None]:
        v = to_int_vector(vec)
        if len(v) != self.width:
            raise ValueError(f"vector has length {len(v)}, expected {self.width}")
        while True:
            lead = next((i for i, x in enumerate(v) if x), None)
            if lead is None or lead not in self.pivots:
                return v, lead
            row = self.pivots[lead]
            a, b = row[lead], v[lead]
            v = [a * x - b * y for x, y in zip(v, row)]
            v = _gcd_normalize(v)

    def add(self, vec) -> bool:
        """Insert a vector; True if the rank grew."""
        v, lead = self._reduce(vec)
        if lead is None:
            return False
        self.pivots[lead] = _gcd_normalize(v)
        return True

    def contains(self, vec) -> bool:
        _, lead = self._reduce(vec)
        return lead is None

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> list[list[int]]:
        return [self.pivots[c] for c in sorted(self.pivots)]


class GaussSolver:
    """Forward-eliminates an N x B integer matrix of full column rank once,
    then solves A x = v for many right-hand sides by replaying the
    recorded row operations.  Exact over QQ throughout."""

    def __init__(self, matrix):
        a = [[Fraction(x) for x in row] for row in matrix]
        self.nrows = len(a)
        self.ncols = len(a[0]) if a else 0
        self.ok = True
        self.ops: list[tuple] = []
        for col in range(self.ncols):
            piv = next((i for i in range(col, self.nrows) if a[i][col] != 0), None)
            if piv is None:
                self.ok = False
                return
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                self.ops.append(("swap", col, piv))
            pv = a[col][col]
            for i in range(col + 1, self.nrows):
                if a[i][col] != 0:
                    f = a[i][col] / pv
                    self.ops.append(("axpy", i, col, f))
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
        self.upper = [a[i][:] for i in range(self.ncols)]

    def solve(self, rhs) -> list[Fraction] | None:
        """One exact solution of A x = rhs, or None if inconsistent."""
        if not self.ok:
            raise RuntimeError("solver built from a rank-deficient matrix")
        v = [Fraction(x) for x in rhs]
        for op in self.ops:
            if op[0] == "swap":
                _, i, j = op
                v[i], v[j] = v[j], v[i]
            else:
                _, i, src, f = op
                v[i] -= f * v[src]
        if any(v[i] for i in range(self.ncols, self.nrows)):
            return None
        x = [Fraction(0)] * self.ncols
        for i in reversed(range(self.ncols)):
            s = v[i]
            row = self.upper[i]
            for j in range(i + 1, self.ncols):
                if x[j]:
                    s -= row[j] * x[j]
            x[i] = s / row[i]
        return x
