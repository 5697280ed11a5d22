"""The integral Pluecker coordinate ring of G(r, n).

Monomials are multisets of strictly increasing index rows, stored
lex-sorted; polynomials are sparse integer-linear combinations of
monomials, homogeneous in degree.  Evaluation realises p_tau as the
r x r minor on columns tau of an integer matrix, which gives the
determinant oracle every identity in this package is checked against.

Straightening into the standard-monomial basis is done by exact
evaluation-interpolation: enumerate the candidate standard basis of the
matching degree and content, evaluate everything at random points of
the cone over the target Schubert variety, solve the integer linear
system over QQ, and verify the result on held-out points.  Chained
exchange-relation rewriting is deliberately avoided; the two-row
exchange relation is still available as a relation generator.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from .lattice import IndexTuple
from .linalg import GaussSolver, det_int, rank_int
from .tableaux import enumerate_standard

Row = tuple[int, ...]
Monomial = tuple[Row, ...]  # rows in canonical (lex-sorted) order
Matrix = tuple[tuple[int, ...], ...]

GENERIC_ENTRY_BOUND = 5     # generic evaluation points have entries in [-5, 5]
TRIANGULAR_ENTRY_BOUND = 3  # strictly-upper entries of Borel factors in [-3, 3]
EXTRA_SAMPLES = 8           # sample count is basis size + this margin
MAX_RESEEDINGS = 3
HOLDOUT_POINTS = 8


class RankDeficientError(RuntimeError):
    """The interpolation sample failed to reach full column rank even
    after re-seeding; with verified inputs this signals a bug."""


class StraighteningError(RuntimeError):
    """Internal consistency check of the straightening engine failed."""


def normalize_index(values, n: int) -> tuple[int, Row | None]:
    """Sort an index list, tracking the sign of the permutation.

    Returns (0, None) when a value repeats; rejects out-of-range values.
    """
    vals = [int(v) for v in values]
    if any(v < 1 or v > n for v in vals):
        raise ValueError(f"values {vals} out of range 1..{n}")
    if len(set(vals)) != len(vals):
        return 0, None
    sign = 1
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if vals[i] > vals[j]:
                sign = -sign
    return sign, tuple(sorted(vals))


class PluckerPolynomial:
    """Sparse integer polynomial in the Pluecker coordinates of G(r, n)."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms=None):
        self.r = int(r)
        self.n = int(n)
        clean: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or [])
        degree = None
        for rows, coeff in items:
            coeff = int(coeff)
            if coeff == 0:
                continue
            rows = tuple(tuple(int(v) for v in row) for row in rows)
            for row in rows:
                if len(row) != self.r:
                    raise ValueError(f"row {row} has length {len(row)}, expected {self.r}")
                if any(v < 1 or v > self.n for v in row):
                    raise ValueError(f"row {row} out of range 1..{self.n}")
                if any(a >= b for a, b in zip(row, row[1:])):
                    raise ValueError(f"row {row} not strictly increasing")
            rows = tuple(sorted(rows))
            if degree is None:
                degree = len(rows)
            elif len(rows) != degree:
                raise ValueError("polynomial is not degree-homogeneous")
            clean[rows] = clean.get(rows, 0) + coeff
            if clean[rows] == 0:
                del clean[rows]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, r: int, n: int) -> "PluckerPolynomial":
        return cls(r, n, {})

    @classmethod
    def monomial(cls, rows, n: int, coeff: int = 1) -> "PluckerPolynomial":
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        r = len(rows[0]) if rows else 0
        return cls(r, n, {rows: coeff})

    @classmethod
    def scalar(cls, value: int, r: int, n: int) -> "PluckerPolynomial":
        return cls(r, n, {(): value})

    @classmethod
    def from_raw_rows(cls, rows, n: int, coeff: int = 1) -> "PluckerPolynomial":
        """Monomial from possibly unsorted rows, with sign normalisation.

        A row with a repeated index kills the whole monomial.
        """
        sign = 1
        norm: list[Row] = []
        width = None
        for row in rows:
            s, srt = normalize_index(row, n)
            if width is None:
                width = len(tuple(row))
            if s == 0:
                return cls.zero(width, n)
            sign *= s
            norm.append(srt)
        r = width if width is not None else 0
        return cls(r, n, {tuple(sorted(norm)): sign * coeff})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        for rows in self.terms:
            return len(rows)
        return None

    def coefficient(self, rows) -> int:
        key = tuple(sorted(tuple(int(v) for v in row) for row in rows))
        return self.terms.get(key, 0)

    def support(self) -> list[Monomial]:
        return sorted(self.terms)

    # -- ring structure -----------------------------------------------

    def _check_compatible(self, other: "PluckerPolynomial"):
        if self.r != other.r or self.n != other.n:
            raise ValueError("polynomials live on different Grassmannians")

    def __add__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        self._check_compatible(other)
        if not self.is_zero() and not other.is_zero() and self.degree != other.degree:
            raise ValueError("cannot add polynomials of different degrees")
        terms = dict(self.terms)
        for rows, c in other.terms.items():
            terms[rows] = terms.get(rows, 0) + c
            if terms[rows] == 0:
                del terms[rows]
        out = PluckerPolynomial.zero(self.r, self.n)
        out.terms = terms
        return out

    def __neg__(self) -> "PluckerPolynomial":
        out = PluckerPolynomial.zero(self.r, self.n)
        out.terms = {rows: -c for rows, c in self.terms.items()}
        return out

    def __sub__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "PluckerPolynomial":
        if isinstance(other, int):
            out = PluckerPolynomial.zero(self.r, self.n)
            if other != 0:
                out.terms = {rows: other * c for rows, c in self.terms.items()}
            return out
        self._check_compatible(other)
        terms: dict[Monomial, int] = {}
        for rows_a, ca in self.terms.items():
            for rows_b, cb in other.terms.items():
                rows = tuple(sorted(rows_a + rows_b))
                terms[rows] = terms.get(rows, 0) + ca * cb
                if terms[rows] == 0:
                    del terms[rows]
        out = PluckerPolynomial.zero(self.r, self.n)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PluckerPolynomial)
            and self.r == other.r
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.r, self.n, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for rows in sorted(self.terms):
            c = self.terms[rows]
            mono = "".join("p[" + ",".join(map(str, row)) + "]" for row in rows) or "1"
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 and rows else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{mono}")
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else joined


def monomial_content(rows: Monomial, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for row in rows:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def rows_are_standard(rows: Monomial, bound_values: Row | None = None) -> bool:
    """Chain condition on canonically sorted monomial rows.

    A multiset of rows admits a standard arrangement iff its lex-sorted
    arrangement is one, so this decides standardness of the monomial.
    """
    for a, b in zip(rows, rows[1:]):
        if any(x > y for x, y in zip(a, b)):
            return False
    if bound_values is not None and rows:
        if any(x > y for x, y in zip(rows[-1], bound_values)):
            return False
    return True


# -- relations ---------------------------------------------------------


def plucker_relation(i_set, j_set, r: int, n: int) -> PluckerPolynomial:
    """The quadratic exchange relation attached to index sets of sizes r-1 and r+1.

    sum_h (-1)^h p_{i_1..i_{r-1} j_h} p_{j_1.. ^j_h ..j_{r+1}}, with each
    first factor sign-normalised and repeated-index terms dropped.  The
    result vanishes identically on the matrix space.
    """
    i_vals = tuple(int(v) for v in i_set)
    j_vals = tuple(int(v) for v in j_set)
    if len(i_vals) != r - 1 or len(j_vals) != r + 1:
        raise ValueError(
            f"index sets must have sizes {r - 1} and {r + 1}, got {len(i_vals)} and {len(j_vals)}"
        )
    for vals in (i_vals, j_vals):
        if any(v < 1 or v > n for v in vals):
            raise ValueError(f"values {vals} out of range 1..{n}")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"values {vals} not strictly increasing")
    terms: dict[Monomial, int] = {}
    for h, jh in enumerate(j_vals, start=1):
        sign_h = -1 if h % 2 else 1
        s, first = normalize_index(i_vals + (jh,), n)
        if s == 0:
            continue
        second = j_vals[:h - 1] + j_vals[h:]
        rows = tuple(sorted((first, second)))
        terms[rows] = terms.get(rows, 0) + sign_h * s
    return PluckerPolynomial(r, n, terms)


def two_row_exchange(sigma: IndexTuple, tau: IndexTuple, t: int) -> PluckerPolynomial:
    """Exchange relation for a chain violation of sigma <= tau at position t.

    Takes i_set = sigma without its t-th entry and j_set = tau with
    sigma_t inserted; the resulting relation contains +-p_sigma p_tau.
    """
    if sigma.r != tau.r or sigma.n != tau.n:
        raise ValueError("rows live on different Grassmannians")
    r, n = sigma.r, sigma.n
    if not 1 <= t <= r:
        raise ValueError(f"position {t} out of range 1..{r}")
    if sigma.values[t - 1] <= tau.values[t - 1]:
        raise ValueError(f"no chain violation at position {t}")
    moved = sigma.values[t - 1]
    if moved in tau.values:
        raise ValueError(f"value {moved} already occurs in {tau}; no exchange relation")
    i_set = sigma.values[:t - 1] + sigma.values[t:]
    j_set = tuple(sorted(tau.values + (moved,)))
    return plucker_relation(i_set, j_set, r, n)


# -- evaluation oracle -------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _minor(matrix: Matrix, cols: Row) -> int:
    sub = [[matrix[i][c - 1] for c in cols] for i in range(len(cols))]
    return det_int(sub)


def monomial_value(rows: Monomial, matrix: Matrix) -> int:
    value = 1
    for row in rows:
        value *= _minor(matrix, row)
        if value == 0:
            return 0
    return value


def evaluate(f: PluckerPolynomial, matrix) -> int:
    """Exact value of f at an integer r x n matrix."""
    matrix = tuple(tuple(int(v) for v in row) for row in matrix)
    if len(matrix) != f.r or any(len(row) != f.n for row in matrix):
        raise ValueError(f"matrix is not {f.r} x {f.n}")
    return sum(c * monomial_value(rows, matrix) for rows, c in f.terms.items())


def restrict(f: PluckerPolynomial, w: IndexTuple) -> PluckerPolynomial:
    """Drop every term containing a row not below w; the restriction to X(w)."""
    if w.r != f.r or w.n != f.n:
        raise ValueError("Schubert representative does not match the Grassmannian")
    bound = w.values
    terms = {
        rows: c
        for rows, c in f.terms.items()
        if all(all(x <= y for x, y in zip(row, bound)) for row in rows)
    }
    out = PluckerPolynomial.zero(f.r, f.n)
    out.terms = terms
    return out


# -- random points -----------------------------------------------------


def random_schubert_point(w: IndexTuple, seed) -> Matrix:
    """An integer r x n matrix whose row space lies in X(w).

    Rows are b.e_{w(i)} for a random unit upper-triangular integer b, so
    every minor p_tau with tau not below w vanishes.  Deterministic in
    the seed.
    """
    rng = random.Random(f"schubert:{w.n}:{','.join(map(str, w.values))}:{seed}")
    n = w.n
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = 1
        for j in range(i + 1, n):
            b[i][j] = rng.randint(-TRIANGULAR_ENTRY_BOUND, TRIANGULAR_ENTRY_BOUND)
    return tuple(tuple(b[l][c - 1] for l in range(n)) for c in w.values)


def random_point(r: int, n: int, seed) -> Matrix:
    """A random full-rank integer r x n matrix with entries in [-5, 5]."""
    rng = random.Random(f"generic:{r}:{n}:{seed}")
    for _ in range(64):
        m = tuple(
            tuple(rng.randint(-GENERIC_ENTRY_BOUND, GENERIC_ENTRY_BOUND) for _ in range(n))
            for _ in range(r)
        )
        if rank_int(m) == r:
            return m
    raise RuntimeError("failed to sample a full-rank matrix")  # pragma: no cover


# -- straightening -----------------------------------------------------


@dataclass(frozen=True)
class _Cell:
    basis: tuple[Monomial, ...]
    points: tuple[Matrix, ...]
    solver: GaussSolver | None


def _sample_points(count: int, r: int, n: int, bound: IndexTuple | None, tag: str):
    if bound is not None:
        return tuple(random_schubert_point(bound, f"{tag}:{idx}") for idx in range(count))
    return tuple(random_point(r, n, f"{tag}:{idx}") for idx in range(count))


@lru_cache(maxsize=256)
def _interpolation_cell(
    r: int,
    n: int,
    degree: int,
    content: tuple[int, ...],
    bound: IndexTuple | None,
    seed_tag: str,
) -> _Cell:
    basis = tuple(
        t.row_values()
        for t in enumerate_standard(degree, r, n, bound=bound, content=content)
    )
    count = len(basis) + EXTRA_SAMPLES
    points = _sample_points(count, r, n, bound, seed_tag)
    solver = None
    if basis:
        matrix = [[monomial_value(b, m) for b in basis] for m in points]
        candidate = GaussSolver(matrix)
        solver = candidate if candidate.ok else None
    return _Cell(basis=basis, points=points, solver=solver)


def _straighten_component(
    comp: PluckerPolynomial, cont: tuple[int, ...], bound: IndexTuple | None, seed
) -> PluckerPolynomial:
    r, n, degree = comp.r, comp.n, comp.degree
    for attempt in range(MAX_RESEEDINGS + 1):
        tag = f"{seed}:cell:{attempt}"
        cell = _interpolation_cell(r, n, degree, cont, bound, tag)
        rhs = [evaluate(comp, m) for m in cell.points]
        if not cell.basis:
            if any(rhs):
                raise StraighteningError(
                    "nonzero component with empty standard basis; invalid input or bug"
                )
            return PluckerPolynomial.zero(r, n)
        if cell.solver is None:
            continue
        coeffs = cell.solver.solve(rhs)
        if coeffs is None:
            continue
        if any(c.denominator != 1 for c in coeffs):
            raise StraighteningError("non-integral straightening coefficients; bug")
        g = PluckerPolynomial(
            r, n, {b: int(c) for b, c in zip(cell.basis, coeffs) if c}
        )
        holdout = _sample_points(
            HOLDOUT_POINTS, r, n, bound, f"{seed}:verify:{attempt}"
        )
        if all(evaluate(g, m) == evaluate(comp, m) for m in holdout):
            return g
    raise RankDeficientError(
        f"interpolation failed after {MAX_RESEEDINGS} re-seedings in the "
        f"(degree={degree}, content={cont}) cell"
    )


def straighten(
    f: PluckerPolynomial, bound: IndexTuple | None = None, seed=0
) -> PluckerPolynomial:
    """Expand f in the standard monomial basis (of X(bound), when given).

    The output agrees with f as a function on the cone over the target
    variety; it is supported on standard monomials only.  Polynomials
    supported on several torus weights are straightened one weight cell
    at a time.
    """
    if bound is not None:
        f = restrict(f, bound)
    if f.is_zero():
        return f
    bvals = bound.values if bound is not None else None
    if all(rows_are_standard(rows, bvals) for rows in f.terms):
        return f
    by_content: dict[tuple[int, ...], dict[Monomial, int]] = {}
    for rows, c in f.terms.items():
        by_content.setdefault(monomial_content(rows, f.n), {})[rows] = c
    result = PluckerPolynomial.zero(f.r, f.n)
    for cont in sorted(by_content):
        comp = PluckerPolynomial.zero(f.r, f.n)
        comp.terms = by_content[cont]
        result = result + _straighten_component(comp, cont, bound, seed)
    return result
