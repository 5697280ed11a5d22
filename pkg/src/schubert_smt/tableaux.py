"""Rectangular Young tableaux made of Pluecker index rows.

A tableau is a sequence of rows of equal length; each row is a strictly
increasing tuple.  Standardness is the row-chain condition (successive
rows weakly increase componentwise, optionally bounded by a Schubert
representative), which for rectangular shapes is equivalent to the
usual strict-rows / weak-columns filling condition.
"""

from dataclasses import dataclass

from .lattice import IndexTuple, WeightVector, leq_componentwise


@dataclass(frozen=True)
class Tableau:
    """Row list of IndexTuples, all sharing the same (r, n)."""

    rows: tuple[IndexTuple, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("tableau needs at least one row")
        r, n = rows[0].r, rows[0].n
        for row in rows[1:]:
            if row.r != r or row.n != n:
                raise ValueError("rows are not homogeneous in (r, n)")

    @property
    def r(self) -> int:
        return self.rows[0].r

    @property
    def n(self) -> int:
        return self.rows[0].n

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.r)

    def row_values(self) -> tuple[tuple[int, ...], ...]:
        return tuple(row.values for row in self.rows)

    def __str__(self):
        return "[" + " | ".join(",".join(map(str, row.values)) for row in self.rows) + "]"


def make_tableau(rows) -> Tableau:
    """Build a tableau from IndexTuple rows; standardness is not required."""
    return Tableau(tuple(rows))


def is_standard(t: Tableau, bound: IndexTuple | None = None) -> bool:
    """Row chain tau_1 <= tau_2 <= ... <= tau_m (<= bound when given)."""
    if bound is not None and (bound.r != t.r or bound.n != t.n):
        raise ValueError(f"bound {bound} does not match tableau shape ({t.r},{t.n})")
    for a, b in zip(t.rows, t.rows[1:]):
        if not leq_componentwise(a, b):
            return False
    if bound is not None:
        return leq_componentwise(t.rows[-1], bound)
    return True


def content(t: Tableau) -> tuple[int, ...]:
    """counts[v-1] = number of boxes containing v, for v in 1..n."""
    counts = [0] * t.n
    for row in t.rows:
        for v in row.values:
            counts[v - 1] += 1
    return tuple(counts)


def is_torus_invariant(t: Tableau) -> bool:
    """All of 1..n occur equally often, i.e. the content is constant."""
    c = content(t)
    return c[0] >= 1 and all(x == c[0] for x in c)


def tableau_weight(t: Tableau) -> WeightVector:
    """The torus character of the associated monomial: the content vector."""
    return content(t)


def enumerate_standard(
    shape_rows: int,
    r: int,
    n: int,
    bound: IndexTuple | None = None,
    content: tuple[int, ...] | None = None,
) -> list[Tableau]:
    """All standard tableaux with shape_rows rows of length r over 1..n.

    Optionally bounded above by `bound` and/or constrained to an exact
    content vector.  Output is in lexicographic order on the flattened
    row sequence, which downstream code uses as the canonical basis
    order.  Backtracks row by row in chain order, pruning on remaining
    per-value capacity.
    """
    if shape_rows < 1:
        raise ValueError("need at least one row")
    if not 1 <= r <= n:
        raise ValueError(f"row length {r} out of range for n={n}")
    if bound is not None and (bound.r != r or bound.n != n):
        raise ValueError("bound shape does not match (r, n)")
    target = None
    if content is not None:
        target = tuple(int(c) for c in content)
        if len(target) != n:
            raise ValueError(f"content has length {len(target)}, expected {n}")
        if any(c < 0 for c in target):
            raise ValueError("content entries must be nonnegative")
        if sum(target) != shape_rows * r:
            raise ValueError(
                f"content sums to {sum(target)}, shape holds {shape_rows * r} boxes"
            )

    bound_vals = bound.values if bound is not None else tuple(range(n - r + 1, n + 1))
    used = [0] * (n + 1)
    results: list[tuple[tuple[int, ...], ...]] = []
    rows_acc: list[tuple[int, ...]] = []

    def feasible(prev: tuple[int, ...], rows_left: int) -> bool:
        if target is None:
            return True
        for v in range(1, n + 1):
            need = target[v - 1] - used[v]
            if need > rows_left:
                return False
            if need > 0 and not any(
                prev[i] <= v <= bound_vals[i] for i in range(r)
            ):
                return False
        return True

    def candidate_rows(prev: tuple[int, ...]):
        row = [0] * r

        def place(pos: int, min_val: int):
            if pos == r:
                yield tuple(row)
                return
            lo = max(min_val, prev[pos])
            for v in range(lo, bound_vals[pos] + 1):
                if target is not None and used[v] >= target[v - 1]:
                    continue
                row[pos] = v
                yield from place(pos + 1, v + 1)

        yield from place(0, 1)

    def recurse(prev: tuple[int, ...], rows_left: int):
        if rows_left == 0:
            results.append(tuple(rows_acc))
            return
        for row in candidate_rows(prev):
            for v in row:
                used[v] += 1
            rows_acc.append(row)
            if feasible(row, rows_left - 1):
                recurse(row, rows_left - 1)
            rows_acc.pop()
            for v in row:
                used[v] -= 1

    start = (0,) * r
    if feasible(start, shape_rows):
        recurse(start, shape_rows)
    return [
        Tableau(tuple(IndexTuple(vals, n) for vals in rows)) for rows in results
    ]
