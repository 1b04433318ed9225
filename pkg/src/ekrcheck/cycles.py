"""Cyclic row/column orders and their wrapped diagonal intervals.

A cyclic order is an equivalence class of permutation pairs under
independent cyclic shifts of positions in each coordinate.  The canonical
representative places value 1 at position 1 in both permutations, so there
are exactly (n-1)! * (m-1)! orders.  Walking both permutations in lockstep
from a start position, wrapping around, realizes an r-cell "diagonal
interval": rows and columns are consecutive in their cyclic orders, so the
cells form a valid placement whenever r <= min(n, m).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, NamedTuple

from .counts import cyclic_order_count, interval_occurrence_count
from .errors import InputError, ResourceLimitError
from .rook import Family, Placement, canonical_placement, row_projection

DEFAULT_ORDER_BUDGET = 10**6


@dataclass(frozen=True)
class CyclicOrder:
    """Canonical representative of one equivalence class.

    ``rows`` lists row labels by position (rows[0] is position 1), and
    likewise ``cols``; both must start with label 1.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_permutation(self.rows, "rows")
        _check_permutation(self.cols, "cols")
        if self.rows[0] != 1 or self.cols[0] != 1:
            raise InputError(
                "cyclic order is not canonical: both sequences must start with 1 "
                "(use canonical_order to rotate arbitrary permutation pairs)"
            )

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.cols)

    def to_json_dict(self) -> dict:
        return {"sigma1": list(self.rows), "sigma2": list(self.cols)}


def _check_permutation(values: tuple[int, ...], name: str) -> None:
    if not values or sorted(values) != list(range(1, len(values) + 1)):
        raise InputError(f"{name} must be a permutation of 1..{len(values)}, got {values!r}")


def canonical_order(rows: Iterable[int], cols: Iterable[int]) -> CyclicOrder:
    """Rotate a permutation pair so value 1 leads in each coordinate.

    Rotations act on positions only, so the result represents the same
    equivalence class; the map is idempotent on canonical pairs.
    """
    row_seq = tuple(rows)
    col_seq = tuple(cols)
    _check_permutation(row_seq, "rows")
    _check_permutation(col_seq, "cols")
    i = row_seq.index(1)
    j = col_seq.index(1)
    return CyclicOrder(row_seq[i:] + row_seq[:i], col_seq[j:] + col_seq[:j])


def enumerate_cyclic_orders(
    n: int,
    m: int,
    max_orders: int = DEFAULT_ORDER_BUDGET,
) -> list[CyclicOrder]:
    """All canonical cyclic orders in lexicographic (rows, cols) order."""
    if n < 1 or m < 1:
        raise InputError(f"grid dimensions must be at least 1, got ({n}, {m})")
    total = cyclic_order_count(n, m)
    if total > max_orders:
        raise ResourceLimitError(f"{total} cyclic orders exceed the budget of {max_orders}")
    out = []
    for row_rest in permutations(range(2, n + 1)):
        rows = (1,) + row_rest
        for col_rest in permutations(range(2, m + 1)):
            out.append(CyclicOrder(rows, (1,) + col_rest))
    return out


def diagonal_interval(order: CyclicOrder, i: int, j: int, r: int) -> Placement:
    """The r cells realized by walking both cycles from positions (i, j).

    Position arithmetic is 1-based and wraps n+1 -> 1 (and m+1 -> 1).  The
    result is always a valid placement: the r row positions are distinct
    modulo n when r <= n, and likewise for columns.
    """
    n, m = order.n, order.m
    if not 1 <= r <= min(n, m):
        raise InputError(f"r must be in 1..min(n,m)={min(n, m)}, got {r}")
    if not 1 <= i <= n:
        raise InputError(f"start position i out of range 1..{n}: {i}")
    if not 1 <= j <= m:
        raise InputError(f"start position j out of range 1..{m}: {j}")
    cells = tuple(
        (order.rows[(i - 1 + k) % n], order.cols[(j - 1 + k) % m]) for k in range(r)
    )
    return tuple(sorted(cells))


def all_intervals(order: CyclicOrder, r: int) -> list[Placement]:
    """Realized interval sets over all n*m start positions, deduplicated.

    For r <= min(n, m)/2 all starts realize distinct sets, and that is
    asserted; duplicates can only occur for exploratory larger r.
    """
    n, m = order.n, order.m
    seen: set[Placement] = set()
    out: list[Placement] = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cells = diagonal_interval(order, i, j, r)
            if cells not in seen:
                seen.add(cells)
                out.append(cells)
    if 2 * r <= min(n, m) and len(out) != n * m:
        raise RuntimeError(
            f"internal error: expected {n * m} distinct intervals at r={r}, got {len(out)}"
        )
    return out


def interval_start(order: CyclicOrder, placement: Placement) -> tuple[int, int] | None:
    """The start (i, j) whose interval realizes the placement, or None.

    Starts are scanned in (i, j) order; for r <= min(n, m)/2 the start is
    unique when it exists.
    """
    r = len(placement)
    target = canonical_placement(placement, order.n, order.m)
    for i in range(1, order.n + 1):
        for j in range(1, order.m + 1):
            if diagonal_interval(order, i, j, r) == target:
                return (i, j)
    return None


def restrict_to_order(family: Family, order: CyclicOrder) -> Family:
    """The subfamily of members realized as intervals of this order."""
    if family.n != order.n or family.m != order.m:
        raise InputError(
            f"family context ({family.n}, {family.m}) does not match the order "
            f"({order.n}, {order.m})"
        )
    realized = set(all_intervals(order, family.r))
    return Family(family.n, family.m, family.r, tuple(s for s in family.sets if s in realized))


def _interval_compatibility_masks(intervals: list[Placement]) -> list[int]:
    masks = [0] * len(intervals)
    cell_sets = [set(p) for p in intervals]
    for a, b in combinations(range(len(intervals)), 2):
        if cell_sets[a] & cell_sets[b]:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return masks


def _micro_max_clique(masks: list[int]) -> tuple[int, int]:
    """Exact maximum clique over a small vertex set; returns (size, mask).

    Deliberately self-contained (plain popcount-bounded branch search) so
    this module cross-validates the main search engine rather than reusing
    it.
    """
    best_size = 0
    best_mask = 0

    def expand(candidates: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        while candidates:
            if size + candidates.bit_count() <= best_size:
                return
            v = (candidates & -candidates).bit_length() - 1
            bit = 1 << v
            candidates &= ~bit
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = chosen | bit
            sub = candidates & masks[v]
            if sub:
                expand(sub, chosen | bit, size + 1)

    expand((1 << len(masks)) - 1, 0, 0)
    return best_size, best_mask


def _require_half_range(order: CyclicOrder, r: int) -> None:
    bound = min(order.n, order.m)
    if not (1 <= r and 2 * r <= bound):
        raise InputError(f"r must satisfy 1 <= r <= min(n,m)/2 = {bound / 2:g}, got {r}")


def max_intersecting_intervals(order: CyclicOrder, r: int) -> int:
    """Exact maximum size of an intersecting family drawn from this
    order's intervals.

    The r intervals through any fixed cell pairwise intersect, so the
    value is at least r; the cycle-method bound says it is at most r.
    """
    _require_half_range(order, r)
    size, _ = _micro_max_clique(_interval_compatibility_masks(all_intervals(order, r)))
    return size


def max_intersecting_intervals_witness(order: CyclicOrder, r: int) -> tuple[Placement, ...]:
    """A maximum intersecting family of intervals (one witness)."""
    _require_half_range(order, r)
    intervals = all_intervals(order, r)
    _, mask = _micro_max_clique(_interval_compatibility_masks(intervals))
    return tuple(sorted(intervals[v] for v in range(len(intervals)) if mask & (1 << v)))


def count_orders_containing(
    n: int,
    m: int,
    placement: Iterable[Iterable[int]],
    max_orders: int = DEFAULT_ORDER_BUDGET,
) -> int:
    """Number of canonical cyclic orders realizing the placement as an interval."""
    canon = canonical_placement(placement, n, m)
    if not 1 <= len(canon) <= min(n, m):
        raise InputError(f"placement size must be in 1..min(n,m)={min(n, m)}, got {len(canon)}")
    return sum(
        1
        for order in enumerate_cyclic_orders(n, m, max_orders)
        if interval_start(order, canon) is not None
    )


class DoubleCount(NamedTuple):
    """Both evaluations of the (member, order) incidence count."""

    lhs: int
    rhs: int


def interval_double_count(family: Family, max_orders: int = DEFAULT_ORDER_BUDGET) -> DoubleCount:
    """Count member/order interval incidences two ways.

    lhs sums the restriction size over every cyclic order; rhs multiplies
    the family size by the per-placement occurrence count.  The two agree
    for every family; for an intersecting family lhs is additionally at
    most r times the number of orders.
    """
    if not 1 <= family.r <= min(family.n, family.m):
        raise InputError(
            f"family r must be in 1..min(n,m)={min(family.n, family.m)}, got {family.r}"
        )
    lhs = sum(
        len(restrict_to_order(family, order))
        for order in enumerate_cyclic_orders(family.n, family.m, max_orders)
    )
    rhs = len(family) * interval_occurrence_count(family.n, family.m, family.r)
    return DoubleCount(lhs, rhs)


@dataclass(frozen=True)
class WindowReport:
    """Outcome of the interval window structure check around one base interval."""

    passed: bool
    order: CyclicOrder
    start: tuple[int, int]
    r: int
    failure: str | None = None
    witness: tuple[Placement, ...] | None = None


def check_interval_windows(order: CyclicOrder, start_i: int, start_j: int, r: int) -> WindowReport:
    """Verify the window structure of intervals meeting a base interval.

    With the base interval anchored at row position x = start_i, the 2(r-1)
    windows are the row sets of the r-1 forward shifts (positions x+off ..
    x+off+r-1) and the r-1 backward shifts (positions x+off-r .. x+off-1).
    Checked, over realized intervals only:

    (a) every interval meeting the base, other than the base itself, has a
        window as its row projection;
    (b) for each offset, intervals with the forward-window projection are
        disjoint from intervals with the backward-window projection;
    (c) two distinct intervals sharing a window projection are disjoint.

    r = 1 has no windows and passes vacuously.
    """
    _require_half_range(order, r)
    start = (start_i, start_j)
    base = diagonal_interval(order, start_i, start_j, r)
    if r == 1:
        return WindowReport(True, order, start, r)

    n = order.n
    x = start_i

    def rows_at(first: int) -> frozenset[int]:
        return frozenset(order.rows[(first - 1 + k) % n] for k in range(r))

    forward = [rows_at(x + off) for off in range(1, r)]
    backward = [rows_at(x + off - r) for off in range(1, r)]
    windows = set(forward) | set(backward)

    intervals = all_intervals(order, r)
    projections = {iv: row_projection(iv) for iv in intervals}
    base_cells = set(base)

    for iv in intervals:
        if iv == base:
            continue
        if base_cells & set(iv) and projections[iv] not in windows:
            return WindowReport(
                False, order, start, r,
                failure="interval meets the base but its row projection is not a window",
                witness=(base, iv),
            )

    by_projection: dict[frozenset[int], list[Placement]] = {}
    for iv in intervals:
        by_projection.setdefault(projections[iv], []).append(iv)

    for off in range(r - 1):
        for fwd in by_projection.get(forward[off], ()):
            for bwd in by_projection.get(backward[off], ()):
                if set(fwd) & set(bwd):
                    return WindowReport(
                        False, order, start, r,
                        failure=f"forward and backward window intervals overlap at offset {off + 1}",
                        witness=(fwd, bwd),
                    )

    for window in windows:
        group = by_projection.get(window, [])
        for a, b in combinations(group, 2):
            if set(a) & set(b):
                return WindowReport(
                    False, order, start, r,
                    failure="two distinct intervals with the same window projection overlap",
                    witness=(a, b),
                )

    return WindowReport(True, order, start, r)
