"""Roman (k,k)-dominating families and exact domatic numbers.

A family is an ordered set of pairwise-distinct RkDFs whose labels sum to
at most 2k at every vertex; d_R^k is the largest family size.  d_k is the
largest number of blocks in a partition of V into k-dominating sets.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, GuardError, complete_bipartite_parts
from .roman import (Labeling, SolveResult, Violation, enumerate_rkdfs,
                    gamma_kr_exact, is_k_dominating, labeling_from_string,
                    labeling_to_string, validate_rkdf)

DEFAULT_DRK_N_LIMIT = 8
DEFAULT_DRK_K_LIMIT = 4
DEFAULT_DRK_ORACLE_N_LIMIT = 6
DEFAULT_DRK_ORACLE_K_LIMIT = 3
DEFAULT_DK_LIMIT = 10

VertexPartition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Family:
    """Ordered family of labelings targeting parameter k."""

    members: tuple[Labeling, ...]
    k: int

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _members_of(fam: Family | Sequence[Labeling]) -> tuple[Labeling, ...]:
    if isinstance(fam, Family):
        return fam.members
    return tuple(tuple(f) for f in fam)


def family_to_lines(fam: Family | Sequence[Labeling]) -> str:
    """Serialize a family as one digit-string line per member."""
    return "\n".join(labeling_to_string(f) for f in _members_of(fam)) + "\n"


def family_from_lines(text: str, k: int) -> Family:
    """Parse the one-labeling-per-line serialization back into a Family."""
    members = tuple(labeling_from_string(line.strip())
                    for line in text.splitlines() if line.strip())
    if not members:
        raise ValueError("no labelings found")
    if len({len(f) for f in members}) != 1:
        raise ValueError("labelings have mixed lengths")
    return Family(members, k)


def validate_family(g: Graph, k: int,
                    fam: Family | Sequence[Labeling]) -> list[Violation]:
    """Check the three family invariants; empty result means valid.

    Member-level structural or RkDF failures are reported with the member
    index.  Structural failures abort the duplicate and capacity checks.
    """
    members = _members_of(fam)
    violations: list[Violation] = []
    structural = False
    for i, f in enumerate(members):
        for v in validate_rkdf(g, k, f):
            violations.append(Violation(v.kind, vertex=v.vertex, member=i,
                                        detail=f"member {i}: {v.detail}"))
            if v.kind in ("length-mismatch", "value-out-of-range"):
                structural = True
    if structural:
        return violations

    seen: dict[Labeling, int] = {}
    for i, f in enumerate(members):
        if f in seen:
            violations.append(Violation(
                "duplicate-function", member=i,
                detail=f"member {i} duplicates member {seen[f]}"))
        else:
            seen[f] = i

    for v in range(g.n):
        total = sum(f[v] for f in members)
        if total > 2 * k:
            violations.append(Violation(
                "capacity-exceeded", vertex=v,
                detail=f"vertex {v} sums to {total}, capacity is {2 * k}"))
    return violations


# ---------------------------------------------------------------------------
# d_R^k: exact packing solver plus a brute-force oracle
# ---------------------------------------------------------------------------

# Residual capacities are packed five bits per vertex so that "candidate
# fits" and "subtract candidate" are two integer operations: with the top
# bit H of every field set, (rescap | H) - cand keeps each H bit exactly
# when that field does not underflow (fields stay below 16, so borrows
# never cross).  Pure representation change; search order is unaffected.
_FIELD_BITS = 5


def _pack(values) -> int:
    packed = 0
    for i, v in enumerate(values):
        packed |= v << (_FIELD_BITS * i)
    return packed


def _high_mask(n: int) -> int:
    return sum(1 << (_FIELD_BITS * i + _FIELD_BITS - 1) for i in range(n))


def d_rk_oracle(g: Graph, k: int,
                max_n: int = DEFAULT_DRK_ORACLE_N_LIMIT,
                max_k: int = DEFAULT_DRK_ORACLE_K_LIMIT) -> int:
    """Maximum family size by exhaustive subset search.

    Enumerates every valid RkDF, then walks all subsets depth-first in
    lexicographic order with per-vertex residual capacity 2k as the only
    pruning.  Independent check for d_rk_exact.
    """
    if g.n > max_n or k > max_k:
        raise GuardError(f"d_rk oracle guards are n <= {max_n}, k <= {max_k}; "
                         f"got n={g.n}, k={k}")
    pool = [_pack(f) for f in enumerate_rkdfs(g, k).labelings]
    high = _high_mask(g.n)
    npool = len(pool)
    best = 0

    def rec(start: int, rescap: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        base = rescap | high
        for i in range(start, npool):
            left = base - pool[i]
            if left & high == high:
                rec(i + 1, left ^ high, count + 1)

    rec(0, _pack([2 * k] * g.n), 0)
    return best


def _seed_value(g: Graph, k: int) -> int:
    """Largest family size guaranteed by the explicit constructions.

    Sound lower bound used to start the branch-and-bound; every case below
    corresponds to a family the constructions module can materialize.
    """
    n = g.n
    best = 1  # any single RkDF, e.g. the all-1 labeling
    if k >= 2:
        best = max(best, 2)                     # the two constant labelings
        if n >= 2:
            best = max(best, 3)                 # one distinguished vertex
        if n >= 2 * k - 2:
            best = max(best, 2 * k - 1)         # near-order family
    if k >= 2 ** n:
        best = max(best, 2 ** n)                # all of {1,2}^n
    if g.is_complete() and n >= 2 * k:
        best = max(best, n)                     # cyclic blocks of k twos
    parts = complete_bipartite_parts(g)
    if parts is not None:
        p, q = parts
        if p == q and p % k == 0 and p // k >= 3:
            best = max(best, p)                 # paired cyclic blocks
    return best


def d_rk_exact(g: Graph, k: int,
               max_n: int = DEFAULT_DRK_N_LIMIT,
               max_k: int = DEFAULT_DRK_K_LIMIT) -> SolveResult:
    """Exact Roman (k,k)-domatic number with an optimal Family witness.

    The candidate pool is every valid RkDF, sorted by (weight, values);
    the search branches on inclusion with per-vertex residual capacities.
    Depth is cut by the proven upper bounds min-degree+2k,
    max(Delta,k-1)+k and 2kn/gamma_kR, by construction-seeded lower
    bounds, and by the remaining-capacity/weight quotient.  The witness is
    the first optimal family in the include-first search order.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n > max_n or k > max_k:
        raise GuardError(f"d_rk solver guards are n <= {max_n}, k <= {max_k}; "
                         f"got n={n}, k={k}")
    start = time.perf_counter()

    pool = enumerate_rkdfs(g, k, max_n=max(max_n, 10),
                           max_n_restricted=max(max_n, 20)).labelings
    cands = sorted(pool, key=lambda f: (sum(f), f))
    packed = [_pack(f) for f in cands]
    weights = [sum(c) for c in cands]
    high = _high_mask(n)
    npool = len(cands)

    gkr = gamma_kr_exact(g, k, max_n=max(max_n, 16)).value
    delta, Delta = g.min_degree(), g.max_degree()
    ub = min(delta + 2 * k,
             max(Delta, k - 1) + k,
             (2 * k * n) // gkr,
             npool)

    nodes = 0
    best = _seed_value(g, k)
    assert best <= ub, "construction seed above proven upper bound"

    # Phase 1: exact value.  Branches that cannot strictly beat the
    # incumbent are cut; reaching the upper bound ends the search.
    def search_value(idx: int, rescap: int, count: int,
                     captotal: int) -> bool:
        nonlocal best, nodes
        nodes += 1
        if count > best:
            best = count
            if best == ub:
                return True
        base = rescap | high
        for i in range(idx, npool):
            if count + (npool - i) <= best:
                break
            if count + captotal // weights[i] <= best:
                break
            left = base - packed[i]
            if left & high != high:
                continue
            if search_value(i + 1, left ^ high, count + 1,
                            captotal - weights[i]):
                return True
        return False

    if best < ub:
        search_value(0, _pack([2 * k] * n), 0, 2 * k * n)
    target = best

    # Phase 2: recover the first family of optimal size in search order.
    chosen: list[int] = []
    found: list[Labeling] | None = None

    def recover(idx: int, rescap: int, count: int, captotal: int) -> bool:
        nonlocal nodes, found
        nodes += 1
        if count == target:
            found = [cands[i] for i in chosen]
            return True
        base = rescap | high
        for i in range(idx, npool):
            if count + (npool - i) < target:
                break
            if count + captotal // weights[i] < target:
                break
            left = base - packed[i]
            if left & high != high:
                continue
            chosen.append(i)
            if recover(i + 1, left ^ high, count + 1,
                       captotal - weights[i]):
                return True
            chosen.pop()
        return False

    recover(0, _pack([2 * k] * n), 0, 2 * k * n)
    assert found is not None
    witness = Family(tuple(found), k)
    return SolveResult("d_rk", target, witness, nodes,
                       time.perf_counter() - start)


# ---------------------------------------------------------------------------
# d_k: partition into k-dominating sets
# ---------------------------------------------------------------------------

def d_k_exact(g: Graph, k: int, max_n: int = DEFAULT_DK_LIMIT) -> SolveResult:
    """Exact k-domatic number with a VertexPartition witness.

    V itself is always k-dominating (nothing lies outside it), so the
    value is at least 1.  A vertex in one block needs k neighbors in every
    other block, giving the ceiling d <= min-degree//k + 1; block counts
    are tried downward from there over canonical block assignments.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n > max_n:
        raise GuardError(f"d_k solver guard is n <= {max_n}, got {n}")
    start = time.perf_counter()
    adj = g.adj

    ub = min(n, g.min_degree() // k + 1)
    nodes = 0

    def try_partition(d: int) -> list[list[int]] | None:
        """First partition of V into exactly d k-dominating sets, in
        canonical restricted-growth order, or None."""
        nonlocal nodes
        color = [-1] * n
        cnt = [[0] * d for _ in range(n)]  # cnt[v][c] = |N(v) & block c|

        def feasible(v: int, unassigned: int) -> bool:
            headroom = (adj[v] & unassigned).bit_count()
            short = 0
            row = cnt[v]
            cv = color[v]
            for c in range(d):
                if c != cv and row[c] < k:
                    short += k - row[c]
                    if short > headroom:
                        return False
            return True

        def rec(pos: int, used: int, unassigned: int) -> bool:
            nonlocal nodes
            nodes += 1
            if used + (n - pos) < d:
                return False
            if pos == n:
                return used == d
            rest = unassigned & ~(1 << pos)
            limit = min(used + 1, d)
            for c in range(limit):
                color[pos] = c
                row = adj[pos]
                v = row
                while v:
                    low = v & -v
                    cnt[low.bit_length() - 1][c] += 1
                    v ^= low
                ok = feasible(pos, rest)
                if ok:
                    v = row & ~rest
                    while v:
                        low = v & -v
                        u = low.bit_length() - 1
                        if u < pos and not feasible(u, rest):
                            ok = False
                            break
                        v ^= low
                if ok and rec(pos + 1, max(used, c + 1), rest):
                    return True
                v = row
                while v:
                    low = v & -v
                    cnt[low.bit_length() - 1][c] -= 1
                    v ^= low
            color[pos] = -1
            return False

        if rec(0, 0, (1 << n) - 1):
            blocks: list[list[int]] = [[] for _ in range(d)]
            for v in range(n):
                blocks[color[v]].append(v)
            return blocks
        return None

    for d in range(ub, 1, -1):
        blocks = try_partition(d)
        if blocks is not None:
            witness: VertexPartition = tuple(tuple(b) for b in blocks)
            return SolveResult("d_k", d, witness, nodes,
                               time.perf_counter() - start)
    witness = (tuple(range(n)),)
    return SolveResult("d_k", 1, witness, nodes,
                       time.perf_counter() - start)


def validate_partition(g: Graph, k: int,
                       blocks: Iterable[Iterable[int]]) -> list[Violation]:
    """Check that blocks partition V and each block k-dominates."""
    violations = []
    seen = 0
    blocks = [tuple(b) for b in blocks]
    for i, block in enumerate(blocks):
        bmask = 0
        for v in block:
            bmask |= 1 << v
        if bmask & seen:
            violations.append(Violation("capacity-exceeded", member=i,
                                        detail=f"block {i} overlaps earlier blocks"))
        seen |= bmask
        if not is_k_dominating(g, k, block):
            violations.append(Violation("zero-vertex-undercovered", member=i,
                                        detail=f"block {i} is not {k}-dominating"))
    if seen != (1 << g.n) - 1:
        violations.append(Violation("length-mismatch",
                                    detail="blocks do not cover every vertex"))
    return violations
