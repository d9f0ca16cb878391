"""Roman k-dominating functions: validation and exact minimization.

A labeling assigns each vertex a value in {0,1,2}; it is a valid Roman
k-dominating function (RkDF) when every 0-labeled vertex has at least k
neighbors labeled 2.  Labelings are plain tuples of ints throughout.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, NamedTuple

from .graphs import Graph, GuardError

Labeling = tuple[int, ...]

DEFAULT_GAMMA_KR_LIMIT = 16
DEFAULT_GAMMA_K_LIMIT = 20
DEFAULT_ORACLE_LIMIT = 10
DEFAULT_ENUM_LIMIT = 10
DEFAULT_ENUM_RESTRICTED_LIMIT = 20

_INF = float("inf")


@dataclass(frozen=True)
class Violation:
    """One validation failure; the emitted list is exhaustive per check."""

    kind: str
    vertex: int | None = None
    member: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class SolveResult:
    """Exact value of one quantity plus an optimality witness.

    quantity is one of "gamma_k", "gamma_kr", "d_k", "d_rk".  The witness
    certifies the value: it passes the matching validator and its
    weight/size equals the value.
    """

    quantity: str
    value: int
    witness: Any
    nodes_explored: int
    elapsed: float


def weight(f: Iterable[int]) -> int:
    """Weight of a labeling: |V_1| + 2|V_2|, i.e. the sum of its values."""
    return sum(f)


def labeling_to_string(f: Labeling) -> str:
    """Serialize a labeling as a digit string, e.g. (2,0,0,2,0) -> "20020"."""
    return "".join(str(x) for x in f)


def labeling_from_string(s: str) -> Labeling:
    """Parse a digit string over {0,1,2} into a labeling."""
    if not s or any(c not in "012" for c in s):
        raise ValueError(f"labeling string must be nonempty digits 0/1/2, got {s!r}")
    return tuple(int(c) for c in s)


def validate_rkdf(g: Graph, k: int, f: Labeling) -> list[Violation]:
    """Check f against the RkDF condition; empty result means valid.

    Structural problems (wrong length, value outside {0,1,2}) abort the
    semantic check, mirroring how an index fault would otherwise occur.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(f) != g.n:
        return [Violation("length-mismatch",
                          detail=f"labeling has {len(f)} entries, graph has {g.n}")]
    out_of_range = [Violation("value-out-of-range", vertex=v,
                              detail=f"value {f[v]} at vertex {v}")
                    for v in range(g.n) if f[v] not in (0, 1, 2)]
    if out_of_range:
        return out_of_range
    v2mask = 0
    for v in range(g.n):
        if f[v] == 2:
            v2mask |= 1 << v
    violations = []
    for v in range(g.n):
        if f[v] == 0:
            have = (g.adj[v] & v2mask).bit_count()
            if have < k:
                violations.append(Violation(
                    "zero-vertex-undercovered", vertex=v,
                    detail=f"vertex {v} labeled 0 has {have} neighbors "
                           f"labeled 2, needs {k}"))
    return violations


def is_k_dominating(g: Graph, k: int, members: Iterable[int]) -> bool:
    """True iff every vertex outside the set has >= k neighbors inside it."""
    smask = 0
    for v in members:
        smask |= 1 << v
    for v in range(g.n):
        if not smask >> v & 1 and (g.adj[v] & smask).bit_count() < k:
            return False
    return True


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

class EnumerationResult(NamedTuple):
    labelings: list[Labeling]
    truncated: bool


def enumerate_rkdfs(g: Graph, k: int, cap: int | None = None,
                    max_n: int = DEFAULT_ENUM_LIMIT,
                    max_n_restricted: int = DEFAULT_ENUM_RESTRICTED_LIMIT,
                    ) -> EnumerationResult:
    """All distinct valid RkDFs in lexicographic order of value sequences.

    When k exceeds the maximum degree no vertex can be labeled 0, so the
    valid labelings are exactly {1,2}^n and the enumeration switches to
    that restricted space (larger guard applies).  A cap stops the listing
    early and sets the truncated flag.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if k > g.max_degree():
        if n > max_n_restricted:
            raise GuardError(f"restricted enumeration guard is n <= "
                             f"{max_n_restricted}, got {n}")
        out: list[Labeling] = []
        for values in product((1, 2), repeat=n):
            if cap is not None and len(out) >= cap:
                return EnumerationResult(out, True)
            out.append(values)
        return EnumerationResult(out, False)

    if n > max_n:
        raise GuardError(f"enumeration guard is n <= {max_n}, got {n}")

    adj = g.adj
    values = [0] * n
    count2 = [0] * n
    out = []
    truncated = False

    def feasible_zero(v: int, unassigned: int) -> bool:
        return count2[v] + (adj[v] & unassigned).bit_count() >= k

    def rec(pos: int, unassigned: int) -> bool:
        nonlocal truncated
        if pos == n:
            if cap is not None and len(out) >= cap:
                truncated = True
                return False
            out.append(tuple(values))
            return True
        rest = unassigned & ~(1 << pos)
        for val in (0, 1, 2):
            values[pos] = val
            if val == 2:
                row = adj[pos]
                v = row
                while v:
                    low = v & -v
                    count2[low.bit_length() - 1] += 1
                    v ^= low
                ok = True
            else:
                # Zero-labeled assigned vertices adjacent to pos lose one
                # potential 2-neighbor; recheck their coverage headroom.
                ok = True
                row = adj[pos] & ~rest
                v = row
                while v:
                    low = v & -v
                    u = low.bit_length() - 1
                    if u < pos and values[u] == 0 and not feasible_zero(u, rest):
                        ok = False
                        break
                    v ^= low
                if ok and val == 0:
                    ok = feasible_zero(pos, rest)
            if ok and not rec(pos + 1, rest):
                if val == 2:
                    _dec_count2(adj[pos], count2)
                return False
            if val == 2:
                _dec_count2(adj[pos], count2)
        return True

    rec(0, (1 << n) - 1)
    return EnumerationResult(out, truncated)


def _dec_count2(row: int, count2: list[int]) -> None:
    v = row
    while v:
        low = v & -v
        count2[low.bit_length() - 1] -= 1
        v ^= low


# ---------------------------------------------------------------------------
# gamma_kR: exact branch and bound plus a brute-force oracle
# ---------------------------------------------------------------------------

def gamma_kr_oracle(g: Graph, k: int, max_n: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Minimum RkDF weight by exhausting all 3^n labelings.

    Deliberately naive: the only work beyond enumeration order is the
    validity filter.  Serves as the independent check for gamma_kr_exact.
    """
    if g.n > max_n:
        raise GuardError(f"oracle guard is n <= {max_n}, got {g.n}")
    best = None
    for values in product((0, 1, 2), repeat=g.n):
        if not validate_rkdf(g, k, values):
            w = sum(values)
            if best is None or w < best:
                best = w
    assert best is not None  # the all-1 labeling is always valid
    return best


def gamma_kr_exact(g: Graph, k: int,
                   max_n: int = DEFAULT_GAMMA_KR_LIMIT) -> SolveResult:
    """Exact Roman k-domination number with a minimum-weight witness.

    Branch and bound over labelings: vertices are assigned in index order,
    values tried 0,1,2, and a branch is cut when its weight plus a
    covering-deficiency lower bound cannot beat the incumbent.  The
    returned witness is the lexicographically least optimal labeling
    (first optimum reached in this order).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n > max_n:
        raise GuardError(f"gamma_kr solver guard is n <= {max_n}, got {n}")
    start = time.perf_counter()
    adj = g.adj

    values = [0] * n
    count2 = [0] * n
    best = n + 1          # all-1 labeling guarantees a solution of weight n
    witness: Labeling | None = None
    nodes = 0

    def extra_weight_bound(pos: int, unassigned: int) -> float:
        """Lower bound on weight still to be added for assigned zeros."""
        deficient = []
        dmask = 0
        for v in range(pos):
            if values[v] == 0 and count2[v] < k:
                need = k - count2[v]
                if (adj[v] & unassigned).bit_count() < need:
                    return _INF
                deficient.append(need)
                dmask |= 1 << v
        if not deficient:
            return 0
        maxcover = 0
        rest = unassigned
        while rest:
            low = rest & -rest
            c = (adj[low.bit_length() - 1] & dmask).bit_count()
            if c > maxcover:
                maxcover = c
            rest ^= low
        if maxcover == 0:
            return _INF
        total = sum(deficient)
        need2 = max(max(deficient), -(-total // maxcover))
        return 2 * need2

    def rec(pos: int, unassigned: int, wt: int) -> None:
        nonlocal best, witness, nodes
        nodes += 1
        if pos == n:
            for v in range(n):
                if values[v] == 0 and count2[v] < k:
                    return
            if wt < best:
                best = wt
                witness = tuple(values)
            return
        rest = unassigned & ~(1 << pos)
        for val in (0, 1, 2):
            new_wt = wt + val
            if new_wt >= best:
                break  # values are tried in increasing order
            values[pos] = val
            if val == 2:
                row = adj[pos]
                v = row
                while v:
                    low = v & -v
                    count2[low.bit_length() - 1] += 1
                    v ^= low
            bound = extra_weight_bound(pos + 1, rest)
            if new_wt + bound < best:
                rec(pos + 1, rest, new_wt)
            if val == 2:
                _dec_count2(adj[pos], count2)

    rec(0, (1 << n) - 1, 0)
    assert witness is not None
    return SolveResult("gamma_kr", best, witness, nodes,
                       time.perf_counter() - start)


# ---------------------------------------------------------------------------
# gamma_k: minimum k-dominating set
# ---------------------------------------------------------------------------

def gamma_k_exact(g: Graph, k: int,
                  max_n: int = DEFAULT_GAMMA_K_LIMIT) -> SolveResult:
    """Exact k-domination number by subset branch and bound.

    Vertices are decided in index order, inclusion branch first, so the
    first optimum found is the lexicographically least optimal set; it is
    returned as a 0/1 membership mask tuple.  V itself always k-dominates
    (the condition quantifies over V minus the set), so a solution exists.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n > max_n:
        raise GuardError(f"gamma_k solver guard is n <= {max_n}, got {n}")
    start = time.perf_counter()
    adj = g.adj

    in_set = [False] * n
    cov = [0] * n        # |N(v) & S| over currently included vertices
    best = n + 1
    witness_mask: tuple[int, ...] | None = None
    nodes = 0

    def additions_bound(pos: int, unassigned: int) -> float:
        deficient = []
        dmask = 0
        for v in range(pos):
            if not in_set[v] and cov[v] < k:
                need = k - cov[v]
                if (adj[v] & unassigned).bit_count() < need:
                    return _INF
                deficient.append(need)
                dmask |= 1 << v
        if not deficient:
            return 0
        maxcover = 0
        rest = unassigned
        while rest:
            low = rest & -rest
            c = (adj[low.bit_length() - 1] & dmask).bit_count()
            if c > maxcover:
                maxcover = c
            rest ^= low
        if maxcover == 0:
            return _INF
        total = sum(deficient)
        return max(max(deficient), -(-total // maxcover))

    def rec(pos: int, unassigned: int, size: int) -> None:
        nonlocal best, witness_mask, nodes
        nodes += 1
        if pos == n:
            for v in range(n):
                if not in_set[v] and cov[v] < k:
                    return
            if size < best:
                best = size
                witness_mask = tuple(1 if b else 0 for b in in_set)
            return
        rest = unassigned & ~(1 << pos)
        for include in (True, False):
            new_size = size + include
            if new_size >= best:
                continue
            in_set[pos] = include
            if include:
                row = adj[pos]
                v = row
                while v:
                    low = v & -v
                    cov[low.bit_length() - 1] += 1
                    v ^= low
            bound = additions_bound(pos + 1, rest)
            if new_size + bound < best:
                rec(pos + 1, rest, new_size)
            if include:
                v = adj[pos]
                while v:
                    low = v & -v
                    cov[low.bit_length() - 1] -= 1
                    v ^= low
        in_set[pos] = False

    rec(0, (1 << n) - 1, 0)
    assert witness_mask is not None
    return SolveResult("gamma_k", best, witness_mask, nodes,
                       time.perf_counter() - start)
