"""Inequality and characterization checks over exactly solved values.

Every known bound relating gamma_k, gamma_kR, d_k and d_R^k is evaluated
as one BoundRecord.  Unless a record's notes say otherwise, holds is the
literal truth of lhs <= rhs; equality/biconditional checks use lhs == rhs
(0/1 indicators for biconditionals).  Records whose hypotheses fail carry
applicable=False and are never counted as violations.  All arithmetic is
exact integer arithmetic; rational bounds are cross-multiplied or floored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .domatic import Family, d_k_exact, d_rk_exact, validate_family
from .graphs import Graph, GuardError, complement, complete_bipartite_parts, \
    encode_graph6
from .roman import gamma_k_exact, gamma_kr_exact, weight

DEFAULT_WITNESS_LIMIT = 10

THEOREM_DESCRIPTIONS = {
    "1d=n": "k=1 biconditional: d_rk equals n iff the graph is complete",
    "Delta": "gamma_kr >= ceil(2nk/(Delta+k)) when Delta >= k",
    "Delta1": "d_rk <= max(Delta, k-1) + k",
    "Kpq": "complete bipartite ceiling on d_rk (three cases by p vs k)",
    "SV": "k=1 biconditional: d_rk equals 1 iff the graph is empty",
    "Th2": "gamma_kr = n and d_rk = 2k force no surplus bipartite witness",
    "V0": "gamma_kr = n when n <= 2k, else gamma_kr >= 2k",
    "V1": "biconditional: gamma_kr < n iff a surplus bipartite witness exists",
    "c1": "gamma_kr + d_rk <= n + 2k",
    "c1-eq": "sum equality iff (gamma_kr,d_rk) is (n,2k) or (2k,n)",
    "cor1-lo": "d_k <= d_rk",
    "cor1-hi": "d_rk * min(n, gamma_k + k) <= 2kn (cross-multiplied)",
    "eq1-lo": "gamma_k <= gamma_kr",
    "eq1-hi": "gamma_kr <= 2 * gamma_k",
    "eq23": "d_rk >= 1 always; d_rk >= 2 once k >= 2",
    "gammast": "gamma_kr * d_rk <= 2kn",
    "gammast-eq": "at product equality every optimal member has weight "
                  "gamma_kr and every vertex sums to exactly 2k",
    "kdelta": "d_rk <= min_degree + 2k",
    "mapping": "d_rk = 2^n once k >= 2^n",
    "obs": "d_rk <= 2k-1 when k >= Delta+1",
    "obs2": "d_rk >= 2k-1 when k >= 2 and n >= 2k-2",
    "obs2-cor": "d_rk = 2k-1 when k >= 2, n >= 2k-2 and k >= Delta+1",
    "knord": "d_rk(G) + d_rk(complement) <= n + 4k - 2",
    "knord-eq": "complement-sum equality requires Delta - delta = 1",
    "knord-k1": "k=1 complement sum <= n + 2",
    "regnord": "regular-graph complement-sum ceiling (four-case maximum)",
    "final-cor": "regular, k >= 2, n >= 2: complement sum <= n + 4k - 4",
}


@dataclass(frozen=True)
class BoundRecord:
    theorem_id: str
    applicable: bool
    lhs: int
    rhs: int
    holds: bool
    equality: bool
    notes: str = ""


@dataclass(frozen=True)
class BipartiteWitness:
    """Disjoint vertex sets with |X| > |Y| >= k and every X vertex having
    at least k neighbors in Y; certifies gamma_kr < n."""

    X: tuple[int, ...]
    Y: tuple[int, ...]


@dataclass(frozen=True)
class SolvedValues:
    """Exactly solved quantities for one (graph, k) pair.

    d_rk_family optionally carries the optimal family witness so equality
    clauses can be re-validated.
    """

    gamma_k: int
    gamma_kr: int
    d_k: int
    d_rk: int
    d_rk_family: Family | None = None

    @classmethod
    def from_mapping(cls, vals: Mapping[str, int]) -> "SolvedValues":
        missing = [q for q in ("gamma_k", "gamma_kr", "d_k", "d_rk")
                   if q not in vals]
        if missing:
            raise ValueError(f"missing solved values: {', '.join(missing)}")
        return cls(vals["gamma_k"], vals["gamma_kr"], vals["d_k"],
                   vals["d_rk"])


def solve_all(g: Graph, k: int, max_n: int | None = None,
              max_k: int | None = None) -> SolvedValues:
    """Run all four exact solvers on one (graph, k) pair.

    max_n/max_k raise or lower every solver guard at once (the CLI's
    MAX_N knob); defaults keep each solver's own limit.
    """
    kw_n = {} if max_n is None else {"max_n": max_n}
    kw_nk = dict(kw_n)
    if max_k is not None:
        kw_nk["max_k"] = max_k
    drk = d_rk_exact(g, k, **kw_nk)
    return SolvedValues(
        gamma_k=gamma_k_exact(g, k, **kw_n).value,
        gamma_kr=gamma_kr_exact(g, k, **kw_n).value,
        d_k=d_k_exact(g, k, **kw_n).value,
        d_rk=drk.value,
        d_rk_family=drk.witness,
    )


def surplus_bipartite_witness(g: Graph, k: int,
                              max_n: int = DEFAULT_WITNESS_LIMIT,
                              ) -> BipartiteWitness | None:
    """Search for disjoint X, Y with |X| > |Y| >= k and every X vertex
    having >= k neighbors in Y.

    Returns the lexicographically least (Y, X) pair (subsets ordered as
    sorted index tuples), or None when no pair exists.  Such a witness
    exists exactly when gamma_kr(g) < n.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n > max_n:
        raise GuardError(f"witness search guard is n <= {max_n}, got {n}")
    subsets = sorted(
        (tuple(v for v in range(n) if mask >> v & 1)
         for mask in range(1, 1 << n)))
    for y in subsets:
        if len(y) < k or 2 * len(y) + 1 > n:
            continue
        ymask = 0
        for v in y:
            ymask |= 1 << v
        pool = [v for v in range(n)
                if not ymask >> v & 1
                and (g.adj[v] & ymask).bit_count() >= k]
        if len(pool) > len(y):
            return BipartiteWitness(X=tuple(pool[:len(y) + 1]), Y=y)
    return None


def _rec(theorem_id: str, applicable: bool, lhs: int, rhs: int,
         relation: str = "<=", notes: str = "") -> BoundRecord:
    holds = lhs <= rhs if relation == "<=" else lhs == rhs
    return BoundRecord(theorem_id, applicable, lhs, rhs, holds,
                       lhs == rhs, notes)


def check_graph(g: Graph, k: int, vals: SolvedValues | Mapping[str, int],
                witness_max_n: int = DEFAULT_WITNESS_LIMIT,
                ) -> list[BoundRecord]:
    """Evaluate every per-graph bound for one solved (graph, k) pair.

    Returns records sorted by theorem_id; complement-sum bounds live in
    check_nordhaus_gaddum.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not isinstance(vals, SolvedValues):
        vals = SolvedValues.from_mapping(vals)
    n = g.n
    delta, Delta = g.min_degree(), g.max_degree()
    gk, gkr, dk, drk = vals.gamma_k, vals.gamma_kr, vals.d_k, vals.d_rk
    records = []

    records.append(_rec("eq1-lo", True, gk, gkr))
    records.append(_rec("eq1-hi", True, gkr, 2 * gk))
    records.append(_rec("eq23", True, 1 if k == 1 else 2, drk,
                        notes="floor 1 at k=1, floor 2 once k >= 2"))

    if n <= 2 * k:
        records.append(_rec("V0", True, gkr, n, relation="==",
                            notes="n <= 2k forces gamma_kr = n"))
    else:
        records.append(_rec("V0", True, 2 * k, gkr,
                            notes="n >= 2k+1 forces gamma_kr >= 2k"))

    ceil_bound = -(-2 * n * k // (Delta + k)) if Delta >= k else 0
    records.append(_rec("Delta", Delta >= k, ceil_bound, gkr,
                        notes="ceil(2nk/(Delta+k)) <= gamma_kr"
                        if Delta >= k else "needs Delta >= k"))

    records.append(_rec("gammast", True, gkr * drk, 2 * k * n))

    gammast_eq = gkr * drk == 2 * k * n
    if gammast_eq and vals.d_rk_family is not None:
        fam = vals.d_rk_family
        ok = (not validate_family(g, k, fam)
              and all(weight(f) == gkr for f in fam)
              and all(sum(f[v] for f in fam) == 2 * k for v in range(n)))
        records.append(BoundRecord(
            "gammast-eq", True, int(ok), 1, ok, ok,
            "optimal family re-validated: uniform weight and full capacity"))
    else:
        records.append(BoundRecord(
            "gammast-eq", False, 0, 1, True, False,
            "product equality not attained" if not gammast_eq
            else "no family witness supplied"))

    records.append(_rec("c1", n >= 2, gkr + drk, n + 2 * k,
                        notes="" if n >= 2 else "needs n >= 2"))
    sum_eq = gkr + drk == n + 2 * k
    split_eq = (gkr == n and drk == 2 * k) or (gkr == 2 * k and drk == n)
    records.append(_rec("c1-eq", n >= 2, int(sum_eq), int(split_eq),
                        relation="==",
                        notes="biconditional as 0/1 indicators"))

    records.append(_rec("kdelta", True, drk, delta + 2 * k))
    records.append(_rec("reg", delta == Delta, drk,
                        max(2 * k - 1, delta + k),
                        notes="" if delta == Delta else "graph not regular"))
    records.append(_rec("Delta1", True, drk, max(Delta, k - 1) + k))

    records.append(_rec("cor1-lo", True, dk, drk))
    records.append(_rec("cor1-hi", True, drk * min(n, gk + k), 2 * k * n,
                        notes="cross-multiplied rational bound"))

    records.append(_rec("obs", k >= Delta + 1, drk, 2 * k - 1,
                        notes="" if k >= Delta + 1 else "needs k >= Delta+1"))
    obs2_app = k >= 2 and n >= 2 * k - 2
    records.append(_rec("obs2", obs2_app, 2 * k - 1, drk,
                        notes="" if obs2_app else "needs k >= 2, n >= 2k-2"))
    cor_app = obs2_app and k >= Delta + 1
    records.append(_rec("obs2-cor", cor_app, drk, 2 * k - 1, relation="==",
                        notes="" if cor_app
                        else "needs k >= 2, n >= 2k-2, k >= Delta+1"))

    records.append(_rec("mapping", k >= 2 ** n, drk, 2 ** n, relation="==",
                        notes="" if k >= 2 ** n else "needs k >= 2^n"))

    records.append(_rec("SV", k == 1, int(drk == 1), int(g.is_empty()),
                        relation="==",
                        notes="biconditional as 0/1 indicators"
                        if k == 1 else "stated for k = 1 only"))

    complete = g.is_complete()
    notes_1dn = "biconditional as 0/1 indicators"
    if k == 1 and n >= 2 and complete:
        notes_1dn += ("; consistent reading d_rk(K_n) = n adopted over the "
                      "superseded transcription d_rk(K_n) = 1")
    records.append(_rec("1d=n", k == 1 and n >= 2, int(drk == n),
                        int(complete), relation="==",
                        notes=notes_1dn if k == 1 and n >= 2
                        else "stated for k = 1 and n >= 2 only"))

    parts = complete_bipartite_parts(g)
    if parts is None:
        records.append(BoundRecord("Kpq", False, drk, 0, True, False,
                                   "graph is not complete bipartite"))
    else:
        p, q = parts
        cases = []
        if p < k or p == q == k:
            cases.append(("p<k or p=q=k", 2 * k))
        if p + q >= 2 * k + 1 and k <= p <= 3 * k:
            cases.append(("k<=p<=3k", 2 * k * (p + q) // (k + p)))
        if p >= 3 * k:
            cases.append(("p>=3k", (p + q) // 2))
        bound = min(b for _, b in cases)
        records.append(_rec("Kpq", True, drk, bound,
                            notes="cases: " + ", ".join(c for c, _ in cases)))

    if n <= witness_max_n:
        witness = surplus_bipartite_witness(g, k, max_n=witness_max_n)
        records.append(_rec("V1", True, int(gkr < n), int(witness is not None),
                            relation="==",
                            notes="biconditional as 0/1 indicators"))
        th2_app = n >= 2 and gkr == n and drk == 2 * k
        records.append(_rec("Th2", th2_app, int(witness is None), 1,
                            relation="==",
                            notes="gamma_kr = n and d_rk = 2k exclude a "
                                  "surplus witness" if th2_app
                            else "hypotheses gamma_kr = n, d_rk = 2k not met"))
    else:
        records.append(BoundRecord("V1", False, 0, 0, True, True,
                                   f"witness search guard is n <= {witness_max_n}"))
        records.append(BoundRecord("Th2", False, 0, 0, True, True,
                                   f"witness search guard is n <= {witness_max_n}"))

    return sorted(records, key=lambda r: r.theorem_id)


def check_nordhaus_gaddum(g: Graph, k: int, max_n: int | None = None,
                          max_k: int | None = None) -> list[BoundRecord]:
    """Complement-sum bounds: solve d_rk on the graph and its complement.

    Both solves must fit the d_rk guards (GuardError otherwise).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    kw = {} if max_n is None else {"max_n": max_n}
    if max_k is not None:
        kw["max_k"] = max_k
    n = g.n
    delta, Delta = g.min_degree(), g.max_degree()
    drk = d_rk_exact(g, k, **kw).value
    drk_co = d_rk_exact(complement(g), k, **kw).value
    total = drk + drk_co
    records = []

    records.append(_rec("knord", True, total, n + 4 * k - 2))
    at_equality = total == n + 4 * k - 2
    records.append(_rec("knord-eq", at_equality, Delta - delta, 1,
                        relation="==",
                        notes="equality requires Delta - delta = 1"
                        if at_equality else "sum below the ceiling"))
    records.append(_rec("knord-k1", k == 1, total, n + 2,
                        notes="" if k == 1 else "stated for k = 1 only"))

    regular = delta == Delta
    reg_bound = max(4 * k - 2, n + 2 * k - 1, n + 3 * k - 2 - delta,
                    3 * k + delta - 1)
    records.append(_rec("regnord", regular, total, reg_bound,
                        notes="" if regular else "graph not regular"))
    fc_app = regular and k >= 2 and n >= 2
    records.append(_rec("final-cor", fc_app, total, n + 4 * k - 4,
                        notes="" if fc_app
                        else "needs a regular graph, k >= 2 and n >= 2"))
    return sorted(records, key=lambda r: r.theorem_id)


def violations(records: list[BoundRecord]) -> list[BoundRecord]:
    """Applicable records that do not hold (always empty on sound solvers)."""
    return [r for r in records if r.applicable and not r.holds]


# ---------------------------------------------------------------------------
# Report serialization
# ---------------------------------------------------------------------------

def graph_info(g: Graph) -> dict:
    delta, Delta, regular = g.min_degree(), g.max_degree(), g.is_regular()
    return {
        "name": g.label or "",
        "graph6": encode_graph6(g),
        "n": g.n,
        "delta": delta,
        "Delta": Delta,
        "regular": regular,
    }


def report_dict(g: Graph, k: int, vals: SolvedValues,
                records: list[BoundRecord]) -> dict:
    """One (graph, k) report matching the documented JSON schema."""
    return {
        "schema": "1",
        "graph": graph_info(g),
        "k": k,
        "values": {
            "gamma_k": vals.gamma_k,
            "gamma_kr": vals.gamma_kr,
            "d_k": vals.d_k,
            "d_rk": vals.d_rk,
        },
        "records": [
            {
                "theorem_id": r.theorem_id,
                "applicable": r.applicable,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "holds": r.holds,
                "equality": r.equality,
                "notes": r.notes,
            }
            for r in records
        ],
    }


CSV_COLUMNS = ["name", "graph6", "n", "delta", "Delta", "regular", "k",
               "gamma_k", "gamma_kr", "d_k", "d_rk", "theorem_id",
               "applicable", "lhs", "rhs", "holds", "equality", "notes"]


def report_csv_rows(g: Graph, k: int, vals: SolvedValues,
                    records: list[BoundRecord]) -> list[list]:
    """Flatten one report into CSV rows (one per record)."""
    info = graph_info(g)
    head = [info["name"], info["graph6"], info["n"], info["delta"],
            info["Delta"], info["regular"], k, vals.gamma_k, vals.gamma_kr,
            vals.d_k, vals.d_rk]
    return [head + [r.theorem_id, r.applicable, r.lhs, r.rhs, r.holds,
                    r.equality, r.notes]
            for r in records]
