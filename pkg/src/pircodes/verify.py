"""Exact verification of the t-PIR property with checkable certificates.

An [n, k] code is t-PIR when every information symbol i has t mutually
disjoint recovering sets: coordinate subsets whose column sums equal the
i-th unit vector. The verifier searches each symbol independently: greedy
depth-first over candidate sets in (cardinality, lexicographic) order,
backtracking with a span-based prune, so verdicts and certificates are
deterministic.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, NotFullRank
from .gf2 import MIN_DISTANCE_CAP, GenMatrix, in_span, min_distance, rank

YES = "yes"
NO = "no"
INCONCLUSIVE = "inconclusive"

BUDGET_ENV_VAR = "PIRCODES_NODE_BUDGET"
DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class RecoveringSet:
    """Coordinate subset whose column sum hits one unit vector; 1-based, sorted."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("recovering set must be nonempty")
        if any(c < 1 for c in self.coords):
            raise ValueError("coordinates are 1-based")
        if any(a >= b for a, b in zip(self.coords, self.coords[1:])):
            raise ValueError("coordinates must be strictly increasing")

    def __len__(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class PirCertificate:
    """For each information symbol, exactly t candidate recovering sets.

    Validity (disjointness and correct column sums) is decided by
    check_certificate, not at construction, so refutation cases stay
    representable.
    """

    t: int
    per_symbol: tuple[tuple[RecoveringSet, ...], ...]

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be at least 1")
        for i, sets in enumerate(self.per_symbol, start=1):
            if len(sets) != self.t:
                raise ValueError(f"symbol {i} has {len(sets)} sets, expected t={self.t}")

    @classmethod
    def from_lists(cls, t: int, per_symbol: Sequence[Sequence[Sequence[int]]]) -> "PirCertificate":
        return cls(
            t,
            tuple(
                tuple(RecoveringSet(tuple(sorted(s))) for s in sets) for sets in per_symbol
            ),
        )

    @property
    def k(self) -> int:
        return len(self.per_symbol)


@dataclass(frozen=True)
class Verdict:
    """Outcome of verify_pir: yes with certificate, definitive no, or budget/cap hit."""

    status: str
    certificate: PirCertificate | None = None
    reason: str = ""
    nodes: int = 0

    @property
    def is_yes(self) -> bool:
        return self.status == YES

    @property
    def is_no(self) -> bool:
        return self.status == NO

    @property
    def is_inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE


class _OutOfBudget(Exception):
    pass


class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int | None):
        self.remaining = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        if self.remaining is not None:
            self.remaining -= 1
            if self.remaining < 0:
                raise _OutOfBudget


def default_node_budget() -> int:
    """Per-symbol search budget; overridable via the environment."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_NODE_BUDGET


def check_certificate(G: GenMatrix, cert: PirCertificate) -> bool:
    """Re-validate a certificate against G; pure check, no search.

    True iff for every symbol the t listed sets are pairwise disjoint and
    each sums (over matrix columns) to that symbol's unit vector. Raises
    IndexOutOfRange for certificates whose shape or indices do not fit G.
    """
    if cert.k != G.k:
        raise IndexOutOfRange(f"certificate covers {cert.k} symbols, matrix has k={G.k}")
    cols = G.columns()
    for i, sets in enumerate(cert.per_symbol, start=1):
        target = 1 << (i - 1)
        seen: set[int] = set()
        for rset in sets:
            acc = 0
            for c in rset.coords:
                if not 1 <= c <= G.n:
                    raise IndexOutOfRange(f"coordinate {c} outside 1..{G.n}")
                if c in seen:
                    return False
                seen.add(c)
                acc ^= cols[c - 1]
            if acc != target:
                return False
    return True


def _iter_sum_subsets(
    coords: Sequence[int],
    cols: Sequence[int],
    target: int,
    size_cap: int,
    budget: _Budget,
) -> Iterator[tuple[int, ...]]:
    """Yield sorted subsets of coords with column sum = target, by (size, lex).

    The final element of each subset is resolved through a value-indexed
    lookup, so only prefixes are enumerated explicitly.
    """
    by_value: dict[int, list[int]] = {}
    for c in coords:
        by_value.setdefault(cols[c - 1], []).append(c)

    budget.spend()
    for c in by_value.get(target, ()):
        budget.spend()
        yield (c,)

    m = len(coords)
    for size in range(2, size_cap + 1):
        if size > m:
            return

        def prefix(start: int, depth: int, acc: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            budget.spend()
            if depth == size - 1:
                comp = by_value.get(acc ^ target)
                if comp:
                    last = chosen[-1]
                    for c in comp[bisect_right(comp, last):]:
                        budget.spend()
                        yield chosen + (c,)
                return
            for idx in range(start, m - (size - 1 - depth)):
                c = coords[idx]
                yield from prefix(idx + 1, depth + 1, acc ^ cols[c - 1], chosen + (c,))

        yield from prefix(0, 0, 0, ())


def enumerate_recovering_sets(
    G: GenMatrix,
    i: int,
    allowed: Iterable[int],
    size_cap: int | None = None,
) -> Iterator[RecoveringSet]:
    """Stream every recovering set for symbol i inside the allowed coordinates.

    Yields, in increasing cardinality then lexicographic order, each subset
    S of allowed with |S| <= size_cap whose column sum equals the i-th unit
    vector; nothing if that vector lies outside the span of the allowed
    columns.
    """
    if not 1 <= i <= G.k:
        raise ValueError(f"symbol {i} outside 1..{G.k}")
    coords = tuple(sorted(set(allowed)))
    if coords and not (1 <= coords[0] and coords[-1] <= G.n):
        raise ValueError(f"allowed coordinates outside 1..{G.n}")
    cap = len(coords) if size_cap is None else min(size_cap, len(coords))
    cols = G.columns()
    budget = _Budget(None)
    for subset in _iter_sum_subsets(coords, cols, 1 << (i - 1), cap, budget):
        yield RecoveringSet(subset)


def _pack_symbol(
    cols: Sequence[int],
    n: int,
    i: int,
    t: int,
    size_cap: int,
    budget: _Budget,
) -> tuple[tuple[int, ...], ...] | None:
    """Find t disjoint recovering sets for symbol i, or prove none exist.

    Successive sets are forced strictly increasing in (size, lex) order:
    families are unordered, so this loses no solutions and the first hit is
    the greedy-lexicographic certificate.
    """
    target = 1 << (i - 1)
    all_coords = tuple(range(1, n + 1))

    def dfs(
        remaining: tuple[int, ...],
        t_left: int,
        floor: tuple[int, tuple[int, ...]] | None,
    ) -> tuple[tuple[int, ...], ...] | None:
        if t_left == 0:
            return ()
        budget.spend()
        if not in_span((cols[c - 1] for c in remaining), target):
            return None
        for cand in _iter_sum_subsets(remaining, cols, target, size_cap, budget):
            key = (len(cand), cand)
            if floor is not None and key <= floor:
                continue
            cand_set = set(cand)
            rest = tuple(c for c in remaining if c not in cand_set)
            sub = dfs(rest, t_left - 1, key)
            if sub is not None:
                return (cand,) + sub
        return None

    return dfs(all_coords, t, None)


def verify_pir(
    G: GenMatrix,
    t: int,
    node_budget: int | None = None,
    size_cap: int | None = None,
) -> Verdict:
    """Decide the t-PIR property of G exactly.

    Args:
        G: full-row-rank generator matrix.
        t: requested availability, at least 1.
        node_budget: per-symbol search node limit; None reads the
            environment override and falls back to the package default.
            Exhaustion yields an inconclusive verdict, never a silent answer.
        size_cap: bound on recovering-set cardinality. The default (k) is
            complete: any recovering set shrinks to one with linearly
            independent columns, hence at most k coordinates. A smaller cap
            downgrades refutations to inconclusive.

    Returns:
        Verdict: yes carries a certificate that passes check_certificate;
        no is definitive (exhaustive under a complete cap).
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if rank(G) < G.k:
        raise NotFullRank(f"rank below k={G.k}")
    if node_budget is None:
        node_budget = default_node_budget()

    complete_cap = G.k
    cap = complete_cap if size_cap is None else min(size_cap, G.n)

    if G.k <= MIN_DISTANCE_CAP:
        d = min_distance(G)
        if d < t:
            return Verdict(NO, reason=f"minimum distance {d} < t={t}")

    cols = G.columns()
    per_symbol: list[tuple[RecoveringSet, ...]] = []
    nodes = 0
    for i in range(1, G.k + 1):
        budget = _Budget(node_budget)
        try:
            packing = _pack_symbol(cols, G.n, i, t, cap, budget)
        except _OutOfBudget:
            return Verdict(
                INCONCLUSIVE,
                reason=f"node budget {node_budget} exhausted at symbol {i}",
                nodes=nodes + budget.spent,
            )
        nodes += budget.spent
        if packing is None:
            if cap < complete_cap:
                return Verdict(
                    INCONCLUSIVE,
                    reason=(
                        f"no packing for symbol {i} under size cap {cap} < {complete_cap}; "
                        "refutation not exhaustive"
                    ),
                    nodes=nodes,
                )
            return Verdict(NO, reason=f"no {t} disjoint recovering sets for symbol {i}", nodes=nodes)
        per_symbol.append(tuple(RecoveringSet(s) for s in packing))

    cert = PirCertificate(t, tuple(per_symbol))
    return Verdict(YES, certificate=cert, nodes=nodes)


__all__ = [
    "YES",
    "NO",
    "INCONCLUSIVE",
    "BUDGET_ENV_VAR",
    "DEFAULT_NODE_BUDGET",
    "RecoveringSet",
    "PirCertificate",
    "Verdict",
    "default_node_budget",
    "check_certificate",
    "enumerate_recovering_sets",
    "verify_pir",
]
