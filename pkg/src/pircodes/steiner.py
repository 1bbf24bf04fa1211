"""Systematic codes from subset collections and the Steiner-type closure property.

A collection P_1, ..., P_r of subsets of {1..k} defines a systematic
[k+r, k] code whose parity bit j is the sum of the information bits in P_j.
The S_t property strengthens the classic partial-Steiner sufficient
condition: the last set must be all of {1..k} (an all-one parity column),
every symbol lies in exactly t-1 sets, the first r-1 sets pairwise share at
most one element, and for every symbol m the all-one column can be combined
with unused parity sets and untouched symbols to cancel down to the unit
vector of m. Condition 4 witnesses are the (J, I, V) triples stored in an
StCertificate.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidCertificate, NotSystematic
from .gf2 import GenMatrix
from .verify import INCONCLUSIVE, NO, YES, PirCertificate, RecoveringSet

V_EXACT_LIMIT = 24
DEFAULT_V_CAP = 6


@dataclass(frozen=True)
class Collection:
    """An ordered family of subsets of {1..k}; sets stored as sorted tuples."""

    k: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not self.sets:
            raise ValueError("collection needs at least one set")
        for j, s in enumerate(self.sets, start=1):
            if tuple(sorted(set(s))) != s:
                raise ValueError(f"set {j} must be strictly increasing without repeats")
            if s and (s[0] < 1 or s[-1] > self.k):
                raise ValueError(f"set {j} has elements outside 1..{self.k}")

    @classmethod
    def from_lists(cls, k: int, sets: Sequence[Iterable[int]]) -> "Collection":
        return cls(k, tuple(tuple(sorted(set(s))) for s in sets))

    @property
    def r(self) -> int:
        return len(self.sets)

    def membership(self, i: int) -> tuple[int, ...]:
        """Indices j with i in P_j (the derived J set for symbol i), 1-based."""
        return tuple(j for j, s in enumerate(self.sets, start=1) if i in s)

    def indicator(self, j: int) -> int:
        """Packed indicator of P_j over the k symbols, 1-based j."""
        acc = 0
        for i in self.sets[j - 1]:
            acc |= 1 << (i - 1)
        return acc


@dataclass(frozen=True)
class StWitness:
    """Per-symbol condition-4 witness: membership set J, symbol set I, parity set V."""

    J: tuple[int, ...]
    I: tuple[int, ...]
    V: tuple[int, ...]


@dataclass(frozen=True)
class StCertificate:
    """Witnesses for every symbol of a collection with the S_t property."""

    t: int
    per_symbol: tuple[StWitness, ...]

    @property
    def k(self) -> int:
        return len(self.per_symbol)


@dataclass(frozen=True)
class StVerdict:
    status: str
    certificate: StCertificate | None = None
    reason: str = ""

    @property
    def is_yes(self) -> bool:
        return self.status == YES

    @property
    def is_no(self) -> bool:
        return self.status == NO

    @property
    def is_inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE


def build_systematic(C: Collection) -> GenMatrix:
    """The [I_k | P] generator matrix with p_ij = 1 iff symbol i lies in P_j."""
    k, r = C.k, C.r
    rows = []
    for i in range(1, k + 1):
        bits = 1 << (i - 1)
        for j, s in enumerate(C.sets, start=1):
            if i in s:
                bits |= 1 << (k + j - 1)
        rows.append(bits)
    return GenMatrix(k, k + r, tuple(rows))


def collection_from_matrix(G: GenMatrix) -> Collection:
    """Recover the defining collection of a systematic [I_k | P] matrix."""
    if not _is_systematic(G):
        raise NotSystematic("matrix is not in [I | P] form")
    if G.n == G.k:
        raise ValueError("matrix has no parity columns")
    sets = []
    for j in range(G.k + 1, G.n + 1):
        col = G.column_bits(j)
        sets.append(tuple(i for i in range(1, G.k + 1) if (col >> (i - 1)) & 1))
    return Collection(G.k, tuple(sets))


def _is_systematic(G: GenMatrix) -> bool:
    mask = (1 << G.k) - 1
    return G.n >= G.k and all((row & mask) == (1 << i) for i, row in enumerate(G.rows))


def check_steiner_cover(C: Collection, t: int) -> bool:
    """Sufficient covering condition: every symbol in at least t-1 sets and
    all pairs of sets sharing at most one element."""
    for i in range(1, C.k + 1):
        if len(C.membership(i)) < t - 1:
            return False
    for a, b in combinations(range(C.r), 2):
        if len(set(C.sets[a]) & set(C.sets[b])) > 1:
            return False
    return True


def check_property_st(
    C: Collection,
    t: int,
    v_size_cap: int | None = None,
) -> StVerdict:
    """Decide the S_t property, returning per-symbol witnesses on success.

    Conditions 1-3 are direct structural checks. Condition 4 is searched per
    symbol m: enumerate candidate parity-index sets V (disjoint from the
    membership set of m) in (size, lex) order; each V forces the symbol set
    I through the GF(2) identity
        indicator(I) = all-ones + e_m + sum of indicators over V,
    and the first V whose forced I avoids every set containing m wins. The
    search is exact for r <= 24; beyond that a cardinality cap applies and
    exhaustion reports inconclusive instead of no.
    """
    k, r = C.k, C.r
    if any(not s for s in C.sets):
        warnings.warn("collection contains empty parity sets; they cannot help coverage")

    full = tuple(range(1, k + 1))
    if C.sets[-1] != full:
        return StVerdict(NO, reason="last set is not the full symbol set")
    for i in range(1, k + 1):
        deg = len(C.membership(i))
        if deg != t - 1:
            return StVerdict(NO, reason=f"symbol {i} lies in {deg} sets, expected {t - 1}")
    for a, b in combinations(range(r - 1), 2):
        if len(set(C.sets[a]) & set(C.sets[b])) > 1:
            return StVerdict(NO, reason=f"sets {a + 1} and {b + 1} share more than one element")

    if v_size_cap is None and r > V_EXACT_LIMIT:
        v_size_cap = DEFAULT_V_CAP
    indicators = [C.indicator(j) for j in range(1, r + 1)]
    ones = (1 << k) - 1

    witnesses: list[StWitness] = []
    capped = False
    for m in range(1, k + 1):
        J = C.membership(m)
        others = [j for j in range(1, r) if j not in J]
        blocked = 0
        for j in J:
            if j != r:
                blocked |= indicators[j - 1]
        base = ones ^ (1 << (m - 1))
        max_size = len(others) if v_size_cap is None else min(v_size_cap, len(others))
        found = None
        for size in range(0, max_size + 1):
            for V in combinations(others, size):
                ind_i = base
                for j in V:
                    ind_i ^= indicators[j - 1]
                if ind_i & blocked == 0:
                    found = (ind_i, V)
                    break
            if found:
                break
        if found is None:
            if max_size < len(others):
                capped = True
                break
            return StVerdict(NO, reason=f"no condition-4 witness for symbol {m}")
        ind_i, V = found
        I = tuple(i for i in range(1, k + 1) if (ind_i >> (i - 1)) & 1)
        witnesses.append(StWitness(J=J, I=I, V=V))

    if capped:
        return StVerdict(
            INCONCLUSIVE,
            reason=f"condition-4 search capped at |V| <= {v_size_cap} for r={r}",
        )
    return StVerdict(YES, certificate=StCertificate(t, tuple(witnesses)))


def validate_st_certificate(C: Collection, cert: StCertificate) -> None:
    """Raise InvalidCertificate unless cert witnesses the S_t property of C."""
    k, r, t = C.k, C.r, cert.t
    if cert.k != k:
        raise InvalidCertificate(f"certificate covers {cert.k} symbols, collection has k={k}")
    if C.sets[-1] != tuple(range(1, k + 1)):
        raise InvalidCertificate("collection's last set is not the full symbol set")
    for a, b in combinations(range(r - 1), 2):
        if len(set(C.sets[a]) & set(C.sets[b])) > 1:
            raise InvalidCertificate(f"sets {a + 1} and {b + 1} share more than one element")
    ones = (1 << k) - 1
    for m, w in enumerate(cert.per_symbol, start=1):
        J = C.membership(m)
        if w.J != J:
            raise InvalidCertificate(f"symbol {m}: stored J {w.J} != derived {J}")
        if len(J) != t - 1:
            raise InvalidCertificate(f"symbol {m}: |J| = {len(J)}, expected {t - 1}")
        if any(not 1 <= j <= r - 1 for j in w.V):
            raise InvalidCertificate(f"symbol {m}: V outside 1..{r - 1}")
        if set(w.V) & set(J):
            raise InvalidCertificate(f"symbol {m}: V intersects J")
        blocked = 0
        for j in J:
            if j != r:
                blocked |= C.indicator(j)
        ind_i = 0
        for i in w.I:
            if not 1 <= i <= k:
                raise InvalidCertificate(f"symbol {m}: I outside 1..{k}")
            ind_i |= 1 << (i - 1)
        if ind_i & blocked:
            raise InvalidCertificate(f"symbol {m}: I intersects a set containing {m}")
        acc = ones ^ (1 << (m - 1))
        for j in w.V:
            acc ^= C.indicator(j)
        if acc != ind_i:
            raise InvalidCertificate(f"symbol {m}: condition-4 identity fails")


def st_recovering_sets(C: Collection, cert: StCertificate) -> PirCertificate:
    """Expand an S_t certificate into the explicit t disjoint recovering sets.

    For symbol m: the singleton {m}; one set (P_j minus m) plus parity
    coordinate k+j for each j in J except the last; and a final set joining
    I, the parity coordinates of V, and the all-one coordinate k+r.
    """
    validate_st_certificate(C, cert)
    k, r, t = C.k, C.r, cert.t
    per_symbol: list[tuple[RecoveringSet, ...]] = []
    for m, w in enumerate(cert.per_symbol, start=1):
        sets = [RecoveringSet((m,))]
        for j in w.J:
            if j == r:
                continue
            coords = tuple(sorted([i for i in C.sets[j - 1] if i != m] + [k + j]))
            sets.append(RecoveringSet(coords))
        last = tuple(sorted(set(w.I) | {k + j for j in w.V} | {k + r}))
        sets.append(RecoveringSet(last))
        per_symbol.append(tuple(sets))
    return PirCertificate(t, tuple(per_symbol))


__all__ = [
    "Collection",
    "StWitness",
    "StCertificate",
    "StVerdict",
    "build_systematic",
    "collection_from_matrix",
    "check_steiner_cover",
    "check_property_st",
    "validate_st_certificate",
    "st_recovering_sets",
]
