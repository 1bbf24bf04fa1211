"""Constructive transformations on PIR codes and Steiner-type collections.

Each operation mirrors a provable availability bound: concatenation adds
availabilities, direct sums merge dimensions, shortening/puncturing trade a
symbol or coordinate for one unit of length, an extra all-sum column turns
odd availability t into t+1, and the lengthen-and-extend construction grows
the dimension by one at the cost of t/2 extra coordinates. The Steiner-5
lengthening grows a collection with the S5 property into one for a code
three coordinates longer and one dimension higher, preserving S5.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    EmptyTargetSet,
    InvalidCertificate,
    NoPropertyS5,
    NotSystematic,
    OddT,
    RankLoss,
)
from .gf2 import GenMatrix, is_systematic, _bitset_rank
from .steiner import Collection, StCertificate, StWitness, validate_st_certificate
from .verify import PirCertificate, RecoveringSet, check_certificate


def concat_availability(G: GenMatrix, Gp: GenMatrix) -> GenMatrix:
    """Side-by-side concatenation [G | G']; availabilities add up."""
    if G.k != Gp.k:
        raise DimensionMismatch(f"k mismatch: {G.k} vs {Gp.k}")
    rows = tuple(a | (b << G.n) for a, b in zip(G.rows, Gp.rows))
    return GenMatrix(G.k, G.n + Gp.n, rows)


def direct_sum(G: GenMatrix, Gp: GenMatrix) -> GenMatrix:
    """Block-diagonal stacking; preserves availability across all k+k' symbols."""
    rows = tuple(G.rows) + tuple(b << G.n for b in Gp.rows)
    return GenMatrix(G.k + Gp.k, G.n + Gp.n, rows)


def _drop_bit(row: int, position: int) -> int:
    """Remove 0-based bit position, shifting higher bits down."""
    low = row & ((1 << position) - 1)
    high = (row >> (position + 1)) << position
    return low | high


def shorten(G: GenMatrix, i: int) -> GenMatrix:
    """Remove information symbol i of a systematic matrix: row i and column i."""
    if not is_systematic(G):
        raise NotSystematic("shortening requires [I | P] form")
    if G.k < 2:
        raise ValueError("cannot shorten below dimension 1")
    if not 1 <= i <= G.k:
        raise ValueError(f"symbol {i} outside 1..{G.k}")
    rows = tuple(_drop_bit(r, i - 1) for idx, r in enumerate(G.rows, start=1) if idx != i)
    return GenMatrix(G.k - 1, G.n - 1, rows)


def puncture(G: GenMatrix, j: int) -> GenMatrix:
    """Delete coordinate j; availability drops by at most one."""
    if not 1 <= j <= G.n:
        raise ValueError(f"coordinate {j} outside 1..{G.n}")
    rows = [_drop_bit(r, j - 1) for r in G.rows]
    if G.n == 1 or _bitset_rank(rows) < G.k:
        raise RankLoss(f"removing coordinate {j} drops rank below {G.k}")
    return GenMatrix(G.k, G.n - 1, tuple(rows))


def _require_valid_certificate(G: GenMatrix, t: int, cert: PirCertificate) -> None:
    if cert.t != t:
        raise InvalidCertificate(f"certificate is for t={cert.t}, expected {t}")
    if not check_certificate(G, cert):
        raise InvalidCertificate("certificate does not validate against the matrix")


def even_extend(G: GenMatrix, t: int, cert: PirCertificate) -> GenMatrix:
    """Append the sum of all columns; odd availability t becomes t+1."""
    if t % 2 == 0:
        raise ValueError("even_extend requires odd t")
    _require_valid_certificate(G, t, cert)
    rows = tuple(r | ((r.bit_count() & 1) << G.n) for r in G.rows)
    return GenMatrix(G.k, G.n + 1, rows)


def even_extended_certificate(G: GenMatrix, t: int, cert: PirCertificate) -> PirCertificate:
    """Certificate for the even-extended matrix: each symbol gains the set of
    all previously unused coordinates plus the new column."""
    if t % 2 == 0:
        raise ValueError("even_extend requires odd t")
    _require_valid_certificate(G, t, cert)
    n = G.n
    per_symbol = []
    for sets in cert.per_symbol:
        used = set()
        for rset in sets:
            used.update(rset.coords)
        extra = tuple(sorted(set(range(1, n + 1)) - used)) + (n + 1,)
        per_symbol.append(tuple(sets) + (RecoveringSet(extra),))
    return PirCertificate(t + 1, tuple(per_symbol))


def lengthen_extend(G: GenMatrix, t: int, cert: PirCertificate, m: int = 1) -> GenMatrix:
    """Grow dimension by one for even t: add a weight-t/2 row and t/2 unit columns.

    The new row's support picks one coordinate from each of t/2 recovering
    sets of symbol m (the smallest sets, smallest coordinate within each),
    and every appended column is the unit vector of the new symbol. The
    result is a (k+1)-dimensional t-PIR code of length n + t/2.
    """
    if t % 2 == 1:
        raise OddT("lengthen_extend requires even t; use lengthen_extend_odd")
    _require_valid_certificate(G, t, cert)
    if not 1 <= m <= G.k:
        raise ValueError(f"symbol {m} outside 1..{G.k}")
    half = t // 2
    chosen = sorted(cert.per_symbol[m - 1], key=lambda s: (len(s.coords), s.coords))[:half]
    z = 0
    for rset in chosen:
        z |= 1 << (min(rset.coords) - 1)
    new_row = z | (((1 << half) - 1) << G.n)
    rows = tuple(G.rows) + (new_row,)
    return GenMatrix(G.k + 1, G.n + half, rows)


def lengthen_extend_odd(G: GenMatrix, t: int, cert: PirCertificate, m: int = 1) -> GenMatrix:
    """Odd-t lengthening chain: even-extend to t+1, lengthen, then puncture
    the extension column, for a (k+1)-dimensional t-PIR code of length
    n + (t+1)/2."""
    if t % 2 == 0:
        raise ValueError("use lengthen_extend for even t")
    extended = even_extend(G, t, cert)
    ext_cert = even_extended_certificate(G, t, cert)
    grown = lengthen_extend(extended, t + 1, ext_cert, m)
    return puncture(grown, G.n + 1)


def s5_lengthen(C: Collection, cert: StCertificate, j1: int) -> Collection:
    """Grow an S5 collection by one symbol: the new symbol joins parity set
    j1 and two fresh singleton parity sets, and the all-one set expands."""
    return s5_lengthen_with_certificate(C, cert, j1)[0]


def s5_lengthen_with_certificate(
    C: Collection, cert: StCertificate, j1: int
) -> tuple[Collection, StCertificate]:
    """As s5_lengthen, also transporting the condition-4 witnesses.

    Old symbols keep their I sets; their V sets absorb the first fresh
    singleton when parity set j1 was unused. The new symbol's witness is
    built from the smallest symbol l of P_j1: I joins I(l) with P_j2 minus l
    (j2 the smallest other non-final set containing l), and V joins V(l)
    with j2.
    """
    if cert.t != 5:
        raise NoPropertyS5(f"certificate is for t={cert.t}, expected 5")
    try:
        validate_st_certificate(C, cert)
    except InvalidCertificate as exc:
        raise NoPropertyS5(f"collection lacks a valid S5 certificate: {exc}") from exc
    k, r = C.k, C.r
    if not 1 <= j1 <= r - 1:
        raise ValueError(f"target set {j1} outside 1..{r - 1}")
    if not C.sets[j1 - 1]:
        raise EmptyTargetSet(f"parity set {j1} is empty")

    new_symbol = k + 1
    new_sets = []
    for j in range(1, r):
        if j == j1:
            new_sets.append(tuple(sorted(C.sets[j - 1] + (new_symbol,))))
        else:
            new_sets.append(C.sets[j - 1])
    new_sets.append((new_symbol,))
    new_sets.append((new_symbol,))
    new_sets.append(tuple(range(1, new_symbol + 1)))
    grown = Collection(new_symbol, tuple(new_sets))

    witnesses = []
    for m in range(1, k + 1):
        w = cert.per_symbol[m - 1]
        J = tuple(sorted([j for j in w.J if j != r] + [r + 2]))
        V = w.V if j1 in w.V else tuple(sorted(w.V + (r,)))
        witnesses.append(StWitness(J=J, I=w.I, V=V))

    ell = min(C.sets[j1 - 1])
    w_ell = cert.per_symbol[ell - 1]
    j2 = min(j for j in w_ell.J if j not in (j1, r))
    I_new = tuple(sorted(set(w_ell.I) | (set(C.sets[j2 - 1]) - {ell})))
    V_new = tuple(sorted(set(w_ell.V) | {j2}))
    witnesses.append(StWitness(J=(j1, r, r + 1, r + 2), I=I_new, V=V_new))

    grown_cert = StCertificate(5, tuple(witnesses))
    validate_st_certificate(grown, grown_cert)
    return grown, grown_cert


__all__ = [
    "concat_availability",
    "direct_sum",
    "shorten",
    "puncture",
    "even_extend",
    "even_extended_certificate",
    "lengthen_extend",
    "lengthen_extend_odd",
    "s5_lengthen",
    "s5_lengthen_with_certificate",
]
