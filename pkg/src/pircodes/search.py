"""Lexicographic growth search for small-blocklength systematic PIR codes.

Starting from a verified constant-row-weight seed [I_k | P], the search pads
the redundancy block with w zero columns and scans constant-weight rows z in
lexicographic order. Each candidate embeds the current best matrix with one
extra information symbol whose row is z; a candidate survives a cheap
pairwise row-distance gate and must then pass the mode's exact check (t-PIR
property, or the S5 closure property for collections carrying an all-one
column). Acceptance grows the dimension and restarts the scan; a candidate
that passes the gate but fails the mode check ends the run.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field

from .errors import Exhausted, InvalidInput, NotSystematic, WeightMismatch
from .gf2 import BitVector, GenMatrix, is_systematic
from .steiner import check_property_st, collection_from_matrix
from .verify import verify_pir
from .constructions import shorten

MODE_PIR = "pir"
MODE_S5 = "s5"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for one growth run.

    w is the number of zero padding columns (1 or 2); target_t the
    availability; max_k an optional stop dimension. continue_on_fail keeps
    scanning past a gate-passing candidate that fails the mode check
    (deviation from the reference behaviour, off by default), and
    reset_on_accept restarts the z scan after each acceptance.
    """

    w: int
    mode: str = MODE_PIR
    target_t: int = 5
    node_budget: int | None = None
    max_k: int | None = None
    continue_on_fail: bool = False
    reset_on_accept: bool = True

    def __post_init__(self):
        if self.w not in (1, 2):
            raise ValueError(f"w must be 1 or 2, got {self.w}")
        if self.mode not in (MODE_PIR, MODE_S5):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.target_t < 2:
            raise ValueError("target_t must be at least 2")


@dataclass(frozen=True)
class StepRecord:
    """One scan event: an acceptance or the terminal outcome."""

    z: tuple[int, ...] | None
    scanned: int
    verdict: str
    k: int
    n: int


@dataclass(frozen=True)
class SearchReport:
    best_matrix: GenMatrix
    k_best: int
    n_best: int
    per_step: tuple[StepRecord, ...]
    elapsed: float
    seed_k: int
    seed_n: int
    w: int
    mode: str
    target_t: int
    inconclusive_checks: int = 0
    accepted_matrices: tuple[GenMatrix, ...] = field(default=(), repr=False)


def first_lexical(length: int, weight: int) -> BitVector:
    """The first constant-weight vector: ones packed at the lowest coordinates."""
    if not 0 <= weight <= length:
        raise ValueError(f"weight {weight} outside 0..{length}")
    return BitVector(length, (1 << weight) - 1)


def lexical_next(z: BitVector) -> BitVector:
    """Successor of z among same-length, same-weight vectors.

    Order is lexicographic on the sorted support, so (1,1,1,1,0,...,0) is
    followed by (1,1,1,0,1,0,...,0). Raises Exhausted after the last vector
    (all ones packed at the highest coordinates).
    """
    support = list(z.support())
    w = len(support)
    n = z.length
    idx = None
    for pos in range(w - 1, -1, -1):
        if support[pos] < n - (w - 1 - pos):
            idx = pos
            break
    if idx is None:
        raise Exhausted("no further constant-weight vectors")
    support[idx] += 1
    for pos in range(idx + 1, w):
        support[pos] = support[idx] + (pos - idx)
    return BitVector.from_support(n, support)


def _min_pairwise_row_distance(G: GenMatrix) -> int:
    best = G.n + 1
    for a in range(G.k):
        ra = G.rows[a]
        for b in range(a + 1, G.k):
            d = (ra ^ G.rows[b]).bit_count()
            if d < best:
                best = d
    return best


def _all_one_column_last(G: GenMatrix) -> bool:
    return G.column_bits(G.n) == (1 << G.k) - 1


def grow_once(G_best: GenMatrix, z: BitVector, cfg: SearchConfig) -> GenMatrix:
    """Embed G_best with one extra information symbol whose redundancy row is z.

    PIR mode takes [I | P] to [[I, 0, P], [0, 1, z]]; S5 mode takes
    [I | P | 1] to [[I, 0, P, 1], [0, 1, z, 1]]. Both stay systematic.
    """
    k, n = G_best.k, G_best.n
    if not is_systematic(G_best):
        raise NotSystematic("growth requires a systematic matrix")
    if cfg.mode == MODE_PIR:
        expected_len, expected_weight = n - k, cfg.target_t - 1
    else:
        if not _all_one_column_last(G_best):
            raise InvalidInput("S5 mode requires an all-one final column")
        expected_len, expected_weight = n - k - 1, cfg.target_t - 2
    if z.length != expected_len:
        raise WeightMismatch(f"z length {z.length} != expected {expected_len}")
    if z.weight != expected_weight:
        raise WeightMismatch(f"z weight {z.weight} != expected {expected_weight}")

    kmask = (1 << k) - 1
    rows = [(r & kmask) | ((r >> k) << (k + 1)) for r in G_best.rows]
    new_row = (1 << k) | (z.bits << (k + 1))
    if cfg.mode == MODE_S5:
        new_row |= 1 << n
    rows.append(new_row)
    return GenMatrix(k + 1, n + 1, tuple(rows))


def _pad(G: GenMatrix, cfg: SearchConfig) -> GenMatrix:
    """Insert cfg.w zero columns at the end of the redundancy block."""
    if cfg.mode == MODE_PIR:
        return GenMatrix(G.k, G.n + cfg.w, G.rows)
    ones_bit = 1 << (G.n - 1)
    rows = tuple((r & (ones_bit - 1)) | (ones_bit << cfg.w) for r in G.rows)
    return GenMatrix(G.k, G.n + cfg.w, rows)


def _mode_check(G: GenMatrix, cfg: SearchConfig) -> tuple[bool, bool]:
    """(passes, inconclusive) for the mode's exact property check."""
    if cfg.mode == MODE_PIR:
        verdict = verify_pir(G, cfg.target_t, node_budget=cfg.node_budget)
        return verdict.is_yes, verdict.is_inconclusive
    st = check_property_st(collection_from_matrix(G), cfg.target_t)
    return st.is_yes, st.is_inconclusive


def _check_input(G: GenMatrix, cfg: SearchConfig) -> None:
    t = cfg.target_t
    if not is_systematic(G):
        raise InvalidInput("input matrix is not systematic [I | P]")
    weights = set(G.row_weights())
    if weights != {t}:
        raise InvalidInput(f"rows must all have weight {t}, found weights {sorted(weights)}")
    if cfg.mode == MODE_S5:
        if not _all_one_column_last(G):
            raise InvalidInput("S5 mode requires an all-one final column")
        st = check_property_st(collection_from_matrix(G), t)
        if not st.is_yes:
            raise InvalidInput(f"input lacks the S5 property: {st.reason}")
    else:
        verdict = verify_pir(G, t, node_budget=cfg.node_budget)
        if not verdict.is_yes:
            raise InvalidInput(f"input is not a verified {t}-PIR code: {verdict.reason}")


def run_lexical_growth(G: GenMatrix, cfg: SearchConfig) -> SearchReport:
    """Run the growth scan to the largest reachable dimension.

    Faithful loop semantics: the scan covers the constant-weight vectors of
    the padded redundancy width; a gate-passing candidate that fails the
    exact mode check returns immediately (unless continue_on_fail); if no
    candidate was ever accepted the input matrix itself is returned.
    """
    start = time.perf_counter()
    _check_input(G, cfg)
    t = cfg.target_t
    gate = t + 1 if t % 2 else t

    G_best = _pad(G, cfg)
    k0 = G.k
    k_best = k0
    if cfg.mode == MODE_PIR:
        z_len, z_weight = G_best.n - G_best.k, t - 1
    else:
        z_len, z_weight = G_best.n - G_best.k - 1, t - 2
    scan_total = math.comb(z_len, z_weight)

    steps: list[StepRecord] = []
    accepted: list[GenMatrix] = []
    inconclusive_checks = 0
    z = first_lexical(z_len, z_weight)
    i = 1
    scanned = 0
    terminal = "exhausted"
    while i <= scan_total:
        candidate = grow_once(G_best, z, cfg)
        scanned += 1
        if _min_pairwise_row_distance(candidate) >= gate:
            ok, inconclusive = _mode_check(candidate, cfg)
            if inconclusive:
                inconclusive_checks += 1
            if ok:
                G_best = candidate
                k_best += 1
                steps.append(StepRecord(z.support(), scanned, "accepted", k_best, candidate.n))
                accepted.append(candidate)
                scanned = 0
                if cfg.max_k is not None and k_best >= cfg.max_k:
                    terminal = "max-k-reached"
                    break
                if cfg.reset_on_accept:
                    z = first_lexical(z_len, z_weight)
                    i = 1
                    continue
            elif not cfg.continue_on_fail:
                steps.append(StepRecord(z.support(), scanned, "mode-check-failed", k_best, G_best.n))
                terminal = "early-return"
                break
        i += 1
        if i > scan_total:
            break
        z = lexical_next(z)

    if k_best == k0:
        G_best = G
    steps.append(StepRecord(None, scanned, terminal, k_best, G_best.n))
    elapsed = time.perf_counter() - start
    return SearchReport(
        best_matrix=G_best,
        k_best=k_best,
        n_best=G_best.n,
        per_step=tuple(steps),
        elapsed=elapsed,
        seed_k=k0,
        seed_n=G.n,
        w=cfg.w,
        mode=cfg.mode,
        target_t=t,
        inconclusive_checks=inconclusive_checks,
        accepted_matrices=tuple(accepted),
    )


@dataclass(frozen=True)
class CampaignEntry:
    k: int
    n: int
    matrix: GenMatrix
    provenance: str
    verified: bool = False


@dataclass(frozen=True)
class CampaignResult:
    t: int
    entries: tuple[CampaignEntry, ...]  # sorted by k
    runs: tuple[str, ...]

    def best(self) -> dict[int, int]:
        return {e.k: e.n for e in self.entries}


def run_campaign(
    seeds: list[GenMatrix],
    t: int = 5,
    ws: tuple[int, ...] = (1, 2),
    modes: tuple[str, ...] = (MODE_PIR, MODE_S5),
    max_k: int = 8,
    node_budget: int | None = None,
    include_shortening: bool = True,
    verify_entries: bool = True,
) -> CampaignResult:
    """Drive growth runs to closure and tabulate the best blocklength per k.

    Every accepted matrix is fed back as a fresh seed for the other (w,
    mode) combinations, shortening derives entries for smaller dimensions
    from every discovered code, and per-k minima are kept with provenance.
    Tabulated matrices are re-verified as t-PIR codes when verify_entries.
    """
    best: dict[int, CampaignEntry] = {}
    runs: list[str] = []
    seen: set[tuple[int, int, tuple[int, ...]]] = set()
    queue: deque[tuple[GenMatrix, str, tuple[int, str] | None]] = deque()

    def key(G: GenMatrix) -> tuple[int, int, tuple[int, ...]]:
        return (G.k, G.n, G.rows)

    def record(G: GenMatrix, provenance: str) -> None:
        if G.k > max_k:
            return
        cur = best.get(G.k)
        if cur is None or G.n < cur.n:
            best[G.k] = CampaignEntry(G.k, G.n, G, provenance)

    for idx, seed in enumerate(seeds, start=1):
        label = f"seed{idx}[{seed.n},{seed.k}]"
        record(seed, label)
        if key(seed) not in seen:
            seen.add(key(seed))
            queue.append((seed, label, None))

    while queue:
        G, label, origin = queue.popleft()
        for mode in modes:
            for w in ws:
                if origin == (w, mode):
                    continue
                cfg = SearchConfig(
                    w=w, mode=mode, target_t=t, node_budget=node_budget, max_k=max_k
                )
                try:
                    report = run_lexical_growth(G, cfg)
                except (InvalidInput, NotSystematic):
                    continue
                runs.append(
                    f"{label} alg(w={w},{mode}) -> [{report.n_best},{report.k_best}]"
                )
                for step_idx, mat in enumerate(report.accepted_matrices, start=1):
                    prov = f"{label}+alg(w={w},{mode})@{step_idx}"
                    record(mat, prov)
                    if key(mat) not in seen and mat.k < max_k:
                        seen.add(key(mat))
                        queue.append((mat, f"{prov}[{mat.n},{mat.k}]", (w, mode)))
                    elif key(mat) not in seen:
                        seen.add(key(mat))

    if include_shortening:
        for entry in sorted(best.values(), key=lambda e: -e.k):
            G = entry.matrix
            step = 0
            while G.k >= 2:
                step += 1
                G = shorten(G, G.k)
                record(G, f"{entry.provenance}-shorten^{step}")

    entries = []
    for k in sorted(best):
        e = best[k]
        verified = False
        if verify_entries:
            verified = verify_pir(e.matrix, t, node_budget=node_budget).is_yes
        entries.append(CampaignEntry(e.k, e.n, e.matrix, e.provenance, verified))
    return CampaignResult(t=t, entries=tuple(entries), runs=tuple(runs))


__all__ = [
    "MODE_PIR",
    "MODE_S5",
    "SearchConfig",
    "StepRecord",
    "SearchReport",
    "CampaignEntry",
    "CampaignResult",
    "first_lexical",
    "lexical_next",
    "grow_once",
    "run_lexical_growth",
    "run_campaign",
]
