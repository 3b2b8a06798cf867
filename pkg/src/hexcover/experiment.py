"""Seeded Monte-Carlo comparison of the 16 pure covers.

Rate constants are drawn uniformly from (0, N]^12, reduced to eta, and kept
when they land in case 4 (a > 0, b < 0).  Each accepted sample is tested
against every cover's certificate Theta-sum >= -c_m; per-sample hit bitmasks
are retained so that containment, uniqueness, and homotopy statistics can be
derived from the joint distribution.

Randomness comes from counter-based Philox streams keyed by (seed, block
index) over fixed-size raw blocks, so parallel and serial runs emit the same
sample sequence bit for bit.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from numpy.random import Generator, Philox

from .covers import all_covers
from .geometry import HEXAGON_POSITIVE, M, POINT_INDEX
from .model import _raw_hex_coefficients
from .circuits import PureCover
from . import geometry

RAW_BLOCK = 1 << 16  # raw draws per counter block; fixed, independent of chunking
DEFAULT_KEEP_THETA = (4, 9, 10, 12, 15)


@dataclass(frozen=True)
class SamplePlan:
    """Sampling configuration for one experiment run."""

    box_size: float = 1.0
    target_case4_samples: int = 1_000_000
    seed: int = 42
    chunk_size: int = 8  # blocks per worker task; never affects the sample stream
    threads: int = 1

    def __post_init__(self):
        if self.target_case4_samples < 1:
            raise ValueError("target_case4_samples must be >= 1")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")
        if self.box_size <= 0:
            raise ValueError("box_size must be positive")


class CoverEvaluator:
    """Vectorized Theta-sum evaluation for a set of covers.

    Per simplex the circuit number is exp(const + lambda . log c) with
    const = -sum lambda_i log lambda_i, so a whole block of samples costs one
    matrix product per simplex.
    """

    def __init__(self, covers: list[PureCover] | None = None):
        self.covers = list(covers) if covers is not None else all_covers()
        self._compiled = []
        for cover in self.covers:
            simplices = []
            for s in cover.simplices:
                lam = geometry.barycentric_coordinates(s, M)
                if lam is None:
                    raise ValueError(f"simplex {s.vertices} does not contain m")
                lams = np.array(lam.as_floats())
                idx = np.array([POINT_INDEX[v] for v in s.vertices])
                const = float(-(lams * np.log(lams)).sum())
                simplices.append((idx, lams, const))
            self._compiled.append(simplices)

    def theta_sums(self, log_coeffs: np.ndarray) -> np.ndarray:
        """(n_covers, k) Theta sums from a (10, k) array of log coefficients."""
        out = np.zeros((len(self._compiled), log_coeffs.shape[1]))
        for row, simplices in enumerate(self._compiled):
            for idx, lams, const in simplices:
                out[row] += np.exp(const + lams @ log_coeffs[idx])
        return out


_COEFF_ORDER = HEXAGON_POSITIVE


def case4_block(seed: int, block: int, box_size: float):
    """Accepted case-4 samples of one raw block.

    Returns (eta, a, b) with eta of shape (8, k).  Draws use kappa = N*(1-U)
    so every component is strictly positive; acceptance keeps a > 0, b < 0.
    """
    rng = Generator(Philox(key=[np.uint64(seed), np.uint64(block)]))
    kappa = box_size * (1.0 - rng.random((12, RAW_BLOCK)))
    return _accept_case(kappa, "case4")


def classified_block(seed: int, block: int, box_size: float, case: str):
    rng = Generator(Philox(key=[np.uint64(seed), np.uint64(block)]))
    kappa = box_size * (1.0 - rng.random((12, RAW_BLOCK)))
    return _accept_case(kappa, case)


def _accept_case(kappa: np.ndarray, case: str):
    K1 = (kappa[1] + kappa[2]) / kappa[0]
    K2 = (kappa[4] + kappa[5]) / kappa[3]
    K3 = (kappa[7] + kappa[8]) / kappa[6]
    K4 = (kappa[10] + kappa[11]) / kappa[9]
    k3, k6, k9, k12 = kappa[2], kappa[5], kappa[8], kappa[11]
    a = k3 * k12 - k6 * k9
    b = (K2 + K3) * k3 * k12 - (K1 + K4) * k6 * k9
    if case == "case4":
        mask = (a > 0) & (b < 0)
    elif case == "case2":
        mask = a < 0
    else:
        raise ValueError(f"unknown case filter {case!r}")
    eta = np.stack([K1, K2, K3, K4, k3, k6, k9, k12])[:, mask]
    return eta, a[mask], b[mask]


def hex_coefficient_arrays(eta: np.ndarray, a: np.ndarray, b: np.ndarray):
    """(10, k) coefficient array in canonical point order plus c_m array."""
    cmap = _raw_hex_coefficients(*eta, a, b)
    coeffs = np.stack([cmap[p] for p in _COEFF_ORDER])
    c_m = b * eta[0] * eta[1] * eta[2] * eta[4] * eta[5] * eta[7]
    return coeffs, c_m


def sample_case4(plan: SamplePlan, case: str = "case4") -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Stream accepted samples as (eta, coeffs, c_m) blocks until the target.

    Fully deterministic in ``plan.seed``: blocks are processed in counter
    order and the final block is truncated so that exactly
    ``target_case4_samples`` samples are emitted in total.
    """
    emitted = 0
    for eta, a, b in _iter_accept_blocks(plan, case):
        take = min(eta.shape[1], plan.target_case4_samples - emitted)
        if take < eta.shape[1]:
            eta, a, b = eta[:, :take], a[:take], b[:take]
        coeffs, c_m = hex_coefficient_arrays(eta, a, b)
        yield eta, coeffs, c_m
        emitted += take
        if emitted >= plan.target_case4_samples:
            return


def _iter_accept_blocks(plan: SamplePlan, case: str):
    """Accepted blocks in counter order, optionally produced by worker threads."""
    if plan.threads <= 1:
        block = 0
        while True:
            yield classified_block(plan.seed, block, plan.box_size, case)
            block += 1
    else:
        with ThreadPoolExecutor(max_workers=plan.threads) as pool:
            window = plan.threads * plan.chunk_size
            pending = {}
            next_submit = 0
            next_yield = 0
            while True:
                while next_submit < next_yield + window:
                    pending[next_submit] = pool.submit(
                        classified_block, plan.seed, next_submit, plan.box_size, case
                    )
                    next_submit += 1
                yield pending.pop(next_yield).result()
                next_yield += 1


@dataclass
class CoverHitMatrix:
    """Per-sample certificate hits for all 16 covers, plus aggregates.

    ``hits`` holds one uint16 bitmask per sample (bit i-1 set iff cover i
    certified the sample).  ``theta`` retains per-sample Theta sums for the
    covers in ``keep_theta`` so homotopies can reuse the same stream.
    """

    hits: np.ndarray
    counts: np.ndarray
    union_count: int
    n: int
    raw_draws: int
    plan: SamplePlan
    theta: dict[int, np.ndarray] = field(default_factory=dict)
    c_m: np.ndarray | None = None
    eta: np.ndarray | None = None

    @property
    def ratios(self) -> np.ndarray:
        return self.counts / self.n

    @property
    def union_ratio(self) -> float:
        return self.union_count / self.n

    def cover_hit(self, cover_id: int) -> np.ndarray:
        return (self.hits >> (cover_id - 1)) & 1


def evaluate_covers(plan: SamplePlan, keep_theta=DEFAULT_KEEP_THETA,
                    keep_eta: bool = False) -> CoverHitMatrix:
    """Run the sampling plan and test every cover's certificate per sample."""
    evaluator = CoverEvaluator()
    keep_theta = tuple(keep_theta)
    hit_chunks, theta_chunks = [], {cid: [] for cid in keep_theta}
    cm_chunks, eta_chunks = [], []
    emitted, raw = 0, 0
    for eta, a, b in _iter_accept_blocks(plan, "case4"):
        raw += RAW_BLOCK
        take = min(eta.shape[1], plan.target_case4_samples - emitted)
        if take < eta.shape[1]:
            eta, a, b = eta[:, :take], a[:take], b[:take]
        coeffs, c_m = hex_coefficient_arrays(eta, a, b)
        theta = evaluator.theta_sums(np.log(coeffs))
        hits = (theta >= -c_m).astype(np.uint16)
        mask = np.zeros(take, dtype=np.uint16)
        for i in range(16):
            mask |= hits[i] << np.uint16(i)
        hit_chunks.append(mask)
        for cid in keep_theta:
            theta_chunks[cid].append(theta[cid - 1].copy())
        cm_chunks.append(c_m)
        if keep_eta:
            eta_chunks.append(eta)
        emitted += take
        if emitted >= plan.target_case4_samples:
            break
    hits = np.concatenate(hit_chunks)
    counts = np.array([int(((hits >> i) & 1).sum()) for i in range(16)])
    return CoverHitMatrix(
        hits=hits,
        counts=counts,
        union_count=int((hits != 0).sum()),
        n=emitted,
        raw_draws=raw,
        plan=plan,
        theta={cid: np.concatenate(cs) for cid, cs in theta_chunks.items()},
        c_m=np.concatenate(cm_chunks),
        eta=np.concatenate(eta_chunks, axis=1) if keep_eta else None,
    )


@dataclass(frozen=True)
class ComparisonRecord:
    """Per-cover hit bookkeeping against a baseline cover."""

    cover_id: int
    versus: int
    plus: int    # certified by cover but not by baseline
    minus: int   # certified by baseline but not by cover
    zero: int    # certified by neither


def compare_vs_baseline(matrix: CoverHitMatrix, baseline: int = 9) -> list[ComparisonRecord]:
    if not 1 <= baseline <= 16:
        raise ValueError(f"baseline cover id out of range: {baseline}")
    base = matrix.cover_hit(baseline).astype(bool)
    records = []
    for cid in range(1, 17):
        mine = matrix.cover_hit(cid).astype(bool)
        records.append(ComparisonRecord(
            cover_id=cid,
            versus=baseline,
            plus=int((mine & ~base).sum()),
            minus=int((base & ~mine).sum()),
            zero=int((~mine & ~base).sum()),
        ))
    return records


@dataclass
class ContainmentReport:
    """Pairwise set-difference counts and the derived containment poset."""

    matrix: np.ndarray            # matrix[i][j] = |CC(i+1) \ CC(j+1)|
    unique_counts: np.ndarray     # samples certified by exactly one cover
    threshold: int
    near_band: int                # upper count for the dashed near-containment edges
    edges: list[tuple[int, int]]        # A contained in B (count <= threshold)
    near_edges: list[tuple[int, int]]   # 0 < count <= near_band
    equal_groups: list[list[int]]       # covers with identical certified sets
    hasse_edges: list[tuple[int, int]]  # transitive reduction over group representatives


def containment_analysis(matrix: CoverHitMatrix, threshold: int = 0) -> ContainmentReport:
    """|A\\B| counts, containment edges, uniqueness, and the Hasse reduction."""
    bits = np.stack([matrix.cover_hit(cid) for cid in range(1, 17)]).astype(np.int64)
    inter = bits @ bits.T
    diff = matrix.counts[:, None] - inter  # |A \ B|
    np.fill_diagonal(diff, 0)
    per_sample_total = bits.sum(axis=0)
    unique_mask = per_sample_total == 1
    unique_counts = bits[:, unique_mask].sum(axis=1)
    near_band = max(threshold, math.ceil(1e-7 * matrix.n))
    edges, near_edges = [], []
    for i in range(16):
        for j in range(16):
            if i == j:
                continue
            if diff[i, j] <= threshold:
                edges.append((i + 1, j + 1))
            elif diff[i, j] <= near_band:
                near_edges.append((i + 1, j + 1))

    # Merge equal covers (mutual containment) into one node.
    parent = list(range(17))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if (b, a) in set(edges) and find(a) != find(b):
            parent[find(b)] = find(a)
    groups: dict[int, list[int]] = {}
    for cid in range(1, 17):
        groups.setdefault(find(cid), []).append(cid)
    equal_groups = sorted(g for g in groups.values())
    rep = {cid: min(groups[find(cid)]) for cid in range(1, 17)}

    strict = {(rep[a], rep[b]) for a, b in edges if rep[a] != rep[b]}
    hasse = [
        (a, b) for a, b in sorted(strict)
        if not any((a, c) in strict and (c, b) in strict for c in set(rep.values()))
    ]
    return ContainmentReport(
        matrix=diff,
        unique_counts=unique_counts,
        threshold=threshold,
        near_band=near_band,
        edges=sorted(edges),
        near_edges=sorted(near_edges),
        equal_groups=equal_groups,
        hasse_edges=hasse,
    )


@dataclass(frozen=True)
class HomotopyCurve:
    """Certified-sample ratios along a weighted-cover parameter grid."""

    cover_ids: tuple[int, ...]
    grid: tuple            # (t,) tuples for linear, (s, t) for simplicial
    ratios: tuple[float, ...]


def _require_theta(matrix: CoverHitMatrix, cover_ids):
    for cid in cover_ids:
        if cid not in matrix.theta:
            raise ValueError(f"run did not retain Theta sums for cover {cid}")
    if matrix.c_m is None:
        raise ValueError("run did not retain c_m")


def linear_homotopy(matrix: CoverHitMatrix, a: int, b: int, dt: float = 0.05) -> HomotopyCurve:
    """Hit ratios of (1-t)*Theta(a) + t*Theta(b) >= -c_m on the stored stream."""
    steps = round(1.0 / dt)
    if abs(steps * dt - 1.0) > 1e-9:
        raise ValueError(f"step {dt} does not divide 1 evenly")
    _require_theta(matrix, (a, b))
    ta, tb, neg_cm = matrix.theta[a], matrix.theta[b], -matrix.c_m
    grid, ratios = [], []
    for k in range(steps + 1):
        t = k / steps
        ratios.append(float(((1.0 - t) * ta + t * tb >= neg_cm).sum()) / matrix.n)
        grid.append((t,))
    return HomotopyCurve((a, b), tuple(grid), tuple(ratios))


def simplicial_homotopy(matrix: CoverHitMatrix, a: int, b: int, c: int,
                        delta: float = 1 / 16) -> HomotopyCurve:
    """Ratios of s*Theta(a) + t*Theta(b) + (1-s-t)*Theta(c) over the triangle grid."""
    steps = round(1.0 / delta)
    if abs(steps * delta - 1.0) > 1e-9:
        raise ValueError(f"step {delta} does not divide 1 evenly")
    _require_theta(matrix, (a, b, c))
    ta, tb, tc, neg_cm = matrix.theta[a], matrix.theta[b], matrix.theta[c], -matrix.c_m
    grid, ratios = [], []
    for i in range(steps + 1):
        for j in range(steps + 1 - i):
            s, t = i / steps, j / steps
            theta = s * ta + t * tb + (1.0 - s - t) * tc
            ratios.append(float((theta >= neg_cm).sum()) / matrix.n)
            grid.append((s, t))
    return HomotopyCurve((a, b, c), tuple(grid), tuple(ratios))


def case4_eta_points(n: int, seed: int = 0, box_size: float = 1.0):
    """The first n accepted case-4 samples of a stream, as EtaPoint objects."""
    from .model import EtaPoint

    plan = SamplePlan(box_size=box_size, target_case4_samples=n, seed=seed)
    points = []
    for eta, _, _ in sample_case4(plan):
        points.extend(EtaPoint(*map(float, eta[:, j])) for j in range(eta.shape[1]))
    return points


def binomial_sigma(p: float, n: int) -> float:
    """Standard error of a ratio estimate."""
    return math.sqrt(p * (1.0 - p) / n)
