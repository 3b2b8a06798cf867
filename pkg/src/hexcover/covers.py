"""Enumeration of pure circuit covers and the labeled 16-cover fixture.

A pure cover partitions a point configuration into simplices of 2 or 3 points
that each contain the designated interior point in their relative interior.
For the hexagonal face there are exactly 16 such covers; their labels follow
the published enumeration and are stored as a reviewed fixture file.
"""

from __future__ import annotations

import itertools
from importlib import resources

from .circuits import PureCover
from .geometry import (
    HEXAGON_POSITIVE,
    M,
    POINT_INDEX,
    DegenerateSimplexError,
    LatticePoint,
    Simplex,
    contains_in_relative_interior,
)

FIXTURE_RESOURCE = "cover_fixture.txt"


def _valid_simplex(points: tuple[LatticePoint, ...], m: LatticePoint) -> Simplex | None:
    try:
        s = Simplex(points)
    except DegenerateSimplexError:
        return None
    return s if contains_in_relative_interior(s, m) else None


def enumerate_pure_covers(points, m, _assign_ids: bool = True) -> list[PureCover]:
    """All partitions of ``points`` into m-containing simplices of size 2 or 3.

    Brute force with early pruning: the lexicographically smallest uncovered
    point anchors each block, and a block is rejected the moment it cannot
    contain ``m``.  Output is sorted by canonical key; the hexagon instance
    additionally receives the fixture ids.
    """
    points = [LatticePoint(*p) for p in points]
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    if m in points:
        raise ValueError("interior point must not be among the positive points")

    covers: list[tuple[Simplex, ...]] = []

    def recurse(remaining: tuple[LatticePoint, ...], blocks: tuple[Simplex, ...]):
        if not remaining:
            covers.append(blocks)
            return
        anchor, rest = remaining[0], remaining[1:]
        for k in (1, 2):
            for combo in itertools.combinations(rest, k):
                s = _valid_simplex((anchor, *combo), m)
                if s is None:
                    continue
                left = tuple(p for p in rest if p not in combo)
                recurse(left, blocks + (s,))

    recurse(tuple(sorted(points)), ())

    hexagon = set(points) == set(HEXAGON_POSITIVE) and m == M
    id_map = {key: i for i, key in fixture_keys().items()} if hexagon and _assign_ids else {}
    result = []
    for i, blocks in enumerate(covers):
        key = _key_of_blocks(blocks, points)
        result.append((key, blocks))
    result.sort(key=lambda kv: kv[0])
    out = []
    for rank, (key, blocks) in enumerate(result, start=1):
        cid = id_map.get(key, rank)
        out.append(PureCover(cid, tuple(blocks)))
    return out


def _key_of_blocks(blocks, points) -> str:
    index = POINT_INDEX if set(points) == set(HEXAGON_POSITIVE) else {
        p: i for i, p in enumerate(sorted(points))
    }
    parts = sorted(
        "-".join(str(i) for i in sorted(index[v] for v in s.vertices)) for s in blocks
    )
    return "|".join(parts)


def canonical_key(cover: PureCover) -> str:
    """Deterministic serialization: sorted index blocks joined with '|'.

    Indices refer to the canonical hexagon point order; invariant under any
    permutation of blocks or of vertices within a block.
    """
    return _key_of_blocks(cover.simplices, HEXAGON_POSITIVE)


def parse_cover(key: str, id: int = 0) -> PureCover:
    """Inverse of :func:`canonical_key` for hexagon covers."""
    simplices = []
    for part in key.split("|"):
        idx = [int(t) for t in part.split("-")]
        simplices.append(Simplex(tuple(HEXAGON_POSITIVE[i] for i in idx)))
    return PureCover(id, tuple(simplices))


def fixture_keys() -> dict[int, str]:
    """id -> canonical key mapping read from the reviewed fixture file."""
    text = resources.files("hexcover.data").joinpath(FIXTURE_RESOURCE).read_text()
    mapping: dict[int, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        sid, key = line.split(":")
        mapping[int(sid)] = key.strip()
    return mapping


def cover_fixture(id: int) -> PureCover:
    """The labeled pure cover CC(id), id in 1..16."""
    keys = fixture_keys()
    if id not in keys:
        raise ValueError(f"cover id must be in 1..16, got {id}")
    return parse_cover(keys[id], id)


def all_covers() -> list[PureCover]:
    """The 16 labeled hexagon covers, ordered by id."""
    return [cover_fixture(i) for i in range(1, 17)]


_SPECIAL_TRIANGLES = (
    frozenset({LatticePoint(0, 0), LatticePoint(2, 0), LatticePoint(3, 2)}),
    frozenset({LatticePoint(2, 2), LatticePoint(4, 2), LatticePoint(1, 0)}),
)


def census(covers) -> dict[str, int]:
    """Structure counts: five-segment, special-triangle, and row-spanning covers."""
    counts = {"five-segment": 0, "special-triangle": 0, "row-spanning": 0}
    for c in covers:
        if all(len(s) == 2 for s in c.simplices):
            counts["five-segment"] += 1
        elif any(frozenset(s.vertices) in _SPECIAL_TRIANGLES for s in c.simplices):
            counts["special-triangle"] += 1
        else:
            counts["row-spanning"] += 1
    return counts
