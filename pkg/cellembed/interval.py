"""
Bruhat intervals [x, y] as explicit graded posets.

Intervals are grown by breadth-first search along cover relations, filtered
by comparability with the far end, so S_N itself is never materialised.
"""
from __future__ import annotations

import dataclasses
import functools
import logging
from collections import Counter, defaultdict, deque
from collections.abc import Iterable

import networkx as nx

from .errors import GuardExceededError, NotComparableError, SizeMismatchError
from .perm import Permutation, bruhat_leq, cover_swaps, is_common_embedding, pattern_at, swap_positions

logger = logging.getLogger(__name__)

DEFAULT_INTERVAL_MAX = 100_000
DEFAULT_ISO_MAX = 2_000

Signature = tuple[int, int, int]


@dataclasses.dataclass(frozen=True, eq=False)
class BruhatInterval:
    bottom: Permutation
    top: Permutation
    elements: tuple[Permutation, ...]
    cover_edges: tuple[tuple[Permutation, Permutation], ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, z: Permutation) -> bool:
        return z in self.rank_of

    @functools.cached_property
    def rank_of(self) -> dict[Permutation, int]:
        base = self.bottom.length
        return {z: z.length - base for z in self.elements}

    @functools.cached_property
    def up(self) -> dict[Permutation, frozenset[Permutation]]:
        result = defaultdict(set)
        for low, high in self.cover_edges:
            result[low].add(high)
        return {z: frozenset(result[z]) for z in self.elements}

    @functools.cached_property
    def down(self) -> dict[Permutation, frozenset[Permutation]]:
        result = defaultdict(set)
        for low, high in self.cover_edges:
            result[high].add(low)
        return {z: frozenset(result[z]) for z in self.elements}

    def rank_sizes(self) -> tuple[int, ...]:
        counts = Counter(self.rank_of.values())
        return tuple(counts[r] for r in range(self.top.length - self.bottom.length + 1))

    def signature(self, z: Permutation) -> Signature:
        return self.rank_of[z], len(self.up[z]), len(self.down[z])

    def to_networkx(self) -> nx.DiGraph:
        """Hasse diagram, edges pointing up, nodes tagged with their rank."""
        graph = nx.DiGraph()
        for z in self.elements:
            graph.add_node(z, rank=self.rank_of[z])
        graph.add_edges_from(self.cover_edges)
        return graph


def _swap_stays_inside(z: Permutation, i: int, j: int, far: Permutation, upward: bool) -> bool:
    # swapping positions i < j changes the rank counts of z only on one
    # rectangle, by one; elsewhere z already sits on the right side of far
    low, high = sorted((z(i), z(j)))
    kz, kf = z.rank_matrix.k, far.rank_matrix.k
    rectangle = ((p, q) for p in range(i - 1, j - 1) for q in range(low - 1, high - 1))
    if upward:
        return all(kz[p][q] > kf[p][q] for p, q in rectangle)
    return all(kf[p][q] > kz[p][q] for p, q in rectangle)


def enumerate_interval(
    x: Permutation, y: Permutation, max_size: int = DEFAULT_INTERVAL_MAX, *, downward: bool = False
) -> BruhatInterval:
    """
    All z with x <= z <= y and the covers between them.

    The search climbs from x (or, with ``downward``, descends from y) and stops
    with ``GuardExceededError`` once more than ``max_size`` elements turn up.
    """
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    if not bruhat_leq(x, y):
        raise NotComparableError(f"{x} is not below {y}")

    start, far = (y, x) if downward else (x, y)
    seen = {start}
    queue = deque([start])
    edges = []
    while queue:
        z = queue.popleft()
        for i, j in cover_swaps(z, upward=not downward):
            if not _swap_stays_inside(z, i, j, far, not downward):
                continue
            nxt = swap_positions(z, i, j)
            edges.append((nxt, z) if downward else (z, nxt))
            if nxt not in seen:
                if len(seen) >= max_size:
                    raise GuardExceededError("interval_max", max_size, f"[{x}, {y}] has more elements")
                seen.add(nxt)
                queue.append(nxt)
    logger.debug("interval [%s, %s]: %d elements, %d covers", x, y, len(seen), len(edges))
    elements = tuple(sorted(seen, key=lambda z: z.sort_key))
    return BruhatInterval(x, y, elements, tuple(edges))


def posets_isomorphic(a: BruhatInterval, b: BruhatInterval, max_size: int = DEFAULT_ISO_MAX) -> bool:
    """
    Whether a rank-preserving order isomorphism a -> b exists.

    Elements of a are placed level by level; a candidate image must share the
    (rank, up-degree, down-degree) signature and its lower covers must be
    exactly the images of the lower covers already placed.
    """
    for interval in (a, b):
        if interval.size > max_size:
            raise GuardExceededError("iso_max", max_size, f"interval of size {interval.size}")
    if a.size != b.size or a.rank_sizes() != b.rank_sizes():
        return False
    if Counter(map(a.signature, a.elements)) != Counter(map(b.signature, b.elements)):
        return False

    pool_of: dict[Signature, list[Permutation]] = defaultdict(list)
    for z in b.elements:
        pool_of[b.signature(z)].append(z)
    order = sorted(a.elements, key=lambda z: (a.signature(z), z.word))
    pools = [pool_of[a.signature(z)] for z in order]

    mapping: dict[Permutation, Permutation] = {}
    used: set[Permutation] = set()
    cursor = [0] * len(order)
    assigned: list[Permutation | None] = [None] * len(order)
    i = 0
    while i < len(order):
        element = order[i]
        if assigned[i] is not None:
            used.discard(assigned[i])
            del mapping[element]
            assigned[i] = None
        images_below = {mapping[low] for low in a.down[element]}
        pool = pools[i]
        while cursor[i] < len(pool):
            candidate = pool[cursor[i]]
            cursor[i] += 1
            if candidate not in used and b.down[candidate] == images_below:
                assigned[i] = candidate
                mapping[element] = candidate
                used.add(candidate)
                break
        if assigned[i] is None:
            cursor[i] = 0
            i -= 1
            if i < 0:
                return False
            continue
        i += 1
    return True


def embedding_report(
    x: Permutation,
    y: Permutation,
    v: Permutation,
    w: Permutation,
    positions: Iterable[int],
    *,
    full: bool = False,
    interval_max: int = DEFAULT_INTERVAL_MAX,
    iso_max: int = DEFAULT_ISO_MAX,
) -> dict[str, bool]:
    """One verdict per clause of the interval pattern embedding definition."""
    if x.n != y.n or v.n != w.n:
        raise SizeMismatchError("x, y and v, w must be of equal sizes")
    phi = tuple(sorted(positions))
    inside = set(phi)
    report = {
        "comparable_xy": bruhat_leq(x, y),
        "comparable_vw": bruhat_leq(v, w),
        "pattern_x": len(phi) == x.n and pattern_at(v, phi) == x,
        "pattern_y": len(phi) == y.n and pattern_at(w, phi) == y,
        "agree_outside": all(v(i) == w(i) for i in range(1, v.n + 1) if i not in inside),
        "length_difference": w.length - v.length == y.length - x.length,
    }
    if full and report["comparable_xy"] and report["comparable_vw"]:
        report["isomorphic"] = posets_isomorphic(
            enumerate_interval(x, y, interval_max), enumerate_interval(v, w, interval_max), iso_max
        )
    return report


def is_interval_pattern_embedding(
    x: Permutation,
    y: Permutation,
    v: Permutation,
    w: Permutation,
    positions: Iterable[int],
    *,
    full: bool = False,
    interval_max: int = DEFAULT_INTERVAL_MAX,
    iso_max: int = DEFAULT_ISO_MAX,
) -> bool:
    """
    [x, y] embeds into [v, w] along ``positions``.

    Once the common embedding holds, equal length differences already force
    the intervals to be isomorphic; ``full`` runs the isomorphism search instead.
    """
    if not bruhat_leq(x, y):
        raise NotComparableError(f"{x} is not below {y}")
    if not bruhat_leq(v, w):
        raise NotComparableError(f"{v} is not below {w}")
    positions = tuple(positions)
    if not is_common_embedding(x, y, v, w, positions):
        return False
    if full:
        return posets_isomorphic(
            enumerate_interval(x, y, interval_max), enumerate_interval(v, w, interval_max), iso_max
        )
    return w.length - v.length == y.length - x.length
