"""
Kazhdan-Lusztig polynomials P_{x,y}(q) and mu-coefficients for S_n.

The recursion picks a left descent s of the top element w (sw < w), puts
v = sw and uses

    P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
              - sum_{z < v, sz < z} mu(z, v) q^{(l(w)-l(z))/2} P_{x,z}

with c = 1 if sx < x and c = 0 otherwise. Everything stays inside the lower
order ideal of the top element, generated on demand.

>>> str(kl_polynomial(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2))))
'1 + q'
"""
from __future__ import annotations

import dataclasses
import logging
import threading
from collections import deque
from itertools import zip_longest

import networkx as nx

from .cells import CellKind, canonical_partition
from .errors import GuardExceededError, NotComparableError, SizeMismatchError
from .perm import Permutation, bruhat_leq, covers_down, left_multiply, longest_element, symmetric_group

logger = logging.getLogger(__name__)

DEFAULT_IDEAL_MAX = 500_000
MAX_KL_CELLS_N = 5


@dataclasses.dataclass(frozen=True)
class KLPolynomial:
    """Integer polynomial in q; ``coefficients[d]`` is the coefficient of q^d."""
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def __add__(self, other: KLPolynomial) -> KLPolynomial:
        return KLPolynomial(tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)))

    def __sub__(self, other: KLPolynomial) -> KLPolynomial:
        return KLPolynomial(tuple(a - b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)))

    def shift(self, d: int) -> KLPolynomial:
        """Multiply by q^d."""
        if self.is_zero or d == 0:
            return self
        return KLPolynomial((0,) * d + self.coefficients)

    def scale(self, c: int) -> KLPolynomial:
        return KLPolynomial(tuple(c * a for a in self.coefficients))

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = "" if d == 0 else "q" if d == 1 else f"q^{d}"
            magnitude = abs(c)
            body = str(magnitude) if not power else power if magnitude == 1 else f"{magnitude}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


ONE = KLPolynomial((1,))
ZERO = KLPolynomial()


@dataclasses.dataclass(frozen=True)
class MuValue:
    value: int

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value


def lower_ideal(top: Permutation, max_size: int = DEFAULT_IDEAL_MAX) -> frozenset[Permutation]:
    """{z : z <= top}, by walking down cover relations."""
    seen = {top}
    queue = deque([top])
    while queue:
        z = queue.popleft()
        for lower in covers_down(z):
            if lower not in seen:
                if len(seen) >= max_size:
                    raise GuardExceededError("ideal_max", max_size, f"order ideal below {top} is larger")
                seen.add(lower)
                queue.append(lower)
    return frozenset(seen)


class KazhdanLusztigTable:
    """
    Memoised P_{x,w} for every w below a fixed top element.

    One table may serve many queries with the same top; access is serialised
    by a lock, and answers never depend on what was computed before.
    """

    def __init__(self, top: Permutation, max_ideal: int = DEFAULT_IDEAL_MAX):
        self.top = top
        self.max_ideal = max_ideal
        self.ideal = lower_ideal(top, max_ideal)
        logger.debug("order ideal below %s has %d elements", top, len(self.ideal))
        self._polynomials: dict[tuple[Permutation, Permutation], KLPolynomial] = {}
        self._below: dict[Permutation, tuple[Permutation, ...]] = {}
        self._partners: dict[Permutation, tuple[tuple[Permutation, int], ...]] = {}
        self._lock = threading.RLock()

    def _check(self, x: Permutation, w: Permutation):
        if x.n != w.n or w.n != self.top.n:
            raise SizeMismatchError(f"table lives in S_{self.top.n}")
        if w not in self.ideal:
            raise NotComparableError(f"{w} is not below the table top {self.top}")

    def polynomial(self, x: Permutation, w: Permutation) -> KLPolynomial:
        self._check(x, w)
        with self._lock:
            return self._polynomial(x, w)

    def mu(self, x: Permutation, w: Permutation) -> MuValue:
        self._check(x, w)
        gap = w.length - x.length
        if gap <= 0 or gap % 2 == 0:
            return MuValue(0)
        with self._lock:
            return MuValue(self._polynomial(x, w)[(gap - 1) // 2])

    def mu_partners(self, w: Permutation) -> tuple[tuple[Permutation, int], ...]:
        """All z < w with mu(z, w) != 0, paired with that mu."""
        self._check(w, w)
        with self._lock:
            return self._mu_partners(w)

    def _strictly_below(self, w: Permutation) -> tuple[Permutation, ...]:
        below = self._below.get(w)
        if below is None:
            below = tuple(sorted(lower_ideal(w, self.max_ideal) - {w}, key=lambda z: z.sort_key))
            self._below[w] = below
        return below

    def _mu_partners(self, w: Permutation) -> tuple[tuple[Permutation, int], ...]:
        partners = self._partners.get(w)
        if partners is None:
            found = []
            for z in self._strictly_below(w):
                gap = w.length - z.length
                if gap % 2 == 1:
                    m = self._polynomial(z, w)[(gap - 1) // 2]
                    if m:
                        found.append((z, m))
            partners = self._partners[w] = tuple(found)
        return partners

    def _polynomial(self, x: Permutation, w: Permutation) -> KLPolynomial:
        if x == w:
            return ONE
        key = (x, w)
        cached = self._polynomials.get(key)
        if cached is not None:
            return cached
        if not bruhat_leq(x, w):
            result = ZERO
        else:
            s = min(w.left_descents)
            v = left_multiply(s, w)
            sx = left_multiply(s, x)
            if s in x.left_descents:
                result = self._polynomial(sx, v) + self._polynomial(x, v).shift(1)
            else:
                result = self._polynomial(sx, v).shift(1) + self._polynomial(x, v)
            for z, m in self._mu_partners(v):
                if s in z.left_descents and bruhat_leq(x, z):
                    result = result - self._polynomial(x, z).shift((w.length - z.length) // 2).scale(m)
        self._polynomials[key] = result
        return result


def kl_polynomial(
    x: Permutation, y: Permutation, *, max_ideal: int = DEFAULT_IDEAL_MAX, table: KazhdanLusztigTable | None = None
) -> KLPolynomial:
    """P_{x,y}; the zero polynomial unless x <= y."""
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    if not bruhat_leq(x, y):
        return ZERO
    if table is None or y not in table.ideal:
        table = KazhdanLusztigTable(y, max_ideal)
    return table.polynomial(x, y)


def mu(
    x: Permutation, y: Permutation, *, max_ideal: int = DEFAULT_IDEAL_MAX, table: KazhdanLusztigTable | None = None
) -> MuValue:
    """Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}; zero for even length gaps."""
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    gap = y.length - x.length
    if gap <= 0 or gap % 2 == 0 or not bruhat_leq(x, y):
        return MuValue(0)
    return MuValue(kl_polynomial(x, y, max_ideal=max_ideal, table=table)[(gap - 1) // 2])


def kl_cells(
    n: int, kind: CellKind | str = CellKind.RIGHT, *, max_n: int = MAX_KL_CELLS_N, max_ideal: int = DEFAULT_IDEAL_MAX
) -> list[list[Permutation]]:
    """
    Cells from the Kazhdan-Lusztig preorders rather than from tableaux.

    Whenever mu(z, y) != 0 the pair is joined by an arrow a -> b for each
    orientation with D(a) not contained in D(b); D is the right descent set
    for right cells and the left descent set for left cells. Cells are the
    strongly connected components; two-sided cells use both kinds of arrows.
    """
    kind = CellKind(kind)
    if n > max_n:
        raise GuardExceededError("kl_cells_n", max_n, f"S_{n} is too large for the cell preorder")
    table = KazhdanLusztigTable(longest_element(n), max_ideal)
    descent_maps = {
        CellKind.RIGHT: [lambda w: w.right_descents],
        CellKind.LEFT: [lambda w: w.left_descents],
        CellKind.TWO_SIDED: [lambda w: w.right_descents, lambda w: w.left_descents],
    }[kind]

    graph = nx.DiGraph()
    elements = list(symmetric_group(n))
    graph.add_nodes_from(elements)
    for y in elements:
        for z, _ in table.mu_partners(y):
            for descents in descent_maps:
                if not descents(z) <= descents(y):
                    graph.add_edge(z, y)
                if not descents(y) <= descents(z):
                    graph.add_edge(y, z)
    logger.debug("W-graph of S_%d has %d arrows", n, graph.number_of_edges())
    return canonical_partition(nx.strongly_connected_components(graph))
