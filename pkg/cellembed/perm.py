"""
Permutations of {1, ..., n} in one-line notation.

Every permutation is stored 1-based: ``Permutation((3, 1, 4, 2))`` is the word
[3142]. Zero-based words exist only at the text boundary, through ``parse`` and
``format_permutation`` with ``Base.ZERO``.

The text formats are:
- verbose: integers separated by whitespace or commas, optionally bracketed,
  e.g. ``3 1 4 2`` or ``[3, 1, 4, 2]``;
- compact: one letter per entry, optionally bracketed, e.g. ``[3142]`` or
  ``[895621a743cb]``. Letters run 1-9 then a=10 ... z=35 (one-based) or 0-9 then
  a=10 ... (zero-based), so compact words have at most 35 letters.

>>> w = parse("[3142]")
>>> w.word, length(w)
((3, 1, 4, 2), 3)
>>> format_permutation(inverse(w))
'[2413]'
>>> format_permutation(parse("[012]", Base.ZERO))
'[123]'
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import itertools
import random
import re
from collections.abc import Iterable, Iterator

from .errors import IndexSetError, PermutationFormatError, SizeMismatchError

COMPACT_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_COMPACT = 35

_SEPARATORS = re.compile(r"[\s,]+")


class Base(str, enum.Enum):
    """Numbering of letters at the I/O boundary."""
    ONE = "one"
    ZERO = "zero"

    @property
    def offset(self) -> int:
        """The smallest letter: 1 for one-based words, 0 for zero-based ones."""
        return 1 if self is Base.ONE else 0

    @classmethod
    def coerce(cls, value) -> Base:
        if isinstance(value, Base):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise PermutationFormatError(f"unknown base {value!r}, expected 'one' or 'zero'") from None


def _check_bijection(word: tuple[int, ...]):
    n = len(word)
    if n == 0:
        raise PermutationFormatError("empty permutation")
    seen = [False] * (n + 1)
    for value in word:
        if not isinstance(value, int) or not 1 <= value <= n:
            raise PermutationFormatError(f"value {value!r} out of range 1..{n}")
        if seen[value]:
            raise PermutationFormatError(f"duplicate value {value}")
        seen[value] = True


@dataclasses.dataclass(frozen=True)
class RankMatrix:
    """
    The counts k[p][q] = #{i <= p : w(i) <= q}, stored 0-based, read 1-based.

    >>> RankMatrix.of(Permutation((2, 1)))[1, 1]
    0
    """
    k: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, w: Permutation) -> RankMatrix:
        n = w.n
        rows = []
        row = [0] * n
        for value in w.word:
            row = row[:]
            for q in range(value - 1, n):
                row[q] += 1
            rows.append(tuple(row))
        return cls(tuple(rows))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.k[p - 1][q - 1]

    def dominates(self, other: RankMatrix) -> bool:
        """Entrywise >=; x <= y in Bruhat order iff k^x dominates k^y."""
        return all(a >= b for row, other_row in zip(self.k, other.k) for a, b in zip(row, other_row))


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        _check_bijection(word)

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> Permutation:
        # Skips validation; only for words built from an existing permutation.
        perm = object.__new__(cls)
        object.__setattr__(perm, "word", word)
        return perm

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self) -> str:
        return format_permutation(self)

    @functools.cached_property
    def length(self) -> int:
        word = self.word
        return sum(1 for i, j in itertools.combinations(range(len(word)), 2) if word[i] > word[j])

    @functools.cached_property
    def rank_matrix(self) -> RankMatrix:
        return RankMatrix.of(self)

    @functools.cached_property
    def right_descents(self) -> frozenset[int]:
        """Positions i with w(i) > w(i+1), i.e. w * s_i < w."""
        word = self.word
        return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])

    @functools.cached_property
    def left_descents(self) -> frozenset[int]:
        """Values i with i+1 left of i, i.e. s_i * w < w."""
        return inverse(self).right_descents

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order: by length, ties by lexicographic word."""
        return self.length, self.word


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    return (Permutation._trusted(word) for word in itertools.permutations(range(1, n + 1)))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    word = list(range(1, n + 1))
    rng.shuffle(word)
    return Permutation._trusted(tuple(word))


# --- text formats -----------------------------------------------------------

def _parse_compact(body: str) -> list[int]:
    if len(body) > MAX_COMPACT:
        raise PermutationFormatError(
            f"compact form holds at most {MAX_COMPACT} letters, got {len(body)}; use the verbose form"
        )
    values = []
    for char in body.lower():
        index = COMPACT_DIGITS.find(char)
        if index < 0:
            raise PermutationFormatError(f"invalid letter {char!r} in compact permutation")
        values.append(index)
    return values


def _parse_verbose(body: str) -> list[int]:
    try:
        return [int(token) for token in _SEPARATORS.split(body) if token]
    except ValueError:
        raise PermutationFormatError(f"not a list of integers: {body!r}") from None


def parse(text: str, base: Base | str = Base.ONE) -> Permutation:
    """
    Read a permutation in verbose or compact form.

    Text with separators (whitespace or commas) is verbose, text without them is
    compact. Brackets are optional in both.

    >>> parse("[895621a743cb]").word
    (8, 9, 5, 6, 2, 1, 10, 7, 4, 3, 12, 11)
    >>> parse("3, 1, 4, 2").word
    (3, 1, 4, 2)
    """
    base = Base.coerce(base)
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if not body:
        raise PermutationFormatError("empty permutation")
    values = _parse_verbose(body) if _SEPARATORS.search(body) else _parse_compact(body)

    low, high = base.offset, len(values) - 1 + base.offset
    seen = set()
    for value in values:
        if not low <= value <= high:
            raise PermutationFormatError(f"value {value} out of range {low}..{high}")
        if value in seen:
            raise PermutationFormatError(f"duplicate value {value}")
        seen.add(value)
    return Permutation(tuple(value + 1 - base.offset for value in values))


def format_permutation(w: Permutation, base: Base | str = Base.ONE, compact: bool | None = None) -> str:
    """Render ``w``; compact whenever it fits (n <= 35) unless told otherwise."""
    base = Base.coerce(base)
    if compact is None:
        compact = w.n <= MAX_COMPACT
    values = [value - 1 + base.offset for value in w.word]
    if compact:
        if w.n > MAX_COMPACT:
            raise PermutationFormatError(f"S_{w.n} does not fit the compact form")
        return "[" + "".join(COMPACT_DIGITS[value] for value in values) + "]"
    return " ".join(str(value) for value in values)


# --- group structure ----------------------------------------------------------

def length(w: Permutation) -> int:
    """Number of inversions #{i < j : w(i) > w(j)}."""
    return w.length


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for position, value in enumerate(w.word, start=1):
        inv[value - 1] = position
    return Permutation._trusted(tuple(inv))


def compose(x: Permutation, y: Permutation) -> Permutation:
    """The product xy, applying y first: (xy)(i) = x(y(i))."""
    if x.n != y.n:
        raise SizeMismatchError(f"cannot compose S_{x.n} with S_{y.n}")
    return Permutation._trusted(tuple(x.word[j - 1] for j in y.word))


def left_multiply(i: int, w: Permutation) -> Permutation:
    """s_i * w: swap the values i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return Permutation._trusted(tuple(swap.get(value, value) for value in w.word))


def right_multiply(w: Permutation, i: int) -> Permutation:
    """w * s_i: swap the entries in positions i and i+1."""
    word = list(w.word)
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation._trusted(tuple(word))


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """
    x <= y in Bruhat order, decided by rank matrix dominance.

    >>> bruhat_leq(parse("[1324]"), parse("[3412]"))
    True
    >>> bruhat_leq(parse("[4123]"), parse("[3412]"))
    False
    """
    if x.n != y.n:
        raise SizeMismatchError(f"cannot compare S_{x.n} with S_{y.n}")
    if x.length > y.length:
        return False
    return x.rank_matrix.dominates(y.rank_matrix)


def cover_swaps(w: Permutation, *, upward: bool = True) -> list[tuple[int, int]]:
    """
    Positions i < j whose swap moves w one step up (or down) in Bruhat order:
    w(i) < w(j) (or w(i) > w(j)) with no value between them sitting between them.

    >>> cover_swaps(Permutation((1, 3, 2)))
    [(1, 2), (1, 3)]
    """
    word = w.word
    n = len(word)
    result = []
    for i in range(n):
        bound = n + 1 if upward else 0
        for j in range(i + 1, n):
            if word[i] < word[j] < bound if upward else bound < word[j] < word[i]:
                result.append((i + 1, j + 1))
                bound = word[j]
    return result


def swap_positions(w: Permutation, i: int, j: int) -> Permutation:
    """w times the transposition (i j), i.e. w with positions i and j exchanged."""
    word = list(w.word)
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return Permutation._trusted(tuple(word))


def covers_up(w: Permutation) -> list[Permutation]:
    """Elements covering w."""
    return [swap_positions(w, i, j) for i, j in cover_swaps(w)]


def covers_down(w: Permutation) -> list[Permutation]:
    """Elements covered by w."""
    return [swap_positions(w, i, j) for i, j in cover_swaps(w, upward=False)]


# --- patterns -------------------------------------------------------------------

def _index_set(positions: Iterable[int], n: int) -> tuple[int, ...]:
    phi = list(positions)
    if not phi:
        raise IndexSetError("empty index set")
    if len(set(phi)) != len(phi):
        raise IndexSetError(f"repeated positions in {sorted(phi)}")
    for i in phi:
        if not 1 <= i <= n:
            raise IndexSetError(f"position {i} out of range 1..{n}")
    return tuple(sorted(phi))


def flatten(values: Iterable[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct integers."""
    values = list(values)
    rank = {value: r for r, value in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[value] for value in values))


def last_positions(big_n: int, n: int) -> tuple[int, ...]:
    """The positions N-n+1, ..., N."""
    return tuple(range(big_n - n + 1, big_n + 1))


def pattern_at(v: Permutation, positions: Iterable[int]) -> Permutation:
    """
    The pattern of v on a set of positions.

    >>> pattern_at(parse("[895621a743cb]"), range(5, 13)).word
    (2, 1, 6, 5, 4, 3, 8, 7)
    """
    phi = _index_set(positions, v.n)
    return flatten(v.word[i - 1] for i in phi)


def is_common_embedding(
    x: Permutation, y: Permutation, v: Permutation, w: Permutation, positions: Iterable[int]
) -> bool:
    """True iff positions embed x into v and y into w, and v, w agree elsewhere."""
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    if v.n != w.n:
        raise SizeMismatchError(f"v in S_{v.n} but w in S_{w.n}")
    phi = _index_set(positions, v.n)
    if len(phi) != x.n:
        raise SizeMismatchError(f"{len(phi)} positions for a pattern in S_{x.n}")
    inside = set(phi)
    if any(v(i) != w(i) for i in range(1, v.n + 1) if i not in inside):
        return False
    return pattern_at(v, phi) == x and pattern_at(w, phi) == y
