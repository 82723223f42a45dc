"""Permutations, the S_ab split of S(n), partitions and standard tableaux.

Permutations are stored 1-based in one-line notation. Composition is
right-to-left: ``(p * q)(x) == p(q(x))``, so ``q`` acts first.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence


class Permutation:
    """Bijection of ``{1..n}`` stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Build from cycles; each element maps to its right neighbour."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad cycle element {x} for degree {n}")
                seen.add(x)
            for x, y in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[x - 1] = y
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``"(1 2)(3 4)"``, ``"(123)"`` or ``"e"``.

        One-line notation ``"[2,1,3]"`` is accepted too. Cycles without
        separators are read digit by digit, which is only unambiguous for n < 10.
        """
        text = text.strip()
        if text in ("", "e", "()"):
            return cls.identity(n)
        if text.startswith("["):
            body = text.strip("[]")
            return cls(int(x) for x in re.split(r"[,\s]+", body.strip()) if x)
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            body = body.strip()
            if not body:
                continue
            if re.search(r"[,\s]", body):
                cyc = [int(x) for x in re.split(r"[,\s]+", body) if x]
            else:
                cyc = [int(ch) for ch in body]
            cycles.append(cyc)
        if not cycles and text:
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls.from_cycles(cycles, n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, start=1))

    def fixes(self, x: int) -> bool:
        return self.images[x - 1] == x

    def extend(self, n: int) -> "Permutation":
        """Embed into S(n) by fixing every point above the current degree."""
        if n < self.n:
            raise ValueError("cannot extend to a smaller degree")
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def restrict(self, n: int) -> "Permutation":
        """Drop the points above ``n``; they must all be fixed."""
        if any(self.images[k - 1] != k for k in range(n + 1, self.n + 1)):
            raise ValueError(f"{self} does not fix every point above {n}")
        return Permutation(self.images[:n])

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles including fixed points."""
        return len(self.cycles()) + sum(1 for i in range(1, self.n + 1) if self.fixes(i))

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "e"
        sep = "" if self.n < 10 else " "
        return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cyc)

    def to_list(self) -> list[int]:
        return list(self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return self.cycle_string()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``: apply ``q`` first, then ``p``."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    pi = p.images
    return Permutation(pi[y - 1] for y in q.images)


def sign(p: Permutation) -> int:
    return -1 if (p.n - p.cycle_count()) % 2 else 1


def symmetric_group(n: int) -> list[Permutation]:
    """All of S(n) in lexicographic order of the one-line images."""
    return [Permutation(images) for images in itertools.permutations(range(1, n + 1))]


def perm_rank(images: Sequence[int]) -> int:
    """Lexicographic rank of a 1-based one-line permutation (Lehmer code)."""
    n = len(images)
    rank = 0
    rest = list(range(1, n + 1))
    for i, x in enumerate(images):
        pos = rest.index(x)
        rank += pos * math.factorial(n - 1 - i)
        rest.pop(pos)
    return rank


class SabClass(NamedTuple):
    """Label ``(a, b)`` with ``σ(a) = n`` and ``σ(n) = b``; ``(None, None)`` if σ fixes n."""

    a: int | None
    b: int | None

    @property
    def fixes_n(self) -> bool:
        return self.a is None

    def __str__(self) -> str:
        return "fixes-n" if self.fixes_n else f"({self.a},{self.b})"


FIXES_N = SabClass(None, None)


def classify(p: Permutation) -> SabClass:
    n = p.n
    b = p(n)
    if b == n:
        return FIXES_N
    a = p.images.index(n) + 1
    return SabClass(a, b)


def enumerate_sab(n: int) -> dict[SabClass, frozenset[Permutation]]:
    """Split S(n) into the classes S_ab (1 <= a, b <= n-1) plus the fixes-n set."""
    if n < 2:
        raise ValueError("need n >= 2")
    classes: dict[SabClass, set[Permutation]] = {
        SabClass(a, b): set() for a in range(1, n) for b in range(1, n)
    }
    classes[FIXES_N] = set()
    for p in symmetric_group(n):
        classes[classify(p)].add(p)
    return {k: frozenset(v) for k, v in classes.items()}


class Partition(tuple):
    """Non-increasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("()[]")
        if not body:
            return cls(())
        return cls(int(x) for x in re.split(r"[,\s]+", body) if x)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"

    __str__ = __repr__


def partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order, e.g. (4), (3,1), (2,2), ..."""
    if k < 0:
        raise ValueError("k must be non-negative")

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in rec(k, k)]


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("rows do not match shape")
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, self.shape.weight + 1)):
            raise ValueError("entries must be 1..weight")
        for r in self.rows:
            if any(x >= y for x, y in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must increase")

    def position(self, k: int) -> tuple[int, int]:
        """(row, column) of entry ``k``, both 0-based."""
        for i, r in enumerate(self.rows):
            if k in r:
                return i, r.index(k)
        raise KeyError(k)

    def content(self, k: int) -> int:
        i, j = self.position(k)
        return j - i

    def swapped(self, k: int) -> "StandardTableau":
        """Tableau with ``k`` and ``k+1`` exchanged (may raise if not standard)."""
        swap = {k: k + 1, k + 1: k}
        return StandardTableau(self.shape, tuple(tuple(swap.get(x, x) for x in r) for r in self.rows))


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """Standard tableaux of ``shape`` in last-letter order.

    The largest entry is placed in each removable corner, bottom row first,
    and the remaining entries are filled recursively.
    """
    shape = Partition(shape)
    if shape.weight == 0:
        return (StandardTableau(shape, ()),)
    k = shape.weight
    out = []
    for i in range(len(shape) - 1, -1, -1):
        if i + 1 < len(shape) and shape[i + 1] == shape[i]:
            continue
        smaller = list(shape)
        smaller[i] -= 1
        for t in standard_tableaux(Partition(smaller)):
            rows = [list(r) for r in t.rows]
            if i == len(rows):
                rows.append([])
            rows[i].append(k)
            out.append(StandardTableau(shape, tuple(tuple(r) for r in rows)))
    return tuple(out)


def hook_dimension(shape: Partition) -> int:
    shape = Partition(shape)
    conj = shape.conjugate()
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(shape.weight) // hooks
