"""Partitions, compositions, permutations and elementary counting.

Product convention: ``compose(p, q)`` (also ``p * q``) applies ``q`` first and
then ``p``, i.e. ``(p * q)(x) == p(q(x))``.  Writing ``sigma = alpha * beta``
therefore means ``beta`` acts first.  With this convention
``(1 2 3)(4 5)(6 7) * (1 3 7 5 2)^-1 == (1 3 2 4 5 6 7)``.

Permutations store 0-based one-line images internally; cycle notation and
JSON serialization use the labels 1..n.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold did not (inexact division, disagreement)."""


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{num} is not divisible by {den}")
    return q


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of positive integers is accepted and sorted, so
    ``Partition([1, 3, 2]) == (3, 2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise PreconditionError(f"partition parts must be positive: {parts}")
        self = super().__new__(cls, parts)
        self._mult = Counter(parts)
        return self

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def m(self, i: int) -> int:
        """Multiplicity of the part ``i``."""
        return self._mult.get(i, 0)

    def multiplicities(self) -> dict[int, int]:
        return dict(self._mult)

    @property
    def sign(self) -> int:
        return partition_sign(self)

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def down(self, j: int) -> "Partition":
        return partition_down(self, j)

    def up(self, j: int) -> "Partition":
        return partition_up(self, j)

    def strip_ones(self, s: int) -> "Partition":
        return strip_ones(self, s)

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(list(self) + list(other))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"

    def __reduce__(self):
        return (Partition, (tuple(self),))


def hook(n: int, i: int) -> Partition:
    """The hook ``(n - i, 1^i)``."""
    if not 0 <= i < n:
        raise PreconditionError(f"hook leg {i} out of range for n={n}")
    return Partition([n - i] + [1] * i)


def partition_sign(lam: Iterable[int]) -> int:
    lam = tuple(lam)
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def z_lambda(lam: Partition) -> int:
    return prod(i ** m * factorial(m) for i, m in lam.multiplicities().items())


def class_size(lam: Partition) -> int:
    lam = Partition(lam)
    return exact_div(factorial(lam.n), z_lambda(lam))


def falling(x: int, m: int) -> int | Fraction:
    """Falling power ``x (x-1) ... (x-m+1)``, with ``(x)_{-1} = 1/(x+1)``."""
    if m < -1:
        raise PreconditionError("falling power defined for m >= -1")
    if m == -1:
        if x == -1:
            raise PreconditionError("(x)_{-1} undefined at x = -1")
        return Fraction(1, x + 1)
    return prod(range(x, x - m, -1))


def binom(x: int, y: int) -> int:
    """Binomial with the convention ``binom(x, y) = 0`` outside ``0 <= y <= x``."""
    if y < 0 or x < 0 or y > x:
        return 0
    return comb(x, y)


def gen_binom(x: int, y: int) -> int:
    """Binomial coefficient generalized to negative upper argument."""
    if y < 0:
        return 0
    if x >= 0:
        return comb(x, y) if y <= x else 0
    return (-1) ** y * comb(y - x - 1, y)


@lru_cache(maxsize=None)
def stirling_unsigned(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise PreconditionError("stirling numbers need n, m >= 0")
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0 or m > n:
        return 0
    return stirling_unsigned(n - 1, m - 1) + (n - 1) * stirling_unsigned(n - 1, m)


def partition_down(lam: Partition, j: int) -> Partition:
    """Replace one part ``j`` by ``j - 1`` (removing it when ``j == 1``)."""
    lam = Partition(lam)
    if lam.m(j) == 0:
        raise PreconditionError(f"{lam} has no part equal to {j}")
    parts = list(lam)
    parts.remove(j)
    if j > 1:
        parts.append(j - 1)
    return Partition(parts)


def partition_up(lam: Partition, j: int) -> Partition:
    lam = Partition(lam)
    if lam.m(j) == 0:
        raise PreconditionError(f"{lam} has no part equal to {j}")
    parts = list(lam)
    parts.remove(j)
    parts.append(j + 1)
    return Partition(parts)


def strip_ones(lam: Partition, s: int) -> Partition:
    lam = Partition(lam)
    if s < 0 or lam.m(1) < s:
        raise PreconditionError(f"{lam} has fewer than {s} parts equal to 1")
    return Partition(lam[: len(lam) - s])


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


class Composition(tuple):
    """Ordered tuple of positive integers indexing a block partition of ``[m]``."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise PreconditionError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def m(self) -> int:
        return sum(self)

    @property
    def k(self) -> int:
        return len(self)

    def mult(self, i: int) -> int:
        return sum(1 for p in self if p == i)

    def blocks(self) -> list[range]:
        """0-based blocks ``J_1, ..., J_k`` tiling ``range(m)`` in order."""
        out, start = [], 0
        for p in self:
            out.append(range(start, start + p))
            start += p
        return out

    def block_labels(self) -> tuple[int, ...]:
        return tuple(h for h, blk in enumerate(self.blocks()) for _ in blk)

    def decrement(self, h: int) -> "Composition":
        """Decrease part ``h`` by one; a part equal to 1 is removed."""
        parts = list(self)
        if parts[h] == 1:
            del parts[h]
        else:
            parts[h] -= 1
        return Composition(parts)

    def factorial_product(self) -> int:
        return prod(factorial(p) for p in self)

    def __repr__(self) -> str:
        return f"Composition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"

    def __reduce__(self):
        return (Composition, (tuple(self),))


def compositions(m: int, k: int | None = None) -> list[Composition]:
    """Compositions of ``m`` (optionally with exactly ``k`` parts), lexicographic."""
    out = []

    def gen(rest, acc):
        if rest == 0:
            if k is None or len(acc) == k:
                out.append(Composition(acc))
            return
        if k is not None and len(acc) >= k:
            return
        for p in range(1, rest + 1):
            gen(rest - p, acc + [p])

    gen(m, [])
    return out


class Permutation(tuple):
    """Bijection of ``{0, ..., n-1}`` stored as its tuple of images."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise PreconditionError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> "Permutation":
        """Build from cycles written with labels ``1..n``."""
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise PreconditionError("cycles must be disjoint")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def from_oneline(cls, images: Iterable[int]) -> "Permutation":
        """Build from a 1-based one-line image list."""
        return cls(x - 1 for x in images)

    def oneline(self) -> list[int]:
        return [x + 1 for x in self]

    @property
    def n(self) -> int:
        return len(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in 1-based labels, each starting at its smallest element."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc, x = [], start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(len(c) for c in self.cycles())

    def cycle_count(self) -> int:
        return len(self.cycles())

    def fixed_points(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self) if i == x]

    def sign(self) -> int:
        return partition_sign(self.cycle_type())

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return f"Permutation[{cyc or '()'}; n={len(self)}]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p * q``: apply ``q`` first, then ``p``."""
    if len(p) != len(q):
        raise PreconditionError(f"size mismatch: {len(p)} vs {len(q)}")
    return Permutation(p[x] for x in q)


def _class_members(lam: Partition) -> Iterator[tuple[int, ...]]:
    # Canonical cycle form: the smallest unused point opens the next cycle.
    n = lam.n
    images = [-1] * n
    lengths = Counter(lam)

    def rec(free: list[int]):
        if not free:
            yield tuple(images)
            return
        head, rest = free[0], free[1:]
        for length in sorted(lengths):
            if lengths[length] == 0:
                continue
            lengths[length] -= 1
            for tail in itertools.permutations(rest, length - 1):
                cyc = (head,) + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    images[a] = b
                remaining = [x for x in rest if x not in tail]
                yield from rec(remaining)
            lengths[length] += 1

    yield from rec(list(range(n)))


@lru_cache(maxsize=64)
def class_members(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """All permutations of type ``lam`` as image tuples, lexicographically sorted."""
    return tuple(sorted(_class_members(Partition(lam))))


def enumerate_class(lam: Partition) -> Iterator[Permutation]:
    """Yield each permutation of cycle type ``lam`` once, lexicographic by images."""
    for images in class_members(Partition(lam)):
        yield Permutation(images)


def rational_to_json(q: Fraction | int) -> dict[str, str]:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict[str, str]) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))
