"""Integer partitions, standard Young tableaux, and tableau statistics."""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition ``Partition()`` is the unique partition of 0.  Parts
    past the stored length are implicitly zero; use :meth:`part` to read them.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"parts must be positive integers, got {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition{tuple(self)}"

    @property
    def n(self) -> int:
        """Sum of the parts (the integer being partitioned)."""
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), 0 when i is past the stored length."""
        return self[i] if 0 <= i < len(self) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return self
        cols = [0] * self[0]
        for x in self:
            for j in range(x):
                cols[j] += 1
        return Partition(cols)

    def durfee(self) -> int:
        """Side of the largest square contained in the Young diagram."""
        d = 0
        for i, x in enumerate(self):
            if x >= i + 1:
                d = i + 1
        return d

    def hooks(self) -> list[int]:
        """All hook lengths, row by row."""
        conj = self.conjugate()
        return [
            self[i] - j + conj[j] - i - 1
            for i in range(len(self))
            for j in range(self[i])
        ]

    def add_one_to_first(self, r: int) -> "Partition":
        """Add one box to each of the first r rows (rows past the length count
        as empty, so this can grow the number of parts up to r)."""
        if len(self) > r:
            raise ValueError(f"partition {self} has more than {r} parts")
        return Partition(tuple(x + 1 for x in self) + (1,) * (r - len(self)))

    def to_text(self) -> str:
        """Plus-separated text form, e.g. "5+1+1"."""
        return "+".join(str(x) for x in self) if self else "()"


def conjugate(lam: Partition) -> Partition:
    return Partition(lam).conjugate()


def durfee(lam: Partition) -> int:
    return Partition(lam).durfee()


@cache
def hook_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula).

    This is the dimension of the irreducible S_n-module indexed by lam.
    """
    lam = Partition(lam)
    prod = 1
    for h in lam.hooks():
        prod *= h
    return factorial(lam.n) // prod


def partitions_of(
    n: int,
    *,
    exact_length: int | None = None,
    max_length: int | None = None,
    all_parts_odd: bool = False,
    self_conjugate: bool = False,
) -> list[Partition]:
    """All partitions of n meeting the filters, in decreasing lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = max_length if max_length is not None else n
    if exact_length is not None:
        limit = min(limit, exact_length)
    out = []

    def gen(remaining, max_part, prefix):
        if remaining == 0:
            lam = Partition(prefix)
            if exact_length is not None and len(lam) != exact_length:
                return
            if self_conjugate and lam.conjugate() != lam:
                return
            out.append(lam)
            return
        if len(prefix) >= limit:
            return
        hi = min(max_part, remaining)
        for k in range(hi, 0, -1):
            if all_parts_odd and k % 2 == 0:
                continue
            gen(remaining - k, k, prefix + (k,))

    gen(n, n if n else 0, ())
    return out


def standard_tableaux(lam: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam, entries 1..n, as row tuples."""
    lam = Partition(lam)
    n = lam.n
    rows = [[] for _ in lam]

    def place(value):
        if value > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(len(lam)):
            filled = len(rows[i])
            if filled >= lam[i]:
                continue
            if i and len(rows[i - 1]) <= filled:
                continue
            rows[i].append(value)
            yield from place(value + 1)
            rows[i].pop()

    if n == 0:
        yield ()
        return
    yield from place(1)


def major_index(tableau) -> int:
    """Sum of the descents of a standard tableau: positions i for which i+1
    sits in a strictly lower row than i."""
    row_of = {}
    for r, row in enumerate(tableau):
        for v in row:
            row_of[v] = r
    n = len(row_of)
    return sum(i for i in range(1, n) if row_of[i + 1] > row_of[i])


@cache
def _maj_histogram(lam: Partition) -> tuple[int, ...]:
    lam = Partition(lam)
    counts = [0] * (lam.n * (lam.n + 1) // 2 + 1)
    for t in standard_tableaux(lam):
        counts[major_index(t)] += 1
    return tuple(counts)


def maj_count(m: int, k: int, lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam whose major index is
    congruent to m mod k."""
    if k < 1:
        raise ValueError("modulus k must be >= 1")
    hist = _maj_histogram(Partition(lam))
    return sum(c for maj, c in enumerate(hist) if maj % k == m % k)
