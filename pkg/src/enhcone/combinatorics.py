"""Partitions, bipartitions and the closure order on bipartitions.

Orbits of GL(V) on V x N are labelled by bipartitions (mu; nu) with
|mu| + |nu| = n.  This module holds the combinatorial side: statistics,
the partial order, its covering relations (with their four move types)
and the Hasse diagram.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import accumulate
from typing import Iterable, NamedTuple


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    Trailing zeros are dropped on construction, and ``part(i)`` reads
    the 1-indexed part, returning 0 past the end.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be nonincreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-indexed part; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self) -> Partition:
        return transpose(self)

    def __add__(self, other):  # termwise, not concatenation
        m = max(len(self), len(other))
        return Partition(self.part(i) + _part(other, i) for i in range(1, m + 1))


def _part(lam, i: int) -> int:
    return lam[i - 1] if 1 <= i <= len(lam) else 0


EMPTY = Partition()


class Bipartition(NamedTuple):
    mu: Partition
    nu: Partition

    @property
    def size(self) -> int:
        return sum(self.mu) + sum(self.nu)

    def __str__(self) -> str:
        return f"({format_partition(self.mu)};{format_partition(self.nu)})"


class CoverType(NamedTuple):
    """Which of the four covering moves relates two bipartitions.

    ``k`` and ``l`` are the 1-indexed row witnesses of the move.
    """

    kind: int
    k: int
    l: int


def bipartition(mu: Iterable[int] = (), nu: Iterable[int] = ()) -> Bipartition:
    return Bipartition(Partition(mu), Partition(nu))


def format_partition(lam) -> str:
    """Compact exponent notation, e.g. (3,3,1,1,1) -> '3^2 1^3', () -> '-'."""
    if not lam:
        return "-"
    out = []
    i = 0
    lam = tuple(lam)
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        out.append(f"{lam[i]}^{j - i}" if j - i > 1 else str(lam[i]))
        i = j
    return " ".join(out)


_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_partition(text: str) -> Partition:
    """Parse '2,1,1', '2 1^2', '211' (single-digit shorthand) or '-'/''."""
    text = text.strip().strip("()")
    if text in ("", "-", "0", "∅", "empty"):
        return EMPTY
    if "," not in text and " " not in text and "^" not in text:
        return Partition(int(c) for c in text)
    parts: list[int] = []
    for tok in re.split(r"[,\s]+", text):
        if not tok:
            continue
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"cannot parse partition {text!r}")
        parts += [int(m.group(1))] * int(m.group(2) or 1)
    return Partition(parts)


def parse_bipartition(text: str) -> Bipartition:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if ";" not in text:
        raise ValueError(f"bipartition needs a ';' separator: {text!r}")
    left, right = text.split(";", 1)
    return Bipartition(parse_partition(left), parse_partition(right))


# ---------------------------------------------------------------- statistics


def transpose(lam) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def n_stat(lam) -> int:
    return sum(i * p for i, p in enumerate(lam))


def b_stat(bp: Bipartition) -> int:
    return 2 * n_stat(bp.mu) + 2 * n_stat(bp.nu) + sum(bp.nu)


def orbit_dimension(bp: Bipartition) -> int:
    n = bp.size
    return n * n - b_stat(bp)


def interleaved_composition(bp: Bipartition) -> tuple[int, ...]:
    """Column lengths of the back-to-back diagram, read left to right."""
    return tuple(reversed(transpose(bp.mu))) + tuple(transpose(bp.nu))


def double(bp: Bipartition) -> Bipartition:
    """(mu; nu) -> (mu u mu; nu u nu), each part repeated twice."""
    return Bipartition(
        Partition(p for p in bp.mu for _ in range(2)),
        Partition(p for p in bp.nu for _ in range(2)),
    )


# ---------------------------------------------------------------- enumeration


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""

    def gen(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def _order_key(bp: Bipartition):
    return (-b_stat(bp), interleaved_composition(bp))


@cache
def enumerate_bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All of Q_n in the canonical linear extension (closure-minimum first).

    Sorting by b descending refines the order because b strictly drops
    along it; ties are broken lexicographically on the interleaved
    composition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = [Bipartition(mu, nu) for a in range(n, -1, -1)
           for mu in partitions(a) for nu in partitions(n - a)]
    out.sort(key=_order_key)
    return tuple(out)


# ---------------------------------------------------------------- orders


def dominance_leq(lam, mu) -> bool:
    """Dominance order; partitions of different sizes are never related."""
    if sum(lam) != sum(mu):
        return False
    m = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(accumulate(_part(lam, i) for i in range(1, m + 1)),
                                      accumulate(_part(mu, i) for i in range(1, m + 1))))


def _interleave(bp: Bipartition, length: int) -> list[int]:
    out = []
    for i in range(1, length + 1):
        out.append(_part(bp.mu, i))
        out.append(_part(bp.nu, i))
    return out


def bipartition_leq(a: Bipartition, b: Bipartition) -> bool:
    """(rho; sigma) <= (mu; nu): prefix sums of rho1, sigma1, rho2, ... are dominated.

    Raises ValueError when the two bipartitions have different sizes.
    """
    if a.size != b.size:
        raise ValueError(f"cannot compare {a} and {b}: sizes differ")
    m = max(len(a.mu), len(a.nu), len(b.mu), len(b.nu)) + 1
    return all(x <= y for x, y in zip(accumulate(_interleave(a, m)),
                                      accumulate(_interleave(b, m))))


def bipartition_lt(a: Bipartition, b: Bipartition) -> bool:
    return a != b and bipartition_leq(a, b)


def componentwise_leq(a: Bipartition, b: Bipartition) -> bool:
    return dominance_leq(a.mu, b.mu) and dominance_leq(a.nu, b.nu)


# ---------------------------------------------------------------- covers


def _all_equal(vals) -> bool:
    vals = list(vals)
    return all(v == vals[0] for v in vals)


def covers(a: Bipartition, b: Bipartition) -> CoverType | None:
    """Return the move type if ``b`` covers ``a``, else None.

    Each of the four moves is recognised from the difference pattern
    between the two bipartitions, then its side conditions are checked.
    """
    if a.size != b.size:
        raise ValueError(f"cannot compare {a} and {b}: sizes differ")
    if a == b:
        return None
    rho, sigma = a
    mu, nu = b
    L = max(len(rho), len(sigma), len(mu), len(nu)) + 2
    M = [_part(mu, i) for i in range(L + 1)]  # M[i] = mu_i, M[0] unused
    N = [_part(nu, i) for i in range(L + 1)]
    dm = [_part(rho, i) - M[i] for i in range(L + 1)]
    dn = [_part(sigma, i) - N[i] for i in range(L + 1)]
    dm[0] = dn[0] = 0
    nz_m = [i for i in range(1, L + 1) if dm[i]]
    nz_n = [i for i in range(1, L + 1) if dn[i]]

    def one_box(d, nz):
        if len(nz) == 2 and d[nz[0]] == -1 and d[nz[1]] == 1:
            return nz[0], nz[1]
        return None

    # (1) a box moves down on the mu side
    if not nz_n and (kl := one_box(dm, nz_m)):
        k, l = kl
        if (k >= 2
                and (l == k + 1 or (M[k] - 1 == M[l] + 1
                                    and all(M[i] == M[k] - 1 for i in range(k + 1, l))))
                and _all_equal(N[k - 1:l + 1])):
            return CoverType(1, k, l)
        return None

    # (2) a box moves down on the nu side
    if not nz_m and (kl := one_box(dn, nz_n)):
        k, l = kl
        if (l == k + 1 or (N[k] - 1 == N[l] + 1
                           and all(N[i] == N[k] - 1 for i in range(k + 1, l)))) \
                and _all_equal(M[k:l + 2]):
            return CoverType(2, k, l)
        return None

    # (3) a column moves right across the dividing line
    if nz_m and nz_m == nz_n and all(dm[i] == -1 and dn[i] == 1 for i in nz_m):
        k, l = nz_m[0], nz_m[-1]
        if nz_m == list(range(k, l + 1)):
            ok = _all_equal(M[k:l + 1]) and M[l] > M[l + 1] and _all_equal(N[k:l + 1])
            if k > 1:
                ok = ok and N[k - 1] > N[k]
            if ok:
                return CoverType(3, k, l)
        return None

    # (4) a column moves left and down one row
    if nz_n and all(dn[i] == -1 for i in nz_n) and all(dm[i] == 1 for i in nz_m):
        k, l = nz_n[0], nz_n[-1]
        if (nz_n == list(range(k, l + 1)) and nz_m == list(range(k + 1, l + 2))
                and _all_equal(N[k:l + 1]) and N[l] > N[l + 1]
                and M[k] > M[k + 1] and _all_equal(M[k + 1:l + 2])):
            return CoverType(4, k, l)
        return None
    return None


@cache
def hasse(n: int) -> tuple[tuple[Bipartition, Bipartition, CoverType], ...]:
    """Covering pairs (lower, upper, type) of Q_n, in canonical order."""
    elems = enumerate_bipartitions(n)
    edges = []
    for i, lo in enumerate(elems):
        for up in elems[i + 1:]:
            ct = covers(lo, up)
            if ct is not None:
                edges.append((lo, up, ct))
    return tuple(edges)


def brute_force_covers(n: int) -> set[tuple[Bipartition, Bipartition]]:
    """Covering pairs computed straight from the order, for cross-checking."""
    elems = enumerate_bipartitions(n)
    below = {b: [a for a in elems if bipartition_lt(a, b)] for b in elems}
    out = set()
    for b in elems:
        for a in below[b]:
            if not any(bipartition_lt(a, c) for c in below[b]):
                out.add((a, b))
    return out


def random_linear_extension(n: int, rng) -> tuple[Bipartition, ...]:
    """A linear extension of the order on Q_n, choosing uniformly among minimal elements."""
    elems = list(enumerate_bipartitions(n))
    below = {b: {a for a in elems if bipartition_lt(a, b)} for b in elems}
    placed: set[Bipartition] = set()
    out = []
    while len(out) < len(elems):
        ready = [b for b in elems if b not in placed and below[b] <= placed]
        pick = ready[rng.randrange(len(ready))]
        placed.add(pick)
        out.append(pick)
    return tuple(out)


def is_linear_extension(order) -> bool:
    pos = {a: i for i, a in enumerate(order)}
    return all(not bipartition_lt(a, b) or pos[a] < pos[b] for a in order for b in order)
