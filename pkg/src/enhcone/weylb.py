"""Characters of the hyperoctahedral group W_n and the Omega pairing matrix.

Conjugacy classes are signed cycle types (alpha; beta): alpha lists the
lengths of positive cycles, beta those of negative cycles.  Irreducible
characters are labelled by bipartitions, with chi^{mu;nu} induced from
chi^mu (inflated from S_|mu|) times delta * chi^nu on W_|mu| x W_|nu|.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from itertools import combinations, product
from math import comb, factorial
from typing import Sequence

from .combinatorics import (
    Bipartition, Partition, enumerate_bipartitions, interleaved_composition,
    n_stat,
)
from .exactalg import ONE, ZERO, IntPolynomial, PolyMatrix, t_power

SignedCycleType = Bipartition  # (positive cycle lengths; negative cycle lengths)


def classes(n: int) -> tuple[SignedCycleType, ...]:
    """All conjugacy classes of W_n, in the same order as the bipartitions."""
    return enumerate_bipartitions(n)


def z_stat(lam) -> int:
    out = 1
    for part, mult in Counter(lam).items():
        out *= part ** mult * factorial(mult)
    return out


def group_order(n: int) -> int:
    return 2 ** n * factorial(n)


def class_size(ct: SignedCycleType) -> int:
    alpha, beta = ct
    n = ct.size
    return group_order(n) // (2 ** (len(alpha) + len(beta)) * z_stat(alpha) * z_stat(beta))


def epsilon(ct: SignedCycleType) -> int:
    """Determinant of the reflection representation."""
    return -1 if (ct.size - len(ct.mu)) % 2 else 1


def delta(ct: SignedCycleType) -> int:
    """Product of all signs: -1 per negative cycle."""
    return -1 if len(ct.nu) % 2 else 1


# ---------------------------------------------------------------- S_n


@cache
def sn_character(lam: Partition, cycle_type: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama: chi^lam on the class with the given cycle lengths."""
    lam = tuple(lam)
    cycle_type = tuple(sorted(cycle_type, reverse=True))
    if sum(lam) != sum(cycle_type):
        raise ValueError(f"size mismatch: {lam} vs {cycle_type}")
    if not cycle_type:
        return 1
    r, rest = cycle_type[0], cycle_type[1:]
    # work with beta-numbers: removing an r-rim hook = moving a bead down by r
    m = len(lam)
    beads = [lam[i] + (m - 1 - i) for i in range(m)]
    bead_set = set(beads)
    total = 0
    for b in beads:
        nb = b - r
        if nb < 0 or nb in bead_set:
            continue
        # sign is (-1)^(number of beads strictly between nb and b)
        height = sum(1 for c in beads if nb < c < b)
        new = sorted((bead_set - {b}) | {nb}, reverse=True)
        mu = Partition(new[i] - (m - 1 - i) for i in range(m))
        total += (-1) ** height * sn_character(mu, rest)
    return total


def hook_dimension(lam) -> int:
    """Number of standard tableaux of shape lam (hook-length formula)."""
    lam = tuple(lam)
    n = sum(lam)
    lt = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (lt[j] - i - 1) + 1
    return factorial(n) // hooks


# ---------------------------------------------------------------- W_n


@cache
def wn_character(label: Bipartition, cls: SignedCycleType) -> int:
    """chi^{mu;nu} on a class, by explicit induction from W_|mu| x W_|nu|."""
    mu, nu = label
    if label.size != cls.size:
        raise ValueError(f"size mismatch: {label} vs {cls}")
    cycles = [(k, 1) for k in cls.mu] + [(k, -1) for k in cls.nu]
    a = sum(mu)
    total = 0
    idx = range(len(cycles))
    for r in range(len(cycles) + 1):
        for chosen in combinations(idx, r):
            if sum(cycles[i][0] for i in chosen) != a:
                continue
            left = [cycles[i][0] for i in chosen]
            rest = [cycles[i] for i in idx if i not in chosen]
            sign = (-1) ** sum(1 for _, s in rest if s < 0)
            total += sn_character(mu, tuple(left)) * sn_character(nu, tuple(k for k, _ in rest)) * sign
    return total


def character_degree(label: Bipartition) -> int:
    return comb(label.size, sum(label.mu)) * hook_dimension(label.mu) * hook_dimension(label.nu)


def tensor_with_eps(label: Bipartition) -> Bipartition:
    """Label of chi^{rho;sigma} (x) eps, namely (sigma^t; rho^t)."""
    return Bipartition(label.nu.transpose(), label.mu.transpose())


def reflection_charpoly(cls: SignedCycleType) -> IntPolynomial:
    """det(t - w): prod (t^a - 1) over positive cycles, (t^b + 1) over negative."""
    out = ONE
    for k in cls.mu:
        out = out * (t_power(k) - 1)
    for k in cls.nu:
        out = out * (t_power(k) + 1)
    return out


@cache
def degree_product(n: int) -> IntPolynomial:
    """prod_{a=1}^n (t^{2a} - 1)."""
    out = ONE
    for a in range(1, n + 1):
        out = out * (t_power(2 * a) - 1)
    return out


@cache
def class_kernel(cls: SignedCycleType) -> IntPolynomial:
    """prod (t^{2a}-1) / det(t - w); always a polynomial."""
    return degree_product(cls.size).exact_div(reflection_charpoly(cls))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    classes: tuple[SignedCycleType, ...]
    sizes: tuple[int, ...]
    labels: tuple[Bipartition, ...]
    values: tuple[tuple[int, ...], ...]  # values[label_index][class_index]
    charpolys: tuple[IntPolynomial, ...] = field(repr=False)

    def row(self, label: Bipartition) -> tuple[int, ...]:
        return self.values[self.labels.index(label)]

    def inner(self, f: Sequence[int], g: Sequence[int]) -> int:
        """|W| * <f, g> (characters are real)."""
        return sum(s * a * b for s, a, b in zip(self.sizes, f, g))


@cache
def character_table(n: int) -> CharacterTable:
    cl = classes(n)
    labels = enumerate_bipartitions(n)
    return CharacterTable(
        n=n,
        classes=cl,
        sizes=tuple(class_size(c) for c in cl),
        labels=labels,
        values=tuple(tuple(wn_character(lab, c) for c in cl) for lab in labels),
        charpolys=tuple(reflection_charpoly(c) for c in cl),
    )


def fake_degree(char_values: Sequence[int], n: int) -> IntPolynomial:
    """Graded multiplicity of a character in the coinvariant algebra of W_n.

    ``char_values`` is indexed like ``classes(n)``.  A nonzero remainder in
    the final division by |W_n| means the input was not a character.
    """
    cl = classes(n)
    if len(char_values) != len(cl):
        raise ValueError("one value per class expected")
    acc = ZERO
    for c, val in zip(cl, char_values):
        if val:
            acc = acc + class_kernel(c) * (class_size(c) * val * epsilon(c))
    try:
        return acc.exact_div(group_order(n))
    except ArithmeticError as exc:
        raise ValueError("input is not a virtual character of W_n") from exc


def coinvariant_series(n: int) -> IntPolynomial:
    """Graded dimension of the coinvariant algebra: prod (t^{2a}-1)/(t-1)^n."""
    return degree_product(n).exact_div((t_power(1) - 1) ** n)


@cache
def omega_matrix(n: int) -> PolyMatrix:
    """omega_{a,b} = t^{n^2} R(chi^a chi^b eps), over Q_n in canonical order."""
    tab = character_table(n)
    kernels = [class_kernel(c) for c in tab.classes]
    order = group_order(n)
    m = len(tab.labels)
    shift = n * n
    rows = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            acc = ZERO
            for s, x, y, ker in zip(tab.sizes, tab.values[i], tab.values[j], kernels):
                if x and y:
                    acc = acc + ker * (s * x * y)
            entry = acc.exact_div(order).shift(shift)
            rows[i][j] = rows[j][i] = entry
    return PolyMatrix(tab.labels, rows, symmetric=True)


def _matrices(rows: Sequence[int], cols: Sequence[int]):
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        if not any(cols):
            yield ()
        return

    def fill(j, remaining, caps):
        if j == len(caps) - 1:
            if remaining <= caps[j]:
                yield (remaining,)
            return
        for x in range(min(remaining, caps[j]), -1, -1):
            for tail in fill(j + 1, remaining - x, caps):
                yield (x,) + tail

    if not cols:
        if not any(rows):
            yield tuple(() for _ in rows)
        return
    for first in fill(0, rows[0], cols):
        for tail in _matrices(rows[1:], [c - x for c, x in zip(cols, first)]):
            yield (first,) + tail


def omega_combinatorial(a: Bipartition, b: Bipartition) -> IntPolynomial:
    """Matrix-sum formula for the Kostka-weighted Omega combination.

    Sums, over nonnegative integer matrices whose row and column sums are
    the interleaved compositions of a and b, a power of t^2 times the
    t^2-multinomial [n; m_ij].
    """
    n = a.size
    if b.size != n:
        raise ValueError("sizes differ")
    rows = interleaved_composition(a)
    cols = interleaved_composition(b)
    p, pp = (a.mu[0] if a.mu else 0), (b.mu[0] if b.mu else 0)
    base = comb(n, 2) - n_stat(a.mu + a.nu) - n_stat(b.mu + b.nu)
    top = degree_product(n)
    acc = ZERO
    for m in _matrices(rows, cols):
        e = base + sum(comb(x, 2) for row in m for x in row)
        e += sum(m[i][j] for i in range(p) for j in range(pp))
        den = ONE
        for row in m:
            for x in row:
                if x:
                    den = den * degree_product(x)
        acc = acc + top.exact_div(den).shift(2 * e)
    return acc


def hyperoctahedral_elements(n: int):
    """Every element of W_n as (permutation, signs); only for tiny n."""
    from itertools import permutations
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            yield perm, signs


def signed_cycle_type(perm, signs) -> SignedCycleType:
    seen = [False] * len(perm)
    pos, neg = [], []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length, sgn, j = 0, 1, i
        while not seen[j]:
            seen[j] = True
            sgn *= signs[j]
            j = perm[j]
            length += 1
        (pos if sgn > 0 else neg).append(length)
    return Bipartition(Partition(sorted(pos, reverse=True)), Partition(sorted(neg, reverse=True)))
