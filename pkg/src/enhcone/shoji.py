"""Kostka polynomials, the Lusztig-Shoji solve and the polynomials derived from it.

``solve_kostka_table(n)`` factors Omega = P Lambda P^t with P triangular
for the closure order and diag(P) = t^b.  Every structural property the
answer should have is asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import Sequence

from .combinatorics import (
    EMPTY, Bipartition, Partition, b_stat, bipartition_leq, dominance_leq,
    enumerate_bipartitions, n_stat, orbit_dimension, partitions,
)
from .exactalg import ZERO, IntPolynomial, PolyMatrix, ldl_decompose, t_power
from .weylb import omega_combinatorial, omega_matrix

DEFAULT_MAX_N = 5


class ConsistencyError(AssertionError):
    """A property guaranteed by the theory failed: the implementation is wrong."""


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ConsistencyError(msg)


# ---------------------------------------------------------------- tableaux


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]):
    """Yield SSYT of the given shape and content as tuples of rows.

    Entries are filled value by value: the cells holding value k form a
    horizontal strip added to the shape filled so far.
    """
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return

    def strips(inner, count, outer):
        # horizontal strips of size `count` from inner, staying inside outer
        L = len(outer)
        inner = list(inner) + [0] * (L - len(inner))

        def rec(i, left):
            if i == L:
                if left == 0:
                    yield ()
                return
            upper = outer[i] if i == 0 else min(outer[i], inner[i - 1])
            for add in range(min(left, upper - inner[i]), -1, -1):
                for tail in rec(i + 1, left - add):
                    yield (inner[i] + add,) + tail

        yield from rec(0, count)

    def rec(k, current, rows):
        if k == len(content):
            if tuple(current) == shape:
                yield tuple(tuple(r) for r in rows)
            return
        for new in strips(current, content[k], shape):
            new_rows = [list(r) for r in rows]
            for i, (a, b) in enumerate(zip(list(current) + [0] * len(shape), new)):
                new_rows[i].extend([k + 1] * (b - a))
            yield from rec(k + 1, list(new), new_rows)

    yield from rec(0, [0] * len(shape), [[] for _ in shape])


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ")
    if not dominance_leq(mu, lam):
        return 0
    return sum(1 for _ in semistandard_tableaux(lam, mu))


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schuetzenberger charge of a word with partition content."""
    word = list(word)
    used = [False] * len(word)
    total = 0
    remaining = len(word)
    while remaining:
        # extract a standard subword: 1, then 2 cyclically to the left, ...
        pos = None
        for i in range(len(word) - 1, -1, -1):
            if not used[i] and word[i] == 1:
                pos = i
                break
        if pos is None:
            raise ValueError("content is not a partition")
        letter, index = 1, 0
        used[pos] = True
        remaining -= 1
        while True:
            nxt = letter + 1
            found = None
            for i in range(pos - 1, -1, -1):
                if not used[i] and word[i] == nxt:
                    found = i
                    break
            wrapped = False
            if found is None:
                for i in range(len(word) - 1, pos, -1):
                    if not used[i] and word[i] == nxt:
                        found = i
                        wrapped = True
                        break
            if found is None:
                break
            if wrapped:
                index += 1
            total += index
            used[found] = True
            remaining -= 1
            pos, letter = found, nxt
    return total


def reading_word(tableau) -> list[int]:
    """Rows read left to right, bottom row first."""
    return [x for row in reversed(tableau) for x in row]


@cache
def kostka_charge_polynomial(lam: Partition, mu: Partition) -> IntPolynomial:
    """K_{lam mu}(t) = sum over SSYT of t^charge."""
    terms: dict[int, int] = {}
    if dominance_leq(mu, lam):
        for tab in semistandard_tableaux(lam, mu):
            c = charge(reading_word(tab))
            terms[c] = terms.get(c, 0) + 1
    return IntPolynomial.from_dict(terms)


@cache
def kostka_polynomial(lam: Partition, pi: Partition) -> IntPolynomial:
    """Modified Kostka polynomial t^{n(pi)} K_{lam pi}(1/t)."""
    lam, pi = Partition(lam), Partition(pi)
    if sum(lam) != sum(pi):
        raise ValueError("sizes differ")
    k = kostka_charge_polynomial(lam, pi)
    if not k:
        return ZERO
    top = n_stat(pi)
    _check(k.degree <= top, f"charge exceeds n({pi})")
    return IntPolynomial.from_dict({top - d: a for d, a in k.terms().items()})


# ---------------------------------------------------------------- the solve


@dataclass
class KostkaTable:
    n: int
    labels: tuple[Bipartition, ...]
    order: tuple[Bipartition, ...]
    P: PolyMatrix
    Lambda: dict[Bipartition, IntPolynomial]
    kt: dict[tuple[Bipartition, Bipartition], IntPolynomial] = field(repr=False)
    hall_cache: dict = field(default_factory=dict, repr=False)

    def kostka(self, upper: Bipartition, lower: Bipartition) -> IntPolynomial:
        return self.kt.get((upper, lower), ZERO)


def check_extension(order: Sequence[Bipartition]) -> None:
    pos = {a: i for i, a in enumerate(order)}
    for a in order:
        for b in order:
            if a != b and bipartition_leq(a, b) and pos[a] > pos[b]:
                raise ValueError(f"not a linear extension: {a} placed after {b}")


def solve_kostka_table(n: int, order: Sequence[Bipartition] | None = None,
                       allow_large: bool = False) -> KostkaTable:
    """Solve Omega = P Lambda P^t in the given linear extension of the order.

    The default order is the canonical one (and its result is memoized).
    n above 5 needs ``allow_large``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > DEFAULT_MAX_N and not allow_large:
        raise ValueError(f"n={n} exceeds the default envelope; pass allow_large")
    if order is None:
        return _solve_canonical(n)
    order = tuple(order)
    if set(order) != set(enumerate_bipartitions(n)) or len(order) != len(enumerate_bipartitions(n)):
        raise ValueError("order must list every bipartition of n exactly once")
    check_extension(order)
    return _solve(n, order)


@cache
def _solve_canonical(n: int) -> KostkaTable:
    return _solve(n, enumerate_bipartitions(n))


def _solve(n: int, order: tuple[Bipartition, ...]) -> KostkaTable:
    omega = omega_matrix(n).reorder(order)
    L, D = ldl_decompose(omega, order)
    m = len(order)
    b = [b_stat(a) for a in order]
    P = PolyMatrix(order)
    kt: dict[tuple[Bipartition, Bipartition], IntPolynomial] = {}
    lam: dict[Bipartition, IntPolynomial] = {}
    for j in range(m):
        d = D.rows[j][j]
        _check(d.is_polynomial(), f"Lambda entry at {order[j]} is not a polynomial")
        lam_j = d.num.shift(-2 * b[j])
        _check(lam_j.is_even(), f"Lambda entry at {order[j]} has odd powers")
        lam[order[j]] = lam_j
    for i in range(m):
        for j in range(i + 1):
            e = L.rows[i][j]
            if not e:
                continue
            e = e * t_power(b[j])
            _check(e.is_polynomial(), f"P entry {order[i]},{order[j]} not in Z[t]")
            p = e.num
            upper, lower = order[i], order[j]
            _check(bipartition_leq(lower, upper),
                   f"P nonzero at incomparable/opposite pair {upper},{lower}")
            _check(p.nonnegative(), f"negative coefficient in P at {upper},{lower}")
            _check(p.parity_support() <= {b[i] % 2}, f"parity violation at {upper},{lower}")
            P.rows[i][j] = e
            kt[(upper, lower)] = p
    for i in range(m):
        _check(P.rows[i][i] == t_power(b[i]), "diagonal of P is not t^b")
    # exact reconstruction P Lambda P^t = Omega
    for i in range(m):
        for k in range(i + 1):
            acc = ZERO
            for j in range(k + 1):
                pi_, pk = P.rows[i][j], P.rows[k][j]
                if pi_ and pk:
                    acc = acc + pi_.num * pk.num * lam[order[j]]
            _check(acc == omega.rows[i][k].num, f"reconstruction fails at {order[i]},{order[k]}")
    labels = enumerate_bipartitions(n)
    return KostkaTable(n, labels, order, P.reorder(labels), lam, kt)


# ---------------------------------------------------------------- derived


def ic_polynomial(table: KostkaTable, upper: Bipartition, lower: Bipartition) -> IntPolynomial:
    """Local IC polynomial of the closure of O_upper at O_lower (in t = q)."""
    k = table.kostka(upper, lower)
    if not k:
        return ZERO
    return k.shift(-b_stat(upper)).halve_degrees()


def _smaller_or_equal(lam: Partition) -> list[Partition]:
    return [p for p in partitions(sum(lam)) if dominance_leq(p, lam)]


def pi_polynomial(table: KostkaTable, fiber_over: Bipartition, point_in: Bipartition) -> IntPolynomial:
    """Poincare polynomial of the resolution fibre over a point of O_{point_in}."""
    mu, nu = fiber_over
    base = n_stat(mu + nu)
    acc = ZERO
    for rho in _smaller_or_equal(mu):
        k1 = kostka_number(rho.transpose(), mu.transpose())
        if not k1:
            continue
        for sigma in _smaller_or_equal(nu):
            k2 = kostka_number(sigma.transpose(), nu.transpose())
            if not k2:
                continue
            mid = Bipartition(rho, sigma)
            if not bipartition_leq(point_in, mid):
                continue
            ic = ic_polynomial(table, mid, point_in)
            if ic:
                acc = acc + ic.shift(n_stat(rho + sigma) - base) * (k1 * k2)
    return acc


def theta_polynomial(table: KostkaTable, orbit: Bipartition) -> IntPolynomial:
    """theta with |O(F_q)| = theta(q)."""
    return table.Lambda[orbit].halve_degrees()


def hall_polynomial(table: KostkaTable, sub_quot: tuple[Partition, Partition],
                    ambient: Bipartition) -> IntPolynomial:
    """Generalized Hall polynomial g^{ambient}_{rho;sigma}, by triangular inversion."""
    rho, sigma = Partition(sub_quot[0]), Partition(sub_quot[1])
    if sum(rho) + sum(sigma) != table.n:
        raise ValueError("sizes do not add up to n")
    return _hall_block(table, sum(rho), ambient)[(rho, sigma)]


def _hall_block(table: KostkaTable, a: int, ambient: Bipartition):
    key = (a, ambient)
    if key in table.hall_cache:
        return table.hall_cache[key]
    # increasing dominance within each size: larger n(.) first
    left = sorted(partitions(a), key=lambda p: -n_stat(p))
    right = sorted(partitions(table.n - a), key=lambda p: -n_stat(p))
    g: dict[tuple[Partition, Partition], IntPolynomial] = {}
    for rho in left:
        for sigma in right:
            acc = ic_polynomial(table, Bipartition(rho, sigma), ambient).shift(n_stat(rho + sigma))
            for theta in left:
                if theta == rho or not dominance_leq(theta, rho):
                    continue
                k1 = kostka_polynomial(rho, theta)
                for psi in right:
                    if not dominance_leq(psi, sigma):
                        continue
                    acc = acc - g[(theta, psi)] * k1 * kostka_polynomial(sigma, psi)
            for psi in right:
                if psi != sigma and dominance_leq(psi, sigma):
                    acc = acc - g[(rho, psi)] * kostka_polynomial(rho, rho) * kostka_polynomial(sigma, psi)
            g[(rho, sigma)] = acc.shift(-(n_stat(rho) + n_stat(sigma)))
    table.hall_cache[key] = g
    return g


# ---------------------------------------------------------------- cross-checks


@dataclass
class Report:
    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def kostka_weight_matrix(n: int) -> dict[tuple[Bipartition, Bipartition], int]:
    """A[(mu;nu),(rho;sigma)] = K_{rho^t mu^t} K_{sigma^t nu^t} (zero entries omitted)."""
    out = {}
    for a in enumerate_bipartitions(n):
        for c in enumerate_bipartitions(n):
            if sum(a.mu) != sum(c.mu):
                continue
            k = (kostka_number(c.mu.transpose(), a.mu.transpose())
                 * kostka_number(c.nu.transpose(), a.nu.transpose()))
            if k:
                out[(a, c)] = k
    return out


def omega_crosscheck(n: int, max_n: int = 3) -> Report:
    """Kostka-weighted Omega entries against the matrix-sum formula."""
    if n > max_n:
        raise ValueError(f"n={n} above the configured bound {max_n}")
    rep = Report("omega_crosscheck")
    labels = enumerate_bipartitions(n)
    omega = omega_matrix(n)
    A = kostka_weight_matrix(n)
    rows = {a: [(c, k) for (x, c), k in A.items() if x == a] for a in labels}
    for a in labels:
        for b in labels:
            acc = ZERO
            for c, k in rows[a]:
                for d, k2 in rows[b]:
                    acc = acc + omega[c, d].num * (k * k2)
            rhs = omega_combinatorial(a, b).shift(b_stat(a) + b_stat(b))
            rep.checked += 1
            if acc != rhs:
                rep.mismatches.append((a, b, acc, rhs))
    return rep


def typeA_specialization_check(n: int) -> Report:
    """Both type-A reductions of the bipartition Kostka polynomials."""
    rep = Report("typeA_specialization")
    tab = solve_kostka_table(n, allow_large=True)
    for lam in partitions(n):
        for pi in partitions(n):
            got = tab.kostka(Bipartition(EMPTY, lam), Bipartition(EMPTY, pi))
            want = kostka_polynomial(lam, pi).substitute_power(2).shift(n)
            rep.checked += 1
            if got != want:
                rep.mismatches.append(((EMPTY, lam), (EMPTY, pi), got, want))
        for c in tab.labels:
            got = tab.kostka(Bipartition(lam, EMPTY), c)
            want = kostka_polynomial(lam, c.mu + c.nu).substitute_power(2)
            rep.checked += 1
            if got != want:
                rep.mismatches.append(((lam, EMPTY), c, got, want))
    return rep


def check_orbit_degrees(table: KostkaTable) -> Report:
    rep = Report("theta_degree")
    for a in table.labels:
        rep.checked += 1
        if theta_polynomial(table, a).degree != orbit_dimension(a):
            rep.mismatches.append(a)
    return rep
