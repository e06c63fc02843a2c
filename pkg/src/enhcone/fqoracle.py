"""Brute-force ground truth over a prime field F_q.

Vectors are tuples of residues and matrices are tuples of rows.  Orbits
of GL_n(F_q) on F_q^n x N are classified two independent ways: through
E^x v (the image of v under the centralizer of x) and through an
explicit normal-basis construction.  Counting routines enumerate
nilpotent matrices, subspaces and partial flags directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .combinatorics import (
    Bipartition, Partition, bipartition_leq, dominance_leq,
    enumerate_bipartitions, interleaved_composition, transpose,
)

Vector = tuple[int, ...]

# pairs (v, x) enumerated by count_orbits: q^(n^2) of them
DEFAULT_PAIR_BUDGET = 20_000
EXTENDED_PAIR_BUDGET = 70_000
SUBSPACE_BUDGET = 10_000


class BudgetError(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")


# ---------------------------------------------------------------- linear algebra


def rref(rows: Iterable[Sequence[int]], q: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    m = [[a % q for a in r] for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [a * inv % q for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows: Iterable[Sequence[int]], q: int) -> int:
    return len(rref(rows, q)[0])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, q: int) -> list[Vector]:
    """Basis of {y : rows . y = 0}."""
    red, piv = rref(rows, q)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        y = [0] * ncols
        y[f] = 1
        for row, p in zip(red, piv):
            y[p] = -row[f] % q
        out.append(tuple(y))
    return out


def solve(columns: Sequence[Vector], target: Vector, q: int) -> Vector | None:
    """Coefficients c with sum c_i columns[i] = target, or None."""
    n = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, piv = rref(aug, q)
    if k in piv:
        return None
    c = [0] * k
    for row, p in zip(red, piv):
        c[p] = row[k]
    return tuple(c)


def vec_add(a: Vector, b: Vector, q: int) -> Vector:
    return tuple((x + y) % q for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector, q: int) -> Vector:
    return tuple((x - y) % q for x, y in zip(a, b))


def vec_scale(c: int, a: Vector, q: int) -> Vector:
    return tuple(c * x % q for x in a)


def lin_comb(coeffs: Sequence[int], vectors: Sequence[Vector], q: int, n: int) -> Vector:
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(a % q for a in out)


# ---------------------------------------------------------------- types


@dataclass(frozen=True)
class FqMatrix:
    q: int
    rows: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(a % self.q for a in r) for r in self.rows))
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zero(cls, n: int, q: int) -> FqMatrix:
        return cls(q, tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int, q: int) -> FqMatrix:
        return cls(q, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def apply(self, v: Vector) -> Vector:
        q = self.q
        return tuple(sum(a * b for a, b in zip(r, v)) % q for r in self.rows)

    def __matmul__(self, other: FqMatrix) -> FqMatrix:
        cols = list(zip(*other.rows))
        return FqMatrix(self.q, tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                                      for r in self.rows))

    def __pow__(self, k: int) -> FqMatrix:
        out = FqMatrix.identity(self.n, self.q)
        for _ in range(k):
            out = out @ self
        return out

    def columns(self) -> tuple[Vector, ...]:
        return tuple(zip(*self.rows))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_nilpotent(self) -> bool:
        return (self ** self.n).is_zero()

    def rank(self) -> int:
        return rank(self.rows, self.q)

    def inverse(self) -> FqMatrix:
        n, q = self.n, self.q
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        red, piv = rref(aug, q)
        if tuple(piv[:n]) != tuple(range(n)) or len(red) < n:
            raise ValueError("matrix is singular")
        return FqMatrix(q, tuple(tuple(r[n:]) for r in red))


@dataclass(frozen=True)
class FqPair:
    v: Vector
    x: FqMatrix

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(a % self.x.q for a in self.v))
        if len(self.v) != self.x.n:
            raise ValueError("vector and matrix sizes differ")

    @property
    def q(self) -> int:
        return self.x.q

    @property
    def n(self) -> int:
        return self.x.n

    def conjugate(self, g: FqMatrix) -> FqPair:
        """(g v, g x g^-1)."""
        return FqPair(g.apply(self.v), g @ self.x @ g.inverse())


class Subspace:
    """A subspace of F_q^n stored by its reduced echelon basis."""

    __slots__ = ("q", "n", "basis", "pivots")

    def __init__(self, q: int, n: int, vectors: Iterable[Sequence[int]] = ()):
        self.q, self.n = q, n
        self.basis, self.pivots = rref(list(vectors), q)

    @classmethod
    def whole(cls, q: int, n: int) -> Subspace:
        return cls(q, n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.basis == other.basis and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis={self.basis})"

    def contains(self, v: Sequence[int]) -> bool:
        # reduce v against the echelon basis
        w = [a % self.q for a in v]
        for row, p in zip(self.basis, self.pivots):
            if w[p]:
                f = w[p]
                w = [(a - f * b) % self.q for a, b in zip(w, row)]
        return not any(w)

    def contains_space(self, other: Subspace) -> bool:
        return all(self.contains(b) for b in other.basis)

    def join(self, other: Subspace) -> Subspace:
        return Subspace(self.q, self.n, self.basis + other.basis)

    def image(self, x: FqMatrix) -> Subspace:
        return Subspace(self.q, self.n, [x.apply(b) for b in self.basis])

    def preimage(self, x: FqMatrix) -> Subspace:
        """{u : x u in self}."""
        ann = nullspace(self.basis, self.n, self.q) if self.basis else \
            [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]
        if not ann:
            return Subspace.whole(self.q, self.n)
        cx = [tuple(sum(a[k] * x.rows[k][j] for k in range(self.n)) % self.q
                    for j in range(self.n)) for a in ann]
        return Subspace(self.q, self.n, nullspace(cx, self.n, self.q))

    def is_stable(self, x: FqMatrix) -> bool:
        return all(self.contains(x.apply(b)) for b in self.basis)

    def points(self) -> Iterator[Vector]:
        for coeffs in product(range(self.q), repeat=self.dim):
            yield lin_comb(coeffs, self.basis, self.q, self.n)


def subspaces(n: int, d: int, q: int) -> Iterator[tuple[Vector, ...]]:
    """All d-dimensional subspaces of F_q^n, as reduced echelon bases."""
    for piv in combinations(range(n), d):
        free = [(r, c) for r in range(d) for c in range(piv[r] + 1, n) if c not in piv]
        for vals in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for r, p in enumerate(piv):
                rows[r][p] = 1
            for (r, c), a in zip(free, vals):
                rows[r][c] = a
            yield tuple(tuple(r) for r in rows)


def intermediate_subspaces(lower: Subspace, upper: Subspace, d: int) -> Iterator[Subspace]:
    """Subspaces U with lower <= U <= upper and dim U = d."""
    q, n = lower.q, lower.n
    comp = []
    span = Subspace(q, n, lower.basis)
    for b in upper.basis:
        if not span.contains(b):
            comp.append(b)
            span = Subspace(q, n, span.basis + (b,))
    k = d - lower.dim
    if k < 0 or k > len(comp):
        return
    for sub in subspaces(len(comp), k, q):
        vecs = [lin_comb(r, comp, q, n) for r in sub]
        yield Subspace(q, n, lower.basis + tuple(vecs))


def count_subspaces(n: int, d: int, q: int) -> int:
    """Gaussian binomial [n choose d]_q."""
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# ---------------------------------------------------------------- invariants


def type_from_image_dims(dims: Sequence[int]) -> Partition:
    """Jordan type from dims[k] = dim x^k U (dims[0] = dim U, ending at 0)."""
    cols = [dims[k - 1] - dims[k] for k in range(1, len(dims))]
    return transpose(Partition(c for c in cols if c))


def _image_dims(space: Subspace, x: FqMatrix) -> list[int]:
    dims = [space.dim]
    cur = space
    while cur.dim:
        cur = cur.image(x)
        dims.append(cur.dim)
    return dims


def jordan_type(x: FqMatrix) -> Partition:
    if not x.is_nilpotent():
        raise ValueError("matrix is not nilpotent")
    return type_from_image_dims(_image_dims(Subspace.whole(x.q, x.n), x))


def restricted_type(x: FqMatrix, w: Subspace) -> Partition:
    """Jordan type of x on an x-stable subspace."""
    return type_from_image_dims(_image_dims(w, x))


def quotient_type(x: FqMatrix, w: Subspace) -> Partition:
    """Jordan type of x on V / W for x-stable W."""
    dims = []
    cur = Subspace.whole(x.q, x.n)
    while True:
        d = cur.join(w).dim - w.dim
        dims.append(d)
        if d == 0:
            break
        cur = cur.image(x)
    return type_from_image_dims(dims)


def centralizer_basis(x: FqMatrix) -> list[FqMatrix]:
    """Basis of {y : xy = yx}, found by solving the linear system."""
    n, q = x.n, x.q
    eqs = []
    # unknown y_{ab} at index a*n + b; entry (i,j) of xy - yx
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for k in range(n):
                row[k * n + j] += x.rows[i][k]
                row[i * n + k] -= x.rows[k][j]
            eqs.append([a % q for a in row])
    sols = nullspace(eqs, n * n, q)
    return [FqMatrix(q, tuple(tuple(s[a * n:(a + 1) * n]) for a in range(n))) for s in sols]


def exv_space(v: Vector, x: FqMatrix, centralizer: Sequence[FqMatrix] | None = None) -> Subspace:
    if centralizer is None:
        centralizer = centralizer_basis(x)
    return Subspace(x.q, x.n, [y.apply(v) for y in centralizer])


def cyclic_space(v: Vector, x: FqMatrix) -> Subspace:
    """F[x] v."""
    vecs = []
    w = v
    for _ in range(x.n):
        vecs.append(w)
        w = x.apply(w)
    return Subspace(x.q, x.n, vecs)


def classify_orbit(p: FqPair, centralizer: Sequence[FqMatrix] | None = None) -> Bipartition:
    """Type (mu; nu): x on E^x v has type mu, x on V / E^x v has type nu."""
    e = exv_space(p.v, p.x, centralizer)
    return Bipartition(restricted_type(p.x, e), quotient_type(p.x, e))


def quotient_type_check(p: FqPair) -> bool:
    """dim F[x]v = mu_1 and x on V/F[x]v has type (nu1+mu2, nu2+mu3, ...)."""
    mu, nu = classify_orbit(p)
    f = cyclic_space(p.v, p.x)
    length = max(len(mu), len(nu)) + 1
    want = Partition(nu.part(i) + mu.part(i + 1) for i in range(1, length + 1))
    return f.dim == mu.part(1) and quotient_type(p.x, f) == want


# ---------------------------------------------------------------- normal bases


def jordan_basis(x: FqMatrix) -> list[list[Vector]]:
    """Jordan chains, longest first; chain[j-1] = v_{i,j}, x v_{i,1} = 0."""
    n, q = x.n, x.q
    kernels = [Subspace(q, n)]
    power = FqMatrix.identity(n, q)
    while kernels[-1].dim < n:
        power = power @ x
        kernels.append(Subspace(q, n, nullspace(power.rows, n, q)))
        if len(kernels) > n + 1:
            raise ValueError("matrix is not nilpotent")
    tops: list[tuple[Vector, int]] = []
    for k in range(len(kernels) - 1, 0, -1):
        span = list(kernels[k - 1].basis)
        for top, length in tops:
            w = top
            for _ in range(length - k):
                w = x.apply(w)
            span.append(w)
        cur = Subspace(q, n, span)
        for w in kernels[k].basis:
            if not cur.contains(w):
                tops.append((w, k))
                cur = Subspace(q, n, cur.basis + (w,))
    blocks = []
    for top, length in tops:
        chain = [top]
        for _ in range(length - 1):
            chain.append(x.apply(chain[-1]))
        blocks.append(chain[::-1])
    return blocks


def normal_basis(p: FqPair) -> tuple[list[list[Vector]], Bipartition]:
    """A Jordan basis with v = sum_i v_{i, mu_i}, built step by step.

    Start from any Jordan basis, rewrite each block so that v meets it in
    a single basis vector, then repair the two ways (mu or nu) in which
    consecutive blocks can fail to be nonincreasing.
    """
    x, v, q, n = p.x, p.v, p.q, p.n
    blocks = jordan_basis(x)
    lam = [len(b) for b in blocks]

    def coords() -> list[list[int]]:
        flat = [w for b in blocks for w in b]
        c = solve(flat, v, q)
        if c is None:
            raise AssertionError("Jordan basis does not span V")
        out, k = [], 0
        for length in lam:
            out.append(list(c[k:k + length]))
            k += length
        return out

    def top_index(cs: list[int]) -> int:
        return max((j + 1 for j, a in enumerate(cs) if a), default=0)

    def renormalize(i: int) -> None:
        cs = coords()[i]
        m = top_index(cs)
        if not m:
            return
        nu_i = lam[i] - m
        top = lin_comb(cs[:m], blocks[i][nu_i:nu_i + m], q, n)
        chain = [top]
        for _ in range(lam[i] - 1):
            chain.append(x.apply(chain[-1]))
        blocks[i] = chain[::-1]

    def mu_of(i: int) -> int:
        return top_index(coords()[i])

    for i in range(len(blocks)):
        renormalize(i)
    for i in range(len(blocks) - 2, -1, -1):
        j = i
        while j + 1 < len(blocks):
            mj, mk = mu_of(j), mu_of(j + 1)
            nj, nk = lam[j] - mj, lam[j + 1] - mk
            if mj < mk:
                blocks[j + 1] = [vec_sub(blocks[j + 1][t], blocks[j][t], q) for t in range(lam[j + 1])]
                renormalize(j)
                break
            if nj < nk:
                d = lam[j] - lam[j + 1]
                blocks[j] = [blocks[j][t] if t < d else vec_sub(blocks[j][t], blocks[j + 1][t - d], q)
                             for t in range(lam[j])]
                renormalize(j + 1)
                j += 1
                continue
            break

    mu = [mu_of(i) for i in range(len(blocks))]
    nu = [a - b for a, b in zip(lam, mu)]
    bp = Bipartition(Partition(mu), Partition(nu))  # raises if not partitions
    _assert_normal(p, blocks, bp)
    return blocks, bp


def _assert_normal(p: FqPair, blocks, bp: Bipartition) -> None:
    x, q, n = p.x, p.q, p.n
    flat = [w for b in blocks for w in b]
    if rank(flat, q) != n:
        raise AssertionError("normal basis is not a basis")
    for b in blocks:
        if any(x.apply(b[j]) != b[j - 1] for j in range(1, len(b))) or any(x.apply(b[0])):
            raise AssertionError("normal basis is not a Jordan basis")
    marked = [b[bp.mu.part(i + 1) - 1] for i, b in enumerate(blocks) if bp.mu.part(i + 1)]
    want = lin_comb([1] * len(marked), marked, q, n)
    if want != p.v:
        raise AssertionError("v is not the sum of the marked basis vectors")


def representative(bp: Bipartition, q: int) -> FqPair:
    """The pair with normal basis = standard basis, of the given type."""
    lam = list(bp.mu + bp.nu)
    n = sum(lam)
    rows = [[0] * n for _ in range(n)]
    v = [0] * n
    off = 0
    for i, length in enumerate(lam):
        for j in range(1, length):
            rows[off + j - 1][off + j] = 1  # x e_{i,j+1} = e_{i,j}
        m = bp.mu.part(i + 1)
        if m:
            v[off + m - 1] = 1
        off += length
    return FqPair(tuple(v), FqMatrix(q, tuple(tuple(r) for r in rows)))


def flag_w(p: FqPair) -> list[Subspace]:
    """The canonical flag W_0 < W_1 < ... < W_{mu1+nu1} = V of the pair."""
    mu, _ = classify_orbit(p)
    e = exv_space(p.v, p.x)
    comp = interleaved_composition(classify_orbit(p))
    m1 = mu.part(1)
    flag = []
    for k in range(len(comp) + 1):
        if k < m1:
            w = e
            for _ in range(m1 - k):
                w = w.image(p.x)
        elif k == m1:
            w = e
        else:
            w = e
            for _ in range(k - m1):
                w = w.preimage(p.x)
        flag.append(w)
    return flag


# ---------------------------------------------------------------- counting


def _check_budget(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise BudgetError(f"{what}: {size} items exceeds the budget of {limit}")


def nilpotent_matrices(n: int, q: int, chunk: int = 0, chunks: int = 1) -> Iterator[FqMatrix]:
    """Nilpotent n x n matrices over F_q, by filtering all matrices.

    The index space is cut into ``chunks`` contiguous pieces; with
    chunks = q^k this fixes the first k entries (row-major from the
    top-left), so each chunk can be processed independently.
    """
    total = q ** (n * n)
    if n == 0:
        if chunk == 0:
            yield FqMatrix(q, ())
        return
    lo = total * chunk // chunks
    hi = total * (chunk + 1) // chunks
    step = 1 << 16
    weights = q ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    for start in range(lo, hi, step):
        idx = np.arange(start, min(hi, start + step), dtype=np.int64)
        mats = ((idx[:, None] // weights) % q).reshape(-1, n, n)
        pw = mats.copy()
        for _ in range(n - 1):
            pw = np.einsum("bij,bjk->bik", pw, mats) % q
        keep = ~pw.reshape(len(idx), -1).any(axis=1)
        for m in mats[keep]:
            yield FqMatrix(q, tuple(tuple(int(a) for a in r) for r in m))


def all_vectors(n: int, q: int) -> Iterator[Vector]:
    return product(range(q), repeat=n)


def count_orbits_chunk(n: int, q: int, chunk: int, chunks: int) -> dict[Bipartition, int]:
    counts: dict[Bipartition, int] = {}
    for x in nilpotent_matrices(n, q, chunk, chunks):
        cent = centralizer_basis(x)
        for v in all_vectors(n, q):
            bp = classify_orbit(FqPair(v, x), cent)
            counts[bp] = counts.get(bp, 0) + 1
    return counts


def count_orbits(n: int, q: int, extended: bool = False, chunks: int = 1) -> dict[Bipartition, int]:
    """|O(F_q)| for every orbit, by classifying every pair (v, x)."""
    _require_prime(q)
    _check_budget(q ** (n * n), EXTENDED_PAIR_BUDGET if extended else DEFAULT_PAIR_BUDGET,
                  f"pairs (v,x) for n={n}, q={q}")
    total: dict[Bipartition, int] = {bp: 0 for bp in enumerate_bipartitions(n)}
    for c in range(chunks):
        for bp, k in count_orbits_chunk(n, q, c, chunks).items():
            total[bp] += k
    return total


def fibre_flags(p: FqPair, flag_type: Bipartition) -> Iterator[tuple[Subspace, ...]]:
    """Partial flags of the given type with x(V_k) <= V_{k-1} and v in V_{mu_1}."""
    q, n, x = p.q, p.n, p.x
    comp = interleaved_composition(flag_type)
    m1 = flag_type.mu.part(1)
    dims = [0]
    for c in comp:
        dims.append(dims[-1] + c)
    vspan = Subspace(q, n, [p.v])

    def rec(k: int, flag: tuple[Subspace, ...]):
        if k == len(comp) + 1:
            yield flag
            return
        prev = flag[-1]
        upper = prev.preimage(x)
        for u in intermediate_subspaces(prev, upper, dims[k]):
            if k == m1 and not u.contains_space(vspan):
                continue
            yield from rec(k + 1, flag + (u,))

    zero = Subspace(q, n)
    if m1 == 0 and any(p.v):
        return
    yield from rec(1, (zero,))


def count_fiber(p: FqPair, flag_type: Bipartition) -> int:
    _check_budget(p.q ** (p.n * p.n), EXTENDED_PAIR_BUDGET, "flag enumeration")
    return sum(1 for _ in fibre_flags(p, flag_type))


def _invariant_subspaces(p: FqPair, d: int) -> Iterator[Subspace]:
    _check_budget(count_subspaces(p.n, d, p.q), SUBSPACE_BUDGET, "subspace enumeration")
    for basis in subspaces(p.n, d, p.q):
        w = Subspace(p.q, p.n, basis)
        if w.contains(p.v) and w.is_stable(p.x):
            yield w


def count_hall(p: FqPair, sub_quot: tuple[Partition, Partition]) -> int:
    """Number of x-stable W containing v with sub/quotient Jordan types rho, sigma."""
    rho, sigma = Partition(sub_quot[0]), Partition(sub_quot[1])
    if sum(rho) + sum(sigma) != p.n:
        raise ValueError("sizes do not add up to n")
    return sum(1 for w in _invariant_subspaces(p, sum(rho))
               if restricted_type(p.x, w) == rho and quotient_type(p.x, w) == sigma)


def closure_member(p: FqPair, target: Bipartition) -> bool:
    """Is there an F_q-rational witness W putting p in the closure of O_target?"""
    mu, nu = target
    return any(dominance_leq(restricted_type(p.x, w), mu) and dominance_leq(quotient_type(p.x, w), nu)
               for w in _invariant_subspaces(p, sum(mu)))


def random_conjugate(p: FqPair, rng) -> FqPair:
    """Conjugate a pair by a random invertible matrix."""
    n, q = p.n, p.q
    while True:
        g = FqMatrix(q, tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(n)))
        if g.rank() == n:
            return p.conjugate(g)


def closure_order_check(n: int, q: int) -> list[tuple[Bipartition, Bipartition, bool, bool]]:
    """Pairs (a, b) where the rational witness test disagrees with the order."""
    bad = []
    labels = enumerate_bipartitions(n)
    for a in labels:
        p = representative(a, q)
        for b in labels:
            got, want = closure_member(p, b), bipartition_leq(a, b)
            if got != want:
                bad.append((a, b, got, want))
    return bad
