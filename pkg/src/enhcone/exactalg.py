"""Exact univariate polynomials, rational functions over Q and their matrices.

Everything here is arbitrary precision; there is no floating point.
``IntPolynomial`` stores ascending coefficients with trailing zeros
trimmed, so the zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Sequence

ZERO_DEGREE = -1


class ZeroPivotError(ArithmeticError):
    """A zero pivot was met: the supplied order is not admissible."""


class IntPolynomial:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> IntPolynomial:
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if coeff == 0:
            return ZERO
        return cls._raw((0,) * degree + (int(coeff),))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return ZERO
        c = [0] * (max(terms) + 1)
        for d, a in terms.items():
            c[d] += a
        return cls(c)

    # ------------------------------------------------------------ basics

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest degree with a nonzero coefficient (-1 for zero)."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return ZERO_DEGREE

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {d: a for d, a in enumerate(self.coeffs) if a}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and all(a == 0 for a in self.coeffs[:-1])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("IntPolynomial", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        out = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[d]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            a = abs(a)
            if d == 0:
                body = str(a)
            else:
                mon = var if d == 1 else f"{var}^{d}"
                body = mon if a == 1 else f"{a}*{mon}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    # ------------------------------------------------------------ ring ops

    @staticmethod
    def _coerce(x) -> IntPolynomial:
        if isinstance(x, IntPolynomial):
            return x
        if isinstance(x, int):
            return IntPolynomial([x])
        raise TypeError(f"cannot coerce {type(x).__name__} to IntPolynomial")

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] += x
        return IntPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return IntPolynomial._raw(tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        return IntPolynomial._raw(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by t^k (k may be negative if divisibility allows)."""
        if not self.coeffs or k == 0:
            return self
        if k > 0:
            return IntPolynomial._raw((0,) * k + self.coeffs)
        if self.valuation < -k:
            raise ArithmeticError(f"{self} is not divisible by t^{-k}")
        return IntPolynomial._raw(self.coeffs[-k:])

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> IntPolynomial:
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial._raw(tuple(a // g for a in self.coeffs))

    def divmod_exact(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division over Z; quotient coefficients must divide exactly.

        Raises ArithmeticError when a quotient coefficient is not an
        integer (the divisor does not divide in Z[t]).
        """
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        b = other.coeffs
        if len(rem) - 1 < db:
            return ZERO, self
        q = [0] * (len(rem) - db)
        for i in range(len(rem) - 1 - db, -1, -1):
            top = rem[i + db]
            if top == 0:
                continue
            c, r = divmod(top, lb)
            if r:
                raise ArithmeticError("non-integral quotient")
            q[i] = c
            for j in range(db + 1):
                rem[i + j] -= c * b[j]
        return IntPolynomial(q), IntPolynomial(rem)

    def exact_div(self, other) -> IntPolynomial:
        """Quotient in Z[t]; raises ArithmeticError on a nonzero remainder."""
        other = self._coerce(other)
        if other.is_constant():
            if not other.coeffs:
                raise ZeroDivisionError("division by the zero polynomial")
            d = other.coeffs[0]
            if any(a % d for a in self.coeffs):
                raise ArithmeticError(f"{self} not divisible by {d}")
            return IntPolynomial._raw(tuple(a // d for a in self.coeffs))
        v = min(self.valuation, other.valuation) if self.coeffs else 0
        a, b = self.shift(-v), other.shift(-v)
        if b.valuation > 0:
            raise ArithmeticError(f"{self} not divisible by {other}")
        q, r = a.divmod_exact(b)
        if r:
            raise ArithmeticError(f"{self} not divisible by {other}")
        return q

    def divides(self, other: IntPolynomial) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    # ------------------------------------------------------------ evaluation

    def __call__(self, x):
        """Horner evaluation at an integer, Fraction or polynomial."""
        if isinstance(x, (IntPolynomial, RationalFunction)):
            return self.compose(x)
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    evaluate = __call__

    def compose(self, inner):
        acc = ZERO if isinstance(inner, IntPolynomial) else RationalFunction(ZERO)
        for a in reversed(self.coeffs):
            acc = acc * inner + a
        return acc

    def substitute_power(self, k: int) -> IntPolynomial:
        """p(t) -> p(t^k)."""
        if k == 1 or not self.coeffs:
            return self
        c = [0] * (k * (len(self.coeffs) - 1) + 1)
        for d, a in enumerate(self.coeffs):
            c[k * d] = a
        return IntPolynomial._raw(tuple(c))

    def is_even(self) -> bool:
        """True if only even powers of t occur."""
        return all(a == 0 for a in self.coeffs[1::2])

    def parity_support(self) -> set[int]:
        return {d % 2 for d, a in enumerate(self.coeffs) if a}

    def halve_degrees(self) -> IntPolynomial:
        """q(t) with q(t^2) = self; requires only even powers."""
        if not self.is_even():
            raise ArithmeticError(f"{self} has odd powers of t")
        return IntPolynomial._raw(self.coeffs[::2])

    def reflect(self) -> IntPolynomial:
        """p(-t)."""
        return IntPolynomial._raw(tuple(-a if d % 2 else a for d, a in enumerate(self.coeffs)))

    def nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)


def _convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a, j):
                out[i] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def t_power(k: int) -> IntPolynomial:
    return IntPolynomial.monomial(k)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[t], positive leading coefficient."""
    if not a:
        return _normalize_sign(b)
    if not b:
        return _normalize_sign(a)
    c = gcd(a.content(), b.content())
    v = min(a.valuation, b.valuation)
    a, b = a.shift(-a.valuation).primitive(), b.shift(-b.valuation).primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b.degree > 0:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive() if r else r
        if not b:
            break
    g = a if not b else ONE
    return _normalize_sign(g.primitive() * c).shift(v)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    rem = list(a.coeffs)
    db = b.degree
    lb = b.leading
    bc = b.coeffs
    while len(rem) - 1 >= db and rem:
        top = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for j in range(db + 1):
            rem[shift + j] -= top * bc[j]
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPolynomial(rem)


def _normalize_sign(p: IntPolynomial) -> IntPolynomial:
    return -p if p.leading < 0 else p


# ------------------------------------------------------------------ Q(t)


class RationalFunction:
    """A fraction of integer polynomials, always stored in lowest terms.

    The stored pair is unique: numerator and denominator are coprime in
    Q[t], their combined integer content is 1, and the denominator has a
    positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if isinstance(num, Fraction):
            num, den = IntPolynomial([num.numerator]), IntPolynomial([num.denominator]) * (den or 1)
        num = IntPolynomial._coerce(num)
        den = ONE if den is None else IntPolynomial._coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den.coeffs[0] == 1

    def to_polynomial(self) -> IntPolynomial:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not in Z[t]")
        return self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntPolynomial)):
            other = RationalFunction(other)
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    @staticmethod
    def _coerce(x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Fraction):
            return RationalFunction(x)
        return RationalFunction(IntPolynomial._coerce(x), _reduced=True)

    def __add__(self, other):
        other = self._coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.num or not other.num:
            return RationalFunction(ZERO, _reduced=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return Fraction(self.num(x)) / d


def _reduce(num: IntPolynomial, den: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    if not num:
        return ZERO, ONE
    v = min(num.valuation, den.valuation)
    if v:
        num, den = num.shift(-v), den.shift(-v)
    if not den.is_constant():
        # fast paths: monomial denominators and exact division
        if den.is_monomial() and num.valuation == 0:
            pass
        else:
            try:
                q = num.exact_div(den)
            except ArithmeticError:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            else:
                num, den = q, ONE
    c = gcd(num.content(), den.content())
    if den.leading < 0:
        c = -c
    if c != 1:
        num = IntPolynomial._raw(tuple(a // c for a in num.coeffs))
        den = IntPolynomial._raw(tuple(a // c for a in den.coeffs))
    return num, den


# ------------------------------------------------------------------ matrices


class PolyMatrix:
    """Square matrix over Q(t) indexed by an ordered list of hashable labels."""

    def __init__(self, labels: Sequence[Hashable], entries=None, *, symmetric: bool = False):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        n = len(self.labels)
        zero = RationalFunction(ZERO, _reduced=True)
        if entries is None:
            self.rows = [[zero] * n for _ in range(n)]
        else:
            self.rows = [[RationalFunction._coerce(e) for e in row] for row in entries]
            if len(self.rows) != n or any(len(r) != n for r in self.rows):
                raise ValueError("entries do not match label count")
        self.symmetric = symmetric

    @classmethod
    def identity(cls, labels) -> PolyMatrix:
        m = cls(labels, symmetric=True)
        for i in range(len(m.labels)):
            m.rows[i][i] = RationalFunction(ONE, _reduced=True)
        return m

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, key):
        a, b = key
        return self.rows[self.index[a]][self.index[b]]

    def __setitem__(self, key, value):
        a, b = key
        self.rows[self.index[a]][self.index[b]] = RationalFunction._coerce(value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix) or set(self.labels) != set(other.labels):
            return False
        return all(self[a, b] == other[a, b] for a in self.labels for b in self.labels)

    def reorder(self, labels) -> PolyMatrix:
        labels = tuple(labels)
        if set(labels) != set(self.labels) or len(labels) != len(self.labels):
            raise ValueError("reorder must be a permutation of the labels")
        idx = [self.index[x] for x in labels]
        return PolyMatrix(labels, [[self.rows[i][j] for j in idx] for i in idx],
                          symmetric=self.symmetric)

    def transpose(self) -> PolyMatrix:
        n = len(self.labels)
        return PolyMatrix(self.labels, [[self.rows[j][i] for j in range(n)] for i in range(n)],
                          symmetric=self.symmetric)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.labels != other.labels:
            other = other.reorder(self.labels)
        n = len(self.labels)
        out = PolyMatrix(self.labels)
        for i in range(n):
            ri = self.rows[i]
            for j in range(n):
                acc = RationalFunction(ZERO, _reduced=True)
                for k in range(n):
                    if ri[k] and other.rows[k][j]:
                        acc = acc + ri[k] * other.rows[k][j]
                out.rows[i][j] = acc
        return out

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        if self.labels != other.labels:
            other = other.reorder(self.labels)
        n = len(self.labels)
        return PolyMatrix(self.labels, [[self.rows[i][j] - other.rows[i][j] for j in range(n)]
                                        for i in range(n)])

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    def is_symmetric(self) -> bool:
        n = len(self.labels)
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))


def ldl_decompose(omega: PolyMatrix, order: Sequence[Hashable] | None = None
                  ) -> tuple[PolyMatrix, PolyMatrix]:
    """Factor a symmetric matrix as L D L^t over Q(t).

    Pivots are taken in ``order`` (first label first); L is unitriangular
    with respect to that order and D is diagonal.  A zero pivot raises
    ZeroPivotError.
    """
    if order is None:
        order = omega.labels
    m = omega.reorder(order)
    if not m.is_symmetric():
        raise ValueError("ldl_decompose needs a symmetric matrix")
    n = len(order)
    A = m.rows
    zero = RationalFunction(ZERO, _reduced=True)
    one = RationalFunction(ONE, _reduced=True)
    L = [[zero] * n for _ in range(n)]
    d: list[RationalFunction] = []
    for j in range(n):
        acc = A[j][j]
        Lj = L[j]
        for k in range(j):
            if Lj[k]:
                acc = acc - Lj[k] * Lj[k] * d[k]
        if not acc:
            raise ZeroPivotError(f"zero pivot at position {j} ({order[j]})")
        d.append(acc)
        L[j][j] = one
        # column j of L below the diagonal
        wk = [Lj[k] * d[k] if Lj[k] else None for k in range(j)]
        for i in range(j + 1, n):
            Li = L[i]
            acc = A[i][j]
            for k in range(j):
                if wk[k] is not None and Li[k]:
                    acc = acc - Li[k] * wk[k]
            if acc:
                Li[j] = acc / d[j]
    Lm = PolyMatrix(order)
    Lm.rows = L
    Dm = PolyMatrix(order, symmetric=True)
    for j in range(n):
        Dm.rows[j][j] = d[j]
    return Lm, Dm
