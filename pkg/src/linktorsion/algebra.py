"""Exact arithmetic for multivariable Laurent polynomials and their matrices.

Coefficients live in one of three exact rings: the integers Z, the
rationals Q, or a prime field F_p.  A Laurent polynomial in k variables
t1..tk is a finitely supported map from exponent vectors (length-k
tuples of ints, negative entries allowed) to nonzero coefficients.

Term order convention: exponent vectors are compared as Python tuples,
variable 1 most significant.  Iteration and rendering list terms in
descending order, and "leading" / "lexicographically greatest" always
refer to this fixed order.  Any fixed total order compatible with
exponent addition would do; this one is pinned so canonical forms and
rendered output are stable across runs.

Unit normalization pulls out a monomial factor so that every variable
has minimum exponent 0, then scales: over a field the leading
coefficient becomes 1; over Z the content is removed and the leading
coefficient is positive.  Two polynomials are "equal up to units" when
their canonical forms coincide.  Rational functions are kept unreduced
(no multivariate gcd anywhere); equality is tested by cross-multiplying
numerators and denominators.
"""

import re
from fractions import Fraction
from math import gcd, isqrt


def _is_prime(p):
    if p < 2:
        return False
    return all(p % k for k in range(2, isqrt(p) + 1))


class Ring:
    """One of the exact coefficient rings Z, Q, or F_p (p prime).

    Elements are plain ints for Z and F_p (reduced to 0..p-1) and
    fractions.Fraction for Q.  All arithmetic is exact.
    """

    def __init__(self, kind, p=None):
        if kind not in ("Z", "Q", "Fp"):
            raise ValueError("ring kind must be 'Z', 'Q' or 'Fp', got %r" % (kind,))
        if kind == "Fp":
            if p is None or not _is_prime(p):
                raise ValueError("F_p requires a prime p, got %r" % (p,))
        elif p is not None:
            raise ValueError("p only makes sense for kind 'Fp'")
        self.kind = kind
        self.p = p
        self.zero = Fraction(0) if kind == "Q" else 0
        self.one = Fraction(1) if kind == "Q" else 1

    def __eq__(self, other):
        return isinstance(other, Ring) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "F%d" % self.p if self.kind == "Fp" else self.kind

    def coerce(self, x):
        """Bring an int / Fraction into this ring; reject non-elements."""
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                x = x.numerator
            elif self.kind == "Fp":
                return x.numerator * self.inv(x.denominator % self.p) % self.p
            else:
                raise ValueError("%r is not an integer" % (x,))
        if not isinstance(x, int):
            raise ValueError("cannot coerce %r into %r" % (x, self))
        return x % self.p if self.kind == "Fp" else x

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == 1

    def is_unit(self, a):
        if self.kind == "Z":
            return a in (1, -1)
        return a != 0

    def inv(self, a):
        """Inverse of a unit; raises ValueError on a non-unit."""
        if not self.is_unit(a):
            raise ValueError("%r is not a unit of %r" % (a, self))
        if self.kind == "Z":
            return a
        if self.kind == "Q":
            return 1 / a
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        """a / b when the quotient lies in the ring; raises otherwise."""
        if self.kind == "Z":
            q, r = divmod(a, b)
            if r:
                raise ValueError("%r does not divide %r in Z" % (b, a))
            return q
        if b == 0:
            raise ValueError("division by zero")
        return a / b if self.kind == "Q" else a * pow(b, -1, self.p) % self.p

    def render(self, a):
        return str(a)

    def parse(self, text):
        """Parse a coefficient: an integer, or 'a/b' over Q and F_p."""
        text = text.strip()
        m = re.fullmatch(r"(-?\d+)(?:/(-?\d+))?", text)
        if not m:
            raise ValueError("bad coefficient %r" % (text,))
        num = int(m.group(1))
        if m.group(2) is None:
            return self.coerce(num)
        if self.kind == "Z":
            raise ValueError("%r is not an integer coefficient" % (text,))
        return self.coerce(Fraction(num, int(m.group(2))))


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p):
    return Ring("Fp", p)


class LaurentPoly:
    """A Laurent polynomial: {exponent vector: nonzero coefficient}.

    Instances are treated as immutable; every operation returns a new
    polynomial over the same ring and variable count.
    """

    __slots__ = ("ring", "num_vars", "terms")

    def __init__(self, ring, num_vars, terms):
        self.ring = ring
        self.num_vars = num_vars
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(
                    "exponent vector %r has length %d, expected %d"
                    % (exps, len(exps), num_vars))
            c = ring.coerce(c)
            if c != 0:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring, num_vars):
        return cls(ring, num_vars, {})

    @classmethod
    def constant(cls, ring, num_vars, c):
        return cls(ring, num_vars, {(0,) * num_vars: c})

    @classmethod
    def one(cls, ring, num_vars):
        return cls.constant(ring, num_vars, 1)

    @classmethod
    def var(cls, ring, num_vars, index, power=1):
        """The monomial t_{index+1}^power (index is 0-based)."""
        if not 0 <= index < num_vars:
            raise ValueError("variable index %d out of range" % index)
        exps = [0] * num_vars
        exps[index] = power
        return cls(ring, num_vars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, ring, num_vars, coeff, exps):
        return cls(ring, num_vars, {tuple(exps): coeff})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError("expected LaurentPoly, got %r" % (other,))
        if other.ring != self.ring:
            raise ValueError("mixed coefficient rings %r and %r" % (self.ring, other.ring))
        if other.num_vars != self.num_vars:
            raise ValueError(
                "incompatible variable counts %d and %d" % (self.num_vars, other.num_vars))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.ring == other.ring and self.num_vars == other.num_vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.num_vars, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        add, p = self.ring.add, dict.pop
        for exps, c in other.terms.items():
            s = add(terms.get(exps, self.ring.zero), c)
            if s == 0:
                p(terms, exps, None)
            else:
                terms[exps] = s
        out = LaurentPoly.zero(self.ring, self.num_vars)
        out.terms = terms
        return out

    def __neg__(self):
        neg = self.ring.neg
        out = LaurentPoly.zero(self.ring, self.num_vars)
        out.terms = {e: neg(c) for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ring = self.ring
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(int.__add__, e1, e2))
                s = ring.add(terms.get(e, ring.zero), ring.mul(c1, c2))
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = LaurentPoly.zero(ring, self.num_vars)
        out.terms = terms
        return out

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentPoly.one(self.ring, self.num_vars)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        """Multiply by a ring element."""
        c = self.ring.coerce(c)
        mul = self.ring.mul
        out = LaurentPoly.zero(self.ring, self.num_vars)
        if c != 0:
            out.terms = {e: mul(coeff, c) for e, coeff in self.terms.items()}
        return out

    def shift(self, exps):
        """Multiply by the monomial t^exps."""
        exps = tuple(exps)
        out = LaurentPoly.zero(self.ring, self.num_vars)
        out.terms = {tuple(map(int.__add__, e, exps)): c for e, c in self.terms.items()}
        return out

    def leading(self):
        """(greatest exponent vector, its coefficient); error on zero."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self):
        if self.is_zero:
            raise ValueError("the zero polynomial has no exponent range")
        return tuple(min(e[i] for e in self.terms) for i in range(self.num_vars))

    def specialize_one(self, index):
        """Substitute t_{index+1} := 1 and drop that variable."""
        if not 0 <= index < self.num_vars:
            raise ValueError("variable index %d out of range" % index)
        ring = self.ring
        terms = {}
        for e, c in self.terms.items():
            short = e[:index] + e[index + 1:]
            s = ring.add(terms.get(short, ring.zero), c)
            if s == 0:
                terms.pop(short, None)
            else:
                terms[short] = s
        out = LaurentPoly.zero(ring, self.num_vars - 1)
        out.terms = terms
        return out

    def sorted_terms(self):
        """Terms in descending order of exponent vector."""
        return [(e, self.terms[e]) for e in sorted(self.terms, reverse=True)]

    def __repr__(self):
        return "<%s: %s>" % (self.ring, render_poly(self))


class Monomial:
    """A single term c * t^exps, used as a unit witness or composite variable."""

    __slots__ = ("coeff", "exponents")

    def __init__(self, coeff, exponents):
        self.coeff = coeff
        self.exponents = tuple(exponents)

    def __eq__(self, other):
        return (isinstance(other, Monomial) and self.coeff == other.coeff
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.coeff, self.exponents))

    @property
    def is_trivial_power(self):
        """True when the variable part is empty (pure constant)."""
        return all(e == 0 for e in self.exponents)

    def as_poly(self, ring):
        return LaurentPoly.monomial(ring, len(self.exponents), self.coeff, self.exponents)

    def __repr__(self):
        return "<Monomial %s>" % render_poly(self.as_poly(QQ if isinstance(self.coeff, Fraction) else ZZ))


def unit_normalize(p):
    """Split p != 0 into (canonical, unit) with p == canonical * unit.

    The unit is a monomial: its exponent part shifts every variable's
    minimum exponent to 0; its coefficient is the leading coefficient
    over a field, and +-content over Z (so the canonical form is
    primitive with positive leading coefficient).

    >>> p = LaurentPoly(ZZ, 2, {(1, -1): 3, (0, 0): -3})   # 3*t1*t2^-1 - 3
    >>> canon, unit = unit_normalize(p)
    >>> render_poly(canon), render_poly(unit.as_poly(ZZ))
    ('t1 - t2', '3*t2^-1')
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no unit normalization")
    ring = p.ring
    shift = p.min_exponents()
    shifted = p.shift(tuple(-s for s in shift))
    lead_c = shifted.terms[max(shifted.terms)]
    if ring.kind == "Z":
        content = 0
        for c in shifted.terms.values():
            content = gcd(content, c)
        scale = content if lead_c > 0 else -content
    else:
        scale = lead_c
    canonical = shifted.scale(ring.inv(scale)) if ring.kind != "Z" else \
        LaurentPoly(ring, p.num_vars, {e: c // scale for e, c in shifted.terms.items()})
    return canonical, Monomial(scale, shift)


def eq_up_to_units(a, b):
    """True iff a and b differ by a monomial unit (canonical forms agree).

    Both-zero compares equal; zero never equals nonzero.
    """
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    a._check(b)
    return unit_normalize(a)[0] == unit_normalize(b)[0]


class RationalFunction:
    """An unreduced fraction of Laurent polynomials over one ring.

    No gcd is ever taken; equality of values is always decided by
    cross-multiplication (see eq_up_to_units_rational).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        num._check(den)
        if den.is_zero:
            raise ValueError("zero denominator")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @property
    def num_vars(self):
        return self.num.num_vars

    @property
    def is_zero(self):
        return self.num.is_zero

    def mul_poly(self, p):
        return RationalFunction(self.num * p, self.den)

    def mul(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def specialize_one(self, index):
        """Substitute t_{index+1} := 1 in numerator and denominator."""
        den = self.den.specialize_one(index)
        if den.is_zero:
            raise ValueError(
                "denominator vanishes at t%d = 1; pick a column on a surviving component"
                % (index + 1))
        return RationalFunction(self.num.specialize_one(index), den)

    def normalized_pair(self):
        """Canonical (num, den) strings after unit-normalizing each part."""
        den = unit_normalize(self.den)[0]
        if self.is_zero:
            return "0", render_poly(den)
        return render_poly(unit_normalize(self.num)[0]), render_poly(den)

    def __repr__(self):
        n, d = self.normalized_pair()
        return "<(%s) / (%s)>" % (n, d)


def eq_up_to_units_rational(a, b):
    """Equality of rational functions up to monomial units, by cross-multiplying."""
    return eq_up_to_units(a.num * b.den, b.num * a.den)


# ---------------------------------------------------------------------------
# rendering / parsing of the fixed polynomial text format


def _var_name(i):
    return "t%d" % (i + 1)


def render_poly(p):
    """Render in the fixed text format: terms in descending term order.

    >>> render_poly(LaurentPoly(ZZ, 2, {(2, 1): 1, (0, 0): -1}))
    't1^2*t2 - 1'
    """
    if p.is_zero:
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        vars_part = "*".join(
            _var_name(i) if k == 1 else "%s^%d" % (_var_name(i), k)
            for i, k in enumerate(e) if k != 0)
        neg = c < 0
        mag = -c if neg else c
        if vars_part and mag == 1:
            body = vars_part
        elif vars_part:
            body = "%s*%s" % (p.ring.render(mag), vars_part)
        else:
            body = p.ring.render(mag)
        if not pieces:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


_TERM_RE = re.compile(
    r"""^
    (?:(?P<coeff>\d+(?:/\d+)?)\*?)?          # optional coefficient
    (?P<vars>t\d+(?:\^-?\d+)?(?:\*t\d+(?:\^-?\d+)?)*)?
    $""", re.VERBOSE)


def parse_poly(text, ring, num_vars):
    """Parse the text format produced by render_poly.

    >>> p = parse_poly("t1^2*t2 - 1", ZZ, 2)
    >>> sorted(p.terms.items())
    [((0, 0), -1), ((2, 1), 1)]
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    # Split into signed terms; '-' after '^' is an exponent sign, not a term break.
    chunks = []
    sign, start = 1, 0
    if s[0] in "+-":
        sign, start = (1 if s[0] == "+" else -1), 1
    cur = []
    i = start
    while i < len(s):
        ch = s[i]
        if ch in "+-" and s[i - 1] != "^":
            chunks.append((sign, "".join(cur)))
            sign, cur = (1 if ch == "+" else -1), []
        else:
            cur.append(ch)
        i += 1
    chunks.append((sign, "".join(cur)))

    result = LaurentPoly.zero(ring, num_vars)
    for sign, chunk in chunks:
        if chunk == "0" and len(chunks) == 1:
            return result
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("vars") is None):
            raise ValueError("bad polynomial term %r" % (chunk,))
        c = ring.parse(m.group("coeff")) if m.group("coeff") else ring.one
        if sign < 0:
            c = ring.neg(c)
        exps = [0] * num_vars
        if m.group("vars"):
            for factor in m.group("vars").split("*"):
                name, _, power = factor.partition("^")
                idx = int(name[1:]) - 1
                if not 0 <= idx < num_vars:
                    raise ValueError(
                        "variable %s out of range for %d variables" % (name, num_vars))
                exps[idx] += int(power) if power else 1
        result = result + LaurentPoly.monomial(ring, num_vars, c, exps)
    return result


# ---------------------------------------------------------------------------
# matrices of Laurent polynomials


def exact_div_poly(a, b):
    """a / b in the Laurent ring when b divides a exactly; raises otherwise.

    Both operands are first shifted to nonnegative exponents (an exact
    Laurent quotient of the shifted pair is then an ordinary polynomial),
    so leading-term division runs in a well-founded order and inexact
    input fails instead of descending forever.  Fraction-free elimination
    only ever requests exact divisions.
    """
    if b.is_zero:
        raise ValueError("division by the zero polynomial")
    if a.is_zero:
        return a
    ring = a.ring
    shift_a = a.min_exponents()
    shift_b = b.min_exponents()
    rem = a.shift(tuple(-s for s in shift_a))
    b0 = b.shift(tuple(-s for s in shift_b))
    lead_b, lead_bc = b0.leading()
    quo = LaurentPoly.zero(ring, a.num_vars)
    while not rem.is_zero:
        e, c = rem.leading()
        q_exp = tuple(map(int.__sub__, e, lead_b))
        if any(k < 0 for k in q_exp):
            raise ValueError("inexact polynomial division")
        try:
            q_c = ring.exact_div(c, lead_bc)
        except ValueError:
            raise ValueError("inexact polynomial division") from None
        t = LaurentPoly.monomial(ring, a.num_vars, q_c, q_exp)
        quo = quo + t
        rem = rem - t * b0
    return quo.shift(tuple(map(int.__sub__, shift_a, shift_b)))


class PolyMatrix:
    """A rectangular matrix of Laurent polynomials over one ring."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, entries):
        if not entries or not entries[0]:
            raise ValueError("empty matrix")
        self.nrows = len(entries)
        self.ncols = len(entries[0])
        first = entries[0][0]
        for row in entries:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")
            for p in row:
                first._check(p)
        self.entries = [list(row) for row in entries]

    @property
    def ring(self):
        return self.entries[0][0].ring

    @property
    def num_vars(self):
        return self.entries[0][0].num_vars

    @classmethod
    def identity(cls, ring, num_vars, n):
        one = LaurentPoly.one(ring, num_vars)
        zero = LaurentPoly.zero(ring, num_vars)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring, num_vars, nrows, ncols):
        zero = LaurentPoly.zero(ring, num_vars)
        return cls([[zero for _ in range(ncols)] for _ in range(nrows)])

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.entries == other.entries)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return PolyMatrix([[a - b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return PolyMatrix([[p * other for p in row] for row in self.entries])
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = LaurentPoly.zero(self.ring, self.num_vars)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = zero
                for k in range(self.ncols):
                    s = s + self.entries[i][k] * other.entries[k][j]
                row.append(s)
            out.append(row)
        return PolyMatrix(out)

    def minor(self, i, j):
        """Delete row i and column j."""
        return PolyMatrix([
            [p for jj, p in enumerate(row) if jj != j]
            for ii, row in enumerate(self.entries) if ii != i])

    def delete_columns(self, cols):
        cols = set(cols)
        return PolyMatrix([[p for j, p in enumerate(row) if j not in cols]
                           for row in self.entries])

    def delete_rows(self, rows):
        rows = set(rows)
        return PolyMatrix([row for i, row in enumerate(self.entries) if i not in rows])

    def det(self):
        """Determinant: cofactor expansion for size <= 4, Bareiss above."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows <= 4:
            return self.det_cofactor()
        return self.det_bareiss()

    def det_cofactor(self):
        """Plain recursive cofactor expansion along the first row."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 1:
            return self.entries[0][0]
        acc = LaurentPoly.zero(self.ring, self.num_vars)
        for j in range(n):
            a = self.entries[0][j]
            if a.is_zero:
                continue
            cofactor = a * self.minor(0, j).det_cofactor()
            acc = acc + (cofactor if j % 2 == 0 else -cofactor)
        return acc

    def det_bareiss(self):
        """Fraction-free Bareiss elimination; every division is exact."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        m = [list(row) for row in self.entries]
        ring, nv = self.ring, self.num_vars
        sign = 1
        prev = LaurentPoly.one(ring, nv)
        for k in range(n - 1):
            if m[k][k].is_zero:
                for r in range(k + 1, n):
                    if not m[r][k].is_zero:
                        m[k], m[r] = m[r], m[k]
                        sign = -sign
                        break
                else:
                    return LaurentPoly.zero(ring, nv)
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = exact_div_poly(pivot * m[i][j] - m[i][k] * m[k][j], prev)
                m[i][k] = LaurentPoly.zero(ring, nv)
            prev = pivot
        d = m[n - 1][n - 1]
        return -d if sign < 0 else d

    def __repr__(self):
        rows = ["[" + ", ".join(render_poly(p) for p in row) + "]" for row in self.entries]
        return "PolyMatrix([%s])" % ", ".join(rows)


# ---------------------------------------------------------------------------
# constant matrices over a Ring (tuples of tuples, hashable)


def mat_coerce(ring, rows):
    return tuple(tuple(ring.coerce(x) for x in row) for row in rows)


def mat_identity(ring, n):
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(n))
                 for i in range(n))


def mat_mul(ring, a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return tuple(
        tuple(
            sum_ring(ring, (ring.mul(a[i][x], b[x][j]) for x in range(k)))
            for j in range(m))
        for i in range(n))


def sum_ring(ring, items):
    acc = ring.zero
    for x in items:
        acc = ring.add(acc, x)
    return acc


def mat_det(ring, a):
    n = len(a)
    if n == 1:
        return a[0][0]
    acc = ring.zero
    for j in range(n):
        if ring.is_zero(a[0][j]):
            continue
        sub = tuple(tuple(row[jj] for jj in range(n) if jj != j) for row in a[1:])
        term = ring.mul(a[0][j], mat_det(ring, sub))
        acc = ring.add(acc, term if j % 2 == 0 else ring.neg(term))
    return acc


def mat_inv(ring, a):
    """Inverse via adjugate / det; requires det to be a unit of the ring."""
    n = len(a)
    d = mat_det(ring, a)
    dinv = ring.inv(d)  # raises ValueError on a non-unit determinant
    if n == 1:
        return ((dinv,),)
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            sub = tuple(tuple(a[ii][jj] for jj in range(n) if jj != i)
                        for ii in range(n) if ii != j)
            c = mat_det(ring, sub)
            row.append(ring.mul(dinv, c if (i + j) % 2 == 0 else ring.neg(c)))
        adj.append(tuple(row))
    return tuple(adj)


def mat_is_identity(ring, a):
    n = len(a)
    return all(a[i][j] == (ring.one if i == j else ring.zero)
               for i in range(n) for j in range(n))


def char_factor(t_monomial, const_matrix, ring):
    """det(T * A - I_n) for a composite-variable monomial T and constant A.

    T must have coefficient 1; A must be invertible over the ring.  The
    result is a Laurent polynomial in T's variables whose terms are all
    powers of T (characteristic-polynomial coefficients of A).
    """
    if t_monomial.coeff != 1:
        raise ValueError("composite variable must have coefficient 1")
    a = mat_coerce(ring, const_matrix)
    if not ring.is_unit(mat_det(ring, a)):
        raise ValueError("matrix is singular over %r" % (ring,))
    nv = len(t_monomial.exponents)
    n = len(a)
    t = t_monomial.as_poly(ring)
    one = LaurentPoly.one(ring, nv)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = t.scale(a[i][j])
            if i == j:
                entry = entry - one
            row.append(entry)
        rows.append(row)
    return PolyMatrix(rows).det()
