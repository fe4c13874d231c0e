"""Sparse multivariate Laurent polynomials over exact rationals.

This is the value type everything else in the package computes with.  A
polynomial is a map from monomials to nonzero rational coefficients; a
monomial is a sorted tuple of ``(variable_code, exponent)`` pairs with
nonzero (possibly negative) integer exponents.  All arithmetic is exact:
coefficients are Python ints or :class:`fractions.Fraction`.

Variables come in six families with a fixed canonical order
``x < t < y < z < gamma < beta``; within a family they are ordered by index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

FAMILIES = ("x", "t", "y", "z", "gamma", "beta")
_FAM_ORDER = {fam: i for i, fam in enumerate(FAMILIES)}
_FAM_SHIFT = 24


@dataclass(frozen=True, order=False)
class Variable:
    """A named indeterminate, e.g. x_3 or gamma."""

    family: str
    index: int = 1

    def __post_init__(self):
        if self.family not in _FAM_ORDER:
            raise ValueError(f"unknown variable family {self.family!r}")
        if self.index < 1:
            raise ValueError("variable index must be >= 1")

    @property
    def code(self) -> int:
        return (_FAM_ORDER[self.family] << _FAM_SHIFT) | self.index

    def __lt__(self, other: "Variable") -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        if self.family in ("gamma", "beta") and self.index == 1:
            return self.family
        return f"{self.family}{self.index}"

    __repr__ = __str__


def _decode(code: int) -> Variable:
    return Variable(FAMILIES[code >> _FAM_SHIFT], code & ((1 << _FAM_SHIFT) - 1))


def var_from_name(name: str) -> Variable:
    """Parse "x3", "t12", "gamma", "beta1" back into a Variable."""
    for fam in FAMILIES:
        if name == fam:
            return Variable(fam, 1)
        if name.startswith(fam) and name[len(fam):].isdigit():
            return Variable(fam, int(name[len(fam):]))
    raise ValueError(f"cannot parse variable name {name!r}")


def X(i: int) -> Variable:
    return Variable("x", i)


def T(i: int) -> Variable:
    return Variable("t", i)


def Y(i: int) -> Variable:
    return Variable("y", i)


def Z(i: int) -> Variable:
    return Variable("z", i)


GAMMA = Variable("gamma", 1)
BETA = Variable("beta", 1)


# A monomial key: tuple of (code, exp) pairs, sorted by code, exp != 0.
_ONE = ()


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ca, ea = a[i]
        cb, eb = b[j]
        if ca < cb:
            out.append(a[i])
            i += 1
        elif cb < ca:
            out.append(b[j])
            j += 1
        else:
            e = ea + eb
            if e:
                out.append((ca, e))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_pow(a: tuple, n: int) -> tuple:
    if n == 0:
        return _ONE
    return tuple((c, e * n) for c, e in a)


def _mono_deg(a: tuple) -> int:
    return sum(e for _, e in a)


def _mono_cmp(a: tuple, b: tuple) -> int:
    """Graded order, then lexicographic over the canonical variable order.

    Between monomials of equal total degree, the first variable (in canonical
    order) whose exponents differ decides; the larger exponent sorts first.
    """
    da, db = _mono_deg(a), _mono_deg(b)
    if da != db:
        return -1 if da > db else 1
    i = j = 0
    while i < len(a) and j < len(b):
        ca, ea = a[i]
        cb, eb = b[j]
        if ca == cb:
            if ea != eb:
                return -1 if ea > eb else 1
            i += 1
            j += 1
        elif ca < cb:
            return -1 if ea > 0 else 1
        else:
            return 1 if eb > 0 else -1
    while i < len(a):
        if a[i][1]:
            return -1 if a[i][1] > 0 else 1
        i += 1
    while j < len(b):
        if b[j][1]:
            return 1 if b[j][1] > 0 else -1
        j += 1
    return 0


_MONO_KEY = cmp_to_key(_mono_cmp)


def _norm_coeff(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c)}")


class Polynomial:
    """Immutable sparse Laurent polynomial.

    Do not mutate ``terms`` after construction; all operations return new
    objects, so values are safe to share across threads.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                c = _norm_coeff(coeff)
                if c:
                    clean[mono] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        """Internal constructor: terms assumed already normalized."""
        p = object.__new__(cls)
        object.__setattr__(p, "terms", terms)
        return p

    # -- constructors ------------------------------------------------
    @classmethod
    def zero(cls) -> "Polynomial":
        return _P_ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _P_ONE

    @classmethod
    def const(cls, c) -> "Polynomial":
        c = _norm_coeff(c if isinstance(c, (int, Fraction)) else Fraction(c))
        return cls._raw({_ONE: c} if c else {})

    @classmethod
    def var(cls, v: Variable, exp: int = 1) -> "Polynomial":
        if exp == 0:
            return _P_ONE
        return cls._raw({((v.code, exp),): 1})

    @classmethod
    def monomial(cls, pairs, coeff=1) -> "Polynomial":
        """Build coeff * prod(v**e) from (Variable, exp) pairs; repeated
        variables accumulate."""
        acc: dict = {}
        for v, e in pairs:
            acc[v.code] = acc.get(v.code, 0) + e
        key = tuple((c, e) for c, e in sorted(acc.items()) if e)
        c = _norm_coeff(coeff)
        if not c:
            return _P_ZERO
        return cls._raw({key: c})

    # -- basic queries -----------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> list:
        codes = set()
        for mono in self.terms:
            for c, _ in mono:
                codes.add(c)
        return [_decode(c) for c in sorted(codes)]

    def total_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(_mono_deg(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get(_ONE, 0)

    def coeff_of(self, pairs):
        """Coefficient of the monomial given as (Variable, exp) pairs."""
        key = tuple(sorted(((v.code, e) for v, e in pairs if e), key=lambda p: p[0]))
        return self.terms.get(key, 0)

    def is_symmetric_under_swap(self, a: Variable, b: Variable) -> bool:
        pa, pb = Polynomial.var(a), Polynomial.var(b)
        return self.substitute({a: pb, b: pa}) == self

    # -- arithmetic --------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = _norm_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.const(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = _norm_coeff(other)
            if not c:
                return _P_ZERO
            return Polynomial._raw({m: _norm_coeff(k * c) for m, k in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return _P_ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) * len(b) > 512:
            return self._mul_packed(a, b)
        out = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                s = get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw({m: _norm_coeff(c) for m, c in out.items()})

    @staticmethod
    def _mul_packed(a: dict, b: dict) -> "Polynomial":
        """Large products: pack exponent vectors into one integer per
        monomial so the inner loop is plain integer addition; 32 bits per
        variable slot with an offset for Laurent exponents."""
        codes = set()
        for m in a:
            for c, _ in m:
                codes.add(c)
        for m in b:
            for c, _ in m:
                codes.add(c)
        codes = sorted(codes)
        pos = {c: 32 * i for i, c in enumerate(codes)}
        offset = 1 << 16
        base = 0
        for i in range(len(codes)):
            base |= offset << (32 * i)

        def pack(mono):
            key = base  # every slot carries the offset, absent vars included
            for c, e in mono:
                key += e << pos[c]
            return key

        pa = [(pack(m) - base, c) for m, c in a.items()]
        pb = [(pack(m), c) for m, c in b.items()]
        out: dict = {}
        get = out.get
        for ka, ca in pa:
            for kb, cb in pb:
                kk = ka + kb
                s = get(kk, 0) + ca * cb
                if s:
                    out[kk] = s
                else:
                    out.pop(kk, None)
        mask = (1 << 32) - 1
        res = {}
        for kk, c in out.items():
            mono = []
            for i, code in enumerate(codes):
                e = ((kk >> (32 * i)) & mask) - offset
                if e:
                    mono.append((code, e))
            res[tuple(mono)] = _norm_coeff(c)
        return Polynomial._raw(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            if len(self.terms) == 1:
                ((m, c),) = self.terms.items()
                inv_c = Fraction(1, 1) / Fraction(c)
                return Polynomial._raw({_mono_pow(m, -1): _norm_coeff(inv_c)}) ** (-n)
            raise ValueError("negative power of a non-monomial polynomial")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            inv = Fraction(1, 1) / Fraction(other)
            return self * inv
        if isinstance(other, Polynomial) and len(other.terms) == 1:
            return self * other ** -1
        return NotImplemented

    # -- substitution and evaluation ---------------------------------
    def substitute(self, bindings: dict) -> "Polynomial":
        """Simultaneously substitute variables by polynomials or rationals.

        A bound value raised to a negative exponent must be invertible: a
        nonzero rational or a single-term (monomial) polynomial.
        """
        by_code = {}
        for v, val in bindings.items():
            if isinstance(val, (int, Fraction)):
                val = Polynomial.const(val)
            by_code[v.code] = val
        if not by_code:
            return self
        power_cache: dict = {}

        def powered(code: int, e: int) -> Polynomial:
            key = (code, e)
            got = power_cache.get(key)
            if got is None:
                base = by_code[code]
                if e >= 0:
                    got = base ** e
                else:
                    if base.is_zero():
                        raise ZeroDivisionError(
                            f"negative exponent of a value bound to 0 ({_decode(code)})"
                        )
                    got = base ** e  # Polynomial.__pow__ validates invertibility
                power_cache[key] = got
            return got

        out = _P_ZERO
        for mono, coeff in self.terms.items():
            free = []
            factor = None
            for code, e in mono:
                if code in by_code:
                    f = powered(code, e)
                    factor = f if factor is None else factor * f
                else:
                    free.append((code, e))
            term = Polynomial._raw({tuple(free): coeff})
            out = out + (term if factor is None else term * factor)
        return out

    def evaluate(self, values: dict) -> Fraction:
        """Evaluate at an all-rational point; every variable must be bound."""
        by_code = {v.code: Fraction(val) for v, val in values.items()}
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            prod = Fraction(coeff)
            for code, e in mono:
                if code not in by_code:
                    raise KeyError(f"unbound variable {_decode(code)}")
                v = by_code[code]
                if v == 0 and e < 0:
                    raise ZeroDivisionError("negative exponent at value 0")
                prod *= v ** e
            total += prod
        return total

    # -- exact division ----------------------------------------------
    def divexact_diff(self, a: Variable, b: Variable) -> "Polynomial":
        """Exact division by (a - b); raises if a nonzero remainder appears."""
        ca = a.code
        by_dega: dict[int, dict] = {}
        for mono, coeff in self.terms.items():
            d = 0
            rest = []
            for code, e in mono:
                if code == ca:
                    d = e
                else:
                    rest.append((code, e))
            by_dega.setdefault(d, {})[tuple(rest)] = coeff
        if not by_dega:
            return _P_ZERO
        lo = min(by_dega)
        hi = max(by_dega)
        shift = -lo if lo < 0 else 0
        coeffs = {d + shift: Polynomial._raw(t) for d, t in by_dega.items()}
        vb = Polynomial.var(b)
        quo: dict[int, Polynomial] = {}
        carry = _P_ZERO
        for k in range(hi + shift, 0, -1):
            qk = coeffs.get(k, _P_ZERO) + carry
            quo[k - 1] = qk
            carry = vb * qk
        rem = coeffs.get(0, _P_ZERO) + carry
        if not rem.is_zero():
            raise ArithmeticError("division by (a - b) left a nonzero remainder")
        result = _P_ZERO
        for k, q in quo.items():
            e = k - shift
            result = result + (q if e == 0 else q * Polynomial.var(a, e))
        return result

    # -- serialization -----------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _MONO_KEY(mc[0]))

    def to_json_obj(self) -> list:
        out = []
        for mono, coeff in self.sorted_terms():
            f = Fraction(coeff)
            exps = {str(_decode(c)): e for c, e in mono}
            out.append({"coeff": f"{f.numerator}/{f.denominator}", "exps": exps})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "Polynomial":
        terms = {}
        for entry in obj:
            num, _, den = entry["coeff"].partition("/")
            coeff = Fraction(int(num), int(den) if den else 1)
            pairs = [(var_from_name(name), e) for name, e in entry["exps"].items()]
            key = tuple(sorted(((v.code, e) for v, e in pairs if e), key=lambda p: p[0]))
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms)

    @classmethod
    def from_json(cls, s: str) -> "Polynomial":
        return cls.from_json_obj(json.loads(s))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            f = Fraction(coeff)
            factors = []
            for c, e in mono:
                name = str(_decode(c))
                factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(f)
            if not factors:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if f >= 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if f >= 0 else f"- {text}")
        return " ".join(parts)

    __repr__ = __str__


_P_ZERO = Polynomial._raw({})
_P_ONE = Polynomial._raw({_ONE: 1})


def as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, Variable):
        return Polynomial.var(v)
    if isinstance(v, (int, Fraction)):
        return Polynomial.const(v)
    raise TypeError(f"cannot interpret {v!r} as a polynomial")


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Dispatch wrapper used by the CLI; op in {add, sub, mul}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# polynomial matrices and determinants
# ---------------------------------------------------------------------------

class PolyMatrix:
    """Dense matrix of polynomials with an exact determinant."""

    def __init__(self, entries):
        self.entries = [[as_poly(e) for e in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = _P_ZERO
                for k in range(self.cols):
                    s = s + self.entries[i][k] * other.entries[k][j]
                row.append(s)
            out.append(row)
        return PolyMatrix(out)

    def determinant(self) -> Polynomial:
        return determinant(self)


def determinant(m) -> Polynomial:
    """Exact determinant by Laplace expansion memoized over column subsets.

    Accepts a PolyMatrix or a list-of-lists of polynomials; size <= 12.
    """
    if isinstance(m, PolyMatrix):
        grid = m.entries
    else:
        grid = [[as_poly(e) for e in row] for row in m]
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("determinant of a non-square matrix")
    if n > 12:
        raise ValueError("determinant size capped at 12")
    if n == 0:
        return _P_ONE
    full = (1 << n) - 1
    memo = {0: _P_ONE}

    def minor(mask: int) -> Polynomial:
        got = memo.get(mask)
        if got is not None:
            return got
        k = mask.bit_count()
        row = grid[n - k]
        acc = _P_ZERO
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            entry = row[j]
            if entry.terms:
                sub = minor(mask ^ low)
                term = entry * sub
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
            rest ^= low
        memo[mask] = acc
        return acc

    return minor(full)


# ---------------------------------------------------------------------------
# symmetric polynomial generators
# ---------------------------------------------------------------------------

def hk(k: int, atoms) -> Polynomial:
    """Complete homogeneous symmetric polynomial of the given atoms.

    Atoms may be Variables, rationals, or arbitrary polynomials (e.g. t1**-1).
    h_k = 0 for k < 0, h_0 = 1.
    """
    if k < 0:
        return _P_ZERO
    if k == 0:
        return _P_ONE
    vals = [as_poly(a) for a in atoms]
    # H[d] = h_d of the atoms processed so far
    H = [_P_ONE] + [_P_ZERO] * k
    for a in vals:
        for d in range(1, k + 1):
            H[d] = H[d] + a * H[d - 1]
    return H[k]


def ek(k: int, atoms) -> Polynomial:
    """Elementary symmetric polynomial; e_k = 0 for k < 0 or k > len(atoms)."""
    if k < 0:
        return _P_ZERO
    if k == 0:
        return _P_ONE
    vals = [as_poly(a) for a in atoms]
    if k > len(vals):
        return _P_ZERO
    E = [_P_ONE] + [_P_ZERO] * k
    for a in vals:
        for d in range(min(k, len(vals)), 0, -1):
            E[d] = E[d] + a * E[d - 1]
    return E[k]


def gen_series_coeff(i: int, x_atoms, t_atoms) -> Polynomial:
    """Coefficient of u^i in prod(1 - t u) / prod(1 - x u).

    Equals sum_m e_m(-t) h_{i-m}(x); this is the building block of
    multi-Schur determinants.
    """
    if i < 0:
        return _P_ZERO
    t_vals = [as_poly(a) for a in t_atoms]
    out = _P_ZERO
    for m in range(0, min(i, len(t_vals)) + 1):
        em = ek(m, [-a for a in t_vals])
        if em.is_zero():
            continue
        out = out + em * hk(i - m, x_atoms)
    return out


# ---------------------------------------------------------------------------
# divided difference operators
# ---------------------------------------------------------------------------

def swap_x(p: Polynomial, i: int) -> Polynomial:
    """Apply the simple transposition s_i exchanging x_i and x_{i+1}."""
    return p.substitute({X(i): Polynomial.var(X(i + 1)), X(i + 1): Polynomial.var(X(i))})


def divided_difference(p: Polynomial, i: int) -> Polynomial:
    """Newton divided difference (p - s_i p)/(x_i - x_{i+1}), exactly."""
    num = p - swap_x(p, i)
    if num.is_zero():
        return _P_ZERO
    return num.divexact_diff(X(i), X(i + 1))


def divided_difference_word(p: Polynomial, word) -> Polynomial:
    """Apply d_{i_1} ... d_{i_m} for word = (i_1, ..., i_m).

    The word is applied right-to-left, matching operator composition.
    """
    for i in reversed(list(word)):
        p = divided_difference(p, i)
    return p


def longest_word(n: int) -> tuple:
    """Reduced word (1,2,...,n-1, 1,2,...,n-2, ..., 1) for the longest
    element of the symmetric group S_n, e.g. (1,2,1) for n=3."""
    if n <= 1:
        return ()
    return tuple(range(1, n)) + longest_word(n - 1)


def x_staircase(n: int) -> Polynomial:
    """The monomial x1^{n-1} x2^{n-2} ... x_{n-1}."""
    return Polynomial.monomial([(X(i), n - i) for i in range(1, n + 1)])


def pi_w0(p: Polynomial, n: int) -> Polynomial:
    """Demazure operator for the longest element: pi_w0 f = d_w0(x^rho f)."""
    return divided_difference_word(x_staircase(n) * p, longest_word(n))
