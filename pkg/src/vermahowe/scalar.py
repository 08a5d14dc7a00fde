"""Exact ground fields, quantum combinatorics and numeric specialization.

Two ground fields are used throughout the package:

* the *quantum* field Q(v, U1, ..., Un), where ``Ui`` stands for ``v**mu_i``;
  all generators are invertible, so elements are Laurent-type rational
  functions;
* the *classical* field Q(l1, ..., ln), where ``li`` stands for ``lambda_i``.

A :class:`FieldElement` stores a reduced fraction of two integer
polynomials (backed by ``flint.fmpz_mpoly``).  The representation is unique,
so equality and hashing are data comparisons.

Code elsewhere in the package never builds field elements directly; it asks a
*scalar context* (:class:`SymbolicQuantum`, :class:`SpecializedQuantum`,
:class:`SymbolicClassical`) for quantum numbers, powers of ``v`` and so on.
The same module-theoretic code then runs symbolically or over the rationals.
"""

from __future__ import annotations

import ast
import functools
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import flint

from .errors import ModeError, ParseError, SpecializationSingular

QUANTUM = "quantum"
CLASSICAL = "classical"

MAX_REDRAWS = 16


@dataclass(frozen=True)
class GeneratorSet:
    """The generators of one ground field.

    ``mode`` is ``"quantum"`` (generators ``v, U1..Un``) or ``"classical"``
    (generators ``l1..ln``).
    """

    mode: str
    n: int

    def __post_init__(self):
        if self.mode not in (QUANTUM, CLASSICAL):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")

    @property
    def names(self) -> tuple[str, ...]:
        if self.mode == QUANTUM:
            return ("v",) + tuple(f"U{i}" for i in range(1, self.n + 1))
        return tuple(f"l{i}" for i in range(1, self.n + 1))

    @property
    def invertible(self) -> bool:
        return self.mode == QUANTUM

    @property
    def ctx(self):
        return _context(self.names)

    def gen(self, name: str) -> "FieldElement":
        try:
            idx = self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown generator {name!r} for {self}") from None
        return FieldElement._raw(self, self.ctx.gen(idx), self.ctx.constant(1))

    def const(self, value) -> "FieldElement":
        return FieldElement.from_rational(self, value)

    @property
    def v(self) -> "FieldElement":
        self._require(QUANTUM)
        return self.gen("v")

    def U(self, i: int) -> "FieldElement":
        self._require(QUANTUM)
        return self.gen(f"U{i}")

    def lam(self, i: int) -> "FieldElement":
        self._require(CLASSICAL)
        return self.gen(f"l{i}")

    def _require(self, mode):
        if self.mode != mode:
            raise ModeError(f"operation needs {mode} mode, got {self.mode}")


@functools.cache
def _context(names):
    # zero generators is not a valid flint context; keep a dummy variable
    return flint.fmpz_mpoly_ctx.get(names or ("_",), "lex")


def _poly_key(p):
    return tuple(p.terms())


class FieldElement:
    """A reduced rational function with integer-polynomial numerator and denominator.

    Normal form: ``gcd(num, den) = 1`` over Z (so contents are cleared) and the
    lex-leading coefficient of ``den`` is positive.
    """

    __slots__ = ("gens", "num", "den", "_hash")

    def __init__(self, *args, **kwargs):
        raise TypeError("use GeneratorSet.const/gen or parse_scalar")

    @classmethod
    def _raw(cls, gens, num, den):
        self = object.__new__(cls)
        self.gens = gens
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, gens, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            ctx = gens.ctx
            return cls._raw(gens, ctx.constant(0), ctx.constant(1))
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            if den.leading_coefficient() < 0:
                num = -num
                den = -den
        return cls._raw(gens, num, den)

    @classmethod
    def from_rational(cls, gens: GeneratorSet, value) -> "FieldElement":
        value = Fraction(value)
        ctx = gens.ctx
        return cls._make(gens, ctx.constant(value.numerator), ctx.constant(value.denominator))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_rational(self):
        """The value as a Fraction if this element is constant, else None."""
        if self.num.is_constant() and self.den.is_constant():
            return Fraction(int(self.num.leading_coefficient()) if not self.num.is_zero() else 0,
                            int(self.den.leading_coefficient()))
        return None

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.gens != self.gens:
                raise ModeError(f"cannot mix {self.gens} and {other.gens}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.from_rational(self.gens, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return FieldElement._raw(self.gens, a + c, b)
        if b == d:
            return FieldElement._make(self.gens, a + c, b)
        g = b.gcd(d)
        if g.is_one():
            return FieldElement._make(self.gens, a * d + c * b, b * d)
        bg, dg = b / g, d / g
        return FieldElement._make(self.gens, a * dg + c * bg, b * dg)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.gens, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return FieldElement._make(self.gens, a.context().constant(0), b)
        if b.is_one() and d.is_one():
            return FieldElement._raw(self.gens, a * c, b)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return FieldElement._raw(self.gens, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return FieldElement._make(self.gens, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement._raw(self.gens, self.num ** k, self.den ** k)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement.from_rational(self.gens, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.gens == other.gens and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            r = self.as_rational()
            if r is not None:
                self._hash = hash(r)
            else:
                self._hash = hash((self.gens, _poly_key(self.num), _poly_key(self.den)))
        return self._hash

    # -- text ---------------------------------------------------------------

    def __str__(self):
        num = str(self.num)
        if self.den.is_one():
            return num
        den = str(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1 or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"FieldElement({str(self)!r}, {self.gens.mode}, n={self.gens.n})"


def field_zero(gens: GeneratorSet) -> FieldElement:
    return FieldElement.from_rational(gens, 0)


def field_one(gens: GeneratorSet) -> FieldElement:
    return FieldElement.from_rational(gens, 1)


# ---------------------------------------------------------------------------
# parsing

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_scalar(text: str, gens: GeneratorSet) -> FieldElement:
    """Parse the canonical string form (or any arithmetic expression in it).

    Accepts integers, generator names, ``+ - * / ^`` and parentheses.
    Negative exponents are allowed (``v^-1``).
    """
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty scalar expression", 0)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"malformed scalar {text!r}", exc.offset) from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return FieldElement.from_rational(gens, node.value)
        if isinstance(node, ast.Name):
            return gens.gen(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            if isinstance(node.op, ast.Pow):
                exp = _int_exponent(node.right)
                if exp is None:
                    raise ParseError(f"exponent must be an integer in {text!r}", node.col_offset)
                return walk(node.left) ** exp
            a, b = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if b.is_zero():
                raise ParseError(f"division by zero in {text!r}", node.col_offset)
            return a / b
        raise ParseError(f"unsupported syntax in {text!r}", getattr(node, "col_offset", None))

    return walk(tree)


def _int_exponent(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        inner = _int_exponent(node.operand)
        return None if inner is None else -inner
    return None


# ---------------------------------------------------------------------------
# quantum combinatorics


def qnum(x, gens: GeneratorSet) -> FieldElement:
    """Quantum number ``(v^x - v^-x)/(v - v^-1)``.

    ``x`` is an integer, or a pair ``(i, r)`` meaning ``mu_i + r``.
    """
    gens._require(QUANTUM)
    v = gens.v
    if isinstance(x, tuple):
        i, r = x
        top = gens.U(i) * v ** r
        return (top - top.inverse()) / (v - v.inverse())
    return _qint(gens, x)


@functools.lru_cache(maxsize=None)
def _qint(gens, k):
    if k < 0:
        return -_qint(gens, -k)
    v = gens.v
    total = field_zero(gens)
    for t in range(k):
        total = total + v ** (k - 1 - 2 * t)
    return total


def qfact_qbinom(k: int, j: int, gens: GeneratorSet) -> tuple[FieldElement, FieldElement]:
    """Return ``([k]!, [k choose j])``."""
    gens._require(QUANTUM)
    if k < 0 or j < 0 or j > k:
        raise ValueError(f"need 0 <= j <= k, got k={k}, j={j}")
    fk = qfactorial(k, gens)
    return fk, fk / (qfactorial(j, gens) * qfactorial(k - j, gens))


@functools.lru_cache(maxsize=None)
def qfactorial(k: int, gens: GeneratorSet) -> FieldElement:
    out = field_one(gens)
    for t in range(1, k + 1):
        out = out * _qint(gens, t)
    return out


def pochhammer(base, length: int):
    """Increasing Pochhammer symbol ``base (base+1) ... (base+length-1)``."""
    if length < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    out = 1
    for t in range(length):
        out = out * (base + t)
    return out


def multinomial(d: Sequence[int], s: Sequence[int]) -> int:
    """Coefficient of ``X^s`` in ``prod_i (X_1 + ... + X_i)^{d_i}``.

    Computed by direct expansion; see :func:`multinomial_product` for the
    closed product-of-binomials form.
    """
    d, s = tuple(d), tuple(s)
    if len(d) != len(s):
        raise ValueError("d and s must have the same length")
    return _expand_partial_sums(d).get(s, 0)


@functools.lru_cache(maxsize=None)
def _expand_partial_sums(d):
    m = len(d)
    poly = {(0,) * m: 1}
    for i, power in enumerate(d):
        for _ in range(power):
            nxt = {}
            for exp, coeff in poly.items():
                for k in range(i + 1):
                    e = list(exp)
                    e[k] += 1
                    e = tuple(e)
                    nxt[e] = nxt.get(e, 0) + coeff
            poly = nxt
    return poly


def multinomial_product(d: Sequence[int], j: Sequence[int]) -> int:
    """Product form ``prod_{i=1}^{m-1} C(d_{i+1} + j_{i+1}, j_i)`` with ``j_m = 0``.

    Equals ``multinomial(d, s)`` for ``s_i = d_i + j_i - j_{i-1}``.
    """
    m = len(d)
    jj = list(j) + [0] * (m - len(j))
    out = 1
    for i in range(m - 1):
        top, bot = d[i + 1] + jj[i + 1], jj[i]
        if bot < 0 or top < 0 or bot > top:
            return 0
        out *= math.comb(top, bot)
    return out


def multinomial_shift(d: Sequence[int], s: Sequence[int]):
    """The ``j`` with ``s = d + sum_i j_i alpha_i``, or None if none exists."""
    j, acc = [], 0
    for di, si in zip(d, s):
        acc += si - di
        j.append(acc)
    if j and j[-1] != 0:
        return None
    return tuple(j[:-1])


# ---------------------------------------------------------------------------
# specialization


_V_CHOICES = (Fraction(2), Fraction(3, 2), Fraction(5, 3), Fraction(7, 4), Fraction(9, 5),
              Fraction(3), Fraction(5, 2), Fraction(7, 3), Fraction(11, 7), Fraction(13, 8))


@dataclass(frozen=True)
class Specialization:
    """A numeric assignment of every generator, plus the seed that drew it."""

    gens: GeneratorSet
    values: tuple[Fraction, ...]
    seed: int | None = None

    def __post_init__(self):
        if len(self.values) != len(self.gens.names):
            raise ValueError("one value per generator required")
        if any(x == 0 for x in self.values):
            raise SpecializationSingular("generators must specialize to nonzero values")
        if self.gens.mode == QUANTUM and self.values[0] in (1, -1):
            raise SpecializationSingular("v must not specialize to 0 or +-1")

    @classmethod
    def from_mapping(cls, gens: GeneratorSet, mapping, seed=None) -> "Specialization":
        missing = [n for n in gens.names if n not in mapping]
        if missing:
            raise ValueError(f"missing values for {missing}")
        return cls(gens, tuple(Fraction(mapping[n]) for n in gens.names), seed)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.gens.names, self.values))

    @property
    def v(self) -> Fraction:
        return self.values[0]

    def U(self, i: int) -> Fraction:
        return self.values[i]

    @classmethod
    def draw(cls, gens: GeneratorSet, seed: int) -> "Specialization":
        """Deterministic admissible draw for ``seed``.

        Quantum: ``v`` from a fixed list of non-roots-of-unity, ``U_i`` random
        rationals, rejecting draws where some ``U_i`` or partial product of the
        ``U``'s lies in ``+-v^Z`` (the quantum shadow of an integral weight).
        """
        rng = random.Random(seed)
        if gens.mode == CLASSICAL:
            vals = [Fraction(rng.randint(-97, 97), rng.randint(2, 37)) for _ in gens.names]
            vals = [x if x.denominator > 1 else x + Fraction(1, 2) for x in vals]
            return cls(gens, tuple(vals), seed)
        v = _V_CHOICES[seed % len(_V_CHOICES)]
        while True:
            us = [Fraction(rng.randint(2, 61), rng.randint(2, 61)) * rng.choice((1, -1))
                  for _ in range(gens.n)]
            partial = list(itertools.accumulate(us, lambda a, b: a * b))
            if all(not in_power_orbit(u, v) for u in us + partial):
                return cls(gens, (v, *us), seed)


def in_power_orbit(x: Fraction, v: Fraction, bound: int = 512) -> bool:
    """True iff ``x = +-v^m`` for some integer ``m``."""
    x, v = abs(Fraction(x)), abs(Fraction(v))
    if x == 1:
        return True
    if v == 1:
        return False
    if (x > 1) != (v > 1):
        v = 1 / v
    for _ in range(bound):
        x /= v
        if x == 1:
            return True
        if (x > 1) != (v > 1):
            return False
    return False


def is_admissible(strand_values: Sequence[Fraction], v: Fraction) -> bool:
    """Quantum admissibility of per-strand weight exponentials ``U``.

    Some ordering must keep every partial product outside ``+-v^Z``.
    """
    vals = list(strand_values)
    for perm in itertools.permutations(range(len(vals))):
        acc = Fraction(1)
        ok = True
        for i in perm:
            acc *= vals[i]
            if in_power_orbit(acc, v):
                ok = False
                break
        if ok:
            return True
    return not vals


def is_admissible_classical(weights: Sequence[Fraction]) -> bool:
    """Some ordering has every partial sum of the weights non-integral."""
    vals = [Fraction(x) for x in weights]
    for perm in itertools.permutations(range(len(vals))):
        acc = Fraction(0)
        if all((acc := acc + vals[i]).denominator != 1 for i in perm):
            return True
    return not vals


def _eval_poly(p, point):
    total = Fraction(0)
    for exps, coeff in p.terms():
        term = Fraction(int(coeff))
        for base, e in zip(point, exps):
            if e:
                term *= base ** int(e)
        total += term
    return total


def specialize(x: FieldElement, sp: Specialization) -> Fraction:
    """Evaluate ``x`` at the numeric assignment ``sp``."""
    if x.gens != sp.gens:
        raise ModeError(f"specialization for {sp.gens} applied to element of {x.gens}")
    den = _eval_poly(x.den, sp.values)
    if den == 0:
        raise SpecializationSingular(f"denominator of {x} vanishes at {sp.as_dict()}")
    return _eval_poly(x.num, sp.values) / den


def with_redraws(fn, gens: GeneratorSet, seed: int, retries: int = MAX_REDRAWS):
    """Call ``fn(sp)`` on ``Specialization.draw(gens, seed')`` for ``seed' = seed, seed+1, ...``.

    A :class:`SpecializationSingular` triggers a redraw; after ``retries``
    redraws the last error propagates.
    """
    last = None
    for attempt in range(retries + 1):
        sp = Specialization.draw(gens, seed + attempt)
        try:
            return fn(sp)
        except SpecializationSingular as exc:
            last = exc
    raise last


# ---------------------------------------------------------------------------
# scalar contexts


class SymbolicQuantum:
    """Quantum scalars as exact rational functions in ``v, U1..Un``."""

    symbolic = True

    def __init__(self, n: int):
        self.gens = GeneratorSet(QUANTUM, n)
        self.zero = field_zero(self.gens)
        self.one = field_one(self.gens)
        self._v = self.gens.v
        self._vinv = self._v.inverse()

    def __repr__(self):
        return f"SymbolicQuantum({self.gens.n})"

    def const(self, x):
        return FieldElement.from_rational(self.gens, x)

    @functools.lru_cache(maxsize=None)
    def vpow(self, k: int):
        return self._v ** k

    @functools.lru_cache(maxsize=None)
    def upow(self, i: int, r: int = 0):
        """``v^(mu_i + r)``."""
        return self.gens.U(i) * self.vpow(r)

    @functools.lru_cache(maxsize=None)
    def qint(self, k: int):
        return _qint(self.gens, k)

    @functools.lru_cache(maxsize=None)
    def qmu(self, i: int, r: int = 0):
        """``[mu_i + r]``."""
        return qnum((i, r), self.gens)

    @functools.lru_cache(maxsize=None)
    def qfact(self, k: int):
        return qfactorial(k, self.gens)

    def vdiff(self):
        return self._v - self._vinv

    def fmt(self, x) -> str:
        return str(x)


class SpecializedQuantum:
    """Quantum scalars evaluated at a :class:`Specialization` (exact rationals)."""

    symbolic = False

    def __init__(self, sp: Specialization):
        if sp.gens.mode != QUANTUM:
            raise ModeError("SpecializedQuantum needs a quantum specialization")
        self.sp = sp
        self.gens = sp.gens
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self._v = sp.v

    def __repr__(self):
        return f"SpecializedQuantum(seed={self.sp.seed})"

    def const(self, x):
        return Fraction(x)

    def vpow(self, k: int):
        return self._v ** k

    def upow(self, i: int, r: int = 0):
        return self.sp.U(i) * self._v ** r

    @functools.lru_cache(maxsize=None)
    def qint(self, k: int):
        v = self._v
        return (v ** k - v ** -k) / (v - 1 / v)

    @functools.lru_cache(maxsize=None)
    def qmu(self, i: int, r: int = 0):
        top = self.upow(i, r)
        return (top - 1 / top) / (self._v - 1 / self._v)

    @functools.lru_cache(maxsize=None)
    def qfact(self, k: int):
        return math.prod((self.qint(t) for t in range(1, k + 1)), start=Fraction(1))

    def vdiff(self):
        return self._v - 1 / self._v

    def fmt(self, x) -> str:
        return str(x)


class SymbolicClassical:
    """Classical scalars: polynomials (and fractions) in ``l1..ln``."""

    symbolic = True

    def __init__(self, n: int):
        self.gens = GeneratorSet(CLASSICAL, n)
        self.zero = field_zero(self.gens)
        self.one = field_one(self.gens)

    def __repr__(self):
        return f"SymbolicClassical({self.gens.n})"

    def const(self, x):
        return FieldElement.from_rational(self.gens, x)

    @functools.lru_cache(maxsize=None)
    def lam(self, i: int, r: int = 0):
        """``lambda_i + r``."""
        return self.gens.lam(i) + r

    @functools.lru_cache(maxsize=None)
    def lam_sum(self, k: int, r: int = 0):
        """``lambda_1 + ... + lambda_k + r``."""
        out = self.const(r)
        for i in range(1, k + 1):
            out = out + self.gens.lam(i)
        return out

    def fmt(self, x) -> str:
        return str(x)


def scalar_is_zero(x) -> bool:
    return not x


def collect(pairs: Iterable, zero=0):
    """Sum ``(key, coeff)`` pairs into a dict without zero entries."""
    out = {}
    for key, c in pairs:
        if key in out:
            c = out[key] + c
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return out
