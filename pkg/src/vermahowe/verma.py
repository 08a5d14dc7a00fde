"""Monomial model of tensor products of (dual) Verma modules.

A basis vector ``X^(mu+r) Y^s`` of the polynomial model is a
:class:`Monomial` ``(r, s)``; its grade is ``d = r + s``.  The grade-zero
vectors ``X^(mu-k) Y^k`` are the pure tensors ``m_{k_1} (x) ... (x) m_{k_n}``.

The gl(2) actions below act factor-wise through the coproduct
``E -> E (x) K + 1 (x) E``, ``F -> F (x) 1 + K^-1 (x) F`` (quantum) or the
primitive coproduct (classical).  Every generator sends a monomial to a finite
combination of monomials, so operator identities can be checked exactly one
basis vector at a time.

Colors: factor ``j`` carries the weight ``mu_{colors[j]}``.  With the default
``colors = (1, ..., n)`` every factor has its own weight.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import ParseError
from .sparse import add_term


@dataclass(frozen=True, order=True)
class Monomial:
    r: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        if len(self.r) != len(self.s):
            raise ValueError("r and s must have equal length")
        if any(x < 0 for x in self.s):
            raise ValueError(f"Y exponents must be nonnegative: {self.s}")

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def grade(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.r, self.s))

    def shift(self, dr=None, ds=None) -> "Monomial":
        r = self.r if dr is None else tuple(a + b for a, b in zip(self.r, dr))
        s = self.s if ds is None else tuple(a + b for a, b in zip(self.s, ds))
        return Monomial(r, s)

    @classmethod
    def from_index(cls, k: Sequence[int]) -> "Monomial":
        """The pure tensor ``m_{k_1} (x) ... (x) m_{k_n}`` (grade zero)."""
        return cls(tuple(-x for x in k), tuple(k))

    def to_index(self) -> tuple[int, ...]:
        if any(self.grade):
            raise ValueError(f"{self} is not in the grade-zero slice")
        return self.s

    def __str__(self):
        return f"X[{','.join(map(str, self.r))}]Y[{','.join(map(str, self.s))}]"

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        t = text.replace(" ", "")
        try:
            xs, ys = t.split("]Y[")
            if not xs.startswith("X[") or not ys.endswith("]"):
                raise ValueError
            r = tuple(int(x) for x in xs[2:].split(",") if x)
            s = tuple(int(x) for x in ys[:-1].split(",") if x)
            return cls(r, s)
        except ValueError:
            raise ParseError(f"malformed monomial {text!r}") from None


def unit(i: int, n: int, scale: int = 1) -> tuple[int, ...]:
    """``scale * e_i`` for 0-based ``i``."""
    return tuple(scale if j == i else 0 for j in range(n))


def root(i: int, n: int) -> tuple[int, ...]:
    """``alpha_i = e_i - e_{i+1}`` for 0-based ``i``."""
    return tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(n))


def _colors(colors, n):
    return tuple(range(1, n + 1)) if colors is None else tuple(colors)


# ---------------------------------------------------------------------------
# quantum gl(2)

QUANTUM_GL2 = ("E", "F", "L1", "L2", "K", "Kinv")


def act_gl2_quantum(gen: str, m: Monomial, K, colors=None) -> dict:
    """Left action of ``gen`` in ``{E, F, L1, L2, K, Kinv}`` on a monomial.

    ``K`` is a quantum scalar context.
    """
    n = m.n
    cols = _colors(colors, n)
    r, s = m.r, m.s
    if gen == "E":
        out = {}
        # v-power collected from the K's of factors to the right
        tail = K.one
        for i in range(n - 1, -1, -1):
            if s[i]:
                add_term(out, m.shift(unit(i, n), unit(i, n, -1)), tail * K.qint(s[i]))
            tail = tail * K.upow(cols[i], r[i] - s[i])
        return out
    if gen == "F":
        out = {}
        head = K.one
        for i in range(n):
            coeff = head * K.qmu(cols[i], r[i])
            add_term(out, m.shift(unit(i, n, -1), unit(i, n)), coeff)
            head = head / K.upow(cols[i], r[i] - s[i])
        return out
    if gen == "L1":
        c = K.one
        for i in range(n):
            c = c * K.upow(cols[i], r[i])
        return {m: c}
    if gen == "L2":
        return {m: K.vpow(sum(s))}
    if gen in ("K", "Kinv"):
        c = K.one
        for i in range(n):
            c = c * K.upow(cols[i], r[i] - s[i])
        return {m: c if gen == "K" else K.one / c}
    raise ValueError(f"unknown quantum gl2 generator {gen!r}")


# ---------------------------------------------------------------------------
# classical gl(2)

CLASSICAL_GL2 = ("e", "f", "l1", "l2")


def act_gl2_classical(gen: str, m: Monomial, K, colors=None) -> dict:
    """Left action of ``e = X d/dY``, ``f = Y d/dX``, ``l1 = X d/dX``, ``l2 = Y d/dY``.

    Extended to the tensor product by the primitive coproduct; ``K`` is a
    classical scalar context.
    """
    n = m.n
    cols = _colors(colors, n)
    r, s = m.r, m.s
    gen = gen.lower()
    if gen == "e":
        out = {}
        for i in range(n):
            if s[i]:
                add_term(out, m.shift(unit(i, n), unit(i, n, -1)), K.const(s[i]))
        return out
    if gen == "f":
        out = {}
        for i in range(n):
            add_term(out, m.shift(unit(i, n, -1), unit(i, n)), K.lam(cols[i], r[i]))
        return out
    if gen == "l1":
        c = K.const(sum(r))
        for i in range(n):
            c = c + K.lam(cols[i])
        return {m: c}
    if gen == "l2":
        return {m: K.const(sum(s))} if sum(s) else {}
    raise ValueError(f"unknown classical gl2 generator {gen!r}")


class WeightGrade(NamedTuple):
    """``L1`` exponent ``sum(mu) + mu_shift``, ``L2`` exponent, and the grade tuple."""

    mu_shift: int
    l2: int
    grade: tuple[int, ...]


def weight_and_grade(m: Monomial) -> WeightGrade:
    return WeightGrade(sum(m.r), sum(m.s), m.grade)


# ---------------------------------------------------------------------------
# grade-zero slices


def tensor_basis(n: int, l: int) -> list[tuple[int, ...]]:
    """All ``k`` with ``sum(k) = l``, lexicographically decreasing."""
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for first in range(left, -1, -1):
            rec(prefix + (first,), left - first, slots - 1)

    rec((), l, n)
    return out


def slice_size(n: int, l: int) -> int:
    return math.comb(n + l - 1, l)


def random_monomial(rng: random.Random, n: int, rmax: int = 3, smax: int = 3) -> Monomial:
    return Monomial(tuple(rng.randint(-rmax, rmax) for _ in range(n)),
                    tuple(rng.randint(0, smax) for _ in range(n)))


def random_monomials(seed: int, n: int, count: int, rmax: int = 3, smax: int = 3) -> list[Monomial]:
    rng = random.Random(seed)
    return [random_monomial(rng, n, rmax, smax) for _ in range(count)]


def verma_matrix_n1(gen: str, size: int, K, color: int = 1):
    """Matrix of a quantum gl(2) generator on ``m_0..m_{size-1}`` of one Verma module.

    Entry ``[i][j]`` is the coefficient of ``m_i`` in ``gen . m_j``;
    components leaving the truncation are dropped.
    """
    mat = [[K.zero] * size for _ in range(size)]
    for j in range(size):
        for mono, c in act_gl2_quantum(gen, Monomial.from_index((j,)), K, (color,)).items():
            i = mono.to_index()[0]
            if i < size:
                mat[i][j] = c
    return mat


def index_sets(n: int, l_max: int):
    """All grade-zero indices of total degree at most ``l_max``."""
    return itertools.chain.from_iterable(tensor_basis(n, l) for l in range(l_max + 1))
