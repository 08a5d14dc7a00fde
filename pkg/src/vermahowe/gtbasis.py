"""Determinant monomials, GT vectors, Casimir operators and infinitesimal braids.

Everything here is classical: scalars are polynomials in ``l1..ln`` (the
weights ``lambda_i``) from a :class:`SymbolicClassical` context, or numbers
from any context exposing ``lam``, ``lam_sum`` and ``const``.

A :class:`DetMonomial` ``(r, l)`` stands for ``X^(lambda+r) a^l`` with
``a_i = X_i Y_{i+1} - X_{i+1} Y_i``.  The gl(n) operators ``e_ij`` preserve the
span of these; the adjacent ones have closed two-term formulas and the rest
follow by commutators.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError, ParseError
from .qgroup import CheckReport, act_gln_classical, GlnGenerator, rref
from .scalar import multinomial_product, pochhammer
from .sparse import add_scaled, add_term, apply, compose, vsub, vscale
from .verma import Monomial


@dataclass(frozen=True, order=True)
class DetMonomial:
    r: tuple[int, ...]
    l: tuple[int, ...]

    def __post_init__(self):
        if len(self.l) != len(self.r) - 1:
            raise ValueError("need len(l) == len(r) - 1")
        if any(x < 0 for x in self.l):
            raise ValueError(f"determinant exponents must be nonnegative: {self.l}")

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def block(self) -> tuple[int, int]:
        """``(b, c)`` with ``sum(l) = c`` and ``sum(r) = b - c``."""
        c = sum(self.l)
        return sum(self.r) + c, c

    @property
    def grade(self) -> tuple[int, ...]:
        g = list(self.r)
        for i, x in enumerate(self.l):
            g[i] += x
            g[i + 1] += x
        return tuple(g)

    def __str__(self):
        return f"X[{','.join(map(str, self.r))}]a[{','.join(map(str, self.l))}]"


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _e(i, n, scale=1):
    return tuple(scale if t == i else 0 for t in range(n))


def _alpha(i, n, scale=1):
    return tuple(scale if t == i else -scale if t == i + 1 else 0 for t in range(n))


# ---------------------------------------------------------------------------
# GT patterns


@dataclass(frozen=True)
class GTPattern:
    """Two-diagonal pattern: integral diagonal ``c = (c_1=0, c_2..c_n)`` and offsets ``r``."""

    n: int
    c: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.n or len(self.r) != self.n:
            raise ValueError("c and r must have length n")
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.c[0] != 0:
            raise ValueError("c_1 must be 0")
        if any(x < 0 for x in self.d):
            raise ValueError(f"pattern needs c_{{i+1}} >= c_i, got c={list(self.c)}")

    @property
    def d(self) -> tuple[int, ...]:
        return tuple(self.c[i + 1] - self.c[i] for i in range(self.n - 1))

    @classmethod
    def from_d(cls, d: Sequence[int], r: Sequence[int]) -> "GTPattern":
        c = (0, *itertools.accumulate(d))
        return cls(len(c), c, tuple(r))

    def x(self, k: int, K):
        """First-diagonal entry ``x_k = lambda_1+..+lambda_k + r_1+..+r_k + c_{k+1}``.

        The top row reads ``c_{n+1} = c_n``, so ``x_n = sum(lambda) + b``.
        """
        if not 1 <= k <= self.n:
            raise ValueError(f"k must lie in 1..{self.n}")
        ck1 = self.c[k] if k < self.n else self.c[-1]
        return K.lam_sum(k, sum(self.r[:k]) + ck1)

    def __str__(self):
        return f"GT{{n={self.n}; c=[{','.join(map(str, self.c))}]; r=[{','.join(map(str, self.r))}]}}"

    _RE = re.compile(r"GT\{\s*n\s*=\s*(\d+)\s*;\s*c\s*=\s*\[([^\]]*)\]\s*;\s*r\s*=\s*\[([^\]]*)\]\s*\}")

    @classmethod
    def parse(cls, text: str) -> "GTPattern":
        m = cls._RE.fullmatch(text.strip())
        if not m:
            raise ParseError(f"malformed GT pattern {text!r}")
        try:
            ints = [tuple(int(x) for x in g.split(",") if x.strip()) for g in m.group(2, 3)]
            return cls(int(m.group(1)), *ints)
        except ValueError as exc:
            raise ParseError(f"invalid GT pattern {text!r}: {exc}") from None


def patterns(n: int, c_max: int, r_max: int):
    """All valid patterns with ``c_n <= c_max`` and ``|r_i| <= r_max``."""
    for d in itertools.product(range(c_max + 1), repeat=n - 1):
        if sum(d) > c_max:
            continue
        for r in itertools.product(range(-r_max, r_max + 1), repeat=n):
            yield GTPattern.from_d(d, r)


# ---------------------------------------------------------------------------
# expansion into monomials


def det_pair_expansion(i: int, j: int, n: int) -> dict:
    """``a_ij = X_i Y_j - X_j Y_i`` as ``{(x exps, y exps): coeff}`` (0-based)."""
    if i == j:
        return {}
    return {(_e(i, n), _e(j, n)): 1, (_e(j, n), _e(i, n)): -1}


def _poly_mul(p, q):
    out: dict = {}
    for (xa, ya), ca in p.items():
        for (xb, yb), cb in q.items():
            add_term(out, (_vadd(xa, xb), _vadd(ya, yb)), ca * cb)
    return out


@functools.lru_cache(maxsize=None)
def _det_power_poly(l: tuple[int, ...]) -> tuple:
    n = len(l) + 1
    zero = (0,) * n
    poly = {(zero, zero): 1}
    for i, k in enumerate(l):
        if k:
            term = {}
            for t in range(k + 1):
                xs = _vadd(_e(i, n, k - t), _e(i + 1, n, t))
                ys = _vadd(_e(i + 1, n, k - t), _e(i, n, t))
                term[(xs, ys)] = math.comb(k, t) * (-1) ** t
            poly = _poly_mul(poly, term)
    return tuple(poly.items())


def expand_det(m: DetMonomial, K=None) -> dict:
    """``X^(lambda+r) a^l`` in the monomial basis; integer coefficients, or ``K.const`` if given."""
    out = {}
    for (xs, ys), c in _det_power_poly(m.l):
        out[Monomial(_vadd(m.r, xs), ys)] = c if K is None else K.const(c)
    return out


def expand_det_vector(vec: dict, K) -> dict:
    out: dict = {}
    for dm, c in vec.items():
        for mono, k in expand_det(dm).items():
            add_term(out, mono, c * k)
    return out


def determinant_relation_check(n: int, r: Sequence[int] | None = None) -> CheckReport:
    """``X_i a_rs = X_r a_is + X_s a_ri`` for all index triples, after expansion."""
    rep = CheckReport(f"determinant relation n={n}")
    base = Monomial(tuple(r) if r is not None else (0,) * n, (0,) * n)
    for rr, s, i in itertools.product(range(n), repeat=3):
        def times(xi, pair):
            out = {}
            for (xs, ys), c in det_pair_expansion(*pair, n).items():
                add_term(out, base.shift(_vadd(xs, _e(xi, n)), ys), c)
            return out
        lhs = times(i, (rr, s))
        rhs = add_scaled(times(rr, (i, s)), times(s, (rr, i)))
        rep.record(("det", rr + 1, s + 1, i + 1), base, vsub(lhs, rhs))
    return rep


# ---------------------------------------------------------------------------
# gl(n) on determinant monomials


def _adjacent(i: int, j: int, m: DetMonomial, K) -> dict:
    """``e_ii``, ``e_{i,i+1}``, ``e_{i+1,i}`` (0-based ``i``, ``j``), closed forms."""
    n = m.n
    r, l = m.r, m.l
    lpad = (0, *l, 0)  # lpad[t + 1] = l_t, zero outside 0..n-2

    def lv(t):
        return lpad[t + 1]

    out: dict = {}
    if i == j:
        c = K.lam(i + 1, r[i] + lv(i - 1) + lv(i))
        return {m: c} if c else {}
    if j == i + 1:
        # e_{i,i+1}: raise X_i, lower X_{i+1}
        add_term(out, DetMonomial(_vadd(r, _alpha(i, n)), l), K.lam(i + 2, r[i + 1] + lv(i + 1)))
        if lv(i + 1):
            add_term(out, DetMonomial(_vadd(r, _alpha(i + 1, n, -1)), _vadd(l, _alpha(i, n - 1))),
                     K.const(lv(i + 1)))
        return out
    if i == j + 1:
        # e_{j+1,j}
        t = j
        add_term(out, DetMonomial(_vadd(r, _alpha(t, n, -1)), l), K.lam(t + 1, r[t] + lv(t - 1)))
        if lv(t - 1):
            add_term(out, DetMonomial(_vadd(r, _alpha(t - 1, n)), _vadd(l, _alpha(t - 1, n - 1, -1))),
                     K.const(lv(t - 1)))
        return out
    raise ValueError("not an adjacent generator")


def _make_eij(K):
    @functools.lru_cache(maxsize=None)
    def eij(i: int, j: int, m: DetMonomial) -> tuple:
        if abs(i - j) <= 1:
            res = _adjacent(i, j, m, K)
        else:
            # e_ij = [e_{i,k}, e_{k,j}] with k the neighbour of i towards j
            k = i + 1 if j > i else i - 1
            a = lambda x: dict(eij(i, k, x))
            b = lambda x: dict(eij(k, j, x))
            res = vsub(apply(a, b(m)), apply(b, a(m)))
        return tuple(res.items())
    return eij


_EIJ_CACHE: dict = {}


def act_eij_det(i: int, j: int, vec, K) -> dict:
    """``e_ij`` (1-based) on a DetMonomial or a sparse vector of them."""
    key = id(K)
    if key not in _EIJ_CACHE or _EIJ_CACHE[key][0] is not K:
        _EIJ_CACHE[key] = (K, _make_eij(K))
    eij = _EIJ_CACHE[key][1]
    if isinstance(vec, DetMonomial):
        vec = {vec: K.one}
    return apply(lambda m: dict(eij(i - 1, j - 1, m)), vec)


def det_consistency_check(samples: Sequence[DetMonomial], K) -> CheckReport:
    """Expand-then-act equals act-then-expand for every ``e_ij``."""
    rep = CheckReport("determinant basis consistency")
    for m in samples:
        n = m.n
        ex = expand_det(m, K)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                g = GlnGenerator("e", i, j)
                lhs = expand_det_vector(act_eij_det(i, j, m, K), K)
                rhs = apply(lambda x: act_gln_classical(g, x, K), ex)
                rep.record(("e", i, j), m, vsub(lhs, rhs))
    return rep


def random_det_monomials(seed: int, n: int, count: int, rmax: int = 3, lmax: int = 2) -> list[DetMonomial]:
    rng = random.Random(seed)
    return [DetMonomial(tuple(rng.randint(-rmax, rmax) for _ in range(n)),
                        tuple(rng.randint(0, lmax) for _ in range(n - 1)))
            for _ in range(count)]


# ---------------------------------------------------------------------------
# GT vectors


def _j_box(d: Sequence[int]):
    """All ``j in Z>=0^(n-2)`` with ``0 <= j_i <= d_{i+1} + j_{i+1}`` (``j_{n-1} = 0``)."""
    m = len(d) - 1  # number of j's

    def rec(i, tail):
        # choose j_i given j_{i+1} = tail[0]
        if i < 0:
            yield ()
            return
        nxt = tail
        for ji in range(d[i + 1] + nxt + 1):
            for rest in rec(i - 1, ji):
                yield rest + (ji,)

    if m <= 0:
        yield ()
        return
    yield from rec(m - 1, 0)


def gt_vector(p: GTPattern, K) -> dict:
    """The GT vector of ``p`` as a sparse vector over :class:`DetMonomial`."""
    n = p.n
    d, r = p.d, p.r
    out: dict = {}
    for j in _j_box(d):
        jj = (0, 0, *j, 0, 0)  # jj[t + 1] = j_t for t = -1..n

        def J(t):
            return jj[t + 1]

        mult = multinomial_product(d, j)
        if not mult:
            continue
        coeff = K.const(mult)
        for i in range(1, n):
            length = d[i - 1] + J(i) - J(i - 1)
            coeff = coeff * pochhammer(K.lam_sum(i, sum(r[:i]) - J(i) + 1), length)
        if not coeff:
            continue
        xr = tuple(r[t - 1] - (J(t) - J(t - 2)) for t in range(1, n + 1))
        l = list(d)
        for t in range(1, n - 1):
            l[t - 1] += J(t)
            l[t] -= J(t)
        add_term(out, DetMonomial(xr, tuple(l)), coeff)
    return out


# ---------------------------------------------------------------------------
# Casimirs


def casimir_apply(k: int, vec: dict, K) -> dict:
    """``C_k = sum_{i != j <= k} e_ij e_ji + sum_{i <= k} e_ii^2``."""
    out: dict = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            add_scaled(out, act_eij_det(i, j, act_eij_det(j, i, vec, K), K))
    return out


def _casimir_split(k: int, vec: dict, K) -> dict:
    """``2 z_k + h_k`` with ``z_k = sum_{j<i} e_ji e_ij`` and the Cartan part ``h_k``."""
    out: dict = {}
    for i in range(1, k + 1):
        for j in range(1, i):
            add_scaled(out, act_eij_det(j, i, act_eij_det(i, j, vec, K), K), 2)
            add_scaled(out, act_eij_det(i, i, vec, K))
            add_scaled(out, act_eij_det(j, j, vec, K), -1)
        add_scaled(out, act_eij_det(i, i, act_eij_det(i, i, vec, K), K))
    return out


def casimir_on_monomials(k: int, vec: dict, K) -> dict:
    """``C_k`` through the monomial action, for the expand-first route."""
    def e(i, j):
        g = GlnGenerator("e", i, j)
        return lambda m: act_gln_classical(g, m, K)
    out: dict = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            add_scaled(out, apply(compose(e(i, j), e(j, i)), vec))
    return out


def casimir_eigenvalue_expected(p: GTPattern, k: int, K):
    """``x_k (x_k + k - 1) + c_k (c_k + k - 3)``."""
    x = p.x(k, K)
    c = p.c[k - 1]
    return x * (x + (k - 1)) + c * (c + k - 3)


@dataclass
class CasimirResult:
    pattern: GTPattern
    k: int
    ok: bool
    routes_agree: bool


def casimir_check(p: GTPattern, K, ks=None, cross_routes: bool = False) -> list[CasimirResult]:
    """``C_k gt(p) = expected * gt(p)`` for each ``k``; optionally compare against the other routes."""
    g = gt_vector(p, K)
    if not g:
        raise ConsistencyError(f"GT vector of {p} vanishes")
    out = []
    for k in ks or range(1, p.n + 1):
        got = casimir_apply(k, g, K)
        ok = not vsub(got, vscale(g, casimir_eigenvalue_expected(p, k, K)))
        agree = True
        if cross_routes:
            agree = not vsub(got, _casimir_split(k, g, K))
            agree = agree and not vsub(expand_det_vector(got, K),
                                       casimir_on_monomials(k, expand_det_vector(g, K), K))
        out.append(CasimirResult(p, k, ok, agree))
    return out


def gt_eraise_expected(p: GTPattern, i: int, K) -> dict:
    """Two-term formula for ``e_{i,i+1}`` on a GT vector, in terms of GT vectors of shifted patterns.

    Returns ``{pattern: coefficient}``; with ``S_t = lambda_1+..+lambda_t + r_1+..+r_t``::

        (S_i+1)(lambda_{i+1}+r_{i+1}+d_{i+1})/(S_i+d_i+1) gt(d, r+a_i)
        + d_i (S_{i+1}+d_i+d_{i+1}+1)/(S_i+d_i+1) gt(d+a_{i-1}, r-a_{i-1})
    """
    n = p.n
    d, r = p.d, p.r
    dpad = (0, *d, 0)

    def S(t):
        return K.lam_sum(t, sum(r[:t]))

    di, di1 = dpad[i], dpad[i + 1]
    den = S(i) + di + 1
    first = (S(i) + 1) * K.lam(i + 1, r[i] + di1) / den
    out = {GTPattern.from_d(d, _vadd(r, _alpha(i - 1, n))): first}
    if i > 1 and di:
        nd = list(d)
        nd[i - 2] += 1
        nd[i - 1] -= 1
        out[GTPattern.from_d(nd, _vadd(r, _alpha(i - 2, n, -1)))] = di * (S(i + 1) + di + di1 + 1) / den
    return out


def gt_span_rank(vecs: Sequence[dict], point: Sequence[Fraction]) -> int:
    """Rank of sparse vectors after substituting ``lambda = point`` (a lower bound for the generic rank)."""
    from .scalar import _eval_poly
    keys = sorted({k for v in vecs for k in v})
    pos = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vecs:
        row = [Fraction(0)] * len(keys)
        for k, c in v.items():
            row[pos[k]] = _eval_poly(c.num, point) / _eval_poly(c.den, point)
        rows.append(row)
    if not rows or not keys:
        return 0
    _, piv = rref(rows, Fraction(0), Fraction(1))
    return len(piv)


def det_block_weight_space(n: int, c: int, grade: Sequence[int]) -> list[DetMonomial]:
    """The determinant monomials with ``sum(l) = c`` and the given multidegree."""
    out = []
    for l in _compositions(c, n - 1):
        dm_grade = [0] * n
        for i, x in enumerate(l):
            dm_grade[i] += x
            dm_grade[i + 1] += x
        out.append(DetMonomial(tuple(g - x for g, x in zip(grade, dm_grade)), l))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def det_weight_space_rank(n: int, c: int, grade: Sequence[int]) -> tuple[int, int]:
    """``(count, rank of expansions)`` of a weight space; both equal ``C(c+n-2, c)``."""
    dms = det_block_weight_space(n, c, grade)
    vecs = [expand_det(m) for m in dms]
    keys = sorted({k for v in vecs for k in v})
    pos = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vecs:
        row = [Fraction(0)] * len(keys)
        for k, x in v.items():
            row[pos[k]] = Fraction(x)
        rows.append(row)
    _, piv = rref(rows, Fraction(0), Fraction(1))
    return len(dms), len(piv)


# ---------------------------------------------------------------------------
# infinitesimal braids


def infbraid_apply(i: int, j: int, m: Monomial, K) -> dict:
    """``w_ij = X_iX_j dX_i dX_j + X_iY_j dY_i dX_j + Y_iX_j dX_i dY_j + Y_iY_j dY_i dY_j`` (1-based)."""
    if not 1 <= i < j <= m.n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j})")
    a, b = i - 1, j - 1
    n = m.n
    xi, xj = K.lam(i, m.r[a]), K.lam(j, m.r[b])
    si, sj = m.s[a], m.s[b]
    out: dict = {}
    add_term(out, m, xi * xj + si * sj)
    d = tuple(1 if t == a else -1 if t == b else 0 for t in range(n))
    nd = tuple(-x for x in d)
    if si:
        add_term(out, m.shift(d, nd), xj * si)
    if sj:
        add_term(out, m.shift(nd, d), xi * sj)
    return out


def infbraid_relations_check(n: int, samples: Sequence[Monomial], K) -> CheckReport:
    """Defining relations of the infinitesimal pure braid algebra plus ``e_ij e_ji = w_ij + e_ii``."""
    w = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w[(i, j)] = w[(j, i)] = (lambda a, b: (lambda m: infbraid_apply(a, b, m, K)))(i, j)
    rep = CheckReport(f"infinitesimal braid relations n={n}")

    def comm(A, B, m):
        return vsub(apply(A, B(m)), apply(B, A(m)))

    def plus(A, B):
        return lambda m: add_scaled(dict(A(m)), B(m))

    for m in samples:
        for i, j, r, s in itertools.permutations(range(1, n + 1), 4):
            if i < j and r < s:
                rep.record(("[wij,wrs]", i, j, r, s), m, comm(w[(i, j)], w[(r, s)], m))
        for i, j, r in itertools.permutations(range(1, n + 1), 3):
            rep.record(("[wir+wjr,wij]", i, j, r), m, comm(plus(w[(i, r)], w[(j, r)]), w[(i, j)], m))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                eij = lambda x, a=i, b=j: act_gln_classical(GlnGenerator("e", a, b), x, K)
                eji = lambda x, a=i, b=j: act_gln_classical(GlnGenerator("e", b, a), x, K)
                eii = lambda x, a=i: act_gln_classical(GlnGenerator("e", a, a), x, K)
                lhs = apply(eij, eji(m))
                rhs = add_scaled(dict(w[(i, j)](m)), eii(m))
                rep.record(("eij eji", i, j), m, vsub(lhs, rhs))
    return rep
