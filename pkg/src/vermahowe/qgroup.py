"""The dual gl(n) action on the monomial model and highest-weight vectors.

The gl(n) side acts on the right, two factors at a time.  Quantum generators
``E_i, F_i, L_i`` only touch factors ``i`` and ``i+1``; the classical ones are
the polarization operators ``e_ij = X_i d/dX_j + Y_i d/dY_j``.

Highest-weight vectors live in the grade-zero slice spanned by the pure
tensors ``m_k`` with ``sum(k) = l``; sparse vectors there are keyed by the
index tuple ``k``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ConsistencyError, ParseError
from .scalar import SpecializedQuantum, Specialization, GeneratorSet, QUANTUM, is_admissible
from .sparse import add_term, add_scaled, apply, compose, vsub
from .verma import (
    Monomial, act_gl2_classical, act_gl2_quantum, root, tensor_basis, slice_size,
    _colors,
)


@dataclass(frozen=True)
class GlnGenerator:
    """``E_i``, ``F_i``, ``L_i`` (quantum) or ``e_ij`` (classical); indices are 1-based."""

    kind: str
    i: int
    j: int | None = None

    def __post_init__(self):
        if self.kind not in ("E", "F", "L", "e"):
            raise ValueError(f"unknown gl(n) generator kind {self.kind!r}")
        if (self.kind == "e") != (self.j is not None):
            raise ValueError("exactly the classical generators e_ij carry a second index")

    def check(self, n: int) -> None:
        top = n if self.kind in ("L", "e") else n - 1
        if not 1 <= self.i <= top or (self.j is not None and not 1 <= self.j <= n):
            raise ValueError(f"{self} out of range for n={n}")

    @property
    def quantum(self) -> bool:
        return self.kind != "e"

    def __str__(self):
        return f"e{self.i},{self.j}" if self.kind == "e" else f"{self.kind}{self.i}"

    @classmethod
    def parse(cls, text: str) -> "GlnGenerator":
        t = text.strip()
        m = re.fullmatch(r"([EFL])_?(\d+)", t)
        if m:
            return cls(m.group(1), int(m.group(2)))
        m = re.fullmatch(r"e_?\{?(\d+),?(\d+)\}?", t)
        if m and ("," in t or len(m.group(1)) == len(m.group(2)) == 1):
            return cls("e", int(m.group(1)), int(m.group(2)))
        raise ParseError(f"malformed gl(n) generator {text!r}")


# ---------------------------------------------------------------------------
# actions


def act_gln_quantum(g: GlnGenerator, m: Monomial, K, colors=None) -> dict:
    """Right action ``m . g`` of a quantum gl(n) generator.

    ``m.E_i = [mu_{i+1}+r_{i+1}] v^(s_i-s_{i+1}) X^(r+a_i) Y^s + [s_{i+1}] X^r Y^(s+a_i)``,
    ``m.F_i = [mu_i+r_i] X^(r-a_i) Y^s + v^(mu_{i+1}+r_{i+1}-mu_i-r_i) [s_i] X^r Y^(s-a_i)``,
    ``m.L_i = v^(mu_i+r_i+s_i) m``.
    """
    n = m.n
    g.check(n)
    cols = _colors(colors, n)
    r, s = m.r, m.s
    i = g.i - 1
    if g.kind == "L":
        return {m: K.upow(cols[i], r[i] + s[i])}
    a = root(i, n)
    out: dict = {}
    if g.kind == "E":
        add_term(out, m.shift(a), K.qmu(cols[i + 1], r[i + 1]) * K.vpow(s[i] - s[i + 1]))
        if s[i + 1]:
            add_term(out, m.shift(None, a), K.qint(s[i + 1]))
        return out
    if g.kind == "F":
        na = tuple(-x for x in a)
        add_term(out, m.shift(na), K.qmu(cols[i], r[i]))
        if s[i]:
            add_term(out, m.shift(None, na),
                     K.qint(s[i]) * K.upow(cols[i + 1], r[i + 1]) / K.upow(cols[i], r[i]))
        return out
    raise ValueError(f"{g} is not a quantum generator")


def act_gln_classical(g: GlnGenerator, m: Monomial, K, colors=None) -> dict:
    """``e_ij = X_i d/dX_j + Y_i d/dY_j`` on ``X^(lambda+r) Y^s``."""
    n = m.n
    g.check(n)
    if g.kind != "e":
        raise ValueError(f"{g} is not a classical generator")
    cols = _colors(colors, n)
    i, j = g.i - 1, g.j - 1
    if i == j:
        return {m: K.lam(cols[i], m.r[i] + m.s[i])}
    out: dict = {}
    d = tuple(1 if t == i else -1 if t == j else 0 for t in range(n))
    add_term(out, m.shift(d), K.lam(cols[j], m.r[j]))
    if m.s[j]:
        add_term(out, m.shift(None, d), K.const(m.s[j]))
    return out


def gl2_operator(tag: str, K, colors=None) -> Callable[[Monomial], dict]:
    if K.gens.mode == QUANTUM:
        return lambda m: act_gl2_quantum(tag, m, K, colors)
    return lambda m: act_gl2_classical(tag, m, K, colors)


def gln_operator(g, K, colors=None) -> Callable[[Monomial], dict]:
    """The linear map ``m -> m . g``."""
    if isinstance(g, str):
        g = GlnGenerator.parse(g)
    if g.quantum:
        return lambda m: act_gln_quantum(g, m, K, colors)
    return lambda m: act_gln_classical(g, m, K, colors)


def gln_generators(n: int, quantum: bool) -> list[GlnGenerator]:
    if quantum:
        return ([GlnGenerator("E", i) for i in range(1, n)]
                + [GlnGenerator("F", i) for i in range(1, n)]
                + [GlnGenerator("L", i) for i in range(1, n + 1)])
    return [GlnGenerator("e", i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


# ---------------------------------------------------------------------------
# checks


@dataclass
class CheckReport:
    """Outcome of a monomial-wise identity check."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, label, m: Monomial, residual: dict) -> None:
        self.checked += 1
        if residual:
            self.failures.append((label, str(m)))

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def summary(self) -> dict:
        return {"check": self.name, "checked": self.checked, "ok": self.ok,
                "failures": [list(map(str, f)) for f in self.failures[:20]],
                "failure_count": len(self.failures)}


def commutation_check(a: str, b, sample: Sequence[Monomial], K, colors=None) -> CheckReport:
    """``ab - ba`` annihilates every sample monomial, with ``a`` from gl(2) and ``b`` from gl(n)."""
    A = gl2_operator(a, K, colors)
    B = gln_operator(b, K, colors)
    rep = CheckReport(f"[{a},{b}]")
    for m in sample:
        rep.record((a, str(b)), m, vsub(apply(A, B(m)), apply(B, A(m))))
    return rep


def commuting_actions_report(n: int, sample: Sequence[Monomial], K, colors=None) -> CheckReport:
    """All pairs of gl(2) and gl(n) generators."""
    quantum = K.gens.mode == QUANTUM
    gl2 = ("E", "F", "L1", "L2") if quantum else ("e", "f", "l1", "l2")
    rep = CheckReport(f"commuting actions ({K.gens.mode}) n={n}")
    for a in gl2:
        for b in gln_generators(n, quantum):
            rep.merge(commutation_check(a, b, sample, K, colors))
    return rep


def quantum_relations_report(n: int, sample: Sequence[Monomial], K, colors=None) -> CheckReport:
    """Defining relations of quantum gl(n), as identities of operators on the span of monomials.

    ``L_i E_j = v^(d_ij - d_i,j+1) E_j L_i`` (and the ``F`` analogue),
    ``E_i F_j - F_j E_i = d_ij (K_i - K_i^-1)/(v - v^-1)`` with ``K_i = L_i L_{i+1}^-1``,
    and the Serre relations.  Products compose as operators (rightmost first).
    """
    E = [gln_operator(GlnGenerator("E", i), K, colors) for i in range(1, n)]
    F = [gln_operator(GlnGenerator("F", i), K, colors) for i in range(1, n)]
    L = [gln_operator(GlnGenerator("L", i), K, colors) for i in range(1, n + 1)]
    q2 = K.qint(2)
    vd = K.vdiff()
    rep = CheckReport(f"quantum gl(n) relations n={n}")

    def diag(op, m):
        return op(m)[m]

    for m in sample:
        for i in range(n):
            for j in range(n - 1):
                d = (i == j) - (i == j + 1)
                for X, sign in ((E[j], 1), (F[j], -1)):
                    lhs = compose(L[i], X)(m)
                    rhs = {k: c * K.vpow(sign * d) for k, c in compose(X, L[i])(m).items()}
                    rep.record(("L", i + 1, j + 1), m, vsub(lhs, rhs))
        for i in range(n - 1):
            for j in range(n - 1):
                c = vsub(compose(E[i], F[j])(m), compose(F[j], E[i])(m))
                if i == j:
                    k = diag(L[i], m) / diag(L[i + 1], m)
                    want = (k - 1 / k) / vd
                    c = vsub(c, {m: want} if want else {})
                rep.record(("EF", i + 1, j + 1), m, c)
                if i == j:
                    continue
                for X in (E, F):
                    if abs(i - j) == 1:
                        lhs = {t: c * q2 for t, c in compose(X[i], X[j], X[i])(m).items()}
                        rhs = add_scaled(compose(X[i], X[i], X[j])(m), compose(X[j], X[i], X[i])(m))
                    else:
                        lhs, rhs = compose(X[i], X[j])(m), compose(X[j], X[i])(m)
                    rep.record(("serre", i + 1, j + 1), m, vsub(lhs, rhs))
    return rep


def classical_relations_report(n: int, sample: Sequence[Monomial], K, colors=None) -> CheckReport:
    """``[e_ij, e_kl] = d_jk e_il - d_li e_kj`` as identities of operators."""
    e = {(i, j): gln_operator(GlnGenerator("e", i, j), K, colors)
         for i in range(1, n + 1) for j in range(1, n + 1)}
    rep = CheckReport(f"gl(n) relations n={n}")
    for m in sample:
        for (i, j), A in e.items():
            for (k, l), B in e.items():
                c = vsub(compose(A, B)(m), compose(B, A)(m))
                want: dict = {}
                if j == k:
                    add_scaled(want, e[(i, l)](m))
                if l == i:
                    add_scaled(want, e[(k, j)](m), -1)
                rep.record(("e", i, j, k, l), m, vsub(c, want))
    return rep


def preserves_grading(g, sample: Sequence[Monomial], K, colors=None) -> bool:
    """Every output monomial keeps ``sum(d)`` and ``sum(s)``."""
    op = gln_operator(g, K, colors)
    for m in sample:
        for out in op(m):
            if sum(out.grade) != sum(m.grade) or sum(out.s) != sum(m.s):
                return False
    return True


# ---------------------------------------------------------------------------
# highest-weight vectors in the grade-zero slice


def e_on_index(k: tuple[int, ...], K, colors=None) -> dict:
    """``E . m_k`` as a sparse vector over index tuples."""
    return {mono.to_index(): c
            for mono, c in act_gl2_quantum("E", Monomial.from_index(k), K, colors).items()}


def apply_e(vec: dict, K, colors=None) -> dict:
    return apply(lambda k: e_on_index(k, K, colors), vec)


def normalize_leading(vec: dict, order: Sequence[tuple[int, ...]]) -> dict:
    """Scale so the first nonzero coordinate along ``order`` is 1."""
    for k in order:
        if k in vec:
            lead = vec[k]
            return {key: c / lead for key, c in vec.items()}
    raise ValueError("zero vector has no leading coordinate")


def _kernel_recursive(n: int, l: int, K, colors) -> list[dict]:
    """Kernel of ``E`` on the ``(n, l)`` slice, one vector per ``m_0 (x) m_k'``.

    Write ``x = sum_a m_a (x) y_a``; with ``E = E (x) K' + 1 (x) E'`` the
    condition ``E x = 0`` reads ``y_{a+1} = -K'^-1 E' y_a / [a+1]``.
    """
    if n == 1:
        return [{(0,): K.one}] if l == 0 else []
    rest = tuple(colors[1:])
    out = []
    for k in tensor_basis(n - 1, l):
        x = {(0,) + k: K.one}
        y = {k: K.one}
        a = 0
        while y:
            ey = apply(lambda t: e_on_index(t, K, rest), y)
            nxt = {}
            for t, c in ey.items():
                kk = K.one
                for j, col in enumerate(rest):
                    kk = kk * K.upow(col, -2 * t[j])
                add_term(nxt, t, -c / (kk * K.qint(a + 1)))
            a += 1
            y = nxt
            for t, c in y.items():
                add_term(x, (a,) + t, c)
        out.append(x)
    return out


def e_matrix(n: int, l: int, K, colors=None):
    """Rows: ``tensor_basis(n, l-1)``; columns: ``tensor_basis(n, l)``."""
    cols = tensor_basis(n, l)
    rows = tensor_basis(n, l - 1) if l else []
    pos = {k: i for i, k in enumerate(rows)}
    mat = [[K.zero] * len(cols) for _ in rows]
    for j, k in enumerate(cols):
        for t, c in e_on_index(k, K, colors).items():
            mat[pos[t]][j] = c
    return mat, rows, cols


def rref(mat, zero, one):
    """Reduced row echelon form (in a copy); returns ``(rows, pivot_columns)``."""
    a = [list(r) for r in mat]
    pivots = []
    row = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = one / a[row][col]
        a[row] = [x * inv if x else zero for x in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break
    return a, pivots


def nullspace(mat, ncols: int, zero, one) -> list[list]:
    """Kernel basis with an identity block on the free columns."""
    if not mat:
        return [[one if j == f else zero for j in range(ncols)] for f in range(ncols)]
    a, pivots = rref(mat, zero, one)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for r, p in enumerate(pivots):
            if a[r][f]:
                vec[p] = -a[r][f]
        basis.append(vec)
    return basis


def _kernel_elimination(n: int, l: int, K, colors) -> list[dict]:
    mat, _, cols = e_matrix(n, l, K, colors)
    out = []
    for vec in nullspace(mat, len(cols), K.zero, K.one):
        out.append({k: c for k, c in zip(cols, vec) if c})
    return out


def highest_weight_basis(n: int, l: int, K, colors=None, method: str = "recursion") -> list[dict]:
    """Normalized basis of ``ker E`` on the span of ``tensor_basis(n, l)``.

    ``method="recursion"`` solves ``E x = 0`` factor by factor;
    ``method="elimination"`` reduces the ``E``-matrix.  After normalizing the
    leading coordinate (lexicographically decreasing order) both give the same
    vectors, indexed by the ``m_0 (x) m_k'`` they contain.
    """
    colors = _colors(colors, n)
    if method == "recursion":
        raw = _kernel_recursive(n, l, K, colors)
    elif method == "elimination":
        raw = _kernel_elimination(n, l, K, colors)
    else:
        raise ValueError(f"unknown kernel method {method!r}")
    order = tensor_basis(n, l)
    return [normalize_leading(v, order) for v in raw]


def expected_hw_dimension(n: int, l: int) -> int:
    return math.comb(n + l - 2, l)


def verify_kernel(basis: Sequence[dict], K, colors=None) -> None:
    for vec in basis:
        if apply_e(vec, K, colors):
            raise ConsistencyError("highest-weight vector not killed by E")


def kernel_dimension_at(n: int, l: int, sp: Specialization, colors=None) -> int:
    """``dim ker E`` on the slice at a numeric point (an upper bound for the generic value)."""
    K = SpecializedQuantum(sp)
    mat, _, cols = e_matrix(n, l, K, colors)
    if not mat:
        return len(cols)
    _, pivots = rref(mat, K.zero, K.one)
    return len(cols) - len(pivots)


def certified_hw_dimension(n: int, l: int, K, seed: int = 0, colors=None) -> int:
    """Exact generic ``dim ker E``.

    The recursive basis gives independent kernel vectors (identity on the
    ``k_1 = 0`` coordinates), a lower bound; rank can only drop under
    specialization, so a numeric kernel of the same size caps it.
    """
    basis = highest_weight_basis(n, l, K, colors)
    verify_kernel(basis, K, colors)
    lower = len(basis)
    gens = GeneratorSet(QUANTUM, n)
    upper = kernel_dimension_at(n, l, Specialization.draw(gens, seed), colors)
    if upper != lower:
        # a bad numeric point can only overestimate; try a few more
        for extra in range(1, 8):
            upper = min(upper, kernel_dimension_at(n, l, Specialization.draw(gens, seed + extra), colors))
            if upper == lower:
                break
    if upper != lower:
        raise ConsistencyError(f"kernel bounds disagree at (n,l)=({n},{l}): {lower} vs {upper}")
    return lower


@dataclass
class DualityReport:
    n: int
    t_max: int
    identity_rows: list = field(default_factory=list)
    kernel_rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.identity_rows + self.kernel_rows)

    def summary(self) -> dict:
        return {"n": self.n, "t_max": self.t_max, "ok": self.ok,
                "binomial_identity": self.identity_rows, "kernel_dimensions": self.kernel_rows}


def duality_dimension_check(n: int, t_max: int, K=None, seed: int = 0, l_max: int | None = None) -> DualityReport:
    """Graded-dimension bookkeeping of the duality decomposition.

    (i) ``sum_{c<=t} C(c+n-2, c) = C(t+n-1, t)``: the grade-``t`` slice splits
    into highest-weight spaces of degrees ``c <= t``;
    (ii) ``dim ker E`` on the ``(n, l)`` slice is ``C(l+n-2, l)``.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rep = DualityReport(n, t_max)
    for t in range(t_max + 1):
        lhs = sum(math.comb(c + n - 2, c) for c in range(t + 1))
        rhs = math.comb(t + n - 1, t)
        rep.identity_rows.append({"t": t, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs and rhs == slice_size(n, t)})
    if K is not None:
        for l in range(min(t_max, t_max if l_max is None else l_max) + 1):
            try:
                got = certified_hw_dimension(n, l, K, seed)
            except ConsistencyError:
                got = None
            want = expected_hw_dimension(n, l)
            rep.kernel_rows.append({"l": l, "kernel": got, "expected": want, "ok": got == want})
    return rep


def admissible(sp: Specialization, colors=None) -> bool:
    """Numeric admissibility of the strand weights ``U_{colors[j]}``."""
    n = len(colors) if colors is not None else sp.gens.n
    cols = _colors(colors, n)
    return is_admissible([sp.U(c) for c in cols], sp.v)
