"""Braid words, partitions, R-matrices and colored reading.

A braid word on ``n`` strands is a sequence of signed letters ``+-i`` for
``sigma_{i,i+1}^{+-1}``.  Words are read leftmost letter first (bottom of the
diagram first).  A positive letter acts by the R-matrix ``R_{a,b}`` on the two
factors it crosses, where ``(a, b)`` are their current colors; a negative
letter acts by ``R_{b,a}^-1``.  Either way the two colors swap.

Vectors live in the grade-zero slice: sparse dicts keyed by index tuples ``k``
standing for ``m_{k_1} (x) ... (x) m_{k_n}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, PurityError
from .sparse import add_term
from .verma import tensor_basis


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"letter {x} out of range for {self.n} strands")

    def __str__(self):
        return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        """Concatenation; ``self`` is read first."""
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """``perm[p]`` is the end position (0-based) of the strand starting at ``p``."""
        where = list(range(self.n))  # where[p]: current position of strand p
        at = list(range(self.n))  # at[q]: strand currently at position q
        for x in self.letters:
            i = abs(x) - 1
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            where[a], where[b] = i + 1, i
        return tuple(where)


_TOKEN = re.compile(r"s(\d+)(?:\^(-?1))?$|([+-]?\d+)$")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse ``s1 s2^-1`` style words, or signed integers such as ``1 -2``."""
    letters = []
    for m in re.finditer(r"\S+", text):
        tok, pos = m.group(), m.start()
        t = _TOKEN.match(tok)
        if not t:
            raise ParseError(f"malformed braid letter {tok!r}", pos)
        if t.group(1) is not None:
            idx = int(t.group(1))
            sign = -1 if t.group(2) == "-1" else 1
        else:
            val = int(t.group(3))
            idx, sign = abs(val), (1 if val > 0 else -1)
        if not 1 <= idx <= n - 1:
            raise ParseError(f"generator index {idx} outside 1..{n - 1}", pos)
        letters.append(sign * idx)
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# partitions and colors


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if any(not b for b in canon):
            raise ValueError("blocks must be nonempty")
        flat = [x for b in canon for x in b]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks must partition 1..n, got {canon}")
        object.__setattr__(self, "blocks", canon)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self):
        return "".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        t = text.strip()
        if t.startswith("{") and t.endswith("}"):
            t = t[1:-1]
        t = t.replace(" ", "")
        if not re.fullmatch(r"(\[\d+(,\d+)*\],?)+", t):
            raise ParseError(f"malformed partition {text!r}")
        blocks = [tuple(int(x) for x in b.split(",")) for b in re.findall(r"\[([^\]]*)\]", t)]
        try:
            return cls(tuple(blocks))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def finest(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def full(cls, n: int) -> "Partition":
        return cls((tuple(range(1, n + 1)),))

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "Partition":
        groups: dict = {}
        for pos, c in enumerate(colors, 1):
            groups.setdefault(c, []).append(pos)
        return cls(tuple(tuple(g) for g in groups.values()))

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def colors(self) -> tuple[int, ...]:
        """One color per block, numbered by the block's least element."""
        out = [0] * self.n
        for b in self.blocks:
            for x in b:
                out[x - 1] = b[0]
        return tuple(out)


def purity(w: BraidWord, S: Partition) -> bool:
    """The underlying permutation maps every block of ``S`` to itself."""
    if S.n != w.n:
        raise ValueError("partition and word have different strand counts")
    perm = w.permutation()
    return all({perm[x - 1] + 1 for x in b} == set(b) for b in S.blocks)


def finest_partition(w: BraidWord) -> Partition:
    """Orbits of the underlying permutation."""
    perm = w.permutation()
    seen, blocks = set(), []
    for start in range(w.n):
        if start in seen:
            continue
        orbit, p = [], start
        while p not in seen:
            seen.add(p)
            orbit.append(p + 1)
            p = perm[p]
        blocks.append(tuple(orbit))
    return Partition(tuple(blocks))


def handlebody_colors(g: int, n: int) -> tuple[int, ...]:
    """Core strands ``1..g`` in their own blocks, then ``n`` strands of one shared color."""
    if g < 0 or n < 1:
        raise ValueError("need g >= 0 and n >= 1")
    return tuple(range(1, g + 1)) + (g + 1,) * n


def handlebody_partition(g: int, n: int) -> Partition:
    return Partition.from_colors(handlebody_colors(g, n))


def read_colors(lines: Iterable[str]) -> tuple[int, ...]:
    """Color file: one positive color index per line; blank lines and ``#`` comments skipped."""
    out = []
    for lineno, line in enumerate(lines, 1):
        t = line.split("#", 1)[0].strip()
        if not t:
            continue
        try:
            c = int(t)
        except ValueError:
            raise ParseError(f"line {lineno}: color must be an integer, got {t!r}") from None
        if c < 1:
            raise ParseError(f"line {lineno}: color indices start at 1")
        out.append(c)
    if not out:
        raise ParseError("color file is empty")
    return tuple(out)


def parse_colors(text: str) -> tuple[int, ...]:
    """Inline colors, comma or whitespace separated."""
    return read_colors(re.split(r"[,\s]+", text.strip()))


# ---------------------------------------------------------------------------
# R-matrices on two factors


def _e_power(k: int, t: int, K):
    """``e^t m_k = [k][k-1]..[k-t+1] m_{k-t}``."""
    c = K.one
    for u in range(t):
        c = c * K.qint(k - u)
    return c


def _f_power(col: int, k: int, t: int, K):
    """``f^t m_k = [mu-k][mu-k-1]..[mu-k-t+1] m_{k+t}`` in a factor of weight ``mu_col``."""
    c = K.one
    for u in range(t):
        c = c * K.qmu(col, -k - u)
    return c


def _scaling(a: int, b: int, ci: int, cj: int, K, sign: int):
    """``v^(+-(-b mu_i - a mu_j + 2ab))`` on ``m_a (x) m_b`` in ``V_i (x) V_j``."""
    x = K.vpow(2 * a * b) / (K.upow(ci) ** b * K.upow(cj) ** a)
    return x if sign > 0 else K.one / x


def _theta(k: int, l: int, ci: int, cj: int, K, sign: int) -> dict:
    """``sum_t (+-1)^t v^(+-t(t-1)/2) e^t (x) f^[t]`` on ``m_k (x) m_l``."""
    out: dict = {}
    vd = K.vdiff()
    for t in range(k + 1):
        c = _e_power(k, t, K) * _f_power(cj, l, t, K) * vd ** t / K.qfact(t)
        if sign > 0:
            c = c * K.vpow(t * (t - 1) // 2)
        else:
            c = c * K.vpow(-(t * (t - 1) // 2)) * (-1) ** t
        add_term(out, (k - t, l + t), c)
    return out


def rmatrix_pair(sign: int, ci: int, cj: int, k: int, l: int, K) -> dict:
    """Image of ``m_k (x) m_l`` in ``V_ci (x) V_cj`` under one crossing.

    ``sign=+1``: ``R_{ci,cj} = s . scaling . Theta``.
    ``sign=-1``: ``R_{cj,ci}^-1 = Theta^- . scaling^-1 . s`` (the scaling and
    ``Theta^-`` taken in ``V_cj (x) V_ci``).  Both land in ``V_cj (x) V_ci``.
    """
    out: dict = {}
    if sign > 0:
        for (a, b), c in _theta(k, l, ci, cj, K, +1).items():
            add_term(out, (b, a), c * _scaling(a, b, ci, cj, K, +1))
        return out
    a, b = l, k
    c0 = _scaling(a, b, cj, ci, K, -1)
    for key, c in _theta(a, b, cj, ci, K, -1).items():
        add_term(out, key, c * c0)
    return out


def rmatrix_step(sign: int, colors: tuple[int, int], vec: dict, K) -> dict:
    """One crossing on a two-factor vector ``{(k, l): coeff}``."""
    ci, cj = colors
    out: dict = {}
    for (k, l), c in vec.items():
        for key, x in rmatrix_pair(sign, ci, cj, k, l, K).items():
            add_term(out, key, c * x)
    return out


def crossing(sign: int, pos: int, colors: Sequence[int], vec: dict, K) -> dict:
    """Apply a crossing of factors ``pos, pos+1`` (0-based) to an n-factor vector."""
    ci, cj = colors[pos], colors[pos + 1]
    out: dict = {}
    cache: dict = {}
    for key, c in vec.items():
        pair = (key[pos], key[pos + 1])
        if pair not in cache:
            cache[pair] = rmatrix_pair(sign, ci, cj, pair[0], pair[1], K)
        for (a, b), x in cache[pair].items():
            add_term(out, key[:pos] + (a, b) + key[pos + 2:], c * x)
    return out


def permute_colors(letter: int, colors: Sequence[int]) -> tuple[int, ...]:
    i = abs(letter) - 1
    cols = list(colors)
    cols[i], cols[i + 1] = cols[i + 1], cols[i]
    return tuple(cols)


def apply_word(w: BraidWord, colors: Sequence[int], vec: dict, K) -> tuple[dict, tuple[int, ...]]:
    """Colored reading of ``w`` applied to ``vec``; returns the image and the final colors."""
    cols = tuple(colors)
    if len(cols) != w.n:
        raise ValueError("need one color per strand")
    for x in w.letters:
        vec = crossing(1 if x > 0 else -1, abs(x) - 1, cols, vec, K)
        cols = permute_colors(x, cols)
    return vec, cols


@dataclass
class ColoredMap:
    """A linear map between grade-zero slices, rows are images of the source basis."""

    basis: list
    rows: list
    source_colors: tuple[int, ...]
    target_colors: tuple[int, ...]

    @property
    def square(self) -> bool:
        return self.source_colors == self.target_colors


def colored_read(w: BraidWord, colors: Sequence[int], l: int, K) -> ColoredMap:
    """Matrix of the colored reading of ``w`` on the degree-``l`` slice (basis ``tensor_basis(n, l)``)."""
    basis = tensor_basis(w.n, l)
    pos = {k: i for i, k in enumerate(basis)}
    rows = []
    target = tuple(colors)
    for k in basis:
        img, target = apply_word(w, colors, {k: K.one}, K)
        row = [K.zero] * len(basis)
        for key, c in img.items():
            row[pos[key]] = c
        rows.append(row)
    if not basis:
        target = tuple(colors)
        for x in w.letters:
            target = permute_colors(x, target)
    return ColoredMap(basis, rows, tuple(colors), target)


def require_pure(w: BraidWord, colors: Sequence[int]) -> None:
    S = Partition.from_colors(colors)
    if not purity(w, S):
        raise PurityError(f"word {str(w) or '(empty)'} is not pure on {S}")


# ---------------------------------------------------------------------------
# verification suites


def _same_map(w1: BraidWord, w2: BraidWord, colors, l, K) -> bool:
    a, b = colored_read(w1, colors, l, K), colored_read(w2, colors, l, K)
    return a.rows == b.rows and a.target_colors == b.target_colors


def braid_relations_report(n: int, l_max: int, K, colors=None):
    """Colored braid relations on every slice of degree ``<= l_max``.

    Checks ``s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}``, far commutation and
    ``s_i s_i^-1 = s_i^-1 s_i = 1`` as maps between colored slices.
    """
    from .qgroup import CheckReport

    colors = tuple(range(1, n + 1)) if colors is None else tuple(colors)
    rep = CheckReport(f"colored braid relations n={n}")
    ident = BraidWord(n)
    for l in range(l_max + 1):
        for i in range(1, n):
            pairs = [(BraidWord(n, (i, -i)), ident), (BraidWord(n, (-i, i)), ident)]
            if i + 1 < n:
                pairs.append((BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1))))
            for j in range(i + 2, n):
                pairs.append((BraidWord(n, (i, j)), BraidWord(n, (j, i))))
            for w1, w2 in pairs:
                rep.record((str(w1), str(w2)), f"l={l}", {} if _same_map(w1, w2, colors, l, K) else {0: 1})
    return rep


def yang_baxter_report(l_max: int, K, colors=(1, 2, 3)):
    """``R12 R23 R12 = R23 R12 R23`` on three factors, all sign patterns of the outer letters."""
    from .qgroup import CheckReport

    rep = CheckReport("Yang-Baxter")
    for l in range(l_max + 1):
        for a in (1, -1):
            for b in (1, -1):
                for c in (1, -1):
                    # s1^a s2^b s1^c = s2^c s1^b s2^a is a braid identity iff b is a or c
                    if b != a and b != c:
                        continue
                    w1 = BraidWord(3, (a * 1, b * 2, c * 1))
                    w2 = BraidWord(3, (c * 2, b * 1, a * 2))
                    rep.record((str(w1), str(w2)), f"l={l}", {} if _same_map(w1, w2, colors, l, K) else {0: 1})
    return rep


def inverse_report(deg_max: int, K, colors=(1, 2)):
    """``R^-1 R = R R^-1 = 1`` on two-factor slices of degree ``<= deg_max``."""
    from .qgroup import CheckReport

    rep = CheckReport("R-matrix inverse")
    ci, cj = colors
    for l in range(deg_max + 1):
        for k in tensor_basis(2, l):
            e = {k: K.one}
            back = rmatrix_step(-1, (cj, ci), rmatrix_step(1, (ci, cj), e, K), K)
            rep.record("R^-1 R", k, {} if back == e else {0: 1})
            back = rmatrix_step(1, (cj, ci), rmatrix_step(-1, (ci, cj), e, K), K)
            rep.record("R R^-1", k, {} if back == e else {0: 1})
    return rep


def equivariance_report(deg_max: int, K, colors=(1, 2)):
    """``R x = x R`` for ``x`` in ``E, F, K`` on two-factor slices of degree ``<= deg_max``."""
    from .qgroup import CheckReport
    from .verma import Monomial, act_gl2_quantum

    def act(gen, vec, cols):
        out: dict = {}
        for k, c in vec.items():
            for m, x in act_gl2_quantum(gen, Monomial.from_index(k), K, cols).items():
                add_term(out, m.to_index(), c * x)
        return out

    rep = CheckReport("R-matrix gl(2) equivariance")
    src = tuple(colors)
    dst = src[::-1]
    for sign in (1, -1):
        for gen in ("E", "F", "K"):
            for l in range(deg_max + 1):
                for k in tensor_basis(2, l):
                    e = {k: K.one}
                    lhs = rmatrix_step(sign, src, act(gen, e, src), K)
                    rhs = act(gen, rmatrix_step(sign, src, e, K), dst)
                    rep.record((sign, gen), k, {} if lhs == rhs else {0: 1})
    return rep
