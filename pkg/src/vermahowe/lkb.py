"""LKB representations: highest-weight slices, braid matrices, simplicity certificates.

``W_{n,l}`` is the kernel of ``E`` on the degree-``l`` grade-zero slice, which
is exactly the ``K``-eigenspace for ``v^(sum mu - 2l)`` there.  Words pure on
the color partition preserve it; their matrices are written with rows as the
images of basis vectors, so ``M(w1 * w2) = M(w1) @ M(w2)`` when ``w1`` is read
first.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import flint

from .braid import BraidWord, Partition, apply_word, purity, require_pure
from .errors import ConsistencyError, SpecializationSingular
from .qgroup import admissible, highest_weight_basis, rref
from .scalar import QUANTUM, GeneratorSet, Specialization, SpecializedQuantum, SymbolicQuantum
from .verma import _colors, tensor_basis


def lkb_rank(n: int, l: int) -> int:
    return math.comb(n + l - 2, l) if n >= 2 else int(l == 0)


@dataclass
class LkbSpace:
    n: int
    l: int
    colors: tuple[int, ...]
    K: object
    basis: list = field(default_factory=list)

    def __post_init__(self):
        self.order = tensor_basis(self.n, self.l)
        # pivot columns give a square invertible block for coordinate solves
        mat = [[b.get(k, self.K.zero) for k in self.order] for b in self.basis]
        _, self.pivots = rref(mat, self.K.zero, self.K.one) if mat else (None, [])
        if len(self.pivots) != len(self.basis):
            raise ConsistencyError("LKB basis vectors are dependent")
        block = [[b.get(self.order[p], self.K.zero) for p in self.pivots] for b in self.basis]
        self._inv = _invert(block, self.K) if block else []

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def partition(self) -> Partition:
        return Partition.from_colors(self.colors)

    def coordinates(self, vec: dict) -> list:
        """Coordinates of ``vec`` in the basis; a nonzero residual is a hard error."""
        K = self.K
        rhs = [vec.get(self.order[p], K.zero) for p in self.pivots]
        coords = [sum((rhs[i] * self._inv[i][j] for i in range(self.dim)), K.zero)
                  for j in range(self.dim)]
        residual = dict(vec)
        for c, b in zip(coords, self.basis):
            if c:
                for k, x in b.items():
                    residual[k] = residual.get(k, K.zero) - c * x
        if any(residual.values()):
            raise ConsistencyError(f"image leaves W_({self.n},{self.l}); the word must be pure on the colors")
        return coords

    def labels(self) -> list[str]:
        return [format_vector(b, self.order, self.K) for b in self.basis]


def _invert(mat, K):
    d = len(mat)
    aug = [list(row) + [K.one if i == j else K.zero for j in range(d)] for i, row in enumerate(mat)]
    red, pivots = rref(aug, K.zero, K.one)
    if pivots[:d] != list(range(d)):
        raise ConsistencyError("pivot block is singular")
    return [row[d:] for row in red]


def format_vector(vec: dict, order, K) -> str:
    parts = []
    for k in order:
        c = vec.get(k)
        if not c:
            continue
        mono = "m[" + ",".join(map(str, k)) + "]"
        parts.append(mono if c == K.one else f"({K.fmt(c)})*{mono}")
    return " + ".join(parts) or "0"


def lkb_basis(n: int, l: int, colors=None, K=None) -> LkbSpace:
    """``W_{n,l}`` with the normalized highest-weight basis (symbolic unless ``K`` is given)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    colors = _colors(colors, n)
    if len(colors) != n:
        raise ValueError("need one color per strand")
    if K is None:
        K = SymbolicQuantum(max(colors))
    return LkbSpace(n, l, colors, K, highest_weight_basis(n, l, K, colors))


@dataclass
class RepMatrix:
    word: BraidWord
    space: LkbSpace
    rows: list

    @property
    def size(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "RepMatrix") -> list:
        return matmul(self.rows, other.rows, self.space.K)

    def to_json(self) -> dict:
        K = self.space.K
        return {
            "n": self.space.n,
            "l": self.space.l,
            "colors": list(self.space.colors),
            "word": str(self.word),
            "basis": self.space.labels(),
            "entries": [[K.fmt(x) for x in row] for row in self.rows],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def matmul(a, b, K):
    return [[sum((a[i][t] * b[t][j] for t in range(len(b))), K.zero) for j in range(len(b[0]))]
            for i in range(len(a))]


def identity(d: int, K):
    return [[K.one if i == j else K.zero for j in range(d)] for i in range(d)]


def word_matrix(w: BraidWord, space: LkbSpace) -> RepMatrix:
    """Matrix of ``w`` on ``space`` (rows are images); ``w`` must be pure on the colors."""
    if w.n != space.n:
        raise ValueError("word and space have different strand counts")
    require_pure(w, space.colors)
    rows = []
    for b in space.basis:
        img, _ = apply_word(w, space.colors, b, space.K)
        rows.append(space.coordinates(img))
    return RepMatrix(w, space, rows)


# ---------------------------------------------------------------------------
# generators of braid groups pure on a partition


def _a_word(i: int, j: int, n: int) -> BraidWord:
    """``A_ij = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1)``, 1-based ``i < j``."""
    up = tuple(range(j - 1, i, -1))
    return BraidWord(n, up + (i, i) + tuple(-x for x in reversed(up)))


def _t_word(i: int, j: int, n: int) -> BraidWord:
    """A lift of the transposition ``(i j)``: ``A_ij`` with a single middle crossing."""
    up = tuple(range(j - 1, i, -1))
    return BraidWord(n, up + (i,) + tuple(-x for x in reversed(up)))


def pure_generators(n: int, S: Partition | None = None) -> list[BraidWord]:
    """Generators for the braids pure on ``S`` (default: the pure braid group).

    ``A_ij`` for strands in different blocks, and a transposition lift for
    consecutive members of each block (``s_i`` itself when they are adjacent).
    """
    S = Partition.finest(n) if S is None else S
    if S.n != n:
        raise ValueError("partition does not cover 1..n")
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bi = S.block_of(i)
            if j not in bi:
                out.append(_a_word(i, j, n))
            elif bi[bi.index(i) + 1] == j:
                out.append(_t_word(i, j, n))
    for w in out:
        if not purity(w, S):
            raise ConsistencyError(f"generator {w} is not pure on {S}")
    return out


# ---------------------------------------------------------------------------
# commutants


def _fmpq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def commutant_dimension(mats: Sequence) -> int:
    """``dim {X : X M = M X for every M}`` over Q, via the stacked Sylvester system.

    ``mats`` are square rational matrices (lists of rows or :class:`RepMatrix`).
    """
    mats = [m.rows if isinstance(m, RepMatrix) else m for m in mats]
    if not mats:
        raise ValueError("need at least one matrix")
    d = len(mats[0])
    if any(len(m) != d or any(len(r) != d for r in m) for m in mats):
        raise ValueError("matrices must be square of equal size")
    if d == 0:
        return 0
    rows = []
    for M in mats:
        M = [[_fmpq(x) for x in r] for r in M]
        for a in range(d):
            for b in range(d):
                # (XM - MX)_{ab} as a linear form in X_{pq} at index p*d+q
                eq = [flint.fmpq(0)] * (d * d)
                for c in range(d):
                    eq[a * d + c] += M[c][b]
                    eq[c * d + b] -= M[a][c]
                rows.append(eq)
    A = flint.fmpq_mat(len(rows), d * d, [x for r in rows for x in r])
    return d * d - A.rank()


@dataclass
class TrialResult:
    seed: int
    point: dict
    commutant: int | None
    error: str | None = None


@dataclass
class SimplicityReport:
    n: int
    l: int
    partition: Partition
    colors: tuple[int, ...]
    generators: list
    dim: int
    trials: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return any(t.commutant == 1 for t in self.trials)

    @property
    def verdict(self) -> str:
        return "simple certified" if self.certified else "not certified"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "partition": str(self.partition),
            "colors": list(self.colors),
            "dim": self.dim,
            "generators": [str(w) for w in self.generators],
            "trials": [
                {"seed": t.seed, "point": t.point, "commutant_dim": t.commutant, "error": t.error}
                for t in self.trials
            ],
            "verdict": self.verdict,
        }


def draw_admissible(n: int, colors, seed: int, retries: int = 16) -> Specialization:
    gens = GeneratorSet(QUANTUM, n)
    for attempt in range(retries + 1):
        sp = Specialization.draw(gens, seed + attempt)
        if admissible(sp, colors):
            return sp
    raise SpecializationSingular(f"no admissible point found from seed {seed}")


def simplicity_trial(n: int, l: int, colors, words, seed: int) -> TrialResult:
    try:
        sp = draw_admissible(n, colors, seed)
        point = {k: str(v) for k, v in sp.as_dict().items()}
        space = lkb_basis(n, l, colors, SpecializedQuantum(sp))
        if space.dim == 0:
            return TrialResult(seed, point, 0)
        mats = [word_matrix(w, space) for w in words]
        return TrialResult(seed, point, commutant_dimension(mats))
    except (SpecializationSingular, ZeroDivisionError) as exc:
        return TrialResult(seed, {}, None, f"singular specialization: {exc}")


def simplicity_report(n: int, l: int, S: Partition | None = None, trials: int = 3, seed: int = 0) -> SimplicityReport:
    """Commutant dimensions of the generators pure on ``S`` at ``trials`` admissible points.

    Specialization can only enlarge the commutant, so any trial with
    commutant dimension 1 certifies generic simplicity.
    """
    S = Partition.finest(n) if S is None else S
    colors = S.colors()
    words = pure_generators(n, S)
    rep = SimplicityReport(n, l, S, colors, words, lkb_rank(n, l))
    # trial seeds are spaced out so redraws of one trial never reuse another's seed
    for t in range(trials):
        rep.trials.append(simplicity_trial(n, l, colors, words, seed + 1000 * t))
    return rep
