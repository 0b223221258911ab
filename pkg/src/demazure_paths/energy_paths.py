"""Energy function on B^l (x) B^l, ground-state paths and path weights."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .crystal import TensorWord
from .errors import InconsistentPropagation
from .lattice import AffineWeight
from .symtensor import BoxElem, SymTensorCrystal


def _step(pair: TensorWord, i: int) -> int:
    """H(e_i(b (x) b')) - H(b (x) b') for an edge leaving ``pair``."""
    if i != 0:
        return 0
    b, bp = pair.factors
    return 1 if b.phi(0) >= bp.eps(0) else -1


@dataclass
class EnergyTable:
    n: int
    l: int
    anchor: tuple
    anchor_value: int
    values: dict = field(repr=False)

    def __call__(self, b: BoxElem, bp: BoxElem) -> int:
        return self.values[(b, bp)]

    def __len__(self):
        return len(self.values)

    def shifted(self, c: int) -> "EnergyTable":
        return EnergyTable(self.n, self.l, self.anchor, self.anchor_value + c,
                           {k: v + c for k, v in self.values.items()})

    def to_json(self) -> dict:
        entries = sorted(self.values.items(), key=lambda kv: (kv[0][0].x, kv[0][1].x))
        return {
            "n": self.n,
            "l": self.l,
            "anchor": [list(self.anchor[0].x), list(self.anchor[1].x)],
            "entries": [[[list(b.x), list(bp.x)], h] for (b, bp), h in entries],
        }


def energy_table(n: int, l: int, anchor_value: int = 0) -> EnergyTable:
    """Propagate H over the crystal graph of B^l (x) B^l.

    Anchored at H((l,0,...,0) (x) (l,0,...,0)) = anchor_value.  Every edge
    is checked, so a non-tree edge disagreeing with the recursion raises
    InconsistentPropagation.
    """
    B = SymTensorCrystal(n, l)
    u = B.top()
    start = TensorWord((u, u))
    H = {start: anchor_value}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(n):
            up = w.e(i)
            if up is not None:
                _assign(H, queue, up, H[w] + _step(w, i), w, i)
            down = w.f(i)
            if down is not None:
                _assign(H, queue, down, H[w] - _step(down, i), w, i)
    if len(H) != len(B) ** 2:
        raise InconsistentPropagation(
            f"energy reached {len(H)} of {len(B) ** 2} pairs; B (x) B is not connected")
    values = {(w.factors[0], w.factors[1]): h for w, h in H.items()}
    return EnergyTable(n, l, (u, u), anchor_value, values)


def _assign(H, queue, target, value, source, i):
    old = H.get(target)
    if old is None:
        H[target] = value
        queue.append(target)
    elif old != value:
        raise InconsistentPropagation(
            f"edge {source} -[{i}]- {target}: have H={old}, recursion gives {value}")


class GroundState:
    """Ground-state data for a dominant weight ``lam`` of level l = sum(lam)."""

    def __init__(self, lam):
        self.lam = tuple(lam)
        self.n = len(self.lam)
        self.l = sum(self.lam)
        self.B = SymTensorCrystal(self.n, self.l)

    def __repr__(self):
        return f"GroundState({self.lam})"

    def b(self, k: int) -> BoxElem:
        return self.B.ground_elem(k, self.lam)

    def head(self, k: int) -> tuple:
        """lambda_k = sigma^k lam."""
        return self.B.sigma_lambda(self.lam, k)

    def word(self, depth: int) -> TensorWord:
        """u_{lambda_depth} (x) b_depth (x) ... (x) b_1."""
        return TensorWord(tuple(self.b(k) for k in range(depth, 0, -1)), self.head(depth))

    def deepen(self, w: TensorWord, depth: int) -> TensorWord:
        """Insert ground factors under the head until ``w`` has ``depth`` factors."""
        k = len(w.factors)
        if depth < k:
            raise ValueError(f"cannot shrink a depth-{k} word to {depth}")
        if w.head != self.head(k):
            raise ValueError(f"head {w.head} is not lambda_{k} = {self.head(k)}")
        extra = tuple(self.b(m) for m in range(depth, k, -1))
        return TensorWord(extra + w.factors, self.head(depth))

    def strip(self, w: TensorWord) -> TensorWord:
        """Drop leading factors that agree with the ground state."""
        k = len(w.factors)
        while k > 0 and w.factors[len(w.factors) - k] == self.b(k):
            k -= 1
        return TensorWord(w.factors[len(w.factors) - k:], self.head(k))


@dataclass(frozen=True)
class TruncatedPath:
    lam: tuple
    word: TensorWord

    @property
    def depth(self) -> int:
        return len(self.word.factors)


def ground_path(lam, k: int) -> TruncatedPath:
    return TruncatedPath(tuple(lam), GroundState(lam).word(k))


def _unwrap(p, lam):
    if isinstance(p, TruncatedPath):
        return p.word, p.lam
    if lam is None:
        raise ValueError("a bare TensorWord needs the base weight lam")
    return p, tuple(lam)


def path_weight(p, E: EnergyTable, lam=None) -> AffineWeight:
    """Affine weight of a truncated path.

    lam + sum_k (wt p(k) - wt b_k) - [sum_k k (H(p(k+1) (x) p(k)) - H(b_{k+1} (x) b_k))] delta,
    where p(depth + 1) is the ground element b_{depth+1} and classical
    weights are lifted with zero delta coefficient.
    """
    word, lam = _unwrap(p, lam)
    gs = GroundState(lam)
    D = len(word.factors)
    cls = list(lam)
    energy = 0
    for k in range(1, D + 1):
        pk = word.component(k)
        bk = gs.b(k)
        for c, (a, g) in enumerate(zip(pk.wt, bk.wt)):
            cls[c] += a - g
        above = word.component(k + 1) if k < D else gs.b(k + 1)
        energy += k * (E(above, pk) - E(gs.b(k + 1), bk))
    return AffineWeight(gs.n, tuple(cls), -energy)


def wt_word_classical(p, lam=None) -> tuple:
    """Classical weight lambda_D + sum_{i<=D} wt p(i) of a depth-D path."""
    word = p.word if isinstance(p, TruncatedPath) else p
    if word.head is None:
        raise ValueError("classical weight needs the head u_{lambda_D}")
    return word.wt
