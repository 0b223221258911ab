"""Affine sl_n weight lattice in the (Lambda_0, ..., Lambda_{n-1}, delta) basis.

A weight ``sum_i lam[i] Lambda_i + del * delta`` is stored as an integer
vector ``lam`` together with the delta coefficient.  Simple roots are
expanded into this basis on construction, so pairing with a coroot ``h_j``
is a coordinate read.  Node indices are always taken modulo ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True, order=True)
class AffineWeight:
    n: int
    lam: tuple
    delta: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank modulus must be >= 2, got {self.n}")
        lam = tuple(int(c) for c in self.lam)
        if len(lam) != self.n:
            raise ValueError(f"expected {self.n} Lambda coefficients, got {len(lam)}")
        object.__setattr__(self, "lam", lam)

    @property
    def level(self) -> int:
        return sum(self.lam)

    def cl(self) -> tuple:
        """Classical projection: drop the delta coefficient."""
        return self.lam

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.lam)

    def __add__(self, other):
        _check_same_rank(self, other)
        return AffineWeight(self.n, tuple(a + b for a, b in zip(self.lam, other.lam)),
                            self.delta + other.delta)

    def __sub__(self, other):
        _check_same_rank(self, other)
        return AffineWeight(self.n, tuple(a - b for a, b in zip(self.lam, other.lam)),
                            self.delta - other.delta)

    def __neg__(self):
        return AffineWeight(self.n, tuple(-a for a in self.lam), -self.delta)

    def scale(self, c: int) -> "AffineWeight":
        return AffineWeight(self.n, tuple(c * a for a in self.lam), c * self.delta)

    def to_json(self) -> dict:
        return {"n": self.n, "lam": list(self.lam), "del": self.delta}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineWeight":
        return cls(obj["n"], tuple(obj["lam"]), obj.get("del", 0))

    def __str__(self):
        terms = [f"{c}L{i}" if c != 1 else f"L{i}" for i, c in enumerate(self.lam) if c]
        if self.delta:
            terms.append(f"{self.delta}d" if self.delta != 1 else "d")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _check_same_rank(a, b):
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")


def fundamental(i: int, n: int) -> AffineWeight:
    lam = [0] * n
    lam[i % n] = 1
    return AffineWeight(n, tuple(lam), 0)


def null_root(n: int) -> AffineWeight:
    return AffineWeight(n, (0,) * n, 1)


def weight(lam: Sequence[int], delta: int = 0) -> AffineWeight:
    return AffineWeight(len(lam), tuple(lam), delta)


def simple_root(i: int, n: int) -> AffineWeight:
    """alpha_i = -Lambda_{i-1} + 2 Lambda_i - Lambda_{i+1}, plus delta when i = 0.

    The delta coefficient follows alpha_0 = delta - theta.
    """
    i %= n
    lam = [0] * n
    lam[i] += 2
    lam[(i - 1) % n] -= 1
    lam[(i + 1) % n] -= 1
    return AffineWeight(n, tuple(lam), 1 if i == 0 else 0)


def cartan_entry(i: int, j: int, n: int) -> int:
    """<alpha_i, h_j> = 2 d(i-j) - d(i-j-1) - d(i-j+1), d(m) = [m = 0 mod n]."""
    def d(m):
        return 1 if m % n == 0 else 0
    return 2 * d(i - j) - d(i - j - 1) - d(i - j + 1)


def pair(w: AffineWeight, j: int) -> int:
    return w.lam[j % w.n]


def reflect(i: int, w: AffineWeight) -> AffineWeight:
    """Simple reflection r_i w = w - <w, h_i> alpha_i."""
    return w - simple_root(i, w.n).scale(pair(w, i))


def fold(letters: Sequence[int], w: AffineWeight) -> AffineWeight:
    """Apply the Weyl word ``r_{letters[0]} ... r_{letters[-1]}`` to ``w``.

    The rightmost letter acts first.
    """
    for i in reversed(letters):
        w = reflect(i, w)
    return w


def sigma_weight(w: AffineWeight, times: int = 1) -> AffineWeight:
    """Diagram rotation sum m_i Lambda_i -> sum m_i Lambda_{i-1}; delta is kept."""
    s = times % w.n
    lam = w.lam[s:] + w.lam[:s]
    return AffineWeight(w.n, lam, w.delta)


def dominant_weights(n: int, l: int) -> list:
    """All classical dominant weights of level ``l`` as Lambda-coefficient tuples."""
    return sorted(compositions(l, n))


def compositions(total: int, parts: int) -> list:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts, lex order."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def sl_n_weyl_letters(k: int, n: int) -> tuple:
    """Letters of w^(k) = r_{k-1} ... r_1 r_0, leftmost first."""
    return tuple((m % n) for m in range(k - 1, -1, -1))


def weyl_lemma_closed_form(k: int, n: int) -> AffineWeight:
    """Lambda_0 - sum_{i<k} floor((i + d)/d) alpha_i with d = n - 1."""
    d = n - 1
    w = fundamental(0, n)
    for i in range(k):
        w = w - simple_root(i, n).scale((i + d) // d)
    return w


def root_coordinates(w: AffineWeight) -> tuple:
    """Write a level-zero weight as ``-sum_{i>=1} c_i alpha_i + m delta``.

    Returns ``(c_1, ..., c_{n-1}, m)``.  Raises ``ValueError`` if the classical
    part is not in the classical root lattice.
    """
    n = w.n
    if w.level != 0:
        raise ValueError("weight must have level zero")
    # classical part as a gl_n vector modulo (1, ..., 1): Lambda_i -> e_1 + ... + e_i
    v = [sum(w.lam[i] for i in range(j, n)) for j in range(1, n + 1)]
    total = sum(v)
    if total % n:
        raise ValueError(f"{w} is not in the root lattice")
    t = total // n
    b = [x - t for x in v]
    coeffs = []
    acc = 0
    for x in b[:-1]:
        acc += x
        coeffs.append(-acc)
    return tuple(coeffs) + (w.delta,)
