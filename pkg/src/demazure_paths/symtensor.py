"""The level-l symmetric tensor crystal B^l of affine sl_n.

Elements are compositions (x_0, ..., x_{n-1}) of l.  Raising ``e_i`` moves
one unit from x_i to x_{i-1} (x_0 to x_{n-1} when i = 0); ``f_i`` moves it
back.  With these rules eps_i(b) = x_i and phi_i(b) = x_{i-1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb

from .crystal import TensorWord, enumerate_closure
from .errors import LevelMismatch
from .lattice import compositions, dominant_weights


@dataclass(frozen=True, order=True)
class BoxElem:
    x: tuple
    l: int

    def __post_init__(self):
        x = tuple(int(c) for c in self.x)
        object.__setattr__(self, "x", x)
        if len(x) < 2:
            raise ValueError("need at least two coordinates")
        if any(c < 0 for c in x):
            raise ValueError(f"negative coordinate in {x}")
        if sum(x) != self.l:
            raise LevelMismatch(f"{x} does not sum to level {self.l}")

    @property
    def n(self) -> int:
        return len(self.x)

    def _move(self, src: int, dst: int):
        if self.x[src] == 0:
            return None
        y = list(self.x)
        y[src] -= 1
        y[dst] += 1
        return BoxElem(tuple(y), self.l)

    def e(self, i):
        i %= self.n
        return self._move(i, (i - 1) % self.n)

    def f(self, i):
        i %= self.n
        return self._move((i - 1) % self.n, i)

    def eps(self, i) -> int:
        return self.x[i % self.n]

    def phi(self, i) -> int:
        return self.x[(i - 1) % self.n]

    @property
    def wt(self) -> tuple:
        """Classical weight phi(b) - eps(b) in Lambda coordinates."""
        n = self.n
        return tuple(self.x[(c - 1) % n] - self.x[c] for c in range(n))

    def eps_vec(self) -> tuple:
        return self.x

    def phi_vec(self) -> tuple:
        n = self.n
        return tuple(self.x[(c - 1) % n] for c in range(n))

    def sort_key(self):
        return self.x

    def to_json(self):
        return list(self.x)

    def __str__(self):
        return "(" + ",".join(map(str, self.x)) + ")"


def box(*x) -> BoxElem:
    """Shorthand: ``box(1, 1)`` is the element (1,1) of B^2."""
    if len(x) == 1 and not isinstance(x[0], int):
        x = tuple(x[0])
    return BoxElem(tuple(x), sum(x))


def parse_letters(s: str, n: int = 2) -> BoxElem:
    """Two-letter notation, e.g. ``"01"`` -> (1, 1): digit c counts toward x_c."""
    x = [0] * n
    for ch in s:
        c = int(ch)
        if not 0 <= c < n:
            raise ValueError(f"letter {ch!r} out of range for n={n}")
        x[c] += 1
    return BoxElem(tuple(x), len(s))


def eps_phi(b: BoxElem):
    """(eps(b), phi(b)) as Lambda-coefficient tuples."""
    return b.eps_vec(), b.phi_vec()


def sigma_elem(b: BoxElem, times: int = 1) -> BoxElem:
    s = times % b.n
    return BoxElem(b.x[s:] + b.x[:s], b.l)


def sigma_index(i: int, n: int) -> int:
    return (i - 1) % n


class SymTensorCrystal:
    """B^l for affine sl_n as a finite set with helpers."""

    def __init__(self, n: int, l: int):
        if n < 2 or l < 1:
            raise ValueError(f"need n >= 2 and l >= 1, got n={n}, l={l}")
        self.n = n
        self.l = l

    def __repr__(self):
        return f"SymTensorCrystal(n={self.n}, l={self.l})"

    def __eq__(self, other):
        return isinstance(other, SymTensorCrystal) and (self.n, self.l) == (other.n, other.l)

    def __hash__(self):
        return hash((self.n, self.l))

    @cached_property
    def elements(self) -> tuple:
        return tuple(BoxElem(x, self.l) for x in compositions(self.l, self.n))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def expected_size(self) -> int:
        return comb(self.l + self.n - 1, self.n - 1)

    def top(self) -> BoxElem:
        """(l, 0, ..., 0)."""
        return BoxElem((self.l,) + (0,) * (self.n - 1), self.l)

    def _check_weight(self, lam):
        lam = tuple(lam)
        if len(lam) != self.n or any(m < 0 for m in lam):
            raise LevelMismatch(f"{lam} is not a dominant weight for n={self.n}")
        if sum(lam) != self.l:
            raise LevelMismatch(f"{lam} has level {sum(lam)}, crystal has level {self.l}")
        return lam

    def b_of(self, lam) -> BoxElem:
        """The unique b with phi(b) = lam: (m_1, ..., m_{n-1}, m_0)."""
        lam = self._check_weight(lam)
        return BoxElem(lam[1:] + lam[:1], self.l)

    def sigma_lambda(self, lam, times: int = 1) -> tuple:
        """sigma(lam) = eps(b(lam)) = sum m_i Lambda_{i-1}."""
        lam = self._check_weight(lam)
        s = times % self.n
        return lam[s:] + lam[:s]

    def ground_elem(self, k: int, lam) -> BoxElem:
        """b-bar_k = b(sigma^{k-1} lam)."""
        if k < 1:
            raise ValueError("ground elements are indexed from 1")
        return self.b_of(self.sigma_lambda(lam, k - 1))

    def words(self, length: int):
        """All headless words of the given length, canonical order."""
        for facs in itertools.product(self.elements, repeat=length):
            yield TensorWord(facs)

    def ch(self) -> dict:
        """Classical character as {weight: multiplicity}."""
        out = {}
        for b in self.elements:
            out[b.wt] = out.get(b.wt, 0) + 1
        return out


@dataclass
class PerfectReport:
    n: int
    l: int
    connected: bool
    min_level: int
    minimal_elements: int
    eps_bijective: bool
    phi_bijective: bool

    @property
    def clause_a(self) -> bool:
        return self.connected

    @property
    def clause_b(self) -> bool:
        return self.min_level == self.l

    @property
    def clause_c(self) -> bool:
        return self.eps_bijective and self.phi_bijective

    @property
    def passed(self) -> bool:
        return self.clause_a and self.clause_b and self.clause_c

    def to_json(self) -> dict:
        return {
            "assumption": "I",
            "label": "operational perfectness",
            "params": {"n": self.n, "l": self.l},
            "status": "pass" if self.passed else "fail",
            "witness": {
                "connected_BxB": self.connected,
                "min_level": self.min_level,
                "minimal_elements": self.minimal_elements,
                "eps_bijective": self.eps_bijective,
                "phi_bijective": self.phi_bijective,
            },
        }


def perfect_check(n: int, l: int) -> PerfectReport:
    """Operational perfectness of B^l: connectedness of B (x) B, minimal
    level l, and eps/phi bijections between minimal elements and level-l
    dominant weights."""
    B = SymTensorCrystal(n, l)
    pairs = list(B.words(2))
    closure = enumerate_closure([pairs[0]], range(n))
    connected = len(closure) == len(pairs)

    levels = {b: sum(b.eps_vec()) for b in B}
    min_level = min(levels.values())
    minimal = [b for b in B if levels[b] == min_level]
    dom = set(dominant_weights(n, l))

    def bijective(vec):
        images = [vec(b) for b in minimal]
        return len(set(images)) == len(images) and set(images) == dom

    return PerfectReport(n, l, connected, min_level, len(minimal),
                         bijective(BoxElem.eps_vec), bijective(BoxElem.phi_vec))
