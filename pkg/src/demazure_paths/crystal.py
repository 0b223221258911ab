"""Tensor words and the signature rule.

Any object with methods ``e(i)``, ``f(i)`` (returning ``None`` when the
result is zero), ``eps(i)``, ``phi(i)`` and a ``wt`` property (classical
weight as a tuple of Lambda coefficients) can be used as a tensor factor.
``TensorWord`` implements the same interface, so words nest.

Words are written the way they are printed: ``u (x) p(k) (x) ... (x) p(1)``.
``factors[0]`` is the leftmost (deepest) factor, ``factors[-1]`` is p(1).
Signs carry the component number ``j`` counted from the right end, with
the head, when present, numbered ``k + 1``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import BudgetExceeded, TruncationExhausted

DEFAULT_CAP = 10 ** 6


def element_cap(cap=None) -> int:
    """Resolve the element cap: explicit value, then $DEMAZURE_CAP, then 10^6."""
    if cap is not None:
        return int(cap)
    env = os.environ.get("DEMAZURE_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class Sign:
    sign: int  # -1 or +1
    tag: int   # component index, counted from the right

    def __str__(self):
        return f"{'-' if self.sign < 0 else '+'}@{self.tag}"


class Signature(tuple):
    """A sequence of tagged signs."""

    def __new__(cls, signs=()):
        return super().__new__(cls, tuple(signs))

    @property
    def minus(self) -> int:
        return sum(1 for s in self if s.sign < 0)

    @property
    def plus(self) -> int:
        return sum(1 for s in self if s.sign > 0)

    def groups(self) -> list:
        """Signs grouped by consecutive tag, e.g. ``['++', '--', '-+']``."""
        out = []
        last = None
        for s in self:
            ch = "-" if s.sign < 0 else "+"
            if out and s.tag == last:
                out[-1] += ch
            else:
                out.append(ch)
            last = s.tag
        return out

    def __str__(self):
        return "(" + ", ".join(str(s) for s in self) + ")"


def reduce(sig: Signature) -> Signature:
    """Cancel adjacent (+, -) pairs until the shape is -...-+...+.

    Bracket matching with a stack gives the same survivors as deleting the
    leftmost adjacent pair repeatedly.
    """
    kept = []
    open_plus = []  # positions in ``kept`` holding unmatched pluses
    for s in sig:
        if s.sign > 0:
            open_plus.append(len(kept))
            kept.append(s)
        elif open_plus:
            kept[open_plus.pop()] = None
        else:
            kept.append(s)
    return Signature(s for s in kept if s is not None)


@dataclass(frozen=True, order=True)
class TensorWord:
    """``head (x) factors[0] (x) ... (x) factors[-1]``.

    ``head`` is ``None`` or the Lambda-coefficient tuple of a dominant
    classical weight standing for the highest-weight element u_head.
    """

    factors: tuple
    head: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.head is not None:
            object.__setattr__(self, "head", tuple(self.head))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def component(self, j: int):
        """Factor p(j), counted from the right starting at 1."""
        return self.factors[len(self.factors) - j]

    def replace(self, j: int, new) -> "TensorWord":
        pos = len(self.factors) - j
        facs = self.factors[:pos] + (new,) + self.factors[pos + 1:]
        return TensorWord(facs, self.head)

    def sort_key(self):
        return (self.head or (), tuple(_key(b) for b in self.factors))

    # crystal interface -------------------------------------------------
    def e(self, i):
        return tensor_e(self, i)

    def f(self, i):
        return tensor_f(self, i)

    def eps(self, i) -> int:
        return reduce(signature(self, i)).minus

    def phi(self, i) -> int:
        return reduce(signature(self, i)).plus

    @property
    def wt(self) -> tuple:
        parts = [b.wt for b in self.factors]
        if self.head is not None:
            parts.append(self.head)
        if not parts:
            raise ValueError("empty headless word has no rank")
        return tuple(map(sum, zip(*parts)))

    def to_json(self) -> dict:
        head = None
        if self.head is not None:
            head = {"n": len(self.head), "lam": list(self.head), "del": 0}
        return {"head": head, "factors": [_json(b) for b in self.factors]}

    def __str__(self):
        parts = [str(b) for b in self.factors]
        if self.head is not None:
            parts.insert(0, "u" + str(list(self.head)))
        return " (x) ".join(parts) if parts else "()"


def _key(b):
    return b.sort_key() if hasattr(b, "sort_key") else b


def _json(b):
    return b.to_json() if hasattr(b, "to_json") else b


def tensor(*words) -> TensorWord:
    """Concatenate headless words / single elements left to right."""
    facs = []
    for w in words:
        if isinstance(w, TensorWord):
            if w.head is not None:
                raise ValueError("only the leftmost word may carry a head")
            facs.extend(w.factors)
        else:
            facs.append(w)
    return TensorWord(tuple(facs))


def signature(w: TensorWord, i: int) -> Signature:
    """Signature of ``w`` for colour ``i``: head pluses, then each factor's
    eps_i minuses followed by phi_i pluses, left to right."""
    k = len(w.factors)
    signs = []
    if w.head is not None:
        signs.extend(Sign(+1, k + 1) for _ in range(w.head[i % len(w.head)]))
    for pos, b in enumerate(w.factors):
        j = k - pos
        signs.extend(Sign(-1, j) for _ in range(b.eps(i)))
        signs.extend(Sign(+1, j) for _ in range(b.phi(i)))
    return Signature(signs)


def tensor_e(w: TensorWord, i: int) -> Optional[TensorWord]:
    red = reduce(signature(w, i))
    minus = [s for s in red if s.sign < 0]
    if not minus:
        return None
    j = minus[-1].tag
    new = w.component(j).e(i)
    if new is None:  # cannot happen for a genuine crystal
        return None
    return w.replace(j, new)


def tensor_f(w: TensorWord, i: int) -> Optional[TensorWord]:
    red = reduce(signature(w, i))
    plus = [s for s in red if s.sign > 0]
    if not plus:
        return None
    j = plus[0].tag
    if j == len(w.factors) + 1:
        raise TruncationExhausted(i, w)
    new = w.component(j).f(i)
    if new is None:
        return None
    return w.replace(j, new)


def canonical(words: Iterable) -> tuple:
    """Deterministic ordering of a collection of words."""
    return tuple(sorted(set(words), key=_key))


def enumerate_closure(seed: Iterable, ops: Iterable[int], kinds=("e", "f"), cap=None) -> tuple:
    """Least superset of ``seed`` closed under the chosen operators.

    ``kinds`` selects raising (``"e"``), lowering (``"f"``) or both.
    """
    cap = element_cap(cap)
    ops = tuple(ops)
    seen = set(seed)
    if len(seen) > cap:
        raise BudgetExceeded(f"seed already has {len(seen)} elements (cap {cap})")
    queue = deque(canonical(seen))
    while queue:
        b = queue.popleft()
        for i in ops:
            for kind in kinds:
                c = b.e(i) if kind == "e" else b.f(i)
                if c is not None and c not in seen:
                    seen.add(c)
                    if len(seen) > cap:
                        raise BudgetExceeded(f"closure exceeded {cap} elements")
                    queue.append(c)
    return canonical(seen)


def f_string_closure(seed: Iterable, i: int, cap=None) -> tuple:
    """``union_{m>=0} f_i^m S minus {0}``; may raise TruncationExhausted."""
    return enumerate_closure(seed, (i,), kinds=("f",), cap=cap)


def classical_highest(words: Iterable, n: int) -> list:
    """Words killed by every e_i with i != 0, paired with their classical weight."""
    out = []
    for w in canonical(words):
        if all(w.e(i) is None for i in range(1, n)):
            out.append((w, w.wt))
    return out
