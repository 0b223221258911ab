"""Demazure crystals on truncated paths and the tensor-product criterion.

``demazure_recursive`` builds B_{w^(k)}(lam) by iterated f-string closures
starting from the ground-state path.  ``build_P_k`` materialises the
tensor-form description: ground factors above position j, a tower
``B_a^(j, ..., j-kappa+1)`` and a free tail ``B^{(x)(j-kappa)}``.  The two
agree whenever the four checkers below pass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .crystal import TensorWord, canonical, f_string_closure, reduce, signature, tensor
from .energy_paths import GroundState
from .errors import LemmaViolation, TruncationExhausted
from .lattice import fundamental, pair, reflect, weight


@dataclass(frozen=True)
class ReflectionTable:
    """Node indices i_a^(j), a = 1..d, periodic in j.

    ``rows[(j - 1) % len(rows)][a - 1]`` is i_a^(j).  Step k of the Weyl
    word uses j, a with k = (j - 1) d + a.
    """

    n: int
    d: int
    rows: tuple
    kappa: int = 1

    def __post_init__(self):
        rows = tuple(tuple(int(i) % self.n for i in r) for r in self.rows)
        if not rows or any(len(r) != self.d for r in rows):
            raise ValueError(f"every row needs d={self.d} entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def sl_n(cls, n: int, kappa: int = 1) -> "ReflectionTable":
        """d = n - 1 and i_a^(j) = a - j mod n."""
        d = n - 1
        rows = tuple(tuple((a - j) % n for a in range(1, d + 1)) for j in range(1, n + 1))
        return cls(n, d, rows, kappa)

    def with_kappa(self, kappa: int) -> "ReflectionTable":
        return ReflectionTable(self.n, self.d, self.rows, kappa)

    @property
    def period(self) -> int:
        return len(self.rows)

    def index(self, j: int, a: int) -> int:
        return self.rows[(j - 1) % self.period][a - 1]

    def split(self, k: int) -> tuple:
        """(j, a) with k = (j - 1) d + a, 1 <= a <= d."""
        if k < 1:
            raise ValueError("k must be positive")
        return (k - 1) // self.d + 1, (k - 1) % self.d + 1

    def letter(self, k: int) -> int:
        return self.index(*self.split(k))

    def weyl_word(self, k: int) -> tuple:
        """Letters of w^(k), leftmost first (the last letter acts first)."""
        return tuple(self.letter(m) for m in range(k, 0, -1))


@dataclass
class DemazureSet:
    lam: tuple
    word: tuple
    depth: int
    elems: tuple = field(repr=False)

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def deepen(self, depth: int) -> "DemazureSet":
        if depth == self.depth:
            return self
        gs = GroundState(self.lam)
        return DemazureSet(self.lam, self.word, depth,
                           canonical(gs.deepen(w, depth) for w in self.elems))

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "word": list(self.word),
            "depth": self.depth,
            "size": len(self.elems),
            "elements": [w.to_json() for w in self.elems],
        }


def f_closure(S, i: int, cap=None) -> tuple:
    """union_{m>=0} f_i^m S minus {0}; TruncationExhausted propagates."""
    return f_string_closure(S, i, cap=cap)


def _ceil_div(a, b):
    return -(-a // b)


def demazure_recursive(lam, rt: ReflectionTable, k: int, depth: Optional[int] = None,
                       cap=None) -> DemazureSet:
    """B_{w^(k)}(lam) as truncated paths, deepening on demand."""
    gs = GroundState(lam)
    D = depth if depth is not None else _ceil_div(k, rt.d) + rt.kappa + 1
    elems = (gs.word(D),)
    for step in range(1, k + 1):
        i = rt.letter(step)
        while True:
            try:
                elems = f_closure(elems, i, cap=cap)
                break
            except TruncationExhausted:
                D += 1
                elems = canonical(gs.deepen(w, D) for w in elems)
    return DemazureSet(gs.lam, rt.weyl_word(k), D, elems)


# ----------------------------------------------------------------------
# towers B_a^(j+m-1, ..., j)


class Towers:
    """Memoised towers for one (lam, table) pair."""

    def __init__(self, lam, rt: ReflectionTable, cap=None):
        self.gs = GroundState(lam)
        self.rt = rt
        self.cap = cap
        self._memo = {}

    @property
    def B(self):
        return self.gs.B

    def single(self, j: int, a: int) -> tuple:
        """B_a^(j) as one-factor words."""
        return self.tower(j, 1, a)

    def tower(self, top: int, length: int, a: int) -> tuple:
        """B_a^(top, top-1, ..., top-length+1) as headless words."""
        key = (top, length, a)
        if key in self._memo:
            return self._memo[key]
        if length < 1 or top - length + 1 < 1:
            raise ValueError(f"bad tower window top={top}, length={length}")
        if a == 0:
            base = TensorWord((self.gs.b(top),))
            if length == 1:
                out = (base,)
            else:
                below = self.tower(top - 1, length - 1, self.rt.d)
                out = canonical(tensor(base, w) for w in below)
        else:
            prev = self.tower(top, length, a - 1)
            out = f_closure(prev, self.rt.index(top, a), cap=self.cap)
        self._memo[key] = out
        return out

    def with_free_tail(self, top: int, length: int, a: int) -> tuple:
        """B_a^(top, ..., top-length+2) (x) B; for length 1 this is B."""
        if length == 1:
            return canonical(TensorWord((b,)) for b in self.B)
        head = self.tower(top, length - 1, a)
        return canonical(tensor(w, b) for w in head for b in self.B)


def build_Ba(lam, rt: ReflectionTable, j: int, a: int) -> tuple:
    """B_a^(j) inside B (one-factor words)."""
    return Towers(lam, rt).single(j, a)


def build_P_k(lam, rt: ReflectionTable, k: int, depth: Optional[int] = None,
              towers: Optional[Towers] = None) -> DemazureSet:
    """The tensor-form set P^(k)(lam, B) at truncation depth ``depth``."""
    T = towers or Towers(lam, rt)
    gs = T.gs
    if k == 0:
        D = depth or 0
        return DemazureSet(gs.lam, (), D, (gs.word(D),))
    j, a = rt.split(k)
    D = max(depth or 0, j)
    above = tuple(gs.b(m) for m in range(D, j, -1))
    if j < rt.kappa:
        middle = T.tower(j, j, a)
        tails = [()]
    else:
        middle = T.tower(j, rt.kappa, a)
        tails = itertools.product(T.B.elements, repeat=j - rt.kappa)
    tails = list(tails)
    elems = canonical(TensorWord(above + w.factors + tail, gs.head(D))
                      for w in middle for tail in tails)
    return DemazureSet(gs.lam, rt.weyl_word(k), D, elems)


# ----------------------------------------------------------------------
# assumption checkers


def _report(assumption, params, status, witness):
    return {"assumption": assumption, "params": params, "status": status, "witness": witness}


def _params(lam, rt, **extra):
    p = {"lambda": list(lam), "n": rt.n, "d": rt.d}
    p.update(extra)
    return p


def check_II(lam, rt: ReflectionTable, kappa: int, early_exit: bool = True,
             towers: Optional[Towers] = None) -> dict:
    """B_d^(j+kappa-1,...,j) = B_d^(j+kappa-1,...,j+1) (x) B for j over one period.

    With ``early_exit`` the scan over a stops at the first level where the
    equality already holds, since it then persists up to a = d.
    """
    T = towers or Towers(lam, rt)
    per_j = []
    status = "pass"
    witness = None
    for j in range(1, rt.period + 1):
        top = j + kappa - 1
        levels = range(0, rt.d + 1) if early_exit else [rt.d]
        ok, at = False, None
        for a in levels:
            lhs = T.tower(top, kappa, a)
            rhs = T.with_free_tail(top, kappa, a)
            if lhs == rhs:
                ok, at = True, a
                break
        per_j.append({"j": j, "pass": ok, "level": at})
        if not ok and witness is None:
            status = "fail"
            lhs, rhs = set(T.tower(top, kappa, rt.d)), set(T.with_free_tail(top, kappa, rt.d))
            missing = canonical(rhs - lhs)
            extra = canonical(lhs - rhs)
            witness = {
                "j": j,
                "missing_from_tower": missing[0].to_json() if missing else None,
                "not_in_product": extra[0].to_json() if extra else None,
            }
    return _report("II", _params(lam, rt, kappa=kappa), status,
                   {"per_j": per_j, "counterexample": witness})


def mixing_index(lam, rt: ReflectionTable, kappa_max: int = 4) -> Optional[int]:
    """Least kappa <= kappa_max satisfying assumption II, else None."""
    T = Towers(lam, rt)
    for kappa in range(1, kappa_max + 1):
        if check_II(lam, rt, kappa, towers=T)["status"] == "pass":
            return kappa
    return None


def check_III(lam, rt: ReflectionTable, towers: Optional[Towers] = None) -> dict:
    """<lambda_j, h_i> <= eps_i(b) for b in B_{a-1}^(j), i = i_a^(j)."""
    T = towers or Towers(lam, rt)
    gs = T.gs
    checked = []
    for j in range(1, rt.period + 1):
        lj = gs.head(j)
        for a in range(1, rt.d + 1):
            i = rt.index(j, a)
            bound = lj[i]
            for w in T.single(j, a - 1):
                b = w.factors[0]
                if bound > b.eps(i):
                    return _report("III", _params(lam, rt), "fail",
                                   {"j": j, "a": a, "i": i, "pairing": bound,
                                    "b": b.to_json(), "eps": b.eps(i)})
            checked.append({"j": j, "a": a, "i": i, "pairing": bound})
    return _report("III", _params(lam, rt), "pass", {"checked": checked})


def check_IV(lam, rt: ReflectionTable, k_max: int, probes=None) -> dict:
    """Certify w^(k) > w^(k-1) in Bruhat order via a positive pairing.

    Step k is certified when some dominant probe mu has
    <w^(k-1) mu, h_{i_k}> > 0.  The criterion is only sufficient, so an
    uncertified step is reported as inconclusive, never as a failure.
    """
    n = rt.n
    if probes is None:
        probes = [fundamental(i, n) for i in range(n)]
        if lam is not None and weight(lam) not in probes:
            probes.append(weight(lam))
    current = list(probes)
    steps = []
    status = "certified"
    for k in range(1, k_max + 1):
        i = rt.letter(k)
        values = [pair(w, i) for w in current]
        best = max(range(len(values)), key=lambda m: values[m])
        cert = values[best] > 0
        steps.append({"k": k, "i": i, "probe": list(probes[best].lam),
                      "pairing": values[best], "certified": cert,
                      "pairing_Lambda0": values[0]})
        if not cert:
            status = "inconclusive"
        current = [reflect(i, w) for w in current]
    return _report("IV", _params(lam or (), rt, k_max=k_max), status, {"steps": steps})


# ----------------------------------------------------------------------
# the (p, q) lemma and the theorem


@dataclass(frozen=True)
class LemmaWitness:
    p: int
    q: int
    case: str
    verified: bool


def _power(op, w, times):
    for _ in range(times):
        if w is None:
            return None
        w = op(w)
    return w


def lemma_pq(b1: TensorWord, b2: TensorWord, i: int, m: int) -> LemmaWitness:
    """Find p, q with f_i^p(b1 (x) e_i^q b2) = f_i^m b1 (x) b2 and check it."""
    alpha = reduce(signature(b1, i)).plus
    beta = reduce(signature(b2, i)).minus
    target_left = _power(lambda w: w.f(i), b1, m)
    if target_left is None:
        raise ValueError(f"f_{i}^{m} kills {b1}")
    if alpha - m >= beta:
        p, q, case = m, 0, "a"
    else:
        p, q, case = beta - alpha + 2 * m, beta - alpha + m, "b"
    raised = _power(lambda w: w.e(i), b2, q)
    lhs = None if raised is None else _power(lambda w: w.f(i), tensor(b1, raised), p)
    rhs = tensor(target_left, b2)
    if lhs != rhs:
        raise LemmaViolation(f"p={p}, q={q} fails for {b1} | {b2}, i={i}, m={m}")
    return LemmaWitness(p, q, case, True)


@dataclass
class TheoremResult:
    k: int
    equal: bool
    depth: int
    recursive_size: int
    tensor_size: int
    branch: str
    only_recursive: tuple = ()
    only_tensor: tuple = ()

    def to_json(self) -> dict:
        return {
            "k": self.k, "equal": self.equal, "depth": self.depth,
            "recursive_size": self.recursive_size, "tensor_size": self.tensor_size,
            "branch": self.branch,
            "only_recursive": [w.to_json() for w in self.only_recursive[:3]],
            "only_tensor": [w.to_json() for w in self.only_tensor[:3]],
        }


def compare_theorem(lam, rt: ReflectionTable, k: int, towers: Optional[Towers] = None,
                    cap=None) -> TheoremResult:
    left = demazure_recursive(lam, rt, k, cap=cap)
    right = build_P_k(lam, rt, k, depth=left.depth, towers=towers)
    D = max(left.depth, right.depth)
    left, right = left.deepen(D), right.deepen(D)
    ls, rs = set(left.elems), set(right.elems)
    if k == 0:
        branch = "ground"
    else:
        branch = "j<kappa" if rt.split(k)[0] < rt.kappa else "j>=kappa"
    return TheoremResult(k, ls == rs, D, len(ls), len(rs), branch,
                         canonical(ls - rs), canonical(rs - ls))


def verify_theorem(lam, rt: ReflectionTable, k: int) -> bool:
    """Set equality of the recursive Demazure crystal and P^(k)."""
    return compare_theorem(lam, rt, k).equal


def partial_sum_set(lam) -> tuple:
    """{x in B^l : x_0 + ... + x_{i-1} <= m_0 + ... + m_{i-1}, 1 <= i <= n-1}."""
    gs = GroundState(lam)
    out = []
    for b in gs.B:
        if all(sum(b.x[:i]) <= sum(gs.lam[:i]) for i in range(1, gs.n)):
            out.append(TensorWord((b,)))
    return canonical(out)
