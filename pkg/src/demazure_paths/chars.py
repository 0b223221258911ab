"""Characters of Demazure sets, Schur polynomials and Kostka-Foulkes polynomials.

Two independent routes to K_{mu,(l^L)}(q):

* ``kostka_1dsum`` sums q^{sum_j j H(b_{j+1} (x) b_j)} over classically
  highest words of (B^l)^{(x)L};
* ``kostka_charge`` sums q^{charge(T)} over semistandard tableaux.

For the 1D sum the energy is used with the sign produced by
``energy_table`` and shifted so that H((l,0,..,0) (x) (l,0,..,0)) = l.  This
is the normalisation forced by K_{(lL),(l^L)}(q) = q^{l L(L-1)/2}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .crystal import classical_highest
from .demazure import DemazureSet, ReflectionTable, Towers, demazure_recursive
from .energy_paths import EnergyTable, energy_table, path_weight, wt_word_classical
from .errors import DomainError
from .lattice import root_coordinates, weight
from .laurent import LaurentTable, QPoly
from .symtensor import SymTensorCrystal


# ----------------------------------------------------------------------
# characters of Demazure sets


def ch_full(S: DemazureSet, E: EnergyTable) -> LaurentTable:
    """sum_p e^{wt p}; keys are (Lambda coefficients..., delta coefficient)."""
    keys = []
    for p in S.elems:
        w = path_weight(p, E, S.lam)
        keys.append(w.lam + (w.delta,))
    return LaurentTable.count(keys)


def collapse_delta(table: LaurentTable) -> LaurentTable:
    """Specialise e^{-delta} = 1 by dropping the last key coordinate."""
    return table.map_keys(lambda k: k[:-1])


def clch(S: DemazureSet) -> LaurentTable:
    """Classical character: sum_p e^{cl wt p}."""
    return LaurentTable.count(wt_word_classical(p, S.lam) for p in S.elems)


def ch_words(words) -> LaurentTable:
    return LaurentTable.count(w.wt for w in words)


def ch_B(n: int, l: int) -> LaurentTable:
    return LaurentTable(SymTensorCrystal(n, l).ch())


def clch_factorized(lam, rt: ReflectionTable, k: int, towers: Optional[Towers] = None) -> LaurentTable:
    """e^{lambda_j} ch(B_a^(j,...)) (ch B)^{j-kappa}, or e^{lambda_j} ch B_a^(j,...,1) if j < kappa."""
    T = towers or Towers(lam, rt)
    gs = T.gs
    if k == 0:
        return LaurentTable.monomial(gs.lam)
    j, a = rt.split(k)
    if j < rt.kappa:
        part = ch_words(T.tower(j, j, a))
        rest = 0
    else:
        part = ch_words(T.tower(j, rt.kappa, a))
        rest = j - rt.kappa
    out = part.shift(gs.head(j))
    if rest:
        out = out * ch_B(gs.n, gs.l) ** rest
    return out


def sanderson_rhs(l: int, k: int) -> LaurentTable:
    """e^{lambda_k} (ch B^l)^k for affine sl_2 and lambda = l Lambda_0."""
    lam_k = (l, 0) if k % 2 == 0 else (0, l)
    out = LaurentTable.monomial(lam_k)
    return out * ch_B(2, l) ** k if k else out


# ----------------------------------------------------------------------
# partitions and tableaux


def partitions(total: int, max_parts: Optional[int] = None, max_part: Optional[int] = None):
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        sub = None if max_parts is None else max_parts - 1
        for rest in partitions(total - first, sub, first):
            yield (first,) + rest


def _normalize(mu):
    return tuple(p for p in mu if p > 0)


def ssyt(shape, n: int):
    """Semistandard tableaux of ``shape`` with entries 1..n, as tuples of rows."""
    shape = _normalize(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def fill(idx):
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            grid[r][c] = v
            yield from fill(idx + 1)
        grid[r][c] = 0

    yield from fill(0)


def content(tableau, n: int) -> tuple:
    counts = [0] * n
    for row in tableau:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def schur(mu, n: int) -> LaurentTable:
    """s_mu(x_1, ..., x_n); keys are exponent vectors of length n."""
    return LaurentTable.count(content(t, n) for t in ssyt(mu, n))


def reading_word(tableau) -> tuple:
    """Rows read left to right, from the bottom row up."""
    return tuple(v for row in reversed(tableau) for v in row)


def charge(word) -> int:
    """Lascoux-Schuetzenberger charge of a word with partition content.

    Standard subwords are extracted by scanning leftwards cyclically for
    1, 2, 3, ...; each wrap-around raises the index by one, and the charge
    is the sum of the indices.
    """
    letters = list(enumerate(word))
    total = 0
    while letters:
        present = sorted({v for _, v in letters})
        if present != list(range(1, len(present) + 1)):
            raise ValueError(f"word {tuple(word)} does not have partition content")
        positions = [p for p, _ in letters]
        value_at = dict(letters)
        # start just past the right end so the first leftward scan covers everything
        cursor = len(word)
        index = 0
        chosen = []
        for r in range(1, len(present) + 1):
            left = [p for p in positions if p < cursor and value_at[p] == r and p not in chosen]
            if left:
                cursor = max(left)
            else:
                cursor = max(p for p in positions if value_at[p] == r and p not in chosen)
                if r > 1:
                    index += 1
            total += index
            chosen.append(cursor)
        letters = [(p, v) for p, v in letters if p not in chosen]
    return total


def kostka_charge(mu, nu) -> QPoly:
    """K_{mu,nu}(q) = sum over SSYT of shape mu and content nu of q^charge."""
    mu, nu = _normalize(mu), _normalize(nu)
    if sum(mu) != sum(nu):
        return QPoly()
    n = len(nu)
    exps = [charge(reading_word(t)) for t in ssyt(mu, n) if content(t, n) == nu]
    return QPoly.from_exponents(exps)


# ----------------------------------------------------------------------
# 1D sums


def kostka_energy(E: EnergyTable) -> Callable:
    """Energy normalised for the 1D sum: H - H(u (x) u) + l, u = (l, 0, ..., 0)."""
    base = E(*E.anchor)
    return lambda b, bp: E(b, bp) - base + E.l


def one_d_energy(word, H) -> int:
    """sum_{j=1}^{L-1} j H(b_{j+1} (x) b_j) with b_1 the rightmost factor."""
    L = len(word.factors)
    return sum(j * H(word.component(j + 1), word.component(j)) for j in range(1, L))


def _highest_target(mu, n):
    """Lambda_1..Lambda_{n-1} coefficients mu_i - mu_{i+1}."""
    m = list(_normalize(mu)) + [0] * n
    return tuple(m[i - 1] - m[i] for i in range(1, n))


def kostka_1dsum(mu, n: int, l: int, L: int, E: Optional[EnergyTable] = None) -> QPoly:
    """K_{mu,(l^L)}(q) as a 1D sum over classically highest words."""
    mu = _normalize(mu)
    if len(mu) > n or sum(mu) != l * L:
        return QPoly()
    if E is None:
        E = energy_table(n, l)
    H = kostka_energy(E)
    target = _highest_target(mu, n)
    B = SymTensorCrystal(n, l)
    exps = [one_d_energy(w, H) for w, wt in classical_highest(B.words(L), n)
            if wt[1:] == target]
    return QPoly.from_exponents(exps)


def highest_word_counts(n: int, l: int, L: int) -> dict:
    """{partition: number of classically highest words of that weight}."""
    B = SymTensorCrystal(n, l)
    out = {}
    for mu in partitions(l * L, n):
        target = _highest_target(mu, n)
        out[mu] = sum(1 for _, wt in classical_highest(B.words(L), n) if wt[1:] == target)
    return out


# ----------------------------------------------------------------------
# Kirillov's identity


def energy_shift(n: int, l: int, L: int):
    """E_0 = (lL/2)(L/n - 1); returned as an int when integral."""
    num = l * L * (L - n)
    return num // (2 * n) if num % (2 * n) == 0 else num / (2 * n)


def _x_to_z(a, n: int, level_total: int, q_exp: int) -> tuple:
    """x^a on x_1...x_n = 1 as (c_1, ..., c_{n-1}, q exponent), z_i = x_{i+1}/x_i."""
    t = level_total // n
    coeffs, acc = [], 0
    for v in a[:-1]:
        acc += v - t
        coeffs.append(-acc)
    return tuple(coeffs) + (q_exp,)


@dataclass
class KirillovReport:
    n: int
    l: int
    L: int
    E0: int
    lhs: LaurentTable
    rhs: LaurentTable
    kostka: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def witness(self):
        """First differing monomial (z exponents..., q exponent), lhs, rhs."""
        return self.lhs.first_difference(self.rhs)

    def to_json(self) -> dict:
        w = self.witness
        return {
            "identity": "kirillov",
            "params": {"n": self.n, "l": self.l, "L": self.L, "E0": self.E0},
            "status": "pass" if self.passed else "fail",
            "witness": None if w is None else {"monomial": list(w[0]), "lhs": w[1], "rhs": w[2]},
            "kostka": {",".join(map(str, mu)): p.to_json() for mu, p in self.kostka.items()},
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }


def demazure_side(n: int, l: int, L: int, E: Optional[EnergyTable] = None) -> LaurentTable:
    """e^{-l Lambda_0} ch B_{w^(Ld)}(l Lambda_0) in (z_1..z_{n-1}, q), q = e^{-delta}."""
    lam = (l,) + (0,) * (n - 1)
    rt = ReflectionTable.sl_n(n)
    if E is None:
        E = energy_table(n, l)
    S = demazure_recursive(lam, rt, L * rt.d)
    base = weight(lam)
    keys = []
    for p in S.elems:
        mu = path_weight(p, E, lam) - base
        c = root_coordinates(mu)
        keys.append(c[:-1] + (-c[-1],))
    return LaurentTable.count(keys)


def kirillov_check(n: int, l: int, L: int, kostka: str = "charge",
                   override: Optional[dict] = None) -> KirillovReport:
    """Compare both sides of Kirillov's identity on x_1 ... x_n = 1.

    ``kostka`` picks the route for K ("charge" or "1dsum"); ``override``
    replaces individual K polynomials, which is how a perturbed identity
    is exercised.
    """
    if L % n:
        raise DomainError(f"n={n} must divide L={L}")
    E = energy_table(n, l)
    E0 = energy_shift(n, l, L)
    lhs = demazure_side(n, l, L, E)
    total = l * L
    rhs = LaurentTable()
    ks = {}
    for mu in partitions(total, n):
        if kostka == "charge":
            K = kostka_charge(mu, (l,) * L)
        elif kostka == "1dsum":
            K = kostka_1dsum(mu, n, l, L, E)
        else:
            raise ValueError(f"unknown Kostka route {kostka!r}")
        if override and mu in override:
            K = override[mu]
        ks[mu] = K
        s = schur(mu, n)
        for qe, kc in K.items():
            rhs = rhs + LaurentTable(
                {_x_to_z(a, n, total, qe - E0): kc * c for a, c in s.items()})
    return KirillovReport(n, l, L, E0, lhs, rhs, ks)
