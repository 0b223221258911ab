import itertools
import json

import pytest

from demazure_paths.crystal import TensorWord
from demazure_paths.energy_paths import (GroundState, energy_table, ground_path, path_weight,
                                         wt_word_classical)
from demazure_paths.lattice import AffineWeight, simple_root, weight
from demazure_paths.symtensor import SymTensorCrystal, box


def test_sl2_level1_table():
    E = energy_table(2, 1)
    a, b = box(1, 0), box(0, 1)
    assert (E(a, a), E(b, a), E(b, b), E(a, b)) == (0, 0, 0, -1)


@pytest.mark.parametrize("n,l", [(n, l) for n in (2, 3) for l in (1, 2, 3)])
def test_table_is_total_and_satisfies_recursion(n, l):
    E = energy_table(n, l)
    B = SymTensorCrystal(n, l)
    assert len(E) == len(B) ** 2
    assert E(B.top(), B.top()) == 0
    for b, bp in itertools.product(B, B):
        w = TensorWord((b, bp))
        for i in range(n):
            up = w.e(i)
            if up is not None:
                if i:
                    step = 0
                else:
                    step = 1 if b.phi(0) >= bp.eps(0) else -1
                assert E(*up.factors) == E(b, bp) + step
            down = w.f(i)
            if down is not None:
                # f-form: H(f(b (x) b')) = H - 1 if f acts on the left factor, + 1 on the right
                if i:
                    step = 0
                else:
                    step = -1 if down.factors[0] != b else 1
                assert E(*down.factors) == E(b, bp) + step


def test_energy_json():
    js = energy_table(2, 1).to_json()
    assert js["anchor"] == [[1, 0], [1, 0]]
    assert js["entries"] == [[[[0, 1], [0, 1]], 0], [[[0, 1], [1, 0]], 0],
                             [[[1, 0], [0, 1]], -1], [[[1, 0], [1, 0]], 0]]
    json.dumps(js)


def test_ground_path_example():
    p = ground_path((2, 0), 5)
    assert p.word.head == (0, 2)
    assert p.word.factors == (box(0, 2), box(2, 0), box(0, 2), box(2, 0), box(0, 2))
    assert ground_path((2, 0), 0).word == TensorWord((), (2, 0))


@pytest.mark.parametrize("lam", [(1, 0), (1, 1), (2, 1, 0)])
def test_ground_head_is_sigma_power(lam):
    gs = GroundState(lam)
    n = len(lam)
    for k in range(2 * n + 1):
        s = k % n
        assert ground_path(lam, k).word.head == lam[s:] + lam[:s]
        assert gs.head(k) == lam[s:] + lam[:s]


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1), (1, 0, 0), (1, 1, 1)])
def test_ground_path_has_weight_lambda(lam):
    E = energy_table(len(lam), sum(lam))
    for k in range(0, 6):
        assert path_weight(ground_path(lam, k), E) == weight(lam)
        assert wt_word_classical(ground_path(lam, k)) == lam


def _paths(lam, depth, length):
    """All depth-``depth`` paths whose bottom ``length`` factors are free."""
    gs = GroundState(lam)
    top = tuple(gs.b(m) for m in range(depth, length, -1))
    for bottom in itertools.product(gs.B.elements, repeat=length):
        yield TensorWord(top + bottom, gs.head(depth))


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1)])
def test_path_weight_truncation_stable_and_classical(lam):
    E = energy_table(len(lam), sum(lam))
    gs = GroundState(lam)
    for depth in (1, 2, 3):
        for p in _paths(lam, depth, depth):
            w = path_weight(p, E, lam)
            assert w.cl() == wt_word_classical(p, lam)
            assert path_weight(gs.deepen(p, depth + 1), E, lam) == w
            assert path_weight(gs.deepen(p, depth + 3), E, lam) == w


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1), (1, 0, 0), (0, 1, 1)])
def test_path_weight_anchor_invariant(lam):
    E = energy_table(len(lam), sum(lam))
    E7 = energy_table(len(lam), sum(lam), anchor_value=7)
    assert E7.values == E.shifted(7).values
    for p in _paths(lam, 3, 3):
        assert path_weight(p, E, lam) == path_weight(p, E7, lam)


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1), (1, 0, 0), (1, 1, 0)])
def test_f_shifts_affine_weight_by_simple_root(lam):
    n = len(lam)
    E = energy_table(n, sum(lam))
    gs = GroundState(lam)
    for p in _paths(lam, 4, 3):
        w = path_weight(p, E, lam)
        for i in range(n):
            try:
                q = p.f(i)
            except Exception:
                q = gs.deepen(p, 6).f(i)
            if q is None:
                continue
            assert path_weight(q, E, lam) == w - simple_root(i, n)


def test_single_f0_on_lambda0():
    # lam = Lambda_0, n = 2, l = 1: f_0 of the ground path changes p(1) = (0,1) into (1,0)
    E = energy_table(2, 1)
    p = ground_path((1, 0), 2).word
    q = p.f(0)
    assert q.factors == (box(1, 0), box(1, 0))
    w = path_weight(q, E, (1, 0))
    assert w == weight((1, 0)) - simple_root(0, 2)
    assert w == AffineWeight(2, (-1, 2), -1)
    # pairings reproduce phi_i - eps_i read off the word
    for i in range(2):
        assert w.lam[i] == q.phi(i) - q.eps(i)


def test_f_on_ground_state():
    # <2 Lambda_0, h_1> = 0, so f_1 kills the ground path while f_0 acts on b_1
    lam = (2, 0)
    p = ground_path(lam, 3).word
    assert p.f(1) is None
    q = p.f(0)
    assert q.factors[:2] == p.factors[:2] and q.factors[2] == box(1, 1)
    diff = tuple(a - b for a, b in zip(wt_word_classical(p, lam), wt_word_classical(q, lam)))
    assert diff == simple_root(0, 2).lam
