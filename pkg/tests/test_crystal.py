import itertools
import random

import pytest
from hypothesis import given, strategies as st

from demazure_paths.crystal import (Sign, Signature, TensorWord, classical_highest, enumerate_closure,
                                    f_string_closure, reduce, signature, tensor, tensor_e, tensor_f)
from demazure_paths.errors import BudgetExceeded, TruncationExhausted
from demazure_paths.symtensor import SymTensorCrystal, box, parse_letters


def literal_reduce(sig):
    """Delete the leftmost adjacent (+, -) pair until none is left."""
    s = list(sig)
    while True:
        for a in range(len(s) - 1):
            if s[a].sign > 0 and s[a + 1].sign < 0:
                del s[a:a + 2]
                break
        else:
            return Signature(s)


def example_word():
    facs = tuple(parse_letters(s) for s in ["11", "01", "01", "01", "00"])
    return TensorWord(facs, (0, 2))


def test_worked_example_signature():
    sig = signature(example_word(), 1)
    assert sig.groups() == ["++", "--", "-+", "-+", "-+", "++"]
    red = reduce(sig)
    assert [str(s) for s in red] == ["-@4", "+@2", "+@1", "+@1"]


def test_worked_example_actions():
    w = example_word()
    e = tensor_e(w, 1)
    f = tensor_f(w, 1)
    assert e.factors == tuple(parse_letters(s) for s in ["11", "00", "01", "01", "00"])
    assert f.factors == tuple(parse_letters(s) for s in ["11", "01", "01", "11", "00"])
    assert e.head == f.head == (0, 2)


def test_empty_and_single():
    assert signature(TensorWord(()), 0) == Signature()
    b = box(2, 1, 0)
    for i in range(3):
        sig = signature(TensorWord((b,)), i)
        assert sig.minus == b.eps(i) and sig.plus == b.phi(i)
        assert [s.sign for s in sig] == [-1] * b.eps(i) + [1] * b.phi(i)


def test_reduce_trivial_cases():
    allplus = Signature([Sign(1, 2), Sign(1, 1)])
    assert reduce(allplus) == allplus
    assert reduce(Signature([Sign(1, 2), Sign(-1, 1)])) == Signature()


@given(st.lists(st.sampled_from([-1, 1]), max_size=30))
def test_reduce_matches_leftmost_deletion(signs):
    sig = Signature(Sign(s, len(signs) - p) for p, s in enumerate(signs))
    red = reduce(sig)
    assert red == literal_reduce(sig)
    kinds = [s.sign for s in red]
    assert kinds == sorted(kinds)


def test_head_blocks_f():
    # u_{Lambda_1} (x) (1,0): the head's plus is the leftmost survivor for i = 1
    w = TensorWord((box(1, 0),), (0, 1))
    with pytest.raises(TruncationExhausted):
        tensor_f(w, 1)
    with pytest.raises(TruncationExhausted):
        tensor_f(TensorWord((), (1, 0)), 0)


def all_words(n, l, length):
    B = SymTensorCrystal(n, l)
    return list(B.words(length))


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_partial_inverse_and_weights(n, l):
    for length in (1, 2, 3):
        for w in all_words(n, l, length):
            for i in range(n):
                f = w.f(i)
                if f is not None:
                    assert f.e(i) == w
                    diff = [a - b for a, b in zip(w.wt, f.wt)]
                    alpha = [0] * n
                    alpha[i] += 2
                    alpha[(i - 1) % n] -= 1
                    alpha[(i + 1) % n] -= 1
                    assert diff == alpha
                e = w.e(i)
                if e is not None:
                    assert e.f(i) == w


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_eps_phi_are_string_lengths(n, l):
    for length in (1, 2, 3):
        for w in all_words(n, l, length):
            for i in range(n):
                k, v = 0, w.e(i)
                while v is not None:
                    k, v = k + 1, v.e(i)
                assert k == w.eps(i)
                k, v = 0, w.f(i)
                while v is not None:
                    k, v = k + 1, v.f(i)
                assert k == w.phi(i)
                assert w.phi(i) - w.eps(i) == w.wt[i]


def two_factor_f(b, bp, i):
    """f acts on the left factor iff phi_i(b) > eps_i(bp)."""
    if b.phi(i) > bp.eps(i):
        c = b.f(i)
        return None if c is None else (c, bp)
    c = bp.f(i)
    return None if c is None else (b, c)


def two_factor_e(b, bp, i):
    if b.phi(i) >= bp.eps(i):
        c = b.e(i)
        return None if c is None else (c, bp)
    c = bp.e(i)
    return None if c is None else (b, c)


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_signature_rule_matches_two_factor_rule(n, l):
    B = SymTensorCrystal(n, l)
    for b, bp in itertools.product(B, B):
        w = TensorWord((b, bp))
        for i in range(n):
            f = w.f(i)
            assert (None if f is None else f.factors) == two_factor_f(b, bp, i)
            e = w.e(i)
            assert (None if e is None else e.factors) == two_factor_e(b, bp, i)


@pytest.mark.parametrize("n,l", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_associativity(n, l):
    B = SymTensorCrystal(n, l)
    for a, b, c in itertools.product(B, B, B):
        flat = TensorWord((a, b, c))
        left = TensorWord((TensorWord((a, b)), c))
        right = TensorWord((a, TensorWord((b, c))))
        for i in range(n):
            outs = []
            for w in (flat, left, right):
                g = w.f(i)
                outs.append(None if g is None else _flatten(g))
            assert outs[0] == outs[1] == outs[2]
            outs = []
            for w in (flat, left, right):
                g = w.e(i)
                outs.append(None if g is None else _flatten(g))
            assert outs[0] == outs[1] == outs[2]


def test_associativity_length_four_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.choice([2, 3])
        l = rng.choice([1, 2])
        B = SymTensorCrystal(n, l).elements
        facs = [rng.choice(B) for _ in range(4)]
        flat = TensorWord(tuple(facs))
        cut = rng.randint(1, 3)
        nested = TensorWord((TensorWord(tuple(facs[:cut])), TensorWord(tuple(facs[cut:]))))
        i = rng.randrange(n)
        for op in ("e", "f"):
            a, b = getattr(flat, op)(i), getattr(nested, op)(i)
            assert (None if a is None else _flatten(a)) == (None if b is None else _flatten(b))


def _flatten(w):
    out = []
    for b in w.factors:
        if isinstance(b, TensorWord):
            out.extend(_flatten(b))
        else:
            out.append(b)
    return tuple(out)


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2), (4, 1), (3, 3)])
def test_classical_component_of_top(n, l):
    B = SymTensorCrystal(n, l)
    comp = enumerate_closure([B.top()], range(1, n), kinds=("f",))
    assert len(comp) == B.expected_size()


def test_closure_under_no_ops_is_seed():
    seed = [box(1, 1), box(2, 0)]
    assert set(enumerate_closure(seed, ())) == set(seed)


def test_f0_orbit_of_ground_word():
    # u_{Lambda_1} (x) (0,1) for lambda = Lambda_0, n = 2, l = 1
    w = TensorWord((box(0, 1),), (0, 1))
    assert len(f_string_closure([w], 0)) == 2


def test_closure_budget():
    B = SymTensorCrystal(3, 2)
    with pytest.raises(BudgetExceeded):
        enumerate_closure([TensorWord((B.top(), B.top()))], range(3), cap=5)


def test_closure_order_is_deterministic():
    B = SymTensorCrystal(3, 1)
    seed = list(B.words(2))
    random.Random(1).shuffle(seed)
    a = enumerate_closure(seed[:3], range(3))
    b = enumerate_closure(list(reversed(seed[:3])), range(3))
    assert a == b


def test_classical_highest_b1_squared():
    a, b = box(1, 0), box(0, 1)
    words = all_words(2, 1, 2)
    hw = classical_highest(words, 2)
    assert {w.factors: wt for w, wt in hw} == {
        (a, a): (-2, 2),
        (a, b): (0, 0),
    }


def test_classical_highest_b1_fourth_counts():
    words = all_words(2, 1, 4)
    hw = classical_highest(words, 2)
    by_weight = {}
    for _, wt in hw:
        by_weight[wt[1]] = by_weight.get(wt[1], 0) + 1
    # Lambda_1 coefficient mu_1 - mu_2 for mu = (4), (3,1), (2,2)
    assert by_weight == {4: 1, 2: 3, 0: 2}
    # dimension count: 1*5 + 3*3 + 2*1 = 2^4
    assert sum(c * (m + 1) for m, c in by_weight.items()) == 16


def test_top_word_is_highest():
    for n, l in [(2, 2), (3, 1), (3, 2)]:
        B = SymTensorCrystal(n, l)
        w = TensorWord((B.top(),) * 3)
        assert classical_highest([w], n) == [(w, w.wt)]


def test_tensor_word_json():
    w = example_word()
    js = w.to_json()
    assert js["head"] == {"n": 2, "lam": [0, 2], "del": 0}
    assert js["factors"] == [[0, 2], [1, 1], [1, 1], [1, 1], [2, 0]]
    assert TensorWord((box(1, 0),)).to_json() == {"head": None, "factors": [[1, 0]]}


def test_tensor_rejects_inner_head():
    with pytest.raises(ValueError):
        tensor(TensorWord((box(1, 0),)), TensorWord((box(1, 0),), (1, 0)))
