import itertools
import random

import pytest

from semideg.banddeg import lz_degree
from semideg.nildeg import (
    ZetaSystem,
    canonical_system,
    construct_NVWz,
    construct_NWz,
    count_F,
    count_G,
    is_null_semigroup,
    is_three_nilpotent,
    kappa,
    nilpotent_witness,
    null_degree,
    null_witness,
    nu,
    nu_r,
)
from semideg.numerics import alpha, xi
from semideg.transform import Transformation, compose, constant


def random_system(rng, n, with_v=False):
    sizes, left = [], n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    ws = [rng.randint(1, s) for s in sizes]
    vs = [rng.randint(1, w) for w in ws] if with_v else None
    return canonical_system(sizes, ws, vs)


def test_zeta_system_validation():
    z = constant(4, 1)
    with pytest.raises(ValueError):
        ZetaSystem(Transformation([2, 1, 3, 4]), {1: {1}})
    with pytest.raises(ValueError):
        ZetaSystem(z, {1: {2, 3}})
    with pytest.raises(ValueError):
        ZetaSystem(z, {1: {1, 2}}, {1: {1, 3}})


def test_NWz_examples():
    z = constant(4, 1)
    assert construct_NWz(ZetaSystem(z, {1: {1}})) == [z]
    S = construct_NWz(ZetaSystem(z, {1: {1, 2}}))
    assert len(S) == 4 and is_null_semigroup(S)
    assert all(compose(f, g) == z for f in S for g in S)
    # an alpha(5)-sized W reaches xi(5)
    assert alpha(5) == 3
    assert len(construct_NWz(ZetaSystem(constant(5, 1), {1: {1, 2}}))) == 8
    assert len(construct_NWz(ZetaSystem(constant(5, 1), {1: {1, 2, 3}}))) == 9 == xi(5)


def test_NWz_size_and_null_law_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 8)
        sys = random_system(rng, n)
        S = construct_NWz(sys)
        assert len(S) == len(set(S)) == sys.size()
        if n <= 6:
            assert is_null_semigroup(S)
            assert all(compose(f, g) == sys.zeta for f in S for g in S)


def test_NVWz():
    S = construct_NVWz(canonical_system([5], [3], [2]))
    assert len(S) == 18 == kappa(5)[0]
    assert is_three_nilpotent(S)
    assert len(construct_NVWz(canonical_system([4], [3], [2]))) == 6 == kappa(4)[0]
    sys = canonical_system([3, 2], [2, 1], [2, 1])
    assert construct_NVWz(sys) == construct_NWz(canonical_system([3, 2], [2, 1]))
    with pytest.raises(ValueError):
        construct_NVWz(canonical_system([3], [2]))


def test_NVWz_random_strict_chains():
    rng = random.Random(11)
    checked = 0
    while checked < 30:
        sys = random_system(rng, rng.randint(4, 6), with_v=True)
        S = construct_NVWz(sys)
        assert len(S) == sys.size()
        strict = any(
            len(sys.V[z]) > 1 and len(sys.W[z]) > len(sys.V[z]) and len(Z) > len(sys.W[z])
            for z, Z in sys.blocks().items()
        )
        if strict:
            assert is_three_nilpotent(S)
            checked += 1


def test_null_witness():
    assert len(null_witness(5)) == 9
    assert len(null_witness(2)) == 1
    S = null_witness(10)
    assert len(S) == 4096
    rng = random.Random(3)
    z = S[0] * S[0]
    for _ in range(2000):
        assert rng.choice(S) * rng.choice(S) == z


def test_nilpotent_witness():
    for n in range(4, 8):
        S = nilpotent_witness(n)
        assert len(S) == kappa(n)[0] and is_three_nilpotent(S)


def test_nu():
    assert nu_r(4, 2) == 2
    assert nu_r(110, 105) == 27
    for n in range(2, 15):
        chain = [nu_r(n, r) for r in range(1, n + 1)]
        assert chain[0] == nu(n) == xi(n)
        assert all(a > b for a, b in zip(chain[:-2], chain[1:-1]))
        assert chain[-2] == chain[-1] == 1
    with pytest.raises(ValueError):
        nu_r(3, 4)


def test_null_degree():
    assert null_degree(4) == 4
    assert null_degree(1) == 1
    assert null_degree(5) == 5
    for p in range(1, 2000):
        assert null_degree(p) == lz_degree(p)


def test_kappa():
    assert kappa(5) == (18, 3, 2)
    assert kappa(10) == (34992, 6, 3)
    assert kappa(40) == (10159549097653043200000000000000000000, 20, 7)
    with pytest.raises(ValueError):
        kappa(3)


def test_kappa_value_brute_force():
    for n in range(4, 21):
        best = max(t ** (n - t) * u ** (t - u) for t in range(1, n + 1) for u in range(1, t + 1))
        v, t, u = kappa(n)
        assert v == best == t ** (n - t) * u ** (t - u)
        assert u == alpha(t)


def test_count_F():
    assert count_F(0)[0] == 1
    assert count_F(5) == (451, 70)
    assert count_F(10) == (24943171, 5100)


def test_count_G():
    G, G1, H, H1 = count_G(5)
    assert (G, G1) == (300, 180)
    assert count_G(10)[:2] == (54149820, 181500)
    assert count_G(0)[0] == 0 and count_G(0)[2] == 1
    assert count_G(3)[2] == 13 == count_F(3)[0]


def test_incomparable_null_envelopes():
    for n in (4, 5):
        z = constant(n, 1)
        Ws = [frozenset({1}) | frozenset(c) for k in range(0, n) for c in itertools.combinations(range(2, n + 1), k)]
        sets = {W: set(construct_NWz(ZetaSystem(z, {1: W}))) for W in Ws}
        for W1, W2 in itertools.permutations(Ws, 2):
            # W = {1} and W = {1..n} both give only {zeta}, inside every other envelope
            if len(W1) in (1, n) or len(W2) in (1, n):
                continue
            assert not sets[W1] <= sets[W2]
