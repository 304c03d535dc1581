import random

import pytest

from ccfrieze import (
    Diagonal,
    EpsilonError,
    KTheory,
    LaurentRing,
    PolygonCategory,
    default_epsilon,
    quotient_presentation,
)
from ccfrieze.ktheory import (
    Epsilon,
    SplitK0Class,
    constant_epsilon,
    epsilon_from_assignment,
)
from ccfrieze.modules import FlClass
from conftest import worked_epsilon, random_config
from golden import WORKED_R, WORKED_T, diag

D = Diagonal
P8 = PolygonCategory(8)
T = tuple(diag(WORKED_T))


@pytest.fixture(scope="module")
def kt():
    return KTheory(P8, diag(WORKED_R), T)


def k(**coords):
    """Split class from keyword coordinates like d25=1, d27=-1."""
    return SplitK0Class.from_dict(T, {D(int(n[1]), int(n[2])): v for n, v in coords.items()})


def test_theta_bar_on_simples(kt):
    assert kt.theta_bar_simple(D(2, 5)) == k(d24=1, d57=1, d27=-1)
    assert kt.theta_bar_simple(D(1, 7)) == k(d27=-1)
    assert kt.theta_bar_simple(D(5, 7)) == k(d27=1, d25=-1)
    assert str(kt.theta_bar_simple(D(2, 5))) == "[2,4]-[2,7]+[5,7]"


def test_subgroup_N(kt):
    assert sorted(kt.N, key=lambda g: g.coords) == sorted(
        [k(d27=-1), k(d25=-1), k(d27=1, d25=-1)], key=lambda g: g.coords
    )
    assert kt.Q.in_N(k(d25=1)) and kt.Q.in_N(k(d27=1))
    assert not kt.Q.in_N(k(d17=1))


def test_N_extremes():
    assert KTheory(P8, T, T).N == []
    assert len(KTheory(P8, [], T).N) == len(T)


def test_quotient(kt):
    Q = kt.Q
    assert Q.free_rank == 3
    assert Q.torsion_invariants == []
    assert Q.free_basis_representatives() == [D(1, 7), D(2, 4), D(5, 7)]
    assert quotient_presentation(T, []).free_rank == 5
    full = [SplitK0Class.unit(T, t) for t in T]
    assert quotient_presentation(T, full).free_rank == 0


def test_quotient_detects_torsion():
    basis = T[:2]
    Q = quotient_presentation(basis, [SplitK0Class(basis, (2, 0))])
    assert Q.torsion_invariants == [2] and Q.free_rank == 1


def test_kappa(kt):
    assert kt.kappa(kt.fl_T({D(2, 5): 1})) == kt.fl_R({D(2, 5): 1})
    assert kt.kappa(kt.fl_T({D(1, 7): 1})).is_zero()
    a, b = kt.fl_T({D(2, 5): 2, D(1, 7): 1}), kt.fl_T({D(2, 7): 1})
    assert kt.kappa(a + b) == kt.kappa(a) + kt.kappa(b)


def test_theta(kt):
    s25, s27 = kt.fl_R({D(2, 5): 1}), kt.fl_R({D(2, 7): 1})
    assert kt.theta(s25) == kt.Q.project(k(d24=1, d57=1))
    assert kt.theta_lift(s27) == k(d17=1, d25=1, d57=-1)
    assert kt.theta(s27) == kt.Q.project(k(d17=1, d57=-1))
    assert kt.theta(FlClass.zero(kt.R)) == kt.Q.project(SplitK0Class.zero(T))


def test_theta_independent_of_preimage(kt):
    for e in (kt.fl_R({D(2, 5): 1}), kt.fl_R({D(2, 7): 1}), kt.fl_R({D(2, 5): 2, D(2, 7): -1})):
        base = kt.Q.project(kt.theta_lift(e))
        for t in (D(1, 7), D(2, 4), D(5, 7)):
            other = kt.theta_bar(kt.kappa_preimage(e, {t: 3}))
            assert kt.Q.project(other) == base


def test_index_examples(kt):
    assert kt.index(D(4, 6)) == k(d57=-1)
    assert kt.index(D(2, 5)) == k(d25=1)
    assert kt.index(D(2, 6)) == k(d25=1, d57=-1)
    assert kt.index([]) == SplitK0Class.zero(T)
    assert kt.identity_violations() == []


def test_epsilon_examples(kt):
    eps = epsilon_from_assignment(LaurentRing(["u", "v", "z"]), kt, worked_epsilon())
    ring = eps.ring
    assert eps(kt.index(D(4, 6))) == ring.parse("z^-1")
    assert eps(kt.theta_lift(kt.fl_R({D(2, 5): 1}))) == ring.parse("v*z")
    assert eps(kt.theta_lift(kt.fl_R({D(2, 7): 1}))) == ring.parse("u/z")


def test_epsilon_must_vanish_on_N(kt):
    images = worked_epsilon()
    ring = images[D(1, 7)].ring
    images[D(2, 5)] = ring.gen("u")
    with pytest.raises(EpsilonError, match="not well defined"):
        epsilon_from_assignment(ring, kt, images)


def test_epsilon_needs_units(kt):
    images = worked_epsilon()
    ring = images[D(1, 7)].ring
    images[D(2, 4)] = ring.gen("v") + 1
    with pytest.raises(EpsilonError, match="unit"):
        Epsilon(ring, T, images)


def test_original_setup_epsilon():
    kt = KTheory(P8, T, T)
    ring = LaurentRing(["a", "b", "c", "d", "e"])
    eps = epsilon_from_assignment(ring, kt, dict(zip(T, ring.gens())))
    assert eps(SplitK0Class.unit(T, D(2, 5))) == ring.gen("c")


def test_default_epsilon(kt):
    eps = default_epsilon(kt, ["u", "v", "z"])
    assert eps.violations(kt.N) == []
    # the free representatives go to the fresh variables, the rest is forced
    assert eps.images[D(1, 7)] == eps.ring.gen("u")
    assert eps.images[D(2, 5)] == 1
    with pytest.raises(EpsilonError):
        default_epsilon(kt, ["u"])


def test_constant_epsilon_when_quotient_is_trivial():
    rng = random.Random(5)
    for m in range(5, 9):
        R, Tr = random_config(m, rng)
        kt = KTheory(PolygonCategory(m), R, Tr)
        eps = constant_epsilon(kt)
        assert all(eps(g) == 1 for g in kt.N)
    kt = KTheory(PolygonCategory(5), [], [D(2, 5), D(3, 5)])
    assert kt.Q.free_rank == 0 and kt.Q.torsion_invariants == []
    eps = default_epsilon(kt, [])
    assert eps.ring.nvars == 0
    assert all(eps(kt.index(c)) == 1 for c in kt.model.objects)


@pytest.mark.parametrize("m", range(5, 11))
def test_index_identities_and_commuting_square(m):
    rng = random.Random(300 + m)
    P = PolygonCategory(m)
    for _ in range(10):
        R, Tr = random_config(m, rng)
        kt = KTheory(P, R, Tr)
        assert kt.identity_violations() == []
        for t in kt.T:
            e = kt.fl_T({t: 1})
            assert kt.theta(kt.kappa(e)) == kt.Q.project(kt.theta_bar(e))
            # simples outside R are killed by the quotient
            if t not in kt.R:
                assert kt.Q.in_N(kt.theta_bar(e))
