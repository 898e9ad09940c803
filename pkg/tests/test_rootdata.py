import random
from fractions import Fraction

import pytest

from symplactic import (
    AffineRoot,
    Coweight,
    coroot,
    is_dominant,
    mv_dimension,
    pairing,
    reflect,
    root_system,
    simple_root,
)
from symplactic.rootdata import alpha_coefficients, pairing2, simple_coroot_coefficients

from helpers import dot_halves


def test_positive_root_count():
    for n in range(1, 7):
        rs = root_system(n)
        assert len(rs.positive_roots) == n * n
        assert len(set(rs.positive_roots)) == n * n


def test_simple_roots_and_rho():
    rs = root_system(3)
    assert rs.simple_roots == ((1, -1, 0), (0, 1, -1), (0, 0, 1))
    assert rs.rho.halves() == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    # rho is half the sum of the positive roots
    total = [sum(alpha[k] for alpha in rs.positive_roots) for k in range(3)]
    assert tuple(total) == rs.rho.doubled


def test_pairing_examples():
    assert pairing((1, 1), Coweight.integral((1, 1))) == 2
    assert pairing((0, 1), Coweight((1, 1))) == Fraction(1, 2)
    assert pairing((1, -1), Coweight.zero(2)) == 0
    with pytest.raises(ValueError):
        pairing((1, 0, 0), Coweight.zero(2))


def test_coroot_examples():
    assert coroot((1, -1), 2) == Coweight.integral((1, -1))
    assert coroot((0, 1), 2) == Coweight.integral((0, 2))
    assert coroot((1, 1), 2) == Coweight.integral((1, 1))
    with pytest.raises(ValueError):
        coroot((2, 0), 2)


def test_reflect_examples():
    assert reflect(Coweight.zero(2), AffineRoot((1, -1), -1)) == Coweight.integral((-1, 1))
    on_wall = Coweight((1, 1))  # halves (1/2, 1/2), pairing with eps1+eps2 is 1
    assert reflect(on_wall, AffineRoot((1, 1), 1)) == on_wall


def test_reflect_involution():
    rng = random.Random(7)
    rs = root_system(3)
    for _ in range(50):
        v = Coweight(tuple(rng.randrange(-6, 7) for _ in range(3)))
        wall = AffineRoot(rng.choice(rs.positive_roots), rng.randrange(-2, 3))
        assert reflect(reflect(v, wall), wall) == v


def test_reflect_is_isometry_of_the_arrangement():
    # The linear part of any wall reflection permutes the roots up to sign,
    # so pairing distances between two points are preserved as a multiset.
    rng = random.Random(11)
    rs = root_system(3)
    for _ in range(20):
        x = Coweight.integral(tuple(rng.randrange(-4, 5) for _ in range(3)))
        y = Coweight.integral(tuple(rng.randrange(-4, 5) for _ in range(3)))
        wall = AffineRoot(rng.choice(rs.positive_roots), rng.randrange(-2, 3))
        sx, sy = reflect(x, wall), reflect(y, wall)
        before = sorted(abs(pairing2(a, x) - pairing2(a, y)) for a in rs.positive_roots)
        after = sorted(abs(pairing2(a, sx) - pairing2(a, sy)) for a in rs.positive_roots)
        assert before == after


def test_dominance_examples():
    assert is_dominant(Coweight.integral((2, 1)))
    assert is_dominant(Coweight.zero(2))
    assert not is_dominant(Coweight.integral((-1, 1)))


def test_dominant_pairs_nonnegatively_with_positive_roots():
    rng = random.Random(3)
    for n in (2, 3):
        rs = root_system(n)
        for _ in range(40):
            halves = sorted((rng.randrange(0, 9) for _ in range(n)), reverse=True)
            v = Coweight(tuple(halves))
            assert all(pairing2(a, v) >= 0 for a in rs.positive_roots)


def test_mv_dimension_examples():
    zero = Coweight.zero(2)
    assert mv_dimension(zero, zero) == 0
    w1 = Coweight.integral((1, 0))
    w2 = Coweight.integral((1, 1))
    assert mv_dimension(w1, w1) == 3
    assert mv_dimension(w2, w2) == 4


def test_mv_dimension_preconditions():
    with pytest.raises(ValueError):
        mv_dimension(Coweight.integral((-1, 0)), Coweight.zero(2))
    with pytest.raises(ValueError):
        # lam + mu has odd coordinate sum: not in the coroot lattice
        mv_dimension(Coweight.integral((1, 0)), Coweight.zero(2))
    with pytest.raises(ValueError):
        # lam + mu = (-1, 3) needs a negative coefficient
        mv_dimension(Coweight.integral((1, 1)), Coweight.integral((-2, 2)))


def test_rho_pairing_counts_coroot_coefficients():
    rng = random.Random(19)
    for n in (2, 3):
        rs = root_system(n)
        coroots = [coroot(a, n) for a in rs.simple_roots]
        for _ in range(30):
            coeffs = [rng.randrange(0, 5) for _ in range(n)]
            v = Coweight.zero(n)
            for c, co in zip(coeffs, coroots):
                for _ in range(c):
                    v = v + co
            assert simple_coroot_coefficients(v) == tuple(coeffs)
            assert dot_halves(rs.rho, v) == sum(coeffs)
            assert mv_dimension(v, Coweight.zero(n)) == sum(coeffs) if is_dominant(v) else True


def test_alpha_basis_helper():
    # eps1 + eps2 = alpha_1 + 2 alpha_2 in rank 2
    assert alpha_coefficients((1, 1), 2) == (1, 2)
    assert alpha_coefficients(simple_root(2, 2), 2) == (0, 1)
