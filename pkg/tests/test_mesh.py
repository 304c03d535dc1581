import csv
import io
import itertools
import random

import pytest

from ccfrieze import Diagonal, mesh_category
from ccfrieze.mesh import hom_dim_by_crossing, left_kernel

D = Diagonal


def scalar(mc, x, y, z):
    try:
        return mc.compose(x, y, z)
    except ValueError:
        return 0


def test_hom_dim_examples():
    mc = mesh_category(8)
    assert mc.hom_dim(D(1, 7), D(2, 7)) == 1
    assert mc.hom_dim(D(2, 6), D(2, 5)) == 0
    for x in mc.model.objects:
        assert mc.hom_dim(x, x) == 1


@pytest.mark.parametrize("m", range(4, 11))
def test_knitting_agrees_with_crossing_rule(m):
    mc = mesh_category(m)
    for x in mc.model.objects:
        for y in mc.model.objects:
            assert mc.hom_dim(x, y) == hom_dim_by_crossing(mc.model, x, y), (x, y)


def test_composite_examples():
    mc = mesh_category(8)
    assert mc.composite_nonzero(D(1, 6), D(1, 7), D(2, 7))
    assert mc.composite_nonzero(D(1, 6), D(2, 6), D(2, 7))
    # the two routes around the mesh cancel
    assert mc.compose(D(1, 6), D(1, 7), D(2, 7)) == -mc.compose(D(1, 6), D(2, 6), D(2, 7))
    assert mc.hom_dim(D(1, 7), D(2, 8)) == 0
    assert not mc.composite_nonzero(D(1, 7), D(2, 7), D(2, 8))
    with pytest.raises(ValueError):
        mc.compose(D(2, 6), D(2, 5), D(2, 7))
    assert mc.composite_nonzero(D(2, 5), D(2, 7), D(2, 7))


def test_identity_laws():
    mc = mesh_category(8)
    for x, y in itertools.product(mc.model.objects, repeat=2):
        if mc.hom_dim(x, y):
            assert mc.compose(x, x, y) == 1
            assert mc.compose(x, y, y) == 1


@pytest.mark.parametrize("m", [6, 7, 8, 9])
def test_composition_is_associative(m):
    mc = mesh_category(m)
    rng = random.Random(m)
    objs = mc.model.objects
    checked = 0
    for _ in range(4000):
        w, x, y, z = (rng.choice(objs) for _ in range(4))
        if not (mc.hom_dim(w, x) and mc.hom_dim(x, y) and mc.hom_dim(y, z)):
            continue
        left = scalar(mc, w, x, y) * scalar(mc, w, y, z)
        right = scalar(mc, x, y, z) * scalar(mc, w, x, z)
        assert left == right, (w, x, y, z)
        checked += 1
    assert checked > 50


def test_basis_paths_follow_arrows():
    mc = mesh_category(9)
    arrows = set(mc.model.arrows())
    for x, y in itertools.product(mc.model.objects, repeat=2):
        path = mc.basis_path(x, y)
        if mc.hom_dim(x, y) == 0:
            assert path is None
            continue
        assert path[0] == x and path[-1] == y
        assert all(step in arrows for step in zip(path, path[1:]))
        assert len(path) - 1 == mc.hom_degree(x, y)


def test_hom_matrix_csv_shape():
    mc = mesh_category(6)
    rows = list(csv.reader(io.StringIO(mc.hom_matrix_csv())))
    assert len(rows) == 1 + len(mc.model.objects)
    assert rows[0][1] == "{1,3}"
    assert all(rows[k][k] == "1" for k in range(1, len(rows)))


def test_left_kernel():
    from fractions import Fraction as F

    A = [[F(1), F(2)], [F(2), F(4)], [F(0), F(1)]]
    K = left_kernel(3, 2, A)
    assert len(K) == 1
    p = K[0]
    assert all(sum(p[r] * A[r][c] for r in range(3)) == 0 for c in range(2))
