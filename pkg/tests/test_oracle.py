import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from molpsens.efficient_set import efficient_chain
from molpsens.errors import InfeasiblePoint
from molpsens.cone import ObjectiveBundle
from molpsens.instances import random_instance
from molpsens.oracle import (
    WeightVector,
    bruteforce_efficient,
    candidate_points,
    face_vertices,
    is_dominated,
    simplex_grid,
    skeleton_grid,
)
from molpsens.polytope import wrap
from molpsens.solver import Face, argmax_face
from conftest import bundle

seeds = st.integers(0, 2**32 - 1)


def test_example5_faces(ex5, ex5_bundle):
    faces = bruteforce_efficient(ex5, ex5_bundle, 200)
    assert face_vertices(faces) == {1, 2, 3, 4, 5}
    assert {f for f in faces if f.kind == "edge"} == {Face.edge(j, 9) for j in range(1, 5)}


@pytest.mark.parametrize("d", [(1, 0), (0, 1), (1, -3), (-2, 0.5)])
def test_parallel_bundle(ex5, d):
    faces = bruteforce_efficient(ex5, bundle(d, (2 * d[0], 2 * d[1])), 37)
    assert faces == {argmax_face(ex5, d)}


def test_square(square):
    faces = bruteforce_efficient(square, bundle((1, 0), (0, 1)), 100)
    assert face_vertices(faces) == {2, 3, 4}
    assert {square.vertex(j) for j in face_vertices(faces)} == {(1, 0), (1, 1), (0, 1)}
    assert {f for f in faces if f.kind == "edge"} == {Face.edge(2, 4), Face.edge(3, 4)}


def test_dominance_examples(ex5, ex5_bundle):
    assert is_dominated(ex5, ex5_bundle, (0, 6), 100)
    assert not is_dominated(ex5, ex5_bundle, (7, 5), 100)
    with pytest.raises(InfeasiblePoint):
        is_dominated(ex5, ex5_bundle, (10, 10))


def test_positive_combination_optimum_is_efficient(ex5, ex5_bundle):
    lam = np.full(6, 1 / 6)
    d = lam @ np.asarray(ex5_bundle.gradients)
    (j,) = argmax_face(ex5, d).indices
    assert not is_dominated(ex5, ex5_bundle, ex5.vertex(j))


def test_grids():
    full = simplex_grid(3, 4)
    assert len(full) == 15 and np.allclose(full.sum(axis=1), 1)
    sk = skeleton_grid(4, 10)
    assert len(sk) == 6 and all(np.allclose(a.sum(axis=1), 1) for a in sk)
    WeightVector((0.5, 0.5))
    with pytest.raises(ValueError):
        WeightVector((0.6, 0.6))
    with pytest.raises(ValueError):
        bruteforce_efficient(None, None, 1)


def test_candidate_points_feasible(ex5):
    pts = candidate_points(ex5, 10, 16)
    assert all(ex5.contains(p, 1e-9) for p in pts)
    assert len(pts) > 9 + 90


@settings(deadline=None, max_examples=50)
@given(seeds)
def test_agreement_and_dominance(seed):
    poly, b = random_instance(np.random.default_rng(seed))
    es = efficient_chain(poly, b)
    faces = bruteforce_efficient(poly, b, 500)
    assert face_vertices(faces) == set(es.vs)
    n = poly.n
    chain_edges = {wrap(n, j) for j in es.vs[:-1]}
    for j in range(1, n + 1):
        a, c = poly.vertex(j), poly.vertex(j + 1)
        mid = (0.5 * (a[0] + c[0]), 0.5 * (a[1] + c[1]))
        assert is_dominated(poly, b, mid, samples=25) == (j not in chain_edges)
        assert is_dominated(poly, b, a, samples=25) == (j not in es.vs)


@settings(deadline=None, max_examples=30)
@given(seeds, st.integers(3, 60))
def test_grid_refinement_monotone(seed, g):
    poly, b = random_instance(np.random.default_rng(seed))
    assert bruteforce_efficient(poly, b, g) <= bruteforce_efficient(poly, b, 2 * g)


@settings(deadline=None, max_examples=30)
@given(seeds, st.randoms(use_true_random=False))
def test_order_independent(seed, rnd):
    poly, b = random_instance(np.random.default_rng(seed))
    perm = list(range(b.K))
    rnd.shuffle(perm)
    shuffled = ObjectiveBundle(tuple(b.gradients[i] for i in perm))
    assert bruteforce_efficient(poly, b, 200) == bruteforce_efficient(poly, shuffled, 200)
