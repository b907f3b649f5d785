"""Subspace arithmetic, directrix arrangements, depth, line complexes."""

import pytest

from resonance_lab.graphs import parse_graph
from resonance_lab.linegeom import (complex_contains, depth, directrices,
                                    join, join_sub, meet, plucker_line, span)
from resonance_lab.matroid import catalog
from resonance_lab.rings import make_ring

Q = make_ring("Q")
F2 = make_ring("F2")
F3 = make_ring("F3")
F5 = make_ring("F5")


def unit(ring, n, i):
    return tuple(ring.one if j == i else ring.zero for j in range(n))


def test_span_meet_join_dims():
    e = [unit(F5, 4, i) for i in range(4)]
    D = span(F5, [e[0], e[1]], 4)
    E = span(F5, [e[1], e[2]], 4)
    assert D.dim == 2 and E.dim == 2
    M = meet(D, E)
    assert M.dim == 1 and M.contains(e[1])
    J = join_sub(D, E)
    assert J.dim == 3 and not J.contains(e[3])
    assert join(e[3], D).dim == 3
    # span dedups dependent input
    assert span(F5, [e[0], e[0], (2, 0, 0, 0)], 4).dim == 1


def test_span_canonical_form():
    a = span(Q, [(2, 2, 0, 0, -2, -2), (1, 1, 1, 1, -2, -2)], 6)
    b = span(Q, [(1, 1, 0, 0, -1, -1), (0, 0, 1, 1, -1, -1)], 6)
    assert a == b


def test_subspace_coordinates_round_trip():
    D = span(F3, [(1, 2, 0), (0, 0, 1)], 3)
    v = (2, 1, 1)
    c = D.coordinates_of(v)
    rebuilt = [F3.zero] * 3
    for ci, bvec in zip(c, D.basis):
        rebuilt = [F3.add(x, F3.mul(ci, y)) for x, y in zip(rebuilt, bvec)]
    assert tuple(rebuilt) == v
    with pytest.raises(ValueError):
        D.coordinates_of((0, 1, 0))


def test_meet_ambient_mismatch():
    with pytest.raises(ValueError):
        meet(span(F3, [(1, 0)], 2), span(F3, [(1, 0, 0)], 3))
    with pytest.raises(ValueError):
        join_sub(span(F3, [(1, 0)], 2), span(F5, [(1, 0)], 2))


def test_span_rejects_nonfield():
    with pytest.raises(ValueError):
        span(make_ring("Z4"), [(1, 0)], 2)


BRAID_K = ((1, 1, 0, 0, -1, -1), (0, 0, 1, 1, -1, -1))


def test_directrices_braid_three_poles():
    m = catalog("braid-K4")
    g = parse_graph("12|34|56", 6)
    arr = directrices(g, m, Q)
    assert arr.k == span(Q, BRAID_K, 6)
    assert len(arr.members) == 3
    assert all(d.is_pole for d in arr.members)
    spaces = {d.space for d in arr.members}
    assert spaces == {span(Q, [v], 6)
                      for v in [(0, 0, 1, 1, -1, -1),
                                (1, 1, 0, 0, -1, -1),
                                (1, 1, -1, -1, 0, 0)]}
    # a codim-one member cannot cut a line down, so none is proper
    assert arr.proper_part == ()


def test_depth_braid_everywhere_one():
    m = catalog("braid-K4")
    arr = directrices(parse_graph("12|34|56", 6), m, Q)
    for xi in [BRAID_K[0], BRAID_K[1],
               tuple(a + b for a, b in zip(*BRAID_K))]:
        assert arr.depth(xi) == 1
        assert arr.carrier_contains(xi)


NF_POLE = (0, 0, 1, 1, 1, 1, 0)


def test_directrices_nonfano_f2():
    m = catalog("nonfano")
    g = parse_graph("127|3|4|5|6", 7)
    arr = directrices(g, m, F2)
    assert arr.k.dim == 3
    assert arr.k.contains(NF_POLE)
    assert len(arr.members) == 5
    poles = arr.poles
    assert len(poles) == 1
    assert poles[0].space == span(F2, [NF_POLE], 7)
    assert poles[0].blocks == ((1, 2, 7),)
    assert all(d.dim == 2 for d in arr.members if not d.is_pole)
    assert arr.proper_part == poles


def test_depth_skips_members_through_the_point():
    # the pole lies on its own directrix, which therefore imposes nothing,
    # and every codim-one member joins back to all of K: depth is the full
    # projective dimension of K
    m = catalog("nonfano")
    arr = directrices(parse_graph("127|3|4|5|6", 7), m, F2)
    assert arr.depth(NF_POLE) == 2
    # every other projective point of K sees the pole as a proper factor
    others = [v for v in _proj_points_f2(arr.k.basis) if v != NF_POLE]
    assert len(others) == 6
    for v in others:
        assert arr.depth(v) == 1


def _proj_points_f2(basis):
    pts = set()
    for mask in range(1, 2 ** len(basis)):
        v = [0] * len(basis[0])
        for i, b in enumerate(basis):
            if mask >> i & 1:
                v = [(x + y) % 2 for x, y in zip(v, b)]
        pts.add(tuple(v))
    return sorted(pts)


def test_depth_requires_context():
    with pytest.raises(ValueError):
        depth((1, 0), [])
    D = span(F3, [(1, 0), (0, 1)], 2)
    with pytest.raises(ValueError):
        depth((0, 0), [D])
    # no effective factor: ambient projective dimension
    assert depth((1, 0), [], within=D) == 1
    assert depth((1, 0), [D]) == 1


def test_directrices_need_projective_room():
    # over the rationals the nonfano line sums have a one dimensional
    # kernel, too small for any line geometry
    m = catalog("nonfano")
    with pytest.raises(ValueError):
        directrices(parse_graph("1|2|3|4|5|6|7", 7), m, Q)


def test_plucker_line_canonical():
    xi, nu = (1, 0, 0, 0), (0, 1, 0, 0)
    L = plucker_line(xi, nu, F3)
    assert L.plucker == (1, 0, 0, 0, 0, 0)
    # the Pluecker vector only sees the line, not the spanning pair
    M = plucker_line((2, 0, 0, 0), (2, 1, 0, 0), F3)
    assert M.plucker == L.plucker
    with pytest.raises(ValueError):
        plucker_line((1, 2, 0, 0), (2, 4, 0, 0), F3)


def test_complex_contains():
    L = plucker_line((1, 0, 0, 0), (0, 1, 0, 0), F3)
    assert complex_contains(L, span(F3, [(0, 1, 0, 0)], 4))
    assert complex_contains(L, span(F3, [(1, 2, 0, 0)], 4))
    assert not complex_contains(L, span(F3, [(0, 0, 1, 0)], 4))
    assert not complex_contains(L, span(F3, [(0, 1, 1, 0)], 4))
    assert complex_contains(L, span(F3, [(0, 1, 1, 0), (0, 0, 1, 0)], 4))
