"""Exhaustive scans, interpolation, and the regulus demonstration."""

import itertools

import pytest

from resonance_lab.graphs import parse_graph
from resonance_lab.matroid import catalog
from resonance_lab.neighborly import CapExceeded, z_gamma
from resonance_lab.oracle import (fit_forms, regulus_check, scan_component,
                                  scan_resonance)
from resonance_lab.osalg import wedge_is_zero, z_of
from resonance_lab.rings import is_parallel, make_ring

F2 = make_ring("F2")
F3 = make_ring("F3")
F5 = make_ring("F5")

# basis of the weight space of the nonfano graph 127|3|4|5|6 over F2,
# solved by hand from the six line sums
NF_K = ((0, 1, 1, 0, 0, 1, 1), (1, 0, 0, 1, 0, 1, 1), (1, 1, 0, 0, 1, 1, 0))
NF_POLE = (0, 0, 1, 1, 1, 1, 0)


def _f2_combos(basis):
    for coef in itertools.product([0, 1], repeat=len(basis)):
        if not any(coef):
            continue
        v = [0] * len(basis[0])
        for c, b in zip(coef, basis):
            if c:
                v = [(x + y) % 2 for x, y in zip(v, b)]
        yield tuple(v)


def test_scan_nonfano_f2_full_classification():
    m = catalog("nonfano")
    rep = scan_resonance(m, F2)
    assert rep.universe == 127
    # expected set: three points per line (pairs inside the line), plus the
    # seven points of the essential component
    expected = set(_f2_combos(NF_K))
    for line in m.lines:
        for i, j in itertools.combinations(line, 2):
            v = [0] * m.n
            v[i - 1] = v[j - 1] = 1
            expected.add(tuple(v))
    assert {p.lam for p in rep.points} == expected
    assert len(rep.points) == 25
    for p in rep.points:
        assert p.dim_z == len(z_of(p.lam, m, F2))
    top = [p.lam for p in rep.points if p.dim_z >= 3]
    assert top == [NF_POLE]
    assert sum(len(pts) for _, pts in rep.groups) == 25
    assert all(any(x == 0 for x in p.lam) for p in rep.points)


def test_scan_pencil3_f3_closed_form():
    m = catalog("pencil-3")
    rep = scan_resonance(m, F3)
    assert rep.universe == 13
    assert {p.lam for p in rep.points} == {
        lam for lam in itertools.product(range(3), repeat=3)
        if any(lam) and sum(lam) % 3 == 0 and lam[next(
            i for i, x in enumerate(lam) if x)] == 1}
    assert len(rep.points) == 4
    for p in rep.points:
        assert p.dim_z == 2


def test_scan_resonance_needs_finite_ring():
    with pytest.raises(ValueError):
        scan_resonance(catalog("pencil-3"), make_ring("Q"))


def test_scan_cap_and_env(monkeypatch):
    m = catalog("nonfano")
    F4 = make_ring("F4")
    with pytest.raises(CapExceeded):
        scan_resonance(m, F4, cap=100)
    monkeypatch.setenv("RESONANCE_LAB_CAP", "100")
    with pytest.raises(CapExceeded):
        scan_resonance(m, F4)
    monkeypatch.setenv("RESONANCE_LAB_CAP", str(10 ** 9))
    assert scan_resonance(m, F2).cap == 10 ** 9


def test_scan_jobs_deterministic():
    m = catalog("nonfano")
    F4 = make_ring("F4")
    a = scan_resonance(m, F4, jobs=1).to_jsonable()
    b = scan_resonance(m, F4, jobs=7).to_jsonable()
    for rep in (a, b):
        rep.pop("seconds")
        rep.pop("jobs")
    assert a == b


def test_scan_z4_pencil_matches_rank_two_condition():
    m = catalog("pencil-3")
    Z4 = make_ring("Z4")
    rep = scan_resonance(m, Z4)
    assert rep.universe == 63

    def partner_exists(lam):
        s = sum(lam) % 4
        for eta in itertools.product(range(4), repeat=3):
            t = sum(eta) % 4
            if all((s * e) % 4 == (t * l) % 4 for l, e in zip(lam, eta)) \
                    and not is_parallel(lam, eta, Z4):
                return True
        return False

    expected = {lam for lam in itertools.product(range(4), repeat=3)
                if any(lam) and partner_exists(lam)}
    assert {p.lam for p in rep.points} == expected
    for p in rep.points:
        assert p.witness is not None
        assert wedge_is_zero(p.lam, p.witness, m, Z4)
        assert not is_parallel(p.lam, p.witness, Z4)


def test_scan_component_braid_f5():
    m = catalog("braid-K4")
    cs = scan_component(parse_graph("12|34|56", 6), m, F5)
    assert cs.dim_k == 2
    assert cs.universe == 6
    assert cs.strata == ((2, 6),)
    assert cs.depth_strata() == ((1, 6),)
    assert len(cs.carrier) == 6


def test_scan_component_olive_samansky_f2():
    m = catalog("olive-samansky")
    cs = scan_component(parse_graph("1234|5678|9α", 10), m, F2)
    assert cs.dim_k == 4
    assert cs.universe == 15
    assert cs.strata == ((1, 12), (2, 3))
    assert set(cs.carrier) == {(1, 1, 1, 1, 0, 0, 0, 0, 1, 1),
                               (0, 0, 0, 0, 1, 1, 1, 1, 1, 1),
                               (1, 1, 1, 1, 1, 1, 1, 1, 0, 0)}


def test_scan_component_hessian_f3():
    m = catalog("hessian")
    g = parse_graph("123|456|789|αβγ", 12)
    cs = scan_component(g, m, F3)
    assert cs.dim_k == 6
    assert cs.universe == 364
    assert cs.strata == ((1, 315), (2, 36), (3, 13))
    assert len(cs.carrier) == 49
    # spot check the batched dimensions against the exact solver
    for lam, d in cs.points[::7]:
        assert len(z_gamma(lam, g, m, F3)) == d


def test_fit_forms_basics():
    fit = fit_forms([(1, 0, 0)], F3, 1)
    assert fit.proj_dim == 2 and fit.dim == 2
    assert fit.monomials == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert fit_forms([(1, 0, 0)], F3, 2).dim == 5
    p2 = [v for v in itertools.product([0, 1], repeat=3)
          if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]
    assert len(p2) == 7
    assert fit_forms(p2, F2, 1).dim == 0
    assert fit_forms(p2, F2, 2).dim == 0


def test_fit_forms_errors():
    with pytest.raises(ValueError):
        fit_forms([], F3, 1)
    with pytest.raises(ValueError):
        fit_forms([(1, 0)], make_ring("Z4"), 1)


def test_regulus_counts():
    r3 = regulus_check(F3)
    assert r3.carrier_count == 16 == r3.expected
    assert r3.all_depth_one and r3.ok
    r5 = regulus_check(F5, seed=1)
    assert r5.carrier_count == 36 == r5.expected
    assert r5.all_depth_one
    assert regulus_check(F3).planes == r3.planes  # same seed, same planes
