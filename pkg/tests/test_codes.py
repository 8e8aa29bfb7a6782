import random
from fractions import Fraction

import pytest

from hdx import f2, gf2
from hdx.codes import (
    classical_min_distance,
    coboundary_code,
    cocycle_test,
    css_distances,
    css_from_complex,
)
from hdx.codes import testability_epsilon as eps_of
from hdx.complexes import from_top_faces
from hdx.errors import WrongDimension
from hdx.f2 import F2Cochain
from tests.conftest import random_pure_complex


def test_cocycle_test_accepts_codewords(full_2_simplex):
    X = full_2_simplex
    word = f2.coboundary(X, -1, F2Cochain(-1, 1, 1))
    rep = cocycle_test(X, 0, word, seed=3, trials=5000)
    assert rep["exact_rejection"] == 0
    assert rep["empirical_rejection"] == 0


def test_cocycle_test_exact_values(full_2_simplex):
    X = full_2_simplex
    fab = F2Cochain.from_faces(X, 1, [("a", "b")])
    rep = cocycle_test(X, 1, fab, seed=3, trials=1000)
    assert rep["exact_rejection"] == 1 and rep["empirical_rejection"] == 1
    fa = F2Cochain.from_faces(X, 0, [("a",)])
    rep0 = cocycle_test(X, 0, fa, seed=3, trials=1000)
    assert rep0["exact_rejection"] == Fraction(2, 3)


def test_cocycle_test_empirical_within_4_sigma():
    rng = random.Random(83)
    done = 0
    while done < 10:
        X = random_pure_complex(rng, n_max=6, d_max=2, weighted=True)
        i = rng.randint(0, X.d - 1)
        n = len(X.level(i))
        f = F2Cochain(i, rng.getrandbits(n), n)
        trials = 100000
        rep = cocycle_test(X, i, f, seed=rng.randrange(2**32), trials=trials)
        p = float(rep["exact_rejection"])
        sigma = (p * (1 - p) / trials) ** 0.5
        assert abs(rep["empirical_rejection"] - p) <= 4 * sigma + 1e-12
        done += 1


def test_testability_equals_expansion(full_2_simplex):
    assert eps_of(full_2_simplex, 0) == 2
    assert eps_of(full_2_simplex, 1) == 3
    for i in (0, 1):
        assert eps_of(full_2_simplex, i) == f2.coboundary_expansion(
            full_2_simplex, i
        )


def test_testability_equals_expansion_random():
    rng = random.Random(89)
    done = 0
    while done < 12:
        X = random_pure_complex(rng, n_max=5, d_max=2, weighted=True)
        for i in range(0, X.d):
            if len(X.level(i)) > 12:
                continue
            assert eps_of(X, i) == f2.coboundary_expansion(X, i)
            done += 1


def test_testability_zero_with_cohomology():
    two_triangles = from_top_faces(
        [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e"), ("d", "f"), ("e", "f")]
    )
    assert eps_of(two_triangles, 0) == 0


def test_css_requires_dimension_two(k3):
    with pytest.raises(WrongDimension):
        css_from_complex(k3)


def test_css_boundary_3_simplex(boundary_3_simplex):
    code = css_from_complex(boundary_3_simplex)
    assert code.n == 6 and code.rate == 0
    assert css_distances(code) == (None, None)
    assert code.to_json()["d_x"] is None


def test_css_full_2_simplex(full_2_simplex):
    code = css_from_complex(full_2_simplex)
    assert code.n == 3 and code.rate == 0


def test_css_torus_frozen(torus):
    code = css_from_complex(torus)
    assert code.n == 21
    assert len(code.hx) == 7 and len(code.hz) == 14
    assert code.rate == 2
    # orthogonality H_X H_Z^T = 0
    for a in code.hx:
        for b in code.hz:
            assert gf2.parity(a & b) == 0
    # regression constants fixed by the exhaustive coset search
    assert css_distances(code) == (3, 6)


def test_css_rate_equals_dim_h1(torus, boundary_3_simplex):
    for X in (torus, boundary_3_simplex):
        code = css_from_complex(X)
        assert code.rate == f2.spaces(X).dim_h(1)


def test_css_rate_random():
    rng = random.Random(97)
    done = 0
    while done < 10:
        X = random_pure_complex(rng, n_max=7, d_max=2)
        if X.d != 2:
            continue
        code = css_from_complex(X)
        assert code.rate == f2.spaces(X).dim_h(1)
        for a in code.hx:
            for b in code.hz:
                assert gf2.parity(a & b) == 0
        done += 1


def test_css_dz_matches_light_cocycle(torus):
    # d_z searches ker H_Z = Z^1 modulo B^1: the lightest nontrivial cocycle
    code = css_from_complex(torus)
    css_distances(code)
    _, cs = f2.cosystolic_expansion(torus, 1)
    assert Fraction(code.d_z, 21) == cs


def test_cycle_graph_classical_distance():
    for n in (3, 4, 5, 6, 7):
        edges = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
        Cn = from_top_faces(edges)
        hx = f2.delta_cols(Cn, 0)
        assert classical_min_distance(hx, n) == n


def test_export_checks(torus):
    code = css_from_complex(torus)
    hx, hz = code.export_checks()
    lines = hx.strip().splitlines()
    assert len(lines) == sum(r.bit_count() for r in code.hx)
    r, c = map(int, lines[0].split())
    assert code.hx[r] >> c & 1


def test_coboundary_code_orthogonal(full_2_simplex):
    code = coboundary_code(full_2_simplex, 0)
    assert code.length == 3 and code.dimension == 1
    for g in code.generators:
        for h in code.checks:
            assert gf2.parity(g & h) == 0
