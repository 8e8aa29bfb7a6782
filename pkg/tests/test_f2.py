import random
from fractions import Fraction
from itertools import combinations

import pytest

from hdx import gf2
from hdx.complexes import from_top_faces, link, restrict_domain
from hdx.errors import TooLarge
from hdx.f2 import (
    INF,
    F2Cochain,
    coboundary,
    coboundary_expansion,
    cosystolic_expansion,
    distance_to_space,
    is_locally_minimal,
    is_minimal,
    norm,
    small_set_expansion_check,
    space_basis,
    spaces,
)
from hdx.spectral import cheeger, graph_from_complex
from tests.conftest import random_pure_complex


def test_coboundary_examples(full_2_simplex):
    X = full_2_simplex
    fa = F2Cochain.from_faces(X, 0, [("a",)])
    d = coboundary(X, 0, fa)
    assert d.support(X) == [("a", "b"), ("a", "c")]
    aug = coboundary(X, -1, F2Cochain(-1, 1, 1))
    assert aug.bits == (1 << 3) - 1


def test_delta_delta_zero_random():
    rng = random.Random(41)
    checked = 0
    while checked < 1000:
        X = random_pure_complex(rng, n_max=7, d_max=3)
        for _ in range(10):
            i = rng.randint(-1, X.d - 2) if X.d >= 1 else -1
            if i + 1 > X.d - 1:
                continue
            n = len(X.level(i))
            f = F2Cochain(i, rng.getrandbits(n), n)
            assert coboundary(X, i + 1, coboundary(X, i, f)).bits == 0
            checked += 1


def test_spaces_boundary_3_simplex(boundary_3_simplex):
    sp = spaces(boundary_3_simplex)
    assert [s.dim_h for s in sp.levels] == [0, 0, 0, 1]
    assert sp.dim_h(2) == 1


def test_spaces_torus(torus):
    sp = spaces(torus)
    assert sp.dim_h(0) == 0
    assert sp.dim_h(1) == 2
    assert sp.dim_h(2) == 1


def test_spaces_full_simplex(full_2_simplex):
    sp = spaces(full_2_simplex)
    assert all(s.dim_h == 0 for s in sp.levels)
    assert all(s.f2_connected for s in sp.levels)


def test_b_inside_z_and_delta_squared_as_matrices():
    rng = random.Random(43)
    for _ in range(10):
        X = random_pure_complex(rng, n_max=7, d_max=3)
        for i in range(-1, X.d + 1):
            zb = space_basis(X, i, "Z")
            reduced, pivots = gf2.rref(zb)
            for b in space_basis(X, i, "B"):
                assert gf2.reduce_vector(b, reduced, pivots) == 0


def test_norm_and_distance(full_2_simplex):
    X = full_2_simplex
    fab = F2Cochain.from_faces(X, 1, [("a", "b")])
    assert norm(X, fab) == Fraction(1, 3)
    assert distance_to_space(X, fab, "B") == Fraction(1, 3)
    zero = F2Cochain.zero(X, 1)
    assert norm(X, zero) == 0 and distance_to_space(X, zero, "B") == 0
    ones = F2Cochain.ones(X, 0)
    assert distance_to_space(X, ones, "B") == 0


def test_distance_routes_agree():
    # subspace scan vs syndrome-table lookup
    from hdx.f2 import _coset_table, _syndrome, _syndrome_cols

    rng = random.Random(47)
    for _ in range(10):
        X = random_pure_complex(rng, n_max=6, d_max=2)
        for i in range(0, X.d + 1):
            n = len(X.level(i))
            f = F2Cochain(i, rng.getrandbits(n), n)
            via_span = distance_to_space(X, f, "B", cap_bits=24)
            minwt, _, denom, _ = _coset_table(X, i, "B", 24)
            via_table = Fraction(
                minwt[_syndrome(f.bits, _syndrome_cols(X, i, "B"))], denom
            )
            assert via_span == via_table


def test_coboundary_expansion_full_2_simplex(full_2_simplex):
    assert coboundary_expansion(full_2_simplex, 0) == 2
    assert coboundary_expansion(full_2_simplex, 1) == 3


def test_h0_equals_cheeger_exactly():
    rng = random.Random(53)
    for _ in range(15):
        X = random_pure_complex(rng, n_max=8, d_max=1, weighted=True)
        assert coboundary_expansion(X, 0) == cheeger(graph_from_complex(X))


def test_h_zero_iff_cohomology():
    rng = random.Random(59)
    for _ in range(15):
        X = random_pure_complex(rng, n_max=6, d_max=2)
        sp = spaces(X)
        for i in range(0, X.d):
            h = coboundary_expansion(X, i)
            if sp.dim_h(i) == 0:
                assert h == INF or h > 0
            else:
                assert h == 0


def test_expansion_cap():
    X = from_top_faces(list(combinations(range(9), 3)))
    with pytest.raises(TooLarge):
        coboundary_expansion(X, 1, cap_bits=20)


def test_cosystolic_boundary_3_simplex(boundary_3_simplex):
    ht, cs = cosystolic_expansion(boundary_3_simplex, 1)
    assert cs == INF  # Z^1 = B^1
    assert ht > 0


def test_cosystolic_torus_frozen(torus):
    # regression constants fixed by the exhaustive oracle run
    ht, cs = cosystolic_expansion(torus, 1)
    assert cs == Fraction(2, 7)
    assert ht == 1


def test_cosystolic_top_level(full_2_simplex):
    ht, cs = cosystolic_expansion(full_2_simplex, 2)
    assert ht is None  # no coboundary out of the top level
    assert cs == INF  # H^2 = 0


def test_minimality_examples(full_2_simplex, k3):
    X = full_2_simplex
    assert is_minimal(X, F2Cochain.zero(X, 1))
    assert is_locally_minimal(X, F2Cochain.zero(X, 1))
    ones = F2Cochain.ones(k3, 0)
    assert not is_minimal(k3, ones)
    fab = F2Cochain.from_faces(X, 1, [("a", "b")])
    assert is_minimal(X, fab) and is_locally_minimal(X, fab)


@pytest.mark.parametrize("fixture", ["full_2_simplex", "boundary_3_simplex"])
def test_minimal_implies_locally_minimal(fixture, request):
    X = request.getfixturevalue(fixture)
    for k in range(1, X.d + 1):
        n = len(X.level(k))
        for bits in range(1 << n):
            f = F2Cochain(k, bits, n)
            if is_minimal(X, f):
                assert is_locally_minimal(X, f), (k, bits)


def test_locally_minimal_not_always_minimal(torus):
    # the reverse implication fails somewhere on the torus at level 1
    n = len(torus.level(1))
    rng = random.Random(61)
    found = False
    for _ in range(4000):
        f = F2Cochain(1, rng.getrandbits(n), n)
        if is_locally_minimal(torus, f) and not is_minimal(torus, f):
            found = True
            break
    assert found


def _brute_small_set(X, eps, mu):
    # literal scan over nonzero globally minimal cochains with ||f|| <= mu
    for k in range(0, X.d):
        n = len(X.level(k))
        for bits in range(1, 1 << n):
            f = F2Cochain(k, bits, n)
            nf = norm(X, f)
            if nf > mu or distance_to_space(X, f, "B") != nf:
                continue
            if norm(X, coboundary(X, k, f)) <= eps * nf:
                return False
    return True


def test_small_set_examples(full_2_simplex):
    assert small_set_expansion_check(full_2_simplex, Fraction(1), Fraction(1))["ok"]
    assert small_set_expansion_check(full_2_simplex, Fraction(5), Fraction(0))["ok"]
    two_triangles = from_top_faces(
        [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e"), ("d", "f"), ("e", "f")]
    )
    rep = small_set_expansion_check(two_triangles, Fraction(1, 10), Fraction(1, 2))
    assert not rep["ok"]
    assert rep["worst"]["delta_norm"] == 0  # a cocycle of positive norm
    assert rep["worst"]["norm"] == Fraction(1, 2)


def test_small_set_matches_brute_force():
    rng = random.Random(67)
    grid = [Fraction(1, 10), Fraction(1, 2), Fraction(1), Fraction(2)]
    for _ in range(8):
        X = random_pure_complex(rng, n_max=5, d_max=2, weighted=True)
        for eps in grid:
            for mu in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
                got = small_set_expansion_check(X, eps, mu)["ok"]
                assert got == _brute_small_set(X, eps, mu), (eps, mu)


def test_restriction_commutes_with_coboundary():
    # domain restriction commutes; the union shift deliberately does not
    rng = random.Random(71)
    for _ in range(10):
        X = random_pure_complex(rng, n_max=7, d_max=3)
        if X.d < 2:
            continue
        sigma = rng.choice(X.level(0))
        L = link(X, sigma)
        for k in range(0, L.d):
            n = len(X.level(k))
            f = F2Cochain(k, rng.getrandbits(n), n)
            lhs = restrict_domain(X, coboundary(X, k, f), sigma)
            rhs = coboundary(L, k, restrict_domain(X, f, sigma))
            assert lhs.bits == rhs.bits


def test_euler_characteristic_consistency():
    rng = random.Random(73)
    for _ in range(10):
        X = random_pure_complex(rng, n_max=7, d_max=3)
        sp = spaces(X)
        chi_c = sum((-1) ** s.i * s.dim_c for s in sp.levels)
        chi_h = sum((-1) ** s.i * s.dim_h for s in sp.levels)
        assert chi_c == chi_h


def test_delta_squared_zero_as_matrices():
    rng = random.Random(79)
    for _ in range(8):
        X = random_pure_complex(rng, n_max=7, d_max=3)
        for i in range(-1, X.d - 1):
            from hdx.f2 import delta_rows

            prod = gf2.matmul(
                delta_rows(X, i + 1), delta_rows(X, i), len(X.level(i))
            )
            assert all(r == 0 for r in prod)


def test_torus_expansion_profile_frozen(torus):
    # whole-profile regression, fixed by the exhaustive oracle run
    assert coboundary_expansion(torus, 0) == Fraction(4, 3)
    assert coboundary_expansion(torus, 0) == cheeger(graph_from_complex(torus))
    assert coboundary_expansion(torus, 1) == 0  # H^1 != 0
    ht0, cs0 = cosystolic_expansion(torus, 0)
    assert ht0 == Fraction(4, 3) and cs0 == INF
    ht2, cs2 = cosystolic_expansion(torus, 2)
    assert ht2 is None and cs2 == Fraction(1, 14)
